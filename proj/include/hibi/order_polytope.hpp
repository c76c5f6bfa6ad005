#pragma once

/// The order polytope of the opposite poset, presented both ways: vertices
/// are characteristic vectors of order ideals, facets are indexed by the
/// covering relations of the augmented poset. A vertex lies on exactly the
/// facets whose covering edge has both endpoints or neither endpoint in the
/// ideal (bottom counting as inside, top as outside).

#include <cstddef>
#include <vector>

#include "hibi/ideal_lattice.hpp"
#include "hibi/numeric.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Facet inequality <normal, x> >= -offset.
struct Facet {
    CoveringEdge edge;
    std::vector<int> normal;  // entries in {-1, 0, 1}
    int offset;               // 1 for bottom edges, 0 otherwise

    bool operator==(const Facet&) const = default;
};

/// Normal vector of the facet attached to one covering edge: e_p for edges
/// into top, -e_q for edges out of bottom, e_p - e_q for interior edges.
std::vector<int> facet_normal(const CoveringEdge& e, int n);
int facet_offset(const CoveringEdge& e);

class OrderPolytope {
public:
    int dimension() const { return dim_; }
    /// Characteristic vectors of ideals, canonical ideal order.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    /// One facet per covering edge of the augmented poset, canonical order.
    const std::vector<Facet>& facets() const { return facets_; }

private:
    friend OrderPolytope order_polytope(const Poset&, std::size_t);
    OrderPolytope() = default;

    int dim_ = 0;
    std::vector<std::vector<int>> vertices_;
    std::vector<Facet> facets_;
};

OrderPolytope order_polytope(const Poset& p, std::size_t cap = kDefaultCap);

/// Exact membership test; throws DimensionMismatch.
bool contains(const OrderPolytope& poly, const std::vector<Rational>& x);

/// Covering edges whose facet passes through the vertex of the given ideal.
/// Throws NotAnIdeal.
std::vector<CoveringEdge> incident_facets(const AugmentedPoset& p, const OrderIdeal& ideal);
std::vector<CoveringEdge> incident_facets(const Poset& p, const OrderIdeal& ideal);

/// Lattice points of the polytope (candidates are the 2^n 0/1 vectors, so
/// throws CapExceeded when 2^n exceeds cap). Coincides with the vertex set.
std::vector<std::vector<int>> integral_points(const OrderPolytope& poly,
                                              std::size_t cap = kDefaultCap);

}  // namespace hibi
