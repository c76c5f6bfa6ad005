#pragma once

/// Torus-invariant divisors on the projective Hibi variety of a poset.
/// Prime divisors correspond to covering edges of the augmented poset, and
/// principal divisors are the image of phi : Z^P -> Div, phi(m)_{p<q} =
/// <m, u_{p<q}> with u the facet normals. Reduction modulo the principal
/// lattice along a spanning arborescence gives canonical class coordinates
/// on the non-tree edges; the divisor class group is free of rank
/// |C(P^)| - |P| and the Picard group is free of rank the number of
/// connected components of the Hasse diagram.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hibi/ideal_lattice.hpp"
#include "hibi/numeric.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Formal Z-combination of prime divisors; absent edges have coefficient 0
/// and the map never stores zeros.
struct TorusDivisor {
    std::map<CoveringEdge, Int> coeffs;

    Int coeff(const CoveringEdge& e) const;
    bool is_zero() const { return coeffs.empty(); }

    bool operator==(const TorusDivisor&) const = default;
};

TorusDivisor divisor_on(const CoveringEdge& e, Int c = 1);
TorusDivisor add(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor negate(const TorusDivisor& a);
TorusDivisor scale(const TorusDivisor& a, const Int& k);

/// Throws NotACovering if some coefficient key is not a covering edge of p.
void validate_divisor(const AugmentedPoset& p, const TorusDivisor& d);

/// Class coordinates relative to a spanning arborescence: the divisor plus a
/// unique principal divisor vanishing on all tree edges, restricted to the
/// non-tree edges. Two classes compare equal only relative to the same tree.
struct DivisorClass {
    Arborescence tree;
    std::map<CoveringEdge, Int> coords;  // zeros omitted

    bool operator==(const DivisorClass&) const = default;
};

/// One local trivialization per ideal: row i is the integer vector m with
/// <m, u_e> = coeff(e) on every facet through the vertex of ideal i.
struct CartierCertificate {
    std::vector<std::vector<Int>> per_ideal;  // canonical lattice order
};

struct CartierResult {
    bool cartier = false;
    std::optional<CartierCertificate> certificate;  // present iff cartier
    std::optional<OrderIdeal> obstruction;          // first failing ideal otherwise
};

/// Principal divisor of the character m; throws DimensionMismatch.
TorusDivisor phi(const AugmentedPoset& p, const std::vector<Int>& m);

int class_group_rank(const Poset& p);  // |C(P^)| - |P|

/// The non-tree covering edges, whose prime divisors generate the class
/// group freely. Throws InvalidTree.
std::vector<CoveringEdge> class_generators(const AugmentedPoset& p, const Arborescence& t);

/// Throws InvalidTree / NotACovering on bad input, InternalError if the
/// reduced divisor fails to vanish on the tree.
DivisorClass reduce_to_class(const AugmentedPoset& p, const Arborescence& t,
                             const TorusDivisor& d);

/// Local principality test: for every ideal, solve the linear system over
/// the facets through its vertex. Deterministic; the reported obstruction is
/// the canonically first unsolvable ideal.
CartierResult is_cartier(const AugmentedPoset& p, const IdealLattice& lattice,
                         const TorusDivisor& d);
CartierResult is_cartier(const Poset& p, const TorusDivisor& d,
                         std::size_t cap = kDefaultCap);

int picard_rank(const Poset& p);  // number of Hasse components

/// One Cartier generator per Hasse component C: the sum of the top-edge
/// prime divisors over the maximal elements lying in C. Component order
/// matches hasse_components.
std::vector<TorusDivisor> picard_generators(const AugmentedPoset& p);
std::vector<TorusDivisor> picard_generators(const Poset& p);

/// Closed-form certificate for sums of component generators weighted by
/// component_weights: m_p = 0 on the ideal and the component weight off it.
/// Throws DimensionMismatch / NotAnIdeal.
std::vector<Int> cartier_certificate_by_recipe(const Poset& p,
                                               const std::vector<Int>& component_weights,
                                               const OrderIdeal& ideal);

}  // namespace hibi
