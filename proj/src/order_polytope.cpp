#include "hibi/order_polytope.hpp"

#include <algorithm>

namespace hibi {

std::vector<int> facet_normal(const CoveringEdge& e, int n) {
    std::vector<int> u(n, 0);
    if (e.upper.is_top()) {
        u[e.lower.index()] = 1;
    } else if (e.lower.is_bot()) {
        u[e.upper.index()] = -1;
    } else {
        u[e.lower.index()] = 1;
        u[e.upper.index()] = -1;
    }
    return u;
}

int facet_offset(const CoveringEdge& e) { return e.lower.is_bot() ? 1 : 0; }

OrderPolytope order_polytope(const Poset& p, std::size_t cap) {
    auto lat = enumerate_ideals(p, cap);
    AugmentedPoset aug(p);

    OrderPolytope poly;
    poly.dim_ = p.size();
    poly.vertices_.reserve(lat.size());
    for (const auto& ideal : lat.ideals()) poly.vertices_.push_back(char_vector(p, ideal));
    poly.facets_.reserve(aug.covers().size());
    for (const auto& e : aug.covers())
        poly.facets_.push_back({e, facet_normal(e, p.size()), facet_offset(e)});
    return poly;
}

bool contains(const OrderPolytope& poly, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != poly.dimension())
        fail(errc::dimension_mismatch, "point dimension does not match the polytope");
    for (const auto& f : poly.facets()) {
        Rational lhs(0);
        for (int i = 0; i < poly.dimension(); ++i)
            if (f.normal[i] != 0) lhs += Rational(f.normal[i]) * x[i];
        if (lhs < Rational(-f.offset)) return false;
    }
    return true;
}

std::vector<CoveringEdge> incident_facets(const AugmentedPoset& p, const OrderIdeal& ideal) {
    if (!is_ideal(p.base(), ideal)) fail(errc::not_an_ideal, "subset is not an order ideal");
    // The facet of p<q passes through the vertex of I exactly when the edge
    // does not cross the boundary of I u {bot}: both endpoints in, or both out.
    std::vector<CoveringEdge> out;
    for (const auto& e : p.covers()) {
        bool lo_in = e.lower.is_bot() || ideal.contains(e.lower.index());
        bool hi_in = e.upper.is_element() && ideal.contains(e.upper.index());
        if (lo_in == hi_in) out.push_back(e);
    }
    return out;
}

std::vector<CoveringEdge> incident_facets(const Poset& p, const OrderIdeal& ideal) {
    return incident_facets(AugmentedPoset(p), ideal);
}

std::vector<std::vector<int>> integral_points(const OrderPolytope& poly, std::size_t cap) {
    int n = poly.dimension();
    if (n >= 63 || (std::size_t{1} << n) > cap)
        fail(errc::cap_exceeded, "2^dimension candidate points exceed the cap");
    std::vector<std::vector<int>> out;
    // A lattice point of a 0/1-polytope is a 0/1 vector; scan all of them in
    // the canonical (cardinality, lex) order via sorting at the end.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Rational> x(n);
        std::vector<int> pt(n);
        for (int i = 0; i < n; ++i) {
            pt[i] = (mask >> i) & 1;
            x[i] = Rational(pt[i]);
        }
        if (contains(poly, x)) out.push_back(std::move(pt));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ca = std::count(a.begin(), a.end(), 1);
        int cb = std::count(b.begin(), b.end(), 1);
        if (ca != cb) return ca < cb;
        // lex on sorted member indices == reverse-lex on indicator vectors
        // would differ; compare member lists directly.
        std::vector<int> ma, mb;
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (a[i]) ma.push_back(i);
        for (int i = 0; i < static_cast<int>(b.size()); ++i)
            if (b[i]) mb.push_back(i);
        return ma < mb;
    });
    return out;
}

}  // namespace hibi
