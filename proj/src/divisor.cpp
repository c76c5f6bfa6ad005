#include "hibi/divisor.hpp"

#include <algorithm>
#include <queue>

namespace hibi {

namespace {

// Coefficient of phi(m) on one covering edge: <m, u_e>.
Int pairing(const std::vector<Int>& m, const CoveringEdge& e) {
    if (e.upper.is_top()) return m[e.lower.index()];
    if (e.lower.is_bot()) return -m[e.upper.index()];
    return m[e.lower.index()] - m[e.upper.index()];
}

}  // namespace

Int TorusDivisor::coeff(const CoveringEdge& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Int(0) : it->second;
}

TorusDivisor divisor_on(const CoveringEdge& e, Int c) {
    TorusDivisor d;
    if (c != 0) d.coeffs.emplace(e, std::move(c));
    return d;
}

TorusDivisor add(const TorusDivisor& a, const TorusDivisor& b) {
    TorusDivisor out = a;
    for (const auto& [e, c] : b.coeffs) {
        Int& v = out.coeffs[e];
        v += c;
        if (v == 0) out.coeffs.erase(e);
    }
    return out;
}

TorusDivisor negate(const TorusDivisor& a) { return scale(a, Int(-1)); }

TorusDivisor scale(const TorusDivisor& a, const Int& k) {
    TorusDivisor out;
    if (k == 0) return out;
    for (const auto& [e, c] : a.coeffs) out.coeffs.emplace(e, c * k);
    return out;
}

void validate_divisor(const AugmentedPoset& p, const TorusDivisor& d) {
    for (const auto& [e, c] : d.coeffs)
        if (!p.is_cover(e)) fail(errc::not_a_covering, "divisor key is not a covering relation");
}

TorusDivisor phi(const AugmentedPoset& p, const std::vector<Int>& m) {
    if (static_cast<int>(m.size()) != p.base().size())
        fail(errc::dimension_mismatch, "character length does not match the poset");
    TorusDivisor d;
    for (const auto& e : p.covers()) {
        Int c = pairing(m, e);
        if (c != 0) d.coeffs.emplace(e, std::move(c));
    }
    return d;
}

int class_group_rank(const Poset& p) {
    return static_cast<int>(AugmentedPoset(p).covers().size()) - p.size();
}

std::vector<CoveringEdge> class_generators(const AugmentedPoset& p, const Arborescence& t) {
    validate_arborescence(p.base(), t);
    std::vector<CoveringEdge> out;
    for (const auto& e : p.covers())
        if (!tree_contains(t, e)) out.push_back(e);
    return out;
}

DivisorClass reduce_to_class(const AugmentedPoset& p, const Arborescence& t,
                             const TorusDivisor& d) {
    validate_arborescence(p.base(), t);
    validate_divisor(p, d);
    int n = p.base().size();

    // The unique character killing the tree coefficients: accumulate the
    // divisor coefficients down each tree path from bot.
    std::vector<Int> m(n);
    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        std::vector<int> path;
        int cur = v;
        while (true) {
            path.push_back(cur);
            HasseVertex r = t.parent[cur];
            if (r.is_bot() || done[r.index()]) break;
            cur = r.index();
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            HasseVertex r = t.parent[*it];
            m[*it] = d.coeff({r, HasseVertex::element(*it)}) +
                     (r.is_bot() ? Int(0) : m[r.index()]);
            done[*it] = 1;
        }
    }

    TorusDivisor reduced = add(d, phi(p, m));
    DivisorClass out{t, {}};
    for (const auto& [e, c] : reduced.coeffs) {
        if (tree_contains(t, e))
            fail(errc::internal_error, "reduced divisor does not vanish on the tree");
        out.coords.emplace(e, c);
    }
    return out;
}

CartierResult is_cartier(const AugmentedPoset& p, const IdealLattice& lattice,
                         const TorusDivisor& d) {
    validate_divisor(p, d);
    int n = p.base().size();

    CartierResult res;
    CartierCertificate cert;
    cert.per_ideal.reserve(lattice.size());

    // Per ideal: the facets through its vertex impose difference constraints
    // on m (ground node n represents the constant 0). Solve by propagation;
    // free components are pinned to 0 at their smallest node.
    std::vector<std::vector<std::pair<int, Int>>> adj(n + 1);
    for (const auto& ideal : lattice.ideals()) {
        for (auto& a : adj) a.clear();
        std::vector<char> in(n, 0);
        for (int v : ideal.members()) in[v] = 1;

        for (const auto& e : p.covers()) {
            Int alpha = d.coeff(e);
            if (e.upper.is_top()) {
                if (in[e.lower.index()]) continue;  // crosses the boundary
                int q = e.lower.index();            // m_q = alpha
                adj[n].emplace_back(q, alpha);
                adj[q].emplace_back(n, -alpha);
            } else if (e.lower.is_bot()) {
                if (!in[e.upper.index()]) continue;
                int q = e.upper.index();  // m_q = -alpha
                adj[n].emplace_back(q, -alpha);
                adj[q].emplace_back(n, alpha);
            } else {
                int a = e.lower.index(), b = e.upper.index();
                if (in[a] != in[b]) continue;
                adj[b].emplace_back(a, alpha);  // m_a = m_b + alpha
                adj[a].emplace_back(b, -alpha);
            }
        }

        std::vector<Int> val(n + 1);
        std::vector<char> has(n + 1, 0);
        bool ok = true;
        auto propagate = [&](int s) {
            val[s] = 0;
            has[s] = 1;
            std::queue<int> q;
            q.push(s);
            while (ok && !q.empty()) {
                int v = q.front();
                q.pop();
                for (const auto& [w, delta] : adj[v]) {
                    Int want = val[v] + delta;
                    if (!has[w]) {
                        val[w] = want;
                        has[w] = 1;
                        q.push(w);
                    } else if (val[w] != want) {
                        ok = false;
                        break;
                    }
                }
            }
        };
        propagate(n);  // ground first, then each free component at its smallest node
        for (int s = 0; ok && s < n; ++s)
            if (!has[s]) propagate(s);

        if (!ok) {
            res.cartier = false;
            res.obstruction = ideal;
            return res;
        }
        cert.per_ideal.emplace_back(val.begin(), val.begin() + n);
    }

    res.cartier = true;
    res.certificate = std::move(cert);
    return res;
}

CartierResult is_cartier(const Poset& p, const TorusDivisor& d, std::size_t cap) {
    return is_cartier(AugmentedPoset(p), enumerate_ideals(p, cap), d);
}

int picard_rank(const Poset& p) { return static_cast<int>(hasse_components(p).size()); }

std::vector<TorusDivisor> picard_generators(const AugmentedPoset& p) {
    auto maxs = maximal_elements(p.base());
    std::vector<TorusDivisor> out;
    for (const auto& comp : hasse_components(p.base())) {
        TorusDivisor d;
        for (int v : maxs)
            if (std::binary_search(comp.begin(), comp.end(), v))
                d.coeffs.emplace(CoveringEdge{HasseVertex::element(v), HasseVertex::top()}, 1);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<TorusDivisor> picard_generators(const Poset& p) {
    return picard_generators(AugmentedPoset(p));
}

std::vector<Int> cartier_certificate_by_recipe(const Poset& p,
                                               const std::vector<Int>& component_weights,
                                               const OrderIdeal& ideal) {
    auto comps = hasse_components(p);
    if (component_weights.size() != comps.size())
        fail(errc::dimension_mismatch, "one weight per Hasse component is required");
    if (!is_ideal(p, ideal)) fail(errc::not_an_ideal, "subset is not an order ideal");
    std::vector<int> comp_of(p.size(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<Int> m(p.size());
    for (int v = 0; v < p.size(); ++v)
        m[v] = ideal.contains(v) ? Int(0) : component_weights[comp_of[v]];
    return m;
}

}  // namespace hibi
