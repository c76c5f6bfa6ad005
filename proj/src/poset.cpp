#include "hibi/poset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

namespace hibi {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty() || s == "_bot" || s == "_top") return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
    }
    return true;
}

// Any linear extension: sort by number of elements strictly below, which is
// strictly monotone along the order.
std::vector<int> linear_extension(const std::vector<std::vector<bool>>& lt) {
    int n = static_cast<int>(lt.size());
    std::vector<int> below(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lt[a][b]) ++below[b];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return below[a] != below[b] ? below[a] < below[b] : a < b;
    });
    return order;
}

}  // namespace

namespace detail {

struct PosetBuilder {
    // lt must be irreflexive, antisymmetric and transitively closed.
    static Poset make_closed(std::vector<std::string> names, std::vector<std::vector<bool>> lt) {
        if (names.empty()) fail(errc::empty_poset, "a poset needs at least one element");
        int n = static_cast<int>(names.size());
        for (int i = 0; i < n; ++i) {
            if (lt[i][i]) fail(errc::internal_error, "order relation is not irreflexive");
            for (int j = i + 1; j < n; ++j)
                if (lt[i][j] && lt[j][i]) fail(errc::internal_error, "order relation is not antisymmetric");
        }

        Poset p;
        p.names_ = std::move(names);
        p.lt_ = std::move(lt);
        for (int i = 0; i < n; ++i) p.index_.emplace(p.names_[i], i);

        // Transitive reduction: scan the elements above a in extension order;
        // anything above an accepted cover is itself not a cover.
        auto ext = linear_extension(p.lt_);
        std::vector<char> excluded(n, 0);
        for (int a = 0; a < n; ++a) {
            for (int v : ext) excluded[v] = 0;
            for (int b : ext) {
                if (!p.lt_[a][b] || excluded[b]) continue;
                p.covers_.emplace_back(a, b);
                for (int c = 0; c < n; ++c)
                    if (p.lt_[b][c]) excluded[c] = 1;
            }
        }
        std::sort(p.covers_.begin(), p.covers_.end());
        return p;
    }
};

}  // namespace detail

std::optional<int> Poset::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Poset::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) fail(errc::unknown_element, "unknown element '" + std::string(name) + "'");
    return *i;
}

std::vector<int> Poset::lower_covers(int p) const {
    std::vector<int> out;
    for (const auto& [a, b] : covers_)
        if (b == p) out.push_back(a);
    return out;
}

std::vector<int> Poset::upper_covers(int p) const {
    std::vector<int> out;
    for (const auto& [a, b] : covers_)
        if (a == p) out.push_back(b);
    return out;
}

Poset poset_from_covers(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
    if (elements.empty()) fail(errc::empty_poset, "a poset needs at least one element");
    int n = static_cast<int>(elements.size());

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!valid_name(elements[i]))
            fail(errc::parse_error, "invalid element name '" + elements[i] +
                                        "' (allowed: [A-Za-z0-9_.]+, not _bot/_top)");
        if (!index.emplace(elements[i], i).second)
            fail(errc::duplicate_element, "duplicate element '" + elements[i] + "'");
    }

    std::vector<std::vector<int>> adj(n);
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) fail(errc::unknown_element, "unknown element '" + lo + "'");
        if (b == index.end()) fail(errc::unknown_element, "unknown element '" + hi + "'");
        if (a->second == b->second)
            fail(errc::cycle_detected, "relation '" + lo + "' < '" + hi + "' is reflexive");
        adj[a->second].push_back(b->second);
    }

    // Iterative DFS: cycle detection plus reverse-topological finish order.
    std::vector<int> color(n, 0), finish;
    finish.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (color[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                int w = adj[v][next++];
                if (color[w] == 1)
                    fail(errc::cycle_detected,
                         "cycle through '" + elements[v] + "' < '" + elements[w] + "'");
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = 2;
                finish.push_back(v);
                stack.pop_back();
            }
        }
    }

    // Reachability along finish order gives the transitive closure.
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int v : finish) {
        for (int w : adj[v]) {
            lt[v][w] = true;
            for (int c = 0; c < n; ++c)
                if (lt[w][c]) lt[v][c] = true;
        }
    }

    return detail::PosetBuilder::make_closed(elements, std::move(lt));
}

Poset chain(int k) {
    if (k < 1) fail(errc::empty_poset, "chain needs k >= 1");
    std::vector<std::string> names;
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
        names.push_back("p" + std::to_string(i + 1));
        for (int j = i + 1; j < k; ++j) lt[i][j] = true;
    }
    return detail::PosetBuilder::make_closed(std::move(names), std::move(lt));
}

Poset antichain(int k) {
    if (k < 1) fail(errc::empty_poset, "antichain needs k >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i + 1));
    return detail::PosetBuilder::make_closed(std::move(names),
                                             std::vector<std::vector<bool>>(k, std::vector<bool>(k, false)));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
    int na = a.size(), nb = b.size(), n = na + nb;
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& s : a.elements()) names.push_back("l." + s);
    for (const auto& s : b.elements()) names.push_back("r." + s);
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) lt[i][j] = a.less(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) lt[na + i][na + j] = b.less(i, j);
    return detail::PosetBuilder::make_closed(std::move(names), std::move(lt));
}

Poset product(const Poset& a, const Poset& b) {
    int na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) names.push_back(a.name_of(i) + "." + b.name_of(j));
    // Componentwise order: (i,j) < (k,l) iff i <= k, j <= l, not both equal.
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    if (!(i == k && j == l) && a.less_eq(i, k) && b.less_eq(j, l))
                        lt[i * nb + j][k * nb + l] = true;
    return detail::PosetBuilder::make_closed(std::move(names), std::move(lt));
}

Poset opposite(const Poset& p) {
    int n = p.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lt[i][j] = p.less(j, i);
    return detail::PosetBuilder::make_closed(p.elements(), std::move(lt));
}

std::vector<CoveringEdge> covering_relations(const Poset& p) {
    std::vector<CoveringEdge> out;
    out.reserve(p.covers().size());
    for (const auto& [a, b] : p.covers())
        out.push_back({HasseVertex::element(a), HasseVertex::element(b)});
    return out;
}

std::vector<int> minimal_elements(const Poset& p) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < p.size() && minimal; ++j)
            if (p.less(j, i)) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<int> maximal_elements(const Poset& p) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < p.size() && maximal; ++j)
            if (p.less(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<int>> hasse_components(const Poset& p) {
    int n = p.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& [a, b] : p.covers()) {
                int w = a == v ? b : b == v ? a : -1;
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push(w);
                }
            }
        }
        ++ncomp;
    }
    // Components come out ordered by smallest member because seeds increase.
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

AugmentedPoset::AugmentedPoset(Poset base) : base_(std::move(base)) {
    for (int m : minimal_elements(base_))
        covers_.push_back({HasseVertex::bot(), HasseVertex::element(m)});
    for (const auto& [a, b] : base_.covers())
        covers_.push_back({HasseVertex::element(a), HasseVertex::element(b)});
    for (int m : maximal_elements(base_))
        covers_.push_back({HasseVertex::element(m), HasseVertex::top()});
    std::sort(covers_.begin(), covers_.end());
}

bool AugmentedPoset::is_cover(const CoveringEdge& e) const {
    return std::binary_search(covers_.begin(), covers_.end(), e);
}

int AugmentedPoset::cover_index(const CoveringEdge& e) const {
    auto it = std::lower_bound(covers_.begin(), covers_.end(), e);
    if (it == covers_.end() || *it != e) fail(errc::not_a_covering, "edge is not a covering relation");
    return static_cast<int>(it - covers_.begin());
}

std::vector<CoveringEdge> covering_relations(const AugmentedPoset& p) { return p.covers(); }

Arborescence arborescence(const Poset& p) {
    Arborescence t;
    t.parent.resize(p.size());
    for (int v = 0; v < p.size(); ++v) {
        auto lows = p.lower_covers(v);
        t.parent[v] = lows.empty() ? HasseVertex::bot()
                                   : HasseVertex::element(*std::min_element(lows.begin(), lows.end()));
    }
    return t;
}

void validate_arborescence(const Poset& p, const Arborescence& t) {
    int n = p.size();
    if (static_cast<int>(t.parent.size()) != n)
        fail(errc::invalid_tree, "arborescence must assign a parent to every element");
    for (int v = 0; v < n; ++v) {
        HasseVertex r = t.parent[v];
        if (r.is_top()) fail(errc::invalid_tree, "top cannot be a parent");
        if (r.is_bot()) {
            if (!p.lower_covers(v).empty())
                fail(errc::invalid_tree, "'" + p.name_of(v) + "' is not minimal, bot is not its cover");
        } else {
            auto lows = p.lower_covers(v);
            if (std::find(lows.begin(), lows.end(), r.index()) == lows.end())
                fail(errc::invalid_tree,
                     "'" + p.name_of(r.index()) + "' does not cover '" + p.name_of(v) + "' from below");
        }
    }
    // Parents strictly decrease in the order, so reaching bot is automatic;
    // still walk to guard against corrupted data.
    for (int v = 0; v < n; ++v) {
        HasseVertex cur = HasseVertex::element(v);
        for (int steps = 0; cur.is_element(); ++steps) {
            if (steps > n) fail(errc::invalid_tree, "parent chain does not reach bot");
            cur = t.parent[cur.index()];
        }
    }
}

bool tree_contains(const Arborescence& t, const CoveringEdge& e) {
    return e.upper.is_element() && e.upper.index() < static_cast<int>(t.parent.size()) &&
           t.parent[e.upper.index()] == e.lower;
}

Poset contract_covering(const AugmentedPoset& p, const CoveringEdge& e) {
    if (!p.is_cover(e)) fail(errc::not_a_covering, "edge is not a covering relation");
    const Poset& base = p.base();
    int n = base.size();
    if (n == 1) fail(errc::empty_poset, "contracting the only element leaves an empty poset");

    // Deleting one element: a bottom edge removes its minimal element, a top
    // edge its maximal element; the induced order is already closed.
    if (e.lower.is_bot() || e.upper.is_top()) {
        int gone = e.lower.is_bot() ? e.upper.index() : e.lower.index();
        std::vector<std::string> names;
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (v != gone) {
                keep.push_back(v);
                names.push_back(base.name_of(v));
            }
        int m = n - 1;
        std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) lt[i][j] = base.less(keep[i], keep[j]);
        return detail::PosetBuilder::make_closed(std::move(names), std::move(lt));
    }

    // Interior edge p<q: merge q into p. The merged element keeps p's name
    // and position and inherits everything below q; everything above q is
    // already above p by transitivity. New x<p links compose with p's upper
    // set, so close again.
    int lo = e.lower.index(), hi = e.upper.index();
    std::vector<std::string> names;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != hi) {
            keep.push_back(v);
            names.push_back(base.name_of(v));
        }
    int m = n - 1;
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    int merged = -1;
    for (int i = 0; i < m; ++i)
        if (keep[i] == lo) merged = i;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rel[i][j] = base.less(keep[i], keep[j]);
    for (int i = 0; i < m; ++i)
        if (keep[i] != lo && base.less(keep[i], hi)) rel[i][merged] = true;

    // Close: all new edges point into the merged node and the set below q
    // was already down-closed, so one hop through the merged node suffices.
    for (int i = 0; i < m; ++i)
        if (rel[i][merged])
            for (int j = 0; j < m; ++j)
                if (rel[merged][j]) rel[i][j] = true;

    return detail::PosetBuilder::make_closed(std::move(names), std::move(rel));
}

Poset contract_covering(const Poset& p, const CoveringEdge& e) {
    return contract_covering(AugmentedPoset(p), e);
}

}  // namespace hibi
