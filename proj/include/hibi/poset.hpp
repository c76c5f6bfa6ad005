#pragma once

/// Finite posets over named elements with a fixed canonical element order
/// (the order elements were supplied in). The strict relation is stored
/// transitively closed; covering relations are its transitive reduction.
/// Augmenting a poset attaches a bottom and a top vertex; the covering set
/// of the augmented poset indexes the facets of the order polytope and the
/// torus-invariant prime divisors of the associated Hibi variety.

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hibi/errors.hpp"

namespace hibi {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Vertex of an augmented Hasse diagram: bottom, a base element, or top.
/// Codes are chosen so the natural ordering is bot < elements < top.
class HasseVertex {
public:
    constexpr HasseVertex() = default;
    static constexpr HasseVertex bot() { return HasseVertex(kBotCode); }
    static constexpr HasseVertex top() { return HasseVertex(kTopCode); }
    static constexpr HasseVertex element(int index) { return HasseVertex(index); }

    constexpr bool is_bot() const { return code_ == kBotCode; }
    constexpr bool is_top() const { return code_ == kTopCode; }
    constexpr bool is_element() const { return !is_bot() && !is_top(); }
    constexpr int index() const { return code_; }  // meaningful for elements only

    friend constexpr auto operator<=>(HasseVertex, HasseVertex) = default;

private:
    static constexpr int kBotCode = -1;
    static constexpr int kTopCode = std::numeric_limits<int>::max();

    constexpr explicit HasseVertex(int code) : code_(code) {}

    int code_ = kBotCode;
};

struct CoveringEdge {
    HasseVertex lower;
    HasseVertex upper;

    friend constexpr auto operator<=>(const CoveringEdge&, const CoveringEdge&) = default;
};

namespace detail {
struct PosetBuilder;
}

/// Immutable finite poset. Element indices 0..n-1 follow input order and are
/// the canonical order used for serialization and tie-breaking everywhere.
class Poset {
public:
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& elements() const { return names_; }
    const std::string& name_of(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    std::optional<int> find(std::string_view name) const;
    int index_of(std::string_view name) const;  // throws UnknownElement

    bool less(int a, int b) const { return lt_[a][b]; }
    bool less_eq(int a, int b) const { return a == b || lt_[a][b]; }
    bool comparable(int a, int b) const { return a == b || lt_[a][b] || lt_[b][a]; }

    /// Transitive reduction, sorted lexicographically by (lower, upper).
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<int> lower_covers(int p) const;
    std::vector<int> upper_covers(int p) const;

    bool operator==(const Poset& o) const { return names_ == o.names_ && lt_ == o.lt_; }

private:
    friend struct detail::PosetBuilder;
    Poset() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<bool>> lt_;  // strict order, transitively closed
    std::vector<std::pair<int, int>> covers_;
    std::unordered_map<std::string, int> index_;
};

/// Builds the poset generated by the given covering (or more general) pairs.
/// Element names must match [A-Za-z0-9_.]+ and may not be "_bot" or "_top".
/// Throws EmptyPoset, DuplicateElement, UnknownElement, CycleDetected,
/// ParseError (bad name).
Poset poset_from_covers(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& covers);

Poset chain(int k);      // elements p1 < p2 < ... < pk; throws EmptyPoset if k < 1
Poset antichain(int k);  // elements a1, ..., ak pairwise incomparable
Poset disjoint_union(const Poset& a, const Poset& b);  // names prefixed "l." / "r."
Poset product(const Poset& a, const Poset& b);         // names "x.y", row-major order
Poset opposite(const Poset& p);                        // reversed order, same element order

std::vector<CoveringEdge> covering_relations(const Poset& p);
std::vector<int> minimal_elements(const Poset& p);
std::vector<int> maximal_elements(const Poset& p);

/// Connected components of the Hasse diagram, each sorted, components
/// ordered by smallest member.
std::vector<std::vector<int>> hasse_components(const Poset& p);

/// P with bottom and top adjoined; caches the covering set C(P^) in
/// canonical (lower, upper) order.
class AugmentedPoset {
public:
    explicit AugmentedPoset(Poset base);

    const Poset& base() const { return base_; }
    const std::vector<CoveringEdge>& covers() const { return covers_; }
    bool is_cover(const CoveringEdge& e) const;
    int cover_index(const CoveringEdge& e) const;  // throws NotACovering

private:
    Poset base_;
    std::vector<CoveringEdge> covers_;
};

inline AugmentedPoset augment(Poset p) { return AugmentedPoset(std::move(p)); }

std::vector<CoveringEdge> covering_relations(const AugmentedPoset& p);

/// Spanning arborescence of the augmented Hasse diagram rooted at bottom:
/// one incoming covering edge per element. parent[p] is an element or bot.
struct Arborescence {
    std::vector<HasseVertex> parent;

    bool operator==(const Arborescence&) const = default;
};

/// Canonical arborescence: each element's parent is its smallest-index lower
/// cover (bot for minimal elements).
Arborescence arborescence(const Poset& p);

/// Throws InvalidTree unless every parent edge is a covering of the augmented
/// poset and every element reaches bot.
void validate_arborescence(const Poset& p, const Arborescence& t);

bool tree_contains(const Arborescence& t, const CoveringEdge& e);

/// Contracts one covering edge of the augmented poset. A bottom edge deletes
/// the minimal element, a top edge deletes the maximal element, and an
/// interior edge merges the two endpoints (the merged element keeps the lower
/// name and position). The result has exactly one element fewer.
Poset contract_covering(const AugmentedPoset& p, const CoveringEdge& e);
Poset contract_covering(const Poset& p, const CoveringEdge& e);

}  // namespace hibi
