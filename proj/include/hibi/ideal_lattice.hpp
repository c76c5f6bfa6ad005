#pragma once

/// Order ideals (down-closed subsets) of a finite poset. They form a
/// distributive lattice under union/intersection; its canonical enumeration
/// order is (cardinality, then lex on sorted member indices).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// A subset of elements stored as sorted canonical indices.
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::vector<int> members);  // sorted + deduplicated

    const std::vector<int>& members() const { return members_; }
    bool contains(int p) const;
    int size() const { return static_cast<int>(members_.size()); }

    bool operator==(const OrderIdeal&) const = default;

private:
    std::vector<int> members_;
};

/// Canonical order: by cardinality, then lexicographically on members.
bool canonical_ideal_less(const OrderIdeal& a, const OrderIdeal& b);

/// All order ideals of a poset in canonical order, with reverse lookup.
class IdealLattice {
public:
    const std::vector<OrderIdeal>& ideals() const { return ideals_; }
    std::size_t size() const { return ideals_.size(); }
    const OrderIdeal& at(std::size_t i) const { return ideals_.at(i); }
    int index_of(const OrderIdeal& ideal) const;  // throws NotAnIdeal

private:
    friend IdealLattice enumerate_ideals(const Poset&, std::size_t);
    IdealLattice() = default;

    std::vector<OrderIdeal> ideals_;
    std::map<std::vector<int>, int> index_;
};

/// Breadth-first enumeration from the empty ideal; throws CapExceeded when
/// the lattice is larger than cap.
IdealLattice enumerate_ideals(const Poset& p, std::size_t cap = kDefaultCap);

bool is_ideal(const Poset& p, const std::vector<int>& members);
bool is_ideal(const Poset& p, const OrderIdeal& ideal);

OrderIdeal join(const OrderIdeal& a, const OrderIdeal& b);  // union
OrderIdeal meet(const OrderIdeal& a, const OrderIdeal& b);  // intersection

/// Order filters (up-closed subsets) as sorted index sets, canonical order.
std::vector<std::vector<int>> filters(const Poset& p, std::size_t cap = kDefaultCap);

/// 0/1 indicator vector of a subset, indexed by canonical element order.
std::vector<int> char_vector(const Poset& p, const OrderIdeal& ideal);

/// Resolves names to a subset; throws UnknownElement. Down-closure is not
/// checked here; use is_ideal for that.
OrderIdeal subset_from_names(const Poset& p, const std::vector<std::string>& names);

}  // namespace hibi
