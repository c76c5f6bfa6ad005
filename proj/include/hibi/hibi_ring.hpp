#pragma once

/// Toric presentation of the Hibi ring of a finite poset: one monomial
/// generator (1, a_I) per order ideal I, and one straightening relation
/// y_I y_J = y_{I^J} y_{IvJ} per incomparable pair of ideals.

#include <cstddef>
#include <vector>

#include "hibi/ideal_lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Exponent vector (1, a_I) in Z x Z^P: degree coordinate first, then the
/// characteristic vector of the ideal.
struct MonomialGenerator {
    OrderIdeal ideal;
    std::vector<int> exponent;

    bool operator==(const MonomialGenerator&) const = default;
};

/// Binomial y_lhs y_rhs - y_meet y_join with lhs, rhs incomparable
/// (neither contains the other) and lhs before rhs canonically.
struct HibiRelation {
    OrderIdeal lhs;
    OrderIdeal rhs;
    OrderIdeal meet;
    OrderIdeal join;

    bool operator==(const HibiRelation&) const = default;
};

std::vector<MonomialGenerator> ring_generators(const Poset& p, const IdealLattice& lattice);
std::vector<MonomialGenerator> ring_generators(const Poset& p, std::size_t cap = kDefaultCap);

std::vector<HibiRelation> hibi_relations(const IdealLattice& lattice);
std::vector<HibiRelation> hibi_relations(const Poset& p, std::size_t cap = kDefaultCap);

/// Checks the defining exponent identity a_lhs + a_rhs = a_meet + a_join
/// coordinate by coordinate (the degree coordinates match trivially).
bool verify_relation_exponents(const HibiRelation& rel);

}  // namespace hibi
