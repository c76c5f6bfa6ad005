#include "hibi/hibi_ring.hpp"

#include <map>

namespace hibi {

std::vector<MonomialGenerator> ring_generators(const Poset& p, const IdealLattice& lattice) {
    std::vector<MonomialGenerator> out;
    out.reserve(lattice.size());
    for (const auto& ideal : lattice.ideals()) {
        std::vector<int> expo;
        expo.reserve(p.size() + 1);
        expo.push_back(1);  // degree coordinate
        for (int v : char_vector(p, ideal)) expo.push_back(v);
        out.push_back({ideal, std::move(expo)});
    }
    return out;
}

std::vector<MonomialGenerator> ring_generators(const Poset& p, std::size_t cap) {
    return ring_generators(p, enumerate_ideals(p, cap));
}

std::vector<HibiRelation> hibi_relations(const IdealLattice& lattice) {
    std::vector<HibiRelation> out;
    int n = static_cast<int>(lattice.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const OrderIdeal& a = lattice.at(i);
            const OrderIdeal& b = lattice.at(j);
            OrderIdeal mt = meet(a, b);
            if (mt == a || mt == b) continue;  // comparable in the lattice
            out.push_back({a, b, std::move(mt), join(a, b)});
        }
    }
    return out;
}

std::vector<HibiRelation> hibi_relations(const Poset& p, std::size_t cap) {
    return hibi_relations(enumerate_ideals(p, cap));
}

bool verify_relation_exponents(const HibiRelation& rel) {
    // a_lhs + a_rhs = a_meet + a_join as multisets of element indices.
    std::map<int, int> count;
    for (int v : rel.lhs.members()) ++count[v];
    for (int v : rel.rhs.members()) ++count[v];
    for (int v : rel.meet.members()) --count[v];
    for (int v : rel.join.members()) --count[v];
    for (const auto& [v, c] : count)
        if (c != 0) return false;
    return true;
}

}  // namespace hibi
