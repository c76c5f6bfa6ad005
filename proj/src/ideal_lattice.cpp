#include "hibi/ideal_lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace hibi {

OrderIdeal::OrderIdeal(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool OrderIdeal::contains(int p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

bool canonical_ideal_less(const OrderIdeal& a, const OrderIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

int IdealLattice::index_of(const OrderIdeal& ideal) const {
    auto it = index_.find(ideal.members());
    if (it == index_.end()) fail(errc::not_an_ideal, "subset is not an order ideal of this poset");
    return it->second;
}

IdealLattice enumerate_ideals(const Poset& p, std::size_t cap) {
    if (cap < 1) fail(errc::cap_exceeded, "cap must be at least 1");
    int n = p.size();

    // BFS from the empty ideal; a step adds one element all of whose lower
    // covers are present (equivalent to down-closure of the result).
    std::unordered_set<std::string> seen;
    std::vector<std::string> queue;
    queue.emplace_back(static_cast<std::size_t>(n), '0');
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::string cur = queue[head];
        for (int x = 0; x < n; ++x) {
            if (cur[x] == '1') continue;
            bool addable = true;
            for (const auto& [a, b] : p.covers())
                if (b == x && cur[a] == '0') {
                    addable = false;
                    break;
                }
            if (!addable) continue;
            std::string next = cur;
            next[x] = '1';
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    fail(errc::cap_exceeded, "ideal lattice is larger than the cap");
                queue.push_back(std::move(next));
            }
        }
    }

    IdealLattice lat;
    lat.ideals_.reserve(queue.size());
    for (const auto& ind : queue) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (ind[i] == '1') members.push_back(i);
        lat.ideals_.emplace_back(std::move(members));
    }
    std::sort(lat.ideals_.begin(), lat.ideals_.end(), canonical_ideal_less);
    for (int i = 0; i < static_cast<int>(lat.ideals_.size()); ++i)
        lat.index_.emplace(lat.ideals_[i].members(), i);
    return lat;
}

bool is_ideal(const Poset& p, const std::vector<int>& members) {
    std::vector<char> in(p.size(), 0);
    for (int m : members) {
        if (m < 0 || m >= p.size()) fail(errc::unknown_element, "element index out of range");
        in[m] = 1;
    }
    for (int b = 0; b < p.size(); ++b)
        if (in[b])
            for (int a = 0; a < p.size(); ++a)
                if (p.less(a, b) && !in[a]) return false;
    return true;
}

bool is_ideal(const Poset& p, const OrderIdeal& ideal) { return is_ideal(p, ideal.members()); }

OrderIdeal join(const OrderIdeal& a, const OrderIdeal& b) {
    std::vector<int> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return OrderIdeal(std::move(out));
}

OrderIdeal meet(const OrderIdeal& a, const OrderIdeal& b) {
    std::vector<int> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return OrderIdeal(std::move(out));
}

std::vector<std::vector<int>> filters(const Poset& p, std::size_t cap) {
    auto lat = enumerate_ideals(p, cap);
    std::vector<std::vector<int>> out;
    out.reserve(lat.size());
    for (const auto& ideal : lat.ideals()) {
        std::vector<int> complement;
        for (int v = 0; v < p.size(); ++v)
            if (!ideal.contains(v)) complement.push_back(v);
        out.push_back(std::move(complement));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<int> char_vector(const Poset& p, const OrderIdeal& ideal) {
    std::vector<int> out(p.size(), 0);
    for (int m : ideal.members()) {
        if (m < 0 || m >= p.size()) fail(errc::unknown_element, "element index out of range");
        out[m] = 1;
    }
    return out;
}

OrderIdeal subset_from_names(const Poset& p, const std::vector<std::string>& names) {
    std::vector<int> members;
    members.reserve(names.size());
    for (const auto& name : names) members.push_back(p.index_of(name));
    return OrderIdeal(std::move(members));
}

}  // namespace hibi
