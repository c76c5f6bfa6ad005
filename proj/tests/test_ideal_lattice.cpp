#include "hibi/ideal_lattice.hpp"

#include <algorithm>
#include <doctest.h>

#include "corpus.hpp"

using namespace hibi;
using hibi::testing::code_of;

namespace {

// Independent enumeration oracle: filter all 2^n subsets for down-closure.
std::vector<std::vector<int>> ideals_by_bruteforce(const Poset& p) {
    int n = p.size();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool closed = true;
        for (int b = 0; b < n && closed; ++b)
            if (mask >> b & 1)
                for (int a = 0; a < n && closed; ++a)
                    if (p.less(a, b) && !(mask >> a & 1)) closed = false;
        if (!closed) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<int>> members_of(const IdealLattice& lat) {
    std::vector<std::vector<int>> out;
    for (const auto& ideal : lat.ideals()) out.push_back(ideal.members());
    return out;
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle on the corpus") {
    for (const auto& p : hibi::testing::full_corpus()) {
        CAPTURE(p.size());
        CHECK(members_of(enumerate_ideals(p)) == ideals_by_bruteforce(p));
    }
}

TEST_CASE("canonical enumeration order") {
    auto lat = enumerate_ideals(chain(3));
    CHECK(members_of(lat) ==
          std::vector<std::vector<int>>{{}, {0}, {0, 1}, {0, 1, 2}});

    auto a2 = enumerate_ideals(antichain(2));
    CHECK(members_of(a2) == std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}});

    auto grid = enumerate_ideals(hibi::testing::grid2());
    CHECK(grid.size() == 6);
    CHECK(members_of(grid) ==
          std::vector<std::vector<int>>{{}, {0}, {0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 2, 3}});
}

TEST_CASE("counts for standard families") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(enumerate_ideals(chain(k)).size() == static_cast<std::size_t>(k) + 1);
        CHECK(enumerate_ideals(antichain(k)).size() == (std::size_t{1} << k));
    }
    // Ideals of a disjoint union multiply.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(enumerate_ideals(disjoint_union(chain(i), antichain(j))).size() ==
                  static_cast<std::size_t>(i + 1) << j);
}

TEST_CASE("cap is enforced exactly") {
    CHECK(enumerate_ideals(chain(3), 4).size() == 4);
    CHECK(code_of([] { enumerate_ideals(chain(3), 3); }) == errc::cap_exceeded);
    CHECK(code_of([] { enumerate_ideals(antichain(5), 31); }) == errc::cap_exceeded);
    CHECK(code_of([] { enumerate_ideals(chain(2), 0); }) == errc::cap_exceeded);
}

TEST_CASE("index_of and is_ideal") {
    Poset g = hibi::testing::grid2();
    auto lat = enumerate_ideals(g);
    for (std::size_t i = 0; i < lat.size(); ++i)
        CHECK(lat.index_of(lat.at(i)) == static_cast<int>(i));
    CHECK(code_of([&] { lat.index_of(OrderIdeal({1})); }) == errc::not_an_ideal);

    CHECK(is_ideal(g, std::vector<int>{}));
    CHECK(is_ideal(g, {0, 1}));
    CHECK_FALSE(is_ideal(g, {1}));      // b without a below it
    CHECK_FALSE(is_ideal(g, {0, 3}));   // d needs b and c
    CHECK(code_of([&] { is_ideal(g, std::vector<int>{7}); }) == errc::unknown_element);
}

TEST_CASE("join and meet are union and intersection") {
    OrderIdeal a({0, 1}), b({1, 2});
    CHECK(join(a, b).members() == std::vector<int>{0, 1, 2});
    CHECK(meet(a, b).members() == std::vector<int>{1});

    // The lattice is closed under both operations.
    for (const auto& p : hibi::testing::named_corpus()) {
        auto lat = enumerate_ideals(p);
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = i; j < lat.size(); ++j) {
                CHECK(is_ideal(p, join(lat.at(i), lat.at(j))));
                CHECK(is_ideal(p, meet(lat.at(i), lat.at(j))));
                CHECK(join(lat.at(i), lat.at(j)) == join(lat.at(j), lat.at(i)));
                CHECK(meet(lat.at(i), lat.at(i)) == lat.at(i));
            }
    }
}

TEST_CASE("characteristic vectors satisfy the valuation identity") {
    for (const auto& p : hibi::testing::named_corpus()) {
        auto lat = enumerate_ideals(p);
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = i + 1; j < lat.size(); ++j) {
                auto ci = char_vector(p, lat.at(i));
                auto cj = char_vector(p, lat.at(j));
                auto cm = char_vector(p, meet(lat.at(i), lat.at(j)));
                auto cv = char_vector(p, join(lat.at(i), lat.at(j)));
                for (int x = 0; x < p.size(); ++x) CHECK(ci[x] + cj[x] == cm[x] + cv[x]);
            }
    }
}

TEST_CASE("char_vector basics") {
    Poset c3 = chain(3);
    CHECK(char_vector(c3, OrderIdeal({0, 1})) == std::vector<int>{1, 1, 0});
    CHECK(char_vector(c3, OrderIdeal(std::vector<int>{})) == std::vector<int>{0, 0, 0});
    CHECK(code_of([&] { char_vector(c3, OrderIdeal(std::vector<int>{5})); }) == errc::unknown_element);
}

TEST_CASE("filters are the ideals of the opposite poset") {
    for (const auto& p : hibi::testing::full_corpus()) {
        CHECK(filters(p) == members_of(enumerate_ideals(opposite(p))));
    }
    CHECK(filters(chain(2)) == std::vector<std::vector<int>>{{}, {1}, {0, 1}});
}

TEST_CASE("subset_from_names resolves and sorts") {
    Poset g = hibi::testing::grid2();
    CHECK(subset_from_names(g, {"c", "a"}).members() == std::vector<int>{0, 2});
    CHECK(code_of([&] { subset_from_names(g, {"zz"}); }) == errc::unknown_element);
}
