#include "hibi/order_polytope.hpp"

#include <algorithm>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "hibi/errors.hpp"
#include "hibi/ideal_lattice.hpp"
#include "hibi/numeric.hpp"
#include "hibi/poset.hpp"

using namespace hibi;
using hibi::testing::code_of;

namespace {

Rational rat(int num, int den = 1) { return Rational(Int(num), Int(den)); }

std::vector<Rational> to_point(const std::vector<int>& v) {
    std::vector<Rational> x;
    x.reserve(v.size());
    for (int c : v) x.push_back(rat(c));
    return x;
}

// Inner product <normal, x> for integer points, used to recompute facet
// incidence independently of incident_facets.
int dot(const std::vector<int>& normal, const std::vector<int>& x) {
    int s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
    return s;
}

}  // namespace

TEST_CASE("facet data for a single element") {
    auto p = chain(1);
    auto poly = order_polytope(p);
    CHECK(poly.dimension() == 1);
    CHECK(poly.vertices() == std::vector<std::vector<int>>{{0}, {1}});
    REQUIRE(poly.facets().size() == 2);
    // x >= 0 comes from the edge into top, x <= 1 from the edge out of bottom.
    CHECK(poly.facets()[0].edge == CoveringEdge{HasseVertex::bot(), HasseVertex::element(0)});
    CHECK(poly.facets()[0].normal == std::vector<int>{-1});
    CHECK(poly.facets()[0].offset == 1);
    CHECK(poly.facets()[1].edge == CoveringEdge{HasseVertex::element(0), HasseVertex::top()});
    CHECK(poly.facets()[1].normal == std::vector<int>{1});
    CHECK(poly.facets()[1].offset == 0);
}

TEST_CASE("chain polytope is the staircase simplex") {
    auto p = chain(2);
    auto poly = order_polytope(p);
    CHECK(poly.dimension() == 2);
    CHECK(poly.vertices() == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}});
    REQUIRE(poly.facets().size() == 3);
    CHECK(poly.facets()[0].normal == std::vector<int>{-1, 0});  // x1 <= 1
    CHECK(poly.facets()[0].offset == 1);
    CHECK(poly.facets()[1].normal == std::vector<int>{1, -1});  // x2 <= x1
    CHECK(poly.facets()[1].offset == 0);
    CHECK(poly.facets()[2].normal == std::vector<int>{0, 1});  // x2 >= 0
    CHECK(poly.facets()[2].offset == 0);
}

TEST_CASE("antichain polytope is the unit cube") {
    auto p = antichain(2);
    auto poly = order_polytope(p);
    CHECK(poly.dimension() == 2);
    CHECK(poly.vertices() ==
          std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    REQUIRE(poly.facets().size() == 4);
    CHECK(poly.facets()[0].normal == std::vector<int>{-1, 0});
    CHECK(poly.facets()[1].normal == std::vector<int>{0, -1});
    CHECK(poly.facets()[2].normal == std::vector<int>{1, 0});
    CHECK(poly.facets()[3].normal == std::vector<int>{0, 1});
    CHECK(poly.facets()[0].offset == 1);
    CHECK(poly.facets()[1].offset == 1);
    CHECK(poly.facets()[2].offset == 0);
    CHECK(poly.facets()[3].offset == 0);
}

TEST_CASE("membership is exact over the rationals") {
    auto poly = order_polytope(chain(2));  // 0 <= x2 <= x1 <= 1
    CHECK(contains(poly, {rat(2, 3), rat(1, 3)}));
    CHECK(contains(poly, {rat(1, 2), rat(1, 2)}));   // on the diagonal facet
    CHECK_FALSE(contains(poly, {rat(1, 3), rat(2, 3)}));
    CHECK_FALSE(contains(poly, {rat(3, 2), rat(0)}));
    CHECK_FALSE(contains(poly, {rat(0), rat(-1, 1000000)}));
    for (const auto& v : poly.vertices()) CHECK(contains(poly, to_point(v)));
    CHECK(code_of([&] { (void)contains(poly, {rat(0)}); }) == errc::dimension_mismatch);
    CHECK(code_of([&] { (void)contains(poly, {rat(0), rat(0), rat(0)}); }) ==
          errc::dimension_mismatch);
}

TEST_CASE("facets through a vertex avoid the ideal boundary") {
    auto p = chain(2);
    AugmentedPoset aug(p);
    auto e_bot = CoveringEdge{HasseVertex::bot(), HasseVertex::element(0)};
    auto e_mid = CoveringEdge{HasseVertex::element(0), HasseVertex::element(1)};
    auto e_top = CoveringEdge{HasseVertex::element(1), HasseVertex::top()};

    CHECK(incident_facets(aug, OrderIdeal(std::vector<int>{0})) ==
          std::vector<CoveringEdge>{e_bot, e_top});
    // The empty ideal misses only the bottom edges, the full ideal only the
    // top edges.
    CHECK(incident_facets(aug, OrderIdeal(std::vector<int>{})) ==
          std::vector<CoveringEdge>{e_mid, e_top});
    CHECK(incident_facets(aug, OrderIdeal(std::vector<int>{0, 1})) ==
          std::vector<CoveringEdge>{e_bot, e_mid});

    CHECK(code_of([&] { (void)incident_facets(aug, OrderIdeal(std::vector<int>{1})); }) ==
          errc::not_an_ideal);
    CHECK(incident_facets(p, OrderIdeal(std::vector<int>{0})) ==
          incident_facets(aug, OrderIdeal(std::vector<int>{0})));
}

TEST_CASE("lattice points are exactly the vertices") {
    for (const auto& p : hibi::testing::full_corpus()) {
        if (p.size() > 10) continue;
        auto poly = order_polytope(p);
        CHECK(integral_points(poly) == poly.vertices());
    }
    auto poly = order_polytope(antichain(3));
    CHECK(code_of([&] { (void)integral_points(poly, 7); }) == errc::cap_exceeded);
}

TEST_CASE("incidence agrees with the inequality description") {
    for (const auto& p : hibi::testing::full_corpus()) {
        auto lat = enumerate_ideals(p);
        AugmentedPoset aug(p);
        auto poly = order_polytope(p);
        REQUIRE(poly.dimension() == p.size());
        REQUIRE(poly.vertices().size() == lat.size());
        REQUIRE(poly.facets().size() == aug.covers().size());
        for (const auto& ideal : lat.ideals()) {
            auto v = char_vector(p, ideal);
            std::vector<CoveringEdge> tight;
            for (const auto& f : poly.facets())
                if (dot(f.normal, v) == -f.offset) tight.push_back(f.edge);
            CHECK(tight == incident_facets(aug, ideal));
        }
    }
}

TEST_CASE("every facet is proper and supported") {
    for (const auto& p : hibi::testing::full_corpus()) {
        auto poly = order_polytope(p);
        for (const auto& f : poly.facets()) {
            bool on = false;
            bool off = false;
            for (const auto& v : poly.vertices()) {
                int lhs = dot(f.normal, v);
                CHECK(lhs >= -f.offset);  // every vertex satisfies the inequality
                (lhs == -f.offset ? on : off) = true;
            }
            CHECK(on);
            CHECK(off);
        }
    }
}

TEST_CASE("a facet is the polytope of the contracted poset") {
    for (const auto& p : hibi::testing::full_corpus()) {
        if (p.size() < 2) continue;
        auto poly = order_polytope(p);
        AugmentedPoset aug(p);
        for (const auto& f : poly.facets()) {
            std::size_t on_facet = 0;
            for (const auto& v : poly.vertices())
                if (dot(f.normal, v) == -f.offset) ++on_facet;
            auto q = contract_covering(p, f.edge);
            CHECK(on_facet == enumerate_ideals(q).size());
        }
    }
}
