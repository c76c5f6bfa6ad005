// Acceptance gate: runs every promised end-to-end property at its stated
// tolerance (all exact) and prints one PASS/FAIL line per criterion.
// Exits nonzero if anything fails or a timed criterion overruns its budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hibi/divisor.hpp"
#include "hibi/errors.hpp"
#include "hibi/hibi_ring.hpp"
#include "hibi/ideal_lattice.hpp"
#include "hibi/order_polytope.hpp"
#include "hibi/poset.hpp"
#include "hibi/zlinalg.hpp"

using namespace hibi;

namespace {

Int normal_pairing(const std::vector<Int>& m, const CoveringEdge& e) {
    if (e.upper.is_top()) return m[e.lower.index()];
    if (e.lower.is_bot()) return -m[e.upper.index()];
    return m[e.lower.index()] - m[e.upper.index()];
}

std::string poset_label(const Poset& p) {
    std::ostringstream out;
    out << "poset{";
    for (int i = 0; i < p.size(); ++i) out << (i ? "," : "") << p.name_of(i);
    out << "|";
    bool first = true;
    for (const auto& [a, b] : p.covers()) {
        out << (first ? "" : ",") << p.name_of(a) << "<" << p.name_of(b);
        first = false;
    }
    out << "}";
    return out.str();
}

// The class group formula must agree with the Smith normal form cokernel of
// the principal map, exactly and torsion-free, across the whole corpus.
std::string check_class_group_oracle() {
    for (const auto& p : hibi::testing::full_corpus()) {
        auto ck = zlinalg::cl_oracle(p);  // throws OracleMismatch on its own
        if (ck.free_rank != class_group_rank(p) || !ck.torsion.empty())
            return "rank mismatch on " + poset_label(p);
    }
    return "";
}

// Local principality inside the coordinate box [-2,2]^rank must be exactly
// membership in the lattice spanned by the component generator classes.
std::string check_picard_oracle() {
    int checked = 0;
    for (const auto& p : hibi::testing::full_corpus()) {
        if (enumerate_ideals(p).size() > 64) continue;
        zlinalg::pic_oracle(p, 2);
        ++checked;
    }
    if (checked < 200) return "only " + std::to_string(checked) + " posets qualified";
    return "";
}

// Chains are rank one with n+1 ideals; a disjoint union of l chains has
// class group and Picard group both free of rank l.
std::string check_named_families() {
    for (int n = 1; n <= 6; ++n) {
        auto p = chain(n);
        if (class_group_rank(p) != 1) return "chain rank != 1 at n=" + std::to_string(n);
        if (picard_rank(p) != 1) return "chain picard != 1 at n=" + std::to_string(n);
        if (enumerate_ideals(p).size() != static_cast<std::size_t>(n) + 1)
            return "chain ideal count != n+1 at n=" + std::to_string(n);
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i; i + j <= 6; ++j) {
            auto u2 = disjoint_union(chain(i), chain(j));
            if (class_group_rank(u2) != 2 || picard_rank(u2) != 2)
                return "two-chain union rank != 2 at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
            for (int k = j; i + j + k <= 6; ++k) {
                auto u3 = disjoint_union(u2, chain(k));
                if (class_group_rank(u3) != 3 || picard_rank(u3) != 3)
                    return "three-chain union rank != 3 at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")";
            }
        }
    return "";
}

// The 2x2 grid poset: six ideals (five-dimensional embedding), class group
// of rank two, Picard group of rank one, on both the formula and oracle paths.
std::string check_grid_poset() {
    auto p = product(chain(2), chain(2));
    if (enumerate_ideals(p).size() != 6) return "ideal count != 6";
    if (class_group_rank(p) != 2) return "class rank != 2";
    if (picard_rank(p) != 1) return "picard rank != 1";
    auto ck = zlinalg::cl_oracle(p);
    if (ck.free_rank != 2 || !ck.torsion.empty()) return "snf cokernel != Z^2";
    zlinalg::pic_oracle(p, 2);
    return "";
}

// 0 -> Z^P -> Div -> Z^rank -> 0: the reduction annihilates exactly the
// principal lattice and both maps have full rank; reduction is additive.
std::string check_exact_sequence() {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& p : hibi::testing::full_corpus()) {
        AugmentedPoset aug(p);
        auto tree = arborescence(p);
        auto phi_m = zlinalg::phi_matrix(aug);
        auto psi_m = zlinalg::psi_matrix(aug, tree);
        auto zero = psi_m * phi_m;
        for (int i = 0; i < zero.rows(); ++i)
            for (int j = 0; j < zero.cols(); ++j)
                if (zero.at(i, j) != 0) return "psi*phi != 0 on " + poset_label(p);
        if (zlinalg::rank(phi_m) != p.size())
            return "phi not injective on " + poset_label(p);
        if (zlinalg::rank(psi_m) != class_group_rank(p))
            return "psi not surjective on " + poset_label(p);

        auto random_divisor = [&] {
            TorusDivisor d;
            for (const auto& e : aug.covers()) {
                int c = coeff(rng);
                if (c != 0) d.coeffs.emplace(e, c);
            }
            return d;
        };
        for (int rep = 0; rep < 4; ++rep) {
            auto a = random_divisor(), b = random_divisor();
            auto sum = reduce_to_class(aug, tree, add(a, b));
            auto parts = add(TorusDivisor{reduce_to_class(aug, tree, a).coords},
                             TorusDivisor{reduce_to_class(aug, tree, b).coords});
            if (sum.coords != parts.coeffs) return "reduction not additive on " + poset_label(p);
        }
    }
    return "";
}

// The closed-form trivialization (zero on the ideal, component weight off
// it) must solve every local system for every weight vector in {-1,0,1}^l;
// the lone top-edge divisor on the V poset must be rejected at the empty ideal.
std::string check_certificate_recipe() {
    for (const auto& p : hibi::testing::full_corpus()) {
        AugmentedPoset aug(p);
        auto lat = enumerate_ideals(p);
        auto gens = picard_generators(aug);
        int l = static_cast<int>(gens.size());
        std::vector<Int> w(l, Int(-1));
        while (true) {
            TorusDivisor d;
            for (int c = 0; c < l; ++c) d = add(d, scale(gens[c], w[c]));
            for (const auto& ideal : lat.ideals()) {
                auto m = cartier_certificate_by_recipe(p, w, ideal);
                for (const auto& e : incident_facets(aug, ideal))
                    if (normal_pairing(m, e) != d.coeff(e))
                        return "recipe misses a facet on " + poset_label(p);
            }
            int i = 0;
            while (i < l && w[i] == 1) w[i++] = -1;
            if (i == l) break;
            ++w[i];
        }
    }
    auto vee = hibi::testing::vee();
    auto res = is_cartier(vee, divisor_on({HasseVertex::element(1), HasseVertex::top()}));
    if (res.cartier) return "single-branch divisor accepted on the V poset";
    if (!res.obstruction.has_value() || !res.obstruction->members().empty())
        return "V-poset obstruction is not the empty ideal";
    return "";
}

// Vertex-facet incidence matches the boundary rule, the lattice points are
// exactly the vertices, and each facet carries the vertex count of the
// contracted poset.
std::string check_polytope_suite() {
    for (const auto& p : hibi::testing::full_corpus()) {
        auto lat = enumerate_ideals(p);
        AugmentedPoset aug(p);
        auto poly = order_polytope(p);
        std::vector<std::size_t> on_facet(poly.facets().size(), 0);
        for (std::size_t vi = 0; vi < poly.vertices().size(); ++vi) {
            const auto& x = poly.vertices()[vi];
            std::vector<CoveringEdge> tight;
            for (std::size_t fi = 0; fi < poly.facets().size(); ++fi) {
                const auto& f = poly.facets()[fi];
                int lhs = 0;
                for (int i = 0; i < p.size(); ++i) lhs += f.normal[i] * x[i];
                if (lhs < -f.offset) return "vertex outside facet on " + poset_label(p);
                if (lhs == -f.offset) {
                    tight.push_back(f.edge);
                    ++on_facet[fi];
                }
            }
            if (tight != incident_facets(aug, lat.at(vi)))
                return "incidence mismatch on " + poset_label(p);
        }
        if (lat.size() <= 64 && integral_points(poly) != poly.vertices())
            return "lattice points != vertices on " + poset_label(p);
        for (std::size_t fi = 0; fi < poly.facets().size(); ++fi) {
            std::size_t expect =
                p.size() == 1
                    ? 1
                    : enumerate_ideals(contract_covering(p, poly.facets()[fi].edge)).size();
            if (on_facet[fi] != expect)
                return "facet vertex count mismatch on " + poset_label(p);
        }
    }
    return "";
}

// Every straightening relation balances its exponents; chains present no
// relations and a two-element antichain exactly one.
std::string check_hibi_relations() {
    for (const auto& p : hibi::testing::full_corpus())
        for (const auto& rel : hibi_relations(p))
            if (!verify_relation_exponents(rel))
                return "exponent identity fails on " + poset_label(p);
    for (int n = 1; n <= 6; ++n)
        if (!hibi_relations(chain(n)).empty())
            return "chain(" + std::to_string(n) + ") has relations";
    if (hibi_relations(antichain(2)).size() != 1) return "antichain(2) relation count != 1";
    return "";
}

struct Criterion {
    std::string name;
    std::function<std::string()> run;
    long limit_ms;  // 0 = untimed
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"class group formula vs smith normal form (corpus)", check_class_group_oracle, 60000},
        {"picard box oracle, box 2 (corpus, <=64 ideals)", check_picard_oracle, 120000},
        {"chain and chain-union ranks and ideal counts", check_named_families, 0},
        {"2x2 grid poset: ideals 6, class rank 2, picard rank 1", check_grid_poset, 0},
        {"exact sequence and reduction linearity (corpus)", check_exact_sequence, 0},
        {"certificate recipe on all component weights (corpus)", check_certificate_recipe, 0},
        {"polytope incidence, lattice points, contraction (corpus)", check_polytope_suite, 0},
        {"straightening relations balance (corpus)", check_hibi_relations, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const HibiError& e) {
            detail = std::string(e.code_name()) + ": " + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (detail.empty() && c.limit_ms > 0 && ms > c.limit_ms)
            detail = "overran " + std::to_string(c.limit_ms) + " ms budget";
        if (detail.empty()) {
            std::cout << "PASS: " << c.name << " (" << ms << " ms)\n";
        } else {
            std::cout << "FAIL: " << c.name << " (" << ms << " ms) -- " << detail << "\n";
            ++failures;
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
