#include "hibi/zlinalg.hpp"

#include <algorithm>
#include <string>

namespace hibi::zlinalg {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Quotient rounded toward minus infinity; used to put entries in [0, pivot).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

struct RowOps {
    IntMatrix* S;
    IntMatrix* U;  // accumulates the same row operations

    void swap(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < S->cols(); ++j) std::swap(S->at(a, j), S->at(b, j));
        for (int j = 0; j < U->cols(); ++j) std::swap(U->at(a, j), U->at(b, j));
    }
    void axpy(int dst, int src, const Int& k) {  // row_dst += k * row_src
        if (k == 0) return;
        for (int j = 0; j < S->cols(); ++j) S->at(dst, j) += k * S->at(src, j);
        for (int j = 0; j < U->cols(); ++j) U->at(dst, j) += k * U->at(src, j);
    }
    void negate(int r) {
        for (int j = 0; j < S->cols(); ++j) S->at(r, j) = -S->at(r, j);
        for (int j = 0; j < U->cols(); ++j) U->at(r, j) = -U->at(r, j);
    }
};

struct ColOps {
    IntMatrix* S;
    IntMatrix* V;  // accumulates the same column operations

    void swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < S->rows(); ++i) std::swap(S->at(i, a), S->at(i, b));
        for (int i = 0; i < V->rows(); ++i) std::swap(V->at(i, a), V->at(i, b));
    }
    void axpy(int dst, int src, const Int& k) {  // col_dst += k * col_src
        if (k == 0) return;
        for (int i = 0; i < S->rows(); ++i) S->at(i, dst) += k * S->at(i, src);
        for (int i = 0; i < V->rows(); ++i) V->at(i, dst) += k * V->at(i, src);
    }
    void negate(int c) {
        for (int i = 0; i < S->rows(); ++i) S->at(i, c) = -S->at(i, c);
        for (int i = 0; i < V->rows(); ++i) V->at(i, c) = -V->at(i, c);
    }
};

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

IntMatrix IntMatrix::identity(int k) {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != static_cast<int>(x.size()))
        fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
    std::vector<Int> out(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

SNFResult smith_normal_form(const IntMatrix& a) {
    SNFResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& S = res.S;
    RowOps rows{&S, &res.U};
    ColOps cols{&S, &res.V};
    int bound = std::min(a.rows(), a.cols());

    for (int t = 0; t < bound; ++t) {
        // Deterministic pivot: smallest nonzero |entry| of the working
        // submatrix, ties broken row-major.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j) {
                if (S.at(i, j) == 0) continue;
                Int v = abs_int(S.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        rows.swap(t, pi);
        cols.swap(t, pj);

        while (true) {
            // Clear column t; a nonzero remainder becomes the smaller pivot.
            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (S.at(i, t) == 0) continue;
                rows.axpy(i, t, -Int(S.at(i, t) / S.at(t, t)));
                if (S.at(i, t) != 0) {
                    rows.swap(t, i);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // Clear row t; a column swap drags entries back into column t.
            for (int j = t + 1; j < a.cols(); ++j) {
                if (S.at(t, j) == 0) continue;
                cols.axpy(j, t, -Int(S.at(t, j) / S.at(t, t)));
                if (S.at(t, j) != 0) {
                    cols.swap(t, j);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the submatrix for the chain
            // d_1 | d_2 | ...; fold an offending row in and keep reducing.
            bool fixed = true;
            for (int i = t + 1; i < a.rows() && fixed; ++i)
                for (int j = t + 1; j < a.cols() && fixed; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        rows.axpy(t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (S.at(t, t) < 0) rows.negate(t);
    }

    if (res.U * a * res.V != S) fail(errc::internal_error, "smith normal form self-check failed");
    return res;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    auto snf = smith_normal_form(a);
    std::vector<Int> out;
    for (int t = 0; t < std::min(a.rows(), a.cols()); ++t)
        if (snf.S.at(t, t) != 0) out.push_back(snf.S.at(t, t));
    return out;
}

int rank(const IntMatrix& a) { return static_cast<int>(invariant_factors(a).size()); }

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail(errc::dimension_mismatch, "determinant needs a square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n && swap_row < 0; ++i)
                if (m.at(i, k) != 0) swap_row = i;
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        // Bareiss update: exact division by the previous pivot.
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

Cokernel cokernel(const IntMatrix& a) {
    Cokernel out;
    auto factors = invariant_factors(a);
    out.free_rank = a.rows() - static_cast<int>(factors.size());
    for (const auto& d : factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

HNFResult hermite_normal_form(const IntMatrix& a) {
    HNFResult res{a, IntMatrix::identity(a.cols()), {}};
    IntMatrix& H = res.H;
    ColOps cols{&H, &res.V};
    int c = 0;

    for (int r = 0; r < a.rows() && c < a.cols(); ++r) {
        // Fold the gcd of row r (columns c..) into column c.
        while (true) {
            int jmin = -1;
            Int best;
            for (int j = c; j < a.cols(); ++j) {
                if (H.at(r, j) == 0) continue;
                Int v = abs_int(H.at(r, j));
                if (jmin < 0 || v < best) {
                    best = v;
                    jmin = j;
                }
            }
            if (jmin < 0) break;
            cols.swap(c, jmin);
            bool any = false;
            for (int j = c + 1; j < a.cols(); ++j) {
                if (H.at(r, j) == 0) continue;
                cols.axpy(j, c, -Int(H.at(r, j) / H.at(r, c)));
                if (H.at(r, j) != 0) any = true;
            }
            if (!any) break;
        }
        if (H.at(r, c) == 0) continue;  // no pivot in this row
        if (H.at(r, c) < 0) cols.negate(c);
        // Reduce the entries left of the pivot into [0, pivot).
        for (int j = 0; j < c; ++j) {
            Int q = floor_div(H.at(r, j), H.at(r, c));
            cols.axpy(j, c, -q);
        }
        res.pivots.emplace_back(r, c);
        ++c;
    }
    return res;
}

std::optional<std::vector<Int>> solve_with_hnf(const HNFResult& hnf, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != hnf.H.rows())
        fail(errc::dimension_mismatch, "right-hand side length mismatch");
    std::vector<Int> z(hnf.H.cols());
    for (const auto& [r, c] : hnf.pivots) {
        Int residual = b[r];
        for (int j = 0; j < c; ++j) residual -= hnf.H.at(r, j) * z[j];
        if (residual % hnf.H.at(r, c) != 0) return std::nullopt;
        z[c] = residual / hnf.H.at(r, c);
    }
    if (hnf.H * z != b) return std::nullopt;  // inconsistent non-pivot rows
    return hnf.V * z;
}

std::optional<std::vector<Int>> integer_solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(errc::dimension_mismatch, "right-hand side length mismatch");
    return solve_with_hnf(hermite_normal_form(a), b);
}

IntMatrix phi_matrix(const AugmentedPoset& p) {
    int n = p.base().size();
    IntMatrix a(static_cast<int>(p.covers().size()), n);
    for (int r = 0; r < a.rows(); ++r) {
        const CoveringEdge& e = p.covers()[r];
        if (e.upper.is_top()) {
            a.at(r, e.lower.index()) = 1;
        } else if (e.lower.is_bot()) {
            a.at(r, e.upper.index()) = -1;
        } else {
            a.at(r, e.lower.index()) = 1;
            a.at(r, e.upper.index()) = -1;
        }
    }
    return a;
}

IntMatrix psi_matrix(const AugmentedPoset& p, const Arborescence& t) {
    auto nontree = class_generators(p, t);
    IntMatrix a(static_cast<int>(nontree.size()), static_cast<int>(p.covers().size()));
    for (int j = 0; j < a.cols(); ++j) {
        auto cls = reduce_to_class(p, t, divisor_on(p.covers()[j]));
        for (int i = 0; i < a.rows(); ++i) {
            auto it = cls.coords.find(nontree[i]);
            if (it != cls.coords.end()) a.at(i, j) = it->second;
        }
    }
    return a;
}

Cokernel cl_oracle(const Poset& p) {
    AugmentedPoset aug(p);
    Cokernel ck = cokernel(phi_matrix(aug));
    int formula = class_group_rank(p);
    if (ck.free_rank != formula)
        fail(errc::oracle_mismatch, "class group rank " + std::to_string(formula) +
                                        " disagrees with cokernel free rank " +
                                        std::to_string(ck.free_rank));
    if (!ck.torsion.empty())
        fail(errc::oracle_mismatch, "class group should be torsion-free");
    return ck;
}

bool pic_oracle(const Poset& p, int box, std::size_t cap) {
    if (box < 1) fail(errc::parse_error, "box must be at least 1");
    AugmentedPoset aug(p);
    auto lattice = enumerate_ideals(p, cap);
    Arborescence tree = arborescence(p);
    auto nontree = class_generators(aug, tree);
    int r = static_cast<int>(nontree.size());
    int l = picard_rank(p);

    // Component generator classes, one column per Hasse component.
    IntMatrix gen(r, l);
    auto gens = picard_generators(aug);
    for (int c = 0; c < l; ++c) {
        auto cls = reduce_to_class(aug, tree, gens[c]);
        for (int i = 0; i < r; ++i) {
            auto it = cls.coords.find(nontree[i]);
            if (it != cls.coords.end()) gen.at(i, c) = it->second;
        }
    }
    if (rank(gen) != l)
        fail(errc::oracle_mismatch, "component generator classes are not independent");

    std::size_t side = 2 * static_cast<std::size_t>(box) + 1, total = 1;
    for (int i = 0; i < r; ++i) {
        if (total > cap / side) fail(errc::cap_exceeded, "class box exceeds the cap");
        total *= side;
    }

    auto hnf = hermite_normal_form(gen);
    std::vector<Int> coords(r, Int(-box));
    while (true) {
        TorusDivisor rep;
        for (int i = 0; i < r; ++i)
            if (coords[i] != 0) rep.coeffs.emplace(nontree[i], coords[i]);
        bool cartier = is_cartier(aug, lattice, rep).cartier;
        bool spanned = solve_with_hnf(hnf, coords).has_value();
        if (cartier != spanned)
            fail(errc::oracle_mismatch,
                 std::string("local principality disagrees with the generator lattice ") +
                     "on a class in the box");
        int i = 0;
        while (i < r && coords[i] == box) coords[i++] = -box;
        if (i == r) break;
        ++coords[i];
    }
    return true;
}

}  // namespace hibi::zlinalg
