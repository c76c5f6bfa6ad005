#pragma once

/// Exact integer linear algebra used as an independent cross-check of the
/// combinatorial divisor computations: Smith normal form for cokernels,
/// Hermite normal form for lattice membership, and the two oracles that
/// confront the closed-form class group / Picard group answers with a
/// brute-force matrix route.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hibi/divisor.hpp"
#include "hibi/numeric.hpp"
#include "hibi/poset.hpp"

namespace hibi::zlinalg {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);

/// U * A * V = S with U, V unimodular and S diagonal, nonnegative, each
/// entry dividing the next. Pivot choice (smallest |entry|, then row-major)
/// makes the run deterministic.
struct SNFResult {
    IntMatrix U, S, V;
};

SNFResult smith_normal_form(const IntMatrix& a);
std::vector<Int> invariant_factors(const IntMatrix& a);  // nonzero diagonal of S
int rank(const IntMatrix& a);
Int determinant(const IntMatrix& a);  // Bareiss, exact; square input only

struct Cokernel {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order

    bool operator==(const Cokernel&) const = default;
};

/// Cokernel of the column space: Z^rows / im(A).
Cokernel cokernel(const IntMatrix& a);

/// Column-style Hermite normal form: A * V = H with V unimodular, H in
/// column echelon shape with positive pivots and reduced entries left of
/// each pivot. pivots lists the (row, col) positions.
struct HNFResult {
    IntMatrix H, V;
    std::vector<std::pair<int, int>> pivots;
};

HNFResult hermite_normal_form(const IntMatrix& a);

std::optional<std::vector<Int>> solve_with_hnf(const HNFResult& hnf, const std::vector<Int>& b);
/// Integer solution of A x = b, if any; throws DimensionMismatch.
std::optional<std::vector<Int>> integer_solve(const IntMatrix& a, const std::vector<Int>& b);

/// Matrix of phi : Z^P -> Z^{C(P^)}; rows follow the canonical covering
/// order, row e is the facet normal u_e.
IntMatrix phi_matrix(const AugmentedPoset& p);

/// Matrix of the class-coordinate reduction on prime-divisor basis vectors:
/// rows are the non-tree edges, columns all covering edges.
IntMatrix psi_matrix(const AugmentedPoset& p, const Arborescence& t);

/// Confronts the closed-form class group (free of rank |C(P^)| - |P|) with
/// the Smith normal form of the cokernel of phi. Returns the cokernel;
/// throws OracleMismatch on disagreement.
Cokernel cl_oracle(const Poset& p);

/// Brute-force check of the Picard description: over every class-coordinate
/// vector in [-box, box]^rank, local principality of the canonical
/// representative must agree with membership in the lattice spanned by the
/// component generators' classes. Throws OracleMismatch on any mismatch,
/// CapExceeded when the box is larger than cap. Returns true.
bool pic_oracle(const Poset& p, int box = 2, std::size_t cap = kDefaultCap);

}  // namespace hibi::zlinalg
