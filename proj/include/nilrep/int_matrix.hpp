#pragma once

#include "nilrep/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nilrep {

// Dense exact integer matrix, row-major. All normal-form and congruence
// machinery below is deterministic: equal lattices give equal bases.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMatrix& o) const = default;

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::vector<Int> row(std::size_t i) const;
    bool row_is_zero(std::size_t i) const;
    bool is_zero() const;
    std::string str() const;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination), square input.
Int determinant(const IntMatrix& m);

// Row-style Hermite normal form: echelon with zero rows at the bottom,
// pivots positive, entries above each pivot reduced into [0, pivot).
// Same shape as the input; the row span is preserved.
IntMatrix hnf(const IntMatrix& m);

// Nonzero rows of hnf(m): a canonical basis of the row lattice.
IntMatrix hnf_rows(const IntMatrix& m);

struct SnfResult {
    std::vector<Int> d;   // invariant factors, d[i] | d[i+1], zeros trailing
    IntMatrix u, v;       // unimodular, u*m*v = diag(d)
    IntMatrix u_inv, v_inv;
};

// Smith normal form via elementary row/column reduction with minimal
// absolute-value pivot selection. Adequate at desk scale.
SnfResult snf(const IntMatrix& m);

// Basis of the saturation {x : q*x in rowspan(m) for some q >= 1},
// returned as hnf rows (rank many).
IntMatrix saturate(const IntMatrix& m);

// Basis (hnf rows) of {x : a*x == 0 (mod moduli[i]) componentwise}.
// moduli[i] == 0 means the i-th congruence is an exact equation.
IntMatrix solve_congruence(const IntMatrix& a, const std::vector<Int>& moduli);

// Basis (hnf rows) of the integer kernel {x : m*x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Basis (hnf rows) of rowspan(b1) ∩ rowspan(b2) in the common ambient.
IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2);

// Does x lie in the row lattice of basis? If so, optionally the (unique
// up to basis) coefficients over hnf_rows(basis).
bool in_lattice(const IntMatrix& basis, const std::vector<Int>& x,
                std::vector<Int>* coeffs = nullptr);

// Least k >= 1 with k*x in the row lattice; 0 when x is not even in the
// rational span.
Int min_multiple_in_lattice(const IntMatrix& basis, const std::vector<Int>& x);

} // namespace nilrep
