#include "nilrep/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nilrep {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                            a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

bool IntMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw DimensionError("mat_mul: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw DimensionError("determinant: not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;  // exact
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t rows = w.rows, cols = w.cols;
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& t) {
        for (std::size_t j = 0; j < cols; ++j) w(dst, j) += t * w(src, j);
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // Euclid on the column below r until a single nonzero remains.
        for (;;) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (w(i, col) != 0 && (piv == rows || abs(w(i, col)) < abs(w(piv, col)))) piv = i;
            if (piv == rows) break;  // column clear below r
            if (piv != r)
                for (std::size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(piv, j));
            bool again = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (w(i, col) == 0) continue;
                Int q = w(i, col) / w(r, col);  // truncated; iterate to finish
                row_add(i, r, -q);
                if (w(i, col) != 0) again = true;
            }
            if (!again) break;
        }
        if (w(r, col) == 0) continue;
        if (w(r, col) < 0)
            for (std::size_t j = 0; j < cols; ++j) w(r, j) = -w(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floordiv(w(i, col), w(r, col));
            if (q != 0) row_add(i, r, -q);
        }
        ++r;
    }
    return w;
}

IntMatrix hnf_rows(const IntMatrix& m) {
    IntMatrix h = hnf(m);
    std::size_t rank = 0;
    while (rank < h.rows && !h.row_is_zero(rank)) ++rank;
    IntMatrix b(rank, h.cols);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < h.cols; ++j) b(i, j) = h(i, j);
    return b;
}

namespace {

struct SnfWork {
    IntMatrix a, u, v, u_inv, v_inv;

    explicit SnfWork(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows)), v(IntMatrix::identity(m.cols)),
          u_inv(IntMatrix::identity(m.rows)), v_inv(IntMatrix::identity(m.cols)) {}

    void row_add(std::size_t i, std::size_t j, const Int& t) {
        for (std::size_t k = 0; k < a.cols; ++k) a(i, k) += t * a(j, k);
        for (std::size_t k = 0; k < u.cols; ++k) u(i, k) += t * u(j, k);
        for (std::size_t k = 0; k < u_inv.rows; ++k) u_inv(k, j) -= t * u_inv(k, i);
    }
    void col_add(std::size_t i, std::size_t j, const Int& t) {  // col i += t*col j
        for (std::size_t k = 0; k < a.rows; ++k) a(k, i) += t * a(k, j);
        for (std::size_t k = 0; k < v.rows; ++k) v(k, i) += t * v(k, j);
        for (std::size_t k = 0; k < v_inv.cols; ++k) v_inv(j, k) -= t * v_inv(i, k);
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.cols; ++k) std::swap(u(i, k), u(j, k));
        for (std::size_t k = 0; k < u_inv.rows; ++k) std::swap(u_inv(k, i), u_inv(k, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < v.rows; ++k) std::swap(v(k, i), v(k, j));
        for (std::size_t k = 0; k < v_inv.cols; ++k) std::swap(v_inv(i, k), v_inv(j, k));
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < a.cols; ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
        for (std::size_t k = 0; k < u_inv.rows; ++k) u_inv(k, i) = -u_inv(k, i);
    }

    void diagonalize() {
        std::size_t t = 0;
        const std::size_t n = std::min(a.rows, a.cols);
        while (t < n) {
            // minimal nonzero |entry| in the trailing block
            std::size_t pi = a.rows, pj = a.cols;
            for (std::size_t i = t; i < a.rows; ++i)
                for (std::size_t j = t; j < a.cols; ++j)
                    if (a(i, j) != 0 &&
                        (pi == a.rows || abs(a(i, j)) < abs(a(pi, pj)))) { pi = i; pj = j; }
            if (pi == a.rows) break;
            row_swap(t, pi);
            col_swap(t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < a.rows; ++i) {
                if (a(i, t) == 0) continue;
                row_add(i, t, -(a(i, t) / a(t, t)));
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < a.cols; ++j) {
                if (a(t, j) == 0) continue;
                col_add(j, t, -(a(t, j) / a(t, t)));
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // smaller remainders appeared; repick pivot
            if (a(t, t) < 0) row_negate(t);
            ++t;
        }
    }
};

} // namespace

SnfResult snf(const IntMatrix& m) {
    SnfWork w(m);
    const std::size_t n = std::min(m.rows, m.cols);
    for (;;) {
        w.diagonalize();
        bool fixed = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Int& di = w.a(i, i);
            const Int& dj = w.a(i + 1, i + 1);
            if (di != 0 && dj % di != 0) {
                w.col_add(i, i + 1, 1);  // breaks diagonality; re-run
                fixed = false;
                break;
            }
        }
        if (fixed) break;
    }
    SnfResult r;
    r.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.d[i] = w.a(i, i);
    r.u = std::move(w.u);
    r.v = std::move(w.v);
    r.u_inv = std::move(w.u_inv);
    r.v_inv = std::move(w.v_inv);
    return r;
}

IntMatrix saturate(const IntMatrix& m) {
    SnfResult s = snf(m);
    std::size_t rank = 0;
    for (const Int& d : s.d)
        if (d != 0) ++rank;
    // rowspan(m) = rowspan(diag(d) * v_inv); dropping the d's saturates.
    IntMatrix b(rank, m.cols);
    std::size_t at = 0;
    for (std::size_t i = 0; i < s.d.size(); ++i) {
        if (s.d[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) b(at, j) = s.v_inv(i, j);
        ++at;
    }
    return hnf_rows(b);
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult s = snf(m);
    std::size_t rank = 0;
    for (const Int& d : s.d)
        if (d != 0) ++rank;
    IntMatrix b(m.cols - rank, m.cols);
    for (std::size_t k = rank; k < m.cols; ++k)
        for (std::size_t j = 0; j < m.cols; ++j) b(k - rank, j) = s.v(j, k);
    return hnf_rows(b);
}

IntMatrix solve_congruence(const IntMatrix& a, const std::vector<Int>& moduli) {
    if (moduli.size() != a.rows) throw DimensionError("solve_congruence: moduli/rows mismatch");
    for (const Int& m : moduli)
        if (m < 0) throw DomainError("solve_congruence: negative modulus");
    // x solves  a*x ≡ 0 (mod m)  iff  (x, y) is in the kernel of [a | -diag(m)].
    IntMatrix big(a.rows, a.cols + a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) big(i, j) = a(i, j);
        big(i, a.cols + i) = -moduli[i];
    }
    IntMatrix ker = kernel_basis(big);
    IntMatrix proj(ker.rows, a.cols);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) proj(i, j) = ker(i, j);
    return hnf_rows(proj);
}

IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2) {
    if (b1.cols != b2.cols) throw DimensionError("lattice_intersection: ambient mismatch");
    const std::size_t c = b1.cols;
    // alpha*b1 = beta*b2  <=>  (alpha, beta) in kernel of [b1^T | -b2^T].
    IntMatrix big(c, b1.rows + b2.rows);
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t i = 0; i < b1.rows; ++i) big(j, i) = b1(i, j);
        for (std::size_t i = 0; i < b2.rows; ++i) big(j, b1.rows + i) = -b2(i, j);
    }
    IntMatrix ker = kernel_basis(big);
    IntMatrix out(ker.rows, c);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t k = 0; k < b1.rows; ++k) {
            if (ker(i, k) == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out(i, j) += ker(i, k) * b1(k, j);
        }
    return hnf_rows(out);
}

bool in_lattice(const IntMatrix& basis, const std::vector<Int>& x, std::vector<Int>* coeffs) {
    IntMatrix b = hnf_rows(basis);
    if (x.size() != b.cols) throw DimensionError("in_lattice: ambient mismatch");
    std::vector<Int> rem = x;
    std::vector<Int> cf(b.rows);
    for (std::size_t i = 0; i < b.rows; ++i) {
        std::size_t p = 0;
        while (p < b.cols && b(i, p) == 0) ++p;
        if (rem[p] % b(i, p) != 0) {
            // not expressible at this pivot; any earlier nonzero is caught below
            return false;
        }
        cf[i] = rem[p] / b(i, p);
        for (std::size_t j = 0; j < b.cols; ++j) rem[j] -= cf[i] * b(i, j);
    }
    for (const Int& r : rem)
        if (r != 0) return false;
    if (coeffs) *coeffs = cf;
    return true;
}

Int min_multiple_in_lattice(const IntMatrix& basis, const std::vector<Int>& x) {
    IntMatrix b = hnf_rows(basis);
    if (x.size() != b.cols) throw DimensionError("min_multiple_in_lattice: ambient mismatch");
    std::vector<Rat> rem(x.begin(), x.end());
    std::vector<Rat> cf(b.rows);
    for (std::size_t i = 0; i < b.rows; ++i) {
        std::size_t p = 0;
        while (p < b.cols && b(i, p) == 0) ++p;
        cf[i] = rem[p] / Rat(b(i, p));
        for (std::size_t j = 0; j < b.cols; ++j) rem[j] -= cf[i] * Rat(b(i, j));
    }
    for (const Rat& r : rem)
        if (r != 0) return 0;  // outside the rational span
    Int k = 1;
    for (const Rat& c : cf) k = lcm(k, Int(boost::multiprecision::denominator(c)));
    return k;
}

} // namespace nilrep
