#pragma once

// Exact arithmetic and dense linear algebra over prime fields F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tubehall {

using Scalar = std::uint32_t;
using Column = std::vector<Scalar>;

/// The ground field F_p. Construction rejects non-primes.
class FieldSpec {
public:
    explicit FieldSpec(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) {
            throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
        }
    }

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar reduce(std::int64_t x) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        auto r = x % p;
        return static_cast<Scalar>(r < 0 ? r + p : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const noexcept {
        Scalar r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Scalar inv(Scalar a) const {
        if (a == 0) throw std::domain_error("FieldSpec: inverse of zero");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    static bool is_prime(std::uint32_t p) noexcept {
        if (p < 2) return false;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
            if (p % d == 0) return false;
        }
        return true;
    }

private:
    std::uint32_t p_;
};

/// Dense row-major matrix with entries in [0, p).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_columns(std::size_t rows, const std::vector<Column>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw std::invalid_argument("Matrix: column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Column column(std::size_t c) const {
        Column v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    bool is_zero() const noexcept {
        for (auto x : data_)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix multiply(const FieldSpec& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    const std::uint64_t p = F.modulus();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) = static_cast<Scalar>((c(i, j) + x * b(k, j)) % p);
            }
        }
    }
    return c;
}

inline Column apply(const FieldSpec& F, const Matrix& a, const Column& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("apply: shape mismatch");
    Column out(a.rows(), 0);
    const std::uint64_t p = F.modulus();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += static_cast<std::uint64_t>(a(i, j)) * v[j];
        out[i] = static_cast<Scalar>(acc % p);
    }
    return out;
}

inline Matrix add(const FieldSpec& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
    return c;
}

inline Matrix subtract(const FieldSpec& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("subtract: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
    return c;
}

inline Matrix scale(const FieldSpec& F, Scalar s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
    return c;
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

// First-nonzero pivoting; pivots are normalized to 1.
inline Echelon row_reduce(const FieldSpec& F, Matrix m) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        }
        const Scalar inv = F.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Scalar f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank(const FieldSpec& F, const Matrix& m) { return row_reduce(F, m).pivots.size(); }

/// Basis of {v : Mv = 0}. Each basis vector is 1 at its own free column and 0 at every other free column.
inline std::vector<Column> kernel_basis(const FieldSpec& F, const Matrix& m) {
    const auto ech = row_reduce(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Column> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Column v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = F.neg(ech.rref(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Free (non-pivot) columns of M, in increasing order; coordinates of a kernel vector in
/// kernel_basis(M) are its entries at these positions.
inline std::vector<std::size_t> free_columns(const FieldSpec& F, const Matrix& m) {
    const auto ech = row_reduce(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

/// A particular solution of Mx = b, or nullopt when the system is inconsistent.
inline std::optional<Column> solve(const FieldSpec& F, const Matrix& m, const Column& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = F.reduce(b[i]);
    }
    const auto ech = row_reduce(F, aug);
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    Column x(m.cols(), 0);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.rref(r, m.cols());
    return x;
}

inline Matrix inverse(const FieldSpec& F, const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto ech = row_reduce(F, aug);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
        throw std::domain_error("inverse: matrix is singular");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.rref(i, n + j);
    return inv;
}

/// Visit every F_p-linear combination of `basis` exactly once, coefficient vectors in
/// lexicographic order (first coefficient most significant). `dim` is the ambient length,
/// needed when the basis is empty.
inline void for_each_in_span(const FieldSpec& F, const std::vector<Column>& basis, std::size_t dim,
                             const std::function<void(const Column&)>& visit) {
    for (const auto& b : basis)
        if (b.size() != dim) throw std::invalid_argument("for_each_in_span: basis length mismatch");
    const std::size_t k = basis.size();
    std::vector<Scalar> coeff(k, 0);
    Column v(dim, 0);
    while (true) {
        visit(v);
        // odometer increment from the least significant coefficient
        std::size_t i = k;
        while (i > 0) {
            --i;
            coeff[i] = F.add(coeff[i], 1);
            for (std::size_t r = 0; r < dim; ++r) v[r] = F.add(v[r], basis[i][r]);
            if (coeff[i] != 0) break;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

inline std::vector<Column> enumerate_space(const FieldSpec& F, const std::vector<Column>& basis,
                                           std::size_t dim) {
    std::vector<Column> out;
    for_each_in_span(F, basis, dim, [&](const Column& v) { out.push_back(v); });
    return out;
}

/// A chosen complement of a subspace W of F^n: `lift` has the complement basis as columns and
/// `project` sends a vector to its complement coordinates (killing W).
struct Complement {
    Matrix lift;
    Matrix project;
};

inline Complement complement_of(const FieldSpec& F, const Matrix& spanning, std::size_t n) {
    if (spanning.rows() != n) throw std::invalid_argument("complement_of: ambient mismatch");
    // Independent columns of the spanning set, then unit vectors to complete a basis.
    Matrix work(n, spanning.cols() + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < spanning.cols(); ++j) work(i, j) = spanning(i, j);
        work(i, spanning.cols() + i) = 1;
    }
    const auto ech = row_reduce(F, work);
    std::vector<std::size_t> sub_cols, comp_cols;
    for (auto c : ech.pivots) (c < spanning.cols() ? sub_cols : comp_cols).push_back(c);
    Matrix basis(n, n);
    std::size_t col = 0;
    for (auto c : sub_cols) {
        for (std::size_t i = 0; i < n; ++i) basis(i, col) = work(i, c);
        ++col;
    }
    for (auto c : comp_cols) {
        for (std::size_t i = 0; i < n; ++i) basis(i, col) = work(i, c);
        ++col;
    }
    const Matrix inv = inverse(F, basis);
    const std::size_t k = comp_cols.size();
    Complement out{Matrix(n, k), Matrix(k, n)};
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) out.lift(i, j) = work(i, comp_cols[j]);
        for (std::size_t i = 0; i < n; ++i) out.project(j, i) = inv(sub_cols.size() + j, i);
    }
    return out;
}

/// Column basis with a left inverse, for reading coordinates of vectors in the column span.
struct Subspace {
    Matrix basis;
    Matrix coords;  // coords * basis = identity
};

inline Subspace subspace_with_coords(const FieldSpec& F, const Matrix& basis) {
    // Rows of `basis` that are independent give an invertible square block.
    Matrix t(basis.cols(), basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) t(j, i) = basis(i, j);
    const auto ech = row_reduce(F, t);
    if (ech.pivots.size() != basis.cols()) throw std::invalid_argument("subspace_with_coords: columns dependent");
    const std::size_t k = basis.cols();
    Matrix block(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < k; ++j) block(r, j) = basis(ech.pivots[r], j);
    const Matrix binv = inverse(F, block);
    Matrix coords(k, basis.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < k; ++r) coords(i, ech.pivots[r]) = binv(i, r);
    return {basis, coords};
}

}  // namespace tubehall
