// Dense matrices over F_p: row reduction with transformation matrix, kernel
// bases, linear solves, and an incremental row-space accumulator used for
// quotient bases and minimal-generator searches.
#ifndef FOURPOINTS_MAT_HPP
#define FOURPOINTS_MAT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fourpoints/gf.hpp"

namespace fourpoints {

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Fp> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != rows_ * cols_) throw std::invalid_argument("Mat: entry count mismatch");
    }

    static Mat identity(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fp& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Fp operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const Fp& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (a_[k] != o.a_[k]) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    friend Mat operator*(const Mat& a, const Mat& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
        Mat c(a.rows_, b.cols_);
        const std::uint64_t p = field_prime();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t aik = a(i, k).raw();
                if (!aik) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    std::uint64_t v = c(i, j).raw() + aik * b(k, j).raw() % p;
                    if (v >= p) v -= p;
                    c(i, j) = Fp::from_raw(static_cast<std::uint32_t>(v));
                }
            }
        return c;
    }

    friend Mat operator+(const Mat& a, const Mat& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat::add: shape mismatch");
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat::sub: shape mismatch");
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
        return c;
    }
    friend Mat operator*(Fp s, const Mat& a)
    {
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = s * a.a_[k];
        return c;
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Fp> column(std::size_t j) const
    {
        std::vector<Fp> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<Fp> row(std::size_t i) const
    {
        std::vector<Fp> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    std::vector<Fp> apply(const std::vector<Fp>& x) const
    {
        if (x.size() != cols_) throw std::invalid_argument("Mat::apply: shape mismatch");
        std::vector<Fp> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Fp s(0);
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    static Mat from_columns(std::size_t dim, const std::vector<std::vector<Fp>>& cols)
    {
        Mat m(dim, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != dim) throw std::invalid_argument("Mat::from_columns: length mismatch");
            for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Fp> a_;
};

struct RrefResult {
    Mat R;                        // reduced row-echelon form, R = T * A
    Mat T;                        // invertible record of the row operations
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

inline RrefResult rref(const Mat& A)
{
    RrefResult out;
    out.R = A;
    out.T = Mat::identity(A.rows());
    Mat& R = out.R;
    Mat& T = out.T;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t piv = r;
        while (piv < A.rows() && R(piv, c).is_zero()) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols() || j < A.rows(); ++j) {
                if (j < A.cols()) std::swap(R(r, j), R(piv, j));
                if (j < A.rows()) std::swap(T(r, j), T(piv, j));
            }
        const Fp inv = R(r, c).inv();
        for (std::size_t j = c; j < A.cols(); ++j) R(r, j) *= inv;
        for (std::size_t j = 0; j < A.rows(); ++j) T(r, j) *= inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r) continue;
            const Fp f = R(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < A.cols(); ++j) R(i, j) -= f * R(r, j);
            for (std::size_t j = 0; j < A.rows(); ++j) T(i, j) -= f * T(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

inline std::size_t rank(const Mat& A)
{
    // Forward elimination only; cheaper than full rref when T is not needed.
    Mat R = A;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
        std::size_t piv = r;
        while (piv < R.rows() && R(piv, c).is_zero()) ++piv;
        if (piv == R.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < R.cols(); ++j) std::swap(R(r, j), R(piv, j));
        const Fp inv = R(r, c).inv();
        for (std::size_t i = piv + 1 > r + 1 ? piv + 1 : r + 1; i < R.rows(); ++i) {
            const Fp f = R(i, c);
            if (f.is_zero()) continue;
            const Fp fi = f * inv;
            for (std::size_t j = c; j < R.cols(); ++j) R(i, j) -= fi * R(r, j);
        }
        ++r;
    }
    return r;
}

/// Columns span ker(A); column count = cols(A) - rank(A).
inline Mat kernel_basis(const Mat& A)
{
    RrefResult rr = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < A.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(A.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        K(f, k) = Fp(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            K(rr.pivots[r], k) = -rr.R(r, f);
    }
    return K;
}

/// One solution of A x = b, or nullopt when b is outside the column span.
inline std::optional<std::vector<Fp>> solve(const Mat& A, const std::vector<Fp>& b)
{
    if (b.size() != A.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RrefResult rr = rref(A);
    std::vector<Fp> tb = rr.T.apply(b);
    for (std::size_t i = rr.rank; i < A.rows(); ++i)
        if (!tb[i].is_zero()) return std::nullopt;
    std::vector<Fp> x(A.cols(), Fp(0));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        Fp v = tb[r];
        // subtract contributions of free columns (they stay zero), so only
        // the pivot entry remains
        x[rr.pivots[r]] = v;
    }
    return x;
}

inline std::optional<Mat> inverse(const Mat& A)
{
    if (A.rows() != A.cols()) return std::nullopt;
    RrefResult rr = rref(A);
    if (rr.rank != A.rows()) return std::nullopt;
    return rr.T;
}

/// Row space accumulated incrementally in reduced echelon form.  Supports
/// membership, canonical coset representatives, and quotient coordinates
/// relative to the non-pivot standard basis vectors.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduce v modulo the current space (canonical coset representative).
    std::vector<Fp> reduce(std::vector<Fp> v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Fp f = v[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] -= f * rows_[r][j];
        }
        return v;
    }

    bool contains(const std::vector<Fp>& v) const
    {
        std::vector<Fp> r = reduce(v);
        for (const Fp& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Insert v; returns true when the dimension grew.
    bool insert(std::vector<Fp> v)
    {
        if (v.size() != n_) throw std::invalid_argument("Subspace::insert: length mismatch");
        v = reduce(std::move(v));
        std::size_t piv = 0;
        while (piv < n_ && v[piv].is_zero()) ++piv;
        if (piv == n_) return false;
        const Fp inv = v[piv].inv();
        for (std::size_t j = 0; j < n_; ++j) v[j] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Fp f = rows_[r][piv];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) rows_[r][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    void insert_columns(const Mat& m)
    {
        for (std::size_t j = 0; j < m.cols(); ++j) insert(m.column(j));
    }

    /// Indices of standard basis vectors spanning a complement.
    std::vector<std::size_t> complement() const
    {
        std::vector<bool> is_pivot(n_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (!is_pivot[j]) out.push_back(j);
        return out;
    }

    /// Coordinates of v + (this) in the basis {e_j : j non-pivot}.
    std::vector<Fp> quotient_coords(const std::vector<Fp>& v) const
    {
        std::vector<Fp> r = reduce(v);
        std::vector<Fp> out;
        for (std::size_t j : complement()) out.push_back(r[j]);
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::vector<Fp>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace fourpoints

#endif
