#pragma once

// Dense exact linear algebra over Q(sqrt(d)).  Dimensions in this library are
// tiny (<= 12), so everything is straightforward Gaussian elimination on
// value-semantic matrices.

#include <hermlie/scalar.hpp>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hermlie {

class Vector {
  public:
    Vector() = default;
    explicit Vector(int n) : c_(n) {}
    Vector(std::initializer_list<Scalar> vals) : c_(vals) {}
    static Vector unit(int n, int i) {
        Vector v(n);
        v[i] = Scalar(1);
        return v;
    }

    int size() const { return static_cast<int>(c_.size()); }
    Scalar& operator[](int i) { return c_.at(i); }
    const Scalar& operator[](int i) const { return c_.at(i); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        check_same(a, b);
        Vector r(a.size());
        for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Vector operator-(const Vector& a, const Vector& b) {
        check_same(a, b);
        Vector r(a.size());
        for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend Vector operator*(const Scalar& s, const Vector& v) {
        Vector r(v.size());
        for (int i = 0; i < v.size(); ++i) r[i] = s * v[i];
        return r;
    }
    Vector operator-() const { return Scalar(-1) * *this; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

    /// Euclidean-style pairing sum_i a_i b_i (no metric).
    friend Scalar dot(const Vector& a, const Vector& b) {
        check_same(a, b);
        Scalar s(0);
        for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

  private:
    static void check_same(const Vector& a, const Vector& b) {
        if (a.size() != b.size()) throw std::invalid_argument("Vector: size mismatch");
    }
    std::vector<Scalar> c_;
};

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return a_.at(r * cols_ + c); }
    const Scalar& operator()(int r, int c) const { return a_.at(r * cols_ + c); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    Vector row(int r) const {
        Vector v(cols_);
        for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
        return v;
    }
    Vector col(int c) const {
        Vector v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_row(int r, const Vector& v) {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: row size mismatch");
        for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }
    void set_col(int c, const Vector& v) {
        if (v.size() != rows_) throw std::invalid_argument("Matrix: col size mismatch");
        for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Vector operator*(const Matrix& m, const Vector& v) {
        if (m.cols_ != v.size()) throw std::invalid_argument("Matrix: vector shape mismatch");
        Vector r(m.rows_);
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
        return r;
    }
    Matrix operator-() const { return Scalar(-1) * *this; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Scalar trace() const {
        require_square();
        Scalar t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Scalar inv = Scalar(1) / (*this)(r, c);
            for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                Scalar f = (*this)(i, c);
                for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref_in_place().size());
    }

    Scalar det() const {
        require_square();
        Matrix m = *this;
        Scalar d(1);
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int i = c; i < rows_; ++i)
                if (!m(i, c).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Scalar(0);
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            Scalar inv = Scalar(1) / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                Scalar f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    }

    std::optional<Matrix> inverse() const {
        require_square();
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = Scalar(1);
        }
        auto pivots = aug.rref_in_place();
        if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
        for (int k = 0; k < rows_; ++k)
            if (pivots[k] != k) return std::nullopt;
        Matrix inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// Basis of the null space {x : Ax = 0}.
    std::vector<Vector> kernel() const {
        Matrix m = *this;
        auto pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<Vector> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            Vector v(cols_);
            v[free] = Scalar(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
            basis.push_back(v);
        }
        return basis;
    }

    /// One solution of Ax = b, if consistent.
    std::optional<Vector> solve(const Vector& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Matrix: solve shape mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref_in_place();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
        Vector x(cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), cols_);
        return x;
    }

    Matrix pow(int e) const {
        require_square();
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    bool is_nilpotent() const {
        require_square();
        return pow(rows_).is_zero();
    }

    /// Characteristic polynomial coefficients [c_0 .. c_n] with
    /// det(tI - A) = t^n + c_{n-1} t^{n-1} + ... + c_0
    /// (computed by the Faddeev–LeVerrier recurrence; exact over the field).
    std::vector<Scalar> char_poly() const {
        require_square();
        int n = rows_;
        std::vector<Scalar> c(n + 1);
        c[n] = Scalar(1);
        Matrix am = Matrix::zero(n, n);  // A * M_{k-1}
        for (int k = 1; k <= n; ++k) {
            Matrix m = am;  // M_k = A M_{k-1} + c_{n-k+1} I
            for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
            am = (*this) * m;
            c[n - k] = -am.trace() / Scalar(k);
        }
        return c;
    }

  private:
    void require_square() const {
        if (!is_square()) throw std::invalid_argument("Matrix: square matrix required");
    }
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace hermlie
