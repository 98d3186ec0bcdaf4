#pragma once

// Linear subspaces of the coordinate space, held in reduced row echelon form
// so that equal subspaces compare equal componentwise.

#include <hermlie/linalg.hpp>

#include <stdexcept>
#include <vector>

namespace hermlie {

class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(int ambient, const std::vector<Vector>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Matrix m(static_cast<int>(vectors.size()), ambient);
        for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
            if (vectors[i].size() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
            m.set_row(i, vectors[i]);
        }
        auto pivots = m.rref_in_place();
        Matrix basis(static_cast<int>(pivots.size()), ambient);
        for (int i = 0; i < basis.rows(); ++i) basis.set_row(i, m.row(i));
        s.basis_ = basis;
        return s;
    }

    static Subspace full(int ambient) {
        std::vector<Vector> e;
        for (int i = 0; i < ambient; ++i) e.push_back(Vector::unit(ambient, i));
        return span(ambient, e);
    }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    Vector basis_vector(int i) const { return basis_.row(i); }
    std::vector<Vector> basis() const {
        std::vector<Vector> b;
        for (int i = 0; i < dim(); ++i) b.push_back(basis_.row(i));
        return b;
    }
    /// The canonical basis as rows of a matrix.
    const Matrix& basis_matrix() const { return basis_; }

    bool contains(const Vector& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        // Reduce v against the echelon basis.
        Vector w = v;
        for (int r = 0; r < dim(); ++r) {
            int lead = leading_index(r);
            if (!w[lead].is_zero()) w = w - (w[lead] * basis_.row(r));
        }
        return w.is_zero();
    }

    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        auto v = a.basis();
        for (auto& w : b.basis()) v.push_back(w);
        return span(a.ambient_, v);
    }

    Subspace intersect(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        // x in both spans: x = a^T U = b^T W  <=>  (a,b) in ker [U^T | -W^T].
        int du = dim(), dw = other.dim();
        if (du == 0 || dw == 0) return Subspace(ambient_);
        Matrix sys(ambient_, du + dw);
        for (int i = 0; i < ambient_; ++i) {
            for (int r = 0; r < du; ++r) sys(i, r) = basis_(r, i);
            for (int r = 0; r < dw; ++r) sys(i, du + r) = -other.basis_(r, i);
        }
        std::vector<Vector> result;
        for (const auto& k : sys.kernel()) {
            Vector x(ambient_);
            for (int r = 0; r < du; ++r) x = x + (k[r] * basis_.row(r));
            result.push_back(x);
        }
        return span(ambient_, result);
    }

    /// Image of this subspace under the linear map m.
    Subspace image_under(const Matrix& m) const {
        std::vector<Vector> v;
        for (int i = 0; i < dim(); ++i) v.push_back(m * basis_vector(i));
        return span(m.rows(), v);
    }

    /// Coordinates of v in the canonical basis; nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const {
        return basis_.transpose().solve(v);
    }

    /// Indices (0-based) of standard basis vectors that extend this space to
    /// the full ambient space, chosen greedily in index order.
    std::vector<int> complement_indices() const {
        std::vector<int> picked;
        Subspace cur = *this;
        for (int i = 0; i < ambient_ && cur.dim() < ambient_; ++i) {
            Vector e = Vector::unit(ambient_, i);
            if (!cur.contains(e)) {
                picked.push_back(i);
                cur = cur + span(ambient_, {e});
            }
        }
        return picked;
    }

  private:
    int leading_index(int r) const {
        for (int c = 0; c < ambient_; ++c)
            if (!basis_(r, c).is_zero()) return c;
        throw std::logic_error("Subspace: zero basis row");
    }

    int ambient_;
    Matrix basis_;
};

}  // namespace hermlie
