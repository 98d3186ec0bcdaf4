#pragma once

// Finite-dimensional Lie algebras over the scalar field, presented by
// structure constants on a fixed basis e_1..e_n (1-based indices).

#include <hermlie/kform.hpp>
#include <hermlie/linalg.hpp>
#include <hermlie/subspace.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermlie {

/// Raised when a construction's validity premise fails; `code` is a stable
/// machine-readable identifier, what() carries the human-readable detail.
struct construction_error : std::runtime_error {
    construction_error(std::string code_, const std::string& detail)
        : std::runtime_error(code_ + ": " + detail), code(std::move(code_)) {}
    std::string code;
};

class LieAlgebra {
  public:
    explicit LieAlgebra(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
    }

    int dim() const { return dim_; }

    /// Defines [e_i, e_j] = v (and [e_j, e_i] = -v).  Indices are 1-based.
    void set_bracket(int i, int j, const Vector& v) {
        check_index(i);
        check_index(j);
        if (v.size() != dim_) throw std::invalid_argument("LieAlgebra: bracket value dimension mismatch");
        if (i == j) {
            if (!v.is_zero()) throw std::invalid_argument("LieAlgebra: [e_i, e_i] must vanish");
            return;
        }
        if (i > j) {
            set_bracket(j, i, -v);
            return;
        }
        if (v.is_zero()) brackets_.erase({i, j});
        else brackets_[{i, j}] = v;
    }

    /// [e_i, e_j] for any index order.
    Vector bracket_basis(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) return Vector(dim_);
        auto it = brackets_.find({std::min(i, j), std::max(i, j)});
        if (it == brackets_.end()) return Vector(dim_);
        return i < j ? it->second : -it->second;
    }

    Vector bracket(const Vector& x, const Vector& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("LieAlgebra: bracket dimension mismatch");
        Vector r(dim_);
        for (const auto& [ij, v] : brackets_) {
            auto [i, j] = ij;
            Scalar c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
            if (!c.is_zero()) r = r + c * v;
        }
        return r;
    }

    /// The nonzero brackets on basis pairs i < j.
    const std::map<std::pair<int, int>, Vector>& brackets() const { return brackets_; }

    /// ad_x as a matrix: (ad x) y = [x, y].
    Matrix ad(const Vector& x) const {
        Matrix m(dim_, dim_);
        for (int j = 1; j <= dim_; ++j) m.set_col(j - 1, bracket(x, Vector::unit(dim_, j - 1)));
        return m;
    }
    Matrix ad_basis(int i) const { return ad(Vector::unit(dim_, i - 1)); }

    /// First basis triple i < j < k violating the Jacobi identity, if any.
    std::optional<std::array<int, 3>> jacobi_check() const {
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j)
                for (int k = j + 1; k <= dim_; ++k) {
                    Vector ei = Vector::unit(dim_, i - 1);
                    Vector ej = Vector::unit(dim_, j - 1);
                    Vector ek = Vector::unit(dim_, k - 1);
                    Vector sum = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                                 bracket(bracket(ek, ei), ej);
                    if (!sum.is_zero()) return std::array<int, 3>{i, j, k};
                }
        return std::nullopt;
    }

    /// d e^m as a 2-form: d e^m = -sum_{i<j} c^m_{ij} e^{ij} where
    /// [e_i, e_j] = sum_m c^m_{ij} e_m.
    KForm differential_of_basis_covector(int m) const {
        check_index(m);
        KForm d(dim_, 2);
        for (const auto& [ij, v] : brackets_)
            d.add_term({ij.first, ij.second}, -v[m - 1]);
        return d;
    }

    /// Chevalley–Eilenberg differential, extended from 1-forms as an
    /// anti-derivation: d(a ^ b) = da ^ b + (-1)^{deg a} a ^ db.
    KForm ce_differential(const KForm& form) const {
        if (form.dim() != dim_) throw std::invalid_argument("LieAlgebra: form dimension mismatch");
        KForm r(dim_, form.degree() + 1);
        if (form.degree() == 0) return r;
        std::vector<KForm> d1;
        d1.reserve(dim_);
        for (int m = 1; m <= dim_; ++m) d1.push_back(differential_of_basis_covector(m));
        for (const auto& [t, c] : form.terms()) {
            for (std::size_t p = 0; p < t.size(); ++p) {
                const KForm& dtp = d1[t[p] - 1];
                Scalar sign(p % 2 == 0 ? 1 : -1);
                for (const auto& [uv, w] : dtp.terms()) {
                    IndexTuple tuple;
                    tuple.reserve(t.size() + 1);
                    tuple.insert(tuple.end(), uv.begin(), uv.end());
                    for (std::size_t q = 0; q < t.size(); ++q)
                        if (q != p) tuple.push_back(t[q]);
                    r.add_term(std::move(tuple), sign * c * w);
                }
            }
        }
        return r;
    }

    /// span{ [u, w] : u in U, w in W }.
    Subspace bracket_span(const Subspace& u, const Subspace& w) const {
        std::vector<Vector> gens;
        for (int i = 0; i < u.dim(); ++i)
            for (int j = 0; j < w.dim(); ++j) gens.push_back(bracket(u.basis_vector(i), w.basis_vector(j)));
        return Subspace::span(dim_, gens);
    }

    Subspace derived_subalgebra() const {
        Subspace g = Subspace::full(dim_);
        return bracket_span(g, g);
    }

    /// g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... down to (and including) the first
    /// repeated term.
    std::vector<Subspace> derived_series() const {
        std::vector<Subspace> s{Subspace::full(dim_)};
        while (true) {
            Subspace next = bracket_span(s.back(), s.back());
            if (next == s.back()) break;
            s.push_back(next);
        }
        return s;
    }

    /// g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... down to the first repeated term.
    std::vector<Subspace> lower_central_series() const {
        std::vector<Subspace> s{Subspace::full(dim_)};
        Subspace g = Subspace::full(dim_);
        while (true) {
            Subspace next = bracket_span(g, s.back());
            if (next == s.back()) break;
            s.push_back(next);
        }
        return s;
    }

    bool is_solvable() const { return derived_series().back().is_zero(); }
    bool is_nilpotent() const { return lower_central_series().back().is_zero(); }
    bool is_abelian() const { return brackets_.empty(); }

    Subspace center() const {
        Matrix stacked(dim_ * dim_, dim_);
        for (int i = 1; i <= dim_; ++i) {
            Matrix adi = ad_basis(i);
            for (int r = 0; r < dim_; ++r)
                for (int c = 0; c < dim_; ++c) stacked((i - 1) * dim_ + r, c) = adi(r, c);
        }
        return Subspace::span(dim_, stacked.kernel());
    }

    bool is_subalgebra(const Subspace& s) const {
        for (int i = 0; i < s.dim(); ++i)
            for (int j = i + 1; j < s.dim(); ++j)
                if (!s.contains(bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
        return true;
    }

    bool is_ideal(const Subspace& s) const {
        for (int i = 1; i <= dim_; ++i)
            for (int j = 0; j < s.dim(); ++j)
                if (!s.contains(bracket(Vector::unit(dim_, i - 1), s.basis_vector(j)))) return false;
        return true;
    }

    /// tr(ad x) = 0 for all x.
    bool is_unimodular() const {
        for (int i = 1; i <= dim_; ++i)
            if (!ad_basis(i).trace().is_zero()) return false;
        return true;
    }

    /// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
    bool is_derivation(const Matrix& d) const {
        if (!d.is_square() || d.rows() != dim_) throw std::invalid_argument("LieAlgebra: derivation shape mismatch");
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j) {
                Vector lhs = d * bracket_basis(i, j);
                Vector rhs = bracket(d.col(i - 1), Vector::unit(dim_, j - 1)) +
                             bracket(Vector::unit(dim_, i - 1), d.col(j - 1));
                if (!(lhs == rhs)) return false;
            }
        return true;
    }

    /// The subalgebra spanned by s, in the coordinates of its canonical
    /// basis.  Throws if s is not closed under the bracket.
    LieAlgebra restrict_to(const Subspace& s) const {
        if (s.ambient() != dim_) throw std::invalid_argument("LieAlgebra: subspace ambient mismatch");
        LieAlgebra sub(s.dim());
        for (int i = 0; i < s.dim(); ++i)
            for (int j = i + 1; j < s.dim(); ++j) {
                Vector br = bracket(s.basis_vector(i), s.basis_vector(j));
                auto coords = s.coordinates(br);
                if (!coords) throw std::invalid_argument("LieAlgebra: subspace is not a subalgebra");
                sub.set_bracket(i + 1, j + 1, *coords);
            }
        return sub;
    }

  private:
    void check_index(int i) const {
        if (i < 1 || i > dim_) throw std::out_of_range("LieAlgebra: basis index out of range");
    }

    int dim_;
    std::map<std::pair<int, int>, Vector> brackets_;
};

/// ad_u restricted to the invariant subspace s, in the coordinates of s's
/// canonical basis (column j holds the coordinates of [u, s_j]).
inline Matrix restricted_ad(const LieAlgebra& g, const Subspace& s, const Vector& u) {
    Matrix m(s.dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        auto coords = s.coordinates(g.bracket(u, s.basis_vector(j)));
        if (!coords) throw std::logic_error("restricted_ad: subspace is not invariant");
        m.set_col(j, *coords);
    }
    return m;
}

/// Semidirect product h x R^m where the a-th new generator u_a acts on h by
/// the derivation ds[a] and the new generators commute among themselves.
/// New basis order: e_1..e_k (the ideal h), then u_1..u_m.
inline LieAlgebra semidirect_product(const LieAlgebra& h, const std::vector<Matrix>& ds) {
    int k = h.dim();
    int m = static_cast<int>(ds.size());
    for (int a = 0; a < m; ++a) {
        if (!ds[a].is_square() || ds[a].rows() != k)
            throw std::invalid_argument("semidirect_product: action shape mismatch");
        if (!h.is_derivation(ds[a]))
            throw construction_error("NOT_DERIVATION", "action of generator " + std::to_string(a + 1) +
                                                           " is not a derivation of the ideal");
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!(ds[a] * ds[b] == ds[b] * ds[a]))
                throw construction_error("HOMOMORPHISM_VIOLATION",
                                         "actions of generators " + std::to_string(a + 1) + " and " +
                                             std::to_string(b + 1) + " do not commute");
    int n = k + m;
    LieAlgebra g(n);
    auto lift = [&](const Vector& v) {
        Vector w(n);
        for (int i = 0; i < k; ++i) w[i] = v[i];
        return w;
    };
    for (const auto& [ij, v] : h.brackets()) g.set_bracket(ij.first, ij.second, lift(v));
    for (int a = 0; a < m; ++a)
        for (int i = 1; i <= k; ++i) g.set_bracket(k + a + 1, i, lift(ds[a].col(i - 1)));
    return g;
}

}  // namespace hermlie
