#pragma once

// Alternating k-forms on an n-dimensional space, stored sparsely on strictly
// increasing index tuples (1-based).  The permutation sign for reordering a
// general tuple into canonical form is the insertion-sort parity.

#include <hermlie/linalg.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermlie {

using IndexTuple = std::vector<int>;

namespace detail {

/// Sorts tuple ascending; returns the permutation sign, or 0 on a repeat.
inline int canonicalize_tuple(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        int v = t[i];
        std::size_t j = i;
        while (j > 0 && t[j - 1] > v) {
            t[j] = t[j - 1];
            --j;
            sign = -sign;
        }
        t[j] = v;
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

}  // namespace detail

class KForm {
  public:
    // Degrees above dim are allowed and hold only the zero form (every
    // strictly increasing tuple of that length would repeat an index).
    KForm(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 0 || degree < 0) throw std::invalid_argument("KForm: need dim, degree >= 0");
    }

    /// The basis form e^{t1} ^ ... ^ e^{tk} (indices 1-based, any order).
    static KForm basis(int dim, IndexTuple t) {
        int sign = detail::canonicalize_tuple(t);
        KForm f(dim, static_cast<int>(t.size()));
        if (sign != 0) f.add_term(t, Scalar(sign));
        return f;
    }

    static KForm zero(int dim, int degree) { return KForm(dim, degree); }
    static KForm constant(int dim, const Scalar& value) {
        KForm f(dim, 0);
        f.add_term({}, value);
        return f;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Terms in lexicographic tuple order; tuples strictly increasing.
    const std::map<IndexTuple, Scalar>& terms() const { return terms_; }

    /// Coefficient on a (not necessarily sorted) tuple, with sign.
    Scalar coefficient(IndexTuple t) const {
        int sign = detail::canonicalize_tuple(t);
        if (sign == 0) return Scalar(0);
        auto it = terms_.find(t);
        if (it == terms_.end()) return Scalar(0);
        return Scalar(sign) * it->second;
    }

    /// Adds c * e^t; t may be unsorted.  No-op if c == 0 or t has repeats.
    void add_term(IndexTuple t, const Scalar& c) {
        if (static_cast<int>(t.size()) != degree_) throw std::invalid_argument("KForm: tuple arity mismatch");
        for (int i : t)
            if (i < 1 || i > dim_) throw std::out_of_range("KForm: index out of range");
        int sign = detail::canonicalize_tuple(t);
        if (sign == 0 || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(t, Scalar(0));
        it->second += Scalar(sign) * c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend KForm operator+(const KForm& a, const KForm& b) {
        check_compatible(a, b);
        KForm r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, c);
        return r;
    }
    friend KForm operator-(const KForm& a, const KForm& b) {
        check_compatible(a, b);
        KForm r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, -c);
        return r;
    }
    friend KForm operator*(const Scalar& s, const KForm& f) {
        KForm r(f.dim_, f.degree_);
        if (s.is_zero()) return r;
        for (const auto& [t, c] : f.terms_) r.terms_.emplace(t, s * c);
        return r;
    }
    KForm operator-() const { return Scalar(-1) * *this; }
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Alternating multilinear evaluation on degree() many vectors.
    Scalar evaluate(const std::vector<Vector>& vectors) const {
        if (static_cast<int>(vectors.size()) != degree_)
            throw std::invalid_argument("KForm: evaluate arity mismatch");
        for (const auto& v : vectors)
            if (v.size() != dim_) throw std::invalid_argument("KForm: evaluate dimension mismatch");
        if (degree_ == 0) return coefficient({});
        Scalar total(0);
        for (const auto& [t, c] : terms_) {
            // det of the k x k minor picking rows t of [v_1 .. v_k].
            Matrix m(degree_, degree_);
            for (int i = 0; i < degree_; ++i)
                for (int j = 0; j < degree_; ++j) m(i, j) = vectors[j][t[i] - 1];
            total += c * m.det();
        }
        return total;
    }

    /// First term in lexicographic tuple order (the canonical witness).
    std::pair<IndexTuple, Scalar> first_term() const {
        if (terms_.empty()) throw std::domain_error("KForm: zero form has no terms");
        return *terms_.begin();
    }

    std::string to_string(const std::string& letter = "e") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            Scalar a = c;
            if (!first) out += a.sign() < 0 ? " - " : " + ";
            else if (a.sign() < 0) out += "-";
            first = false;
            Scalar mag = a.abs();
            bool wide = false;
            for (int i : t) wide = wide || i > 9;
            std::string basis_str = letter + "^{";
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i && wide) basis_str += ",";
                basis_str += std::to_string(t[i]);
            }
            basis_str += "}";
            if (t.empty()) out += mag.to_string();
            else if (mag == Scalar(1)) out += basis_str;
            else out += mag.to_string() + "*" + basis_str;
        }
        return out;
    }

  private:
    static void check_compatible(const KForm& a, const KForm& b) {
        if (a.dim_ != b.dim_ || a.degree_ != b.degree_)
            throw std::invalid_argument("KForm: dimension/degree mismatch");
    }

    int dim_;
    int degree_;
    std::map<IndexTuple, Scalar> terms_;
};

/// Exterior product.
inline KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    KForm r(a.dim(), a.degree() + b.degree());
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            IndexTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(std::move(t), ca * cb);
        }
    return r;
}

/// Interior product i_x a.
inline KForm contract(const Vector& x, const KForm& a) {
    if (a.degree() == 0) throw std::invalid_argument("contract: cannot contract a 0-form");
    if (x.size() != a.dim()) throw std::invalid_argument("contract: dimension mismatch");
    KForm r(a.dim(), a.degree() - 1);
    for (const auto& [t, c] : a.terms()) {
        for (std::size_t p = 0; p < t.size(); ++p) {
            const Scalar& xp = x[t[p] - 1];
            if (xp.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(t.size() - 1);
            for (std::size_t q = 0; q < t.size(); ++q)
                if (q != p) rest.push_back(t[q]);
            Scalar sign(p % 2 == 0 ? 1 : -1);
            r.add_term(std::move(rest), sign * xp * c);
        }
    }
    return r;
}

/// Derivation-style action of an endomorphism on a form:
/// (C*a)(v_1,..,v_k) = -sum_i a(v_1,..,C v_i,..,v_k).
inline KForm endo_star(const Matrix& c, const KForm& a) {
    if (!c.is_square() || c.rows() != a.dim()) throw std::invalid_argument("endo_star: shape mismatch");
    KForm r(a.dim(), a.degree());
    for (const auto& [t, coeff] : a.terms()) {
        for (std::size_t p = 0; p < t.size(); ++p) {
            // On 1-forms C* e^j = -sum_i C(j,i) e^i, extended as a derivation.
            for (int i = 1; i <= a.dim(); ++i) {
                const Scalar& entry = c(t[p] - 1, i - 1);
                if (entry.is_zero()) continue;
                IndexTuple u = t;
                u[p] = i;
                r.add_term(std::move(u), -entry * coeff);
            }
        }
    }
    return r;
}

/// Pullback along an endomorphism: (J a)(v_1,..,v_k) = a(J v_1,..,J v_k).
inline KForm j_transform(const Matrix& j, const KForm& a) {
    if (!j.is_square() || j.rows() != a.dim()) throw std::invalid_argument("j_transform: shape mismatch");
    if (a.degree() == 0) return a;
    KForm r(a.dim(), a.degree());
    for (const auto& [t, coeff] : a.terms()) {
        // e^{t} pulled back is the wedge of the rows t of J.
        KForm prod = KForm::constant(a.dim(), coeff);
        for (int idx : t) {
            KForm one(a.dim(), 1);
            for (int i = 1; i <= a.dim(); ++i) one.add_term({i}, j(idx - 1, i - 1));
            prod = wedge(prod, one);
        }
        r = r + prod;
    }
    return r;
}

/// a^m (wedge power); m = 0 gives the constant 1.
inline KForm wedge_power(const KForm& a, int m) {
    if (m < 0) throw std::invalid_argument("wedge_power: negative power");
    if (m == 0) return KForm::constant(a.dim(), Scalar(1));
    KForm r = a;
    for (int i = 1; i < m; ++i) r = wedge(r, a);
    return r;
}

}  // namespace hermlie
