#pragma once

// Univariate polynomials over Q(sqrt(d)); just enough for characteristic
// coefficients and their gcds in the nilradical certificate.

#include <hermlie/scalar.hpp>

#include <optional>
#include <vector>

namespace hermlie {

class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Scalar& s) { return Poly({s}); }
    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& coeff(int i) const {
        static const Scalar zero(0);
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero;
    }
    const Scalar& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Scalar eval(const Scalar& t) const {
        Scalar r(0);
        for (int i = degree(); i >= 0; --i) r = r * t + c_[i];
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        std::vector<Scalar> r(p.c_);
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Remainder of this modulo m (field coefficients).
    Poly rem(const Poly& m) const {
        if (m.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r = *this;
        while (!r.is_zero() && r.degree() >= m.degree()) {
            Scalar f = r.leading() / m.leading();
            int shift = r.degree() - m.degree();
            std::vector<Scalar> sub(shift + m.c_.size());
            for (std::size_t i = 0; i < m.c_.size(); ++i) sub[shift + i] = f * m.c_[i];
            r = r - Poly(std::move(sub));
        }
        return r;
    }

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.rem(b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return (Scalar(1) / a.leading()) * a;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<Scalar> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Scalar(static_cast<int>(i)) * c_[i];
        return Poly(std::move(r));
    }

    /// Product of the distinct irreducible factors: p / gcd(p, p').
    Poly square_free_part() const {
        if (degree() < 1) return *this;
        Poly g = gcd(*this, derivative());
        if (g.degree() < 1) return *this;
        // Exact division (g divides *this).
        Poly r = *this;
        std::vector<Scalar> qc(degree() - g.degree() + 1);
        while (!r.is_zero() && r.degree() >= g.degree()) {
            Scalar f = r.leading() / g.leading();
            int shift = r.degree() - g.degree();
            qc[shift] = f;
            std::vector<Scalar> sub(shift + g.c_.size());
            for (std::size_t i = 0; i < g.c_.size(); ++i) sub[shift + i] = f * g.c_[i];
            r = r - Poly(std::move(sub));
        }
        return Poly(std::move(qc));
    }

    /// Number of distinct real roots, by Sturm's theorem (exact: all sign
    /// decisions happen inside the scalar field).
    int count_real_roots() const {
        if (degree() < 1) return 0;
        Poly f = square_free_part();
        if (f.degree() < 1) return 0;
        std::vector<Poly> chain{f, f.derivative()};
        while (!chain.back().is_zero()) {
            Poly r = chain[chain.size() - 2].rem(chain.back());
            chain.push_back(Scalar(-1) * r);
        }
        chain.pop_back();
        auto variations = [&](bool at_plus_infinity) {
            int count = 0, prev = 0;
            for (const Poly& p : chain) {
                int s = p.leading().sign();
                if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
                if (s != 0 && prev != 0 && s != prev) ++count;
                if (s != 0) prev = s;
            }
            return count;
        };
        return variations(false) - variations(true);
    }

    /// The unique polynomial of degree < points.size() through the given
    /// (x, y) pairs; the x values must be distinct.
    static Poly lagrange_interpolate(const std::vector<std::pair<Scalar, Scalar>>& points) {
        Poly total;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Poly basis = Poly::constant(Scalar(1));
            Scalar denom(1);
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                basis = basis * Poly{-points[j].first, Scalar(1)};
                denom *= points[i].first - points[j].first;
            }
            total = total + (points[i].second / denom) * basis;
        }
        return total;
    }

    /// Coefficient-wise Galois conjugation (sqrt(d) -> -sqrt(d)).
    Poly conjugate() const {
        std::vector<Scalar> r(c_);
        for (auto& x : r) x = x.conjugate();
        return Poly(std::move(r));
    }

    bool has_rational_coefficients() const {
        for (const auto& x : c_)
            if (!x.is_rational()) return false;
        return true;
    }

    /// All rational roots (for rational-coefficient polynomials); exact, via
    /// the rational root theorem on the cleared-denominator form.  Returns
    /// nullopt if the polynomial is zero, has irrational coefficients, or its
    /// end coefficients are too large to factor comfortably.
    std::optional<std::vector<Scalar>> rational_roots() const {
        if (is_zero() || !has_rational_coefficients()) return std::nullopt;
        // Clear denominators.
        BigInt lcm = 1;
        for (const auto& x : c_) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x.rational_part())));
        std::vector<BigInt> ic(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            ic[i] = BigInt(numerator(c_[i].rational_part() * Rational(lcm)));
        // Strip powers of x (root 0).
        std::vector<Scalar> roots;
        std::size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        if (low > 0) roots.push_back(Scalar(0));
        BigInt a0 = ic[low] < 0 ? BigInt(-ic[low]) : ic[low];
        BigInt an = ic.back() < 0 ? BigInt(-ic.back()) : ic.back();
        const BigInt limit = 1000000;
        if (a0 > limit || an > limit) return std::nullopt;
        auto divisors = [](long long v) {
            std::vector<long long> d;
            for (long long i = 1; i * i <= v; ++i)
                if (v % i == 0) {
                    d.push_back(i);
                    if (i != v / i) d.push_back(v / i);
                }
            return d;
        };
        for (long long p : divisors(static_cast<long long>(a0)))
            for (long long q : divisors(static_cast<long long>(an)))
                for (int s : {1, -1}) {
                    Scalar cand(Rational(s * p, q));
                    if (eval(cand).is_zero()) {
                        bool seen = false;
                        for (const auto& r : roots) seen = seen || r == cand;
                        if (!seen) roots.push_back(cand);
                    }
                }
        return roots;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

}  // namespace hermlie
