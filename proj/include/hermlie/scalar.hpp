#pragma once

// Exact scalar arithmetic in a real quadratic field Q(sqrt(d)).
//
// A Scalar is  a + b*sqrt(d)  with a, b arbitrary-precision rationals and d a
// square-free positive integer.  d == 1 encodes a plain rational (the surd
// part is folded into the rational part on normalization).  Values with two
// different irrational radicands cannot be combined; attempting to do so
// throws, which pins the "one radicand per session" contract without any
// mutable global state.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermlie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation would leave the working field Q(sqrt(d)).
struct field_error : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

/// Largest integer r with r*r <= v (v >= 0).
inline BigInt isqrt_floor(const BigInt& v) {
    return boost::multiprecision::sqrt(v);
}

/// Exact integer square root, if v is a perfect square.
inline std::optional<BigInt> exact_isqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = isqrt_floor(v);
    if (r * r == v) return r;
    return std::nullopt;
}

/// Exact rational square root, if q is a square in Q.
inline std::optional<Rational> exact_rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_isqrt(numerator(q));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(denominator(q));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

/// Splits v > 0 as s*s * f with f square-free; returns {s, f}.
inline std::pair<BigInt, BigInt> extract_square_part(BigInt v) {
    BigInt square_root = 1;
    BigInt free_part = 1;
    for (BigInt p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        int mult = 0;
        while (v % p == 0) {
            v /= p;
            ++mult;
        }
        for (int i = 0; i < mult / 2; ++i) square_root *= p;
        if (mult % 2) free_part *= p;
    }
    free_part *= v;  // leftover prime (or 1)
    return {square_root, free_part};
}

}  // namespace detail

class Scalar {
  public:
    Scalar() : rat_(0), surd_(0), d_(1) {}
    Scalar(int v) : rat_(v), surd_(0), d_(1) {}
    Scalar(long long v) : rat_(v), surd_(0), d_(1) {}
    Scalar(const BigInt& v) : rat_(v), surd_(0), d_(1) {}
    Scalar(const Rational& v) : rat_(v), surd_(0), d_(1) {}
    Scalar(const Rational& num, const Rational& den) : rat_(num / den), surd_(0), d_(1) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
    }

    /// a + b*sqrt(d).  d may carry square factors; they are folded into b.
    Scalar(const Rational& a, const Rational& b, std::int64_t d) : rat_(a), surd_(b), d_(d) {
        if (d <= 0) throw std::domain_error("Scalar: radicand must be positive");
        normalize();
    }

    /// sqrt(d) itself (d a positive integer).
    static Scalar root(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    std::int64_t radicand() const { return d_; }

    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }

    /// -1, 0, or +1; exact.  Uses a^2 vs b^2 d when the parts disagree in sign.
    int sign() const {
        int sa = rat_ == 0 ? 0 : (rat_ > 0 ? 1 : -1);
        if (surd_ == 0) return sa;
        int sb = surd_ > 0 ? 1 : -1;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b*sqrt(d) compete: compare |a|^2 with b^2 d.
        Rational a2 = rat_ * rat_;
        Rational b2d = surd_ * surd_ * d_;
        if (a2 == b2d) return 0;  // cannot happen for square-free d>1, kept for safety
        return a2 > b2d ? sa : sb;
    }

    Scalar operator-() const { return Scalar(-rat_, -surd_, d_, raw_tag{}); }

    Scalar& operator+=(const Scalar& o) {
        std::int64_t d = merge_radicand(o);
        rat_ += o.rat_;
        surd_ += o.surd_;
        d_ = d;
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar& operator*=(const Scalar& o) {
        std::int64_t d = merge_radicand(o);
        Rational a = rat_ * o.rat_ + surd_ * o.surd_ * d;
        Rational b = rat_ * o.surd_ + surd_ * o.rat_;
        rat_ = a;
        surd_ = b;
        d_ = d;
        normalize();
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        std::int64_t d = merge_radicand(o);
        // Multiply by the conjugate; the norm a^2 - b^2 d is nonzero because
        // sqrt(d) is irrational for square-free d > 1.
        Rational norm = o.rat_ * o.rat_ - o.surd_ * o.surd_ * d;
        if (norm == 0) throw std::domain_error("Scalar: division by zero norm");
        Rational a = (rat_ * o.rat_ - surd_ * o.surd_ * d) / norm;
        Rational b = (surd_ * o.rat_ - rat_ * o.surd_) / norm;
        rat_ = a;
        surd_ = b;
        d_ = d;
        normalize();
        return *this;
    }

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        if (l.rat_ != r.rat_) return false;
        if (l.surd_ != r.surd_) return false;
        return l.surd_ == 0 || l.d_ == r.d_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
    friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
    friend bool operator>(const Scalar& l, const Scalar& r) { return (l - r).sign() > 0; }
    friend bool operator<=(const Scalar& l, const Scalar& r) { return (l - r).sign() <= 0; }
    friend bool operator>=(const Scalar& l, const Scalar& r) { return (l - r).sign() >= 0; }

    /// Galois conjugate a - b*sqrt(d).
    Scalar conjugate() const { return Scalar(rat_, -surd_, d_, raw_tag{}); }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root if it exists within Q(sqrt(d)) for this value's d
    /// (or within Q(sqrt(d')) for a pure rational, where d' is the square-free
    /// part; the result then fixes the radicand).  nullopt when the root
    /// leaves every such field.
    std::optional<Scalar> try_sqrt() const {
        int s = sign();
        if (s < 0) return std::nullopt;
        if (s == 0) return Scalar(0);
        if (surd_ == 0) {
            // sqrt(n/m) = sqrt(n*m)/m; split n*m = s^2 f with f square-free.
            if (auto r = detail::exact_rational_sqrt(rat_)) return Scalar(*r);
            BigInt nm = numerator(rat_) * denominator(rat_);
            auto [sq, f] = detail::extract_square_part(nm);
            if (f > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
            Rational coeff(sq, denominator(rat_));
            Scalar cand(Rational(0), coeff, static_cast<std::int64_t>(f));
            if (cand * cand != *this) return std::nullopt;
            return cand;
        }
        // sqrt(a + b sqrt(d)) = x + y sqrt(d) requires x^2 + y^2 d = a and
        // 2 x y = b, so x^2 solves 4 t^2 - 4 a t + b^2 d = 0.
        Rational disc = rat_ * rat_ - surd_ * surd_ * d_;
        auto disc_root = detail::exact_rational_sqrt(disc);
        if (!disc_root) return std::nullopt;
        for (int branch = 0; branch < 2; ++branch) {
            Rational x2 = (rat_ + (branch ? -*disc_root : *disc_root)) / 2;
            auto x = detail::exact_rational_sqrt(x2);
            if (!x || *x == 0) continue;
            Rational y = surd_ / (2 * *x);
            Scalar cand(*x, y, d_);
            if (cand * cand == *this && cand.sign() > 0) return cand;
            cand = -cand;
            if (cand * cand == *this && cand.sign() > 0) return cand;
        }
        return std::nullopt;
    }

    /// Canonical display: "p", "p/q", "sqrt(d)", "p/q*sqrt(d)",
    /// "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)".
    std::string to_string() const {
        auto rat_str = [](const Rational& q) {
            std::string s = numerator(q).str();
            if (denominator(q) != 1) s += "/" + denominator(q).str();
            return s;
        };
        if (surd_ == 0) return rat_str(rat_);
        std::string surd_str;
        Rational b_abs = surd_ < 0 ? Rational(-surd_) : surd_;
        if (b_abs != 1) surd_str = rat_str(b_abs) + "*";
        surd_str += "sqrt(" + std::to_string(d_) + ")";
        if (rat_ == 0) return (surd_ < 0 ? "-" : "") + surd_str;
        return rat_str(rat_) + (surd_ < 0 ? "-" : "+") + surd_str;
    }

  private:
    struct raw_tag {};
    Scalar(Rational a, Rational b, std::int64_t d, raw_tag) : rat_(std::move(a)), surd_(std::move(b)), d_(d) {
        if (surd_ == 0) d_ = 1;
    }

    void normalize() {
        if (d_ == 1) {
            rat_ += surd_;
            surd_ = 0;
            return;
        }
        if (surd_ == 0) {
            d_ = 1;
            return;
        }
        auto [sq, f] = detail::extract_square_part(BigInt(d_));
        if (sq != 1) {
            surd_ *= Rational(sq);
            d_ = static_cast<std::int64_t>(f);
        }
        if (d_ == 1) {
            rat_ += surd_;
            surd_ = 0;
        }
    }

    std::int64_t merge_radicand(const Scalar& o) const {
        if (surd_ == 0) return o.surd_ == 0 ? 1 : o.d_;
        if (o.surd_ == 0) return d_;
        if (d_ != o.d_)
            throw field_error("Scalar: cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" +
                              std::to_string(o.d_) + ")");
        return d_;
    }

    Rational rat_;
    Rational surd_;
    std::int64_t d_;
};

/// Parses an exact scalar literal: a signed sum of terms, each "p", "p/q",
/// "sqrt(d)", or "p/q*sqrt(d)".  Whitespace is ignored.  Examples:
/// "2", "-1/2", "sqrt(3)", "2*sqrt(3)", "1/2+3/4*sqrt(5)".
inline Scalar parse_scalar(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> std::domain_error {
        return std::domain_error("parse_scalar: " + why + " at position " + std::to_string(pos) + " in \"" +
                                 text + "\"");
    };
    auto parse_uint = [&]() -> BigInt {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("expected digits");
        return BigInt(text.substr(start, pos - start));
    };

    Scalar total(0);
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        int sgn = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sgn = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            BigInt num = parse_uint();
            BigInt den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = parse_uint();
                if (den == 0) throw fail("zero denominator");
            }
            coeff = Rational(num, den);
            saw_number = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            } else {
                total += Scalar(sgn) * Scalar(coeff);
                skip_ws();
                continue;
            }
        }
        if (text.compare(pos, 5, "sqrt(") == 0) {
            pos += 5;
            BigInt d = parse_uint();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
            ++pos;
            if (d <= 0 || d > std::numeric_limits<std::int64_t>::max()) throw fail("bad radicand");
            total += Scalar(sgn) * Scalar(Rational(0), coeff, static_cast<std::int64_t>(d));
            skip_ws();
            continue;
        }
        if (saw_number) throw fail("expected sqrt(...) after '*'");
        throw fail("expected number or sqrt(...)");
    }
    if (first) throw fail("empty scalar");
    return total;
}

}  // namespace hermlie
