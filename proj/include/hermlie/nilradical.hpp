#pragma once

// Certification that a candidate subspace is the nilradical (the maximal
// nilpotent ideal) of a solvable Lie algebra, for candidates of codimension
// at most two.
//
// The maximality step: for a nilpotent ideal N containing [g,g] and a fixed
// complement span{u_1, u_2}, N is the nilradical iff no nonzero
// w = a u_1 + b u_2 makes ad_w|_N nilpotent.  (If x = n + w lies in a larger
// nilpotent ideal, so does w, and ad_w|_N is nilpotent; conversely such a w
// extends N to the larger nilpotent ideal N + span{w}.)  Nilpotency of
// M(a,b) = a A + b B is the simultaneous vanishing of the characteristic
// coefficients p_k(a,b), homogeneous binary forms; their common real
// projective zeros are decided exactly: the direction [1:0] by direct test,
// the chart (t, 1) through the gcd of the p_k(t,1) and a Sturm count of its
// real roots.

#include <hermlie/liealg.hpp>
#include <hermlie/polynomial.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hermlie {

enum class NilradicalVerdict {
    IS_NILRADICAL,
    NOT_IDEAL,
    NOT_NILPOTENT,
    MISSES_DERIVED,
    LARGER_NILPOTENT_IDEAL,
};

inline std::string to_string(NilradicalVerdict v) {
    switch (v) {
        case NilradicalVerdict::IS_NILRADICAL: return "IS_NILRADICAL";
        case NilradicalVerdict::NOT_IDEAL: return "NOT_IDEAL";
        case NilradicalVerdict::NOT_NILPOTENT: return "NOT_NILPOTENT";
        case NilradicalVerdict::MISSES_DERIVED: return "MISSES_DERIVED";
        case NilradicalVerdict::LARGER_NILPOTENT_IDEAL: return "LARGER_NILPOTENT_IDEAL";
    }
    return "?";
}

struct NilradicalReport {
    NilradicalVerdict verdict;
    /// For LARGER_NILPOTENT_IDEAL: a direction w (in ambient coordinates)
    /// with N + span{w} a strictly larger nilpotent ideal, when one exists
    /// over the scalar field.
    std::optional<Vector> witness;
    std::string detail;

    bool certified() const { return verdict == NilradicalVerdict::IS_NILRADICAL; }
};

namespace detail {

/// Square roots in the field of all roots of p (degree <= 2 handled fully;
/// higher degrees via the rational root theorem on the Q-coefficient split
/// p = P + sqrt(d) Q).
inline std::vector<Scalar> in_field_roots(const Poly& p) {
    std::vector<Scalar> roots;
    auto push_unique = [&](const Scalar& r) {
        for (const auto& s : roots)
            if (s == r) return;
        roots.push_back(r);
    };
    if (p.degree() == 1) {
        push_unique(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    if (p.degree() == 2) {
        Scalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        Scalar disc = b * b - Scalar(4) * a * c;
        if (disc.sign() >= 0) {
            if (auto root = disc.try_sqrt()) {
                push_unique((-b + *root) / (Scalar(2) * a));
                push_unique((-b - *root) / (Scalar(2) * a));
            }
        }
        return roots;
    }
    if (p.degree() >= 3) {
        // Split p = P + sqrt(d) Q with rational P, Q; a rational root must
        // annihilate both halves.
        Poly rational_half, surd_half;
        {
            std::vector<Scalar> pr, ps;
            for (int i = 0; i <= p.degree(); ++i) {
                pr.push_back(Scalar(p.coeff(i).rational_part()));
                ps.push_back(Scalar(p.coeff(i).surd_part()));
            }
            rational_half = Poly(std::move(pr));
            surd_half = Poly(std::move(ps));
        }
        Poly common = surd_half.is_zero() ? rational_half : Poly::gcd(rational_half, surd_half);
        if (auto rr = common.rational_roots())
            for (const auto& r : *rr)
                if (p.eval(r).is_zero()) push_unique(r);
    }
    return roots;
}

}  // namespace detail

/// Certifies whether the given subspace is the nilradical of g.  Throws
/// construction_error with code NOT_SOLVABLE if g is not solvable, and with
/// code UNSUPPORTED_CODIM if the candidate has codimension greater than two.
inline NilradicalReport verify_nilradical(const LieAlgebra& g, const Subspace& candidate) {
    if (candidate.ambient() != g.dim())
        throw std::invalid_argument("verify_nilradical: ambient dimension mismatch");
    if (!g.is_solvable())
        throw construction_error("NOT_SOLVABLE", "the nilradical certificate applies to solvable algebras only");
    int codim = g.dim() - candidate.dim();
    if (codim > 2)
        throw construction_error("UNSUPPORTED_CODIM",
                                 "candidate has codimension " + std::to_string(codim) + "; supported: 0, 1, 2");

    if (!g.is_ideal(candidate))
        return {NilradicalVerdict::NOT_IDEAL, std::nullopt, "candidate is not an ideal"};
    if (!g.restrict_to(candidate).is_nilpotent())
        return {NilradicalVerdict::NOT_NILPOTENT, std::nullopt, "candidate is not a nilpotent algebra"};
    if (!candidate.contains(g.derived_subalgebra()))
        return {NilradicalVerdict::MISSES_DERIVED, std::nullopt,
                "candidate does not contain the derived subalgebra"};

    if (codim == 0)
        return {NilradicalVerdict::IS_NILRADICAL, std::nullopt, "the algebra itself is nilpotent"};

    auto comp = candidate.complement_indices();
    Vector u1 = Vector::unit(g.dim(), comp[0]);
    Matrix a = restricted_ad(g, candidate, u1);
    if (codim == 1) {
        if (a.is_nilpotent())
            return {NilradicalVerdict::LARGER_NILPOTENT_IDEAL, u1,
                    "the complement direction acts nilpotently; the whole algebra is nilpotent"};
        return {NilradicalVerdict::IS_NILRADICAL, std::nullopt,
                "no complement direction acts nilpotently on the candidate"};
    }

    Vector u2 = Vector::unit(g.dim(), comp[1]);
    Matrix b = restricted_ad(g, candidate, u2);
    int m = candidate.dim();

    // Direction [1:0].
    if (a.is_nilpotent())
        return {NilradicalVerdict::LARGER_NILPOTENT_IDEAL, u1,
                "the first complement direction acts nilpotently"};

    // Chart (t, 1): characteristic coefficients of t A + B, each of degree
    // <= m in t, interpolated from m+1 integer sample points.
    std::vector<std::vector<std::pair<Scalar, Scalar>>> samples(m);
    for (int s = 0; s <= m; ++s) {
        Matrix mt = Scalar(s) * a + b;
        auto coeffs = mt.char_poly();
        for (int k = 1; k <= m; ++k) samples[k - 1].push_back({Scalar(s), coeffs[m - k]});
    }
    Poly common;  // gcd of the nonzero p_k(t, 1)
    for (int k = 1; k <= m; ++k) {
        Poly pk = Poly::lagrange_interpolate(samples[k - 1]);
        if (pk.is_zero()) continue;
        common = common.is_zero() ? pk : Poly::gcd(common, pk);
        if (common.degree() == 0) break;
    }
    // Since A is not nilpotent, some p_k(1,0) != 0; that value is the t^k
    // coefficient of p_k(t,1), so not every chart polynomial vanished.
    if (common.is_zero()) throw std::logic_error("verify_nilradical: empty chart pencil");
    if (common.degree() == 0)
        return {NilradicalVerdict::IS_NILRADICAL, std::nullopt,
                "no complement direction acts nilpotently on the candidate"};

    Poly reduced = common.square_free_part();
    int real_roots = reduced.count_real_roots();
    if (real_roots == 0)
        return {NilradicalVerdict::IS_NILRADICAL, std::nullopt,
                "bad directions exist only over the complex numbers; none are real"};

    auto roots = detail::in_field_roots(reduced);
    if (!roots.empty()) {
        Vector w = roots.front() * u1 + u2;
        return {NilradicalVerdict::LARGER_NILPOTENT_IDEAL, w,
                "direction " + roots.front().to_string() + " * u1 + u2 acts nilpotently"};
    }
    return {NilradicalVerdict::LARGER_NILPOTENT_IDEAL, std::nullopt,
            std::to_string(real_roots) +
                " real direction(s) act nilpotently, but none lies in the scalar field"};
}

inline NilradicalReport verify_nilradical(const LieAlgebra& g, const std::vector<int>& basis_indices) {
    std::vector<Vector> vecs;
    vecs.reserve(basis_indices.size());
    for (int i : basis_indices) {
        if (i < 1 || i > g.dim()) throw std::out_of_range("verify_nilradical: basis index out of range");
        vecs.push_back(Vector::unit(g.dim(), i - 1));
    }
    return verify_nilradical(g, Subspace::span(g.dim(), vecs));
}

/// Searches for the nilradical among subspaces spanned by [g,g] together
/// with standard basis vectors (ascending dimension, certified hits only);
/// a failed codimension-two candidate is also grown along its witness
/// direction.  Returns the certified nilradical, or nullopt if no candidate
/// in scope certifies.
inline std::optional<Subspace> find_nilradical(const LieAlgebra& g) {
    if (!g.is_solvable())
        throw construction_error("NOT_SOLVABLE", "the nilradical search applies to solvable algebras only");
    if (g.is_nilpotent()) return Subspace::full(g.dim());

    Subspace derived = g.derived_subalgebra();
    std::vector<int> comp = derived.complement_indices();
    int r = static_cast<int>(comp.size());

    auto try_candidate = [&](const Subspace& n) -> std::optional<Subspace> {
        NilradicalReport rep = verify_nilradical(g, n);
        if (rep.certified()) return n;
        if (rep.verdict == NilradicalVerdict::LARGER_NILPOTENT_IDEAL && rep.witness) {
            Subspace grown = n + Subspace::span(g.dim(), {*rep.witness});
            if (verify_nilradical(g, grown).certified()) return grown;
        }
        return std::nullopt;
    };

    for (int size = std::max(0, r - 2); size < r; ++size) {
        // All subsets of the complement indices of the given size.
        std::vector<int> sel(size);
        std::function<std::optional<Subspace>(int, int)> rec = [&](int start,
                                                                   int k) -> std::optional<Subspace> {
            if (k == size) {
                std::vector<Vector> vecs = derived.basis();
                for (int i = 0; i < size; ++i) vecs.push_back(Vector::unit(g.dim(), sel[i]));
                return try_candidate(Subspace::span(g.dim(), vecs));
            }
            for (int i = start; i < r; ++i) {
                sel[k] = comp[i];
                if (auto hit = rec(i + 1, k + 1)) return hit;
            }
            return std::nullopt;
        };
        if (auto hit = rec(0, 0)) return hit;
    }
    return std::nullopt;
}

}  // namespace hermlie
