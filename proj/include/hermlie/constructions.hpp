#pragma once

// Constructions that produce solvable Lie algebras carrying Hermitian
// structures with closed Bismut torsion: semidirect extensions of nilpotent
// bases by abelian factors acting through skew-Hermitian derivations, a
// six-dimensional two-step nilpotent family classified by its underlying
// algebra, and a family of 2n-dimensional almost-abelian-by-rotation
// algebras admitting generalized Kahler pairs.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/hermitian.hpp"

namespace hermlie {

/// Data for extending a Hermitian nilpotent Lie algebra h by an abelian
/// factor of dimension 2k acting by derivations.  The action matrices come
/// in pairs: theta[2i] is the action of the (i+1)-th new generator u and
/// theta[2i+1] the action of its partner Ju in the extending factor.
struct ExtensionSpec {
    HermitianData base;
    int k = 1;
    std::vector<Matrix> theta;
};

/// Checks every invariant an extension spec must satisfy and throws one
/// construction_error per violation, naming the offending action matrix:
///   BASE_NOT_NILPOTENT  the base algebra is not nilpotent
///   BASE_NOT_SKT        the base torsion three-form is not closed
///   NOT_DERIVATION      an action matrix is not a derivation of the base
///   NOT_SKEW            an action matrix is not skew-adjoint for the metric
///   NOT_SP              an action matrix does not infinitesimally preserve
///                       the fundamental form
///   NOT_COMMUTING       two action matrices fail to commute
inline void validate_extension_spec(const ExtensionSpec& spec) {
    const LieAlgebra& h = spec.base.algebra();
    const int n = h.dim();
    if (spec.k < 1) throw std::invalid_argument("validate_extension_spec: k must be at least 1");
    if (static_cast<int>(spec.theta.size()) != 2 * spec.k)
        throw std::invalid_argument("validate_extension_spec: expected " + std::to_string(2 * spec.k) +
                                    " action matrices, got " + std::to_string(spec.theta.size()));
    for (int t = 0; t < 2 * spec.k; ++t)
        if (!spec.theta[t].is_square() || spec.theta[t].rows() != n)
            throw std::invalid_argument("validate_extension_spec: action matrix " + std::to_string(t + 1) +
                                        " does not act on the base algebra");
    if (!h.is_nilpotent())
        throw construction_error("BASE_NOT_NILPOTENT", "the base algebra is not nilpotent");
    bool base_skt = false;
    try {
        base_skt = is_skt(spec.base);
    } catch (const construction_error&) {
        base_skt = false;
    }
    if (!base_skt)
        throw construction_error("BASE_NOT_SKT", "the base Hermitian structure does not have closed torsion");
    const Matrix& g = spec.base.metric().matrix();
    const Matrix omega = spec.base.J().matrix().transpose() * g;
    for (int t = 0; t < 2 * spec.k; ++t) {
        const Matrix& m = spec.theta[t];
        if (!h.is_derivation(m))
            throw construction_error("NOT_DERIVATION", "action matrix " + std::to_string(t + 1) +
                                                           " is not a derivation of the base algebra");
        if (!(m.transpose() * g + g * m).is_zero())
            throw construction_error("NOT_SKEW", "action matrix " + std::to_string(t + 1) +
                                                     " is not skew-adjoint for the base metric");
        if (!(m.transpose() * omega + omega * m).is_zero())
            throw construction_error("NOT_SP", "action matrix " + std::to_string(t + 1) +
                                                   " does not preserve the fundamental form infinitesimally");
    }
    for (int s = 0; s < 2 * spec.k; ++s)
        for (int t = s + 1; t < 2 * spec.k; ++t)
            if (!(spec.theta[s] * spec.theta[t] == spec.theta[t] * spec.theta[s]))
                throw construction_error("NOT_COMMUTING", "action matrices " + std::to_string(s + 1) + " and " +
                                                              std::to_string(t + 1) + " do not commute");
}

/// Semidirect extension of an SKT nilpotent Hermitian algebra by an abelian
/// factor of dimension 2k acting through skew-Hermitian derivations.  Basis
/// order: the base algebra first, then the pairs (u, Ju) of new generators.
/// The complex structure rotates each new pair, the metric is the product
/// metric making the new generators orthonormal, and the result always has
/// closed torsion (verified internally).
inline HermitianData skt_extension(const ExtensionSpec& spec) {
    validate_extension_spec(spec);
    const int n = spec.base.dim();
    const int total = n + 2 * spec.k;
    LieAlgebra g = semidirect_product(spec.base.algebra(), spec.theta);

    Matrix jm(total, total);
    Matrix gm(total, total);
    const Matrix& jh = spec.base.J().matrix();
    const Matrix& gh = spec.base.metric().matrix();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            jm(r, c) = jh(r, c);
            gm(r, c) = gh(r, c);
        }
    for (int i = 0; i < spec.k; ++i) {
        const int u = n + 2 * i;
        jm(u + 1, u) = Scalar(1);
        jm(u, u + 1) = Scalar(-1);
        gm(u, u) = Scalar(1);
        gm(u + 1, u + 1) = Scalar(1);
    }
    HermitianData result(std::move(g), ComplexStructure(jm), Metric(gm));
    if (!is_skt(result))
        throw std::logic_error("skt_extension: construction produced a structure without closed torsion");
    return result;
}

/// A six-dimensional two-step nilpotent Lie algebra from the family
///   d e5 = rho e13 - rho e24 + 2 delta e34,
///   d e6 = rho e23 + rho e14 - 2 e12 - 2 gamma e34,
/// together with the label of its underlying algebra in the standard list of
/// six-dimensional nilpotent algebras ("h2", "h4", "h5", "h8"), or "none"
/// when the parameters fall outside the classified slice rho^2 = 2 gamma.
struct NilpotentFamily {
    LieAlgebra algebra;
    std::string label;
};

inline NilpotentFamily nilpotent_family(int rho, const Scalar& gamma, const Scalar& delta) {
    if (rho != 0 && rho != 1) throw std::invalid_argument("nilpotent_family: rho must be 0 or 1");
    const Scalar r(rho);
    const Scalar two(2);
    LieAlgebra h(6);
    Vector e5 = Vector::unit(6, 4);
    Vector e6 = Vector::unit(6, 5);
    h.set_bracket(1, 2, two * e6);
    if (rho == 1) {
        h.set_bracket(1, 3, -e5);
        h.set_bracket(2, 4, e5);
        h.set_bracket(1, 4, -e6);
        h.set_bracket(2, 3, -e6);
    }
    h.set_bracket(3, 4, (-two * delta) * e5 + (two * gamma) * e6);

    std::string label;
    if (r * r - two * gamma != Scalar(0)) {
        label = "none";
    } else if (rho == 0) {
        label = delta.is_zero() ? "h8" : "h2";
    } else {
        const Scalar disc = Scalar(4) * delta * delta - Scalar(3);
        if (disc.sign() > 0)
            label = "h2";
        else if (disc.sign() == 0)
            label = "h4";
        else
            label = "h5";
    }
    return NilpotentFamily{std::move(h), std::move(label)};
}

/// The 2n-dimensional solvable Lie algebra (n >= 3) with structure equations
///   d e1      = -e(1,2n-1),
///   d e2      = 1/2 e(2,2n-1) + b e(3,2n-1) - c e(3,2n),
///   d e3      = -b e(2,2n-1) + 1/2 e(3,2n-1) + c e(2,2n),
///   d e(2l)   = c' e(2l+1,2n),   d e(2l+1) = -c' e(2l,2n)   (2 <= l <= n-2),
///   d e(2n-2) = d e(2n-1) = d e(2n) = 0,
/// with abelian nilradical spanned by e1..e(2n-2).  All three parameters
/// must be nonzero.
inline LieAlgebra g2n_family(int n, const Scalar& b, const Scalar& c, const Scalar& cp) {
    if (n < 3) throw std::invalid_argument("g2n_family: n must be at least 3");
    if (b.is_zero() || c.is_zero() || cp.is_zero())
        throw std::invalid_argument("g2n_family: all parameters must be nonzero");
    const int dim = 2 * n;
    const Scalar half(1, 2);
    LieAlgebra g(dim);
    auto e = [&](int i) { return Vector::unit(dim, i - 1); };
    g.set_bracket(1, dim - 1, e(1));
    g.set_bracket(2, dim - 1, -half * e(2) + b * e(3));
    g.set_bracket(3, dim - 1, -b * e(2) - half * e(3));
    g.set_bracket(2, dim, -c * e(3));
    g.set_bracket(3, dim, c * e(2));
    for (int l = 2; l <= n - 2; ++l) {
        g.set_bracket(2 * l + 1, dim, -cp * e(2 * l));
        g.set_bracket(2 * l, dim, cp * e(2 * l + 1));
    }
    if (g.jacobi_check())
        throw std::logic_error("g2n_family: structure constants violate the Jacobi identity");
    return g;
}

}  // namespace hermlie
