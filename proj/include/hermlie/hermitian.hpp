#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/kform.hpp"
#include "hermlie/liealg.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/scalar.hpp"
#include "hermlie/subspace.hpp"

namespace hermlie {

/// An endomorphism J with J^2 = -Id, validated at construction.
class ComplexStructure {
  public:
    explicit ComplexStructure(Matrix j) : j_(std::move(j)) {
        if (!j_.is_square())
            throw construction_error("NOT_ALMOST_COMPLEX", "the matrix is not square");
        if (!(j_ * j_ == Scalar(-1) * Matrix::identity(j_.rows())))
            throw construction_error("NOT_ALMOST_COMPLEX", "the matrix does not square to -identity");
    }

    const Matrix& matrix() const { return j_; }
    int dim() const { return j_.rows(); }
    Vector apply(const Vector& v) const { return j_ * v; }

  private:
    Matrix j_;
};

/// A symmetric positive definite bilinear form, decided exactly via leading
/// principal minors.
class Metric {
  public:
    explicit Metric(Matrix g) : g_(std::move(g)) {
        if (!g_.is_square() || !(g_.transpose() == g_))
            throw construction_error("NOT_SYMMETRIC", "the matrix is not symmetric");
        for (int k = 1; k <= g_.rows(); ++k) {
            Matrix leading(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) leading(i, j) = g_(i, j);
            if (!(Scalar(0) < leading.det()))
                throw construction_error("NOT_POSITIVE_DEFINITE",
                                         "leading principal minor " + std::to_string(k) +
                                             " is not positive");
        }
    }

    const Matrix& matrix() const { return g_; }
    int dim() const { return g_.rows(); }

    Scalar inner(const Vector& x, const Vector& y) const {
        const Vector gy = g_ * y;
        Scalar s(0);
        for (int i = 0; i < g_.rows(); ++i) s = s + x[i] * gy[i];
        return s;
    }

  private:
    Matrix g_;
};

inline bool is_compatible(const ComplexStructure& j, const Metric& g) {
    if (j.dim() != g.dim()) return false;
    return j.matrix().transpose() * g.matrix() * j.matrix() == g.matrix();
}

/// A Lie algebra together with a compatible pair (J, g); the compatibility
/// J^t g J = g is validated at construction.
class HermitianData {
  public:
    HermitianData(LieAlgebra algebra, ComplexStructure j, Metric g)
        : algebra_(std::move(algebra)), j_(std::move(j)), g_(std::move(g)) {
        if (j_.dim() != algebra_.dim() || g_.dim() != algebra_.dim())
            throw construction_error("DIMENSION_MISMATCH",
                                     "the algebra, complex structure, and metric dimensions differ");
        if (!is_compatible(j_, g_))
            throw construction_error("NOT_COMPATIBLE", "the metric is not J-invariant (J^t g J != g)");
    }

    const LieAlgebra& algebra() const { return algebra_; }
    const ComplexStructure& J() const { return j_; }
    const Metric& metric() const { return g_; }
    int dim() const { return algebra_.dim(); }

  private:
    LieAlgebra algebra_;
    ComplexStructure j_;
    Metric g_;
};

/// N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y].
inline Vector nijenhuis(const LieAlgebra& l, const ComplexStructure& j, const Vector& x,
                        const Vector& y) {
    const Vector jx = j.apply(x);
    const Vector jy = j.apply(y);
    return l.bracket(jx, jy) - j.apply(l.bracket(jx, y)) - j.apply(l.bracket(x, jy)) -
           l.bracket(x, y);
}

/// The full Nijenhuis tensor on basis pairs: entry [i][j] is N(e_{i+1}, e_{j+1}).
inline std::vector<std::vector<Vector>> nijenhuis_tensor(const LieAlgebra& l,
                                                         const ComplexStructure& j) {
    std::vector<std::vector<Vector>> n(l.dim(), std::vector<Vector>(l.dim(), Vector(l.dim())));
    for (int p = 0; p < l.dim(); ++p)
        for (int q = 0; q < l.dim(); ++q)
            n[p][q] = nijenhuis(l, j, Vector::unit(l.dim(), p), Vector::unit(l.dim(), q));
    return n;
}

inline bool is_integrable(const LieAlgebra& l, const ComplexStructure& j) {
    for (int p = 0; p < l.dim(); ++p)
        for (int q = p + 1; q < l.dim(); ++q)
            if (!nijenhuis(l, j, Vector::unit(l.dim(), p), Vector::unit(l.dim(), q)).is_zero())
                return false;
    return true;
}

namespace detail {
inline void require_integrable(const LieAlgebra& l, const ComplexStructure& j,
                               const char* operation) {
    if (!is_integrable(l, j))
        throw construction_error("NOT_INTEGRABLE",
                                 std::string(operation) + " requires an integrable complex structure");
}
}  // namespace detail

/// omega(x,y) = g(Jx,y); skew because compatibility forces J^t g = -g J.
inline KForm fundamental_form(const HermitianData& h) {
    const Matrix w = h.J().matrix().transpose() * h.metric().matrix();
    KForm omega(h.dim(), 2);
    for (int i = 1; i <= h.dim(); ++i)
        for (int k = i + 1; k <= h.dim(); ++k) omega.add_term({i, k}, w(i - 1, k - 1));
    return omega;
}

/// Torsion 3-form c(x,y,z) = d omega(Jx,Jy,Jz).
inline KForm bismut_torsion(const HermitianData& h) {
    detail::require_integrable(h.algebra(), h.J(), "the Bismut torsion");
    return j_transform(h.J().matrix(), h.algebra().ce_differential(fundamental_form(h)));
}

/// d^c omega = -c.
inline KForm dc_form(const HermitianData& h) { return -bismut_torsion(h); }

inline bool is_kahler(const HermitianData& h) {
    detail::require_integrable(h.algebra(), h.J(), "the Kaehler test");
    return h.algebra().ce_differential(fundamental_form(h)).is_zero();
}

inline bool is_skt(const HermitianData& h) {
    return h.algebra().ce_differential(bismut_torsion(h)).is_zero();
}

inline bool is_balanced(const HermitianData& h) {
    detail::require_integrable(h.algebra(), h.J(), "the balanced test");
    const int n = h.dim() / 2;
    return h.algebra().ce_differential(wedge_power(fundamental_form(h), n - 1)).is_zero();
}

/// eta(y) = (tr(ad_y J) - tr ad_{Jy}) / 2 on basis vectors.
inline KForm chern_lee(const LieAlgebra& l, const ComplexStructure& j) {
    detail::require_integrable(l, j, "the Chern-Lee form");
    const Scalar half = Scalar(1) / Scalar(2);
    KForm eta(l.dim(), 1);
    for (int i = 1; i <= l.dim(); ++i)
        eta.add_term({i}, half * ((l.ad_basis(i) * j.matrix()).trace() -
                                  l.ad(j.matrix().col(i - 1)).trace()));
    return eta;
}

inline KForm chern_ricci(const LieAlgebra& l, const ComplexStructure& j) {
    return l.ce_differential(chern_lee(l, j));
}

inline KForm chern_lee(const HermitianData& h) { return chern_lee(h.algebra(), h.J()); }
inline KForm chern_ricci(const HermitianData& h) { return chern_ricci(h.algebra(), h.J()); }

/// Gram-Schmidt frame for g over the standard basis; refuses when a
/// normalization square root leaves the scalar field.
inline std::vector<Vector> orthonormal_frame(const Metric& g) {
    std::vector<Vector> frame;
    try {
        for (int i = 0; i < g.dim(); ++i) {
            Vector v = Vector::unit(g.dim(), i);
            for (const auto& b : frame) v = v - g.inner(v, b) * b;
            const auto len = g.inner(v, v).try_sqrt();
            if (!len)
                throw construction_error("ORTHONORMALIZATION_LEAVES_FIELD",
                                         "the norm of frame vector " + std::to_string(i + 1) +
                                             " has no square root in the scalar field");
            frame.push_back((Scalar(1) / *len) * v);
        }
    } catch (const field_error&) {
        throw construction_error("ORTHONORMALIZATION_LEAVES_FIELD",
                                 "the orthonormal frame mixes incompatible quadratic extensions");
    }
    return frame;
}

/// theta(x) = g(sum_i [b_i, J b_i], Jx) / 2 over a g-orthonormal frame {b_i}.
inline KForm lee_form(const HermitianData& h) {
    detail::require_integrable(h.algebra(), h.J(), "the Lee form");
    try {
        const auto frame = orthonormal_frame(h.metric());
        Vector s(h.dim());
        for (const auto& b : frame) s = s + h.algebra().bracket(b, h.J().apply(b));
        const Scalar half = Scalar(1) / Scalar(2);
        KForm theta(h.dim(), 1);
        for (int i = 1; i <= h.dim(); ++i)
            theta.add_term({i}, half * h.metric().inner(s, h.J().apply(Vector::unit(h.dim(), i - 1))));
        return theta;
    } catch (const field_error&) {
        throw construction_error("ORTHONORMALIZATION_LEAVES_FIELD",
                                 "the orthonormal frame mixes incompatible quadratic extensions");
    }
}

enum class GKVerdict { GK_SPLIT, GK_NONSPLIT, NOT_GK };

inline std::string to_string(GKVerdict v) {
    switch (v) {
        case GKVerdict::GK_SPLIT: return "GK_SPLIT";
        case GKVerdict::GK_NONSPLIT: return "GK_NONSPLIT";
        default: return "NOT_GK";
    }
}

struct GKReport {
    GKVerdict verdict;
    std::string reason;  ///< nonempty exactly when the verdict is NOT_GK

    bool is_gk() const { return verdict != GKVerdict::NOT_GK; }
};

/// Checks every generalized Kaehler condition for the pair (J+, J-, g):
/// compatibility and integrability of both structures, c_+ = -c_-, and
/// d c_+ = 0; classifies by the commutator [J+, J-].
inline GKReport is_generalized_kahler(const LieAlgebra& l, const ComplexStructure& jp,
                                      const ComplexStructure& jm, const Metric& g) {
    if (jp.dim() != l.dim() || jm.dim() != l.dim() || g.dim() != l.dim())
        throw construction_error("DIMENSION_MISMATCH",
                                 "the algebra, complex structures, and metric dimensions differ");
    if (!is_compatible(jp, g))
        return {GKVerdict::NOT_GK, "the metric is not compatible with the first complex structure"};
    if (!is_compatible(jm, g))
        return {GKVerdict::NOT_GK, "the metric is not compatible with the second complex structure"};
    if (!is_integrable(l, jp))
        return {GKVerdict::NOT_GK, "the first complex structure is not integrable"};
    if (!is_integrable(l, jm))
        return {GKVerdict::NOT_GK, "the second complex structure is not integrable"};
    const KForm cp = bismut_torsion(HermitianData(l, jp, g));
    const KForm cm = bismut_torsion(HermitianData(l, jm, g));
    if (!(cp + cm).is_zero())
        return {GKVerdict::NOT_GK, "the Bismut torsions do not satisfy c_+ = -c_-"};
    if (!l.ce_differential(cp).is_zero())
        return {GKVerdict::NOT_GK, "the common torsion 3-form is not closed"};
    const Matrix comm = jp.matrix() * jm.matrix() - jm.matrix() * jp.matrix();
    return comm.is_zero() ? GKReport{GKVerdict::GK_SPLIT, ""} : GKReport{GKVerdict::GK_NONSPLIT, ""};
}

struct HJDecomposition {
    bool invariant;    ///< Jh = h
    Subspace h_j;      ///< h intersected with Jh
    bool hj_is_ideal;  ///< whether h_j is an ideal of the ambient algebra
};

inline HJDecomposition hj_decomposition(const LieAlgebra& l, const ComplexStructure& j,
                                        const Subspace& h) {
    if (h.ambient() != l.dim() || j.dim() != l.dim())
        throw construction_error("DIMENSION_MISMATCH", "the subspace does not live in the algebra");
    const Subspace jh = h.image_under(j.matrix());
    const Subspace hj = h.intersect(jh);
    return {jh == h, hj, l.is_ideal(hj)};
}

/// The data of a J-invariant codimension-2 ideal h: a direction u spanning
/// the g-orthogonal complement together with Ju, the restricted adjoint
/// actions a = ad_u, b = ad_Ju on h, and the restrictions of J and g to h,
/// all in the coordinates of h's canonical basis.
struct CodimTwoFrame {
    Vector u, ju;
    Matrix a, b;
    Matrix j_h, g_h;
};

inline CodimTwoFrame codim_two_frame(const LieAlgebra& l, const ComplexStructure& j,
                                     const Metric& g, const Subspace& h) {
    if (h.ambient() != l.dim() || j.dim() != l.dim() || g.dim() != l.dim())
        throw construction_error("DIMENSION_MISMATCH", "the subspace does not live in the algebra");
    if (l.dim() - h.dim() != 2)
        throw construction_error("NOT_CODIM_2", "the subspace has codimension " +
                                                    std::to_string(l.dim() - h.dim()));
    if (!(h.image_under(j.matrix()) == h))
        throw construction_error("NOT_INVARIANT", "the subspace is not J-invariant");
    if (!l.is_ideal(h))
        throw construction_error("NOT_IDEAL", "the subspace is not an ideal");
    if (!is_compatible(j, g))
        throw construction_error("NOT_COMPATIBLE", "the metric is not J-invariant (J^t g J != g)");
    const auto complement = (h.basis_matrix() * g.matrix()).kernel();
    const Vector u = complement.front();
    const Vector ju = j.apply(u);
    Matrix j_h(h.dim(), h.dim());
    Matrix g_h(h.dim(), h.dim());
    for (int c = 0; c < h.dim(); ++c) {
        const auto coords = h.coordinates(j.apply(h.basis_vector(c)));
        if (!coords) throw construction_error("NOT_INVARIANT", "the subspace is not J-invariant");
        j_h.set_col(c, *coords);
        for (int r = 0; r < h.dim(); ++r)
            g_h(r, c) = g.inner(h.basis_vector(r), h.basis_vector(c));
    }
    return {u, ju, restricted_ad(l, h, u), restricted_ad(l, h, ju), j_h, g_h};
}

/// [J_h, a] J_h + [J_h, b]; zero exactly when J extends integrably across the
/// codimension-2 complement (given J_h integrable on h).
inline Matrix integrability_defect(const LieAlgebra& l, const ComplexStructure& j, const Metric& g,
                                   const Subspace& h) {
    const CodimTwoFrame f = codim_two_frame(l, j, g, h);
    return (f.j_h * f.a - f.a * f.j_h) * f.j_h + (f.j_h * f.b - f.b * f.j_h);
}

/// For an abelian codimension-2 nilradical h, the SKT property is equivalent
/// to: a and b are skew-adjoint for g|_h and both commute with J_h.
inline bool abelian_skt_conditions(const LieAlgebra& l, const ComplexStructure& j, const Metric& g,
                                   const Subspace& h) {
    const CodimTwoFrame f = codim_two_frame(l, j, g, h);
    const auto skew = [&](const Matrix& m) {
        return (m.transpose() * f.g_h + f.g_h * m).is_zero();
    };
    const auto commutes = [&](const Matrix& m) { return m * f.j_h == f.j_h * m; };
    return skew(f.a) && skew(f.b) && commutes(f.a) && commutes(f.b);
}

namespace detail {

/// dc(Jz, z, u, Ju) expressed through the restricted actions:
///   |aJz|^2 + |bJz|^2 + |az|^2 + |bz|^2
///   - <aJaJz, z> - <JaJaz, z> - <bJbJz, z> - <JbJbz, z>.
inline Scalar center_expression(const Matrix& a, const Matrix& b, const Matrix& j_h,
                                const Matrix& g_h, const Vector& z) {
    const auto ip = [&](const Vector& x, const Vector& y) {
        const Vector gy = g_h * y;
        Scalar s(0);
        for (int i = 0; i < g_h.rows(); ++i) s = s + x[i] * gy[i];
        return s;
    };
    const Vector jz = j_h * z;
    const Vector ajz = a * jz;
    const Vector bjz = b * jz;
    const Vector az = a * z;
    const Vector bz = b * z;
    return ip(ajz, ajz) + ip(bjz, bjz) + ip(az, az) + ip(bz, bz) - ip(a * (j_h * ajz), z) -
           ip(j_h * (a * (j_h * az)), z) - ip(b * (j_h * bjz), z) - ip(j_h * (b * (j_h * bz)), z);
}

}  // namespace detail

/// The values dc(Jz, z, u, Ju) on a basis z of the center of h, computed from
/// the restricted actions alone (no differential forms involved).
inline std::vector<Scalar> center_obstruction(const LieAlgebra& l, const ComplexStructure& j,
                                              const Metric& g, const Subspace& h) {
    const CodimTwoFrame f = codim_two_frame(l, j, g, h);
    const Subspace z = l.restrict_to(h).center();
    std::vector<Scalar> values;
    values.reserve(z.dim());
    for (int i = 0; i < z.dim(); ++i)
        values.push_back(detail::center_expression(f.a, f.b, f.j_h, f.g_h, z.basis_vector(i)));
    return values;
}

/// First offending component of a failed predicate: the basis indices that
/// locate it and the exact value found there.
struct Witness {
    IndexTuple indices;
    Scalar value;
};

struct FlagReport {
    std::optional<bool> value;        ///< unset when the predicate does not apply
    std::optional<Witness> witness;   ///< set exactly when the value is false

    bool is(bool b) const { return value.has_value() && *value == b; }
};

struct PropertyReport {
    FlagReport integrable, compatible, kahler, skt, balanced, chern_ricci_flat, unimodular;
};

namespace detail {

inline FlagReport form_flag(const KForm& f) {
    if (f.is_zero()) return {true, std::nullopt};
    const auto [t, c] = f.first_term();
    return {false, Witness{t, c}};
}

}  // namespace detail

/// Evaluates every property flag that applies to (l, J, g). The Hermitian
/// flags stay unset when J is not integrable or g is not compatible.
inline PropertyReport analyze(const LieAlgebra& l, const ComplexStructure& j, const Metric& g) {
    if (j.dim() != l.dim() || g.dim() != l.dim())
        throw construction_error("DIMENSION_MISMATCH",
                                 "the algebra, complex structure, and metric dimensions differ");
    PropertyReport r;

    const Matrix incompat = j.matrix().transpose() * g.matrix() * j.matrix() - g.matrix();
    r.compatible.value = incompat.is_zero();
    if (!*r.compatible.value) {
        for (int i = 0; i < incompat.rows() && !r.compatible.witness; ++i)
            for (int k = 0; k < incompat.cols(); ++k)
                if (!incompat(i, k).is_zero()) {
                    r.compatible.witness = Witness{{i + 1, k + 1}, incompat(i, k)};
                    break;
                }
    }

    r.integrable.value = true;
    for (int p = 0; p < l.dim() && !r.integrable.witness; ++p)
        for (int q = p + 1; q < l.dim() && !r.integrable.witness; ++q) {
            const Vector n = nijenhuis(l, j, Vector::unit(l.dim(), p), Vector::unit(l.dim(), q));
            for (int k = 0; k < l.dim(); ++k)
                if (!n[k].is_zero()) {
                    r.integrable.value = false;
                    r.integrable.witness = Witness{{p + 1, q + 1, k + 1}, n[k]};
                    break;
                }
        }

    r.unimodular.value = true;
    for (int i = 1; i <= l.dim(); ++i) {
        const Scalar t = l.ad_basis(i).trace();
        if (!t.is_zero()) {
            r.unimodular.value = false;
            r.unimodular.witness = Witness{{i}, t};
            break;
        }
    }

    if (*r.integrable.value) {
        r.chern_ricci_flat = detail::form_flag(chern_ricci(l, j));
        if (*r.compatible.value) {
            const HermitianData hd(l, j, g);
            r.kahler = detail::form_flag(l.ce_differential(fundamental_form(hd)));
            r.skt = detail::form_flag(l.ce_differential(bismut_torsion(hd)));
            r.balanced =
                detail::form_flag(l.ce_differential(wedge_power(fundamental_form(hd), l.dim() / 2 - 1)));
        }
    }
    return r;
}

}  // namespace hermlie
