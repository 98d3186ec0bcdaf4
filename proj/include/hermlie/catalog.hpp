#pragma once

// A registry of named Lie algebras with Hermitian structures and their
// expected properties, used as golden data: every flag stored here is
// re-computed by catalog_check and compared against the stored expectation.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/constructions.hpp"
#include "hermlie/nilradical.hpp"

namespace hermlie {

/// An expected boolean property together with a note explaining where the
/// expectation comes from.
struct ExpectedFlag {
    bool value;
    std::string note;
};

/// Expected properties of an entry.  Flags refer to the entry's first
/// Hermitian structure; unset fields are not checked.
struct CatalogExpectation {
    std::optional<ExpectedFlag> integrable, compatible, kahler, skt, balanced, chern_ricci_flat, unimodular;
    std::optional<std::vector<int>> nilradical;  // 1-based basis indices
    std::string nilradical_note;
    std::optional<KForm> torsion;      // Bismut torsion of the first structure
    std::optional<KForm> chern_ricci;  // Chern-Ricci form of the first structure
};

/// A pair of complex structures sharing a metric, with the expected
/// generalized Kahler verdict and optionally the expected common torsion
/// companion d^c(omega_+).
struct GKPairCase {
    std::string label;
    ComplexStructure jp, jm;
    Metric metric;
    GKVerdict expected;
    std::optional<KForm> dc_plus;
    std::string note;
};

/// A fully instantiated entry: the algebra, its Hermitian structures (the
/// first is the one expectations refer to), and its generalized Kahler pairs.
struct CatalogInstance {
    LieAlgebra algebra;
    std::vector<std::pair<std::string, HermitianData>> hermitian;
    std::vector<GKPairCase> gk;
    CatalogExpectation expected;
};

/// A named, possibly parameterized catalog entry.  Parameters have nonzero
/// rational defaults; instantiate() applies overrides by name.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::vector<std::pair<std::string, Scalar>> params;
    std::function<CatalogInstance(const std::map<std::string, Scalar>&)> build;

    CatalogInstance instantiate(const std::map<std::string, Scalar>& overrides = {}) const {
        std::map<std::string, Scalar> vals;
        for (const auto& [key, dflt] : params) vals.emplace(key, dflt);
        for (const auto& [key, val] : overrides) {
            auto it = vals.find(key);
            if (it == vals.end())
                throw construction_error("UNKNOWN_PARAM",
                                         "entry '" + name + "' has no parameter '" + key + "'");
            it->second = val;
        }
        return build(vals);
    }
};

namespace detail {

/// J with J(e_a) = sign(b) e_|b| for every listed pair (a, b).
inline Matrix paired_j(int n, const std::vector<std::pair<int, int>>& pairs) {
    Matrix j(n, n);
    for (const auto& [a, b] : pairs) {
        const int sign = b < 0 ? -1 : 1;
        const int bb = b < 0 ? -b : b;
        j(bb - 1, a - 1) = Scalar(sign);
        j(a - 1, bb - 1) = Scalar(-sign);
    }
    return j;
}

inline Matrix standard_j(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i + 1 <= n; i += 2) pairs.emplace_back(i, i + 1);
    return paired_j(n, pairs);
}

inline HermitianData with_identity(LieAlgebra l, Matrix j) {
    const int n = l.dim();
    return HermitianData(std::move(l), ComplexStructure(std::move(j)), Metric(Matrix::identity(n)));
}

/// Rotation of the plane (e_i, e_j) with speed a: e_i -> -a e_j, e_j -> a e_i.
inline Matrix rotation(int n, int i, int j, const Scalar& a) {
    Matrix m(n, n);
    m(j - 1, i - 1) = -a;
    m(i - 1, j - 1) = a;
    return m;
}

inline KForm make_form(int dim, int k, const std::vector<std::pair<IndexTuple, Scalar>>& terms) {
    KForm f(dim, k);
    for (const auto& [idx, coeff] : terms) f.add_term(idx, coeff);
    return f;
}

inline KForm form3(int dim, const std::vector<std::pair<IndexTuple, Scalar>>& terms) {
    return make_form(dim, 3, terms);
}

/// Bismut torsion of the standard structure on the two-step family, as a
/// function of the family parameters (the coupled branch has gamma = 1/2).
inline KForm family_torsion(int dim, int rho, const Scalar& delta) {
    KForm c(dim, 3);
    c.add_term({1, 2, 6}, Scalar(-2));
    if (rho == 1) {
        c.add_term({1, 3, 5}, Scalar(-1));
        c.add_term({1, 4, 6}, Scalar(-1));
        c.add_term({2, 3, 6}, Scalar(-1));
        c.add_term({2, 4, 5}, Scalar(1));
        c.add_term({3, 4, 6}, Scalar(-1));
    }
    c.add_term({3, 4, 5}, Scalar(2) * delta);
    return c;
}

inline std::vector<int> upto(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

}  // namespace detail

/// The catalog, built once.  Entries are sorted by name in catalog_list().
const std::vector<CatalogEntry>& catalog();

inline std::vector<std::string> catalog_list() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    return names;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw construction_error("UNKNOWN_ENTRY", "no catalog entry named '" + name + "'");
}

/// Result of re-computing an entry's properties and comparing with the
/// stored expectations.  Each mismatch names the property and carries the
/// computed witness when one exists.
struct CatalogCheck {
    std::string name;
    std::optional<PropertyReport> report;  // of the first Hermitian structure
    bool pass = false;
    std::vector<std::string> mismatches;
};

namespace detail {

inline std::string witness_suffix(const FlagReport& flag) {
    if (!flag.witness) return "";
    std::string s = " (witness (";
    for (std::size_t i = 0; i < flag.witness->indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(flag.witness->indices[i]);
    }
    s += ") = " + flag.witness->value.to_string() + ")";
    return s;
}

inline void compare_flag(const std::string& name, const std::optional<ExpectedFlag>& expected,
                         const FlagReport& got, std::vector<std::string>& out) {
    if (!expected) return;
    const std::string want = expected->value ? "true" : "false";
    if (!got.value.has_value()) {
        out.push_back(name + ": expected " + want + " but the flag was not computed");
        return;
    }
    if (*got.value != expected->value)
        out.push_back(name + ": expected " + want + ", computed " + (*got.value ? "true" : "false") +
                      witness_suffix(got));
}

}  // namespace detail

inline CatalogCheck catalog_check(const std::string& name,
                                  const std::map<std::string, Scalar>& overrides = {}) {
    const CatalogEntry& entry = catalog_entry(name);
    CatalogInstance inst = entry.instantiate(overrides);
    CatalogCheck result;
    result.name = name;

    if (auto bad = inst.algebra.jacobi_check())
        result.mismatches.push_back("jacobi: fails on basis triple (" + std::to_string((*bad)[0]) + "," +
                                    std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");

    const CatalogExpectation& exp = inst.expected;
    if (!inst.hermitian.empty()) {
        const HermitianData& first = inst.hermitian.front().second;
        PropertyReport rep = analyze(first.algebra(), first.J(), first.metric());
        detail::compare_flag("integrable", exp.integrable, rep.integrable, result.mismatches);
        detail::compare_flag("compatible", exp.compatible, rep.compatible, result.mismatches);
        detail::compare_flag("kahler", exp.kahler, rep.kahler, result.mismatches);
        detail::compare_flag("skt", exp.skt, rep.skt, result.mismatches);
        detail::compare_flag("balanced", exp.balanced, rep.balanced, result.mismatches);
        detail::compare_flag("chern_ricci_flat", exp.chern_ricci_flat, rep.chern_ricci_flat,
                             result.mismatches);
        detail::compare_flag("unimodular", exp.unimodular, rep.unimodular, result.mismatches);
        if (exp.torsion) {
            KForm c = bismut_torsion(first);
            if (!(c == *exp.torsion))
                result.mismatches.push_back("torsion: expected " + exp.torsion->to_string() +
                                            ", computed " + c.to_string());
        }
        if (exp.chern_ricci) {
            KForm r = chern_ricci(first.algebra(), first.J());
            if (!(r == *exp.chern_ricci))
                result.mismatches.push_back("chern_ricci: expected " + exp.chern_ricci->to_string() +
                                            ", computed " + r.to_string());
        }
        result.report = std::move(rep);
    } else if (exp.unimodular && inst.algebra.is_unimodular() != exp.unimodular->value) {
        result.mismatches.push_back("unimodular: expected " +
                                    std::string(exp.unimodular->value ? "true" : "false") +
                                    ", computed otherwise");
    }

    if (exp.nilradical) {
        auto rep = verify_nilradical(inst.algebra, *exp.nilradical);
        if (!rep.certified())
            result.mismatches.push_back("nilradical: candidate not certified: " +
                                        to_string(rep.verdict) + " (" + rep.detail + ")");
    }

    for (const GKPairCase& pair : inst.gk) {
        GKReport rep = is_generalized_kahler(inst.algebra, pair.jp, pair.jm, pair.metric);
        if (rep.verdict != pair.expected) {
            std::string msg = "gk '" + pair.label + "': expected " + to_string(pair.expected) +
                              ", computed " + to_string(rep.verdict);
            if (!rep.reason.empty()) msg += " (" + rep.reason + ")";
            result.mismatches.push_back(msg);
        }
        if (pair.dc_plus) {
            KForm dc = dc_form(HermitianData(inst.algebra, pair.jp, pair.metric));
            if (!(dc == *pair.dc_plus))
                result.mismatches.push_back("gk '" + pair.label + "' torsion companion: expected " +
                                            pair.dc_plus->to_string() + ", computed " + dc.to_string());
        }
    }

    result.pass = result.mismatches.empty();
    return result;
}

namespace detail {

inline CatalogInstance build_flat_torus(const std::map<std::string, Scalar>&) {
    LieAlgebra l(6);
    HermitianData hd = with_identity(l, standard_j(6));
    CatalogInstance inst{l, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, "all differentials vanish"};
    inst.expected.compatible = ExpectedFlag{true, "orthonormal paired basis"};
    inst.expected.kahler = ExpectedFlag{true, "all differentials vanish"};
    inst.expected.skt = ExpectedFlag{true, "implied by kahler"};
    inst.expected.balanced = ExpectedFlag{true, "implied by kahler"};
    inst.expected.chern_ricci_flat = ExpectedFlag{true, computed};
    inst.expected.unimodular = ExpectedFlag{true, "abelian"};
    inst.expected.nilradical = upto(6);
    inst.expected.nilradical_note = "an abelian algebra is its own nilradical";
    inst.gk.push_back(GKPairCase{"(J, -J)", hd.J(), ComplexStructure(Scalar(-1) * hd.J().matrix()),
                                 hd.metric(), GKVerdict::GK_SPLIT, std::nullopt,
                                 "a kahler structure paired with its conjugate"});
    return inst;
}

inline CatalogInstance build_tau30_x_tau30(const std::map<std::string, Scalar>&) {
    LieAlgebra l(6);
    auto f = [](int i) { return Vector::unit(6, i - 1); };
    l.set_bracket(1, 5, -f(2));
    l.set_bracket(2, 5, f(1));
    l.set_bracket(3, 6, -f(4));
    l.set_bracket(4, 6, f(3));
    HermitianData hd = with_identity(l, standard_j(6));
    CatalogInstance inst{l, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{true, "the fundamental form is closed"};
    inst.expected.skt = ExpectedFlag{true, "implied by kahler"};
    inst.expected.balanced = ExpectedFlag{true, "implied by kahler"};
    inst.expected.chern_ricci_flat = ExpectedFlag{true, computed};
    inst.expected.unimodular = ExpectedFlag{true, "rotations are traceless"};
    inst.expected.nilradical = std::vector<int>{1, 2, 3, 4};
    inst.expected.nilradical_note = "abelian codimension-two nilradical";
    inst.gk.push_back(GKPairCase{"(J, -J)", hd.J(), ComplexStructure(Scalar(-1) * hd.J().matrix()),
                                 hd.metric(), GKVerdict::GK_SPLIT, std::nullopt,
                                 "a kahler structure paired with its conjugate"});
    return inst;
}

inline CatalogInstance build_g5_35_R(const std::map<std::string, Scalar>&) {
    LieAlgebra l(6);
    auto f = [](int i) { return Vector::unit(6, i - 1); };
    l.set_bracket(1, 5, Scalar(-2) * f(1));
    l.set_bracket(2, 5, f(2));
    l.set_bracket(3, 5, f(3));
    l.set_bracket(2, 6, -f(3));
    l.set_bracket(3, 6, f(2));
    Matrix jp = paired_j(6, {{1, 5}, {2, 3}, {4, 6}});
    Matrix jm = paired_j(6, {{1, 5}, {3, 2}, {4, 6}});
    HermitianData hd = with_identity(l, jp);
    CatalogInstance inst{l, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, "the fundamental form has nonzero differential"};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{false, computed};
    inst.expected.unimodular = ExpectedFlag{true, computed};
    inst.expected.nilradical = std::vector<int>{1, 2, 3, 4};
    inst.expected.nilradical_note = "abelian codimension-two nilradical";
    inst.expected.torsion = form3(6, {{{1, 2, 3}, Scalar(2)}});
    inst.expected.chern_ricci = make_form(6, 2, {{{1, 5}, Scalar(-2)}});
    inst.gk.push_back(GKPairCase{"conjugate rotation pair", ComplexStructure(jp), ComplexStructure(jm),
                                 hd.metric(), GKVerdict::GK_SPLIT,
                                 form3(6, {{{1, 2, 3}, Scalar(-2)}}),
                                 "the two structures differ by the sign of one rotation block"});
    return inst;
}

inline CatalogInstance build_s3_remark(const std::map<std::string, Scalar>&) {
    LieAlgebra l(8);
    auto e = [](int i) { return Vector::unit(8, i - 1); };
    const Scalar half(1, 2);
    l.set_bracket(2, 3, -e(1));
    l.set_bracket(1, 7, -e(1));
    l.set_bracket(2, 7, -half * e(2));
    l.set_bracket(3, 7, -half * e(3));
    l.set_bracket(4, 8, e(4));
    l.set_bracket(5, 8, -half * e(5));
    l.set_bracket(5, 7, -e(6));
    l.set_bracket(6, 7, e(5));
    l.set_bracket(6, 8, -half * e(6));
    Matrix jp = paired_j(8, {{1, 7}, {2, 3}, {5, 6}, {4, 8}});
    Matrix jm = paired_j(8, {{1, 7}, {2, 3}, {5, -6}, {4, 8}});
    HermitianData hd = with_identity(l, jp);
    CatalogInstance inst{l, {{"plus", hd}, {"minus", with_identity(l, jm)}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, computed};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{false, computed};
    inst.expected.unimodular = ExpectedFlag{false, "the first rotation-dilation generator has nonzero trace"};
    inst.expected.nilradical = upto(6);
    inst.expected.nilradical_note = "Heisenberg plus abelian, preserved by neither complex structure";
    inst.expected.torsion = form3(8, {{{4, 5, 6}, Scalar(-1)}});
    inst.expected.chern_ricci = make_form(
        8, 2, {{{1, 7}, Scalar(-3, 2)}, {{2, 3}, Scalar(-3, 2)}, {{4, 8}, Scalar(-1, 2)}});
    inst.gk.push_back(GKPairCase{
        "pair moving the nilradical", ComplexStructure(jp), ComplexStructure(jm), hd.metric(),
        GKVerdict::GK_SPLIT, form3(8, {{{4, 5, 6}, Scalar(1)}}),
        "the common torsion companion is the closed form on indices (4,5,6)"});
    return inst;
}

inline CatalogInstance build_g8(const std::map<std::string, Scalar>& p) {
    const Scalar b = p.at("b");
    LieAlgebra l(8);
    auto e = [](int i) { return Vector::unit(8, i - 1); };
    l.set_bracket(1, 7, b * e(2));
    l.set_bracket(2, 7, -b * e(1));
    l.set_bracket(3, 8, b * e(4));
    l.set_bracket(4, 8, -b * e(3));
    l.set_bracket(7, 8, e(5) + e(6));
    HermitianData hd = with_identity(l, standard_j(8));
    CatalogInstance inst{l, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, computed};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, computed};
    inst.expected.chern_ricci_flat = ExpectedFlag{true, "the trace form vanishes identically"};
    inst.expected.unimodular = ExpectedFlag{true, "rotations are traceless"};
    inst.expected.nilradical = upto(6);
    inst.expected.nilradical_note = "abelian codimension-two nilradical";
    inst.expected.torsion = form3(8, {{{5, 7, 8}, Scalar(-1)}, {{6, 7, 8}, Scalar(-1)}});
    return inst;
}

inline CatalogInstance extension_entry(int rho, const Scalar& gamma, const Scalar& delta,
                                       const std::vector<Matrix>& theta,
                                       std::vector<int> nilradical_candidate,
                                       const std::string& nilradical_note) {
    auto fam = nilpotent_family(rho, gamma, delta);
    HermitianData base = with_identity(fam.algebra, standard_j(6));
    HermitianData ext = skt_extension(ExtensionSpec{base, 1, theta});
    CatalogInstance inst{ext.algebra(), {{"standard", ext}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, "guaranteed by the extension construction"};
    inst.expected.compatible = ExpectedFlag{true, "product structure"};
    inst.expected.kahler = ExpectedFlag{false, computed};
    inst.expected.skt = ExpectedFlag{true, "guaranteed by the extension construction"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{true, computed};
    inst.expected.unimodular = ExpectedFlag{true, "skew actions on a nilpotent base"};
    inst.expected.nilradical = std::move(nilradical_candidate);
    inst.expected.nilradical_note = nilradical_note;
    inst.expected.torsion = family_torsion(8, rho, delta);
    return inst;
}

inline CatalogInstance build_s_first(const std::map<std::string, Scalar>& p, int rho,
                                     const Scalar& gamma, const Scalar& delta) {
    const Scalar a = p.at("a");
    Matrix coupled = rotation(6, 1, 2, a) + rotation(6, 3, 4, -a);
    return extension_entry(rho, gamma, delta, {coupled, Matrix(6, 6)}, {1, 2, 3, 4, 5, 6, 8},
                           "the second new generator acts trivially, so it joins the nilradical");
}

inline CatalogInstance build_s_second(const std::map<std::string, Scalar>& p, const Scalar& delta,
                                      const std::string& base_label) {
    const Scalar a = p.at("a"), b = p.at("b");
    return extension_entry(0, Scalar(0), delta,
                           {rotation(6, 1, 2, a), rotation(6, 3, 4, b)}, {1, 2, 3, 4, 5, 6},
                           "the nilradical is the six-dimensional base of type " + base_label);
}

inline CatalogInstance build_s8(const std::map<std::string, Scalar>&) {
    LieAlgebra l(8);
    auto e = [](int i) { return Vector::unit(8, i - 1); };
    l.set_bracket(2, 3, -e(1));
    l.set_bracket(2, 7, -e(2));
    l.set_bracket(3, 7, e(3));
    l.set_bracket(5, 7, -e(4));
    l.set_bracket(4, 8, -e(4));
    l.set_bracket(4, 7, e(5));
    l.set_bracket(5, 8, -e(5));
    l.set_bracket(6, 8, Scalar(2) * e(6));
    HermitianData hd = with_identity(l, paired_j(8, {{1, 2}, {3, 7}, {4, 5}, {6, 8}}));
    CatalogInstance inst{l, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, computed};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{false, "the trace form has nonzero differential"};
    inst.expected.unimodular = ExpectedFlag{true, computed};
    inst.expected.nilradical = upto(6);
    inst.expected.nilradical_note = "nilradical not preserved by the complex structure";
    inst.expected.torsion =
        form3(8, {{{1, 2, 3}, Scalar(-1)}, {{4, 5, 6}, Scalar(-2)}});
    KForm ricci(8, 2);
    ricci.add_term({3, 7}, Scalar(-1));
    ricci.add_term({6, 8}, Scalar(-2));
    inst.expected.chern_ricci = ricci;
    return inst;
}

inline CatalogInstance build_g2n(const std::map<std::string, Scalar>& p, int n) {
    LieAlgebra l = g2n_family(n, p.at("b"), p.at("c"), p.at("cp"));
    const int dim = 2 * n;
    std::vector<std::pair<int, int>> plus{{1, dim - 1}, {2, 3}, {dim - 2, dim}};
    std::vector<std::pair<int, int>> minus{{1, dim - 1}, {2, -3}, {dim - 2, dim}};
    for (int k = 2; k <= n - 2; ++k) {
        plus.emplace_back(2 * k, 2 * k + 1);
        minus.emplace_back(2 * k, 2 * k + 1);
    }
    Matrix jp = paired_j(dim, plus);
    Matrix jm = paired_j(dim, minus);
    HermitianData hd = with_identity(l, jp);
    CatalogInstance inst{l, {{"plus", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, computed};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{false, computed};
    inst.expected.unimodular = ExpectedFlag{true, computed};
    inst.expected.nilradical = upto(dim - 2);
    inst.expected.nilradical_note = "abelian codimension-two nilradical";
    inst.expected.torsion = form3(dim, {{{1, 2, 3}, Scalar(-1)}});
    inst.expected.chern_ricci = make_form(dim, 2, {{{1, dim - 1}, Scalar(-1, 2)}});
    inst.gk.push_back(GKPairCase{"split pair", ComplexStructure(jp), ComplexStructure(jm), hd.metric(),
                                 GKVerdict::GK_SPLIT, form3(dim, {{{1, 2, 3}, Scalar(1)}}),
                                 "the two structures differ by the sign of one rotation block"});
    if (n >= 5) {
        std::vector<std::pair<int, int>> np{{1, dim - 1}, {2, 3}, {4, 5}, {6, -7}, {dim - 2, dim}};
        std::vector<std::pair<int, int>> nm{{1, dim - 1}, {2, -3}, {4, -7}, {5, 6}, {dim - 2, dim}};
        for (int k = 4; k <= n - 2; ++k) {
            np.emplace_back(2 * k, 2 * k + 1);
            nm.emplace_back(2 * k, 2 * k + 1);
        }
        inst.gk.push_back(GKPairCase{"non-split pair", ComplexStructure(paired_j(dim, np)),
                                     ComplexStructure(paired_j(dim, nm)), hd.metric(),
                                     GKVerdict::GK_NONSPLIT, form3(dim, {{{1, 2, 3}, Scalar(1)}}),
                                     "the two structures do not commute"});
    }
    return inst;
}

inline CatalogInstance build_h_family(int rho, const Scalar& gamma, const Scalar& delta,
                                      const std::string& label) {
    auto fam = nilpotent_family(rho, gamma, delta);
    if (fam.label != label)
        throw std::logic_error("catalog: family parameters produce label " + fam.label +
                               ", entry expects " + label);
    HermitianData hd = with_identity(fam.algebra, standard_j(6));
    CatalogInstance inst{fam.algebra, {{"standard", hd}}, {}, {}};
    const std::string computed = "verified by direct computation";
    inst.expected.integrable = ExpectedFlag{true, computed};
    inst.expected.compatible = ExpectedFlag{true, computed};
    inst.expected.kahler = ExpectedFlag{false, "nonzero differential of the fundamental form"};
    inst.expected.skt = ExpectedFlag{true, "the torsion three-form is closed"};
    inst.expected.balanced = ExpectedFlag{false, "nonzero Lee form"};
    inst.expected.chern_ricci_flat = ExpectedFlag{true, computed};
    inst.expected.unimodular = ExpectedFlag{true, "nilpotent"};
    inst.expected.nilradical = upto(6);
    inst.expected.nilradical_note = "a nilpotent algebra is its own nilradical";
    inst.expected.torsion = family_torsion(6, rho, delta);
    return inst;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        using M = std::map<std::string, Scalar>;
        std::vector<CatalogEntry> v;
        v.push_back({"flat_torus", "abelian six-dimensional algebra with the standard structure", {},
                     detail::build_flat_torus});
        v.push_back({"tau30_x_tau30",
                     "product of two rotation extensions; kahler, the invariant-nilradical model", {},
                     detail::build_tau30_x_tau30});
        v.push_back({"g5_35_R",
                     "dilation-rotation algebra times a line; strong KT but not kahler", {},
                     detail::build_g5_35_R});
        v.push_back({"s3_remark",
                     "extension of Heisenberg plus a line with a generalized Kahler pair moving the "
                     "nilradical", {},
                     detail::build_s3_remark});
        v.push_back({"g8_b", "rotation extension of an abelian algebra; Chern-Ricci flat",
                     {{"b", Scalar(1)}}, detail::build_g8});
        v.push_back({"s1", "extension of the delta family, coupled rotation",
                     {{"a", Scalar(1)}, {"delta", Scalar(1)}},
                     [](const M& p) { return detail::build_s_first(p, 0, Scalar(0), p.at("delta")); }});
        v.push_back({"s2", "extension of the degenerate family, coupled rotation", {{"a", Scalar(1)}},
                     [](const M& p) { return detail::build_s_first(p, 0, Scalar(0), Scalar(0)); }});
        v.push_back({"s3", "extension of the coupled family, large delta",
                     {{"a", Scalar(1)}, {"delta", Scalar(1)}},
                     [](const M& p) { return detail::build_s_first(p, 1, Scalar(1, 2), p.at("delta")); }});
        v.push_back({"s4", "extension of the coupled family at the critical delta", {{"a", Scalar(1)}},
                     [](const M& p) {
                         return detail::build_s_first(p, 1, Scalar(1, 2), Scalar(1, 2) * Scalar::root(3));
                     }});
        v.push_back({"s5", "extension of the coupled family, small delta",
                     {{"a", Scalar(1)}, {"delta", Scalar(1, 2)}},
                     [](const M& p) { return detail::build_s_first(p, 1, Scalar(1, 2), p.at("delta")); }});
        v.push_back({"s6", "extension with independent rotations, nondegenerate base",
                     {{"a", Scalar(1)}, {"b", Scalar(1)}, {"delta", Scalar(1)}},
                     [](const M& p) { return detail::build_s_second(p, p.at("delta"), "h2"); }});
        v.push_back({"s7", "extension with independent rotations, degenerate base",
                     {{"a", Scalar(1)}, {"b", Scalar(1)}},
                     [](const M& p) { return detail::build_s_second(p, Scalar(0), "h8"); }});
        v.push_back({"s8", "strong KT algebra whose nilradical is not preserved by the complex "
                           "structure", {},
                     detail::build_s8});
        v.push_back({"g2n_3", "six-dimensional member of the rotating family with a split pair",
                     {{"b", Scalar(1)}, {"c", Scalar(1)}, {"cp", Scalar(1)}},
                     [](const M& p) { return detail::build_g2n(p, 3); }});
        v.push_back({"g2n_4", "eight-dimensional member of the rotating family with a split pair",
                     {{"b", Scalar(1)}, {"c", Scalar(1)}, {"cp", Scalar(1)}},
                     [](const M& p) { return detail::build_g2n(p, 4); }});
        v.push_back({"g2n_5", "ten-dimensional member with both split and non-split pairs",
                     {{"b", Scalar(1)}, {"c", Scalar(1)}, {"cp", Scalar(1)}},
                     [](const M& p) { return detail::build_g2n(p, 5); }});
        v.push_back({"h2", "two-step nilpotent, decoupled blocks", {{"delta", Scalar(1)}},
                     [](const M& p) { return detail::build_h_family(0, Scalar(0), p.at("delta"), "h2"); }});
        v.push_back({"h4", "two-step nilpotent, coupled blocks at the critical parameter", {},
                     [](const M&) {
                         return detail::build_h_family(1, Scalar(1, 2), Scalar(1, 2) * Scalar::root(3),
                                                       "h4");
                     }});
        v.push_back({"h5", "two-step nilpotent, coupled blocks below the critical parameter",
                     {{"delta", Scalar(1, 2)}},
                     [](const M& p) { return detail::build_h_family(1, Scalar(1, 2), p.at("delta"), "h5"); }});
        v.push_back({"h8", "two-step nilpotent with one-dimensional derived algebra", {},
                     [](const M&) { return detail::build_h_family(0, Scalar(0), Scalar(0), "h8"); }});
        return v;
    }();
    return entries;
}

}  // namespace hermlie
