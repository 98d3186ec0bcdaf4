// End-to-end acceptance gate.  Runs eight independent checks against the
// library and the command-line tool, printing exactly one PASS/FAIL line per
// check; the exit status is the number of failures.
//
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermlie/catalog.hpp"
#include "hermlie/dsl.hpp"
#include "hermlie/json_io.hpp"
#include "hermlie/search.hpp"

using namespace hermlie;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

// ---- small shared helpers -------------------------------------------------

Matrix std_j(int n) {
    Matrix j(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        j(i + 1, i) = Scalar(1);
        j(i, i + 1) = Scalar(-1);
    }
    return j;
}

// Rotation of the plane (e_i, e_j) by speed a: e_i -> -a e_j, e_j -> a e_i.
Matrix rot(int n, int i, int j, const Scalar& a) {
    Matrix m(n, n);
    m(j - 1, i - 1) = -a;
    m(i - 1, j - 1) = a;
    return m;
}

KForm form(int dim, int deg, std::initializer_list<std::pair<IndexTuple, int>> terms) {
    KForm f(dim, deg);
    for (const auto& [t, c] : terms) f.add_term(t, Scalar(c));
    return f;
}

HermitianData std_base(LieAlgebra l) {
    const int n = l.dim();
    return HermitianData(std::move(l), ComplexStructure(std_j(n)), Metric(Matrix::identity(n)));
}

const HermitianData& first_structure(const CatalogInstance& inst) {
    require(!inst.hermitian.empty(), "catalog instance has no Hermitian structure");
    return inst.hermitian.front().second;
}

int rnd(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// 2x2-block matrix commuting with std_j(4): blocks [[p, -q], [q, p]], the
// entries listed block-row by block-row as (p, q) pairs.
Matrix complex_blocks(const std::array<int, 8>& pq) {
    Matrix m(4, 4);
    int idx = 0;
    for (int br = 0; br < 2; ++br)
        for (int bc = 0; bc < 2; ++bc) {
            const int p = pq[idx++], q = pq[idx++];
            m(2 * br, 2 * bc) = Scalar(p);
            m(2 * br, 2 * bc + 1) = Scalar(-q);
            m(2 * br + 1, 2 * bc) = Scalar(q);
            m(2 * br + 1, 2 * bc + 1) = Scalar(p);
        }
    return m;
}

Matrix random_complex(std::mt19937_64& rng) {
    std::array<int, 8> pq{};
    for (int& x : pq) x = rnd(rng, -3, 3);
    return complex_blocks(pq);
}

// Random J-commuting matrix that is also skew for the identity metric.
Matrix random_skew_complex(std::mt19937_64& rng) {
    const int q1 = rnd(rng, -3, 3), q4 = rnd(rng, -3, 3);
    const int p2 = rnd(rng, -3, 3), q2 = rnd(rng, -3, 3);
    return complex_blocks({0, q1, p2, q2, -p2, q2, 0, q4});
}

Matrix random_invertible_complex(std::mt19937_64& rng) {
    for (;;) {
        Matrix s = random_complex(rng);
        if (!s.det().is_zero()) return s;
    }
}

Vector random_h_vector(std::mt19937_64& rng) {
    Vector v(4);
    for (int i = 0; i < 4; ++i) v[i] = Scalar(rnd(rng, -3, 3));
    return v;
}

Vector lift_h(const Vector& x) {
    Vector y(6);
    for (int i = 0; i < 4; ++i) y[i] = x[i];
    return y;
}

// Extension of the abelian plane R^4 by two outer directions e5, e6 acting
// through commuting matrices a, b, with [e5, e6] = v in the plane.
LieAlgebra codim2_extension(const Matrix& a, const Matrix& b, const Vector& v) {
    LieAlgebra l(6);
    for (int j = 1; j <= 4; ++j) {
        l.set_bracket(5, j, lift_h(a.col(j - 1)));
        l.set_bracket(6, j, lift_h(b.col(j - 1)));
    }
    l.set_bracket(5, 6, lift_h(v));
    require(!l.jacobi_check().has_value(), "generated extension violates the Jacobi identity");
    return l;
}

Subspace first_coords(int ambient, int k) {
    std::vector<Vector> basis;
    for (int i = 0; i < k; ++i) basis.push_back(Vector::unit(ambient, i));
    return Subspace::span(ambient, basis);
}

// Compatible positive definite metric diag(s^t s, lam I2) for s commuting
// with std_j(4) and lam > 0.
Matrix block_metric(const Matrix& s, int lam) {
    const Matrix gh = s.transpose() * s;
    Matrix g(6, 6);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = gh(i, j);
    g(4, 4) = Scalar(lam);
    g(5, 5) = Scalar(lam);
    return g;
}

// ---- command-line runner ---------------------------------------------------

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    require(pipe != nullptr, "failed to launch the command-line tool");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- the eight checks -------------------------------------------------------

// 1. Golden tensors of the fixed examples, exact equality.
void check_golden_tensors() {
    const CatalogInstance s8 = catalog_entry("s8").instantiate();
    const HermitianData& hd = first_structure(s8);
    require(bismut_torsion(hd) == form(8, 3, {{{1, 2, 3}, -1}, {{4, 5, 6}, -2}}),
            "torsion of s8 is not -e123 - 2 e456: " + bismut_torsion(hd).to_string());
    require(chern_lee(hd) == form(8, 1, {{{3}, 1}, {{6}, 1}, {{7}, 1}}),
            "Chern-Lee form of s8 is not e3 + e6 + e7: " + chern_lee(hd).to_string());
    require(chern_ricci(hd) == form(8, 2, {{{3, 7}, -1}, {{6, 8}, -2}}),
            "Chern-Ricci form of s8 is not -e37 - 2 e68: " + chern_ricci(hd).to_string());

    for (const char* name : {"g2n_3", "g2n_4", "g2n_5"}) {
        const CatalogInstance inst = catalog_entry(name).instantiate();
        require(!inst.gk.empty(), std::string(name) + " has no conjugate pair");
        const GKPairCase& pair = inst.gk.front();
        const int dim = inst.algebra.dim();
        const KForm plus = dc_form(HermitianData(inst.algebra, pair.jp, pair.metric));
        const KForm minus = dc_form(HermitianData(inst.algebra, pair.jm, pair.metric));
        require(plus == form(dim, 3, {{{1, 2, 3}, 1}}),
                std::string(name) + " split pair: d^c omega_+ is not e123: " + plus.to_string());
        require(minus == form(dim, 3, {{{1, 2, 3}, -1}}),
                std::string(name) + " split pair: d^c omega_- is not -e123: " + minus.to_string());
    }

    const CatalogInstance rem = catalog_entry("s3_remark").instantiate();
    require(!rem.gk.empty(), "s3_remark has no conjugate pair");
    const GKPairCase& pair = rem.gk.front();
    const KForm plus = dc_form(HermitianData(rem.algebra, pair.jp, pair.metric));
    const KForm minus = dc_form(HermitianData(rem.algebra, pair.jm, pair.metric));
    require(plus == form(8, 3, {{{4, 5, 6}, 1}}),
            "s3_remark pair: d^c omega_+ is not e456: " + plus.to_string());
    require(minus == form(8, 3, {{{4, 5, 6}, -1}}),
            "s3_remark pair: d^c omega_- is not -e456: " + minus.to_string());
    require(!rem.algebra.is_unimodular(), "s3_remark must not be unimodular");
}

// 2. The two codimension-two models with abelian nilradical: the stored
// structures have closed torsion, their conjugate pairs verify, and the
// search recovers a metric from scratch.
void check_listed_models_and_search() {
    for (const char* name : {"tau30_x_tau30", "g5_35_R"}) {
        const CatalogInstance inst = catalog_entry(name).instantiate();
        const HermitianData& hd = first_structure(inst);
        require(is_skt(hd), std::string(name) + ": stored structure does not have closed torsion");
        require(!inst.gk.empty(), std::string(name) + " has no conjugate pair");
        for (const GKPairCase& pair : inst.gk) {
            const GKReport rep = is_generalized_kahler(inst.algebra, pair.jp, pair.jm, pair.metric);
            require(rep.verdict != GKVerdict::NOT_GK,
                    std::string(name) + " pair '" + pair.label + "' failed: " + rep.reason);
            require(rep.verdict == pair.expected,
                    std::string(name) + " pair '" + pair.label + "': unexpected verdict " +
                        to_string(rep.verdict));
        }
        const SearchOutcome found = skt_metric_search(inst.algebra, hd.J(), 512, 0);
        require(found.status == SearchStatus::FOUND,
                std::string(name) + ": search returned " + to_string(found.status));
        require(found.metric.has_value() &&
                    is_skt(HermitianData(inst.algebra, hd.J(), *found.metric)),
                std::string(name) + ": search witness does not verify");
    }
}

// 3. One hundred randomized extensions over the four nilpotent base families
// all have closed torsion, and the seven catalog families regenerate their
// frozen structure-constant tables.
void check_extension_families() {
    std::mt19937_64 rng(8151623);
    std::map<std::string, int> labels;
    int built = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int shape = trial % 5;
        NilpotentFamily fam = [&] {
            switch (shape) {
                case 0: {
                    const int num = rnd(rng, 1, 3) * (rnd(rng, 0, 1) ? 1 : -1);
                    return nilpotent_family(0, Scalar(0), Scalar(num));
                }
                case 1: return nilpotent_family(0, Scalar(0), Scalar(0));
                case 2: {
                    const int num = rnd(rng, 2, 4) * (rnd(rng, 0, 1) ? 1 : -1);
                    return nilpotent_family(1, Scalar(1, 2), Scalar(num, 2));
                }
                case 3: return nilpotent_family(1, Scalar(1, 2), Scalar(1, 2) * Scalar::root(3));
                default: return nilpotent_family(1, Scalar(1, 2), Scalar(rnd(rng, -3, 3), 4));
            }
        }();
        static const char* expected_label[] = {"h2", "h8", "h2", "h4", "h5"};
        require(fam.label == expected_label[shape],
                "family generator drew label " + fam.label + " in shape " + std::to_string(shape));
        labels[fam.label]++;

        std::vector<Matrix> theta;
        if (shape <= 1) {
            // Decoupled bases accept independent block rotations.
            for (int t = 0; t < 2; ++t)
                theta.push_back(rot(6, 1, 2, Scalar(rnd(rng, -3, 3))) +
                                rot(6, 3, 4, Scalar(rnd(rng, -3, 3))));
        } else {
            // Coupled bases require opposite speeds on the two blocks.
            for (int t = 0; t < 2; ++t) {
                const Scalar sp(rnd(rng, -3, 3));
                theta.push_back(rot(6, 1, 2, sp) + rot(6, 3, 4, -sp));
            }
        }
        const HermitianData ext = skt_extension(ExtensionSpec{std_base(fam.algebra), 1, std::move(theta)});
        require(is_skt(ext), "random extension " + std::to_string(trial) + " lost closed torsion");
        ++built;
    }
    require(built == 100, "expected 100 random extensions");
    for (const char* label : {"h2", "h4", "h5", "h8"})
        require(labels[label] > 0, std::string("base family ") + label + " never drawn");

    const std::vector<std::pair<std::string, std::string>> tables = {
        {"s1", "(f27, -f17, -f47, f37, 2*f34, -2*f12, 0, 0)\n"},
        {"s2", "(f27, -f17, -f47, f37, 0, -2*f12, 0, 0)\n"},
        {"s3", "(f27, -f17, -f47, f37, f13 - f24 + 2*f34, -2*f12 + f14 + f23 - f34, 0, 0)\n"},
        {"s4", "(f27, -f17, -f47, f37, f13 - f24 + sqrt(3)*f34, -2*f12 + f14 + f23 - f34, 0, 0)\n"},
        {"s5", "(f27, -f17, -f47, f37, f13 - f24 + f34, -2*f12 + f14 + f23 - f34, 0, 0)\n"},
        {"s6", "(f27, -f17, f48, -f38, 2*f34, -2*f12, 0, 0)\n"},
        {"s7", "(f27, -f17, f48, -f38, 0, -2*f12, 0, 0)\n"},
    };
    for (const auto& [name, expected] : tables) {
        const CatalogInstance inst = catalog_entry(name).instantiate();
        const std::string got = serialize_structure(inst.algebra);
        require(got == expected, name + " table mismatch: " + got);
        require(is_skt(first_structure(inst)), name + " does not have closed torsion");
    }
}

// 4. The codimension-two criteria: Chern-Ricci flatness for invariant
// nilradicals, the central obstruction expression, and the abelian-nilradical
// torsion criterion, each against direct computation.
void check_codim_two_criteria() {
    const ComplexStructure j(std_j(6));
    const Subspace h = first_coords(6, 4);

    {
        std::mt19937_64 rng(90210);
        int certified = 0, trials = 0;
        while (certified < 50) {
            require(++trials <= 500, "could not certify 50 invariant-nilradical instances");
            const Matrix a = random_complex(rng);
            const Matrix b = Scalar(rnd(rng, -2, 2)) * Matrix::identity(4) +
                             Scalar(rnd(rng, -2, 2)) * std_j(4) + Scalar(rnd(rng, -2, 2)) * a +
                             Scalar(rnd(rng, -2, 2)) * (std_j(4) * a);
            const Vector v = rnd(rng, 0, 1) ? random_h_vector(rng) : Vector(4);
            const LieAlgebra l = codim2_extension(a, b, v);
            if (!verify_nilradical(l, h).certified()) continue;
            ++certified;
            require(is_integrable(l, j), "invariant-nilradical instance lost integrability");
            require(chern_ricci(l, j).is_zero(),
                    "Chern-Ricci form does not vanish on an invariant-nilradical instance");
        }
    }

    {
        std::mt19937_64 rng(40961);
        const Matrix id6 = Matrix::identity(6);
        int instances = 0;
        for (int trial = 0; trial < 30; ++trial) {
            Matrix a, b;
            if (trial % 3 == 2) {
                // Nilpotent half-block action anti-commuting with J.
                const int p = rnd(rng, -3, 3), q = rnd(rng, -3, 3);
                a = Matrix(4, 4);
                a(0, 2) = Scalar(p);
                a(0, 3) = Scalar(q);
                a(1, 2) = Scalar(q);
                a(1, 3) = Scalar(-p);
                b = std_j(4) * a;
            } else {
                a = random_complex(rng);
                b = Scalar(rnd(rng, -2, 2)) * Matrix::identity(4) + Scalar(rnd(rng, -2, 2)) * std_j(4) +
                    Scalar(rnd(rng, -2, 2)) * a + Scalar(rnd(rng, -2, 2)) * (std_j(4) * a);
            }
            const Matrix g6 =
                (trial % 2 == 0) ? id6 : block_metric(random_invertible_complex(rng), 1 + trial % 3);
            const LieAlgebra l = codim2_extension(a, b, random_h_vector(rng));
            require(is_integrable(l, j), "obstruction instance lost integrability");
            const Metric g(g6);
            const HermitianData hd(l, j, g);
            const auto f = codim_two_frame(l, j, g, h);
            const KForm dc = l.ce_differential(bismut_torsion(hd));
            const auto obstruction = center_obstruction(l, j, g, h);
            require(obstruction.size() == 4, "central obstruction has the wrong length");
            for (int i = 0; i < 4; ++i) {
                const Vector z = Vector::unit(4, i);
                const Scalar direct = dc.evaluate({lift_h(f.j_h * z), lift_h(z), f.u, f.ju});
                require(obstruction[i] == direct,
                        "central obstruction disagrees with the direct evaluation at direction " +
                            std::to_string(i + 1));
            }
            ++instances;
        }
        require(instances == 30, "expected 30 obstruction instances");
    }

    {
        std::mt19937_64 rng(60103);
        int certified = 0, yes = 0, no = 0, trials = 0;
        while (certified < 30) {
            require(++trials <= 400, "could not certify 30 abelian-nilradical instances");
            const Matrix s = (trials % 3 == 0) ? random_invertible_complex(rng) : Matrix::identity(4);
            const Matrix g6 = block_metric(s, 1 + trials % 2);
            Matrix a, b;
            if (trials % 2 == 0) {
                a = *s.inverse() * random_skew_complex(rng) * s;
                b = Scalar(rnd(rng, -2, 2)) * std_j(4) + Scalar(rnd(rng, -2, 2)) * a;
            } else {
                a = random_complex(rng);
                b = Scalar(rnd(rng, -2, 2)) * Matrix::identity(4) + Scalar(rnd(rng, -2, 2)) * std_j(4) +
                    Scalar(rnd(rng, -2, 2)) * a + Scalar(rnd(rng, -2, 2)) * (std_j(4) * a);
            }
            const Vector v = rnd(rng, 0, 1) ? random_h_vector(rng) : Vector(4);
            const LieAlgebra l = codim2_extension(a, b, v);
            if (!verify_nilradical(l, h).certified()) continue;
            ++certified;
            const Metric g(g6);
            const bool skt = is_skt(HermitianData(l, j, g));
            require(abelian_skt_conditions(l, j, g, h) == skt,
                    "abelian-nilradical criterion disagrees with the torsion computation");
            (skt ? yes : no)++;
        }
        require(yes >= 3 && no >= 3, "abelian-nilradical sample must exercise both outcomes (" +
                                         std::to_string(yes) + " closed, " + std::to_string(no) +
                                         " not)");
    }
}

// 5. Structural laws: the differential squares to zero exactly on Jacobi
// algebras, Kahler structures are both strong KT and balanced, and the
// conjugate pair (J, -J) verifies exactly for Kahler metrics.
void check_structural_laws() {
    for (const CatalogEntry& entry : catalog()) {
        const CatalogInstance inst = entry.instantiate();
        require(!inst.algebra.jacobi_check().has_value(), entry.name + " violates Jacobi");
        for (int i = 1; i <= inst.algebra.dim(); ++i) {
            KForm ei(inst.algebra.dim(), 1);
            ei.add_term({i}, Scalar(1));
            require(inst.algebra.ce_differential(inst.algebra.ce_differential(ei)).is_zero(),
                    entry.name + ": d(d e" + std::to_string(i) + ") is nonzero");
        }
        for (const auto& [label, hd] : inst.hermitian)
            if (is_kahler(hd))
                require(is_skt(hd) && is_balanced(hd),
                        entry.name + " '" + label + "': Kahler without closed torsion or balance");
    }

    LieAlgebra broken(3);
    broken.set_bracket(1, 2, -Vector::unit(3, 0));
    broken.set_bracket(2, 3, -Vector::unit(3, 1));
    require(broken.jacobi_check().has_value(), "the broken bracket table passes the Jacobi check");
    bool nonzero = false;
    for (int i = 1; i <= 3 && !nonzero; ++i) {
        KForm ei(3, 1);
        ei.add_term({i}, Scalar(1));
        nonzero = !broken.ce_differential(broken.ce_differential(ei)).is_zero();
    }
    require(nonzero, "the broken algebra still has a squared differential of zero");

    struct Combo {
        std::string name;
        LieAlgebra l;
        Matrix j;
    };
    std::vector<Combo> combos;
    for (const char* name : {"flat_torus", "tau30_x_tau30", "g5_35_R", "g2n_3", "h2"}) {
        CatalogInstance inst = catalog_entry(name).instantiate();
        const Matrix j = first_structure(inst).J().matrix();
        combos.push_back({name, std::move(inst.algebra), j});
    }
    std::mt19937_64 rng(5150);
    int kahler_count = 0, other_count = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Combo& c = combos[trial % combos.size()];
        Matrix seed(6, 6);
        for (int r = 0; r < 6; ++r)
            for (int col = 0; col < 6; ++col) seed(r, col) = Scalar(rnd(rng, -2, 2));
        const Matrix p = seed.transpose() * seed + Matrix::identity(6);
        const Matrix gm = p + c.j.transpose() * p * c.j;
        const ComplexStructure jp(c.j), jm(Scalar(-1) * c.j);
        const Metric g(gm);
        const bool kahler = is_kahler(HermitianData(c.l, jp, g));
        const GKReport rep = is_generalized_kahler(c.l, jp, jm, g);
        require((rep.verdict == GKVerdict::GK_SPLIT) == kahler,
                c.name + ": the conjugate pair disagrees with the Kahler test");
        require((rep.verdict != GKVerdict::NOT_GK) == kahler,
                c.name + ": the conjugate pair verdict is not two-valued");
        (kahler ? kahler_count : other_count)++;
    }
    require(kahler_count >= 3 && other_count >= 3,
            "conjugate-pair sample must exercise both outcomes (" + std::to_string(kahler_count) +
                " Kahler, " + std::to_string(other_count) + " not)");
}

// 6. Nilradical certificates for the designated candidates, rejections for
// wrong candidates, and the random-direction spot check behind every
// certificate.
void check_nilradical_certificates() {
    struct Designated {
        const char* name;
        std::vector<int> candidate;
    };
    const std::vector<Designated> cases = {
        {"g5_35_R", {1, 2, 3, 4}},
        {"tau30_x_tau30", {1, 2, 3, 4}},
        {"s6", {1, 2, 3, 4, 5, 6}},
        {"s7", {1, 2, 3, 4, 5, 6}},
        {"s8", {1, 2, 3, 4, 5, 6}},
        {"g2n_3", {1, 2, 3, 4}},
        {"g2n_4", {1, 2, 3, 4, 5, 6}},
        {"g2n_5", {1, 2, 3, 4, 5, 6, 7, 8}},
    };
    std::mt19937_64 rng(20260819);
    for (const Designated& c : cases) {
        const CatalogInstance inst = catalog_entry(c.name).instantiate();
        const NilradicalReport rep = verify_nilradical(inst.algebra, c.candidate);
        require(rep.certified(), std::string(c.name) + ": designated nilradical not certified: " +
                                     to_string(rep.verdict) + " (" + rep.detail + ")");

        const int dim = inst.algebra.dim();
        std::vector<Vector> basis;
        for (int i : c.candidate) basis.push_back(Vector::unit(dim, i - 1));
        const Subspace n = Subspace::span(dim, basis);
        const auto comp = n.complement_indices();
        require(comp.size() == 2, std::string(c.name) + ": candidate is not of codimension two");
        const Matrix a = restricted_ad(inst.algebra, n, Vector::unit(dim, comp[0]));
        const Matrix b = restricted_ad(inst.algebra, n, Vector::unit(dim, comp[1]));
        int checked = 0;
        while (checked < 1000) {
            const int p = rnd(rng, -20, 20), q = rnd(rng, -20, 20);
            if (p == 0 && q == 0) continue;
            require(!(Scalar(p) * a + Scalar(q) * b).is_nilpotent(),
                    std::string(c.name) + ": direction " + std::to_string(p) + "*u1 + " +
                        std::to_string(q) + "*u2 acts nilpotently on the certified candidate");
            ++checked;
        }
    }

    const CatalogInstance tau = catalog_entry("tau30_x_tau30").instantiate();
    require(verify_nilradical(tau.algebra, std::vector<int>{1, 2, 3, 5}).verdict ==
                NilradicalVerdict::NOT_IDEAL,
            "wrong candidate on the product model was not rejected as a non-ideal");
    const CatalogInstance g5 = catalog_entry("g5_35_R").instantiate();
    require(verify_nilradical(g5.algebra, std::vector<int>{1, 2, 3, 5}).verdict ==
                NilradicalVerdict::NOT_NILPOTENT,
            "wrong candidate on the dilation model was not rejected as non-nilpotent");
    const CatalogInstance s1 = catalog_entry("s1").instantiate();
    const NilradicalReport small = verify_nilradical(s1.algebra, std::vector<int>{1, 2, 3, 4, 5, 6});
    require(small.verdict == NilradicalVerdict::LARGER_NILPOTENT_IDEAL,
            "undersized candidate on s1 was not rejected: " + to_string(small.verdict));
    require(small.witness.has_value(), "undersized candidate on s1 carries no witness direction");
}

// 7. The Kahler search never claims a witness on the entries that admit none.
void check_search_never_claims_kahler() {
    for (const char* name : {"g5_35_R", "g8_b", "s8"}) {
        const CatalogInstance inst = catalog_entry(name).instantiate();
        const SearchOutcome outcome =
            kahler_metric_search(inst.algebra, first_structure(inst).J(), 4096, 0);
        require(outcome.status != SearchStatus::FOUND,
                std::string(name) + ": the Kahler search claims a witness");
    }
}

// 8. The command-line tool round-trips every catalog entry through the text
// format, and its report on the exported s8 carries the exact expected flags
// and witness.
void check_cli_round_trip(const std::string& cli) {
    std::string tmpl = (fs::temp_directory_path() / "hermlie-acceptance-XXXXXX").string();
    std::vector<char> raw(tmpl.begin(), tmpl.end());
    raw.push_back('\0');
    require(::mkdtemp(raw.data()) != nullptr, "cannot create a scratch directory");
    const fs::path dir(raw.data());

    for (const CatalogEntry& entry : catalog()) {
        const CliResult res = run_cli(cli, "export " + entry.name + " --dir '" + dir.string() + "'");
        require(res.exit_code == 0, "export failed for " + entry.name);
        const std::string text = read_file(dir / (entry.name + ".lie"));
        const DslDocument doc = parse_document(text);
        require(serialize_document(doc) == text,
                entry.name + ": re-serializing the exported file changes it");
        const LieAlgebra parsed = document_to_algebra(doc);
        const CatalogInstance inst = entry.instantiate();
        require(parsed.dim() == inst.algebra.dim(), entry.name + ": dimension changed in transit");
        for (int i = 1; i <= parsed.dim(); ++i)
            for (int k = i + 1; k <= parsed.dim(); ++k)
                require(parsed.bracket_basis(i, k) == inst.algebra.bracket_basis(i, k),
                        entry.name + ": bracket (" + std::to_string(i) + "," + std::to_string(k) +
                            ") changed in transit");
        require(serialize_structure(parsed) == serialize_structure(inst.algebra),
                entry.name + ": canonical forms differ after the round trip");
    }

    const CliResult res = run_cli(cli, "check '" + (dir / "s8.lie").string() + "' --hermitian '" +
                                           (dir / "s8.json").string() + "'");
    require(res.exit_code == 0, "check on the exported s8 exited with " +
                                    std::to_string(res.exit_code));
    const json rep = json::parse(res.out);
    require(rep.at("structures").is_array() && rep.at("structures").size() == 1,
            "the s8 report does not carry exactly one structure");
    const json& s = rep.at("structures").at(0);
    require(s.at("skt").is_boolean() && s.at("skt").get<bool>(),
            "the s8 report does not state closed torsion");
    require(s.at("chern_ricci_flat").is_boolean() && !s.at("chern_ricci_flat").get<bool>(),
            "the s8 report does not refute Chern-Ricci flatness");
    const json& w = s.at("witnesses").at("chern_ricci_flat");
    require(w.at("indices") == json::array({3, 7}),
            "the Chern-Ricci witness is not at indices (3,7): " + w.dump());
    require(w.at("value").is_string() && w.at("value").get<std::string>() == "-1",
            "the Chern-Ricci witness coefficient is not -1: " + w.dump());

    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
        return 64;
    }
    const std::string cli = argv[1];

    struct Check {
        const char* label;
        std::function<void()> body;
    };
    const std::vector<Check> checks = {
        {"golden torsion, Chern-Lee, and Chern-Ricci tensors", check_golden_tensors},
        {"listed codimension-two models verify and the metric search succeeds",
         check_listed_models_and_search},
        {"randomized extensions keep closed torsion and the family tables regenerate",
         check_extension_families},
        {"codimension-two criteria agree with direct computation", check_codim_two_criteria},
        {"differential, Jacobi, Kahler, and conjugate-pair laws", check_structural_laws},
        {"nilradical certificates resist random directions and wrong candidates reject",
         check_nilradical_certificates},
        {"the Kahler search never claims a witness where none exists",
         check_search_never_claims_kahler},
        {"command-line export and check round-trip", [&] { check_cli_round_trip(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        try {
            checks[i].body();
            std::printf("PASS: %zu. %s\n", i + 1, checks[i].label);
        } catch (const std::exception& e) {
            std::printf("FAIL: %zu. %s: %s\n", i + 1, checks[i].label, e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
