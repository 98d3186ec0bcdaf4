#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <vector>

#include "hermlie/constructions.hpp"
#include "hermlie/nilradical.hpp"

using namespace hermlie;

namespace {

Matrix std_j(int n) {
    Matrix j(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        j(i + 1, i) = Scalar(1);
        j(i, i + 1) = Scalar(-1);
    }
    return j;
}

// Rotation of the plane (e_i, e_j) by speed a inside an n-dimensional space:
// e_i -> -a e_j, e_j -> a e_i, zero elsewhere.
Matrix rot(int n, int i, int j, const Scalar& a) {
    Matrix m(n, n);
    m(j - 1, i - 1) = -a;
    m(i - 1, j - 1) = a;
    return m;
}

// 2x2-block matrix with complex pattern [[p, -q], [q, p]] per block, entries
// listed block-row by block-row as p, q pairs.
Matrix complex_blocks(const std::array<int, 8>& v) {
    Matrix m(4, 4);
    auto put = [&](int br, int bc, int p, int q) {
        m(2 * br, 2 * bc) = Scalar(p);
        m(2 * br, 2 * bc + 1) = Scalar(-q);
        m(2 * br + 1, 2 * bc) = Scalar(q);
        m(2 * br + 1, 2 * bc + 1) = Scalar(p);
    };
    put(0, 0, v[0], v[1]);
    put(0, 1, v[2], v[3]);
    put(1, 0, v[4], v[5]);
    put(1, 1, v[6], v[7]);
    return m;
}

HermitianData std_base(LieAlgebra l) {
    int n = l.dim();
    return HermitianData(std::move(l), ComplexStructure(std_j(n)), Metric(Matrix::identity(n)));
}

// First family of eight-dimensional extensions: one new pair (f7, f8) with
// f7 acting by the coupled rotation on both base blocks.
LieAlgebra s_table1(const Scalar& a, const Scalar& delta, int rho) {
    LieAlgebra g(8);
    auto e = [&](int i) { return Vector::unit(8, i - 1); };
    const Scalar two(2);
    g.set_bracket(2, 7, -a * e(1));
    g.set_bracket(1, 7, a * e(2));
    g.set_bracket(4, 7, a * e(3));
    g.set_bracket(3, 7, -a * e(4));
    Vector e34 = (-two * delta) * e(5);
    if (rho == 1) {
        g.set_bracket(1, 3, -e(5));
        g.set_bracket(2, 4, e(5));
        g.set_bracket(2, 3, -e(6));
        g.set_bracket(1, 4, -e(6));
        e34 = e34 + e(6);
    }
    g.set_bracket(3, 4, e34);
    g.set_bracket(1, 2, two * e(6));
    REQUIRE(!g.jacobi_check());
    return g;
}

// Second family: f7 rotates the (1,2) block, its partner f8 the (3,4) block.
LieAlgebra s_table2(const Scalar& a, const Scalar& b, const Scalar& delta) {
    LieAlgebra g(8);
    auto e = [&](int i) { return Vector::unit(8, i - 1); };
    const Scalar two(2);
    g.set_bracket(2, 7, -a * e(1));
    g.set_bracket(1, 7, a * e(2));
    g.set_bracket(4, 8, -b * e(3));
    g.set_bracket(3, 8, b * e(4));
    if (!delta.is_zero()) g.set_bracket(3, 4, (-two * delta) * e(5));
    g.set_bracket(1, 2, two * e(6));
    REQUIRE(!g.jacobi_check());
    return g;
}

void require_same_brackets(const LieAlgebra& x, const LieAlgebra& y) {
    REQUIRE(x.dim() == y.dim());
    for (int i = 1; i <= x.dim(); ++i)
        for (int j = i + 1; j <= x.dim(); ++j) {
            INFO("bracket [" << i << "," << j << "]");
            REQUIRE(x.bracket_basis(i, j) == y.bracket_basis(i, j));
        }
}

std::vector<int> fingerprint(const LieAlgebra& l) {
    std::vector<int> fp;
    for (const auto& s : l.derived_series()) fp.push_back(s.dim());
    fp.push_back(-1);
    for (const auto& s : l.lower_central_series()) fp.push_back(s.dim());
    fp.push_back(-1);
    fp.push_back(l.center().dim());
    fp.push_back(l.is_unimodular() ? 1 : 0);
    return fp;
}

long long rnd(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

template <typename E>
auto code_is(const char* code) {
    return Catch::Matchers::Predicate<E>([code](const E& e) { return e.code == code; },
                                         std::string("error code is ") + code);
}

}  // namespace

TEST_CASE("nilpotent family: labels follow the parameter table") {
    const Scalar half(1, 2);
    struct Row {
        int rho;
        Scalar gamma, delta;
        const char* label;
    };
    const Row rows[] = {
        {0, Scalar(0), Scalar(1), "h2"},
        {0, Scalar(0), Scalar(-2), "h2"},
        {0, Scalar(0), Scalar(3), "h2"},
        {0, Scalar(0), Scalar(0), "h8"},
        {1, half, Scalar(2), "h2"},
        {1, half, Scalar(-1), "h2"},
        {1, half, Scalar(9, 8), "h2"},
        {1, half, half * Scalar::root(3), "h4"},
        {1, half, -half * Scalar::root(3), "h4"},
        {1, half, half, "h5"},
        {1, half, Scalar(0), "h5"},
        {1, half, Scalar(4, 5), "h5"},
        {1, half, Scalar(5, 6), "h5"},
        {0, Scalar(1), Scalar(1), "none"},
        {0, Scalar(-2), Scalar(0), "none"},
        {1, Scalar(0), Scalar(1), "none"},
        {1, Scalar(1), half, "none"},
    };
    for (const auto& row : rows) {
        INFO("rho=" << row.rho << " label expected " << row.label);
        auto fam = nilpotent_family(row.rho, row.gamma, row.delta);
        CHECK(fam.label == row.label);
        REQUIRE(!fam.algebra.jacobi_check());
        REQUIRE(fam.algebra.is_nilpotent());
        REQUIRE(fam.algebra.dim() == 6);
    }
    REQUIRE_THROWS_AS(nilpotent_family(2, Scalar(0), Scalar(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(nilpotent_family(-1, Scalar(0), Scalar(0)), std::invalid_argument);
}

TEST_CASE("nilpotent family: structure constants") {
    auto e = [](int i) { return Vector::unit(6, i - 1); };

    SECTION("generic coupled member") {
        auto fam = nilpotent_family(1, Scalar(1, 2), Scalar(1));
        const LieAlgebra& h = fam.algebra;
        REQUIRE(h.bracket_basis(1, 2) == Scalar(2) * e(6));
        REQUIRE(h.bracket_basis(1, 3) == -e(5));
        REQUIRE(h.bracket_basis(2, 4) == e(5));
        REQUIRE(h.bracket_basis(1, 4) == -e(6));
        REQUIRE(h.bracket_basis(2, 3) == -e(6));
        REQUIRE(h.bracket_basis(3, 4) == Scalar(-2) * e(5) + e(6));
        REQUIRE(h.bracket_basis(1, 5).is_zero());
        REQUIRE(h.bracket_basis(5, 6).is_zero());
        REQUIRE(h.bracket_basis(2, 6).is_zero());
    }

    SECTION("decoupled members and their class invariants") {
        auto h2 = nilpotent_family(0, Scalar(0), Scalar(1)).algebra;
        REQUIRE(h2.bracket_basis(3, 4) == Scalar(-2) * e(5));
        REQUIRE(h2.bracket_basis(1, 2) == Scalar(2) * e(6));
        REQUIRE(h2.derived_subalgebra().dim() == 2);
        REQUIRE(h2.center().dim() == 2);

        auto h8 = nilpotent_family(0, Scalar(0), Scalar(0)).algebra;
        REQUIRE(h8.bracket_basis(3, 4).is_zero());
        REQUIRE(h8.derived_subalgebra().dim() == 1);
        REQUIRE(h8.center().dim() == 4);

        for (const Scalar& d : {Scalar(2), Scalar(1, 2), Scalar(1, 2) * Scalar::root(3)}) {
            auto fam = nilpotent_family(1, Scalar(1, 2), d);
            REQUIRE(fam.algebra.derived_subalgebra().dim() == 2);
            REQUIRE(fam.algebra.center().dim() == 2);
        }
    }

    SECTION("standard Hermitian structure has closed torsion on the classified slice") {
        for (const auto& [rho, gamma, delta] :
             {std::tuple{0, Scalar(0), Scalar(1)}, std::tuple{0, Scalar(0), Scalar(0)},
              std::tuple{1, Scalar(1, 2), Scalar(2)}, std::tuple{1, Scalar(1, 2), Scalar(1, 2)}}) {
            auto fam = nilpotent_family(rho, gamma, delta);
            HermitianData hd = std_base(fam.algebra);
            REQUIRE(is_skt(hd));
        }
    }
}

TEST_CASE("extension regenerates the first eight-dimensional family") {
    struct Row {
        int rho;
        Scalar gamma, delta;
        const char* label;
    };
    const Row rows[] = {
        {0, Scalar(0), Scalar(1), "h2"},
        {0, Scalar(0), Scalar(0), "h8"},
        {1, Scalar(1, 2), Scalar(2), "h2"},
        {1, Scalar(1, 2), Scalar(1, 2) * Scalar::root(3), "h4"},
        {1, Scalar(1, 2), Scalar(1, 2), "h5"},
    };
    for (const Scalar& a : {Scalar(1), Scalar(3)}) {
        for (const auto& row : rows) {
            INFO("a=" << (a == Scalar(1) ? 1 : 3) << " base label " << row.label);
            auto fam = nilpotent_family(row.rho, row.gamma, row.delta);
            REQUIRE(fam.label == row.label);
            Matrix coupled = rot(6, 1, 2, a) + rot(6, 3, 4, -a);
            ExtensionSpec spec{std_base(fam.algebra), 1, {coupled, Matrix(6, 6)}};
            HermitianData ext = skt_extension(spec);
            require_same_brackets(ext.algebra(), s_table1(a, row.delta, row.rho));
            REQUIRE(is_skt(ext));
            REQUIRE(ext.dim() == 8);

            // The new pair is rotated by J and orthonormal for the metric.
            REQUIRE(ext.J().matrix()(7, 6) == Scalar(1));
            REQUIRE(ext.J().matrix()(6, 7) == Scalar(-1));
            REQUIRE(ext.metric().matrix() == Matrix::identity(8));
        }
    }
}

TEST_CASE("extension regenerates the second eight-dimensional family") {
    const Scalar a(2), b(3);
    for (const Scalar& delta : {Scalar(1), Scalar(0)}) {
        auto fam = nilpotent_family(0, Scalar(0), delta);
        ExtensionSpec spec{std_base(fam.algebra), 1, {rot(6, 1, 2, a), rot(6, 3, 4, b)}};
        HermitianData ext = skt_extension(spec);
        require_same_brackets(ext.algebra(), s_table2(a, b, delta));
        REQUIRE(is_skt(ext));

        // The base sits inside as the nilradical, so the extension is a
        // genuinely solvable, non-nilpotent algebra.
        auto rep = verify_nilradical(ext.algebra(), std::vector<int>{1, 2, 3, 4, 5, 6});
        REQUIRE(rep.certified());
        REQUIRE(!ext.algebra().is_nilpotent());
        REQUIRE(ext.algebra().is_solvable());
    }
}

TEST_CASE("extension by the zero action is the direct sum") {
    auto fam = nilpotent_family(1, Scalar(1, 2), Scalar(1));
    ExtensionSpec spec{std_base(fam.algebra), 1, {Matrix(6, 6), Matrix(6, 6)}};
    HermitianData ext = skt_extension(spec);
    for (int i = 1; i <= 6; ++i) {
        REQUIRE(ext.algebra().bracket_basis(7, i).is_zero());
        REQUIRE(ext.algebra().bracket_basis(8, i).is_zero());
    }
    REQUIRE(ext.algebra().bracket_basis(7, 8).is_zero());
    REQUIRE(is_skt(ext));
}

TEST_CASE("extension restricts to the base structure") {
    SECTION("nilpotent base with identity metric") {
        auto fam = nilpotent_family(1, Scalar(1, 2), Scalar(2));
        HermitianData base = std_base(fam.algebra);
        Matrix coupled = rot(6, 1, 2, Scalar(1)) + rot(6, 3, 4, Scalar(-1));
        ExtensionSpec spec{base, 1, {coupled, Matrix(6, 6)}};
        HermitianData ext = skt_extension(spec);

        std::vector<Vector> first;
        for (int i = 0; i < 6; ++i) first.push_back(Vector::unit(8, i));
        LieAlgebra restricted = ext.algebra().restrict_to(Subspace::span(8, first));
        require_same_brackets(restricted, base.algebra());
    }

    SECTION("abelian base with a dense compatible metric") {
        Matrix s = complex_blocks({2, 1, 1, 0, 0, 0, 1, 1});
        REQUIRE(s.inverse().has_value());
        Matrix g4 = s.transpose() * s;
        LieAlgebra r4(4);
        HermitianData base(r4, ComplexStructure(std_j(4)), Metric(g4));
        REQUIRE(is_skt(base));

        auto conj = [&](const Matrix& k) { return *s.inverse() * k * s; };
        Matrix t1 = conj(rot(4, 1, 2, Scalar(2)) + rot(4, 3, 4, Scalar(-1)));
        Matrix t2 = conj(rot(4, 1, 2, Scalar(1)) + rot(4, 3, 4, Scalar(3)));
        ExtensionSpec spec{base, 1, {t1, t2}};
        HermitianData ext = skt_extension(spec);
        REQUIRE(is_skt(ext));

        // Restricted metric and complex structure agree with the base.
        for (int i = 0; i < 4; ++i) {
            Vector ei(6), bi(4);
            ei[i] = Scalar(1);
            bi[i] = Scalar(1);
            Vector jext = ext.J().apply(ei);
            Vector jbase = base.J().apply(bi);
            for (int r = 0; r < 4; ++r) REQUIRE(jext[r] == jbase[r]);
            REQUIRE(jext[4].is_zero());
            REQUIRE(jext[5].is_zero());
            for (int j = 0; j < 4; ++j) {
                Vector ej(6), bj(4);
                ej[j] = Scalar(1);
                bj[j] = Scalar(1);
                REQUIRE(ext.metric().inner(ei, ej) == base.metric().inner(bi, bj));
            }
        }

        // New generators are orthonormal and orthogonal to the base.
        Vector u(6), ju(6);
        u[4] = Scalar(1);
        ju[5] = Scalar(1);
        REQUIRE(ext.metric().inner(u, u) == Scalar(1));
        REQUIRE(ext.metric().inner(ju, ju) == Scalar(1));
        REQUIRE(ext.metric().inner(u, ju).is_zero());
        for (int i = 0; i < 4; ++i) {
            Vector ei(6);
            ei[i] = Scalar(1);
            REQUIRE(ext.metric().inner(u, ei).is_zero());
        }
        REQUIRE(ext.J().apply(u) == ju);
    }
}

TEST_CASE("random extensions have closed torsion") {
    std::mt19937_64 rng(271828);
    int built = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int shape = trial % 4;
        ExtensionSpec spec = [&]() -> ExtensionSpec {
            if (shape == 0) {
                // Abelian four-dimensional base, k in {1, 2}, commuting block
                // rotations with speeds in {-3..3}.
                const int k = 1 + static_cast<int>(rnd(rng, 0, 1));
                std::vector<Matrix> theta;
                for (int t = 0; t < 2 * k; ++t)
                    theta.push_back(rot(4, 1, 2, Scalar(rnd(rng, -3, 3))) +
                                    rot(4, 3, 4, Scalar(rnd(rng, -3, 3))));
                return ExtensionSpec{std_base(LieAlgebra(4)), k, std::move(theta)};
            }
            if (shape == 1) {
                // Abelian six-dimensional base with three independent rotations.
                std::vector<Matrix> theta;
                for (int t = 0; t < 2; ++t)
                    theta.push_back(rot(6, 1, 2, Scalar(rnd(rng, -3, 3))) +
                                    rot(6, 3, 4, Scalar(rnd(rng, -3, 3))) +
                                    rot(6, 5, 6, Scalar(rnd(rng, -3, 3))));
                return ExtensionSpec{std_base(LieAlgebra(6)), 1, std::move(theta)};
            }
            if (shape == 2) {
                // Coupled-rotation derivations of a coupled nilpotent base.
                auto fam = nilpotent_family(1, Scalar(1, 2), Scalar(rnd(rng, -2, 2)));
                std::vector<Matrix> theta;
                for (int t = 0; t < 2; ++t) {
                    Scalar sp(rnd(rng, -3, 3));
                    theta.push_back(rot(6, 1, 2, sp) + rot(6, 3, 4, -sp));
                }
                return ExtensionSpec{std_base(fam.algebra), 1, std::move(theta)};
            }
            // Independent block rotations of a decoupled nilpotent base.
            auto fam = nilpotent_family(0, Scalar(0), Scalar(rnd(rng, -2, 2)));
            std::vector<Matrix> theta;
            for (int t = 0; t < 2; ++t)
                theta.push_back(rot(6, 1, 2, Scalar(rnd(rng, -3, 3))) +
                                rot(6, 3, 4, Scalar(rnd(rng, -3, 3))));
            return ExtensionSpec{std_base(fam.algebra), 1, std::move(theta)};
        }();
        HermitianData ext = skt_extension(spec);
        REQUIRE(is_skt(ext));
        ++built;
    }
    REQUIRE(built == 100);
}

TEST_CASE("extension with two new pairs") {
    auto fam = nilpotent_family(0, Scalar(0), Scalar(1));
    ExtensionSpec spec{std_base(fam.algebra),
                       2,
                       {rot(6, 1, 2, Scalar(1)), Matrix(6, 6), rot(6, 3, 4, Scalar(1)), Matrix(6, 6)}};
    HermitianData ext = skt_extension(spec);
    REQUIRE(ext.dim() == 10);
    REQUIRE(is_skt(ext));
    auto rep = verify_nilradical(ext.algebra(), std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10});
    REQUIRE(rep.certified());
}

TEST_CASE("extension spec validation") {
    LieAlgebra r4(4);
    HermitianData flat4 = std_base(r4);

    SECTION("shape errors") {
        REQUIRE_THROWS_AS(validate_extension_spec(ExtensionSpec{flat4, 0, {}}), std::invalid_argument);
        REQUIRE_THROWS_AS(validate_extension_spec(ExtensionSpec{flat4, 1, {Matrix(4, 4)}}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(validate_extension_spec(ExtensionSpec{flat4, 1, {Matrix(4, 4), Matrix(6, 6)}}),
                          std::invalid_argument);
    }

    SECTION("base must be nilpotent") {
        // A solvable, non-nilpotent Kahler algebra.
        LieAlgebra sol(6);
        auto f = [](int i) { return Vector::unit(6, i - 1); };
        sol.set_bracket(1, 5, Scalar(-2) * f(1));
        sol.set_bracket(2, 5, f(2));
        sol.set_bracket(3, 5, f(3));
        sol.set_bracket(2, 6, -f(3));
        sol.set_bracket(3, 6, f(2));
        Matrix j(6, 6);
        auto pair = [&](int p, int q) {
            j(q - 1, p - 1) = Scalar(1);
            j(p - 1, q - 1) = Scalar(-1);
        };
        pair(1, 5);
        pair(2, 3);
        pair(4, 6);
        HermitianData base(sol, ComplexStructure(j), Metric(Matrix::identity(6)));
        REQUIRE(is_skt(base));
        ExtensionSpec spec{base, 1, {Matrix(6, 6), Matrix(6, 6)}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("BASE_NOT_NILPOTENT"));
    }

    SECTION("base must have closed torsion") {
        // Two-step nilpotent with both blocks mapping to the same center
        // direction: integrable and compatible but the torsion is not closed.
        LieAlgebra h3(6);
        auto f = [](int i) { return Vector::unit(6, i - 1); };
        h3.set_bracket(1, 2, -f(6));
        h3.set_bracket(3, 4, -f(6));
        HermitianData base = std_base(h3);
        REQUIRE(is_integrable(base.algebra(), base.J()));
        REQUIRE(!is_skt(base));
        ExtensionSpec spec{base, 1, {Matrix(6, 6), Matrix(6, 6)}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("BASE_NOT_SKT"));
    }

    SECTION("actions must be derivations") {
        auto fam = nilpotent_family(0, Scalar(0), Scalar(1));
        // Rotating the center spoils the derivation property while staying
        // skew and compatible with J.
        ExtensionSpec spec{std_base(fam.algebra), 1, {rot(6, 5, 6, Scalar(1)), Matrix(6, 6)}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("NOT_DERIVATION"));
    }

    SECTION("actions must be skew-adjoint") {
        ExtensionSpec spec{flat4, 1, {Matrix::identity(4), Matrix(4, 4)}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("NOT_SKEW"));
    }

    SECTION("actions must preserve the fundamental form") {
        // Skew but anticommuting with J.
        Matrix t(4, 4);
        t(0, 3) = Scalar(1);
        t(1, 2) = Scalar(1);
        t(2, 1) = Scalar(-1);
        t(3, 0) = Scalar(-1);
        REQUIRE((t.transpose() + t).is_zero());
        Matrix j = std_j(4);
        REQUIRE(t * j == -(j * t));
        ExtensionSpec spec{flat4, 1, {t, Matrix(4, 4)}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("NOT_SP"));
    }

    SECTION("actions must commute") {
        Matrix t1 = complex_blocks({0, 1, 0, 0, 0, 0, 0, 0});
        Matrix t2 = complex_blocks({0, 0, 1, 0, -1, 0, 0, 0});
        REQUIRE((t1.transpose() + t1).is_zero());
        REQUIRE((t2.transpose() + t2).is_zero());
        REQUIRE(!(t1 * t2 == t2 * t1));
        ExtensionSpec spec{flat4, 1, {t1, t2}};
        REQUIRE_THROWS_MATCHES(validate_extension_spec(spec), construction_error,
                               code_is<construction_error>("NOT_COMMUTING"));
    }
}

TEST_CASE("solvable family with two rotating generators") {
    SECTION("structure constants at n = 3") {
        const Scalar b(2), c(3), cp(5);
        LieAlgebra g = g2n_family(3, b, c, cp);
        auto e = [](int i) { return Vector::unit(6, i - 1); };
        REQUIRE(g.dim() == 6);
        REQUIRE(g.bracket_basis(1, 5) == e(1));
        REQUIRE(g.bracket_basis(2, 5) == Scalar(-1, 2) * e(2) + b * e(3));
        REQUIRE(g.bracket_basis(3, 5) == -b * e(2) - Scalar(1, 2) * e(3));
        REQUIRE(g.bracket_basis(2, 6) == -c * e(3));
        REQUIRE(g.bracket_basis(3, 6) == c * e(2));
        REQUIRE(g.bracket_basis(1, 6).is_zero());
        REQUIRE(g.bracket_basis(4, 5).is_zero());
        REQUIRE(g.bracket_basis(4, 6).is_zero());
        REQUIRE(g.bracket_basis(5, 6).is_zero());
        REQUIRE(g.bracket_basis(1, 2).is_zero());
    }

    SECTION("inner rotations appear from n = 4 on") {
        const Scalar one(1), cp(7);
        LieAlgebra g = g2n_family(4, one, one, cp);
        auto e = [](int i) { return Vector::unit(8, i - 1); };
        REQUIRE(g.bracket_basis(5, 8) == -cp * e(4));
        REQUIRE(g.bracket_basis(4, 8) == cp * e(5));
        REQUIRE(g.bracket_basis(1, 7) == e(1));
        REQUIRE(g.bracket_basis(6, 8).is_zero());
        REQUIRE(g.bracket_basis(6, 7).is_zero());

        LieAlgebra g5 = g2n_family(5, one, one, cp);
        REQUIRE(g5.bracket_basis(5, 10) == -cp * Vector::unit(10, 3));
        REQUIRE(g5.bracket_basis(7, 10) == -cp * Vector::unit(10, 5));
        REQUIRE(g5.bracket_basis(6, 10) == cp * Vector::unit(10, 6));
    }

    SECTION("abelian nilradical, solvability, unimodularity") {
        for (int n : {3, 4, 5}) {
            LieAlgebra g = g2n_family(n, Scalar(1), Scalar(1), Scalar(1));
            REQUIRE(g.is_solvable());
            REQUIRE(!g.is_nilpotent());
            REQUIRE(g.is_unimodular());
            std::vector<int> idx;
            for (int i = 1; i <= 2 * n - 2; ++i) idx.push_back(i);
            auto rep = verify_nilradical(g, idx);
            REQUIRE(rep.certified());
            std::vector<Vector> basis;
            for (int i = 0; i < 2 * n - 2; ++i) basis.push_back(Vector::unit(2 * n, i));
            REQUIRE(g.restrict_to(Subspace::span(2 * n, basis)).is_abelian());
        }
    }

    SECTION("n = 3 member matches the known six-dimensional product") {
        LieAlgebra g = g2n_family(3, Scalar(1), Scalar(1), Scalar(1));
        LieAlgebra ref(6);
        auto f = [](int i) { return Vector::unit(6, i - 1); };
        ref.set_bracket(1, 5, Scalar(-2) * f(1));
        ref.set_bracket(2, 5, f(2));
        ref.set_bracket(3, 5, f(3));
        ref.set_bracket(2, 6, -f(3));
        ref.set_bracket(3, 6, f(2));
        REQUIRE(!ref.jacobi_check());
        REQUIRE(fingerprint(g) == fingerprint(ref));
        auto rep = verify_nilradical(ref, std::vector<int>{1, 2, 3, 4});
        REQUIRE(rep.certified());
    }

    SECTION("parameter validation") {
        REQUIRE_THROWS_AS(g2n_family(2, Scalar(1), Scalar(1), Scalar(1)), std::invalid_argument);
        REQUIRE_THROWS_AS(g2n_family(3, Scalar(0), Scalar(1), Scalar(1)), std::invalid_argument);
        REQUIRE_THROWS_AS(g2n_family(3, Scalar(1), Scalar(0), Scalar(1)), std::invalid_argument);
        REQUIRE_THROWS_AS(g2n_family(3, Scalar(1), Scalar(1), Scalar(0)), std::invalid_argument);
    }
}
