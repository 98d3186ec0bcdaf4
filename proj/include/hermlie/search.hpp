#pragma once

// Exact feasibility search for SKT or Kaehler metrics compatible with a fixed
// integrable complex structure J.
//
// Once J is fixed, both conditions are linear in the fundamental form omega:
//
//   (1,1)    omega(Jx, Jy) = omega(x, y)
//   Kaehler  d omega = 0
//   SKT      d( d omega(J., J., J.) ) = 0
//
// The solution space of the combined system is computed exactly over the
// scalar field. Positive definiteness of the induced metric
// g(x, y) = omega(Jx, y) is a convex but non-linear constraint, so the kernel
// is hunted: first the orthogonal projection of a canonical compatible
// fundamental form onto the solution space, then the signed kernel basis
// vectors, then seeded random small-integer combinations, each certified by
// exact elimination pivots. The search is deliberately tri-state - UNKNOWN
// means the budget expired, never that no metric exists.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/hermitian.hpp"
#include "hermlie/kform.hpp"
#include "hermlie/liealg.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie {

enum class SearchStatus {
    FOUND,         ///< an exact witness metric is attached
    EMPTY_LINEAR,  ///< even the linear system has only the zero solution
    UNKNOWN,       ///< budget expired without a positive definite point
};

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::FOUND: return "FOUND";
        case SearchStatus::EMPTY_LINEAR: return "EMPTY_LINEAR";
        case SearchStatus::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::UNKNOWN;
    std::optional<KForm> omega;   ///< witness fundamental form when FOUND
    std::optional<Metric> metric; ///< witness metric when FOUND
    int kernel_dim = 0;           ///< dimension of the linear solution space
    int attempts = 0;             ///< positive definiteness tests performed
};

namespace detail {

/// Coordinates on the space of 2-forms: the pairs (i, j), i < j, in
/// lexicographic order; omega corresponds to the vector of its coefficients.
inline std::vector<std::pair<int, int>> two_form_index(int n) {
    std::vector<std::pair<int, int>> index;
    index.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) index.emplace_back(i, j);
    return index;
}

inline Vector two_form_coordinates(const KForm& omega,
                                   const std::vector<std::pair<int, int>>& index) {
    Vector w(static_cast<int>(index.size()));
    for (std::size_t p = 0; p < index.size(); ++p)
        w[static_cast<int>(p)] = omega.coefficient({index[p].first, index[p].second});
    return w;
}

inline KForm two_form_from_coordinates(const Vector& w, int n,
                                       const std::vector<std::pair<int, int>>& index) {
    KForm omega(n, 2);
    for (std::size_t p = 0; p < index.size(); ++p) {
        const Scalar& c = w[static_cast<int>(p)];
        if (!c.is_zero()) omega.add_term({index[p].first, index[p].second}, c);
    }
    return omega;
}

/// All ascending k-tuples from {1..n}, lexicographically.
inline std::vector<IndexTuple> ascending_tuples(int n, int k) {
    std::vector<IndexTuple> out;
    if (k > n) return out;
    IndexTuple t(k);
    for (int i = 0; i < k; ++i) t[i] = i + 1;
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// The homogeneous system whose kernel is the space of J-invariant 2-forms
/// that are closed (kahler) or have closed torsion d(J-pullback of d omega).
inline Matrix search_system(const LieAlgebra& l, const ComplexStructure& j, bool kahler) {
    const int n = l.dim();
    const auto index = two_form_index(n);
    const int cols = static_cast<int>(index.size());

    std::vector<KForm> invariance;  // j_transform(beta) - beta, degree 2
    std::vector<KForm> closure;     // d beta or d(j_transform(d beta)), degree 3 or 4
    invariance.reserve(index.size());
    closure.reserve(index.size());
    for (const auto& [a, b] : index) {
        KForm beta(n, 2);
        beta.add_term({a, b}, Scalar(1));
        invariance.push_back(j_transform(j.matrix(), beta) - beta);
        KForm dbeta = l.ce_differential(beta);
        closure.push_back(kahler ? std::move(dbeta)
                                 : l.ce_differential(j_transform(j.matrix(), dbeta)));
    }

    const auto tuples = ascending_tuples(n, kahler ? 3 : 4);
    Matrix system(cols + static_cast<int>(tuples.size()), cols);
    for (int p = 0; p < cols; ++p) {
        for (int r = 0; r < cols; ++r)
            system(r, p) = invariance[p].coefficient({index[r].first, index[r].second});
        for (std::size_t r = 0; r < tuples.size(); ++r)
            system(cols + static_cast<int>(r), p) = closure[p].coefficient(tuples[r]);
    }
    return system;
}

/// The symmetric matrix of g(x, y) determined by omega(x, y) = g(Jx, y):
/// G = -J^t W, where W is the skew coefficient matrix of omega. Symmetry is
/// automatic for J-invariant omega.
inline Matrix induced_metric_matrix(const Matrix& jm, const Vector& w,
                                    const std::vector<std::pair<int, int>>& index) {
    const int n = jm.rows();
    Matrix skew(n, n);
    for (std::size_t p = 0; p < index.size(); ++p) {
        const auto& [i, j] = index[p];
        skew(i - 1, j - 1) = w[static_cast<int>(p)];
        skew(j - 1, i - 1) = -w[static_cast<int>(p)];
    }
    return Scalar(-1) * (jm.transpose() * skew);
}

/// Exact positive definiteness of a symmetric matrix via elimination pivots
/// (the successive ratios of leading principal minors).
inline bool positive_definite(Matrix m) {
    const int n = m.rows();
    for (int k = 0; k < n; ++k) {
        if (!(Scalar(0) < m(k, k))) return false;
        for (int i = k + 1; i < n; ++i) {
            const Scalar f = m(i, k) / m(k, k);
            for (int c = k + 1; c < n; ++c) m(i, c) = m(i, c) - f * m(k, c);
            m(i, k) = Scalar(0);
        }
    }
    return true;
}

inline SearchOutcome metric_search(const LieAlgebra& l, const ComplexStructure& j, bool kahler,
                                   int budget, std::uint64_t seed) {
    require_integrable(l, j, "the metric search");
    const int n = l.dim();
    const auto index = two_form_index(n);
    const int cols = static_cast<int>(index.size());

    const std::vector<Vector> basis = search_system(l, j, kahler).kernel();
    SearchOutcome out;
    out.kernel_dim = static_cast<int>(basis.size());
    if (basis.empty()) {
        out.status = SearchStatus::EMPTY_LINEAR;
        return out;
    }

    const Matrix jm = j.matrix();
    auto accept = [&](const Vector& w) -> bool {
        ++out.attempts;
        if (w.is_zero()) return false;
        const Matrix g = induced_metric_matrix(jm, w, index);
        if (!positive_definite(g)) return false;
        // Re-derive every property through the verification layer; the
        // constraint system is not trusted for the final answer.
        Metric metric(g);
        HermitianData hd(l, j, metric);
        if (!(kahler ? is_kahler(hd) : is_skt(hd)))
            throw std::logic_error("metric search: witness failed re-verification");
        out.omega = two_form_from_coordinates(w, n, index);
        out.metric = std::move(metric);
        out.status = SearchStatus::FOUND;
        return true;
    };

    // (a) Project the fundamental form of the J-symmetrized identity metric
    // onto the solution space (least squares via the exact Gram system).
    Matrix span(cols, out.kernel_dim);
    for (int c = 0; c < out.kernel_dim; ++c)
        for (int r = 0; r < cols; ++r) span(r, c) = basis[static_cast<std::size_t>(c)][r];
    const Scalar half(1, 2);
    const Matrix gsym = half * (Matrix::identity(n) + jm.transpose() * jm);
    const Vector target = two_form_coordinates(
        [&] {
            const Matrix w0 = jm.transpose() * gsym;
            KForm omega0(n, 2);
            for (const auto& [i, j2] : index) {
                if (!w0(i - 1, j2 - 1).is_zero()) omega0.add_term({i, j2}, w0(i - 1, j2 - 1));
            }
            return omega0;
        }(),
        index);
    const Matrix gram = span.transpose() * span;
    if (auto coeffs = gram.solve(span.transpose() * target)) {
        if (out.attempts < budget && accept(span * *coeffs)) return out;
    }

    // (b) The signed kernel basis vectors themselves.
    for (const Vector& b : basis) {
        if (out.attempts < budget && accept(b)) return out;
        if (out.attempts < budget && accept(-b)) return out;
    }

    // (c) Seeded random small-integer combinations of the kernel basis.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    while (out.attempts < budget) {
        Vector w(cols);
        for (const Vector& b : basis) {
            const int c = small(rng);
            if (c != 0) w = w + Scalar(c) * b;
        }
        if (accept(w)) return out;
    }
    out.status = SearchStatus::UNKNOWN;
    return out;
}

}  // namespace detail

/// Hunt for a metric g making (J, g) an SKT structure on l. FOUND attaches an
/// exact witness; EMPTY_LINEAR certifies that even the linear closure system
/// forces omega = 0; UNKNOWN is inconclusive and never a nonexistence claim.
inline SearchOutcome skt_metric_search(const LieAlgebra& l, const ComplexStructure& j,
                                       int budget = 512, std::uint64_t seed = 0) {
    return detail::metric_search(l, j, false, budget, seed);
}

/// Same search with the closure condition d omega = 0.
inline SearchOutcome kahler_metric_search(const LieAlgebra& l, const ComplexStructure& j,
                                          int budget = 512, std::uint64_t seed = 0) {
    return detail::metric_search(l, j, true, budget, seed);
}

}  // namespace hermlie
