#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "root_engine.hpp"
#include "skew_poly.hpp"

namespace skewroot {

// ---------------------------------------------------------------------------
// Deterministic samplers used by the property suites and the test harness.
// ---------------------------------------------------------------------------

inline AlgebraElement sample_nonzero(const AlgebraPtr& alg, std::mt19937_64& rng, long bound) {
    for (;;) {
        auto e = random_element(alg, rng, bound);
        if (!e.is_zero()) return e;
    }
}

inline AlgebraElement sample_noncentral(const AlgebraPtr& alg, std::mt19937_64& rng,
                                        long bound) {
    for (;;) {
        auto e = random_element(alg, rng, bound);
        if (!e.is_central()) return e;
    }
}

/// n factors whose minimal polynomials are pairwise distinct.
inline std::vector<AlgebraElement> sample_distinct_class_factors(const AlgebraPtr& alg,
                                                                 std::mt19937_64& rng,
                                                                 std::size_t n, long bound,
                                                                 bool noncentral) {
    std::vector<AlgebraElement> factors;
    std::vector<CentralPolynomial> polys;
    long guard = 0;
    while (factors.size() < n) {
        if (++guard > 10000)
            raise(Errc::InternalContradiction, "factor sampling failed to make progress");
        auto e = noncentral ? sample_noncentral(alg, rng, bound)
                            : random_element(alg, rng, bound);
        auto f = minimal_polynomial(e);
        bool clash = false;
        for (const auto& seen : polys) clash = clash || seen == f;
        if (clash) continue;
        factors.push_back(std::move(e));
        polys.push_back(std::move(f));
    }
    return factors;
}

/// Random polynomial of exactly the given degree.
inline SkewPolynomial sample_poly(const AlgebraPtr& alg, std::mt19937_64& rng,
                                  std::size_t degree, long bound) {
    std::vector<AlgebraElement> coeffs;
    coeffs.reserve(degree + 1);
    for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(random_element(alg, rng, bound));
    coeffs.push_back(sample_nonzero(alg, rng, bound));
    return SkewPolynomial(alg, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Property suites. Every suite is pure in (trials, seed) and reports exact
// (zero-tolerance) checks only.
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::vector<std::string> notes;  // one entry per failed trial
    bool witness_required = false;   // prop163 must also exhibit non-multiplicativity
    bool witness_found = false;

    bool passed() const { return failures == 0 && (!witness_required || witness_found); }
};

namespace detail {

inline void note_failure(SuiteResult& result, int trial, const std::string& what) {
    ++result.failures;
    result.notes.push_back("trial " + std::to_string(trial) + ": " + what);
}

template <typename Fn>
inline void run_trial(SuiteResult& result, int trial, Fn&& body) {
    try {
        body();
    } catch (const Error& e) {
        note_failure(result, trial, e.what());
    }
}

}  // namespace detail

/// (L*R)(d) = L(h d h^-1) R(d) for h = R(d) != 0, checked exactly; the run
/// must also find a triple where evaluation fails to be multiplicative.
inline SuiteResult run_suite_prop163(int trials, std::uint64_t seed, long bound = 2) {
    SuiteResult result{"prop163"};
    result.trials = trials;
    result.witness_required = trials > 0;
    std::mt19937_64 rng(seed ^ 0x70726f70313633ULL);
    const auto quat = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    const auto cyclic = AlgebraDescriptor::cyclic_default();
    for (int t = 0; t < trials; ++t) {
        detail::run_trial(result, t, [&] {
            const auto& alg = (t % 2 == 0) ? quat : cyclic;
            const auto l = sample_poly(alg, rng, rng() % 4, bound);
            const auto r = sample_poly(alg, rng, rng() % 4, bound);
            AlgebraElement d = random_element(alg, rng, bound);
            while (r.right_eval(d).is_zero()) d = random_element(alg, rng, bound);
            const auto [lhs, rhs] = product_eval_check(l, r, d);
            if (lhs != rhs) {
                detail::note_failure(result, t, "product evaluation rule violated");
                return;
            }
            if (lhs != l.right_eval(d) * r.right_eval(d)) result.witness_found = true;
        });
    }
    return result;
}

/// Formula roots of random products of linear factors, re-verified from
/// outside the engine; on all-noncentral quaternion inputs the conjugate
/// polynomial route must agree elementwise.
inline SuiteResult run_suite_roots(int trials, std::uint64_t seed, long bound = 2) {
    SuiteResult result{"roots"};
    result.trials = trials;
    std::mt19937_64 rng(seed ^ 0x726f6f7473ULL);
    const auto quat = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    const auto cyclic = AlgebraDescriptor::cyclic_default();
    for (int t = 0; t < trials; ++t) {
        detail::run_trial(result, t, [&] {
            const bool use_cyclic = (t % 4 == 3);
            const auto& alg = use_cyclic ? cyclic : quat;
            const std::size_t n = use_cyclic ? 2 : 2 + t % 3;
            const auto factors = sample_distinct_class_factors(alg, rng, n, bound, !use_cyclic);
            const auto sol = linear_factor_roots(factors);
            if (sol.roots.size() != n) {
                detail::note_failure(result, t, "wrong number of roots");
                return;
            }
            for (const auto& root : sol.roots) {
                if (!sol.polynomial.right_eval(root.zeta).is_zero() ||
                    !are_conjugate(root.zeta, factors[root.factor_index])) {
                    detail::note_failure(result, t, "root failed re-verification");
                    return;
                }
            }
            if (!use_cyclic) {
                const auto qsol = quaternion_roots(factors);
                for (std::size_t k = 0; k < n; ++k) {
                    if (qsol.roots[k].zeta != sol.roots[k].zeta) {
                        detail::note_failure(result, t, "conjugate formula disagrees");
                        return;
                    }
                }
            }
        });
    }
    return result;
}

/// Factor reordering identity, general route and quaternion shortcut.
inline SuiteResult run_suite_swap(int trials, std::uint64_t seed, long bound = 2) {
    SuiteResult result{"swap"};
    result.trials = trials;
    std::mt19937_64 rng(seed ^ 0x73776170ULL);
    const auto quat = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    const auto cyclic = AlgebraDescriptor::cyclic_default();
    for (int t = 0; t < trials; ++t) {
        detail::run_trial(result, t, [&] {
            const bool use_cyclic = (t % 3 == 2);
            const auto& alg = use_cyclic ? cyclic : quat;
            const auto pair = sample_distinct_class_factors(alg, rng, 2, bound, !use_cyclic);
            const auto [d, d3] = swap_factors(pair[0], pair[1]);
            const auto lhs = SkewPolynomial::x_minus(pair[1]) * SkewPolynomial::x_minus(pair[0]);
            const auto rhs = SkewPolynomial::x_minus(d) * SkewPolynomial::x_minus(d3);
            if (lhs != rhs) {
                detail::note_failure(result, t, "swap identity violated");
                return;
            }
            if (!use_cyclic) {
                const auto [l2, r2] = quaternion_swap(pair[0], pair[1]);
                if (l2 != d || r2 != d3)
                    detail::note_failure(result, t, "quaternion shortcut disagrees");
            }
        });
    }
    return result;
}

/// Quadratic counterexample construction on random degree-3 classes of the
/// default cyclic algebra, with the unique-common-root remark checked over
/// the generated families.
inline SuiteResult run_suite_counterexample(int trials, std::uint64_t seed, long bound = 2) {
    SuiteResult result{"counterexample"};
    result.trials = trials;
    std::mt19937_64 rng(seed ^ 0x636f756e746572ULL);
    const auto cyclic = AlgebraDescriptor::cyclic_default();
    for (int t = 0; t < trials; ++t) {
        detail::run_trial(result, t, [&] {
            AlgebraElement a = random_element(cyclic, rng, bound);
            while (minimal_polynomial(a).degree() <= 2) a = random_element(cyclic, rng, bound);
            AlgebraElement d = random_element(cyclic, rng, bound);
            while (d.is_zero() || d.commutes_with(a)) d = random_element(cyclic, rng, bound);
            const auto report = build_quadratic_counterexample(a, d, 4, 4, rng);

            for (const auto& r : report.roots)
                if (!report.p.right_eval(r).is_zero() || minimal_polynomial(r) != report.lambda) {
                    detail::note_failure(result, t, "invalid root family member");
                    return;
                }
            for (const auto& s : report.nonroots)
                if (report.p.right_eval(s).is_zero() || minimal_polynomial(s) != report.lambda) {
                    detail::note_failure(result, t, "invalid non-root family member");
                    return;
                }
            if (report.remainder_p_mod_lambda.is_zero()) {
                detail::note_failure(result, t, "lambda divides P");
                return;
            }

            // remark: a is the only common root of (x-b)(x-a) and (x-b1)(x-a)
            const auto w = report.witness;
            const auto c = w * report.a * w.inverse();
            const auto ca = c - report.a;
            const auto b1 = ca * c * ca.inverse();
            const auto p1 =
                SkewPolynomial::x_minus(b1) * SkewPolynomial::x_minus(report.a);
            if (!p1.right_eval(report.a).is_zero()) {
                detail::note_failure(result, t, "a is not a root of the witness quadratic");
                return;
            }
            for (const auto& r : report.roots)
                if (r != report.a && p1.right_eval(r).is_zero()) {
                    detail::note_failure(result, t, "unexpected common root of the quadratics");
                    return;
                }
        });
    }
    return result;
}

/// Gordon-Motzkin conformance: every produced root is conjugate to a factor,
/// and sampled conjugates exhibit no extra roots.
inline SuiteResult run_suite_gm(int trials, std::uint64_t seed, long bound = 2) {
    SuiteResult result{"gm"};
    result.trials = trials;
    std::mt19937_64 rng(seed ^ 0x676dULL);
    const auto quat = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    for (int t = 0; t < trials; ++t) {
        detail::run_trial(result, t, [&] {
            const std::size_t n = 2 + t % 3;
            const auto factors = sample_distinct_class_factors(quat, rng, n, bound, false);
            const auto sol = linear_factor_roots(factors);
            for (const auto& root : sol.roots) {
                const auto poly = minimal_polynomial(root.zeta);
                bool matches = false;
                for (const auto& other : sol.roots) matches = matches || poly == other.class_poly;
                if (!matches) {
                    detail::note_failure(result, t, "root outside every factor class");
                    return;
                }
            }
            if (!verify_exact_root_count(factors, 5, rng))
                detail::note_failure(result, t, "sampled extra root in some class");
        });
    }
    return result;
}

/// Run one named suite or all of them. Valid names: prop163, roots, swap,
/// counterexample, gm, all.
inline std::vector<SuiteResult> run_verify_suites(const std::string& which, int trials,
                                                  std::uint64_t seed, long bound = 2) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    if (all || which == "prop163") out.push_back(run_suite_prop163(trials, seed, bound));
    if (all || which == "roots") out.push_back(run_suite_roots(trials, seed, bound));
    if (all || which == "swap") out.push_back(run_suite_swap(trials, seed, bound));
    if (all || which == "counterexample")
        out.push_back(run_suite_counterexample(trials, seed, bound));
    if (all || which == "gm") out.push_back(run_suite_gm(trials, seed, bound));
    if (out.empty())
        raise(Errc::InvalidArgument, "unknown suite '" + which +
                                         "'; expected prop163, roots, swap, counterexample, "
                                         "gm, or all");
    return out;
}

}  // namespace skewroot
