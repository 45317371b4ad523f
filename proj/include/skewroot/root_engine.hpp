#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "skew_poly.hpp"

namespace skewroot {

/// Roots of a product of linear factors, one per conjugacy class.
/// factors[0] = d_1 is the rightmost factor of P = (x-d_n)...(x-d_1).
struct RootSolution {
    struct Root {
        std::size_t factor_index;     // 0-based index into factors
        AlgebraElement zeta;          // the verified right root
        CentralPolynomial class_poly; // minimal polynomial of its class
    };
    std::vector<AlgebraElement> factors;
    SkewPolynomial polynomial;  // the expanded product
    std::vector<Root> roots;
};

/// Output of the quadratic-with-infinitely-many-roots construction:
/// P = (x-b)(x-a) with a finite certified sample of the root family and of
/// the non-root family inside the conjugacy class of a.
struct CounterexampleReport {
    AlgebraElement a;
    CentralPolynomial lambda;  // class minimal polynomial, degree > 2
    AlgebraElement d;          // the chosen non-commuting conjugator
    AlgebraElement b;
    SkewPolynomial p;          // (x - b)(x - a)
    std::vector<AlgebraElement> roots;
    std::vector<AlgebraElement> nonroots;
    AlgebraElement witness;    // t with t*a*t^-1 not a root of p
    SkewPolynomial remainder_p_mod_lambda;  // nonzero: lambda does not divide p
};

namespace detail {

inline void require_same_algebra(const std::vector<AlgebraElement>& ds) {
    for (std::size_t k = 1; k < ds.size(); ++k)
        if (ds[k].algebra() != ds[0].algebra() && !(*ds[k].algebra() == *ds[0].algebra()))
            raise(Errc::MixedAlgebras, "factors from different algebras");
}

inline std::vector<CentralPolynomial> distinct_class_polys(
    const std::vector<AlgebraElement>& ds) {
    std::vector<CentralPolynomial> fs;
    fs.reserve(ds.size());
    for (const auto& d : ds) fs.push_back(minimal_polynomial(d));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t k = i + 1; k < fs.size(); ++k)
            if (fs[i] == fs[k])
                raise(Errc::ClassesNotDistinct,
                      "factors " + std::to_string(i + 1) + " and " + std::to_string(k + 1) +
                          " lie in the same conjugacy class");
    return fs;
}

}  // namespace detail

/// Cofactor S of the minimal polynomial: lambda = S * (x - d). Because the
/// coefficients of S lie in the commutative subfield generated by d, the
/// two-sided identity lambda = (x - d) * S holds as well and is asserted.
inline SkewPolynomial split_factor(const AlgebraElement& d) {
    const auto lambda = lift(minimal_polynomial(d), d.algebra());
    auto [s, rem] = lambda.right_divide(SkewPolynomial::x_minus(d));
    if (!rem.is_zero())
        raise(Errc::InternalContradiction, "minimal polynomial not divisible by x - d");
    if (SkewPolynomial::x_minus(d) * s != lambda)
        raise(Errc::InternalContradiction, "split factor does not commute with x - d");
    return s;
}

/// All roots of P = (x-d_n)...(x-d_1) when the classes [d_k] are pairwise
/// distinct: zeta_k = P_k(d_k) d_k P_k(d_k)^-1 with P_k = S_1 ... S_{k-1}.
/// Every zeta is re-verified by evaluation before it is returned.
inline RootSolution linear_factor_roots(const std::vector<AlgebraElement>& ds) {
    if (ds.empty()) raise(Errc::InvalidArgument, "empty factor list");
    detail::require_same_algebra(ds);
    auto fs = detail::distinct_class_polys(ds);
    const auto& alg = ds[0].algebra();

    RootSolution sol{ds, from_linear_factors(ds), {}};
    auto pk = SkewPolynomial::one(alg);  // S_1 ... S_{k-1}, starts empty
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const auto h = pk.right_eval(ds[k]);
        if (h.is_zero())
            raise(Errc::InternalContradiction, "P_k vanishes at d_k");
        const auto zeta = h * ds[k] * h.inverse();
        if (!sol.polynomial.right_eval(zeta).is_zero())
            raise(Errc::InternalContradiction, "computed zeta is not a root");
        if (minimal_polynomial(zeta) != fs[k])
            raise(Errc::InternalContradiction, "computed zeta left its conjugacy class");
        sol.roots.push_back({k, zeta, fs[k]});
        if (k + 1 < ds.size()) pk = pk * split_factor(ds[k]);
    }
    return sol;
}

/// Quaternion-only form of the same root formula, using the conjugate
/// polynomial of P_k = (x-q_{k-1})...(x-q_1) instead of the split-factor
/// product. Produces the identical multiset of roots.
inline RootSolution quaternion_roots(const std::vector<AlgebraElement>& qs) {
    if (qs.empty()) raise(Errc::InvalidArgument, "empty factor list");
    detail::require_same_algebra(qs);
    if (qs[0].algebra()->kind() != AlgebraKind::Quaternion)
        raise(Errc::UnsupportedAlgebra, "conjugate-polynomial formula needs quaternions");
    for (std::size_t k = 0; k < qs.size(); ++k)
        if (qs[k].is_central())
            raise(Errc::CentralFactor, "factor " + std::to_string(k + 1) +
                                           " is central; use linear_factor_roots");
    auto fs = detail::distinct_class_polys(qs);
    const auto& alg = qs[0].algebra();

    RootSolution sol{qs, from_linear_factors(qs), {}};
    auto pk = SkewPolynomial::one(alg);  // (x-q_{k-1})...(x-q_1)
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const auto h = pk.conjugated().right_eval(qs[k]);
        if (h.is_zero())
            raise(Errc::InternalContradiction, "conjugate polynomial vanishes at q_k");
        const auto zeta = h * qs[k] * h.inverse();
        if (!sol.polynomial.right_eval(zeta).is_zero())
            raise(Errc::InternalContradiction, "computed zeta is not a root");
        sol.roots.push_back({k, zeta, fs[k]});
        if (k + 1 < qs.size()) pk = SkewPolynomial::x_minus(qs[k]) * pk;
    }
    return sol;
}

/// Reorder a product of two linear factors:
/// (x-d2)(x-d1) = (x-d)(x-d3) with d3 = S(d2) d2 S(d2)^-1 for the split
/// factor S of d1, and d = (d1-d3) d1 (d1-d3)^-1. The identity is verified
/// coefficientwise before returning (d, d3).
inline std::pair<AlgebraElement, AlgebraElement> swap_factors(const AlgebraElement& d1,
                                                              const AlgebraElement& d2) {
    detail::require_same_algebra({d1, d2});
    detail::distinct_class_polys({d1, d2});
    const auto s = split_factor(d1);
    const auto sd2 = s.right_eval(d2);
    if (sd2.is_zero())
        raise(Errc::InternalContradiction, "split factor vanishes at d2");
    const auto d3 = sd2 * d2 * sd2.inverse();
    AlgebraElement d = d1;
    if (d3 != d1) {  // equal only when d1 is central, where d = d1 already
        const auto h = d1 - d3;
        d = h * d1 * h.inverse();
    }
    const auto lhs = SkewPolynomial::x_minus(d2) * SkewPolynomial::x_minus(d1);
    const auto rhs = SkewPolynomial::x_minus(d) * SkewPolynomial::x_minus(d3);
    if (lhs != rhs)
        raise(Errc::InternalContradiction, "swap identity failed to verify");
    return {d, d3};
}

/// Quaternion shortcut for the same reordering, via h = d2 - conj(d1):
/// (x-d2)(x-d1) = (x - h d1 h^-1)(x - h d2 h^-1).
inline std::pair<AlgebraElement, AlgebraElement> quaternion_swap(const AlgebraElement& d1,
                                                                 const AlgebraElement& d2) {
    detail::require_same_algebra({d1, d2});
    if (d1.algebra()->kind() != AlgebraKind::Quaternion)
        raise(Errc::UnsupportedAlgebra, "quaternion_swap needs a quaternion algebra");
    if (d1.is_central())
        raise(Errc::CentralFirstFactor, "d1 is central; its split factor is trivial");
    detail::distinct_class_polys({d1, d2});
    const auto h = d2 - d1.conjugated();
    if (h.is_zero())
        raise(Errc::InternalContradiction, "d2 equals conj(d1) despite distinct classes");
    const auto hinv = h.inverse();
    const auto left = h * d1 * hinv;
    const auto right = h * d2 * hinv;
    const auto lhs = SkewPolynomial::x_minus(d2) * SkewPolynomial::x_minus(d1);
    const auto rhs = SkewPolynomial::x_minus(left) * SkewPolynomial::x_minus(right);
    if (lhs != rhs)
        raise(Errc::InternalContradiction, "quaternion swap identity failed to verify");
    return {left, right};
}

/// True iff P vanishes on the whole conjugacy class of a, i.e. the class
/// minimal polynomial right-divides P.
inline bool vanishes_on_class(const SkewPolynomial& p, const AlgebraElement& a) {
    const auto lambda = lift(minimal_polynomial(a), a.algebra());
    return p.right_divide(lambda).second.is_zero();
}

/// Search for t with t*a != a*t whose conjugate t*a*t^-1 is not a root of P.
/// Samples random elements with geometrically growing coordinate bound.
/// Requires that P does not vanish on [a]; otherwise no witness exists and
/// the search reports exhaustion immediately.
inline AlgebraElement find_nonroot_witness(const SkewPolynomial& p, const AlgebraElement& a,
                                           std::mt19937_64& rng, long budget) {
    if (vanishes_on_class(p, a))
        raise(Errc::WitnessSearchExhausted,
              "polynomial vanishes on the entire class; no witness exists");
    const auto& alg = a.algebra();
    long bound = 1;
    for (long attempt = 0; attempt < budget; ++attempt) {
        if (attempt > 0 && attempt % 64 == 0) bound *= 2;
        const auto t = random_element(alg, rng, bound);
        if (t.is_zero() || t.commutes_with(a)) continue;
        if (!p.right_eval(t * a * t.inverse()).is_zero()) return t;
    }
    raise(Errc::WitnessSearchExhausted,
          "no non-root witness within " + std::to_string(budget) + " samples");
}

namespace detail {

/// Conjugates (t+z)a(t+z)^-1 for z = 0, 1, 2, ... in Z(a). Distinct z give
/// distinct conjugates whenever t does not commute with a, so the integer
/// schedule never runs dry; duplicates are skipped defensively all the same.
inline std::vector<AlgebraElement> conjugate_family(const AlgebraElement& a,
                                                    const AlgebraElement& t, long count) {
    std::vector<AlgebraElement> out;
    const auto& alg = a.algebra();
    long m = 0;
    const long limit = 4 * count + 16;
    while (static_cast<long>(out.size()) < count) {
        if (m >= limit)
            raise(Errc::InternalContradiction, "conjugate family stopped producing elements");
        const auto tm = t + AlgebraElement::scalar(alg, Rational(m));
        ++m;
        if (tm.is_zero() || tm.commutes_with(a)) continue;
        auto c = tm * a * tm.inverse();
        bool dup = false;
        for (const auto& seen : out) dup = dup || seen == c;
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace detail

/// The quadratic P = (x-b)(x-a) with b = (q-a)q(q-a)^-1, q = d a d^-1.
/// When the class minimal polynomial of a has degree > 2, P has infinitely
/// many roots and infinitely many non-roots inside [a]; this produces and
/// verifies finite samples of both families.
inline CounterexampleReport build_quadratic_counterexample(const AlgebraElement& a,
                                                           const AlgebraElement& d,
                                                           long num_roots, long num_nonroots,
                                                           std::mt19937_64& rng,
                                                           long witness_budget = 4096) {
    detail::require_same_algebra({a, d});
    if (num_roots < 0 || num_nonroots < 0)
        raise(Errc::InvalidArgument, "family sizes must be nonnegative");
    auto lambda = minimal_polynomial(a);
    if (lambda.degree() <= 2)
        raise(Errc::MinimalPolynomialTooSmall,
              "class minimal polynomial must have degree > 2");
    if (d.commutes_with(a))
        raise(Errc::ElementsCommute, "d must not commute with a");

    const auto q = d * a * d.inverse();
    const auto qa = q - a;  // nonzero since d and a do not commute
    const auto b = qa * q * qa.inverse();
    const auto p = SkewPolynomial::x_minus(b) * SkewPolynomial::x_minus(a);

    auto roots = detail::conjugate_family(a, d, num_roots);
    for (const auto& r : roots) {
        if (!p.right_eval(r).is_zero())
            raise(Errc::InternalContradiction, "root family member failed evaluation");
        if (minimal_polynomial(r) != lambda)
            raise(Errc::InternalContradiction, "root family member left the class");
    }

    const auto witness = find_nonroot_witness(p, a, rng, witness_budget);
    auto nonroots = detail::conjugate_family(a, witness, num_nonroots);
    for (const auto& s : nonroots) {
        if (p.right_eval(s).is_zero())
            raise(Errc::InternalContradiction, "non-root family member evaluated to zero");
        if (minimal_polynomial(s) != lambda)
            raise(Errc::InternalContradiction, "non-root family member left the class");
    }
    for (const auto& r : roots)
        for (const auto& s : nonroots)
            if (r == s) raise(Errc::InternalContradiction, "families are not disjoint");

    auto rem = p.right_divide(lift(lambda, a.algebra())).second;
    if (rem.is_zero())
        raise(Errc::InternalContradiction, "lambda divides P despite deg lambda > deg P");

    return CounterexampleReport{a, std::move(lambda), d, b, p, std::move(roots),
                                std::move(nonroots), witness, std::move(rem)};
}

/// Randomized confirmation that P = (x-d_n)...(x-d_1) has exactly one root
/// per class: the formula roots evaluate to zero, sampled other conjugates
/// do not, and every root's minimal polynomial matches some factor's.
inline bool verify_exact_root_count(const std::vector<AlgebraElement>& ds,
                                    long samples_per_class, std::mt19937_64& rng,
                                    long sample_bound = 4) {
    const auto sol = linear_factor_roots(ds);  // raises ClassesNotDistinct if violated
    for (const auto& root : sol.roots) {
        if (!sol.polynomial.right_eval(root.zeta).is_zero()) return false;
        bool matches_factor = false;
        for (const auto& other : sol.roots)
            matches_factor =
                matches_factor || minimal_polynomial(root.zeta) == other.class_poly;
        if (!matches_factor) return false;

        // a central factor has a singleton class: no other conjugate to sample
        if (ds[root.factor_index].is_central()) continue;
        long checked = 0;
        while (checked < samples_per_class) {
            const auto s = random_element(ds[0].algebra(), rng, sample_bound);
            if (s.is_zero()) continue;
            const auto c = s * ds[root.factor_index] * s.inverse();
            if (c == root.zeta) continue;  // the one legitimate root of this class
            ++checked;
            if (sol.polynomial.right_eval(c).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace skewroot
