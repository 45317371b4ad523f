#include "test_helpers.hpp"

using namespace skt;

namespace {

const AlgebraElement I = AlgebraElement::gen_i(hamilton());
const AlgebraElement J = AlgebraElement::gen_j(hamilton());
const AlgebraElement K = AlgebraElement::gen_k(hamilton());
const AlgebraElement One = AlgebraElement::one(hamilton());

AlgebraElement theta() { return AlgebraElement::gen_theta(cyclic()); }
AlgebraElement gen_u() { return AlgebraElement::gen_u(cyclic()); }

}  // namespace

TEST_CASE("split_factor") {
    // minimal polynomial of i is x^2 + 1 = (x + i)(x - i)
    REQUIRE(split_factor(I) == SkewPolynomial(hamilton(), {I, One}));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        const auto d = sample_noncentral(hamilton(), rng, 3);
        REQUIRE(split_factor(d) == SkewPolynomial::x_minus(d.conjugated()));
    }

    // central element: lambda = x - d, cofactor is 1
    REQUIRE(split_factor(AlgebraElement::scalar(hamilton(), Rational(5, 2))) ==
            SkewPolynomial::one(hamilton()));

    // cyclic: lambda = S (x - theta) = (x - theta) S
    const auto s = split_factor(theta());
    const auto lambda = lift(minimal_polynomial(theta()), cyclic());
    REQUIRE(s * SkewPolynomial::x_minus(theta()) == lambda);
    REQUIRE(SkewPolynomial::x_minus(theta()) * s == lambda);
}

TEST_CASE("linear_factor_roots on the worked instance [i, 1+j]") {
    const auto sol = linear_factor_roots({I, One + J});
    REQUIRE(sol.roots.size() == 2);
    REQUIRE(sol.roots[0].zeta == I);

    // independent oracle: zeta_2 = (1+i+j)(1+j)(1+i+j)^-1 by element arithmetic
    const auto h = One + I + J;
    const auto oracle = h * (One + J) * h.inverse();
    REQUIRE(sol.roots[1].zeta == oracle);
    REQUIRE(sol.roots[1].zeta ==
            AlgebraElement(hamilton(),
                           {Rational(1), Rational(2, 3), Rational(1, 3), Rational(2, 3)}));
    REQUIRE(minimal_polynomial(sol.roots[1].zeta) ==
            CentralPolynomial({Rational(2), Rational(-2), Rational(1)}));
    REQUIRE(sol.polynomial.right_eval(sol.roots[1].zeta).is_zero());
}

TEST_CASE("linear_factor_roots basics") {
    SECTION("singleton") {
        const auto d = quat(1, 2, 3, 4);
        const auto sol = linear_factor_roots({d});
        REQUIRE(sol.roots.size() == 1);
        REQUIRE(sol.roots[0].zeta == d);
    }
    SECTION("central factors are fine") {
        const auto sol = linear_factor_roots({One, I});
        REQUIRE(sol.roots[0].zeta == One);
        REQUIRE(sol.roots[1].zeta == I);
    }
    SECTION("cyclic algebra instance") {
        const auto u = gen_u();
        const auto d2 = u * theta() * u.inverse() + AlgebraElement::one(cyclic());
        const auto sol = linear_factor_roots({theta(), d2});
        REQUIRE(sol.roots.size() == 2);
        for (const auto& root : sol.roots) {
            REQUIRE(sol.polynomial.right_eval(root.zeta).is_zero());
            REQUIRE(are_conjugate(root.zeta, sol.factors[root.factor_index]));
        }
    }
    SECTION("coinciding classes are rejected") {
        require_error(Errc::ClassesNotDistinct, [&] { linear_factor_roots({I, J}); });
        require_error(Errc::ClassesNotDistinct, [&] { linear_factor_roots({I, I}); });
    }
    SECTION("empty input") {
        require_error(Errc::InvalidArgument, [] { linear_factor_roots({}); });
    }
}

TEST_CASE("quaternion_roots agrees with the general formula") {
    const auto sol = quaternion_roots({I, One + J});
    const auto general = linear_factor_roots({I, One + J});
    REQUIRE(sol.roots.size() == 2);
    REQUIRE(sol.roots[0].zeta == general.roots[0].zeta);
    REQUIRE(sol.roots[1].zeta == general.roots[1].zeta);

    const auto single = quaternion_roots({I});
    REQUIRE(single.roots[0].zeta == I);

    SECTION("100 random triples with distinct classes") {
        std::mt19937_64 rng(32);
        for (int t = 0; t < 100; ++t) {
            const auto qs = sample_distinct_class_factors(hamilton(), rng, 3, 2, true);
            const auto a = quaternion_roots(qs);
            const auto b = linear_factor_roots(qs);
            for (std::size_t k = 0; k < qs.size(); ++k)
                REQUIRE(a.roots[k].zeta == b.roots[k].zeta);
        }
    }
    SECTION("central factor is rejected") {
        require_error(Errc::CentralFactor, [&] { quaternion_roots({One, I}); });
    }
    SECTION("non-quaternion algebra is rejected") {
        require_error(Errc::UnsupportedAlgebra, [&] { quaternion_roots({theta()}); });
    }
}

TEST_CASE("swap_factors") {
    SECTION("worked instance d1 = i, d2 = 1+j") {
        const auto [d, d3] = swap_factors(I, One + J);
        REQUIRE(d3 == AlgebraElement(hamilton(), {Rational(1), Rational(2, 3), Rational(1, 3),
                                                  Rational(2, 3)}));
        REQUIRE(SkewPolynomial::x_minus(One + J) * SkewPolynomial::x_minus(I) ==
                SkewPolynomial::x_minus(d) * SkewPolynomial::x_minus(d3));
    }
    SECTION("central first factor commutes") {
        const auto c = AlgebraElement::scalar(hamilton(), Rational(3, 2));
        const auto [d, d3] = swap_factors(c, One + J);
        REQUIRE(d == c);
        REQUIRE(d3 == One + J);
    }
    SECTION("random pairs, both algebras") {
        std::mt19937_64 rng(33);
        for (int t = 0; t < 60; ++t) {
            const auto& alg = t % 3 == 2 ? cyclic() : hamilton();
            const auto pair = sample_distinct_class_factors(alg, rng, 2, 2, false);
            const auto [d, d3] = swap_factors(pair[0], pair[1]);
            REQUIRE(SkewPolynomial::x_minus(pair[1]) * SkewPolynomial::x_minus(pair[0]) ==
                    SkewPolynomial::x_minus(d) * SkewPolynomial::x_minus(d3));
        }
    }
    SECTION("same class rejected") {
        require_error(Errc::ClassesNotDistinct, [&] { swap_factors(I, J); });
    }
}

TEST_CASE("quaternion_swap") {
    SECTION("worked instance h = 1+i+j") {
        const auto [l, r] = quaternion_swap(I, One + J);
        const auto [d, d3] = swap_factors(I, One + J);
        REQUIRE(l == d);
        REQUIRE(r == d3);
        const auto h = (One + J) - I.conjugated();
        REQUIRE(h == One + I + J);
        REQUIRE(l == h * I * h.inverse());
    }
    SECTION("i and 2i have distinct classes") {
        const auto [l, r] = quaternion_swap(I, Rational(2) * I);
        REQUIRE(SkewPolynomial::x_minus(Rational(2) * I) * SkewPolynomial::x_minus(I) ==
                SkewPolynomial::x_minus(l) * SkewPolynomial::x_minus(r));
    }
    SECTION("100 random pairs match swap_factors") {
        std::mt19937_64 rng(34);
        for (int t = 0; t < 100; ++t) {
            auto d1 = sample_noncentral(hamilton(), rng, 2);
            auto d2 = random_element(hamilton(), rng, 2);
            while (minimal_polynomial(d2) == minimal_polynomial(d1))
                d2 = random_element(hamilton(), rng, 2);
            const auto [l, r] = quaternion_swap(d1, d2);
            const auto [d, d3] = swap_factors(d1, d2);
            REQUIRE(l == d);
            REQUIRE(r == d3);
        }
    }
    SECTION("central first factor rejected") {
        require_error(Errc::CentralFirstFactor, [&] { quaternion_swap(One, I); });
    }
    SECTION("same class rejected") {
        require_error(Errc::ClassesNotDistinct, [&] { quaternion_swap(I, J); });
    }
}

TEST_CASE("vanishes_on_class") {
    const auto x2p1 = lift(CentralPolynomial({Rational(1), Rational(0), Rational(1)}),
                           hamilton());
    REQUIRE(vanishes_on_class(x2p1, I));

    const auto p = SkewPolynomial::x_minus(J) * SkewPolynomial::x_minus(I);
    REQUIRE_FALSE(vanishes_on_class(p, I));

    // witness inside [i]: some conjugate of i fails to be a root
    std::mt19937_64 rng(35);
    bool found = false;
    for (int t = 0; t < 50 && !found; ++t) {
        const auto s = sample_nonzero(hamilton(), rng, 2);
        found = !p.right_eval(s * I * s.inverse()).is_zero();
    }
    REQUIRE(found);

    // degree 2 < degree 3: remainder is P itself
    const auto th = theta();
    std::mt19937_64 rng2(36);
    const auto report = build_quadratic_counterexample(th, gen_u(), 1, 1, rng2);
    REQUIRE_FALSE(vanishes_on_class(report.p, th));
}

TEST_CASE("find_nonroot_witness") {
    const auto th = theta();
    const auto u = gen_u();
    std::mt19937_64 rng(37);
    auto report = build_quadratic_counterexample(th, u, 2, 2, rng);

    SECTION("search result satisfies its contract") {
        std::mt19937_64 rng2(38);
        const auto t = find_nonroot_witness(report.p, th, rng2, 4096);
        REQUIRE_FALSE(t.commutes_with(th));
        REQUIRE_FALSE(report.p.right_eval(t * th * t.inverse()).is_zero());
    }
    SECTION("u^2 is a valid witness; its conjugate is sigma^2(theta)") {
        const auto t = u * u;
        const auto c = t * th * t.inverse();
        const auto sigma_theta = th * th - AlgebraElement::scalar(cyclic(), 2);
        const auto sigma2_theta = sigma_theta * sigma_theta -
                                  AlgebraElement::scalar(cyclic(), 2);
        REQUIRE(c == sigma2_theta);
        const auto value = report.p.right_eval(c);
        REQUIRE_FALSE(value.is_zero());
        // inside the commutative subfield: P(s) = (s - sigma(theta))(s - theta)
        REQUIRE(value == (sigma2_theta - sigma_theta) * (sigma2_theta - th));
    }
    SECTION("vanishing polynomial has no witness") {
        const auto lambda = lift(minimal_polynomial(th), cyclic());
        std::mt19937_64 rng2(39);
        require_error(Errc::WitnessSearchExhausted,
                      [&] { find_nonroot_witness(lambda, th, rng2, 4096); });
    }
    SECTION("zero budget exhausts immediately") {
        std::mt19937_64 rng2(40);
        require_error(Errc::WitnessSearchExhausted,
                      [&] { find_nonroot_witness(report.p, th, rng2, 0); });
    }
}

TEST_CASE("build_quadratic_counterexample on the worked instance") {
    const auto th = theta();
    const auto u = gen_u();
    const auto sigma_theta = th * th - AlgebraElement::scalar(cyclic(), 2);
    std::mt19937_64 rng(41);
    const auto report = build_quadratic_counterexample(th, u, 10, 10, rng);

    // q = u theta u^-1 = sigma(theta) commutes with theta inside L, so b = q
    REQUIRE(report.b == sigma_theta);
    REQUIRE(report.p == SkewPolynomial::x_minus(sigma_theta) * SkewPolynomial::x_minus(th));
    REQUIRE(report.p.right_eval(th).is_zero());
    REQUIRE(report.p.right_eval(sigma_theta).is_zero());
    REQUIRE(report.roots.size() == 10);
    REQUIRE(report.nonroots.size() == 10);
    REQUIRE(report.roots[0] == sigma_theta);  // z = 0 gives q itself

    for (const auto& r : report.roots) {
        REQUIRE(report.p.right_eval(r).is_zero());
        REQUIRE(minimal_polynomial(r) == report.lambda);
    }
    for (const auto& s : report.nonroots) {
        REQUIRE_FALSE(report.p.right_eval(s).is_zero());
        REQUIRE(minimal_polynomial(s) == report.lambda);
    }
    for (std::size_t a = 0; a < report.roots.size(); ++a)
        for (std::size_t b = a + 1; b < report.roots.size(); ++b)
            REQUIRE(report.roots[a] != report.roots[b]);
    for (std::size_t a = 0; a < report.nonroots.size(); ++a)
        for (std::size_t b = a + 1; b < report.nonroots.size(); ++b)
            REQUIRE(report.nonroots[a] != report.nonroots[b]);
    REQUIRE_FALSE(report.remainder_p_mod_lambda.is_zero());
    REQUIRE(report.remainder_p_mod_lambda == report.p);  // deg lambda > deg P
}

TEST_CASE("counterexample preconditions") {
    std::mt19937_64 rng(42);
    require_error(Errc::MinimalPolynomialTooSmall, [&] {
        build_quadratic_counterexample(I, J, 2, 2, rng);
    });
    const auto th = theta();
    require_error(Errc::ElementsCommute, [&] {
        build_quadratic_counterexample(th, th * th, 2, 2, rng);
    });
}

TEST_CASE("remark: a is the unique common root over the generated families") {
    const auto th = theta();
    std::mt19937_64 rng(43);
    const auto report = build_quadratic_counterexample(th, gen_u(), 8, 4, rng);

    const auto w = report.witness;
    const auto c = w * th * w.inverse();
    const auto b1 = (c - th) * c * (c - th).inverse();
    REQUIRE(b1 != report.b);
    const auto p1 = SkewPolynomial::x_minus(b1) * SkewPolynomial::x_minus(th);

    REQUIRE(p1.right_eval(th).is_zero());
    REQUIRE(report.p.right_eval(th).is_zero());
    for (const auto& r : report.roots) {
        if (r == th) continue;
        REQUIRE_FALSE(p1.right_eval(r).is_zero());
    }
    // and the witness family are roots of p1 but not of p
    for (const auto& s : report.nonroots) {
        REQUIRE(p1.right_eval(s).is_zero());
        REQUIRE_FALSE(report.p.right_eval(s).is_zero());
    }
}

TEST_CASE("verify_exact_root_count") {
    std::mt19937_64 rng(44);
    REQUIRE(verify_exact_root_count({I, One + J}, 50, rng));

    const auto th = theta();
    REQUIRE(verify_exact_root_count({th, th + AlgebraElement::one(cyclic())}, 20, rng));

    const auto d = quat(1, 2, 3, 4);
    REQUIRE(verify_exact_root_count({d}, 10, rng));

    require_error(Errc::ClassesNotDistinct,
                  [&] { verify_exact_root_count({I, J}, 5, rng); });
}

TEST_CASE("roots conform to Gordon-Motzkin on random products") {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const auto factors = sample_distinct_class_factors(hamilton(), rng, n, 2, false);
        const auto sol = linear_factor_roots(factors);
        for (const auto& root : sol.roots) {
            const auto poly = minimal_polynomial(root.zeta);
            bool matches = false;
            for (const auto& other : sol.roots) matches = matches || poly == other.class_poly;
            REQUIRE(matches);
        }
    }
}
