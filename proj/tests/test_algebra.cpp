#include "test_helpers.hpp"

using namespace skt;

TEST_CASE("quaternion generator relations") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto j = AlgebraElement::gen_j(hamilton());
    const auto k = AlgebraElement::gen_k(hamilton());
    REQUIRE(i * j == k);
    REQUIRE(j * i == -k);
    REQUIRE(i * i == AlgebraElement::scalar(hamilton(), -1));
    REQUIRE(j * j == AlgebraElement::scalar(hamilton(), -1));
    REQUIRE(k * k == AlgebraElement::scalar(hamilton(), -1));

    const auto split = AlgebraDescriptor::quaternion(Rational(2), Rational(5));
    const auto i2 = AlgebraElement::gen_i(split);
    const auto j2 = AlgebraElement::gen_j(split);
    REQUIRE(i2 * i2 == AlgebraElement::scalar(split, 2));
    REQUIRE(i2 * j2 == -(j2 * i2));
}

TEST_CASE("cyclic algebra relations") {
    const auto th = AlgebraElement::gen_theta(cyclic());
    const auto u = AlgebraElement::gen_u(cyclic());
    const auto sigma_theta = th * th - AlgebraElement::scalar(cyclic(), 2);
    REQUIRE(u * th == sigma_theta * u);
    REQUIRE(u.pow(3) == AlgebraElement::scalar(cyclic(), 2));
    // theta^3 - 3 theta + 1 = 0
    REQUIRE(th.pow(3) - Rational(3) * th + AlgebraElement::one(cyclic()) ==
            AlgebraElement::zero(cyclic()));
    // u theta u^-1 = sigma(theta), u^2 theta u^-2 = sigma^2(theta)
    REQUIRE(u * th * u.inverse() == sigma_theta);
    const auto sigma2 = sigma_theta * sigma_theta - AlgebraElement::scalar(cyclic(), 2);
    REQUIRE(u * u * th * (u * u).inverse() == sigma2);
}

TEST_CASE("mixed-algebra arithmetic is rejected") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto th = AlgebraElement::gen_theta(cyclic());
    require_error(Errc::MixedAlgebras, [&] { i* th; });
    require_error(Errc::MixedAlgebras, [&] { i + th; });
    require_error(Errc::MixedAlgebras, [&] { are_conjugate(i, th); });

    // equal descriptors built separately interoperate
    const auto other = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    REQUIRE(AlgebraElement::gen_i(other) * AlgebraElement::gen_j(other) ==
            AlgebraElement::gen_k(hamilton()));
}

TEST_CASE("descriptor validation") {
    require_error(Errc::InvalidDescriptor,
                  [] { AlgebraDescriptor::quaternion(Rational(0), Rational(1)); });
    // sigma image that is not a root of g
    require_error(Errc::InvalidDescriptor, [] {
        AlgebraDescriptor::cyclic_cubic({Rational(1), Rational(-3), Rational(0), Rational(1)},
                                        {Rational(1), Rational(1)}, Rational(2));
    });
    // g = t^3 - t is not irreducible; theta -> theta^2 fixes g but sigma^3 != id
    require_error(Errc::InvalidDescriptor, [] {
        AlgebraDescriptor::cyclic_cubic({Rational(0), Rational(-1), Rational(0), Rational(1)},
                                        {Rational(0), Rational(0), Rational(1)}, Rational(2));
    });
    require_error(Errc::InvalidDescriptor, [] {
        AlgebraDescriptor::cyclic_cubic({Rational(1), Rational(-3), Rational(0), Rational(1)},
                                        {Rational(-2), Rational(0), Rational(1)}, Rational(0));
    });
}

TEST_CASE("element inverses") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto j = AlgebraElement::gen_j(hamilton());
    const auto one = AlgebraElement::one(hamilton());
    REQUIRE(i.inverse() == -i);
    REQUIRE((one + i + j).inverse() ==
            AlgebraElement(hamilton(), {Rational(1, 3), Rational(-1, 3), Rational(-1, 3),
                                        Rational(0)}));
    // oracle: (1+i+j)(1-i-j) equals the norm 3
    REQUIRE((one + i + j) * (one - i - j) == AlgebraElement::scalar(hamilton(), 3));

    const auto u = AlgebraElement::gen_u(cyclic());
    REQUIRE(u.inverse() == u.pow(2).scaled(Rational(1, 2)));

    require_error(Errc::ZeroInverse, [&] { AlgebraElement::zero(hamilton()).inverse(); });

    // (1,1/Q) is split: 1+i has norm zero
    const auto split = AlgebraDescriptor::quaternion(Rational(1), Rational(1));
    const auto bad = AlgebraElement::one(split) + AlgebraElement::gen_i(split);
    require_error(Errc::ZeroDivisorDetected, [&] { bad.inverse(); });

    // gamma = 1 makes u^3 = 1, so u - 1 is a zero divisor
    const auto not_division = AlgebraDescriptor::cyclic_cubic(
        {Rational(1), Rational(-3), Rational(0), Rational(1)},
        {Rational(-2), Rational(0), Rational(1)}, Rational(1));
    const auto zd = AlgebraElement::gen_u(not_division) - AlgebraElement::one(not_division);
    require_error(Errc::ZeroDivisorDetected, [&] { zd.inverse(); });
}

TEST_CASE("inverses on random nonzero elements") {
    std::mt19937_64 rng(11);
    for (const auto& alg : {hamilton(), cyclic()}) {
        for (int t = 0; t < 25; ++t) {
            const auto p = sample_nonzero(alg, rng, 3);
            REQUIRE(p * p.inverse() == AlgebraElement::one(alg));
            REQUIRE(p.inverse() * p == AlgebraElement::one(alg));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12);
    for (const auto& alg : {hamilton(), cyclic()}) {
        for (int t = 0; t < 20; ++t) {
            const auto p = random_element(alg, rng, 2);
            const auto q = random_element(alg, rng, 2);
            const auto r = random_element(alg, rng, 2);
            REQUIRE((p * q) * r == p * (q * r));
            REQUIRE(p * (q + r) == p * q + p * r);
            REQUIRE((p + q) * r == p * r + q * r);
        }
    }
}

TEST_CASE("minimal polynomials") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto j = AlgebraElement::gen_j(hamilton());
    const auto one = AlgebraElement::one(hamilton());
    REQUIRE(minimal_polynomial(i) ==
            CentralPolynomial({Rational(1), Rational(0), Rational(1)}));
    REQUIRE(minimal_polynomial(one + j) ==
            CentralPolynomial({Rational(2), Rational(-2), Rational(1)}));
    REQUIRE(minimal_polynomial(AlgebraElement::scalar(hamilton(), Rational(5, 3))) ==
            CentralPolynomial({Rational(-5, 3), Rational(1)}));

    const auto th = AlgebraElement::gen_theta(cyclic());
    REQUIRE(minimal_polynomial(th) ==
            CentralPolynomial({Rational(1), Rational(-3), Rational(0), Rational(1)}));
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
    std::mt19937_64 rng(13);
    for (const auto& alg : {hamilton(), cyclic()}) {
        const std::size_t dmax = alg->kind() == AlgebraKind::Quaternion ? 2 : 3;
        for (int t = 0; t < 15; ++t) {
            const auto p = random_element(alg, rng, 3);
            const auto m = minimal_polynomial(p);
            REQUIRE(m.eval_at(p).is_zero());
            REQUIRE((m.degree() == 1 || m.degree() == dmax));
            REQUIRE((m.degree() == 1) == p.is_central());
        }
    }
    // quaternion oracle: x^2 - 2w x + norm for non-central p
    for (int t = 0; t < 15; ++t) {
        auto p = sample_noncentral(hamilton(), rng, 3);
        const auto m = minimal_polynomial(p);
        REQUIRE(m == CentralPolynomial({p.quat_norm(), Rational(-2) * p.coords()[0],
                                        Rational(1)}));
    }
}

TEST_CASE("conjugacy follows minimal polynomials") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto j = AlgebraElement::gen_j(hamilton());
    const auto one = AlgebraElement::one(hamilton());
    REQUIRE(are_conjugate(i, j));
    REQUIRE_FALSE(are_conjugate(i, one + j));
    REQUIRE(are_conjugate(i, i));

    // explicit conjugator h = i + j maps i to j
    const auto h = i + j;
    REQUIRE(h * i * h.inverse() == j);
}

TEST_CASE("find_conjugator returns a working conjugator") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto j = AlgebraElement::gen_j(hamilton());
    const auto t = find_conjugator(i, j);
    REQUIRE_FALSE(t.is_zero());
    REQUIRE(t * i * t.inverse() == j);

    const auto self = find_conjugator(i, i);
    REQUIRE(self * i * self.inverse() == i);

    const auto th = AlgebraElement::gen_theta(cyclic());
    const auto sigma_theta = th * th - AlgebraElement::scalar(cyclic(), 2);
    const auto c = find_conjugator(th, sigma_theta);
    REQUIRE(c * th * c.inverse() == sigma_theta);

    require_error(Errc::NotConjugate, [&] {
        find_conjugator(i, AlgebraElement::one(hamilton()) + j);
    });
}

TEST_CASE("conjugacy is an equivalence on sampled conjugates") {
    std::mt19937_64 rng(14);
    const auto p = sample_noncentral(hamilton(), rng, 2);
    const auto s = sample_nonzero(hamilton(), rng, 2);
    const auto t = sample_nonzero(hamilton(), rng, 2);
    const auto c1 = s * p * s.inverse();
    const auto c2 = t * p * t.inverse();
    REQUIRE(are_conjugate(p, c1));
    REQUIRE(are_conjugate(c1, p));
    REQUIRE(are_conjugate(c1, c2));
}

TEST_CASE("centralizer bases") {
    const auto i = AlgebraElement::gen_i(hamilton());
    const auto basis_i = centralizer_basis(i);
    REQUIRE(basis_i.size() == 2);
    for (const auto& e : basis_i) REQUIRE(e.commutes_with(i));

    REQUIRE(centralizer_basis(AlgebraElement::one(hamilton())).size() == 4);

    const auto th = AlgebraElement::gen_theta(cyclic());
    const auto basis_th = centralizer_basis(th);
    REQUIRE(basis_th.size() == 3);
    for (const auto& e : basis_th) REQUIRE(e.commutes_with(th));

    // random rational combinations of the basis still commute
    std::mt19937_64 rng(15);
    for (int t = 0; t < 10; ++t) {
        auto combo = AlgebraElement::zero(cyclic());
        for (const auto& e : basis_th)
            combo = combo + e.scaled(Rational(rand_in(rng, -3, 3), rand_in(rng, 1, 3)));
        REQUIRE(combo.commutes_with(th));
    }
}

TEST_CASE("quaternion conjugation is an anti-automorphism") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_element(hamilton(), rng, 3);
        const auto q = random_element(hamilton(), rng, 3);
        REQUIRE((p * q).conjugated() == q.conjugated() * p.conjugated());
        REQUIRE((p + q).conjugated() == p.conjugated() + q.conjugated());
    }
    require_error(Errc::UnsupportedAlgebra,
                  [&] { AlgebraElement::gen_theta(cyclic()).conjugated(); });
}

TEST_CASE("random_element is deterministic and bounded") {
    std::mt19937_64 a(99), b(99);
    for (const auto& alg : {hamilton(), cyclic()}) {
        const auto e1 = random_element(alg, a, 3);
        const auto e2 = random_element(alg, b, 3);
        REQUIRE(e1 == e2);
        for (const auto& c : e1.coords()) {
            REQUIRE(c.numerator() >= -3);
            REQUIRE(c.numerator() <= 3);
            REQUIRE(c.denominator() <= 3);
        }
    }
    std::mt19937_64 c(1);
    REQUIRE_NOTHROW(random_element(hamilton(), c, 1));
    require_error(Errc::InvalidArgument, [&] { random_element(hamilton(), c, 0); });
}
