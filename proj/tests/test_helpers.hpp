#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <skewroot/algebra.hpp>
#include <skewroot/parse.hpp>
#include <skewroot/root_engine.hpp>
#include <skewroot/skew_poly.hpp>
#include <skewroot/verify.hpp>

namespace skt {

using namespace skewroot;

inline const AlgebraPtr& hamilton() {
    static const AlgebraPtr alg = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    return alg;
}

inline const AlgebraPtr& cyclic() {
    static const AlgebraPtr alg = AlgebraDescriptor::cyclic_default();
    return alg;
}

inline AlgebraElement quat(long w, long x, long y, long z) {
    return AlgebraElement(hamilton(), {Rational(w), Rational(x), Rational(y), Rational(z)});
}

template <typename Fn>
void require_error(Errc code, Fn&& fn) {
    try {
        fn();
        FAIL("expected error " << errc_name(code));
    } catch (const Error& e) {
        REQUIRE(e.code() == code);
    }
}

}  // namespace skt
