#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace skewroot {

/// Arbitrary-precision rational number, kept canonical at all times:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Exact equality
/// is therefore a plain value comparison.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars read naturally
    Rational(long num, long den) {
        if (den == 0) raise(Errc::InvalidArgument, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) raise(Errc::InvalidArgument, "rational with zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    /// Strict parse of "p" or "p/q" with optional leading minus.
    static Rational parse(std::string_view text) {
        const auto bad = [&] {
            raise(Errc::SyntaxError, "invalid rational literal '" + std::string(text) + "'");
        };
        if (text.empty()) bad();
        std::size_t i = 0;
        if (text[i] == '-') ++i;
        std::size_t num_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == num_start) bad();
        mpz_class num(std::string(text.substr(0, i)), 10);
        mpz_class den(1);
        if (i < text.size()) {
            if (text[i] != '/') bad();
            ++i;
            std::size_t den_start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == den_start || i != text.size()) bad();
            den = mpz_class(std::string(text.substr(den_start)), 10);
            if (den == 0) raise(Errc::SyntaxError, "rational literal with zero denominator");
        }
        return Rational(std::move(num), std::move(den));
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) raise(Errc::InvalidArgument, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" for integers.
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // mpq arithmetic preserves canonical form
};

}  // namespace skewroot
