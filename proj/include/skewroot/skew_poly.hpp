#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace skewroot {

/// Polynomial over a division algebra with central variable x. Coefficients
/// do not commute with each other; products follow c_k = sum a_i b_j with
/// the left factor's coefficients kept on the left. Coefficients are stored
/// low-to-high and the zero polynomial is the empty sequence (degree is only
/// defined for nonzero polynomials).
class SkewPolynomial {
public:
    explicit SkewPolynomial(AlgebraPtr alg) : alg_(std::move(alg)) {}

    SkewPolynomial(AlgebraPtr alg, std::vector<AlgebraElement> coeffs)
        : alg_(std::move(alg)), c_(std::move(coeffs)) {
        for (const auto& e : c_)
            if (e.algebra() != alg_ && !(*e.algebra() == *alg_))
                raise(Errc::MixedAlgebras, "coefficient from a different algebra");
        trim();
    }

    static SkewPolynomial zero(const AlgebraPtr& alg) { return SkewPolynomial(alg); }
    static SkewPolynomial one(const AlgebraPtr& alg) {
        return constant(AlgebraElement::one(alg));
    }
    static SkewPolynomial constant(const AlgebraElement& e) {
        return SkewPolynomial(e.algebra(), {e});
    }
    static SkewPolynomial variable(const AlgebraPtr& alg) {
        return SkewPolynomial(alg, {AlgebraElement::zero(alg), AlgebraElement::one(alg)});
    }
    static SkewPolynomial monomial(const AlgebraElement& e, std::size_t deg) {
        std::vector<AlgebraElement> c(deg + 1, AlgebraElement::zero(e.algebra()));
        c[deg] = e;
        return SkewPolynomial(e.algebra(), std::move(c));
    }
    /// x - d
    static SkewPolynomial x_minus(const AlgebraElement& d) {
        return SkewPolynomial(d.algebra(), {-d, AlgebraElement::one(d.algebra())});
    }

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of a nonzero polynomial. The zero polynomial has no degree.
    std::size_t degree() const {
        if (is_zero()) raise(Errc::InvalidArgument, "degree of the zero polynomial");
        return c_.size() - 1;
    }

    AlgebraElement coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : AlgebraElement::zero(alg_);
    }
    const AlgebraElement& leading() const {
        if (is_zero()) raise(Errc::InvalidArgument, "leading coefficient of zero");
        return c_.back();
    }
    const std::vector<AlgebraElement>& coeffs() const { return c_; }

    friend bool operator==(const SkewPolynomial& x, const SkewPolynomial& y) {
        return (x.alg_ == y.alg_ || *x.alg_ == *y.alg_) && x.c_ == y.c_;
    }
    friend bool operator!=(const SkewPolynomial& x, const SkewPolynomial& y) {
        return !(x == y);
    }

    SkewPolynomial operator-() const {
        auto r = *this;
        for (auto& e : r.c_) e = -e;
        return r;
    }

    friend SkewPolynomial operator+(const SkewPolynomial& x, const SkewPolynomial& y) {
        require_same(x, y);
        std::vector<AlgebraElement> c;
        const std::size_t n = std::max(x.c_.size(), y.c_.size());
        c.reserve(n);
        for (std::size_t k = 0; k < n; ++k) c.push_back(x.coeff(k) + y.coeff(k));
        return SkewPolynomial(x.alg_, std::move(c));
    }
    friend SkewPolynomial operator-(const SkewPolynomial& x, const SkewPolynomial& y) {
        return x + (-y);
    }

    friend SkewPolynomial operator*(const SkewPolynomial& x, const SkewPolynomial& y) {
        require_same(x, y);
        if (x.is_zero() || y.is_zero()) return zero(x.alg_);
        std::vector<AlgebraElement> c(x.c_.size() + y.c_.size() - 1,
                                      AlgebraElement::zero(x.alg_));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t k = 0; k < y.c_.size(); ++k) c[i + k] = c[i + k] + x.c_[i] * y.c_[k];
        }
        return SkewPolynomial(x.alg_, std::move(c));
    }

    /// Right evaluation: sum coeff[k] * d^k, coefficients on the left.
    /// d is a (right) root exactly when this is zero.
    AlgebraElement right_eval(const AlgebraElement& d) const {
        if (d.algebra() != alg_ && !(*d.algebra() == *alg_))
            raise(Errc::MixedAlgebras, "evaluation point from a different algebra");
        auto acc = AlgebraElement::zero(alg_);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * d + c_[k];
        return acc;
    }

    /// Division on the right: *this = Q*B + R with deg R < deg B.
    /// Any nonzero divisor is accepted; its leading coefficient is inverted.
    std::pair<SkewPolynomial, SkewPolynomial> right_divide(const SkewPolynomial& b) const {
        require_same(*this, b);
        if (b.is_zero())
            raise(Errc::DivisionByZeroPolynomial, "right division by the zero polynomial");
        auto q = zero(alg_);
        auto r = *this;
        const auto lead_inv = b.leading().inverse();
        const std::size_t db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            const auto t = r.leading() * lead_inv;
            const std::size_t shift = r.degree() - db;
            const auto step = monomial(t, shift);
            q = q + step;
            r = r - step * b;
        }
        return {std::move(q), std::move(r)};
    }

    /// Coefficientwise quaternion conjugation; reverses products.
    SkewPolynomial conjugated() const {
        if (alg_->kind() != AlgebraKind::Quaternion)
            raise(Errc::UnsupportedAlgebra,
                  "conjugate polynomial is only defined over quaternions");
        auto r = *this;
        for (auto& e : r.c_) e = e.conjugated();
        return r;
    }

private:
    static void require_same(const SkewPolynomial& x, const SkewPolynomial& y) {
        if (x.alg_ != y.alg_ && !(*x.alg_ == *y.alg_))
            raise(Errc::MixedAlgebras, "polynomials over different algebras");
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    AlgebraPtr alg_;
    std::vector<AlgebraElement> c_;
};

/// Lift a central polynomial into D[x].
inline SkewPolynomial lift(const CentralPolynomial& f, const AlgebraPtr& alg) {
    std::vector<AlgebraElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& r : f.coeffs()) c.push_back(AlgebraElement::scalar(alg, r));
    return SkewPolynomial(alg, std::move(c));
}

/// Expanded product (x - d_n) ... (x - d_1) with ds[0] = d_1 the rightmost
/// (innermost) factor. The factor order convention matters everywhere roots
/// are computed; see the root engine.
inline SkewPolynomial from_linear_factors(const std::vector<AlgebraElement>& ds) {
    if (ds.empty()) raise(Errc::InvalidArgument, "empty factor list");
    auto p = SkewPolynomial::x_minus(ds.front());
    for (std::size_t k = 1; k < ds.size(); ++k)
        p = SkewPolynomial::x_minus(ds[k]) * p;
    return p;
}

/// The product evaluation rule: with h = R(d) nonzero,
/// (L*R)(d) = L(h*d*h^-1) * h. Returns both sides so callers can assert
/// their exact equality; raises RightFactorVanishes when h = 0.
inline std::pair<AlgebraElement, AlgebraElement> product_eval_check(const SkewPolynomial& l,
                                                                    const SkewPolynomial& r,
                                                                    const AlgebraElement& d) {
    const auto h = r.right_eval(d);
    if (h.is_zero())
        raise(Errc::RightFactorVanishes, "right factor vanishes at the evaluation point");
    const auto lhs = (l * r).right_eval(d);
    const auto rhs = l.right_eval(h * d * h.inverse()) * h;
    return {lhs, rhs};
}

}  // namespace skewroot
