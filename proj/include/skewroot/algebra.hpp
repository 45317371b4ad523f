#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace skewroot {

enum class AlgebraKind { Quaternion, CyclicCubic };

class AlgebraDescriptor;
class AlgebraElement;
using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

/// Monic polynomial with rational coefficients. Both supported algebras have
/// center Q, so minimal polynomials of elements and conjugacy classes live here.
class CentralPolynomial {
public:
    /// Coefficients low-to-high; the leading coefficient must be 1.
    explicit CentralPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty() || !c_.back().is_one())
            raise(Errc::InvalidArgument, "central polynomial must be monic");
    }

    std::size_t degree() const { return c_.size() - 1; }
    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /// Plain substitution of an algebra element (coefficients are central).
    AlgebraElement eval_at(const AlgebraElement& p) const;

    friend bool operator==(const CentralPolynomial& a, const CentralPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CentralPolynomial& a, const CentralPolynomial& b) {
        return !(a == b);
    }

    std::string to_string(const std::string& var = "x") const {
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            const Rational mag = c_[k].abs();
            std::string body;
            if (k == 0) {
                body = mag.to_string();
            } else {
                if (!mag.is_one()) body = mag.to_string();
                body += var;
                if (k > 1) body += "^" + std::to_string(k);
            }
            if (out.empty())
                out = (c_[k].sign() < 0 ? "-" : "") + body;
            else
                out += (c_[k].sign() < 0 ? " - " : " + ") + body;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Rational> c_;
};

/// Parameters of one of the two supported division rings over Q:
///   - the quaternion algebra (a,b/Q) with i^2 = a, j^2 = b, ij = -ji;
///   - a degree-3 cyclic algebra (L/Q, sigma, gamma) with L = Q[t]/(g),
///     u^3 = gamma and u*l = sigma(l)*u for l in L.
/// Descriptors are immutable and shared by the elements built over them.
class AlgebraDescriptor {
public:
    static AlgebraPtr quaternion(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero())
            raise(Errc::InvalidDescriptor, "quaternion parameters must be nonzero");
        auto d = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor());
        d->kind_ = AlgebraKind::Quaternion;
        d->a_ = a;
        d->b_ = b;
        return d;
    }

    /// g: monic cubic, low-to-high (4 coefficients). sigma_theta: image of the
    /// field generator under sigma, low-to-high, degree <= 2 after reduction.
    /// Checks at construction: g(sigma(theta)) = 0 mod g, and sigma^3 = id.
    static AlgebraPtr cyclic_cubic(const std::vector<Rational>& g,
                                   const std::vector<Rational>& sigma_theta,
                                   const Rational& gamma) {
        if (g.size() != 4 || !g[3].is_one())
            raise(Errc::InvalidDescriptor, "g must be a monic cubic");
        if (gamma.is_zero()) raise(Errc::InvalidDescriptor, "gamma must be nonzero");
        if (sigma_theta.size() > 4)
            raise(Errc::InvalidDescriptor, "sigma image degree too large");

        auto d = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor());
        auto* m = d.get();
        m->kind_ = AlgebraKind::CyclicCubic;
        m->gamma_ = gamma;
        for (int k = 0; k < 4; ++k) m->g_[k] = g[k];

        // theta^3 and theta^4 reduced mod g
        for (int k = 0; k < 3; ++k) m->red3_[k] = -g[k];
        m->red4_ = {m->red3_[2] * m->red3_[0], m->red3_[0] + m->red3_[2] * m->red3_[1],
                    m->red3_[1] + m->red3_[2] * m->red3_[2]};

        LElem s{Rational(0), Rational(0), Rational(0)};
        for (std::size_t k = 0; k < sigma_theta.size() && k < 3; ++k) s[k] = sigma_theta[k];
        if (sigma_theta.size() == 4) {  // reduce a stray theta^3 term
            for (int k = 0; k < 3; ++k) s[k] += sigma_theta[3] * m->red3_[k];
        }
        m->sigma_theta_ = s;

        // g(sigma(theta)) must vanish in L
        LElem acc{Rational(0), Rational(0), Rational(0)};
        for (int k = 3; k >= 0; --k) {
            acc = m->lmul(acc, s);
            acc[0] += g[k];
        }
        if (!(acc[0].is_zero() && acc[1].is_zero() && acc[2].is_zero()))
            raise(Errc::InvalidDescriptor, "sigma image is not a root of g");

        // matrices of sigma^j on the basis {1, theta, theta^2}
        m->sig_[0] = identity3();
        m->sig_[1] = sigma_matrix(s, *m);
        m->sig_[2] = mat_mul3(m->sig_[1], m->sig_[1]);
        if (mat_mul3(m->sig_[2], m->sig_[1]) != identity3())
            raise(Errc::InvalidDescriptor, "sigma does not have order dividing 3");
        return d;
    }

    /// The built-in division algebra: L = Q[t]/(t^3 - 3t + 1),
    /// sigma(theta) = theta^2 - 2, gamma = 2.
    static AlgebraPtr cyclic_default() {
        return cyclic_cubic({Rational(1), Rational(-3), Rational(0), Rational(1)},
                            {Rational(-2), Rational(0), Rational(1)}, Rational(2));
    }

    AlgebraKind kind() const { return kind_; }
    std::size_t dimension() const { return kind_ == AlgebraKind::Quaternion ? 4 : 9; }
    const Rational& quat_a() const { return a_; }
    const Rational& quat_b() const { return b_; }
    const std::array<Rational, 4>& cubic_modulus() const { return g_; }
    const std::array<Rational, 3>& sigma_theta() const { return sigma_theta_; }
    const Rational& gamma() const { return gamma_; }

    friend bool operator==(const AlgebraDescriptor& x, const AlgebraDescriptor& y) {
        if (x.kind_ != y.kind_) return false;
        if (x.kind_ == AlgebraKind::Quaternion) return x.a_ == y.a_ && x.b_ == y.b_;
        return x.g_ == y.g_ && x.sigma_theta_ == y.sigma_theta_ && x.gamma_ == y.gamma_;
    }
    friend bool operator!=(const AlgebraDescriptor& x, const AlgebraDescriptor& y) {
        return !(x == y);
    }

private:
    friend class AlgebraElement;
    AlgebraDescriptor() = default;

    using LElem = std::array<Rational, 3>;  // element of L in basis 1, theta, theta^2
    using LMat = std::array<LElem, 3>;      // columns are images of 1, theta, theta^2

    static LMat identity3() {
        LMat m{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) m[i][k] = Rational(i == k ? 1 : 0);
        return m;
    }

    static LMat sigma_matrix(const LElem& s, const AlgebraDescriptor& d) {
        LMat m{};
        m[0] = {Rational(1), Rational(0), Rational(0)};
        m[1] = s;
        m[2] = d.lmul(s, s);
        return m;
    }

    static LMat mat_mul3(const LMat& x, const LMat& y) {
        // columns of result: x applied to columns of y
        LMat r{};
        for (int c = 0; c < 3; ++c) {
            for (int i = 0; i < 3; ++i) {
                Rational acc(0);
                for (int k = 0; k < 3; ++k) acc += x[k][i] * y[c][k];
                r[c][i] = acc;
            }
        }
        return r;
    }

    LElem lmul(const LElem& x, const LElem& y) const {
        std::array<Rational, 5> conv{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) conv[i + k] += x[i] * y[k];
        LElem r{conv[0], conv[1], conv[2]};
        for (int k = 0; k < 3; ++k) r[k] += conv[3] * red3_[k] + conv[4] * red4_[k];
        return r;
    }

    LElem lapply(const LMat& m, const LElem& v) const {
        LElem r{};
        for (int i = 0; i < 3; ++i) {
            Rational acc(0);
            for (int k = 0; k < 3; ++k) acc += m[k][i] * v[k];
            r[i] = acc;
        }
        return r;
    }

    AlgebraKind kind_ = AlgebraKind::Quaternion;
    Rational a_{-1}, b_{-1};                 // quaternion parameters
    std::array<Rational, 4> g_{};            // monic cubic modulus
    std::array<Rational, 3> sigma_theta_{};  // sigma(theta) in L
    LElem red3_{}, red4_{};                  // theta^3, theta^4 mod g
    std::array<LMat, 3> sig_{};              // sigma^0, sigma^1, sigma^2
    Rational gamma_{1};
};

/// Element of an algebra, stored as exact rational coordinates in the
/// standard basis: (1, i, j, ij) for quaternions, (theta^i * u^j) with
/// index 3j + i for the cyclic algebra. Immutable value semantics.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr alg, std::vector<Rational> coords)
        : alg_(std::move(alg)), c_(std::move(coords)) {
        if (c_.size() != alg_->dimension())
            raise(Errc::InvalidArgument, "coordinate count does not match algebra dimension");
    }

    static AlgebraElement zero(const AlgebraPtr& alg) {
        return AlgebraElement(alg, std::vector<Rational>(alg->dimension(), Rational(0)));
    }
    static AlgebraElement scalar(const AlgebraPtr& alg, const Rational& r) {
        auto e = zero(alg);
        e.c_[0] = r;
        return e;
    }
    static AlgebraElement one(const AlgebraPtr& alg) { return scalar(alg, Rational(1)); }
    static AlgebraElement basis(const AlgebraPtr& alg, std::size_t idx) {
        auto e = zero(alg);
        e.c_.at(idx) = Rational(1);
        return e;
    }
    static AlgebraElement gen_i(const AlgebraPtr& alg) { return quat_basis(alg, 1); }
    static AlgebraElement gen_j(const AlgebraPtr& alg) { return quat_basis(alg, 2); }
    static AlgebraElement gen_k(const AlgebraPtr& alg) { return quat_basis(alg, 3); }
    static AlgebraElement gen_theta(const AlgebraPtr& alg) { return cyclic_basis(alg, 1); }
    static AlgebraElement gen_u(const AlgebraPtr& alg) { return cyclic_basis(alg, 3); }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Central means rational: only the coordinate of 1 may be nonzero.
    bool is_central() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return false;
        return true;
    }

    std::optional<Rational> central_value() const {
        if (!is_central()) return std::nullopt;
        return c_[0];
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return (x.alg_ == y.alg_ || *x.alg_ == *y.alg_) && x.c_ == y.c_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) {
        return !(x == y);
    }

    AlgebraElement operator-() const {
        auto r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        require_same(x, y);
        auto r = x;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += y.c_[k];
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        require_same(x, y);
        auto r = x;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= y.c_[k];
        return r;
    }

    /// Exact product under the algebra relations.
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        require_same(x, y);
        if (x.alg_->kind() == AlgebraKind::Quaternion) return quat_mul(x, y);
        return cyclic_mul(x, y);
    }

    AlgebraElement scaled(const Rational& r) const {
        auto e = *this;
        for (auto& x : e.c_) x *= r;
        return e;
    }
    friend AlgebraElement operator*(const Rational& r, const AlgebraElement& x) {
        return x.scaled(r);
    }

    /// Quaternion standard involution w + xi + yj + zij -> w - xi - yj - zij.
    AlgebraElement conjugated() const {
        if (alg_->kind() != AlgebraKind::Quaternion)
            raise(Errc::UnsupportedAlgebra, "conjugation is only defined for quaternions");
        auto r = *this;
        for (std::size_t k = 1; k < 4; ++k) r.c_[k] = -r.c_[k];
        return r;
    }

    /// Reduced norm of a quaternion (central, equals p * conj(p)).
    Rational quat_norm() const {
        if (alg_->kind() != AlgebraKind::Quaternion)
            raise(Errc::UnsupportedAlgebra, "norm form implemented for quaternions only");
        const Rational &a = alg_->quat_a(), &b = alg_->quat_b();
        return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
    }

    /// Two-sided inverse. Quaternions use conjugate over norm; the cyclic
    /// algebra solves the 9x9 system of the left regular representation.
    /// A singular system for a nonzero element means the descriptor does not
    /// define a division algebra.
    AlgebraElement inverse() const {
        if (is_zero()) raise(Errc::ZeroInverse, "inverse of zero");
        if (alg_->kind() == AlgebraKind::Quaternion) {
            const Rational n = quat_norm();
            if (n.is_zero())
                raise(Errc::ZeroDivisorDetected,
                      "nonzero quaternion with zero norm; not a division algebra");
            return conjugated().scaled(Rational(1) / n);
        }
        const auto m = left_mul_matrix();
        QVec e1(9, Rational(0));
        e1[0] = Rational(1);
        auto x = solve_unique(m, e1);
        if (!x)
            raise(Errc::ZeroDivisorDetected,
                  "singular regular representation; not a division algebra");
        AlgebraElement inv(alg_, std::move(*x));
        if (!((*this * inv) == one(alg_)) || !((inv * *this) == one(alg_)))
            raise(Errc::InternalContradiction, "inverse verification failed");
        return inv;
    }

    AlgebraElement pow(unsigned n) const {
        auto acc = one(alg_);
        for (unsigned k = 0; k < n; ++k) acc = acc * *this;
        return acc;
    }

    bool commutes_with(const AlgebraElement& y) const { return *this * y == y * *this; }

    /// Columns are the coordinates of (this * basis_s): the matrix of left
    /// multiplication acting on coordinate vectors.
    QMat left_mul_matrix() const {
        const std::size_t n = alg_->dimension();
        QMat m(n, QVec(n, Rational(0)));
        for (std::size_t s = 0; s < n; ++s) {
            const auto col = (*this * basis(alg_, s)).coords();
            for (std::size_t r = 0; r < n; ++r) m[r][s] = col[r];
        }
        return m;
    }

private:
    static AlgebraElement quat_basis(const AlgebraPtr& alg, std::size_t idx) {
        if (alg->kind() != AlgebraKind::Quaternion)
            raise(Errc::UnsupportedAlgebra, "quaternion generator of a non-quaternion algebra");
        return basis(alg, idx);
    }
    static AlgebraElement cyclic_basis(const AlgebraPtr& alg, std::size_t idx) {
        if (alg->kind() != AlgebraKind::CyclicCubic)
            raise(Errc::UnsupportedAlgebra, "cyclic generator of a non-cyclic algebra");
        return basis(alg, idx);
    }

    static void require_same(const AlgebraElement& x, const AlgebraElement& y) {
        if (x.alg_ != y.alg_ && !(*x.alg_ == *y.alg_))
            raise(Errc::MixedAlgebras, "operands belong to different algebras");
    }

    static AlgebraElement quat_mul(const AlgebraElement& x, const AlgebraElement& y) {
        const Rational &a = x.alg_->quat_a(), &b = x.alg_->quat_b();
        const auto& p = x.c_;
        const auto& q = y.c_;
        std::vector<Rational> r(4, Rational(0));
        r[0] = p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3];
        r[1] = p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2];
        r[2] = p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1];
        r[3] = p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1];
        return AlgebraElement(x.alg_, std::move(r));
    }

    // u^j1 * l = sigma^j1(l) * u^j1 and u^3 = gamma, collecting left-to-right.
    static AlgebraElement cyclic_mul(const AlgebraElement& x, const AlgebraElement& y) {
        const auto& d = *x.alg_;
        std::vector<Rational> out(9, Rational(0));
        for (int j1 = 0; j1 < 3; ++j1) {
            AlgebraDescriptor::LElem l{x.c_[3 * j1], x.c_[3 * j1 + 1], x.c_[3 * j1 + 2]};
            if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) continue;
            for (int j2 = 0; j2 < 3; ++j2) {
                AlgebraDescriptor::LElem m{y.c_[3 * j2], y.c_[3 * j2 + 1], y.c_[3 * j2 + 2]};
                if (m[0].is_zero() && m[1].is_zero() && m[2].is_zero()) continue;
                auto contrib = d.lmul(l, d.lapply(d.sig_[j1], m));
                int tj = j1 + j2;
                if (tj >= 3) {
                    tj -= 3;
                    for (auto& v : contrib) v *= d.gamma_;
                }
                for (int i = 0; i < 3; ++i) out[3 * tj + i] += contrib[i];
            }
        }
        return AlgebraElement(x.alg_, std::move(out));
    }

    AlgebraPtr alg_;
    std::vector<Rational> c_;
};

inline AlgebraElement CentralPolynomial::eval_at(const AlgebraElement& p) const {
    auto acc = AlgebraElement::zero(p.algebra());
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * p + AlgebraElement::scalar(p.algebra(), c_[k]);
    return acc;
}

/// Least-degree monic rational polynomial annihilating p, found by exact
/// linear algebra on the coordinate vectors of 1, p, p^2, ...
inline CentralPolynomial minimal_polynomial(const AlgebraElement& p) {
    const std::size_t n = p.algebra()->dimension();
    std::vector<QVec> powers{AlgebraElement::one(p.algebra()).coords()};
    auto current = AlgebraElement::one(p.algebra());
    for (std::size_t deg = 1; deg <= n; ++deg) {
        current = current * p;
        QMat a(n, QVec(deg));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < deg; ++c) a[r][c] = powers[c][r];
        if (auto combo = solve(a, current.coords())) {
            std::vector<Rational> coeffs(deg + 1);
            for (std::size_t k = 0; k < deg; ++k) coeffs[k] = -(*combo)[k];
            coeffs[deg] = Rational(1);
            return CentralPolynomial(std::move(coeffs));
        }
        powers.push_back(current.coords());
    }
    raise(Errc::InternalContradiction, "no rational dependency among element powers");
}

/// Dickson's criterion: conjugate iff the minimal polynomials coincide.
inline bool are_conjugate(const AlgebraElement& p, const AlgebraElement& q) {
    if (p.algebra() != q.algebra() && !(*p.algebra() == *q.algebra()))
        raise(Errc::MixedAlgebras, "conjugacy test across different algebras");
    return minimal_polynomial(p) == minimal_polynomial(q);
}

/// Nonzero t with t*p*t^-1 = q, from the kernel of t -> t*p - q*t.
inline AlgebraElement find_conjugator(const AlgebraElement& p, const AlgebraElement& q) {
    if (p.algebra() != q.algebra() && !(*p.algebra() == *q.algebra()))
        raise(Errc::MixedAlgebras, "conjugator search across different algebras");
    const auto& alg = p.algebra();
    const std::size_t n = alg->dimension();
    QMat m(n, QVec(n));
    for (std::size_t s = 0; s < n; ++s) {
        const auto e = AlgebraElement::basis(alg, s);
        const auto col = (e * p - q * e).coords();
        for (std::size_t r = 0; r < n; ++r) m[r][s] = col[r];
    }
    const auto kernel = nullspace(m);
    if (kernel.empty())
        raise(Errc::NotConjugate, "the elements are not conjugate");
    AlgebraElement t(alg, kernel.front());
    if (t * p * t.inverse() != q)
        raise(Errc::InternalContradiction, "conjugator verification failed");
    return t;
}

/// Q-basis of the centralizer Z(p) = { t : t*p = p*t }.
inline std::vector<AlgebraElement> centralizer_basis(const AlgebraElement& p) {
    const auto& alg = p.algebra();
    const std::size_t n = alg->dimension();
    QMat m(n, QVec(n));
    for (std::size_t s = 0; s < n; ++s) {
        const auto e = AlgebraElement::basis(alg, s);
        const auto col = (e * p - p * e).coords();
        for (std::size_t r = 0; r < n; ++r) m[r][s] = col[r];
    }
    std::vector<AlgebraElement> basis;
    for (auto& v : nullspace(m)) basis.emplace_back(alg, std::move(v));
    return basis;
}

inline long rand_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Element with coordinate numerators and denominators drawn uniformly from
/// [-bound, bound] (denominators nonzero). Deterministic given the rng state.
inline AlgebraElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng, long bound) {
    if (bound < 1) raise(Errc::InvalidArgument, "random_element bound must be >= 1");
    std::vector<Rational> coords(alg->dimension());
    for (auto& c : coords) {
        const long num = rand_in(rng, -bound, bound);
        long den = 0;
        while (den == 0) den = rand_in(rng, -bound, bound);
        c = Rational(num, den);
    }
    return AlgebraElement(alg, std::move(coords));
}

}  // namespace skewroot
