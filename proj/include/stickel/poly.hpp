/*
   Copyright 2026 The Stickel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a coefficient ring context.
 *
 * Coefficients are stored in ascending degree with no trailing zeros; the
 * zero polynomial is the empty sequence and has degree -1. Every polynomial
 * holds a shared pointer to its ring, and binary operations reject operands
 * from different rings with ContextMismatch.
 *
 * The resultant is the determinant of the Sylvester matrix in the column
 * layout (deg g shifted copies of f, then deg f shifted copies of g). For a
 * monic f it equals the product of g over the roots of f.
 */

#ifndef STICKEL_POLY_HPP
#define STICKEL_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stickel/determinant.hpp"
#include "stickel/error.hpp"
#include "stickel/natural.hpp"
#include "stickel/ring.hpp"

namespace stickel {

template <class R>
class Poly {
   public:
    using Ring = R;
    using Element = typename R::Element;
    using RingPtr = std::shared_ptr<const R>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw PreconditionViolated("polynomial without a coefficient ring");
    }
    Poly(RingPtr ring, std::vector<Element> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (!ring_) throw PreconditionViolated("polynomial without a coefficient ring");
        trim();
    }

    static Poly constant(RingPtr ring, Element c) { return Poly(std::move(ring), std::vector<Element>{std::move(c)}); }
    static Poly monomial(RingPtr ring, Element c, std::size_t k) {
        std::vector<Element> coeffs(k + 1, ring->zero());
        coeffs[k] = std::move(c);
        return Poly(std::move(ring), std::move(coeffs));
    }
    static Poly one(RingPtr ring) {
        auto c = ring->one();
        return constant(std::move(ring), std::move(c));
    }
    static Poly x(RingPtr ring) {
        auto c = ring->one();
        return monomial(std::move(ring), std::move(c), 1);
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }
    const Element& leading() const {
        if (c_.empty()) throw PreconditionViolated("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && ring_->equal(c_.back(), ring_->one()); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_ring(a, b) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.ring_->equal(a.c_[i], b.c_[i])) return false;
        }
        return true;
    }

    friend bool same_ring(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ || *a.ring_ == *b.ring_;
    }

   private:
    void trim() {
        while (!c_.empty() && ring_->is_zero(c_.back())) c_.pop_back();
    }

    RingPtr ring_;
    std::vector<Element> c_;
};

template <class R>
void require_same_ring(const Poly<R>& f, const Poly<R>& g) {
    if (!same_ring(f, g)) throw ContextMismatch("polynomials over different coefficient rings");
}

template <CoefficientRing R>
Poly<R> poly_add(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    const auto& ring = *f.ring();
    std::vector<typename R::Element> out(std::max(f.coeffs().size(), g.coeffs().size()), ring.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = ring.add(out[i], g.coeffs()[i]);
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
Poly<R> poly_neg(const Poly<R>& f) {
    const auto& ring = *f.ring();
    std::vector<typename R::Element> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(ring.neg(c));
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
Poly<R> poly_sub(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    const auto& ring = *f.ring();
    std::vector<typename R::Element> out(std::max(f.coeffs().size(), g.coeffs().size()), ring.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = ring.sub(out[i], g.coeffs()[i]);
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
Poly<R> poly_mul(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return Poly<R>(f.ring());
    const auto& ring = *f.ring();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<typename R::Element> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (ring.is_zero(b[j])) continue;
            out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
        }
    }
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
Poly<R> poly_scale(const Poly<R>& f, const typename R::Element& s) {
    const auto& ring = *f.ring();
    std::vector<typename R::Element> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(ring.mul(c, s));
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
Poly<R> operator+(const Poly<R>& f, const Poly<R>& g) { return poly_add(f, g); }
template <CoefficientRing R>
Poly<R> operator-(const Poly<R>& f, const Poly<R>& g) { return poly_sub(f, g); }
template <CoefficientRing R>
Poly<R> operator-(const Poly<R>& f) { return poly_neg(f); }
template <CoefficientRing R>
Poly<R> operator*(const Poly<R>& f, const Poly<R>& g) { return poly_mul(f, g); }

template <CoefficientRing R>
struct DivMod {
    Poly<R> quotient;
    Poly<R> remainder;
};

/// Long division; requires the leading coefficient of g to be a unit.
template <CoefficientRing R>
DivMod<R> poly_divmod(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const auto& ring = *f.ring();
    const auto lead_inv = ring.try_inverse(g.leading());
    if (!lead_inv) throw NotInvertible("leading coefficient " + ring.format(g.leading()) + " is not a unit");
    std::vector<typename R::Element> rem = f.coeffs();
    const auto& b = g.coeffs();
    const std::size_t db = b.size() - 1;
    if (rem.size() < b.size()) return {Poly<R>(f.ring()), f};
    std::vector<typename R::Element> quo(rem.size() - db, ring.zero());
    for (std::size_t k = rem.size(); k-- > db;) {
        if (ring.is_zero(rem[k])) continue;
        const auto factor = ring.mul(rem[k], *lead_inv);
        quo[k - db] = factor;
        for (std::size_t i = 0; i <= db; ++i) {
            rem[k - db + i] = ring.sub(rem[k - db + i], ring.mul(factor, b[i]));
        }
    }
    rem.resize(db);
    return {Poly<R>(f.ring(), std::move(quo)), Poly<R>(f.ring(), std::move(rem))};
}

template <CoefficientRing R>
Poly<R> poly_mod(const Poly<R>& f, const Poly<R>& g) { return poly_divmod(f, g).remainder; }

template <CoefficientRing R>
Poly<R> poly_mulmod(const Poly<R>& a, const Poly<R>& b, const Poly<R>& modulus) {
    return poly_mod(poly_mul(a, b), modulus);
}

/// Scales by the inverse of the leading coefficient. The zero polynomial is returned unchanged.
template <CoefficientRing R>
Poly<R> monic(const Poly<R>& f) {
    if (f.is_zero()) return f;
    const auto inv = f.ring()->try_inverse(f.leading());
    if (!inv) throw NotInvertible("leading coefficient is not a unit");
    return poly_scale(f, *inv);
}

/// Monic gcd over a field; gcd(f, 0) = monic(f).
template <CoefficientRing R>
    requires(R::is_field)
Poly<R> poly_gcd(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    Poly<R> a = f, b = g;
    while (!b.is_zero()) {
        Poly<R> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <CoefficientRing R>
struct ExtendedGcd {
    Poly<R> gcd;  // monic
    Poly<R> s;    // s*f + t*g = gcd
    Poly<R> t;
};

template <CoefficientRing R>
    requires(R::is_field)
ExtendedGcd<R> poly_xgcd(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    const auto& ring_ptr = f.ring();
    Poly<R> r0 = f, r1 = g;
    Poly<R> s0 = Poly<R>::one(ring_ptr), s1(ring_ptr);
    Poly<R> t0(ring_ptr), t1 = Poly<R>::one(ring_ptr);
    while (!r1.is_zero()) {
        auto dm = poly_divmod(r0, r1);
        Poly<R> r2 = std::move(dm.remainder);
        Poly<R> s2 = s0 - dm.quotient * s1;
        Poly<R> t2 = t0 - dm.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto inv = *ring_ptr->try_inverse(r0.leading());
    return {poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)};
}

/// base^e mod f by square-and-multiply over the bits of e.
template <CoefficientRing R>
Poly<R> poly_powmod(const Poly<R>& base, const Natural& e, const Poly<R>& f) {
    require_same_ring(base, f);
    Poly<R> b = poly_mod(base, f);
    Poly<R> result = poly_mod(Poly<R>::one(f.ring()), f);
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = poly_mulmod(result, result, f);
        if (e.bit(i)) result = poly_mulmod(result, b, f);
    }
    return result;
}

template <CoefficientRing R>
Poly<R> derivative(const Poly<R>& f) {
    const auto& ring = *f.ring();
    if (f.coeffs().size() <= 1) return Poly<R>(f.ring());
    std::vector<typename R::Element> out;
    out.reserve(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        out.push_back(ring.mul(ring.from_int(static_cast<std::int64_t>(i)), f.coeffs()[i]));
    }
    return Poly<R>(f.ring(), std::move(out));
}

template <CoefficientRing R>
typename R::Element evaluate(const Poly<R>& f, const typename R::Element& at) {
    const auto& ring = *f.ring();
    auto acc = ring.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = ring.add(ring.mul(acc, at), f.coeffs()[i]);
    return acc;
}

/// Sylvester matrix of order deg f + deg g, laid out column-wise.
template <CoefficientRing R>
Matrix<R> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) throw PreconditionViolated("Sylvester matrix of a zero polynomial");
    const auto& ring = *f.ring();
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    const std::size_t order = m + n;
    Matrix<R> s(order, std::vector<typename R::Element>(order, ring.zero()));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i <= m; ++i) s[col + i][col] = f.coeffs()[m - i];
    }
    for (std::size_t col = 0; col < m; ++col) {
        for (std::size_t i = 0; i <= n; ++i) s[col + i][n + col] = g.coeffs()[n - i];
    }
    return s;
}

template <CoefficientRing R>
typename R::Element sylvester_resultant(const Poly<R>& f, const Poly<R>& g) {
    return determinant(*f.ring(), sylvester_matrix(f, g));
}

/// (-1)^(m(m-1)/2) * a_m^(-1) * R(f, f'); zero when f' vanishes identically.
template <CoefficientRing R>
    requires(R::is_field)
typename R::Element discriminant(const Poly<R>& f) {
    if (f.degree() < 1) throw DegreeTooSmall("discriminant of a constant polynomial");
    const auto& ring = *f.ring();
    const Poly<R> df = derivative(f);
    if (df.is_zero()) return ring.zero();
    const auto m = static_cast<std::uint64_t>(f.degree());
    auto value = ring.mul(*ring.try_inverse(f.leading()), sylvester_resultant(f, df));
    if ((m * (m - 1) / 2) % 2 == 1) value = ring.neg(value);
    return value;
}

}  // namespace stickel

#endif
