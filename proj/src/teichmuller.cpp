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


#include "stickel/teichmuller.hpp"

#include <numeric>

#include "stickel/linalg.hpp"
#include "stickel/resolvent.hpp"
#include "stickel/rth_root.hpp"
#include "stickel/text.hpp"

namespace stickel {

namespace {

Natural powmod(Natural base, const Natural& e, const Natural& m) {
    Natural result(1);
    base %= m;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = result * result % m;
        if (e.bit(i)) result = result * base % m;
    }
    return result % m;
}

// log_r(n), or nothing when n is not a power of r.
std::optional<std::size_t> log_exact(std::uint64_t n, std::uint64_t r) {
    std::size_t e = 0;
    while (n > 1) {
        if (n % r != 0) return std::nullopt;
        n /= r;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return e;
}

}  // namespace

// CycRing

CycRing::CycRing(FieldPtr base, std::uint64_t r) : base_(std::move(base)), r_(r) {
    if (!is_prime(r_)) throw NotPrime("r = " + std::to_string(r_));
    if (base_->characteristic() % r_ == 0) throw PreconditionViolated("r divides the characteristic");
}

CycRing::Element CycRing::reduce(std::vector<Field::Element> full) const {
    const Field& k = *base_;
    const Field::Element top = full[r_ - 1];
    full.pop_back();
    if (!k.is_zero(top)) {
        for (auto& v : full) v = k.sub(v, top);
    }
    return full;
}

CycRing::Element CycRing::zero() const { return Element(dimension(), base_->zero()); }

CycRing::Element CycRing::one() const { return from_base(base_->one()); }

CycRing::Element CycRing::from_int(std::int64_t n) const { return from_base(base_->from_int(n)); }

CycRing::Element CycRing::from_base(const Field::Element& a) const {
    Element out = zero();
    out[0] = a;
    return out;
}

CycRing::Element CycRing::zeta() const { return zeta_pow(1); }

CycRing::Element CycRing::zeta_pow(std::uint64_t i) const {
    std::vector<Field::Element> full(r_, base_->zero());
    full[i % r_] = base_->one();
    return reduce(std::move(full));
}

CycRing::Element CycRing::add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_->add(a[i], b[i]);
    return out;
}

CycRing::Element CycRing::sub(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_->sub(a[i], b[i]);
    return out;
}

CycRing::Element CycRing::neg(const Element& a) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_->neg(a[i]);
    return out;
}

CycRing::Element CycRing::mul(const Element& a, const Element& b) const {
    const Field& k = *base_;
    std::vector<Field::Element> full(r_, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (k.is_zero(b[j])) continue;
            auto& slot = full[(i + j) % r_];
            slot = k.add(slot, k.mul(a[i], b[j]));
        }
    }
    return reduce(std::move(full));
}

CycRing::Element CycRing::scale(const Element& a, const Field::Element& s) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_->mul(a[i], s);
    return out;
}

CycRing::Element CycRing::pow(const Element& a, const Natural& e) const {
    Element result = one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = mul(result, result);
        if (e.bit(i)) result = mul(result, a);
    }
    return result;
}

bool CycRing::is_zero(const Element& a) const {
    for (const auto& v : a) {
        if (!base_->is_zero(v)) return false;
    }
    return true;
}

std::optional<CycRing::Element> CycRing::try_inverse(const Element& a) const {
    const std::size_t n = dimension();
    Matrix<Field> m(n, std::vector<Field::Element>(n));
    Element col = a;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
        col = mul(col, zeta());
    }
    auto x = solve(*base_, std::move(m), one());
    if (!x) return std::nullopt;
    return Element(x->begin(), x->end());
}

std::string CycRing::format(const Element& a) const {
    return format_poly(FieldPoly(base_, std::vector<Field::Element>(a.begin(), a.end())), "zeta");
}

CycRing::Element CycRing::apply(std::uint64_t a, const Element& v) const {
    if (a % r_ == 0) throw PreconditionViolated("automorphism index divisible by r");
    std::vector<Field::Element> full(r_, base_->zero());
    for (std::size_t j = 0; j < v.size(); ++j) {
        auto& slot = full[(a % r_) * j % r_];
        slot = base_->add(slot, v[j]);
    }
    return reduce(std::move(full));
}

bool CycRing::is_constant(const Element& v) const {
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (!base_->is_zero(v[j])) return false;
    }
    return true;
}

bool CycRing::is_fixed(const Element& v) const {
    for (std::uint64_t a = 2; a < r_; ++a) {
        if (!(apply(a, v) == v)) return false;
    }
    return true;
}

// Scalars

std::uint64_t order_mod(const Natural& q, std::uint64_t r) {
    const std::uint64_t base = q.mod_u64(r);
    if (base == 0) throw PreconditionViolated("r divides q");
    std::uint64_t e = 1;
    for (std::uint64_t v = base; v != 1 % r; v = static_cast<std::uint64_t>((unsigned __int128)v * base % r)) ++e;
    return e;
}

Natural omega(const Natural& a, std::uint64_t r, std::size_t t) {
    if (t == 0) throw PreconditionViolated("omega needs t >= 1");
    const Natural m = pow(Natural(r), t);
    return powmod(a, pow(Natural(r), t - 1), m);
}

std::uint64_t primitive_root_mod(std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    if (r == 2) return 1;
    for (std::uint64_t g = 2; g < r; ++g) {
        if (order_mod(Natural(g), r) == r - 1) return g;
    }
    throw OrderMismatch("no primitive root mod " + std::to_string(r));
}

// Resolvent over the ring

CycPoly ring_resolvent(const std::shared_ptr<const CycRing>& ring, const FieldPoly& h, const Natural& step,
                       const FieldPoly& y) {
    const std::size_t n = static_cast<std::size_t>(h.degree());
    const auto& k = h.ring();
    std::vector<CycRing::Element> coeffs(n, ring->zero());
    FieldPoly term = poly_mod(y, h);
    for (std::uint64_t i = 0; i < ring->r(); ++i) {
        if (i > 0) term = poly_powmod(term, step, h);
        const auto z = ring->zeta_pow(i);
        for (std::size_t j = 0; j < term.coeffs().size(); ++j) {
            coeffs[j] = ring->add(coeffs[j], ring->scale(z, term.coeffs()[j]));
        }
    }
    return CycPoly(ring, std::move(coeffs));
}

CycRing::Element resolvent_over_ring(const TeichmullerContext& ctx, const FieldPoly& y) {
    const CycRing& ring = *ctx.ring;
    const FieldPoly& h = ctx.block.h;
    const Natural q = ctx.field->order();
    const Natural step = pow(q, ctx.e * ctx.k_prime);
    const CycPoly g = ring_resolvent(ctx.ring, h, step, y);
    std::vector<CycRing::Element> hc;
    for (const auto& v : h.coeffs()) hc.push_back(ring.from_base(v));
    const CycPoly hr(ctx.ring, std::move(hc));
    const CycRing::Element res = g.is_zero() ? ring.zero() : sylvester_resultant(hr, g);
    if (!ring.try_inverse(res)) throw ZeroDivisorEncountered("resultant " + ring.format(res) + " is not a unit");
    const Natural exponent = (pow(q, ctx.e) - Natural(1)) / Natural(ctx.r);
    const std::uint64_t rl = (ctx.r_prime % ctx.r) * (ctx.ell % ctx.r) % ctx.r;
    if (!(ring.pow(res, exponent) == ring.zeta_pow(ctx.r - rl))) {
        throw OrderMismatch("R^((q^e-1)/r) != zeta^(-r' ell)");
    }
    return res;
}

CycRing::Element compute_delta(const TeichmullerContext& ctx) {
    const CycRing& ring = *ctx.ring;
    const CycRing::Element delta = ring.pow(ctx.resultant, ctx.u * Natural(ctx.r_dprime));
    if (!(ring.pow(delta, pow(Natural(ctx.r), ctx.t - 1)) == ring.zeta_pow(ctx.r - 1))) {
        throw OrderMismatch("delta^(r^(t-1)) != zeta^-1");
    }
    if (!(ring.pow(delta, pow(Natural(ctx.r), ctx.t)) == ring.one())) throw OrderMismatch("delta^(r^t) != 1");
    return delta;
}

CycRing::Element compute_c(const TeichmullerContext& ctx) {
    const CycRing& ring = *ctx.ring;
    const std::uint64_t r = ctx.r;
    CycRing::Element c = ring.one();
    for (std::uint64_t a = 1; a < r; ++a) {
        const std::uint64_t a_inv = r == 2 ? 1 : invmod_u64(a, r);
        c = ring.mul(c, ring.apply(a_inv, ring.pow(ctx.delta, omega(Natural(a), r, ctx.t))));
    }
    if (!(ring.pow(c, pow(Natural(r), ctx.t - 1)) == ring.zeta())) throw OrderMismatch("c^(r^(t-1)) != zeta");
    if (!(ring.pow(c, pow(Natural(r), ctx.t)) == ring.one())) throw OrderMismatch("c^(r^t) != 1");
    for (std::uint64_t b = 1; b < r; ++b) {
        if (!(ring.apply(b, c) == ring.pow(c, omega(Natural(b), r, ctx.t)))) {
            throw AutomorphismInconsistent("rho_" + std::to_string(b) + "(c) != c^omega(b)");
        }
    }
    return c;
}

TeichmullerContext TeichmullerContext::build(const FieldPoly& f, std::uint64_t r) {
    auto ring = std::make_shared<const CycRing>(f.ring(), r);
    auto w = check_property1(f, r);
    if (!w) throw PropertyNotSatisfied(format_poly(f) + " for r = " + std::to_string(r));
    TeichmullerContext ctx(std::move(*w));
    ctx.field = f.ring();
    ctx.r = r;
    ctx.ring = std::move(ring);
    const Natural q = ctx.field->order();
    const std::uint64_t d = ctx.block.d;
    ctx.e = order_mod(q, r);
    ctx.ell = std::gcd(d, ctx.e);
    ctx.k_prime = (d / r) / ctx.ell;
    ctx.r_prime = ctx.block.count;
    Natural qe1 = pow(q, ctx.e) - Natural(1);
    if (r == 2 && !(qe1 % Natural(4)).is_zero()) {
        throw PreconditionViolated("r = 2 needs q = 1 mod 4 for the resolvent identity");
    }
    ctx.u = qe1;
    while ((ctx.u % Natural(r)).is_zero()) {
        ctx.u /= Natural(r);
        ++ctx.t;
    }
    const std::uint64_t rl = (ctx.r_prime % r) * (ctx.ell % r) % r;
    ctx.r_dprime = r == 2 ? 1 : invmod_u64(rl, r);

    // The resolvent of x may vanish in some component of the ring; other
    // seeds are tried before giving up.
    const FieldPoly& h = ctx.block.h;
    std::vector<FieldPoly> seeds;
    for (std::size_t j = 1; j < d; ++j) seeds.push_back(FieldPoly::monomial(ctx.field, ctx.field->one(), j));
    for (std::size_t s = 1; s < d && seeds.size() < kSeedTries; ++s) {
        for (Natural idx(0); idx < pow(q, s) && seeds.size() < kSeedTries; idx += Natural(1)) {
            auto y = monic_from_index(ctx.field, s, idx);
            if (!(y == FieldPoly::monomial(ctx.field, ctx.field->one(), s))) seeds.push_back(std::move(y));
        }
    }
    std::optional<CycRing::Element> res;
    for (const auto& y : seeds) {
        try {
            res = resolvent_over_ring(ctx, y);
            ctx.seed = poly_mod(y, h);
            break;
        } catch (const ZeroDivisorEncountered&) {
        }
    }
    if (!res) throw ZeroDivisorEncountered("no resolvent seed gives a unit");
    ctx.resultant = std::move(*res);
    ctx.delta = compute_delta(ctx);
    ctx.c = compute_c(ctx);
    return ctx;
}

// Extension ring

ExtensionRing::ExtensionRing(std::shared_ptr<const CycRing> ring, CycRing::Element c, std::size_t t, std::size_t n)
    : ring_(std::move(ring)), c_(std::move(c)), n_(n) {
    const std::uint64_t r = ring_->r();
    const auto big_e = log_exact(n_, r);
    if (!big_e || *big_e == 0) throw PreconditionViolated("N must be a positive power of r");
    const Natural modulus = stickel::pow(Natural(r), t + *big_e);
    const Natural lift = stickel::pow(Natural(r), t + *big_e - 1);
    exponents_.resize(r);
    x_images_.resize(r);
    for (std::uint64_t b = 1; b < r; ++b) {
        exponents_[b] = powmod(Natural(b), lift, modulus);
        const Element xb = x_pow(exponents_[b]);
        auto& images = x_images_[b];
        images.push_back(one());
        for (std::size_t i = 1; i < n_; ++i) images.push_back(mul(images.back(), xb));
        if (!(mul(images.back(), xb) == from_cyc(ring_->apply(b, c_)))) {
            throw AutomorphismInconsistent("rho_" + std::to_string(b) + "(X)^N != rho_b(c)");
        }
    }
    for (std::uint64_t a = 1; a < r; ++a) {
        for (std::uint64_t b = 1; b < r; ++b) {
            const std::uint64_t ab = a * b % r;
            if (!(apply(a, x_images_[b][n_ > 1 ? 1 : 0]) == x_images_[ab][n_ > 1 ? 1 : 0])) {
                throw AutomorphismInconsistent("rho_a rho_b != rho_ab on X");
            }
        }
    }
}

ExtensionRing::Element ExtensionRing::zero() const { return Element(n_, ring_->zero()); }

ExtensionRing::Element ExtensionRing::one() const { return from_cyc(ring_->one()); }

ExtensionRing::Element ExtensionRing::x() const { return x_pow(Natural(1)); }

ExtensionRing::Element ExtensionRing::from_cyc(const CycRing::Element& a) const {
    Element out = zero();
    out[0] = a;
    return out;
}

ExtensionRing::Element ExtensionRing::add(const Element& a, const Element& b) const {
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = ring_->add(a[i], b[i]);
    return out;
}

ExtensionRing::Element ExtensionRing::sub(const Element& a, const Element& b) const {
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = ring_->sub(a[i], b[i]);
    return out;
}

ExtensionRing::Element ExtensionRing::mul(const Element& a, const Element& b) const {
    std::vector<CycRing::Element> full(2 * n_ - 1, ring_->zero());
    for (std::size_t i = 0; i < n_; ++i) {
        if (ring_->is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (ring_->is_zero(b[j])) continue;
            full[i + j] = ring_->add(full[i + j], ring_->mul(a[i], b[j]));
        }
    }
    for (std::size_t i = full.size(); i-- > n_;) {
        if (ring_->is_zero(full[i])) continue;
        full[i - n_] = ring_->add(full[i - n_], ring_->mul(c_, full[i]));
    }
    full.resize(n_);
    return full;
}

ExtensionRing::Element ExtensionRing::scale(const Element& a, const CycRing::Element& s) const {
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = ring_->mul(a[i], s);
    return out;
}

ExtensionRing::Element ExtensionRing::pow(const Element& a, const Natural& e) const {
    Element result = one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = mul(result, result);
        if (e.bit(i)) result = mul(result, a);
    }
    return result;
}

ExtensionRing::Element ExtensionRing::x_pow(const Natural& e) const {
    Element out = zero();
    const Natural n(static_cast<std::uint64_t>(n_));
    out[(e % n).to_u64()] = ring_->pow(c_, e / n);
    return out;
}

bool ExtensionRing::is_zero(const Element& a) const {
    for (const auto& v : a) {
        if (!ring_->is_zero(v)) return false;
    }
    return true;
}

ExtensionRing::Element ExtensionRing::apply(std::uint64_t b, const Element& v) const {
    b %= ring_->r();
    if (b == 0) throw PreconditionViolated("automorphism index divisible by r");
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (ring_->is_zero(v[i])) continue;
        out = add(out, scale(x_images_[b][i], ring_->apply(b, v[i])));
    }
    return out;
}

std::vector<Field::Element> ExtensionRing::flatten(const Element& a) const {
    std::vector<Field::Element> out;
    out.reserve(dimension());
    for (const auto& coeff : a) out.insert(out.end(), coeff.begin(), coeff.end());
    return out;
}

ExtensionRing::Element ExtensionRing::unflatten(const std::vector<Field::Element>& coords) const {
    if (coords.size() != dimension()) throw DimensionMismatch("coordinate vector length");
    const std::size_t w = ring_->dimension();
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(coords.begin() + i * w, coords.begin() + (i + 1) * w);
    return out;
}

ExtensionRing build_extension_ring(const TeichmullerContext& ctx, std::size_t n) {
    return ExtensionRing(ctx.ring, ctx.c, ctx.t, n);
}

// Fixed subring

namespace {

// Minimal polynomial over F_q of a fixed element, from the first linear
// dependence among its powers.
FieldPoly fixed_min_poly(const ExtensionRing& ext, const ExtensionRing::Element& v) {
    const FieldPtr& k = ext.ring().base();
    LinearDependence<Field> dep(*k, ext.dimension());
    ExtensionRing::Element power = ext.one();
    for (std::size_t deg = 0; deg <= ext.dimension(); ++deg) {
        if (auto c = dep.add(ext.flatten(power))) {
            std::vector<Field::Element> coeffs(deg + 1, k->zero());
            for (std::size_t i = 0; i < deg; ++i) coeffs[i] = k->neg((*c)[i]);
            coeffs[deg] = k->one();
            return FieldPoly(k, std::move(coeffs));
        }
        power = ext.mul(power, v);
    }
    throw DimensionMismatch("no dependence among powers");
}

}  // namespace

FixedSubfield fixed_subring(const ExtensionRing& ext) {
    const FieldPtr& k = ext.ring().base();
    const CycRing& ring = ext.ring();
    const std::size_t dim = ext.dimension();
    const std::uint64_t b0 = primitive_root_mod(ring.r());

    Matrix<Field> a(dim, std::vector<Field::Element>(dim, k->zero()));
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Field::Element> unit(dim, k->zero());
        unit[col] = k->one();
        const auto image = ext.flatten(ext.apply(b0, ext.unflatten(unit)));
        for (std::size_t row = 0; row < dim; ++row) a[row][col] = image[row];
        a[col][col] = k->sub(a[col][col], k->one());
    }
    const auto kernel = nullspace(*k, std::move(a), dim);
    if (kernel.size() != ext.degree()) {
        throw DimensionMismatch("fixed space has dimension " + std::to_string(kernel.size()) + ", expected " +
                                std::to_string(ext.degree()));
    }
    std::vector<ExtensionRing::Element> basis;
    for (const auto& v : kernel) {
        auto e = ext.unflatten(v);
        for (std::uint64_t b = 1; b < ring.r(); ++b) {
            if (!(ext.apply(b, e) == e)) throw AutomorphismInconsistent("basis element not fixed by rho_b");
        }
        basis.push_back(std::move(e));
    }

    // Candidates: the basis vectors, then sum_i lambda^i b_i for lambda = 1, 2, ...
    const std::size_t n = ext.degree();
    std::optional<ExtensionRing::Element> primitive;
    std::optional<FieldPoly> min_poly;
    auto try_candidate = [&](const ExtensionRing::Element& v) {
        FieldPoly m = fixed_min_poly(ext, v);
        if (static_cast<std::size_t>(m.degree()) != n) return false;
        primitive = v;
        min_poly = std::move(m);
        return true;
    };
    bool found = false;
    for (const auto& v : basis) {
        if ((found = try_candidate(v))) break;
    }
    const Natural q = k->order();
    for (Natural idx(1); !found && idx < q && idx <= Natural(1000); idx += Natural(1)) {
        const Field::Element lambda = k->from_index(idx);
        Field::Element li = k->one();
        ExtensionRing::Element v = ext.zero();
        for (const auto& b : basis) {
            v = ext.add(v, ext.scale(b, ring.from_base(li)));
            li = k->mul(li, lambda);
        }
        found = try_candidate(v);
    }
    if (!found) throw ConstructionFailed("no primitive element found in the fixed subring");
    if (!is_irreducible(*min_poly)) throw NotIrreducible(format_poly(*min_poly));
    return FixedSubfield{std::move(basis), std::move(*primitive), std::move(*min_poly)};
}

FieldPoly build_field_extension(const FieldPoly& f, std::uint64_t r) {
    const auto ctx = TeichmullerContext::build(f, r);
    const auto ext = build_extension_ring(ctx, r);
    return fixed_subring(ext).min_poly;
}

FieldPoly build_rpower_field(const FieldPoly& f, std::uint64_t r, std::uint64_t m) {
    const FieldPtr& k = f.ring();
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    if (!log_exact(m, r)) throw PreconditionViolated(std::to_string(m) + " is not a power of r");
    if (m == 1) return FieldPoly::x(k);
    auto witness = check_property1(f, r);
    if (!witness) throw PropertyNotSatisfied(format_poly(f) + " for r = " + std::to_string(r));

    const Natural q = k->order();
    const std::uint64_t q_mod4 = q.mod_u64(4);
    std::string diagnostics;
    auto note = [&](const std::string& path, const std::string& why) {
        diagnostics += (diagnostics.empty() ? "" : "; ") + path + ": " + why;
    };

    if (q.mod_u64(r) == 1 % r) {
        try {
            FqElement a;
            if (r == 2 && q_mod4 == 3) {
                a = FqElement::from_int(k, -1);
            } else {
                const FqElement zeta = find_zeta_bruteforce(k, r);
                const ResolventContext ctx(k, r, zeta, *witness);
                a = nonresidue_from_block(ctx).value;
            }
            FieldPoly cand = FieldPoly::monomial(k, k->one(), m) - FieldPoly::constant(k, a.value);
            if (is_irreducible(cand)) return cand;
            note("X^m - a", format_poly(cand) + " is reducible");
        } catch (const Error& e) {
            note("X^m - a", e.what());
        }
    }

    if (!(r == 2 && q_mod4 == 3)) {
        try {
            const auto ctx = TeichmullerContext::build(f, r);
            const auto ext = build_extension_ring(ctx, m);
            return fixed_subring(ext).min_poly;
        } catch (const Error& e) {
            note("fixed subring", e.what());
        }
    }

    if (m > r) {
        try {
            const FieldPoly g1 = build_rpower_field(f, r, r);
            const FieldPtr k1 = Field::extend(k, g1);
            std::vector<Field::Element> lifted;
            for (const auto& c : f.coeffs()) lifted.push_back(k1->embed(*k, c));
            const FieldPoly rest = build_rpower_field(FieldPoly(k1, std::move(lifted)), r, m / r);
            const FieldPtr k2 = Field::extend(k1, rest);
            FieldPoly out = flatten(k2, k).defining;
            if (static_cast<std::uint64_t>(out.degree()) == m && is_irreducible(out)) return out;
            note("recursion", "flattened polynomial failed verification");
        } catch (const Error& e) {
            note("recursion", e.what());
        }
    }
    throw ConstructionFailed("degree " + std::to_string(m) + " over F_" + q.to_string() + ": " + diagnostics);
}

}  // namespace stickel
