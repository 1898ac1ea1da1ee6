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


#include "stickel/rth_root.hpp"

#include <cstdlib>
#include <string>

#include "stickel/factor.hpp"
#include "stickel/resolvent.hpp"

namespace stickel {

namespace {

constexpr std::uint64_t kDefaultTrialCap = 1'000'000;

void require_r_divides(const Field& k, std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const Natural q1 = k.order() - Natural(1);
    if (!(q1 % Natural(r)).is_zero()) {
        throw RDoesNotDivide(std::to_string(r) + " does not divide q - 1 = " + q1.to_string());
    }
}

}  // namespace

std::uint64_t zeta_trial_cap() {
    const char* env = std::getenv("STICKEL_TRIAL_CAP");
    if (env == nullptr || *env == '\0') return kDefaultTrialCap;
    try {
        const Natural cap = Natural::parse(env);
        if (cap.is_zero() || !cap.fits_u64()) throw ParseError("out of range");
        return cap.to_u64();
    } catch (const Error&) {
        throw PreconditionViolated(std::string("STICKEL_TRIAL_CAP must be a positive integer, got '") + env + "'");
    }
}

FqElement find_zeta_bruteforce(const FieldPtr& field, std::uint64_t r) {
    require_r_divides(*field, r);
    const Natural e = (field->order() - Natural(1)) / Natural(r);
    const std::uint64_t cap = zeta_trial_cap();
    const Natural q = field->order();
    for (std::uint64_t i = 1; i <= cap && Natural(i) < q; ++i) {
        const FqElement z(field, field->pow(field->from_index(Natural(i)), e));
        if (!z.is_one()) return z;
    }
    throw TrialCapExceeded("no r-th nonresidue among the first " + std::to_string(cap) + " elements");
}

ZetaSearch sze_zeta_search(const FieldPtr& field, std::uint64_t r, const Natural& t) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    if (t.is_zero() || (t % Natural(r)).is_zero()) throw BadFactorization("r divides t");
    const Natural q1 = field->order() - Natural(1);
    if (!(q1 % t).is_zero()) throw BadFactorization("t does not divide q - 1");
    Natural rest = q1 / t;
    if (rest == Natural(1)) throw BadFactorization("q - 1 = t, so r does not divide q - 1");
    while (rest > Natural(1)) {
        if (!(rest % Natural(r)).is_zero()) throw BadFactorization("(q - 1)/t is not a power of r");
        rest /= Natural(r);
    }
    const Natural bound = t + Natural(1);
    std::size_t scanned = 0;
    for (Natural i(1); i <= bound && i < field->order(); i += Natural(1)) {
        ++scanned;
        Field::Element b = field->pow(field->from_index(i), t);
        if (field->is_one(b)) continue;
        // b has order r^s with s >= 1; the last power before 1 has order r.
        for (;;) {
            Field::Element next = field->pow(b, Natural(r));
            if (field->is_one(next)) return {FqElement(field, std::move(b)), scanned};
            b = std::move(next);
        }
    }
    throw OrderMismatch("no element of order prime to t among the first t + 1");
}

FqElement sze_zeta(const FieldPtr& field, std::uint64_t r, const Natural& t) {
    return sze_zeta_search(field, r, t).zeta;
}

RootContext::RootContext(FieldPtr field, std::uint64_t r, FqElement eta)
    : field_(std::move(field)), r_(r), eta_(std::move(eta)) {
    require_r_divides(*field_, r_);
    if (!(*eta_.field == *field_)) throw ContextMismatch("eta is not in the field");
    if (!is_nonresidue(eta_, r_)) throw PreconditionViolated(eta_.to_string() + " is an r-th residue");
    u_ = field_->order() - Natural(1);
    while ((u_ % Natural(r_)).is_zero()) {
        u_ /= Natural(r_);
        ++t_;
    }
    g_ = fq_pow(eta_, u_);
    zeta_ = fq_pow(g_, pow(Natural(r_), t_ - 1));
    if (zeta_.is_one() || !fq_pow(zeta_, Natural(r_)).is_one()) throw OrderMismatch("eta^u does not have order r^t");
    table_.push_back(FqElement::from_int(field_, 1));
    for (std::uint64_t i = 1; i < r_; ++i) table_.push_back(table_.back() * zeta_);
}

std::uint64_t RootContext::log_zeta(const FqElement& z) const {
    for (std::uint64_t i = 0; i < r_; ++i) {
        if (table_[i] == z) return i;
    }
    throw OrderMismatch(z.to_string() + " is not a power of zeta");
}

FqElement amm_rth_root(const RootContext& ctx, const FqElement& a) {
    const FieldPtr& k = ctx.field();
    if (!(*a.field == *k)) throw ContextMismatch("element is not in the context field");
    if (a.is_zero()) return a;
    const std::uint64_t r = ctx.r();
    if (!chi_r(a, r).is_one()) throw NotAResidue(a.to_string());

    // w r = 1 mod u, so x = a^w has x^r / a = a^(w r - 1) in the r-Sylow subgroup.
    const Natural& u = ctx.u();
    const std::uint64_t ur = u.mod_u64(r);
    const std::uint64_t kk = (r - invmod_u64(ur, r)) % r;
    const Natural w = (Natural(kk) * u + Natural(1)) / Natural(r);
    FqElement x = fq_pow(a, w);

    // Solve c^r = a / x^r inside the Sylow subgroup, one base-r digit of the
    // discrete log of the error against g at a time.
    const std::size_t t = ctx.t();
    const FqElement& g = ctx.sylow_generator();
    const FqElement target = a / fq_pow(x, Natural(r));
    Natural dlog(0);
    FqElement known = FqElement::from_int(k, 1);  // g^dlog
    FqElement g_pow = g;                          // g^(r^j)
    for (std::size_t j = 0; j < t; ++j) {
        const FqElement rest = target / known;
        const FqElement probe = fq_pow(rest, pow(Natural(r), t - 1 - j));
        const std::uint64_t digit = ctx.log_zeta(probe);
        if (digit != 0) {
            known = known * fq_pow(g_pow, Natural(digit));
            dlog += Natural(digit) * pow(Natural(r), j);
        }
        g_pow = fq_pow(g_pow, Natural(r));
    }
    if (!(known == target) || !(dlog % Natural(r)).is_zero()) throw OrderMismatch("error term is not an r-th power");
    x = x * fq_pow(g, dlog / Natural(r));
    if (!(fq_pow(x, Natural(r)) == a)) throw OrderMismatch("root check failed");
    return x;
}

std::vector<FqElement> all_rth_roots(const RootContext& ctx, const FqElement& a) {
    const FqElement x = amm_rth_root(ctx, a);
    if (x.is_zero()) return {x};
    std::vector<FqElement> out{x};
    for (std::uint64_t i = 1; i < ctx.r(); ++i) out.push_back(out.back() * ctx.zeta());
    return out;
}

FqElement cor13_pipeline(const FqElement& a, std::uint64_t r) {
    const FieldPtr& field = a.field;
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const std::size_t m = field->absolute_degree();
    const std::uint64_t p = field->characteristic();
    if (m % r != 0) throw PreconditionViolated("r = " + std::to_string(r) + " does not divide m = " + std::to_string(m));
    if ((p - 1) % r != 0) throw RDoesNotDivide(std::to_string(r) + " does not divide p - 1");
    if (r == 2 && p % 4 == 3) throw PreconditionViolated("r = 2 needs p = 1 mod 4");
    const FieldPtr fp = field->prime_field();
    const FqElement zeta = find_zeta_bruteforce(fp, r);
    const FieldPoly f = field->level() == 1 ? field->defining_poly() : flatten(field, fp).defining;
    const FqElement eta = bims(f, zeta, r, field);
    const RootContext ctx(field, r, eta);
    return amm_rth_root(ctx, a);
}

}  // namespace stickel
