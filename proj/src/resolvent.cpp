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


#include "stickel/resolvent.hpp"

#include "stickel/text.hpp"

namespace stickel {

void require_resolvent_field(const Field& k, std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const Natural modulus(r == 2 ? 4 : r);
    if (!((k.order() - Natural(1)) % modulus).is_zero()) {
        throw PreconditionViolated(modulus.to_string() + " does not divide q - 1 = " +
                                   (k.order() - Natural(1)).to_string());
    }
}

void check_zeta(const Field& k, const Field::Element& zeta, std::uint64_t r) {
    k.check_element(zeta);
    if (k.is_one(zeta) || !k.is_one(k.pow(zeta, r))) {
        throw BadZeta(k.format(zeta) + " is not a primitive " + std::to_string(r) + "-th root of unity");
    }
}

FieldPoly lagrange_sum(const FieldPoly& f, const Field::Element& zeta, std::uint64_t r, const Natural& v,
                       std::size_t power) {
    const auto& k = f.ring();
    FieldPoly term = poly_mod(FieldPoly::monomial(k, k->one(), power), f);
    FieldPoly acc(k);
    Field::Element zi = k->one();
    for (std::uint64_t i = 0; i < r; ++i) {
        if (i > 0) {
            term = poly_powmod(term, v, f);
            zi = k->mul(zi, zeta);
        }
        acc = acc + poly_scale(term, zi);
    }
    return acc;
}

ResolventContext::ResolventContext(FieldPtr field, std::uint64_t r, FqElement zeta, PropertyWitness block)
    : field_(std::move(field)), r_(r), zeta_(std::move(zeta)), block_(std::move(block)) {
    if (!(*zeta_.field == *field_)) throw ContextMismatch("zeta is not in the base field");
    require_resolvent_field(*field_, r_);
    check_zeta(*field_, zeta_.value, r_);
    if (block_.r != r_) throw PreconditionViolated("witness was computed for a different r");
    if (!(*block_.h.ring() == *field_)) throw ContextMismatch("block is not over the base field");
    if (block_.d == 0 || block_.d % r_ != 0 || block_.count % r_ == 0) {
        throw PropertyNotSatisfied("block of " + std::to_string(block_.count) + " factors of degree " +
                                   std::to_string(block_.d));
    }
    if (!block_.h.is_monic() || static_cast<std::size_t>(block_.h.degree()) != block_.d * block_.count) {
        throw PreconditionViolated("block polynomial does not match its degree pattern");
    }
    step_ = pow(field_->order(), block_.d / r_);
}

ResolventContext ResolventContext::from_polynomial(FieldPtr field, std::uint64_t r, FqElement zeta,
                                                   const FieldPoly& f) {
    auto w = check_property1(f, r);
    if (!w) throw PropertyNotSatisfied(format_poly(f) + " for r = " + std::to_string(r));
    return ResolventContext(std::move(field), r, std::move(zeta), std::move(*w));
}

namespace {

FieldPoly checked_factor(const ResolventContext& ctx, const FieldPoly& fi) {
    if (!(*fi.ring() == *ctx.field())) throw ContextMismatch("factor is not over the base field");
    if (fi.degree() < 1 || static_cast<std::size_t>(fi.degree()) != ctx.block().d) {
        throw PreconditionViolated("factor degree must be " + std::to_string(ctx.block().d));
    }
    return monic(fi);
}

// sum_i y^(v^i) z^i for y = theta^j, the first j >= 1 giving a nonzero value.
// theta must generate `target` over a field the sum is taken over.
Field::Element target_resolvent(const Field& target, const Field::Element& theta, const Field::Element& z,
                                std::uint64_t r, const Natural& v, std::size_t span) {
    Field::Element y = theta;
    for (std::size_t j = 1; j < span; ++j, y = target.mul(y, theta)) {
        Field::Element term = y;
        Field::Element zi = target.one();
        Field::Element acc = target.zero();
        for (std::uint64_t i = 0; i < r; ++i) {
            if (i > 0) {
                term = target.pow(term, v);
                zi = target.mul(zi, z);
            }
            acc = target.add(acc, target.mul(term, zi));
        }
        if (!target.is_zero(acc)) return acc;
    }
    throw ZeroResolvent("every power of the generator has a vanishing resolvent");
}

}  // namespace

FqElement lagrange_resolvent(const ResolventContext& ctx, const FieldPoly& fi, std::size_t power) {
    const FieldPoly f = checked_factor(ctx, fi);
    const FieldPtr ext = Field::extend(ctx.field(), f);
    const FieldPoly g = lagrange_sum(f, ctx.zeta().value, ctx.r(), ctx.step(), power);
    if (g.is_zero()) throw ZeroResolvent(format_poly(f));
    FqElement l(ext, ext->from_base_poly(g));
    const FqElement z(ext, ext->embed(*ctx.field(), ctx.zeta().value));
    if (!(fq_pow(l, ctx.step()) * z == l)) throw OrderMismatch("L^(q^k) zeta != L");
    const Natural e = (ext->order() - Natural(1)) / Natural(ctx.r());
    if (!(fq_pow(l, e) == fq_inverse(z))) throw OrderMismatch("L^((q^d-1)/r) != zeta^-1");
    return l;
}

FqElement nonresidue_from_irreducible(const ResolventContext& ctx, const FieldPoly& fi, std::size_t power) {
    const FieldPoly f = checked_factor(ctx, fi);
    const FieldPoly g = lagrange_sum(f, ctx.zeta().value, ctx.r(), ctx.step(), power);
    if (g.is_zero()) throw ZeroResolvent(format_poly(f));
    FqElement out(ctx.field(), sylvester_resultant(f, g));
    if (out.is_zero()) throw NotIrreducible(format_poly(f));
    if (!(chi_r(out, ctx.r()) == fq_inverse(ctx.zeta()))) {
        throw OrderMismatch("character of the resolvent resultant is not zeta^-1");
    }
    return out;
}

FqElement nonresidue_from_property1(const ResolventContext& ctx) {
    const FieldPoly& h = ctx.block().h;
    const FieldPoly g = lagrange_sum(h, ctx.zeta().value, ctx.r(), ctx.step());
    if (g.is_zero()) throw ZeroResolvent(format_poly(h));
    FqElement out(ctx.field(), sylvester_resultant(h, g));
    if (out.is_zero()) throw ZeroResolvent("resolvent vanishes modulo a factor of " + format_poly(h));
    const FqElement expected = fq_pow(fq_inverse(ctx.zeta()), ctx.block().count);
    if (!(chi_r(out, ctx.r()) == expected)) throw OrderMismatch("character of the block resultant is not zeta^-r'");
    return out;
}

BlockNonresidue nonresidue_from_block(const ResolventContext& ctx) {
    const auto& k = ctx.field();
    const std::uint64_t r = ctx.r();
    const std::size_t d = ctx.block().d;
    FieldPoly h = ctx.block().h;
    // Invariant: r does not divide count, and every factor of h has a
    // vanishing resolvent for all powers tried so far.
    for (std::size_t power = 1; power < d; ++power) {
        const FieldPoly g = lagrange_sum(h, ctx.zeta().value, r, ctx.step(), power);
        const FieldPoly common = poly_gcd(g, h);
        const FieldPoly rest = poly_divmod(h, common).quotient;
        const std::size_t rest_count = static_cast<std::size_t>(rest.degree()) / d;
        if (rest_count % r != 0) {
            FqElement out(k, sylvester_resultant(rest, poly_mod(g, rest)));
            const FqElement expected = fq_pow(fq_inverse(ctx.zeta()), rest_count);
            if (out.is_zero() || !(chi_r(out, r) == expected)) {
                throw OrderMismatch("character of the block resultant is not zeta^-r'");
            }
            return {std::move(out), rest, rest_count, power};
        }
        h = common;
    }
    throw ZeroResolvent("no power of x below the block degree has a nonzero resolvent");
}

FqElement bims(const FieldPoly& f, const FqElement& zeta, std::uint64_t r, const FieldPtr& target) {
    const FieldPtr& fp = f.ring();
    if (!fp->is_prime_field()) throw PreconditionViolated("witness must be over the prime field");
    if (!(*target->prime_field() == *fp)) throw ContextMismatch("target has a different characteristic");
    if (!(*zeta.field == *fp)) throw ContextMismatch("zeta must lie in the prime field");
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const std::uint64_t p = fp->characteristic();
    const std::size_t n = target->absolute_degree();

    auto witness = check_property1(f, r);
    if (!witness) throw PropertyNotSatisfied(format_poly(f) + " for r = " + std::to_string(r));

    auto verified = [&](FqElement out) {
        if (out.is_zero() || !is_nonresidue(out, r)) throw OrderMismatch("output is not a nonresidue");
        return out;
    };

    if (r == 2 && p % 4 == 3) {
        if (n % 2 == 1) return verified(FqElement(target, target->from_int(-1)));
        throw PreconditionViolated("r = 2 with p = 3 mod 4 and even extension degree");
    }
    if ((p - 1) % r != 0) throw RDoesNotDivide(std::to_string(r) + " does not divide p - 1");
    check_zeta(*fp, zeta.value, r);
    require_resolvent_field(*fp, r);

    if (n % r == 0) {
        const Field::Element theta =
            target->level() == 1 ? target->generator() : flatten(target, fp).primitive.value;
        const Natural v = pow(Natural(p), n / r);
        const Field::Element z = target->embed(*fp, zeta.value);
        const Field::Element acc = target_resolvent(*target, theta, z, r, v, n);
        FqElement g(target, acc);
        if (!(chi_r(g, r) == FqElement(target, target->inverse(z)))) {
            throw OrderMismatch("target resolvent has the wrong character");
        }
        return verified(g);
    }

    const ResolventContext ctx(fp, r, zeta, *witness);
    const BlockNonresidue block = nonresidue_from_block(ctx);
    return verified(FqElement(target, target->embed(*fp, block.value.value)));
}

FqElement lift_nonresidue(const FqElement& a, const FqElement& zeta, std::uint64_t r, const FieldPtr& target) {
    const FieldPtr& k = a.field;
    if (!is_nonresidue(a, r)) throw PreconditionViolated(a.to_string() + " is not a nonresidue");
    auto verified = [&](FqElement out) {
        if (!is_nonresidue(out, r)) throw OrderMismatch("lifted element is not a nonresidue");
        return out;
    };
    if (*target == *k) return verified(FqElement(target, a.value));
    if (target->is_prime_field() || !(*target->base() == *k)) {
        throw ContextMismatch("target must be a single extension of the field of a");
    }
    const std::size_t l = target->degree();
    if (l % r != 0) return verified(FqElement(target, target->embed(*k, a.value)));

    if (!(*zeta.field == *k)) throw ContextMismatch("zeta must lie in the field of a");
    require_resolvent_field(*k, r);
    check_zeta(*k, zeta.value, r);
    const Natural step = pow(k->order(), l / r);
    const Field::Element z = target->embed(*k, zeta.value);
    const FqElement out(target, target_resolvent(*target, target->generator(), z, r, step, l));
    if (!(chi_r(out, r) == FqElement(target, target->inverse(z)))) {
        throw OrderMismatch("lifted resolvent has the wrong character");
    }
    return verified(out);
}

}  // namespace stickel
