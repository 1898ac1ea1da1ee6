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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "stickel/resolvent.hpp"
#include "support.hpp"

using namespace stickel;
using support::el;
using support::poly;

namespace {

using oracle::IntPoly;
using oracle::i64;

IntPoly powmod(IntPoly a, const Natural& e, const IntPoly& m, i64 p) {
    const oracle::ExtField k{p, m};
    IntPoly r{1};
    a = oracle::rem(a, m, p);
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = k.mulm(r, r);
        if (e.bit(i)) r = k.mulm(r, a);
    }
    return r;
}

// sum_i zeta^i y^(q^(k i)) mod f for y = x^power, with plain integer arithmetic.
IntPoly oracle_lagrange(const IntPoly& f, i64 zeta, std::uint64_t r, std::size_t k, i64 p, std::size_t power = 1) {
    const Natural step = pow(Natural(static_cast<std::uint64_t>(p)), k);
    IntPoly y(power + 1, 0);
    y[power] = 1;
    IntPoly term = oracle::rem(y, f, p);
    IntPoly acc;
    i64 zi = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        if (i > 0) {
            term = powmod(term, step, f, p);
            zi = oracle::md(zi * zeta, p);
        }
        acc = oracle::add(acc, oracle::mul(IntPoly{zi}, term, p), p);
    }
    if (!acc.empty()) oracle::trim(acc);
    return acc;
}

bool oracle_irreducible(const IntPoly& f, i64 p, const std::map<int, std::vector<IntPoly>>& irr) {
    return oracle::factor(f, p, irr).size() == 1;
}

IntPoly random_irreducible(int d, i64 p, std::mt19937_64& rng, const std::map<int, std::vector<IntPoly>>& irr) {
    for (;;) {
        IntPoly f(d + 1, 0);
        for (int i = 0; i < d; ++i) f[i] = static_cast<i64>(rng() % p);
        f[d] = 1;
        if (oracle_irreducible(f, p, irr)) return f;
    }
}

// Primitive r-th root of unity mod p, by search.
i64 oracle_zeta(i64 p, std::uint64_t r) {
    for (i64 g = 2; g < p; ++g) {
        const i64 z = oracle::pw(g, static_cast<std::uint64_t>((p - 1)) / r, p);
        if (z != 1) return z;
    }
    return 0;
}

// a^((p^n - 1)/r) in F_p[t]/(m) for a given as coordinates.
IntPoly oracle_chi(const IntPoly& a, const IntPoly& m, i64 p, std::uint64_t r) {
    const Natural q = pow(Natural(static_cast<std::uint64_t>(p)), static_cast<std::size_t>(oracle::deg(m)));
    IntPoly out = powmod(a, (q - Natural(1)) / Natural(r), m, p);
    oracle::trim(out);
    return out;
}

IntPoly coords(const Field::Element& a) {
    IntPoly out(a.begin(), a.end());
    oracle::trim(out);
    return out;
}

}  // namespace

TEST_CASE("resolvent over F_5 for x^2 + 2") {
    auto f5 = Field::prime(5);
    const auto f = poly(f5, {2, 0, 1});
    auto ctx = ResolventContext::from_polynomial(f5, 2, el(f5, 4), f);
    CHECK(ctx.step() == Natural(5));
    const auto l = lagrange_resolvent(ctx, f);
    CHECK(l == el(l.field, "2*x"));
    CHECK(fq_pow(l, Natural(12)) == el(l.field, 4));
    const auto a = nonresidue_from_irreducible(ctx, f);
    CHECK(support::val(a.value) == 3);
    CHECK(nonresidue_from_property1(ctx) == a);
}

TEST_CASE("resolvent context preconditions") {
    auto f5 = Field::prime(5);
    auto f7 = Field::prime(7);
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f7, 2, el(f7, 6), poly(f7, {1, 0, 1})), PreconditionViolated);
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f5, 2, el(f5, 1), poly(f5, {2, 0, 1})), BadZeta);
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f5, 2, el(f5, 2), poly(f5, {2, 0, 1})), BadZeta);
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f5, 4, el(f5, 2), poly(f5, {2, 0, 1})), NotPrime);
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f5, 2, el(f5, 4), poly(f5, {2, 0, 1}) * poly(f5, {3, 0, 1})),
                    PropertyNotSatisfied);
    PropertyWitness bad{2, poly(f5, {2, 0, 1}) * poly(f5, {3, 0, 1}), 2, 2, 1};
    CHECK_THROWS_AS(ResolventContext(f5, 2, el(f5, 4), bad), PropertyNotSatisfied);
    auto f25 = Field::extend(f5, poly(f5, {2, 0, 1}));
    CHECK_THROWS_AS(ResolventContext::from_polynomial(f5, 2, el(f25, 4), poly(f5, {2, 0, 1})), ContextMismatch);
    auto ctx = ResolventContext::from_polynomial(f5, 2, el(f5, 4), poly(f5, {2, 0, 1}));
    CHECK_THROWS_AS(lagrange_resolvent(ctx, poly(f5, {1, 1})), PreconditionViolated);
    CHECK_THROWS_AS(lagrange_resolvent(ctx, poly(f5, {-1, 0, 1})), NotIrreducible);
}

TEST_CASE("a vanishing resolvent is reported, and x^2 recovers") {
    auto f7 = Field::prime(7);
    const IntPoly f{5, 6, 5, 1};
    const auto irr = oracle::irreducibles_up_to(7, 1);
    REQUIRE(oracle_irreducible(f, 7, irr));
    REQUIRE(oracle_lagrange(f, 2, 3, 1, 7).empty());
    auto ctx = ResolventContext::from_polynomial(f7, 3, el(f7, 2), poly(f7, f));
    CHECK_THROWS_AS(lagrange_resolvent(ctx, poly(f7, f)), ZeroResolvent);
    CHECK_THROWS_AS(nonresidue_from_irreducible(ctx, poly(f7, f)), ZeroResolvent);
    CHECK_THROWS_AS(nonresidue_from_property1(ctx), ZeroResolvent);
    const auto l2 = lagrange_resolvent(ctx, poly(f7, f), 2);
    CHECK(!l2.is_zero());
    const auto block = nonresidue_from_block(ctx);
    CHECK(block.power == 2);
    CHECK(block.count == 1);
    const IntPoly g = oracle_lagrange(f, 2, 3, 1, 7, 2);
    CHECK(static_cast<i64>(support::val(block.value.value)) == oracle::resultant_by_roots(f, g, 7, irr));
    CHECK(oracle::pw(oracle::resultant_by_roots(f, g, 7, irr), 2, 7) == oracle::inv(2, 7));
}

TEST_CASE("resolvent resultant matches the root-product oracle and has character zeta^-1") {
    std::mt19937_64 rng(83);
    struct Case {
        i64 p;
        std::uint64_t r;
        int d;
    };
    int vanished = 0, total = 0;
    for (const auto& c : {Case{5, 2, 2}, Case{5, 2, 4}, Case{13, 2, 2}, Case{13, 2, 4}, Case{7, 3, 3},
                          Case{13, 3, 3}, Case{13, 3, 6}, Case{11, 5, 5}, Case{29, 7, 7}}) {
        auto k = Field::prime(static_cast<std::uint64_t>(c.p));
        const auto irr = oracle::irreducibles_up_to(c.p, c.d / 2);
        const i64 z0 = oracle_zeta(c.p, c.r);
        const std::size_t step = static_cast<std::size_t>(c.d) / c.r;
        for (int trial = 0; trial < 6; ++trial) {
            const IntPoly fi = random_irreducible(c.d, c.p, rng, irr);
            for (std::uint64_t j = 1; j < c.r; ++j) {
                const i64 z = oracle::pw(z0, j, c.p);
                auto ctx = ResolventContext::from_polynomial(k, c.r, el(k, z), poly(k, fi));
                ++total;
                std::size_t power = 1;
                IntPoly g = oracle_lagrange(fi, z, c.r, step, c.p);
                if (g.empty()) {
                    ++vanished;
                    REQUIRE_THROWS_AS(nonresidue_from_irreducible(ctx, poly(k, fi)), ZeroResolvent);
                    while (g.empty()) g = oracle_lagrange(fi, z, c.r, step, c.p, ++power);
                }
                const auto got = nonresidue_from_irreducible(ctx, poly(k, fi), power);
                const i64 expected = oracle::resultant_by_roots(fi, g, c.p, irr);
                REQUIRE(static_cast<i64>(support::val(got.value)) == expected);
                REQUIRE(oracle::pw(expected, static_cast<std::uint64_t>(c.p - 1) / c.r, c.p) ==
                        oracle::inv(z, c.p));
                REQUIRE(nonresidue_from_block(ctx).power == power);
            }
        }
    }
    MESSAGE(vanished << " of " << total << " resolvents of x vanished");
}

TEST_CASE("block resultant has character zeta^-r'") {
    std::mt19937_64 rng(89);
    struct Case {
        i64 p;
        std::uint64_t r;
        int d;
    };
    for (const auto& c : {Case{5, 2, 2}, Case{13, 2, 2}, Case{7, 3, 3}, Case{13, 3, 3}}) {
        auto k = Field::prime(static_cast<std::uint64_t>(c.p));
        const auto irr = oracle::irreducibles_up_to(c.p, c.d);
        const auto& list = irr.at(c.d);
        const i64 z = oracle_zeta(c.p, c.r);
        const std::size_t step = static_cast<std::size_t>(c.d) / c.r;
        for (int trial = 0; trial < 30; ++trial) {
            // r' distinct irreducibles of degree d with r not dividing r'.
            std::size_t count = 1 + rng() % 5;
            if (count % c.r == 0) ++count;
            std::vector<std::size_t> picks;
            while (picks.size() < count) {
                const std::size_t i = rng() % list.size();
                if (std::find(picks.begin(), picks.end(), i) == picks.end()) picks.push_back(i);
            }
            IntPoly h{1};
            for (auto i : picks) h = oracle::mul(h, list[i], c.p);
            // A linear factor alongside does not change the witness block.
            IntPoly f = oracle::mul(h, IntPoly{static_cast<i64>(rng() % c.p), 1}, c.p);
            auto w = check_property1(poly(k, f), c.r);
            REQUIRE(w);
            REQUIRE(w->d == static_cast<std::size_t>(c.d));
            REQUIRE(w->count == count);
            REQUIRE(w->h == poly(k, h));
            ResolventContext ctx(k, c.r, el(k, z), *w);

            bool any_vanishes = false;
            for (auto i : picks) any_vanishes |= oracle_lagrange(list[i], z, c.r, step, c.p).empty();
            const IntPoly g = oracle_lagrange(h, z, c.r, step, c.p);
            const i64 expected = oracle::resultant_by_roots(h, g, c.p, irr);
            if (any_vanishes) {
                REQUIRE(expected == 0);
                REQUIRE_THROWS_AS(nonresidue_from_property1(ctx), ZeroResolvent);
            } else {
                const auto got = nonresidue_from_property1(ctx);
                REQUIRE(static_cast<i64>(support::val(got.value)) == expected);
                const i64 chi = oracle::pw(expected, static_cast<std::uint64_t>(c.p - 1) / c.r, c.p);
                REQUIRE(chi == oracle::pw(oracle::inv(z, c.p), count, c.p));
            }

            const auto block = nonresidue_from_block(ctx);
            REQUIRE(block.count % c.r != 0);
            REQUIRE(oracle::rem(h, support::ints(block.h), c.p).empty());
            REQUIRE(static_cast<std::size_t>(block.h.degree()) == block.count * static_cast<std::size_t>(c.d));
            const IntPoly gb = oracle_lagrange(support::ints(block.h), z, c.r, step, c.p, block.power);
            const i64 value = oracle::resultant_by_roots(support::ints(block.h), gb, c.p, irr);
            REQUIRE(static_cast<i64>(support::val(block.value.value)) == value);
            REQUIRE(oracle::pw(value, static_cast<std::uint64_t>(c.p - 1) / c.r, c.p) ==
                    oracle::pw(oracle::inv(z, c.p), block.count, c.p));
            if (!any_vanishes) REQUIRE(block.power == 1);
        }
    }
}

TEST_CASE("resolvent identities over q in {5, 9, 13, 25, 49}, r in {2, 3}, rk <= 6") {
    std::mt19937_64 rng(103);
    auto f3 = Field::prime(3);
    auto f5 = Field::prime(5);
    auto f7 = Field::prime(7);
    const std::vector<FieldPtr> bases{f5, Field::extend(f3, poly(f3, {1, 0, 1})), Field::prime(13),
                                      Field::extend(f5, poly(f5, {2, 0, 1})),
                                      Field::extend(f7, poly(f7, {1, 0, 1}))};
    int vanished = 0;
    for (const auto& k : bases) {
        for (std::uint64_t r : {2, 3}) {
            const Natural q1 = k->order() - Natural(1);
            if (!(q1 % Natural(r == 2 ? 4 : r)).is_zero()) continue;
            FqElement zeta;
            for (std::uint64_t i = 2;; ++i) {
                zeta = fq_pow(FqElement(k, k->from_index(Natural(i))), q1 / Natural(r));
                if (!zeta.is_one()) break;
            }
            for (std::size_t kk = 1; r * kk <= 6; ++kk) {
                const std::size_t d = r * kk;
                int done = 0;
                while (done < 20) {
                    auto f = support::random_poly(k, d, rng, true);
                    if (!is_irreducible(f)) continue;
                    ++done;
                    auto ctx = ResolventContext::from_polynomial(k, r, zeta, f);
                    CAPTURE(format_poly(f));
                    std::size_t power = 1;
                    if (lagrange_sum(f, zeta.value, r, ctx.step()).is_zero()) {
                        ++vanished;
                        REQUIRE_THROWS_AS(lagrange_resolvent(ctx, f), ZeroResolvent);
                        power = nonresidue_from_block(ctx).power;
                    }
                    const auto l = lagrange_resolvent(ctx, f, power);
                    const auto z = FqElement(l.field, l.field->embed(*k, zeta.value));
                    REQUIRE(fq_pow(l, ctx.step()) * z == l);
                    REQUIRE(fq_pow(l, (l.field->order() - Natural(1)) / Natural(r)) == fq_inverse(z));
                    const auto a = nonresidue_from_irreducible(ctx, f, power);
                    REQUIRE(FqElement(l.field, l.field->embed(*k, a.value)) == norm(l, d));
                    REQUIRE(chi_r(a, r) == fq_inverse(zeta));
                }
            }
        }
    }
    MESSAGE(vanished << " sampled resolvents of x vanished");
}

TEST_CASE("resolvent identity L^(q^k) zeta = L in an extension base field") {
    auto f5 = Field::prime(5);
    auto f25 = Field::extend(f5, poly(f5, {2, 0, 1}));
    // zeta of order 3 lives in F_25 since 3 | 24.
    FqElement zeta;
    for (std::uint64_t i = 2;; ++i) {
        zeta = fq_pow(FqElement(f25, f25->from_index(Natural(i))), Natural(8));
        if (!zeta.is_one()) break;
    }
    std::mt19937_64 rng(97);
    int done = 0;
    while (done < 5) {
        auto f = support::random_poly(f25, 3, rng, true);
        if (!is_irreducible(f)) continue;
        ++done;
        auto ctx = ResolventContext::from_polynomial(f25, 3, zeta, f);
        const auto l = lagrange_resolvent(ctx, f);
        CHECK(fq_pow(l, ctx.step()) * FqElement(l.field, l.field->embed(*f25, zeta.value)) == l);
        const auto a = nonresidue_from_irreducible(ctx, f);
        CHECK(is_nonresidue(a, 3));
    }
}

TEST_CASE("bims over both branches, checked with an independent character") {
    struct Case {
        i64 p;
        std::uint64_t r;
    };
    std::mt19937_64 rng(101);
    for (const auto& c : {Case{5, 2}, Case{13, 2}, Case{7, 3}, Case{13, 3}, Case{11, 5}}) {
        auto k = Field::prime(static_cast<std::uint64_t>(c.p));
        const auto irr = oracle::irreducibles_up_to(c.p, 3);
        const auto zeta = el(k, oracle_zeta(c.p, c.r));
        const auto f = poly(k, random_irreducible(static_cast<int>(c.r), c.p, rng, irr));
        for (int n = 1; n <= 6; ++n) {
            if (std::pow(static_cast<double>(c.p), n) > 3e6) break;
            const IntPoly m = n == 1 ? IntPoly{0, 1} : random_irreducible(n, c.p, rng, irr);
            auto target = n == 1 ? k : Field::extend(k, poly(k, m));
            const auto a = bims(f, zeta, c.r, target);
            REQUIRE(*a.field == *target);
            CAPTURE(c.p);
            CAPTURE(n);
            REQUIRE(!a.is_zero());
            REQUIRE(oracle_chi(coords(a.value), m, c.p, c.r) != IntPoly{1});
        }
    }
}

TEST_CASE("bims on a two-level target") {
    auto f5 = Field::prime(5);
    auto f25 = Field::extend(f5, poly(f5, {2, 0, 1}));
    auto f625 = Field::extend(f25, first_irreducible(f25, 2));
    const auto a = bims(poly(f5, {2, 0, 1}), el(f5, 4), 2, f625);
    CHECK(is_nonresidue(a, 2));
    CHECK(*a.field == *f625);
}

TEST_CASE("bims edge cases") {
    auto f7 = Field::prime(7);
    auto f = poly(f7, {1, 0, 1});
    for (std::size_t n : {1, 3, 5}) {
        auto target = n == 1 ? f7 : Field::extend(f7, first_irreducible(f7, n));
        CHECK(bims(f, el(f7, 6), 2, target) == el(target, -1));
    }
    CHECK_THROWS_AS(bims(f, el(f7, 6), 2, Field::extend(f7, first_irreducible(f7, 2))), PreconditionViolated);
    auto f5 = Field::prime(5);
    CHECK_THROWS_AS(bims(first_irreducible(f5, 3), el(f5, 1), 3, f5), RDoesNotDivide);
    CHECK_THROWS_AS(bims(poly(f5, {2, 0, 1}) * poly(f5, {3, 0, 1}), el(f5, 4), 2, f5), PropertyNotSatisfied);
    CHECK_THROWS_AS(bims(poly(f5, {2, 0, 1}), el(f7, 6), 2, f5), ContextMismatch);
}

TEST_CASE("lift_nonresidue") {
    auto f13 = Field::prime(13);
    const auto zeta = el(f13, 12);
    const auto a = el(f13, 2);
    REQUIRE(is_nonresidue(a, 2));
    for (std::size_t l : {1, 2, 3, 4}) {
        auto target = l == 1 ? f13 : Field::extend(f13, first_irreducible(f13, l));
        const auto b = lift_nonresidue(a, zeta, 2, target);
        CHECK(*b.field == *target);
        CHECK(is_nonresidue(b, 2));
        if (l % 2 == 1) CHECK(b == FqElement(target, target->embed(*f13, a.value)));
    }
    CHECK_THROWS_AS(lift_nonresidue(el(f13, 4), zeta, 2, f13), PreconditionViolated);
}
