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


// Acceptance run: one PASS/FAIL line per criterion. Every identity is exact;
// the only tolerances are the runtime limits, pinned below.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "stickel/cli.hpp"
#include "stickel/factor.hpp"
#include "stickel/resolvent.hpp"
#include "stickel/rth_root.hpp"
#include "stickel/teichmuller.hpp"
#include "stickel/trinomial.hpp"
#include "support.hpp"

using namespace stickel;
using oracle::i64;
using oracle::IntPoly;
using support::poly;

namespace {

constexpr double kLimitResolventSeconds = 60;
constexpr double kLimitTeichmullerSeconds = 120;
constexpr double kLimitRootSeconds = 300;
constexpr double kLimitTableSeconds = 60;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << std::setw(2) << id << "  " << name << "  [" << detail << "]"
              << std::endl;
    if (!pass) ++failures;
}

void note(int id, const std::string& text) { std::cout << "     " << std::setw(2) << id << "  note: " << text << std::endl; }

std::string secs(double s) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << s << " s";
    return ss.str();
}

// F_q as F_p, or F_p[y]/(first irreducible of degree 2).
FieldPtr field_q(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (p == q) return Field::prime(p);
        if (p * p == q) {
            auto fp = Field::prime(p);
            return Field::extend(fp, first_irreducible(fp, 2));
        }
    }
    throw PreconditionViolated("unsupported q");
}

// Distinct random monic irreducibles of degree d, or all of them when fewer
// than `want` exist.
std::vector<FieldPoly> sample_irreducibles(const FieldPtr& k, std::size_t d, std::size_t want, std::mt19937_64& rng) {
    const Natural total = pow(k->order(), d);
    std::vector<FieldPoly> out;
    if (total <= Natural(4000)) {
        for (Natural idx(0); idx < total; idx += Natural(1)) {
            auto f = monic_from_index(k, d, idx);
            if (is_irreducible(f)) out.push_back(std::move(f));
        }
        std::shuffle(out.begin(), out.end(), rng);
        if (out.size() > want) out.erase(out.begin() + static_cast<std::ptrdiff_t>(want), out.end());
        return out;
    }
    std::set<std::string> seen;
    while (out.size() < want) {
        auto f = support::random_poly(k, d, rng, true);
        if (is_irreducible(f) && seen.insert(format_poly(f)).second) out.push_back(std::move(f));
    }
    return out;
}

// sum_i x^(q^(k i)) zeta^i evaluated in K = F_q[x]/(f).
FqElement tower_resolvent(const FieldPtr& big, const FqElement& zeta, std::uint64_t r, std::size_t k) {
    const auto& base = *big->base();
    const FqElement x(big, big->generator());
    const FqElement z(big, big->embed(base, zeta.value));
    const Natural step = pow(base.order(), k);
    FqElement acc(big, big->zero());
    FqElement term = x;
    FqElement zi(big, big->one());
    for (std::uint64_t i = 0; i < r; ++i) {
        if (i > 0) term = fq_pow(term, step);
        acc = acc + term * zi;
        zi = zi * z;
    }
    return acc;
}

FqElement zeta_power(const FqElement& zeta, std::uint64_t r, std::int64_t e) {
    const std::int64_t m = ((e % static_cast<std::int64_t>(r)) + static_cast<std::int64_t>(r)) % static_cast<std::int64_t>(r);
    return fq_pow(zeta, Natural(static_cast<std::uint64_t>(m)));
}

// 1
void criterion_resolvent_identity() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    std::size_t total = 0, pass = 0, vanished = 0, fallback_ok = 0, triples = 0, short_samples = 0;
    for (std::uint64_t q : {5, 9, 13, 25, 49}) {
        auto kq = field_q(q);
        for (std::uint64_t r : {2, 3}) {
            if ((q - 1) % (r == 2 ? 4 : r) != 0) continue;
            const FqElement zeta = find_zeta_bruteforce(kq, r);
            for (std::size_t k = 1; r * k <= 6; ++k) {
                const std::size_t d = r * k;
                const auto fs = sample_irreducibles(kq, d, 20, rng);
                ++triples;
                if (fs.size() < 20) ++short_samples;
                const Natural e = (pow(kq->order(), d) - Natural(1)) / Natural(r);
                for (const auto& f : fs) {
                    ++total;
                    auto big = Field::extend_trusted(kq, f);
                    const FqElement l = tower_resolvent(big, zeta, r, k);
                    const FqElement expect(big, big->embed(*kq, fq_inverse(zeta).value));
                    if (l.is_zero()) ++vanished;
                    if (fq_pow(l, e) == expect) ++pass;
                    const ResolventContext ctx = ResolventContext::from_polynomial(kq, r, zeta, f);
                    const auto b = nonresidue_from_block(ctx);
                    if (chi_r(b.value, r) == zeta_power(zeta, r, -static_cast<std::int64_t>(b.count))) ++fallback_ok;
                }
            }
        }
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << pass << "/" << total << " identities over " << triples << " (q,r,k) triples, L = 0 for " << vanished << ", "
      << secs(s) << " (limit " << kLimitResolventSeconds << " s)";
    report(1, "resolvent power identity L^((q^d-1)/r) = zeta^-1", pass == total && s < kLimitResolventSeconds, d.str());
    if (short_samples > 0) note(1, std::to_string(short_samples) + " triple(s) have fewer than 20 monic irreducibles; all were used");
    note(1, "resolvent from the first seed x^j with a nonzero value gives a verified nonresidue for " +
                std::to_string(fallback_ok) + "/" + std::to_string(total));
}

// 2
void criterion_block_character() {
    std::mt19937_64 rng(1002);
    struct Case {
        std::uint64_t q, r;
        std::size_t d;
        std::vector<std::size_t> counts;
    };
    const std::vector<Case> cases = {{7, 3, 3, {1, 2, 4}},  {13, 3, 3, {1, 2, 4}}, {25, 3, 3, {1, 2, 4}},
                                     {5, 2, 2, {1, 3}},     {13, 2, 2, {1, 3}},    {9, 2, 2, {1, 3}},
                                     {5, 2, 4, {1, 3}}};
    std::size_t total = 0, pass = 0, zero = 0, fallback_ok = 0;
    std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> by_r;  // r -> (pass, total)
    for (const auto& c : cases) {
        auto kq = field_q(c.q);
        const FqElement zeta = find_zeta_bruteforce(kq, c.r);
        auto pool = sample_irreducibles(kq, c.d, 60, rng);
        for (std::size_t count : c.counts) {
            for (int rep = 0; rep < 20; ++rep) {
                std::shuffle(pool.begin(), pool.end(), rng);
                FieldPoly f = FieldPoly::one(kq);
                for (std::size_t i = 0; i < count; ++i) f = f * pool[i];
                // Oracle: R(f, g) = prod_i N(g(alpha_i)) over the factors.
                FqElement res = FqElement(kq, kq->one());
                for (std::size_t i = 0; i < count; ++i) {
                    auto big = Field::extend_trusted(kq, pool[i]);
                    const FqElement n = norm(tower_resolvent(big, zeta, c.r, c.d / c.r), c.d);
                    res = res * FqElement(kq, big->project(*kq, n.value));
                }
                const FieldPoly g = lagrange_sum(f, zeta.value, c.r, pow(kq->order(), c.d / c.r));
                const FqElement lib(kq, g.is_zero() ? kq->zero() : sylvester_resultant(f, g));
                ++total;
                ++by_r[c.r].second;
                if (lib.is_zero()) ++zero;
                if (lib == res && !lib.is_zero() &&
                    chi_r(lib, c.r) == zeta_power(zeta, c.r, -static_cast<std::int64_t>(count))) {
                    ++pass;
                    ++by_r[c.r].first;
                }
                const ResolventContext ctx = ResolventContext::from_polynomial(kq, c.r, zeta, f);
                const auto b = nonresidue_from_block(ctx);
                if (chi_r(b.value, c.r) == zeta_power(zeta, c.r, -static_cast<std::int64_t>(b.count))) ++fallback_ok;
            }
        }
    }
    std::ostringstream d;
    d << pass << "/" << total << " blocks (";
    for (const auto& [r, pt] : by_r) d << "r=" << r << ": " << pt.first << "/" << pt.second << (r == by_r.rbegin()->first ? "" : ", ");
    d << "), resultant 0 for " << zero;
    report(2, "block character chi_r(R(f, g mod f)) = zeta^-r'", pass == total, d.str());
    note(2, "block fallback (sub-block split by the resolvent gcd) verified for " + std::to_string(fallback_ok) + "/" +
                std::to_string(total));
}

// r-th powers of the target field by exhaustive enumeration with the oracle.
bool oracle_nonresidue(const FieldPtr& target, const FqElement& a, std::uint64_t r) {
    const i64 p = static_cast<i64>(target->characteristic());
    const IntPoly m = target->is_prime_field() ? IntPoly{0, 1} : support::ints(target->defining_poly());
    const oracle::ExtField ext{p, m};
    const std::size_t n = target->absolute_degree();
    std::set<IntPoly> powers;
    const std::uint64_t size = target->order().to_u64();
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        IntPoly v;
        for (std::uint64_t rest = idx, j = 0; j < n; ++j, rest /= static_cast<std::uint64_t>(p)) {
            v.push_back(static_cast<i64>(rest % static_cast<std::uint64_t>(p)));
        }
        oracle::trim(v);
        powers.insert(ext.powm(v, r));
    }
    IntPoly got(a.value.begin(), a.value.end());
    oracle::trim(got);
    return !got.empty() && !powers.count(got);
}

// 3
void criterion_bims() {
    std::mt19937_64 rng(1003);
    struct Target {
        std::uint64_t p, r, n;
    };
    const std::vector<Target> divides = {{5, 2, 2}, {5, 2, 4}, {13, 2, 2}, {17, 2, 2}, {7, 3, 3}};
    const std::vector<Target> coprime = {{7, 3, 1},  {7, 3, 2},  {13, 3, 1}, {13, 3, 2}, {19, 3, 2},
                                         {11, 5, 1}, {11, 5, 2}, {31, 5, 1}, {5, 2, 3},  {13, 2, 1},
                                         {7, 2, 3},  {3, 2, 5},  {23, 2, 1}, {31, 3, 1}, {19, 2, 1}};
    std::size_t pass[2] = {0, 0}, total[2] = {0, 0};
    for (int branch = 0; branch < 2; ++branch) {
        const auto& list = branch == 0 ? divides : coprime;
        for (int i = 0; i < 50; ++i) {
            const auto& t = list[rng() % list.size()];
            auto fp = Field::prime(t.p);
            auto target = t.n == 1 ? fp : Field::extend(fp, first_irreducible(fp, t.n));
            FieldPoly f = FieldPoly::x(fp);
            for (;;) {
                f = support::random_poly(fp, 2 + rng() % 5, rng, true);
                if (is_squarefree(f) && check_property1(f, t.r)) break;
            }
            const FqElement zeta = t.r == 2 ? FqElement::from_int(fp, -1) : find_zeta_bruteforce(fp, t.r);
            ++total[branch];
            try {
                const FqElement out = bims(f, zeta, t.r, target);
                if (oracle_nonresidue(target, out, t.r)) ++pass[branch];
            } catch (const Error& e) {
                note(3, std::string("construction raised: ") + e.what());
            }
        }
    }
    std::ostringstream d;
    d << "r | n: " << pass[0] << "/" << total[0] << ", r does not divide n: " << pass[1] << "/" << total[1];
    report(3, "constructed nonresidue of the target field (exhaustive check)", pass[0] == total[0] && pass[1] == total[1], d.str());
}

// 4
void criterion_stickelberger() {
    std::mt19937_64 rng(1004);
    std::size_t total = 0, agree = 0;
    for (i64 p : {5, 13, 17, 29}) {
        auto fp = Field::prime(static_cast<std::uint64_t>(p));
        const auto irr = oracle::irreducibles_up_to(p, 3);
        for (int i = 0; i < 1000;) {
            const FieldPoly f = support::random_poly(fp, 1 + rng() % 6, rng, true);
            const auto parts = oracle::factor(support::ints(f), p, irr);
            if (std::set<IntPoly>(parts.begin(), parts.end()).size() != parts.size()) continue;
            ++i;
            ++total;
            const std::uint64_t disc = discriminant(f)[0];
            const bool square = oracle::pw(static_cast<i64>(disc), static_cast<std::uint64_t>((p - 1) / 2), p) == 1;
            const bool even = (f.degree() - static_cast<int>(parts.size())) % 2 == 0;
            if (disc != 0 && square == even) ++agree;
        }
    }
    report(4, "discriminant character matches (-1)^(n-s)", agree == total,
           std::to_string(agree) + "/" + std::to_string(total));
}

// 5
void criterion_swan() {
    std::size_t total = 0, agree = 0;
    for (std::uint64_t p : {5, 7, 11, 13}) {
        auto fp = Field::prime(p);
        const Modulus mod{Natural(p)};
        for (std::uint64_t n = 2; n <= 10; ++n) {
            for (std::uint64_t k = 1; k < n; ++k) {
                for (std::uint64_t a = 1; a < p; ++a) {
                    for (std::uint64_t b = 1; b < p; ++b) {
                        std::vector<Field::Element> c(n + 1, fp->zero());
                        c[0] = fp->from_u64(b);
                        c[k] = fp->from_u64(a);
                        c[n] = fp->one();
                        const FieldPoly f(fp, std::move(c));
                        const auto swan = swan_trinomial_discriminant(Natural(n), Natural(k), ModElement(Natural(a), mod),
                                                                      ModElement(Natural(b), mod));
                        ++total;
                        if (swan.value().to_u64() == discriminant(f)[0]) ++agree;
                    }
                }
            }
        }
    }
    report(5, "closed-form trinomial discriminant equals the Sylvester path", agree == total,
           std::to_string(agree) + "/" + std::to_string(total));
}

// 6
void criterion_resultant() {
    std::mt19937_64 rng(1006);
    const std::vector<i64> primes = {2, 3, 5, 7, 11, 13};
    std::map<i64, std::map<int, std::vector<IntPoly>>> irr;
    for (auto p : primes) irr[p] = oracle::irreducibles_up_to(p, 4);
    std::size_t agree = 0, mult = 0;
    for (int i = 0; i < 500; ++i) {
        const i64 p = primes[rng() % primes.size()];
        auto fp = Field::prime(static_cast<std::uint64_t>(p));
        const FieldPoly f = support::random_poly(fp, 1 + rng() % 4, rng, true);
        const FieldPoly g = support::random_poly(fp, rng() % 6, rng, false);
        const i64 lib = static_cast<i64>(sylvester_resultant(f, g)[0]);
        if (lib == oracle::resultant_by_roots(support::ints(f), support::ints(g), p, irr[p])) ++agree;
    }
    for (int i = 0; i < 500; ++i) {
        const i64 p = primes[rng() % primes.size()];
        auto fp = Field::prime(static_cast<std::uint64_t>(p));
        const FieldPoly f = support::random_poly(fp, 1 + rng() % 4, rng, true);
        const FieldPoly g = support::random_poly(fp, rng() % 4, rng, false);
        const FieldPoly h = support::random_poly(fp, rng() % 4, rng, false);
        const auto lhs = sylvester_resultant(f, g * h);
        const auto rhs = fp->mul(sylvester_resultant(f, g), sylvester_resultant(f, h));
        if (lhs == rhs) ++mult;
    }
    report(6, "Sylvester resultant equals the root product; multiplicative", agree == 500 && mult == 500,
           "oracle " + std::to_string(agree) + "/500, multiplicativity " + std::to_string(mult) + "/500");
}

// 7
void criterion_ddf() {
    std::size_t total = 0, agree = 0;
    for (i64 p : {2, 3, 5, 7}) {
        auto fp = Field::prime(static_cast<std::uint64_t>(p));
        const auto irr = oracle::irreducibles_up_to(p, 3);
        for (int d = 1; d <= 6; ++d) {
            for (const auto& fi : oracle::all_monic(p, d)) {
                const auto parts = oracle::factor(fi, p, irr);
                if (std::set<IntPoly>(parts.begin(), parts.end()).size() != parts.size()) continue;
                ++total;
                std::map<int, IntPoly> expect;
                for (const auto& g : parts) {
                    auto& acc = expect[oracle::deg(g)];
                    acc = acc.empty() ? g : oracle::mul(acc, g, p);
                }
                std::map<int, IntPoly> got;
                for (const auto& part : ddf(poly(fp, fi))) got[static_cast<int>(part.d)] = support::ints(part.h);
                if (got == expect) ++agree;
            }
        }
    }
    report(7, "distinct-degree factorization equals trial division", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " squarefree monic, deg <= 6");
}

// Components F_p[y]/(m) of F_p[zeta] for the irreducible factors m of Phi_r.
std::vector<FieldPtr> cyclotomic_components(std::uint64_t p, std::uint64_t r) {
    const i64 pp = static_cast<i64>(p);
    const auto irr = oracle::irreducibles_up_to(pp, static_cast<int>(r - 1));
    auto fp = Field::prime(p);
    std::vector<FieldPtr> out;
    for (const auto& m : oracle::factor(IntPoly(r, 1), pp, irr)) {
        out.push_back(m.size() == 2 ? fp : Field::extend(fp, poly(fp, m)));
    }
    return out;
}

FqElement to_component(const CycRing::Element& a, const FieldPtr& comp) {
    std::vector<Field::Element> c(a.begin(), a.end());
    return FqElement(comp, comp->from_base_poly(FieldPoly(comp->prime_field(), std::move(c))));
}

// 8
void criterion_teichmuller() {
    const auto t0 = Clock::now();
    std::size_t pass = 0;
    std::string detail;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 5}, {2, 7}}) {
        bool ok = true;
        std::string why;
        auto fp = Field::prime(p);
        const FieldPoly f = first_irreducible(fp, r);
        try {
            const auto ctx = TeichmullerContext::build(f, r);
            const auto& ring = *ctx.ring;
            if (!(ctx.seed == FieldPoly::x(fp))) {
                ok = false;
                why = "needed seed " + format_poly(ctx.seed);
            }
            const Natural qe1 = pow(Natural(p), ctx.e) - Natural(1);
            const auto g = ring_resolvent(ctx.ring, f, pow(Natural(p), ctx.e * ctx.k_prime), ctx.seed);
            for (const auto& comp : cyclotomic_components(p, r)) {
                std::vector<Field::Element> fc, gc;
                for (const auto& v : f.coeffs()) fc.push_back(comp->embed(*fp, v));
                for (const auto& v : g.coeffs()) gc.push_back(to_component(v, comp).value);
                const FqElement res(comp, sylvester_resultant(FieldPoly(comp, fc), FieldPoly(comp, gc)));
                const FqElement y = to_component(ring.zeta(), comp);
                ok = ok && to_component(ctx.resultant, comp) == res &&
                     fq_pow(res, qe1 / Natural(r)) == fq_pow(fq_inverse(y), ctx.r_prime * ctx.ell);
            }
            const Natural rt1 = pow(Natural(r), ctx.t - 1);
            ok = ok && ring.pow(ctx.delta, rt1) == ring.zeta_pow(r - 1) &&
                 ring.pow(ctx.delta, rt1 * Natural(r)) == ring.one() && ring.pow(ctx.c, rt1) == ring.zeta() &&
                 ring.pow(ctx.c, rt1 * Natural(r)) == ring.one();
            const auto fs = fixed_subring(build_extension_ring(ctx, r));
            const IntPoly m = support::ints(fs.min_poly);
            ok = ok && fs.min_poly.degree() == static_cast<int>(r) && is_irreducible(fs.min_poly) &&
                 oracle::factor(m, static_cast<i64>(p), oracle::irreducibles_up_to(static_cast<i64>(p), 3)).size() == 1;
            if (ok) ++pass;
            detail += "(" + std::to_string(p) + "," + std::to_string(r) + "): " + (ok ? format_poly(fs.min_poly) : why) + "; ";
        } catch (const Error& e) {
            detail += "(" + std::to_string(p) + "," + std::to_string(r) + "): " + e.what() + "; ";
        }
    }
    // How often the literal seed x fails, over every irreducible of degree r.
    std::string census;
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 5}, {2, 7}}) {
        auto fp = Field::prime(p);
        std::size_t all = 0, other = 0, built = 0;
        const auto irr = oracle::irreducibles_up_to(static_cast<i64>(p), static_cast<int>(r));
        for (const auto& fi : irr.at(static_cast<int>(r))) {
            const FieldPoly f = poly(fp, fi);
            ++all;
            const auto ctx = TeichmullerContext::build(f, r);
            if (!(ctx.seed == FieldPoly::x(fp))) ++other;
            if (is_irreducible(fixed_subring(build_extension_ring(ctx, r)).min_poly)) ++built;
        }
        census += "(" + std::to_string(p) + "," + std::to_string(r) + "): x fails for " + std::to_string(other) + "/" +
                  std::to_string(all) + ", construction verified for " + std::to_string(built) + "/" +
                  std::to_string(all) + "; ";
    }
    const double s = seconds_since(t0);
    report(8, "cyclotomic-ring construction of degree-r irreducibles", pass == 3 && s < kLimitTeichmullerSeconds,
           detail + secs(s) + " (limit " + std::to_string(static_cast<int>(kLimitTeichmullerSeconds)) + " s)");
    note(8, "all irreducibles of degree r with the seed fallback: " + census.substr(0, census.size() - 2));
}

// 9
void criterion_tower() {
    std::string detail;
    bool ok = true;
    struct Case {
        std::uint64_t p, r, e;
        IntPoly f;
    };
    for (const auto& c : {Case{2, 3, 2, {1, 1, 0, 1}}, Case{5, 2, 3, {2, 0, 1}}}) {
        auto fp = Field::prime(c.p);
        const std::uint64_t m = static_cast<std::uint64_t>(std::pow(c.r, c.e) + 0.5);
        const FieldPoly g = build_rpower_field(poly(fp, c.f), c.r, m);
        const auto parts = oracle::factor(support::ints(g), static_cast<i64>(c.p),
                                          oracle::irreducibles_up_to(static_cast<i64>(c.p), static_cast<int>(m / 2)));
        const bool good = g.degree() == static_cast<int>(m) && parts.size() == 1 && is_irreducible(g);
        ok = ok && good;
        detail += "q=" + std::to_string(c.p) + " r^e=" + std::to_string(m) + ": " + format_poly(g) + "; ";
    }
    report(9, "irreducible of degree r^e by the tower construction", ok, detail.substr(0, detail.size() - 2));
}

// 10
void criterion_roots() {
    const auto t0 = Clock::now();
    std::size_t total = 0, pass = 0, fields = 0;
    for (std::uint64_t p = 2; p <= 2000; ++p) {
        if (!is_prime(p)) continue;
        auto fp = Field::prime(p);
        std::uint64_t q = p;
        for (std::size_t d = 1; q <= 2000; ++d, q *= p) {
            auto k = d == 1 ? fp : Field::extend(fp, first_irreducible(fp, d));
            for (std::uint64_t r : {2, 3, 5}) {
                if ((q - 1) % r != 0) continue;
                ++fields;
                FqElement eta;
                for (std::uint64_t i = 1;; ++i) {
                    eta = FqElement(k, k->from_index(Natural(i)));
                    if (is_nonresidue(eta, r)) break;
                }
                const RootContext ctx(k, r, eta);
                for (std::uint64_t i = 0; i < q; ++i) {
                    const FqElement x(k, k->from_index(Natural(i)));
                    const FqElement a = fq_pow(x, Natural(r));
                    ++total;
                    if (fq_pow(amm_rth_root(ctx, a), Natural(r)) == a) ++pass;
                }
            }
        }
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << pass << "/" << total << " r-th powers over " << fields << " (field, r) pairs, " << secs(s) << " (limit "
      << kLimitRootSeconds << " s)";
    report(10, "r-th root extraction inverts the r-power map", pass == total && s < kLimitRootSeconds, d.str());
}

// 11
void criterion_least_nonresidue() {
    const auto t0 = Clock::now();
    const auto rows = cli::least_nonresidue_table(2, 9999, 0);
    const double s = seconds_since(t0);
    std::size_t agree = 0, expected = 0;
    for (std::uint64_t p = 3; p < 10000; ++p) {
        if (is_prime(p)) ++expected;
    }
    for (const auto& row : rows) {
        std::vector<bool> square(row.p, false);
        for (std::uint64_t x = 1; x < row.p; ++x) square[x * x % row.p] = true;
        std::uint64_t n = 2;
        while (square[n]) ++n;
        if (n == row.n) ++agree;
    }
    std::ostringstream d;
    d << agree << "/" << rows.size() << " primes (expected " << expected << "), table in " << secs(s) << " (limit "
      << kLimitTableSeconds << " s)";
    report(11, "least quadratic nonresidue table", agree == rows.size() && rows.size() == expected &&
                                                       s < kLimitTableSeconds,
           d.str());
}

// 12
void criterion_trinomial_probe() {
    auto run = [](const std::string& jobs) {
        std::ostringstream out, err;
        const int code = cli::run({"trinomial-search", "--pmax", "500", "--jobs", jobs}, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = run("1");
    const auto b = run("4");
    const auto c = run("1");
    bool ok = a.first == 0 && a.second == b.second && a.second == c.second;
    std::istringstream in(a.second);
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0, hits = 0, verified = 0;
    std::vector<std::uint64_t> violated;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() < 13) cells.resize(13);
        const std::uint64_t p = std::stoull(cells[0]);
        if (cells[12] != "hit") {
            violated.push_back(p);
            continue;
        }
        ++hits;
        const std::uint64_t i = std::stoull(cells[8]), k = std::stoull(cells[9]);
        const std::uint64_t av = std::stoull(cells[10]), bv = std::stoull(cells[11]);
        auto fp = Field::prime(p);
        std::vector<Field::Element> co(2 * i + 1, fp->zero());
        co[0] = fp->from_u64(bv);
        co[k] = fp->add(co[k], fp->from_u64(av));
        co[2 * i] = fp->one();
        const std::uint64_t disc = discriminant(FieldPoly(fp, std::move(co)))[0];
        if (disc != 0 && powmod_u64(disc, (p - 1) / 2, p) == p - 1) ++verified;
    }
    std::size_t primes = 0;
    for (std::uint64_t p = 5; p <= 500; ++p) primes += is_prime(p) ? 1 : 0;
    ok = ok && rows == primes && verified == hits;
    std::ostringstream d;
    d << rows << " primes, " << hits << " with a hit (all re-verified), " << violated.size()
      << " without; output identical for --jobs 1, 4, 1";
    report(12, "trinomial family probe is deterministic", ok, d.str());
    for (auto p : violated) note(12, "CONJECTURE VIOLATED at p = " + std::to_string(p));
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria = {
        criterion_resolvent_identity, criterion_block_character, criterion_bims, criterion_stickelberger,
        criterion_swan, criterion_resultant, criterion_ddf, criterion_teichmuller,
        criterion_tower, criterion_roots, criterion_least_nonresidue, criterion_trinomial_probe};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), "raised", false, e.what());
        }
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
