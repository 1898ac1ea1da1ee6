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


#include "stickel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "stickel/factor.hpp"
#include "stickel/resolvent.hpp"
#include "stickel/rth_root.hpp"
#include "stickel/teichmuller.hpp"
#include "stickel/text.hpp"
#include "stickel/trinomial.hpp"

namespace stickel::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Status { ok = 0, property_not_satisfied = 1, invalid_input = 2 };

const char* status_name(Status s) {
    switch (s) {
        case Status::ok:
            return "ok";
        case Status::property_not_satisfied:
            return "property_not_satisfied";
        case Status::invalid_input:
            return "invalid_input";
    }
    return "?";
}

struct CommandResult {
    Status status = Status::ok;
    Json payload = Json::object();
    std::string text;
};

CommandResult unsatisfied(const std::string& why) {
    CommandResult res;
    res.status = Status::property_not_satisfied;
    res.payload["reason"] = why;
    res.text = why + "\n";
    return res;
}

unsigned worker_count(unsigned jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// fn(i) for i < count on up to `jobs` threads; results keep index order.
template <class T, class Fn>
std::vector<T> ordered_map(std::size_t count, unsigned jobs, Fn fn) {
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::min<std::size_t>(worker_count(jobs), std::max<std::size_t>(count, 1));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string fixed(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(6) << v;
    return ss.str();
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    const Natural n = Natural::parse(text);
    if (!n.fits_u64()) throw ParseError(std::string(what) + " out of range");
    return n.to_u64();
}

FieldPtr field_of_degree(std::uint64_t p, std::uint64_t n) {
    auto fp = Field::prime(p);
    if (n == 0) throw PreconditionViolated("field degree must be positive");
    if (n == 1) return fp;
    return Field::extend_trusted(fp, first_irreducible(fp, n));
}

// A descriptor file, or else a degree over F_p.
FieldPtr target_field(std::uint64_t p, const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) {
        auto k = read_descriptor_file(spec);
        if (k->characteristic() != p) {
            throw PreconditionViolated("descriptor '" + spec + "' has characteristic " +
                                       std::to_string(k->characteristic()));
        }
        return k;
    }
    if (spec.empty() || spec.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("--field '" + spec + "' is neither a descriptor file nor a degree");
    }
    return field_of_degree(p, parse_u64(spec, "--field"));
}

FieldPtr coefficient_field(std::uint64_t p, const std::optional<std::string>& q_poly) {
    auto fp = Field::prime(p);
    if (!q_poly) return fp;
    return Field::extend(fp, parse_poly(fp, *q_poly));
}

std::uint64_t checked_power(std::uint64_t r, std::uint64_t e) {
    std::uint64_t m = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (m > (std::uint64_t{1} << 20) / r) throw PreconditionViolated("r^e exceeds 2^20");
        m *= r;
    }
    return m;
}

// Commands

struct NonresidueArgs {
    std::uint64_t p = 0, r = 0;
    std::string field, witness;
    std::optional<std::string> zeta;
};

CommandResult cmd_nonresidue(const NonresidueArgs& a) {
    auto fp = Field::prime(a.p);
    auto target = target_field(a.p, a.field);
    const FieldPoly f = parse_poly(fp, a.witness);
    if (!check_property1(f, a.r)) {
        return unsatisfied("Property 1 not satisfied by " + format_poly(f) + " for r = " + std::to_string(a.r));
    }
    FqElement zeta;
    if (a.zeta) {
        zeta = FqElement(fp, parse_element(fp, *a.zeta));
    } else if (a.r == 2) {
        zeta = FqElement::from_int(fp, -1);
    } else {
        zeta = find_zeta_bruteforce(fp, a.r);
    }
    const FqElement out = bims(f, zeta, a.r, target);
    const FqElement chi = chi_r(out, a.r);
    if (chi.is_one()) throw OrderMismatch("constructed element " + out.to_string() + " is an r-th power");

    CommandResult res;
    res.payload["field_degree"] = target->absolute_degree();
    res.payload["r"] = a.r;
    res.payload["witness"] = format_poly(f);
    res.payload["nonresidue"] = out.to_string();
    res.payload["chi"] = chi.to_string();
    res.text = "nonresidue: " + out.to_string() + "\nchi_" + std::to_string(a.r) + ": " + chi.to_string() + "\n";
    return res;
}

struct RootArgs {
    std::uint64_t p = 0, m = 0, r = 0;
    std::string value;
};

CommandResult cmd_root(const RootArgs& a) {
    auto k = field_of_degree(a.p, a.m);
    const FqElement v(k, parse_element(k, a.value));
    FqElement x;
    try {
        x = cor13_pipeline(v, a.r);
    } catch (const NotAResidue&) {
        return unsatisfied(v.to_string() + " is not an r-th power for r = " + std::to_string(a.r));
    }
    if (!(fq_pow(x, Natural(a.r)) == v)) throw OrderMismatch("root check failed");
    CommandResult res;
    res.payload["value"] = v.to_string();
    res.payload["r"] = a.r;
    res.payload["root"] = x.to_string();
    res.text = "root: " + x.to_string() + "\ncheck: (" + x.to_string() + ")^" + std::to_string(a.r) + " = " +
               v.to_string() + "\n";
    return res;
}

struct BuildFieldArgs {
    std::uint64_t p = 0, r = 0, e = 0;
    std::optional<std::string> q_poly, out;
    std::string witness;
};

CommandResult cmd_build_field(const BuildFieldArgs& a) {
    auto k = coefficient_field(a.p, a.q_poly);
    const std::uint64_t m = checked_power(a.r, a.e);
    FieldPtr big = k;
    if (m > 1) {
        const FieldPoly f = parse_poly(k, a.witness);
        FieldPoly g = FieldPoly::x(k);
        try {
            g = build_rpower_field(f, a.r, m);
        } catch (const PropertyNotSatisfied& e) {
            return unsatisfied(std::string("Property 1 not satisfied: ") + e.what());
        }
        if (!is_irreducible(g)) throw OrderMismatch("constructed polynomial is reducible");
        big = Field::extend_trusted(k, g);
    }
    const std::string descriptor = format_descriptor(*big);
    CommandResult res;
    res.payload["degree"] = m;
    res.payload["absolute_degree"] = big->absolute_degree();
    res.payload["descriptor"] = descriptor;
    if (a.out) {
        write_descriptor_file(*a.out, *big);
        res.payload["file"] = *a.out;
        res.text = "wrote " + *a.out + ": degree " + std::to_string(m) + " over the base field\n";
    } else {
        res.text = descriptor;
    }
    return res;
}

struct PolyArgs {
    std::uint64_t p = 0, r = 0;
    std::optional<std::string> q_poly;
    std::string poly;
};

CommandResult cmd_ddf(const PolyArgs& a) {
    auto k = coefficient_field(a.p, a.q_poly);
    const FieldPoly f = parse_poly(k, a.poly);
    CommandResult res;
    res.text = "d,count,product\n";
    Json rows = Json::array();
    for (const auto& part : ddf(f)) {
        res.text += std::to_string(part.d) + "," + std::to_string(part.count) + "," + format_poly(part.h) + "\n";
        rows.push_back({{"d", part.d}, {"count", part.count}, {"product", format_poly(part.h)}});
    }
    res.payload["parts"] = rows;
    return res;
}

CommandResult cmd_check_property(const PolyArgs& a) {
    auto k = coefficient_field(a.p, a.q_poly);
    const FieldPoly f = parse_poly(k, a.poly);
    const auto w = check_property1(f, a.r);
    if (!w) {
        CommandResult res = unsatisfied("none");
        res.payload["witness"] = nullptr;
        return res;
    }
    CommandResult res;
    res.payload["witness"] = {{"r", a.r}, {"d", w->d}, {"count", w->count}, {"block", format_poly(w->h)}};
    res.text = "witness: r=" + std::to_string(a.r) + " d=" + std::to_string(w->d) +
               " count=" + std::to_string(w->count) + " block=" + format_poly(w->h) + "\n";
    return res;
}

struct TrinomialArgs {
    std::optional<std::uint64_t> p, pmax, bound;
    bool full = false;
    unsigned jobs = 1;
};

const char* const kBoundRule = "ceil(ln(p)^2)";

CommandResult cmd_trinomial_search(const TrinomialArgs& a, std::ostream& err) {
    if (a.p.has_value() == a.pmax.has_value()) throw PreconditionViolated("give exactly one of --p and --pmax");
    std::vector<std::uint64_t> primes;
    if (a.p) {
        primes.push_back(*a.p);
    } else {
        for (std::uint64_t p = 5; p <= *a.pmax; ++p) {
            if (is_prime(p)) primes.push_back(p);
        }
    }
    std::vector<TrinomialScan> scans;
    if (primes.size() == 1) {
        const std::uint64_t p = primes[0];
        scans.push_back(trinomial_search(p, a.bound.value_or(default_trinomial_bound(p)), a.jobs, !a.full));
    } else {
        scans = ordered_map<TrinomialScan>(primes.size(), a.jobs, [&](std::size_t i) {
            const std::uint64_t p = primes[i];
            return trinomial_search(p, a.bound.value_or(default_trinomial_bound(p)), 1, !a.full);
        });
    }

    CommandResult res;
    res.text = "p,bound,bound_rule,scanned,zero_discriminant,hits,hit_rate,first_hit_index,i,k,a,b,status\n";
    Json rows = Json::array();
    std::uint64_t violations = 0;
    for (const auto& s : scans) {
        Json row = {{"p", s.p},
                    {"bound", s.bound},
                    {"bound_rule", a.bound ? "given" : kBoundRule},
                    {"scanned", s.scanned},
                    {"zero_discriminant", s.zero_discriminant},
                    {"hits", s.hits}};
        std::string line = std::to_string(s.p) + "," + std::to_string(s.bound) + "," +
                           (a.bound ? "given" : kBoundRule) + "," + std::to_string(s.scanned) + "," +
                           std::to_string(s.zero_discriminant) + "," + std::to_string(s.hits) + ",";
        if (s.complete && s.scanned > 0) {
            const double rate = static_cast<double>(s.hits) / static_cast<double>(s.scanned);
            line += fixed(rate);
            row["hit_rate"] = fixed(rate);
        } else {
            row["hit_rate"] = nullptr;
        }
        if (s.first) {
            const auto& h = *s.first;
            line += "," + std::to_string(h.index) + "," + std::to_string(h.i) + "," + std::to_string(h.k) + "," +
                    std::to_string(h.a) + "," + std::to_string(h.b) + ",hit";
            row["first_hit"] = {{"index", h.index}, {"i", h.i}, {"k", h.k}, {"a", h.a}, {"b", h.b}};
            row["status"] = "hit";
        } else {
            line += ",,,,,,violated";
            row["first_hit"] = nullptr;
            row["status"] = "violated";
            ++violations;
            err << "CONJECTURE VIOLATED at p = " << s.p << ": no nonsquare discriminant for i,k,a,b <= " << s.bound
                << "\n";
        }
        res.text += line + "\n";
        rows.push_back(std::move(row));
    }
    res.payload["rows"] = rows;
    res.payload["violations"] = violations;
    return res;
}

struct LeastArgs {
    std::uint64_t r = 0, pmax = 0;
    unsigned jobs = 1;
};

CommandResult cmd_least_nonresidue(const LeastArgs& a) {
    const auto rows = least_nonresidue_table(a.r, a.pmax, a.jobs);
    CommandResult res;
    res.text = "p,n,ln^2p,ln^4p\n";
    Json out = Json::array();
    for (const auto& row : rows) {
        const double l = std::log(static_cast<double>(row.p));
        res.text += std::to_string(row.p) + "," + std::to_string(row.n) + "," + fixed(l * l) + "," +
                    fixed(l * l * l * l) + "\n";
        out.push_back({{"p", row.p}, {"n", row.n}, {"ln^2p", fixed(l * l)}, {"ln^4p", fixed(l * l * l * l)}});
    }
    res.payload["log"] = "natural";
    res.payload["rows"] = out;
    return res;
}

// Scan of one i: all (k, a, b) with k < 2i.
struct TrinomialSlice {
    std::uint64_t scanned = 0;
    std::uint64_t zero = 0;
    std::uint64_t hits = 0;
    std::optional<std::uint64_t> first;  // offset within the slice
    std::uint64_t first_k = 0, first_a = 0, first_b = 0;
};

TrinomialSlice scan_slice(std::uint64_t p, std::uint64_t bound, std::uint64_t i, bool stop_at_first) {
    const Modulus mod{Natural(p)};
    const Natural n(2 * i);
    const std::uint64_t half = (p - 1) / 2;
    TrinomialSlice s;
    const std::uint64_t kmax = std::min(bound, 2 * i - 1);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        for (std::uint64_t a = 1; a <= bound; ++a) {
            for (std::uint64_t b = 1; b <= bound; ++b) {
                const std::uint64_t offset = s.scanned++;
                const ModElement disc = swan_trinomial_discriminant(n, Natural(k), ModElement(Natural(a % p), mod),
                                                                    ModElement(Natural(b % p), mod));
                const std::uint64_t d = disc.value().to_u64();
                if (d == 0) {
                    ++s.zero;
                    continue;
                }
                if (powmod_u64(d, half, p) == 1) continue;
                ++s.hits;
                if (!s.first) {
                    s.first = offset;
                    s.first_k = k;
                    s.first_a = a;
                    s.first_b = b;
                    if (stop_at_first) return s;
                }
            }
        }
    }
    return s;
}

void confirm_hit(std::uint64_t p, const TrinomialHit& h) {
    auto fp = Field::prime(p);
    std::vector<Field::Element> c(2 * h.i + 1, fp->zero());
    c[0] = fp->from_u64(h.b);
    c[h.k] = fp->add(c[h.k], fp->from_u64(h.a));
    c[2 * h.i] = fp->one();
    const FieldPoly f(fp, std::move(c));
    if (stickelberger_sign(f) != -1 || !check_property1(f, 2)) {
        throw OrderMismatch("trinomial hit " + format_poly(f) + " fails the Property 1 check");
    }
}

}  // namespace

std::uint64_t default_trinomial_bound(std::uint64_t p) {
    const double l = std::log(static_cast<double>(p));
    return static_cast<std::uint64_t>(std::ceil(l * l));
}

TrinomialScan trinomial_search(std::uint64_t p, std::uint64_t bound, unsigned jobs, bool stop_at_first) {
    if (p < 5 || !is_prime(p)) throw PreconditionViolated("trinomial search needs a prime p >= 5");
    if (bound == 0) throw PreconditionViolated("bound must be positive");
    TrinomialScan out;
    out.p = p;
    out.bound = bound;
    out.complete = true;
    const unsigned workers = worker_count(jobs);
    // Slices run in rounds so a stop at the first hit wastes at most one round.
    for (std::uint64_t start = 1; start <= bound; start += workers) {
        const std::uint64_t count = std::min<std::uint64_t>(workers, bound - start + 1);
        const auto slices = ordered_map<TrinomialSlice>(
            count, workers, [&](std::size_t j) { return scan_slice(p, bound, start + j, stop_at_first); });
        for (std::size_t j = 0; j < slices.size(); ++j) {
            const auto& s = slices[j];
            if (s.first && !out.first) {
                out.first = TrinomialHit{out.scanned + *s.first + 1, start + j, s.first_k, s.first_a, s.first_b};
                if (stop_at_first) {
                    out.scanned += *s.first + 1;
                    out.hits += 1;
                    out.zero_discriminant += s.zero;
                    out.complete = false;
                    break;
                }
            }
            out.scanned += s.scanned;
            out.zero_discriminant += s.zero;
            out.hits += s.hits;
        }
        if (stop_at_first && out.first) break;
    }
    if (out.first) confirm_hit(p, *out.first);
    return out;
}

std::uint64_t least_nonresidue(std::uint64_t p, std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    if (!is_prime(p) || (p - 1) % r != 0) throw RDoesNotDivide("r does not divide p - 1");
    const std::uint64_t e = (p - 1) / r;
    for (std::uint64_t a = 2; a < p; ++a) {
        if (powmod_u64(a, e, p) != 1) return a;
    }
    throw OrderMismatch("no nonresidue below p");
}

std::vector<LeastNonresidueRow> least_nonresidue_table(std::uint64_t r, std::uint64_t pmax, unsigned jobs) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = r + 1; p <= pmax; ++p) {
        if ((p - 1) % r == 0 && is_prime(p)) primes.push_back(p);
    }
    return ordered_map<LeastNonresidueRow>(primes.size(), jobs, [&](std::size_t i) {
        return LeastNonresidueRow{primes[i], least_nonresidue(primes[i], r)};
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic nonresidues, r-th roots and field towers over finite fields", "stickel"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print the result as JSON");

    NonresidueArgs nr;
    auto* c_nr = app.add_subcommand("nonresidue", "r-th nonresidue of a target field from a Property-1 witness");
    c_nr->add_option("--p", nr.p, "characteristic")->required();
    c_nr->add_option("--field", nr.field, "descriptor file or degree n over F_p")->required();
    c_nr->add_option("--r", nr.r, "prime r")->required();
    c_nr->add_option("--witness", nr.witness, "witness polynomial over F_p")->required();
    c_nr->add_option("--zeta", nr.zeta, "primitive r-th root of unity in F_p");

    RootArgs rt;
    auto* c_root = app.add_subcommand("root", "r-th root in F_(p^m)");
    c_root->add_option("--p", rt.p, "characteristic")->required();
    c_root->add_option("--m", rt.m, "degree of the field")->required();
    c_root->add_option("--r", rt.r, "prime r")->required();
    c_root->add_option("--value", rt.value, "element a, a polynomial in x")->required();

    BuildFieldArgs bf;
    auto* c_bf = app.add_subcommand("build-field", "irreducible polynomial of degree r^e and its descriptor");
    c_bf->add_option("--p", bf.p, "characteristic")->required();
    c_bf->add_option("--q-poly", bf.q_poly, "defining polynomial of F_q over F_p (default F_q = F_p)");
    c_bf->add_option("--r", bf.r, "prime r")->required();
    c_bf->add_option("--e", bf.e, "exponent e")->required();
    c_bf->add_option("--witness", bf.witness, "Property-1 witness over F_q")->required();
    c_bf->add_option("--out", bf.out, "write the descriptor to this file");

    PolyArgs dd;
    auto* c_ddf = app.add_subcommand("ddf", "distinct-degree factorization table");
    c_ddf->add_option("--p", dd.p, "characteristic")->required();
    c_ddf->add_option("--q-poly", dd.q_poly, "defining polynomial of F_q over F_p");
    c_ddf->add_option("--poly", dd.poly, "monic squarefree polynomial")->required();

    PolyArgs cp;
    auto* c_cp = app.add_subcommand("check-property", "Property-1 witness block or none");
    c_cp->add_option("--p", cp.p, "characteristic")->required();
    c_cp->add_option("--q-poly", cp.q_poly, "defining polynomial of F_q over F_p");
    c_cp->add_option("--poly", cp.poly, "squarefree polynomial")->required();
    c_cp->add_option("--r", cp.r, "prime r")->required();

    TrinomialArgs tr;
    auto* c_tr = app.add_subcommand("trinomial-search", "first trinomial with a nonsquare discriminant");
    c_tr->add_option("--p", tr.p, "prime p >= 5");
    c_tr->add_option("--pmax", tr.pmax, "scan every prime 5 <= p <= pmax");
    c_tr->add_option("--bound", tr.bound, "box size B (default ceil(ln(p)^2))");
    c_tr->add_flag("--full", tr.full, "scan the whole box for hit rates");
    c_tr->add_option("--jobs", tr.jobs, "worker threads (0 = all cores)");

    LeastArgs ln;
    auto* c_ln = app.add_subcommand("least-nonresidue", "least r-th nonresidue table");
    c_ln->add_option("--r", ln.r, "prime r")->required();
    c_ln->add_option("--pmax", ln.pmax, "largest p")->required();
    c_ln->add_option("--jobs", ln.jobs, "worker threads (0 = all cores)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(Status::invalid_input);
    }

    const auto t0 = std::chrono::steady_clock::now();
    CommandResult res;
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (c_nr->parsed()) res = cmd_nonresidue(nr);
        if (c_root->parsed()) res = cmd_root(rt);
        if (c_bf->parsed()) res = cmd_build_field(bf);
        if (c_ddf->parsed()) res = cmd_ddf(dd);
        if (c_cp->parsed()) res = cmd_check_property(cp);
        if (c_tr->parsed()) res = cmd_trinomial_search(tr, err);
        if (c_ln->parsed()) res = cmd_least_nonresidue(ln);
    } catch (const PropertyNotSatisfied& e) {
        res = unsatisfied(std::string("Property 1 not satisfied: ") + e.what());
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        res = CommandResult{Status::invalid_input, {{"error", e.what()}}, ""};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        res = CommandResult{Status::invalid_input, {{"error", e.what()}}, ""};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json) {
        Json doc = {{"command", command}, {"status", status_name(res.status)}};
        for (auto& [key, value] : res.payload.items()) doc[key] = value;
        out << doc.dump(2) << "\n";
    } else {
        out << res.text;
    }
    err << "time_ms: " << fixed(ms) << "\n";
    return static_cast<int>(res.status);
}

}  // namespace stickel::cli
