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

#include "stickel/field.hpp"

#include <algorithm>

#include "stickel/linalg.hpp"
#include "stickel/text.hpp"

namespace stickel {

namespace {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return a >= b ? a - b : a + (p - b);
}

// Prime factors of n (small n only: extension degrees).
std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t s = 2; s * s <= n; ++s) {
        if (n % s) continue;
        out.push_back(s);
        while (n % s == 0) n /= s;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field::Field(Token, std::uint64_t p) : p_(p), order_(p) {}

Field::Field(Token, FieldPtr base, FieldPoly h)
    : p_(base->p_),
      level_(base->level_ + 1),
      degree_(static_cast<std::size_t>(h.degree())),
      abs_degree_(base->abs_degree_ * static_cast<std::size_t>(h.degree())),
      order_(stickel::pow(base->order_, static_cast<std::uint64_t>(h.degree()))),
      base_(std::move(base)),
      h_(std::make_shared<const FieldPoly>(std::move(h))) {
    h_blocks_ = h_->coeffs();
    if (base_->is_prime_field()) {
        for (const auto& c : h_blocks_) h_prime_.push_back(c[0]);
    }
}

FieldPtr Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63)) throw PreconditionViolated("characteristic must be below 2^63");
    if (!is_prime(p)) throw NotPrime(std::to_string(p));
    return std::make_shared<const Field>(Token{}, p);
}

FieldPtr Field::extend_trusted(const FieldPtr& base, const FieldPoly& h) {
    if (!base) throw PreconditionViolated("extension of a null field");
    if (!(*h.ring() == *base)) throw ContextMismatch("defining polynomial is not over the base field");
    if (h.degree() < 1) throw DegreeTooSmall("defining polynomial must be nonconstant");
    if (!h.is_monic()) throw NotMonic(format_poly(h));
    // Rebind the coefficients to the base pointer itself.
    FieldPoly bound(base, h.coeffs());
    return std::make_shared<const Field>(Token{}, base, std::move(bound));
}

FieldPtr Field::extend(const FieldPtr& base, const FieldPoly& h) {
    if (!base) throw PreconditionViolated("extension of a null field");
    if (!(*h.ring() == *base)) throw ContextMismatch("defining polynomial is not over the base field");
    if (h.degree() < 1) throw DegreeTooSmall("defining polynomial must be nonconstant");
    if (!h.is_monic()) throw NotMonic(format_poly(h));
    if (!is_irreducible(h)) throw NotIrreducible(format_poly(h));
    return extend_trusted(base, h);
}

FieldPtr Field::ancestor(std::size_t level) const {
    if (level > level_) throw PreconditionViolated("ancestor level above the field");
    FieldPtr f = self();
    while (f->level_ > level) f = f->base_;
    return f;
}

const FieldPoly& Field::defining_poly() const {
    if (!h_) throw PreconditionViolated("a prime field has no defining polynomial");
    return *h_;
}

std::string Field::variable_name(std::size_t level) {
    switch (level) {
        case 1:
            return "x";
        case 2:
            return "y";
        case 3:
            return "z";
        default:
            return "x" + std::to_string(level);
    }
}

Field::Element Field::one() const {
    Element e(abs_degree_, 0);
    e[0] = 1 % p_;
    return e;
}

Field::Element Field::from_u64(std::uint64_t n) const {
    Element e(abs_degree_, 0);
    e[0] = n % p_;
    return e;
}

Field::Element Field::from_int(std::int64_t n) const {
    if (n >= 0) return from_u64(static_cast<std::uint64_t>(n));
    // -(n+1) avoids overflow at the minimum value.
    const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) % p_;
    Element e(abs_degree_, 0);
    e[0] = submod(p_ - 1, m, p_);
    return e;
}

Field::Element Field::generator() const {
    if (level_ == 0) throw PreconditionViolated("a prime field has no generator");
    if (degree_ == 1) {
        // y = -h_0 in a degree-one extension.
        return embed(*base_, base_->neg(h_blocks_[0]));
    }
    Element e(abs_degree_, 0);
    e[base_->abs_degree_] = 1;
    return e;
}

Field::Element Field::from_index(const Natural& idx) const {
    if (idx >= order_) throw PreconditionViolated("element index out of range");
    Element e(abs_degree_, 0);
    Natural rest = idx;
    const Natural p(p_);
    for (std::size_t i = 0; i < abs_degree_ && !rest.is_zero(); ++i) {
        e[i] = rest.mod_u64(p_);
        rest /= p;
    }
    return e;
}

Natural Field::to_index(const Element& a) const {
    Natural idx(0);
    const Natural p(p_);
    for (std::size_t i = abs_degree_; i-- > 0;) idx = idx * p + Natural(a[i]);
    return idx;
}

void Field::check_element(const Element& a) const {
    if (a.size() != abs_degree_) throw ContextMismatch("element does not belong to this field");
}

Field::Element Field::add(const Element& a, const Element& b) const {
    Element out(abs_degree_);
    for (std::size_t i = 0; i < abs_degree_; ++i) out[i] = addmod(a[i], b[i], p_);
    return out;
}

Field::Element Field::sub(const Element& a, const Element& b) const {
    Element out(abs_degree_);
    for (std::size_t i = 0; i < abs_degree_; ++i) out[i] = submod(a[i], b[i], p_);
    return out;
}

Field::Element Field::neg(const Element& a) const {
    Element out(abs_degree_);
    for (std::size_t i = 0; i < abs_degree_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
    return out;
}

Field::Element Field::scale(const Element& a, std::uint64_t s) const {
    Element out(abs_degree_);
    for (std::size_t i = 0; i < abs_degree_; ++i) out[i] = mulmod_u64(a[i], s % p_, p_);
    return out;
}

bool Field::is_zero(const Element& a) const noexcept {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

bool Field::is_one(const Element& a) const noexcept {
    if (a.empty() || a[0] != 1 % p_) return false;
    return std::all_of(a.begin() + 1, a.end(), [](std::uint64_t c) { return c == 0; });
}

Field::Element Field::mul(const Element& a, const Element& b) const {
    if (level_ == 0) return Element{mulmod_u64(a[0], b[0], p_)};
    if (base_->level_ == 0) return mul_over_prime(a, b);
    return mul_generic(a, b);
}

Field::Element Field::mul_over_prime(const Element& a, const Element& b) const {
    const std::size_t d = degree_;
    boost::container::small_vector<std::uint64_t, 16> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = addmod(prod[i + j], mulmod_u64(a[i], b[j], p_), p_);
        }
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i < d; ++i) {
            prod[k - d + i] = submod(prod[k - d + i], mulmod_u64(c, h_prime_[i], p_), p_);
        }
    }
    return Element(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
}

Field::Element Field::mul_generic(const Element& a, const Element& b) const {
    const std::size_t d = degree_;
    const Field& k = *base_;
    const auto as = split(a);
    const auto bs = split(b);
    std::vector<Element> prod(2 * d - 1, k.zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (k.is_zero(as[i])) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (k.is_zero(bs[j])) continue;
            prod[i + j] = k.add(prod[i + j], k.mul(as[i], bs[j]));
        }
    }
    for (std::size_t m = 2 * d - 1; m-- > d;) {
        if (k.is_zero(prod[m])) continue;
        const Element c = prod[m];
        for (std::size_t i = 0; i < d; ++i) {
            prod[m - d + i] = k.sub(prod[m - d + i], k.mul(c, h_blocks_[i]));
        }
    }
    return join(std::span<const Element>(prod.data(), d));
}

std::optional<Field::Element> Field::try_inverse(const Element& a) const {
    if (is_zero(a)) return std::nullopt;
    if (level_ == 0) return Element{invmod_u64(a[0], p_)};
    const auto eg = poly_xgcd(to_base_poly(a), *h_);
    if (eg.gcd.degree() != 0) return std::nullopt;  // only when h is reducible
    return from_base_poly(eg.s);
}

Field::Element Field::inverse(const Element& a) const {
    if (is_zero(a)) throw ZeroElement("inverse of zero");
    auto inv = try_inverse(a);
    if (!inv) throw NotInvertible(format(a));
    return *inv;
}

Field::Element Field::pow(const Element& a, const Natural& e) const {
    Element result = one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = mul(result, result);
        if (e.bit(i)) result = mul(result, a);
    }
    return result;
}

std::string Field::format(const Element& a) const {
    if (level_ == 0) return std::to_string(a[0]);
    return format_poly(to_base_poly(a), variable());
}

std::vector<Field::Element> Field::split(const Element& a) const {
    if (level_ == 0) throw PreconditionViolated("split of a prime-field element");
    const std::size_t w = base_->abs_degree_;
    std::vector<Element> out;
    out.reserve(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        out.emplace_back(a.begin() + static_cast<std::ptrdiff_t>(i * w),
                         a.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
    }
    return out;
}

Field::Element Field::join(std::span<const Element> coeffs) const {
    if (level_ == 0) throw PreconditionViolated("join into a prime field");
    if (coeffs.size() > degree_) throw DimensionMismatch("too many coefficients for join");
    Element out(abs_degree_, 0);
    const std::size_t w = base_->abs_degree_;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::copy(coeffs[i].begin(), coeffs[i].end(), out.begin() + static_cast<std::ptrdiff_t>(i * w));
    }
    return out;
}

FieldPoly Field::to_base_poly(const Element& a) const {
    auto parts = split(a);
    return FieldPoly(base_, std::move(parts));
}

Field::Element Field::from_base_poly(const FieldPoly& f) const {
    if (level_ == 0) throw PreconditionViolated("prime field has no base polynomial ring");
    if (!(*f.ring() == *base_)) throw ContextMismatch("polynomial is not over the base field");
    const FieldPoly r = f.degree() < static_cast<int>(degree_) ? f : poly_mod(f, *h_);
    return join(r.coeffs());
}

bool Field::has_ancestor(const Field& ancestor) const {
    const Field* f = this;
    while (f) {
        if (f == &ancestor || *f == ancestor) return true;
        if (f->level_ <= ancestor.level_) return false;
        f = f->base_.get();
    }
    return false;
}

Field::Element Field::embed(const Field& ancestor, const Element& a) const {
    if (!has_ancestor(ancestor)) throw ContextMismatch("embedding from a field that is not an ancestor");
    ancestor.check_element(a);
    Element out(abs_degree_, 0);
    std::copy(a.begin(), a.end(), out.begin());
    return out;
}

bool Field::lies_in(const Field& ancestor, const Element& a) const {
    if (!has_ancestor(ancestor)) throw ContextMismatch("not an ancestor");
    return std::all_of(a.begin() + static_cast<std::ptrdiff_t>(ancestor.abs_degree_), a.end(),
                       [](std::uint64_t c) { return c == 0; });
}

Field::Element Field::project(const Field& ancestor, const Element& a) const {
    if (!lies_in(ancestor, a)) throw PreconditionViolated("element does not lie in the subfield");
    return Element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ancestor.abs_degree_));
}

bool operator==(const Field& a, const Field& b) {
    if (&a == &b) return true;
    if (a.p_ != b.p_ || a.level_ != b.level_ || a.degree_ != b.degree_) return false;
    if (a.level_ == 0) return true;
    return *a.h_ == *b.h_;
}

FqElement::FqElement(FieldPtr f, Field::Element v) : field(std::move(f)), value(std::move(v)) {
    field->check_element(value);
}

FqElement FqElement::from_int(const FieldPtr& f, std::int64_t n) { return FqElement(f, f->from_int(n)); }

namespace {
const FieldPtr& common(const FqElement& a, const FqElement& b) {
    if (a.field != b.field && !(*a.field == *b.field)) throw ContextMismatch("elements of different fields");
    return a.field;
}
}  // namespace

FqElement operator+(const FqElement& a, const FqElement& b) {
    const auto& f = common(a, b);
    return FqElement(f, f->add(a.value, b.value));
}
FqElement operator-(const FqElement& a, const FqElement& b) {
    const auto& f = common(a, b);
    return FqElement(f, f->sub(a.value, b.value));
}
FqElement operator*(const FqElement& a, const FqElement& b) {
    const auto& f = common(a, b);
    return FqElement(f, f->mul(a.value, b.value));
}
FqElement operator/(const FqElement& a, const FqElement& b) {
    const auto& f = common(a, b);
    return FqElement(f, f->mul(a.value, f->inverse(b.value)));
}
FqElement operator-(const FqElement& a) { return FqElement(a.field, a.field->neg(a.value)); }
bool operator==(const FqElement& a, const FqElement& b) {
    return (a.field == b.field || *a.field == *b.field) && a.value == b.value;
}

FqElement fq_pow(const FqElement& a, const Natural& e) { return FqElement(a.field, a.field->pow(a.value, e)); }
FqElement fq_inverse(const FqElement& a) { return FqElement(a.field, a.field->inverse(a.value)); }

FqElement norm(const FqElement& a, std::uint64_t k) {
    const Field& f = *a.field;
    if (k == 0 || f.absolute_degree() % k != 0) {
        throw PreconditionViolated("norm ratio must divide the absolute degree");
    }
    if (k == 1) return a;
    const Natural q = pow(Natural(f.characteristic()), f.absolute_degree() / k);
    const Natural e = (f.order() - Natural(1)) / (q - Natural(1));
    FqElement n = fq_pow(a, e);
    if (!(fq_pow(n, q) == n)) throw OrderMismatch("norm does not lie in the subfield");
    return n;
}

FqElement chi_r(const FqElement& a, std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const Natural qm1 = a.field->order() - Natural(1);
    if (!(qm1 % Natural(r)).is_zero()) {
        throw RDoesNotDivide(std::to_string(r) + " does not divide " + qm1.to_string());
    }
    if (a.is_zero()) throw ZeroElement("character of zero");
    return fq_pow(a, qm1 / Natural(r));
}

bool is_nonresidue(const FqElement& a, std::uint64_t r) { return !chi_r(a, r).is_one(); }

bool is_irreducible(const FieldPoly& f) {
    if (f.degree() < 1) throw DegreeTooSmall("irreducibility of a constant");
    if (f.degree() == 1) return true;
    const FieldPoly g = monic(f);
    const auto n = static_cast<std::size_t>(g.degree());
    const Natural& q = g.ring()->order();
    const FieldPoly x = FieldPoly::x(g.ring());
    // frob[j] = x^(q^j) mod g for j = 0..n
    std::vector<FieldPoly> frob{poly_mod(x, g)};
    for (std::size_t j = 1; j <= n; ++j) frob.push_back(poly_powmod(frob.back(), q, g));
    if (!(frob[n] == poly_mod(x, g))) return false;
    for (std::size_t s : prime_divisors(n)) {
        const FieldPoly h = poly_gcd(frob[n / s] - x, g);
        if (h.degree() != 0) return false;
    }
    return true;
}

FieldPoly minimal_polynomial_over(const FqElement& a, const FieldPtr& ancestor) {
    const Field& f = *a.field;
    const Field& k = *ancestor;
    if (!f.has_ancestor(k)) throw ContextMismatch("minimal polynomial over a field that is not an ancestor");
    const std::size_t w = k.absolute_degree();
    const std::size_t dim = f.absolute_degree() / w;
    auto chunks = [&](const Field::Element& v) {
        Vector<Field> out;
        out.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(i * w),
                             v.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
        }
        return out;
    };
    LinearDependence<Field> dep(k, dim);
    Field::Element power = f.one();
    for (std::size_t n = 0; n <= dim; ++n) {
        if (auto c = dep.add(chunks(power))) {
            // power = sum c_i a^i, so x^n - sum c_i x^i annihilates a.
            std::vector<Field::Element> coeffs(n + 1, k.zero());
            for (std::size_t i = 0; i < n; ++i) coeffs[i] = k.neg((*c)[i]);
            coeffs[n] = k.one();
            return FieldPoly(ancestor, std::move(coeffs));
        }
        power = f.mul(power, a.value);
    }
    throw OrderMismatch("no linear dependence among powers");
}

FieldPoly minimal_polynomial(const FqElement& a) {
    const Field& f = *a.field;
    return minimal_polynomial_over(a, f.is_prime_field() ? a.field : f.base());
}

Flattening flatten(const FieldPtr& field, const FieldPtr& ancestor) {
    if (!field->has_ancestor(*ancestor)) throw ContextMismatch("flatten over a field that is not an ancestor");
    const std::size_t target = field->absolute_degree() / ancestor->absolute_degree();
    auto attempt = [&](const Field::Element& v) -> std::optional<Flattening> {
        FqElement el(field, v);
        FieldPoly m = minimal_polynomial_over(el, ancestor);
        if (static_cast<std::size_t>(m.degree()) != target) return std::nullopt;
        return Flattening{std::move(m), std::move(el)};
    };
    if (field->level() > ancestor->level()) {
        if (auto r = attempt(field->generator())) return *r;
    } else {
        return Flattening{FieldPoly::x(ancestor), FqElement(field, field->zero())};
    }
    for (Natural idx(1); idx < field->order(); idx += Natural(1)) {
        if (auto r = attempt(field->from_index(idx))) return *r;
    }
    throw ConstructionFailed("no primitive element found");
}

FieldPoly monic_from_index(const FieldPtr& f, std::size_t d, const Natural& idx) {
    std::vector<Field::Element> coeffs;
    coeffs.reserve(d + 1);
    Natural rest = idx;
    for (std::size_t i = 0; i < d; ++i) {
        coeffs.push_back(f->from_index(rest % f->order()));
        rest /= f->order();
    }
    coeffs.push_back(f->one());
    return FieldPoly(f, std::move(coeffs));
}

FieldPoly first_irreducible(const FieldPtr& f, std::size_t d) {
    if (d == 0) throw DegreeTooSmall("irreducible of degree 0");
    const Natural count = pow(f->order(), d);
    for (Natural idx(0); idx < count; idx += Natural(1)) {
        FieldPoly g = monic_from_index(f, d, idx);
        if (is_irreducible(g)) return g;
    }
    throw ConstructionFailed("no irreducible polynomial found");
}

}  // namespace stickel
