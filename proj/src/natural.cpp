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

#include "stickel/natural.hpp"

#include <limits>
#include <ostream>

namespace stickel {

namespace mp = boost::multiprecision;

Natural::Natural(Backend v) : value_(std::move(v)) {
    if (value_.sign() < 0) throw PreconditionViolated("negative value for Natural");
}

Natural Natural::parse(std::string_view decimal) {
    if (decimal.empty()) throw ParseError("empty natural");
    for (char ch : decimal) {
        if (ch < '0' || ch > '9') throw ParseError("not a decimal natural: '" + std::string(decimal) + "'");
    }
    return Natural(Backend(std::string(decimal)));
}

std::string Natural::to_string() const { return value_.str(); }

std::size_t Natural::bit_length() const noexcept {
    if (value_.is_zero()) return 0;
    return static_cast<std::size_t>(mp::msb(value_)) + 1;
}

bool Natural::fits_u64() const noexcept { return value_ <= std::numeric_limits<std::uint64_t>::max(); }

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw PreconditionViolated("value " + to_string() + " exceeds 64 bits");
    return value_.convert_to<std::uint64_t>();
}

std::uint64_t Natural::mod_u64(std::uint64_t m) const {
    if (m == 0) throw DivisionByZero("modulus 0");
    return static_cast<Backend>(value_ % m).convert_to<std::uint64_t>();
}

Natural& Natural::operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (rhs.value_ > value_) throw PreconditionViolated("natural subtraction underflow");
    value_ -= rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("natural division by zero");
    value_ /= rhs.value_;
    return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("natural remainder by zero");
    value_ %= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

Natural pow(const Natural& base, std::uint64_t exponent) {
    Natural result(1);
    Natural b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

Natural gcd(const Natural& a, const Natural& b) { return Natural(mp::gcd(a.backend(), b.backend())); }

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mulmod_u64(result, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t powmod_u64(std::uint64_t a, const Natural& e, std::uint64_t m) {
    if (e.fits_u64()) return powmod_u64(a, e.to_u64(), m);
    std::uint64_t result = 1 % m;
    a %= m;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = mulmod_u64(result, result, m);
        if (e.bit(i)) result = mulmod_u64(result, a, m);
    }
    return result;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid on signed 128-bit intermediates.
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw NotInvertible(std::to_string(a) + " mod " + std::to_string(m));
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t sp : small) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : small) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Natural& n) {
    if (!n.fits_u64()) throw PreconditionViolated("primality is only decided below 2^64");
    return is_prime(n.to_u64());
}

Modulus::Modulus(Natural value) : value_(std::move(value)) {
    if (value_ < Natural(2)) throw PreconditionViolated("modulus must be at least 2");
}

Modulus Modulus::prime(Natural value) {
    Modulus m(std::move(value));
    if (!is_prime(m.value_)) throw NotPrime(m.value_.to_string());
    m.prime_checked_ = true;
    return m;
}

ModElement::ModElement(Natural value, Modulus modulus)
    : value_(std::move(value) % modulus.value()), modulus_(std::move(modulus)) {}

namespace {
void require_same(const ModElement& a, const ModElement& b) {
    if (!(a.modulus() == b.modulus())) throw ContextMismatch("residues modulo different moduli");
}
}  // namespace

ModElement& ModElement::operator+=(const ModElement& rhs) {
    require_same(*this, rhs);
    value_ = (value_ + rhs.value_) % modulus_.value();
    return *this;
}

ModElement& ModElement::operator-=(const ModElement& rhs) {
    require_same(*this, rhs);
    value_ = (value_ + modulus_.value() - rhs.value_) % modulus_.value();
    return *this;
}

ModElement& ModElement::operator*=(const ModElement& rhs) {
    require_same(*this, rhs);
    value_ = (value_ * rhs.value_) % modulus_.value();
    return *this;
}

ModElement ModElement::operator-() const { return ModElement((modulus_.value() - value_) % modulus_.value(), modulus_); }

std::ostream& operator<<(std::ostream& os, const ModElement& a) { return os << a.value_; }

ModElement mod_pow(const ModElement& a, const Natural& e) {
    const auto& m = a.modulus().value().backend();
    return ModElement(Natural(Natural::Backend(mp::powm(a.value().backend(), e.backend(), m))), a.modulus());
}

ModElement mod_inv(const ModElement& a) {
    // Extended Euclid over signed multiprecision integers.
    using Int = Natural::Backend;
    const Int& m = a.modulus().value().backend();
    Int old_r = a.value().backend(), r = m;
    Int old_s = 1, s = 0;
    while (!r.is_zero()) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
    }
    if (old_r != 1) throw NotInvertible(a.value().to_string() + " mod " + a.modulus().value().to_string());
    Int inv = old_s % m;
    if (inv.sign() < 0) inv += m;
    return ModElement(Natural(std::move(inv)), a.modulus());
}

Natural multiplicative_order(const ModElement& a) {
    if (gcd(a.value(), a.modulus().value()) != Natural(1)) {
        throw NotInvertible(a.value().to_string() + " mod " + a.modulus().value().to_string());
    }
    ModElement one(Natural(1), a.modulus());
    ModElement x = a;
    Natural n(1);
    while (!(x == one)) {
        x *= a;
        n += Natural(1);
    }
    return n;
}

PrimePowerSplit factor_out_prime_power(const Natural& n, const Natural& r) {
    if (r < Natural(2)) throw PreconditionViolated("prime-power split needs r >= 2");
    if (n.is_zero()) throw PreconditionViolated("prime-power split of zero");
    PrimePowerSplit out{n, Natural(0)};
    while ((out.u % r).is_zero()) {
        out.u /= r;
        out.t += Natural(1);
    }
    return out;
}

}  // namespace stickel
