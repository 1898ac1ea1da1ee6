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
 * @file natural.hpp
 * @brief Arbitrary-precision naturals and residues modulo a natural.
 *
 * Natural carries exponents such as (q^d - 1)/r or q^(k i) that overflow
 * machine words long before the fields involved become large. ModElement is
 * the general residue type; the hot paths of the field layer use word-sized
 * residues directly and only fall back to Natural for exponents.
 */

#ifndef STICKEL_NATURAL_HPP
#define STICKEL_NATURAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "stickel/error.hpp"

namespace stickel {

class Natural {
   public:
    using Backend = boost::multiprecision::cpp_int;

    Natural() = default;
    template <std::integral T>
    Natural(T v) : value_(v) {  // NOLINT: implicit by intent, naturals mix freely with literals
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw PreconditionViolated("negative value for Natural");
        }
    }
    explicit Natural(Backend v);

    static Natural parse(std::string_view decimal);
    std::string to_string() const;

    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_odd() const noexcept { return bit_test(value_, 0); }
    std::size_t bit_length() const noexcept;
    bool bit(std::size_t i) const noexcept { return bit_test(value_, static_cast<unsigned>(i)); }

    bool fits_u64() const noexcept;
    /// Throws PreconditionViolated if the value exceeds 64 bits.
    std::uint64_t to_u64() const;
    std::uint64_t mod_u64(std::uint64_t m) const;

    const Backend& backend() const noexcept { return value_; }

    Natural& operator+=(const Natural& rhs);
    /// Natural subtraction; throws PreconditionViolated when rhs > *this.
    Natural& operator-=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);
    Natural& operator/=(const Natural& rhs);
    Natural& operator%=(const Natural& rhs);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

   private:
    Backend value_;
};

Natural pow(const Natural& base, std::uint64_t exponent);
Natural gcd(const Natural& a, const Natural& b);

/// Deterministic primality for values below 2^64 (Miller-Rabin with the
/// first twelve prime bases, which is exact in that range).
bool is_prime(std::uint64_t n);
bool is_prime(const Natural& n);

class Modulus {
   public:
    /// Requires value >= 2.
    explicit Modulus(Natural value);
    /// Same, but also verifies primality; throws NotPrime.
    static Modulus prime(Natural value);

    const Natural& value() const noexcept { return value_; }
    bool is_prime_checked() const noexcept { return prime_checked_; }

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.value_ == b.value_; }

   private:
    Natural value_;
    bool prime_checked_ = false;
};

class ModElement {
   public:
    ModElement(Natural value, Modulus modulus);

    const Natural& value() const noexcept { return value_; }
    const Modulus& modulus() const noexcept { return modulus_; }

    ModElement& operator+=(const ModElement& rhs);
    ModElement& operator-=(const ModElement& rhs);
    ModElement& operator*=(const ModElement& rhs);
    friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
    friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
    friend ModElement operator*(ModElement a, const ModElement& b) { return a *= b; }
    ModElement operator-() const;

    friend bool operator==(const ModElement& a, const ModElement& b) noexcept {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const ModElement& a);

   private:
    Natural value_;
    Modulus modulus_;
};

ModElement mod_pow(const ModElement& a, const Natural& e);
/// Throws NotInvertible when gcd(a, modulus) != 1.
ModElement mod_inv(const ModElement& a);
/// Least n > 0 with a^n = 1, by stepping; intended for small moduli.
Natural multiplicative_order(const ModElement& a);

struct PrimePowerSplit {
    Natural u;
    Natural t;
};
/// n = u * r^t with r not dividing u. Requires r >= 2 and n > 0.
PrimePowerSplit factor_out_prime_power(const Natural& n, const Natural& r);

// Word-sized helpers shared by the field layer.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t a, const Natural& e, std::uint64_t m);
/// Throws NotInvertible.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

}  // namespace stickel

#endif
