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

#ifndef STICKEL_RING_HPP
#define STICKEL_RING_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

namespace stickel {

/**
 * A commutative ring given as a context object. Elements are plain values
 * that carry no reference to their ring; the context performs arithmetic.
 *
 * `try_inverse` returns nothing for non-units, which is how the non-field
 * rings (the cyclotomic quotient) report zero divisors. `is_field` selects
 * division-based algorithms where they are valid.
 */
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Element& a, const typename R::Element& b,
                                   std::int64_t n) {
    typename R::Element;
    { R::is_field } -> std::convertible_to<bool>;
    { ring.zero() } -> std::convertible_to<typename R::Element>;
    { ring.one() } -> std::convertible_to<typename R::Element>;
    { ring.from_int(n) } -> std::convertible_to<typename R::Element>;
    { ring.add(a, b) } -> std::convertible_to<typename R::Element>;
    { ring.sub(a, b) } -> std::convertible_to<typename R::Element>;
    { ring.neg(a) } -> std::convertible_to<typename R::Element>;
    { ring.mul(a, b) } -> std::convertible_to<typename R::Element>;
    { ring.is_zero(a) } -> std::same_as<bool>;
    { ring.equal(a, b) } -> std::same_as<bool>;
    { ring.try_inverse(a) } -> std::same_as<std::optional<typename R::Element>>;
    { ring.format(a) } -> std::convertible_to<std::string>;
    { ring == ring } -> std::convertible_to<bool>;
};

}  // namespace stickel

#endif
