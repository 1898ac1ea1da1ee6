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


// Conversions between library values and the plain oracle representation.

#ifndef STICKEL_TESTS_SUPPORT_HPP
#define STICKEL_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>

#include "oracle/oracle.hpp"
#include "stickel/field.hpp"
#include "stickel/text.hpp"

namespace support {

using namespace stickel;

inline FieldPoly poly(const FieldPtr& k, const oracle::IntPoly& c) {
    std::vector<Field::Element> coeffs;
    for (auto v : c) coeffs.push_back(k->from_int(v));
    return FieldPoly(k, std::move(coeffs));
}

inline FieldPoly poly(const FieldPtr& k, std::initializer_list<std::int64_t> c) {
    return poly(k, oracle::IntPoly(c.begin(), c.end()));
}

/// Prime-field polynomial to integers.
inline oracle::IntPoly ints(const FieldPoly& f) {
    oracle::IntPoly out;
    for (const auto& c : f.coeffs()) out.push_back(static_cast<oracle::i64>(c[0]));
    return out;
}

inline std::uint64_t val(const Field::Element& a) { return a[0]; }

inline FqElement el(const FieldPtr& k, std::int64_t v) { return FqElement(k, k->from_int(v)); }

inline FqElement el(const FieldPtr& k, const std::string& text) { return FqElement(k, parse_element(k, text)); }

/// Uniform random polynomial of exact degree d (monic if requested).
inline FieldPoly random_poly(const FieldPtr& k, std::size_t d, std::mt19937_64& rng, bool make_monic) {
    std::vector<Field::Element> c;
    for (std::size_t i = 0; i <= d; ++i) {
        Natural idx(rng() % k->order().to_u64());
        c.push_back(k->from_index(idx));
    }
    if (make_monic) c[d] = k->one();
    while (k->is_zero(c[d])) c[d] = k->from_index(Natural(rng() % k->order().to_u64()));
    return FieldPoly(k, std::move(c));
}

inline Field::Element random_element(const FieldPtr& k, std::mt19937_64& rng) {
    return k->from_index(Natural(rng() % k->order().to_u64()));
}

inline Field::Element random_nonzero(const FieldPtr& k, std::mt19937_64& rng) {
    return k->from_index(Natural(1 + rng() % (k->order().to_u64() - 1)));
}

}  // namespace support

#endif
