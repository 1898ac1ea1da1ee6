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
 * @file text.hpp
 * @brief Text forms of polynomials, field elements and field descriptors.
 *
 * Polynomials are read either as expressions ("x^4+3*x+1", "(x+1)*y^2-y")
 * or as comma separated coefficients in ascending degree ("1,3,0,0,1").
 * Generators of the coefficient tower are named by level (x, y, z, x4, ...);
 * any other identifier is the polynomial variable. Integers are reduced
 * modulo the characteristic.
 *
 * Printing is canonical: descending degree, coefficients reduced to [0, p),
 * unit coefficients omitted, and coefficients with more than one term
 * parenthesized. Printing a parsed polynomial and parsing it back is exact.
 *
 * A field descriptor is "p=<decimal>" followed by one defining polynomial
 * per line, each over the field built by the lines above it.
 */

#ifndef STICKEL_TEXT_HPP
#define STICKEL_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "stickel/field.hpp"

namespace stickel {

std::string format_poly(const FieldPoly& f, const std::string& var);
/// Uses the variable one level above the coefficient field.
std::string format_poly(const FieldPoly& f);

/// Parses a polynomial over `coeffs`. With `var` set, only that name is
/// accepted as the polynomial variable. Throws ParseError.
FieldPoly parse_poly(const FieldPtr& coeffs, std::string_view text,
                     const std::optional<std::string>& var = std::nullopt);
Field::Element parse_element(const FieldPtr& field, std::string_view text);

FieldPtr parse_descriptor(std::string_view text);
std::string format_descriptor(const Field& field);
FieldPtr read_descriptor_file(const std::string& path);
void write_descriptor_file(const std::string& path, const Field& field);

}  // namespace stickel

#endif
