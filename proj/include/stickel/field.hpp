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
 * @file field.hpp
 * @brief Explicit finite fields given as towers of defining polynomials.
 *
 * A Field is either a prime field F_p or an extension K[y]/(h) of a field K
 * one level below. Elements are flat coordinate vectors over F_p whose
 * length is the absolute degree. An element of level i is the sequence of
 * its coefficients over level i-1, each stored contiguously, so an element
 * of an ancestor embeds by zero padding and the constant coefficient of
 * every level sits at the front.
 *
 * Fields are immutable and always held through FieldPtr. Two fields compare
 * equal when they have the same characteristic and the same chain of
 * defining polynomials.
 *
 * The characteristic must fit in 63 bits so that residue arithmetic can use
 * machine words with 128-bit products.
 */

#ifndef STICKEL_FIELD_HPP
#define STICKEL_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "stickel/natural.hpp"
#include "stickel/poly.hpp"

namespace stickel {

class Field;
using FieldPtr = std::shared_ptr<const Field>;
using FieldPoly = Poly<Field>;

class Field : public std::enable_shared_from_this<Field> {
   public:
    using Element = boost::container::small_vector<std::uint64_t, 4>;
    static constexpr bool is_field = true;

    /// F_p. Throws NotPrime, or PreconditionViolated when p >= 2^63.
    static FieldPtr prime(std::uint64_t p);
    /// base[y]/(h). h must be monic over base and irreducible (NotMonic,
    /// NotIrreducible); a degree-one h gives a relabelled copy of base.
    static FieldPtr extend(const FieldPtr& base, const FieldPoly& h);
    /// As extend, but trusts the caller that h is irreducible.
    static FieldPtr extend_trusted(const FieldPtr& base, const FieldPoly& h);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint64_t characteristic() const noexcept { return p_; }
    /// Number of elements.
    const Natural& order() const noexcept { return order_; }
    /// Degree over the level below (1 for a prime field).
    std::size_t degree() const noexcept { return degree_; }
    /// Degree over F_p.
    std::size_t absolute_degree() const noexcept { return abs_degree_; }
    /// 0 for a prime field.
    std::size_t level() const noexcept { return level_; }
    bool is_prime_field() const noexcept { return level_ == 0; }
    /// Null for a prime field.
    const FieldPtr& base() const noexcept { return base_; }
    FieldPtr ancestor(std::size_t level) const;
    FieldPtr prime_field() const { return ancestor(0); }
    FieldPtr self() const { return shared_from_this(); }
    /// Defining polynomial over base(); throws for a prime field.
    const FieldPoly& defining_poly() const;

    /// Generator names by level: x, y, z, then x4, x5, ...
    static std::string variable_name(std::size_t level);
    std::string variable() const { return variable_name(level_); }

    Element zero() const { return Element(abs_degree_, 0); }
    Element one() const;
    Element from_int(std::int64_t n) const;
    Element from_u64(std::uint64_t n) const;
    /// Class of the variable; throws for a prime field.
    Element generator() const;
    /// Elements in representation order: base-p digits of idx become the
    /// coordinates, least significant first.
    Element from_index(const Natural& idx) const;
    Natural to_index(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, std::uint64_t s) const;
    bool is_zero(const Element& a) const noexcept;
    bool is_one(const Element& a) const noexcept;
    bool equal(const Element& a, const Element& b) const noexcept { return a == b; }
    std::optional<Element> try_inverse(const Element& a) const;
    /// Throws ZeroElement for 0.
    Element inverse(const Element& a) const;
    Element pow(const Element& a, const Natural& e) const;
    std::string format(const Element& a) const;

    /// Coefficients over base(); inverse of join.
    std::vector<Element> split(const Element& a) const;
    Element join(std::span<const Element> coeffs) const;
    FieldPoly to_base_poly(const Element& a) const;
    /// Reduces modulo the defining polynomial.
    Element from_base_poly(const FieldPoly& f) const;

    /// Embeds an element of an ancestor (ContextMismatch otherwise).
    Element embed(const Field& ancestor, const Element& a) const;
    bool lies_in(const Field& ancestor, const Element& a) const;
    /// Inverse of embed; throws PreconditionViolated if a is outside ancestor.
    Element project(const Field& ancestor, const Element& a) const;
    /// True when ancestor is this field or one of its ancestors.
    bool has_ancestor(const Field& ancestor) const;

    void check_element(const Element& a) const;

    friend bool operator==(const Field& a, const Field& b);

   private:
    struct Token {};

   public:
    Field(Token, std::uint64_t p);
    Field(Token, FieldPtr base, FieldPoly h);

   private:
    Element mul_over_prime(const Element& a, const Element& b) const;
    Element mul_generic(const Element& a, const Element& b) const;

    std::uint64_t p_;
    std::size_t level_ = 0;
    std::size_t degree_ = 1;
    std::size_t abs_degree_ = 1;
    Natural order_;
    FieldPtr base_;
    std::shared_ptr<const FieldPoly> h_;
    std::vector<std::uint64_t> h_prime_;  // coefficients of h when base is prime
    std::vector<Element> h_blocks_;       // coefficients of h as base elements
};

using FieldDescriptor = Field;

/// An element together with its field.
struct FqElement {
    FieldPtr field;
    Field::Element value;

    FqElement() = default;
    FqElement(FieldPtr f, Field::Element v);
    static FqElement from_int(const FieldPtr& f, std::int64_t n);

    bool is_zero() const { return field->is_zero(value); }
    bool is_one() const { return field->is_one(value); }
    std::string to_string() const { return field->format(value); }

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    friend FqElement operator/(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a);
    friend bool operator==(const FqElement& a, const FqElement& b);
};

FqElement fq_pow(const FqElement& a, const Natural& e);
FqElement fq_inverse(const FqElement& a);

/// N(a) = a^((Q-1)/(q-1)) where Q = |field of a| = q^k. The result is
/// asserted to lie in F_q and returned in a's field.
FqElement norm(const FqElement& a, std::uint64_t k);
/// a^((Q-1)/r). Throws RDoesNotDivide, ZeroElement, NotPrime (r not prime).
FqElement chi_r(const FqElement& a, std::uint64_t r);
bool is_nonresidue(const FqElement& a, std::uint64_t r);

/// Rabin's test over the coefficient field of f.
bool is_irreducible(const FieldPoly& f);

/// Least monic annihilator of a over the field one level below (over F_p
/// for a prime field).
FieldPoly minimal_polynomial(const FqElement& a);
/// Least monic annihilator of a over the given ancestor of its field.
FieldPoly minimal_polynomial_over(const FqElement& a, const FieldPtr& ancestor);

/// The field as a single-step extension of an ancestor.
struct Flattening {
    FieldPoly defining;   // minimal polynomial of `primitive` over the ancestor
    FqElement primitive;  // generator image in the original field
};
/// Finds a primitive element over the ancestor (the top generator first,
/// then elements in representation order) and returns its minimal polynomial.
Flattening flatten(const FieldPtr& field, const FieldPtr& ancestor);

/// Monic polynomials over f of degree d in representation order, from index idx.
FieldPoly monic_from_index(const FieldPtr& f, std::size_t d, const Natural& idx);
/// First monic irreducible polynomial of degree d in representation order.
FieldPoly first_irreducible(const FieldPtr& f, std::size_t d);

}  // namespace stickel

#endif
