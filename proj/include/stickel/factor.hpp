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
 * @file factor.hpp
 * @brief Squarefreeness, distinct-degree factorization and the
 * Stickelberger factor-pattern property.
 *
 * A squarefree f satisfies the property for a prime r when some degree d
 * with r | d has a number of degree-d irreducible factors not divisible by r.
 * The block h_d of those factors is what the nonresidue constructions
 * consume; individual irreducible factors are never needed.
 */

#ifndef STICKEL_FACTOR_HPP
#define STICKEL_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stickel/field.hpp"

namespace stickel {

/// f' = 0 counts as not squarefree. Requires deg f >= 1.
bool is_squarefree(const FieldPoly& f);

struct DdfPart {
    std::size_t d;      // common degree of the irreducible factors
    FieldPoly h;        // their product
    std::size_t count;  // deg(h) / d
};

/// Increasing d; the product of all parts is f.
using DdfDecomposition = std::vector<DdfPart>;

/// Requires f monic (NotMonic) and squarefree (NotSquarefree).
DdfDecomposition ddf(const FieldPoly& f);

struct PropertyWitness {
    std::size_t d;
    FieldPoly h;
    std::size_t count;
    std::uint64_t r;
    std::size_t k;  // d / r
};

/// Smallest qualifying degree, or nothing. f is made monic first.
/// Throws NotSquarefree, NotPrime.
std::optional<PropertyWitness> check_property1(const FieldPoly& f, std::uint64_t r);

/// (-1)^(n-s) for n = deg f and s the number of irreducible factors.
/// Requires odd characteristic and squarefree f (made monic first).
int stickelberger_sign(const FieldPoly& f);

/// The class of f' in K[x]/(f) for the top defining polynomial f of `field`,
/// checked to be a quadratic nonresidue. Requires deg f even and 4 | |K|-1.
FqElement derivative_qnr_witness(const FieldPtr& field);

enum class FilterVerdict { Reducible, Inconclusive };

/// Evaluates the resolvent resultant as if f were irreducible, using the
/// first power of x whose resolvent is nonzero. A trivial character, or a
/// resolvent sharing a factor with f, proves f reducible.
/// Requires r | deg f and gcd(2,r) r | q-1.
FilterVerdict irreducibility_filter(const FieldPoly& f, std::uint64_t r, const FqElement& zeta);

}  // namespace stickel

#endif
