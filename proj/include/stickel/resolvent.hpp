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
 * @file resolvent.hpp
 * @brief Nonresidues from Lagrange resolvents and resultants.
 *
 * For an irreducible f of degree d = r k over F_q and a primitive r-th root
 * of unity zeta in F_q, the resolvent L = sum_i x^(q^(k i)) zeta^i mod f
 * satisfies L^((q^d - 1)/r) = zeta^(-1) in F_q[x]/(f), so its norm
 * R(f, L) is an r-th nonresidue of F_q. The same resultant over a block of
 * r' such factors (r not dividing r') has character zeta^(-r').
 *
 * L can vanish: the map y -> sum_i y^(q^(k i)) zeta^i is F_q-linear with a
 * kernel of dimension d - k, and x may lie in it (x^3+5x^2+6x+5 over F_7
 * with zeta = 2). The functions taking x as given raise ZeroResolvent then.
 * nonresidue_from_block instead moves on to x^2, x^3, ..., splitting the
 * block by gcd with the resolvent, which always succeeds because 1, x, ...,
 * x^(d-1) span F_q[x]/(f) and 1 lies in the kernel.
 *
 * Every construction here re-checks its defining identity and raises
 * OrderMismatch if it fails, so a returned value is always verified.
 */

#ifndef STICKEL_RESOLVENT_HPP
#define STICKEL_RESOLVENT_HPP

#include <cstdint>

#include "stickel/factor.hpp"
#include "stickel/field.hpp"

namespace stickel {

/// Throws NotPrime, or PreconditionViolated unless gcd(2, r) r divides |k| - 1.
void require_resolvent_field(const Field& k, std::uint64_t r);
/// Throws BadZeta unless zeta^r = 1 and zeta != 1.
void check_zeta(const Field& k, const Field::Element& zeta, std::uint64_t r);
/// sum_{i<r} y^(v^i) zeta^i reduced modulo f, for y = x^power.
FieldPoly lagrange_sum(const FieldPoly& f, const Field::Element& zeta, std::uint64_t r, const Natural& v,
                       std::size_t power = 1);

class ResolventContext {
   public:
    /// Validates r, zeta and the block (PropertyNotSatisfied when r does
    /// not divide d or r divides the factor count).
    ResolventContext(FieldPtr field, std::uint64_t r, FqElement zeta, PropertyWitness block);
    /// Runs check_property1 on f.
    static ResolventContext from_polynomial(FieldPtr field, std::uint64_t r, FqElement zeta, const FieldPoly& f);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t r() const noexcept { return r_; }
    const FqElement& zeta() const noexcept { return zeta_; }
    const PropertyWitness& block() const noexcept { return block_; }
    /// q^k, the Frobenius step of the resolvent.
    const Natural& step() const noexcept { return step_; }

   private:
    FieldPtr field_;
    std::uint64_t r_;
    FqElement zeta_;
    PropertyWitness block_;
    Natural step_;
};

/// L in F_q[x]/(fi) for an irreducible fi of the block degree, built from
/// x^power. Throws NotIrreducible, ZeroResolvent, OrderMismatch.
FqElement lagrange_resolvent(const ResolventContext& ctx, const FieldPoly& fi, std::size_t power = 1);
/// R(fi, L); its character is zeta^(-1).
FqElement nonresidue_from_irreducible(const ResolventContext& ctx, const FieldPoly& fi, std::size_t power = 1);
/// R(h, g mod h) over the whole block h; its character is zeta^(-r').
/// Throws ZeroResolvent when the resolvent vanishes modulo some factor.
FqElement nonresidue_from_property1(const ResolventContext& ctx);

struct BlockNonresidue {
    FqElement value;    // R(h, g mod h), character zeta^(-count)
    FieldPoly h;        // sub-block actually used
    std::size_t count;  // its number of factors, prime to r
    std::size_t power;  // resolvent built from x^power
};
/// As nonresidue_from_property1, but never stops at a vanishing resolvent.
BlockNonresidue nonresidue_from_block(const ResolventContext& ctx);

/**
 * Nonresidue of `target`, an extension of degree n of the prime field of f.
 * For r | n the resolvent is formed in the target itself from a primitive
 * element over F_p; otherwise the F_p nonresidue R(g, f) is embedded, which
 * stays a nonresidue because (p^n - 1)/(p - 1) is prime to r.
 * For r = 2 and p = 3 mod 4, -1 is returned when n is odd; even n is
 * outside the construction (PreconditionViolated).
 */
FqElement bims(const FieldPoly& f, const FqElement& zeta, std::uint64_t r, const FieldPtr& target);

/// Moves a nonresidue a of K into `target`, a single extension of K of
/// degree l: embedded as is when r does not divide l, otherwise rebuilt as a
/// resolvent in the target (which needs zeta in K and gcd(2,r) r | |K| - 1).
FqElement lift_nonresidue(const FqElement& a, const FqElement& zeta, std::uint64_t r, const FieldPtr& target);

}  // namespace stickel

#endif
