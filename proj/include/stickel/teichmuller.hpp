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
 * @file teichmuller.hpp
 * @brief Field construction without roots of unity in the base field.
 *
 * F_q[zeta] = F_q[Y]/(1 + Y + ... + Y^(r-1)) carries a virtual primitive
 * r-th root of unity. The resultant of a Property-1 block against a
 * resolvent taken over this ring yields delta, and from it the Teichmuller
 * generator c. Adjoining X with X^N = c (N a power of r) and taking the
 * elements fixed by the automorphisms zeta -> zeta^b, X -> X^w(b) gives a
 * field of degree N over F_q, whose primitive element's minimal polynomial
 * is the constructed irreducible.
 *
 * Every stated property (orders of delta and c, the action of the
 * automorphisms, dimension and irreducibility of the result) is checked.
 */

#ifndef STICKEL_TEICHMULLER_HPP
#define STICKEL_TEICHMULLER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stickel/factor.hpp"
#include "stickel/field.hpp"

namespace stickel {

/// F_q[Y]/(Phi_r(Y)), elements as r - 1 coefficients over F_q in the basis
/// 1, zeta, ..., zeta^(r-2).
class CycRing {
   public:
    using Element = std::vector<Field::Element>;
    static constexpr bool is_field = false;

    /// Throws NotPrime, or PreconditionViolated when r divides q.
    CycRing(FieldPtr base, std::uint64_t r);

    const FieldPtr& base() const noexcept { return base_; }
    std::uint64_t r() const noexcept { return r_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(r_ - 1); }

    Element zero() const;
    Element one() const;
    Element from_int(std::int64_t n) const;
    Element from_base(const Field::Element& a) const;
    Element zeta() const;
    /// zeta^i for any integer exponent class i mod r.
    Element zeta_pow(std::uint64_t i) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Field::Element& s) const;
    Element pow(const Element& a, const Natural& e) const;
    bool is_zero(const Element& a) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }
    /// Nothing for zero divisors.
    std::optional<Element> try_inverse(const Element& a) const;
    std::string format(const Element& a) const;

    /// rho_a: zeta -> zeta^a, identity on F_q. a must be prime to r.
    Element apply(std::uint64_t a, const Element& v) const;
    /// True when v lies in F_q.
    bool is_constant(const Element& v) const;
    /// True when every rho_a fixes v.
    bool is_fixed(const Element& v) const;

    friend bool operator==(const CycRing& a, const CycRing& b) { return *a.base_ == *b.base_ && a.r_ == b.r_; }

   private:
    // Folds a length-r vector modulo Y^r - 1 into the reduced basis.
    Element reduce(std::vector<Field::Element> full) const;

    FieldPtr base_;
    std::uint64_t r_;
};

using CycPoly = Poly<CycRing>;

/// Multiplicative order of q modulo r.
std::uint64_t order_mod(const Natural& q, std::uint64_t r);
/// a^(r^(t-1)) mod r^t.
Natural omega(const Natural& a, std::uint64_t r, std::size_t t);
/// A generator of (Z/r)^*.
std::uint64_t primitive_root_mod(std::uint64_t r);

/// Scalars and units of the construction for one Property-1 block.
struct TeichmullerContext {
    explicit TeichmullerContext(PropertyWitness w) : block(std::move(w)), seed(FieldPoly::x(block.h.ring())) {}

    FieldPtr field;
    std::uint64_t r = 0;
    std::shared_ptr<const CycRing> ring;
    PropertyWitness block;
    std::uint64_t e = 0;      // order of q mod r
    std::uint64_t ell = 0;    // gcd(d, e)
    std::uint64_t k_prime = 0;  // (d / r) / ell
    std::uint64_t r_prime = 0;  // factor count of the block
    Natural u;                // q^e - 1 = u r^t
    std::size_t t = 0;
    std::uint64_t r_dprime = 0;  // (r' ell)^(-1) mod r
    FieldPoly seed;              // y in the resolvent, a residue mod h
    CycRing::Element resultant;
    CycRing::Element delta;
    CycRing::Element c;

    /// Runs check_property1 and the whole construction of delta and c.
    /// The seed is x, then x^j (j < d), then monic residues of growing
    /// degree, up to kSeedTries candidates.
    /// Throws PropertyNotSatisfied, ZeroDivisorEncountered, OrderMismatch.
    static TeichmullerContext build(const FieldPoly& f, std::uint64_t r);
    static constexpr std::size_t kSeedTries = 512;
};

/// sum_i y^(q^(e k' i)) zeta^i mod h, over the ring.
CycPoly ring_resolvent(const std::shared_ptr<const CycRing>& ring, const FieldPoly& h, const Natural& step,
                       const FieldPoly& y);
/// R(h, g mod h) over F_q[zeta]; checks R^((q^e-1)/r) = zeta^(-r' ell).
/// Throws ZeroDivisorEncountered when R is not a unit.
CycRing::Element resolvent_over_ring(const TeichmullerContext& ctx, const FieldPoly& y);
/// R^(u r''), checked to satisfy delta^(r^(t-1)) = zeta^(-1).
CycRing::Element compute_delta(const TeichmullerContext& ctx);
/// prod_a rho_a^(-1)(delta^omega(a)); checks c^(r^(t-1)) = zeta, the order
/// r^t, and rho_b(c) = c^omega(b).
CycRing::Element compute_c(const TeichmullerContext& ctx);

/// F_q[zeta][X]/(X^N - c) with the automorphisms rho_b.
class ExtensionRing {
   public:
    using Element = std::vector<CycRing::Element>;  // N coefficients in X

    /// N must be a power of r. Throws AutomorphismInconsistent.
    ExtensionRing(std::shared_ptr<const CycRing> ring, CycRing::Element c, std::size_t t, std::size_t n);

    const CycRing& ring() const noexcept { return *ring_; }
    std::size_t degree() const noexcept { return n_; }
    /// Dimension over F_q, N (r - 1).
    std::size_t dimension() const noexcept { return n_ * ring_->dimension(); }
    /// Exponent w(b) = b^(r^(t+E-1)) mod r^(t+E) with X -> X^w(b).
    const Natural& exponent(std::uint64_t b) const { return exponents_.at(b); }

    Element zero() const;
    Element one() const;
    Element x() const;
    Element from_cyc(const CycRing::Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, const CycRing::Element& s) const;
    Element pow(const Element& a, const Natural& e) const;
    /// X^e reduced with X^N = c.
    Element x_pow(const Natural& e) const;
    bool is_zero(const Element& a) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element apply(std::uint64_t b, const Element& v) const;

    std::vector<Field::Element> flatten(const Element& a) const;
    Element unflatten(const std::vector<Field::Element>& coords) const;

   private:
    std::shared_ptr<const CycRing> ring_;
    CycRing::Element c_;
    std::size_t n_;
    std::vector<Natural> exponents_;       // indexed by b, entry 0 unused
    std::vector<std::vector<Element>> x_images_;  // x_images_[b][i] = rho_b(X)^i
};

/// Builds the ring for N = r^E from a context and checks the automorphisms.
ExtensionRing build_extension_ring(const TeichmullerContext& ctx, std::size_t n);

struct FixedSubfield {
    std::vector<ExtensionRing::Element> basis;
    ExtensionRing::Element primitive;
    FieldPoly min_poly;  // of `primitive` over F_q, degree N, irreducible
};

/// The subring fixed by every rho_b, computed as the kernel of rho_b0 - 1
/// for a generator b0. Throws DimensionMismatch, NotIrreducible.
FixedSubfield fixed_subring(const ExtensionRing& ext);

/// An irreducible polynomial of degree r over the coefficient field of f,
/// from the fixed subring of F_q[zeta][c^(1/r)].
FieldPoly build_field_extension(const FieldPoly& f, std::uint64_t r);

/**
 * An irreducible polynomial of degree m = r^E over the coefficient field
 * of f, which must satisfy Property 1 for r. Tried in order: X^m - a for a
 * nonresidue a when r | q - 1; the fixed subring of F_q[zeta][X]/(X^m - c);
 * building F_(q^r) first and recursing over it. The result is always checked
 * with the irreducibility test. Throws ConstructionFailed.
 */
FieldPoly build_rpower_field(const FieldPoly& f, std::uint64_t r, std::uint64_t m);

}  // namespace stickel

#endif
