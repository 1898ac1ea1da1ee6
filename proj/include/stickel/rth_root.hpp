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
 * @file rth_root.hpp
 * @brief Primitive r-th roots of unity and r-th roots in explicit fields.
 */

#ifndef STICKEL_RTH_ROOT_HPP
#define STICKEL_RTH_ROOT_HPP

#include <cstdint>
#include <vector>

#include "stickel/field.hpp"

namespace stickel {

/// Trial cap of find_zeta_bruteforce: STICKEL_TRIAL_CAP if set, else 10^6.
std::uint64_t zeta_trial_cap();

/// a^((q-1)/r) for the first a = 1, 2, ... (representation order) with a
/// nontrivial character. Throws RDoesNotDivide, NotPrime, TrialCapExceeded.
FqElement find_zeta_bruteforce(const FieldPtr& field, std::uint64_t r);

struct ZetaSearch {
    FqElement zeta;
    std::size_t scanned;  // nonzero elements examined
};

/// Scans at most t + 1 nonzero elements for a with a^t != 1, then returns
/// (a^t)^(r^(s-1)) where r^s is the order of a^t. Requires q - 1 = r^e t
/// with e >= 1 and r not dividing t (BadFactorization).
ZetaSearch sze_zeta_search(const FieldPtr& field, std::uint64_t r, const Natural& t);
FqElement sze_zeta(const FieldPtr& field, std::uint64_t r, const Natural& t);

/// An r-th nonresidue together with the data r-th root extraction needs.
class RootContext {
   public:
    /// Throws NotPrime, RDoesNotDivide, PreconditionViolated (eta is a residue).
    RootContext(FieldPtr field, std::uint64_t r, FqElement eta);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t r() const noexcept { return r_; }
    const FqElement& eta() const noexcept { return eta_; }
    /// q - 1 = u r^t with r not dividing u.
    const Natural& u() const noexcept { return u_; }
    std::size_t t() const noexcept { return t_; }
    /// eta^u, of order r^t.
    const FqElement& sylow_generator() const noexcept { return g_; }
    /// The primitive r-th root g^(r^(t-1)).
    const FqElement& zeta() const noexcept { return zeta_; }

    /// Exponent i < r with zeta^i = z, or throws OrderMismatch.
    std::uint64_t log_zeta(const FqElement& z) const;

   private:
    FieldPtr field_;
    std::uint64_t r_;
    FqElement eta_;
    Natural u_;
    std::size_t t_ = 0;
    FqElement g_;
    FqElement zeta_;
    std::vector<FqElement> table_;  // zeta^i, i < r
};

/// Some x with x^r = a; 0 for a = 0. Throws NotAResidue.
FqElement amm_rth_root(const RootContext& ctx, const FqElement& a);
/// All r roots, the amm_rth_root one first.
std::vector<FqElement> all_rth_roots(const RootContext& ctx, const FqElement& a);

/**
 * r-th root of a in F_(p^m), the field of a, with the nonresidue built from
 * the field's own minimal polynomial over F_p. Requires r | m and r | p - 1;
 * r = 2 with p = 3 mod 4 is refused (PreconditionViolated), since the
 * resolvent identity needs 4 | p - 1 there.
 */
FqElement cor13_pipeline(const FqElement& a, std::uint64_t r);

}  // namespace stickel

#endif
