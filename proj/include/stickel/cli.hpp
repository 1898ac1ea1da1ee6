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
 * @file cli.hpp
 * @brief The stickel batch command line and its experiment kernels.
 *
 * Subcommands: nonresidue, root, build-field, ddf, check-property,
 * trinomial-search and least-nonresidue. Exit status 0 means success,
 * 1 that the mathematical property asked for does not hold (no Property-1
 * witness, a nonresidue given to root), 2 invalid input. Results go to
 * stdout as text or CSV, or as JSON with --json; elapsed time goes to
 * stderr only, so stdout is byte-identical across runs and --jobs values.
 */

#ifndef STICKEL_CLI_HPP
#define STICKEL_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stickel::cli {

/// ceil(ln(p)^2), the box size of the trinomial family.
std::uint64_t default_trinomial_bound(std::uint64_t p);

struct TrinomialHit {
    std::uint64_t index;  // 1-based position in the scan order
    std::uint64_t i, k, a, b;
};

struct TrinomialScan {
    std::uint64_t p = 0;
    std::uint64_t bound = 0;
    std::uint64_t scanned = 0;
    std::uint64_t zero_discriminant = 0;
    std::uint64_t hits = 0;
    bool complete = false;  // false when the scan stopped at the first hit
    std::optional<TrinomialHit> first;
};

/**
 * Scans x^(2i) + a x^k + b, 1 <= i,k,a,b <= bound, 2i > k, in lexicographic
 * order of (i, k, a, b). A tuple is a hit when the discriminant is a
 * nonsquare; the first hit is confirmed by check_property1 with r = 2
 * (OrderMismatch if that fails). Requires an odd prime p >= 5.
 */
TrinomialScan trinomial_search(std::uint64_t p, std::uint64_t bound, unsigned jobs, bool stop_at_first);

/// Least a >= 2 with a^((p-1)/r) != 1 mod p. Requires r | p - 1.
std::uint64_t least_nonresidue(std::uint64_t p, std::uint64_t r);

struct LeastNonresidueRow {
    std::uint64_t p;
    std::uint64_t n;
};
/// Rows for all primes p <= pmax with r | p - 1, in increasing p.
std::vector<LeastNonresidueRow> least_nonresidue_table(std::uint64_t r, std::uint64_t pmax, unsigned jobs);

/// Parses and runs one command line (args excludes the program name) and
/// returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stickel::cli

#endif
