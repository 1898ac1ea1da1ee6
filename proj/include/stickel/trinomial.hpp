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


#ifndef STICKEL_TRINOMIAL_HPP
#define STICKEL_TRINOMIAL_HPP

#include "stickel/natural.hpp"

namespace stickel {

/**
 * Discriminant of x^n + a x^k + b modulo p by a closed form:
 *
 *   (-1)^(n(n-1)/2) b^(k-1) E^d,
 *   E = n^n1 b^(n1-k1) + (-1)^(n1+1) (n-k)^(n1-k1) k^k1 a^n1,
 *
 * with d = gcd(n, k), n = n1 d, k = k1 d. Only exponentiations, so n may be
 * far too large for any dense representation. Requires n > k > 0.
 */
ModElement swan_trinomial_discriminant(const Natural& n, const Natural& k, const ModElement& a,
                                       const ModElement& b);

}  // namespace stickel

#endif
