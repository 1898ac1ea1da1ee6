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


#include "stickel/trinomial.hpp"

namespace stickel {

ModElement swan_trinomial_discriminant(const Natural& n, const Natural& k, const ModElement& a,
                                       const ModElement& b) {
    if (!(a.modulus() == b.modulus())) throw ContextMismatch("trinomial coefficients modulo different moduli");
    if (k.is_zero() || !(k < n)) throw PreconditionViolated("trinomial needs n > k > 0");
    const Modulus& m = a.modulus();
    const Natural d = gcd(n, k);
    const Natural n1 = n / d;
    const Natural k1 = k / d;
    auto lift = [&](const Natural& v) { return ModElement(v % m.value(), m); };

    ModElement first = mod_pow(lift(n), n1) * mod_pow(b, n1 - k1);
    ModElement second = mod_pow(lift(n - k), n1 - k1) * mod_pow(lift(k), k1) * mod_pow(a, n1);
    // (-1)^(n1+1) is +1 exactly when n1 is odd.
    ModElement e = n1.is_odd() ? first + second : first - second;

    ModElement out = mod_pow(b, k - Natural(1)) * mod_pow(e, d);
    // n(n-1)/2 is odd exactly when n = 2 or 3 mod 4.
    const std::uint64_t n4 = n.mod_u64(4);
    if (n4 == 2 || n4 == 3) out = -out;
    return out;
}

}  // namespace stickel
