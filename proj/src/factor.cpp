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


#include "stickel/factor.hpp"

#include "stickel/resolvent.hpp"
#include "stickel/text.hpp"

namespace stickel {

bool is_squarefree(const FieldPoly& f) {
    if (f.degree() < 1) throw DegreeTooSmall("squarefreeness of a constant");
    const FieldPoly df = derivative(f);
    if (df.is_zero()) return false;
    return poly_gcd(f, df).degree() == 0;
}

DdfDecomposition ddf(const FieldPoly& f) {
    if (f.degree() < 1) throw DegreeTooSmall("factorization of a constant");
    if (!f.is_monic()) throw NotMonic(format_poly(f));
    if (!is_squarefree(f)) throw NotSquarefree(format_poly(f));
    const auto& k = f.ring();
    const Natural& q = k->order();
    const FieldPoly x = FieldPoly::x(k);
    DdfDecomposition parts;
    FieldPoly rest = f;
    FieldPoly frob = poly_mod(x, rest);  // x^(q^d) mod rest
    for (std::size_t d = 1; rest.degree() >= 1; ++d) {
        if (rest.degree() < static_cast<int>(2 * d)) {
            const auto n = static_cast<std::size_t>(rest.degree());
            parts.push_back({n, rest, 1});
            break;
        }
        frob = poly_powmod(frob, q, rest);
        FieldPoly g = poly_gcd(rest, frob - x);
        if (g.degree() > 0) {
            const auto n = static_cast<std::size_t>(g.degree());
            rest = poly_divmod(rest, g).quotient;
            frob = poly_mod(frob, rest);
            parts.push_back({d, std::move(g), n / d});
        }
    }
    return parts;
}

std::optional<PropertyWitness> check_property1(const FieldPoly& f, std::uint64_t r) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    if (f.degree() < 1) throw DegreeTooSmall("factor pattern of a constant");
    const FieldPoly g = monic(f);
    if (!is_squarefree(g)) throw NotSquarefree(format_poly(f));
    for (auto& part : ddf(g)) {
        if (part.d % r == 0 && part.count % r != 0) {
            return PropertyWitness{part.d, std::move(part.h), part.count, r, part.d / r};
        }
    }
    return std::nullopt;
}

int stickelberger_sign(const FieldPoly& f) {
    if (f.ring()->characteristic() == 2) throw PreconditionViolated("Stickelberger sign needs odd characteristic");
    if (f.degree() < 1) throw DegreeTooSmall("factor pattern of a constant");
    const FieldPoly g = monic(f);
    if (!is_squarefree(g)) throw NotSquarefree(format_poly(f));
    std::size_t s = 0;
    for (const auto& part : ddf(g)) s += part.count;
    const auto n = static_cast<std::size_t>(g.degree());
    return (n - s) % 2 == 0 ? 1 : -1;
}

FqElement derivative_qnr_witness(const FieldPtr& field) {
    if (field->is_prime_field()) throw PreconditionViolated("needs an extension field");
    const FieldPoly& f = field->defining_poly();
    if (f.degree() % 2 != 0) throw PreconditionViolated("defining polynomial has odd degree");
    const Natural qm1 = field->base()->order() - Natural(1);
    if (!(qm1 % Natural(4)).is_zero()) throw PreconditionViolated("4 does not divide q - 1");
    FqElement w(field, field->from_base_poly(derivative(f)));
    if (!is_nonresidue(w, 2)) throw OrderMismatch("derivative class is a square");
    return w;
}

FilterVerdict irreducibility_filter(const FieldPoly& f, std::uint64_t r, const FqElement& zeta) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r));
    const auto& k = f.ring();
    if (f.degree() < 1 || f.degree() % static_cast<int>(r) != 0) {
        throw PreconditionViolated("r must divide deg f");
    }
    require_resolvent_field(*k, r);
    const FieldPoly g = monic(f);
    if (!(*zeta.field == *k)) throw ContextMismatch("zeta is not in the coefficient field");
    const Field::Element& z = zeta.value;
    check_zeta(*k, z, r);
    const std::size_t d = static_cast<std::size_t>(g.degree());
    const Natural step = pow(k->order(), d / r);
    // For irreducible g some x^j with j < d has a nonzero resolvent, and that
    // resolvent is a unit of the field F_q[x]/(g).
    for (std::size_t power = 1; power < d; ++power) {
        const FieldPoly l = lagrange_sum(g, z, r, step, power);
        if (l.is_zero()) continue;
        if (poly_gcd(l, g).degree() > 0) return FilterVerdict::Reducible;
        const auto res = sylvester_resultant(g, l);
        return chi_r(FqElement(k, res), r).is_one() ? FilterVerdict::Reducible : FilterVerdict::Inconclusive;
    }
    return FilterVerdict::Reducible;
}

}  // namespace stickel
