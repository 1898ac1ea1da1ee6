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

#ifndef STICKEL_ERROR_HPP
#define STICKEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stickel {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define STICKEL_DEFINE_ERROR(Name, Parent)                                  \
    class Name : public Parent {                                            \
       public:                                                              \
        explicit Name(const std::string& what) : Parent(#Name ": " + what) {} \
    };

// Arithmetic
STICKEL_DEFINE_ERROR(NotInvertible, Error)
STICKEL_DEFINE_ERROR(DivisionByZero, Error)
STICKEL_DEFINE_ERROR(ContextMismatch, Error)
STICKEL_DEFINE_ERROR(NotPrime, Error)
STICKEL_DEFINE_ERROR(DegreeTooSmall, Error)
STICKEL_DEFINE_ERROR(ZeroDivisorEncountered, Error)

// Fields and factorization
STICKEL_DEFINE_ERROR(NotIrreducible, Error)
STICKEL_DEFINE_ERROR(NotSquarefree, Error)
STICKEL_DEFINE_ERROR(NotMonic, Error)
STICKEL_DEFINE_ERROR(RDoesNotDivide, Error)
STICKEL_DEFINE_ERROR(ZeroElement, Error)
STICKEL_DEFINE_ERROR(PreconditionViolated, Error)
STICKEL_DEFINE_ERROR(PropertyNotSatisfied, Error)

// Nonresidues and roots
STICKEL_DEFINE_ERROR(ZeroResolvent, Error)
STICKEL_DEFINE_ERROR(BadZeta, Error)
STICKEL_DEFINE_ERROR(BadFactorization, Error)
STICKEL_DEFINE_ERROR(NotAResidue, Error)
STICKEL_DEFINE_ERROR(TrialCapExceeded, Error)

// Field construction; these signal broken invariants rather than bad input.
STICKEL_DEFINE_ERROR(OrderMismatch, Error)
STICKEL_DEFINE_ERROR(AutomorphismInconsistent, Error)
STICKEL_DEFINE_ERROR(DimensionMismatch, Error)
STICKEL_DEFINE_ERROR(ConstructionFailed, Error)

// Text formats
STICKEL_DEFINE_ERROR(ParseError, Error)

#undef STICKEL_DEFINE_ERROR

}  // namespace stickel

#endif
