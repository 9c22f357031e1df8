// constants.hpp
// The explicit bound constants: exact closed forms built from rational
// powers, so enclosures are refinable and equality cases stay decidable.
//
//   C2(N,M) = 2^(N-1) * ((M+2)/2)^((4M+1)(N-2)/(2M))
//                     * prod_{j=2}^{N} binom(M+j-2, j-2)^(1/(2M))
//   C1(N,M) = C2(N,M) * binom(M+N, N)^(1/(2M))

#pragma once

#include "smallzeros/certreal.hpp"

namespace smallzeros {

enum class ConstantTag { C1, C2 };

struct ConstantEnclosure {
    unsigned n = 0, m = 0;
    ConstantTag tag = ConstantTag::C2;
    CertReal value;

    DyInterval enclosure(long prec) const { return value.enclosure(prec); }
    bool exact_rational() const { return value.is_exact() && value.root_index() == 1; }
};

ConstantEnclosure constant_c1(unsigned n, unsigned m);  // N >= 2, M >= 1
ConstantEnclosure constant_c2(unsigned n, unsigned m);

}  // namespace smallzeros
