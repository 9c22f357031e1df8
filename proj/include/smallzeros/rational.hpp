// rational.hpp
// Small helpers around GMP rationals/integers shared across modules.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace smallzeros {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text);   // "p" or "p/q"
std::string rat_str(const Rat& q);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);

// gcd of numerators over lcm of denominators; content(0-vector) = 0
Rat rational_content(const std::vector<Rat>& v);

// p-adic valuation of a nonzero rational
long padic_valuation(const Rat& a, const Int& p);

// prime factorization of |n|, n != 0 (trial division + Pollard rho)
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

}  // namespace smallzeros
