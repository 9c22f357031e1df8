// factorization.hpp
// Univariate factorization over Q: squarefree (Yun) decomposition, then
// factorization mod a suitable prime, Hensel lifting to a Mignotte-sized
// modulus, and naive subset recombination. Factors are returned as
// primitive integer polynomials with positive leading coefficient in a
// deterministic order (degree, then coefficient lex).

#pragma once

#include "smallzeros/unipoly.hpp"

#include <vector>

namespace smallzeros {

struct Factorization {
    Rat constant;                                    // f = constant * prod fac^mult
    std::vector<std::pair<UniPoly, unsigned>> factors;
};

Factorization factor_over_q(const UniPoly& f);

// Yun squarefree decomposition: f = c * prod part_i ^ i (monic parts over Q)
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

// Zassenhaus on a primitive squarefree integer polynomial with positive lc
std::vector<IntPoly> factor_squarefree_integer(const IntPoly& f);

// deterministic factor order
bool factor_less(const UniPoly& a, const UniPoly& b);

// test helper: exhaustive search for an integer factor of degree in
// [1, max_deg] with coefficients bounded by `coeff_bound`; returns true if
// one divides f (used as an independent irreducibility oracle at small size)
bool has_small_factor(const IntPoly& f, int max_deg, long coeff_bound);

}  // namespace smallzeros
