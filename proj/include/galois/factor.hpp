// Complete factorization over Q: squarefree split plus Zassenhaus
// (mod-p Cantor-Zassenhaus, quadratic Hensel lifting, bounded recombination
// with a degree-set sieve across several primes).

#pragma once

#include "galois/qpoly.hpp"

namespace galois {

// [OP] factor_q: monic irreducible factors with multiplicities.
// The product of factors to multiplicities, times lead(p), equals p.
// Throws domain_error on the zero polynomial.
std::vector<std::pair<QPoly, int>> factor_q(const QPoly& p);

bool is_irreducible(const QPoly& p);

// n-th cyclotomic polynomial (integer coefficients, monic).
QPoly cyclotomic(int n);

}  // namespace galois
