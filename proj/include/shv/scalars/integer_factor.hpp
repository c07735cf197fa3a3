#pragma once

#include <gmpxx.h>

#include <vector>

namespace shv {

// Prime factorisation of |n| (n != 0) as a sorted list with repetition.
// Trial division for small factors, Pollard-Brent rho for the rest.
std::vector<mpz_class> prime_factors(const mpz_class& n);

// All positive divisors of |n|, ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace shv
