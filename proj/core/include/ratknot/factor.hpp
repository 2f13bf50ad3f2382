#pragma once

#include <utility>
#include <vector>

#include "ratknot/fraction.hpp"

namespace ratknot {

// Below this bound factorization is a lookup in a smallest-prime-factor sieve.
inline constexpr unsigned long kSieveLimit = 1'000'000;

// Miller-Rabin with the first 13 prime bases, which is a proof of primality
// below 3.3e24. Above that the answer is probable-prime only.
bool is_prime(const Integer& n);

// Prime factorization of n >= 1 with ascending primes. Sieve, then trial
// division, then Pollard rho (Brent) for large cofactors.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

Integer euler_phi(const Integer& n);
// Number of distinct prime divisors.
int omega(const Integer& n);

}  // namespace ratknot
