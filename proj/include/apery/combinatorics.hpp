#ifndef APERY_COMBINATORICS_HPP
#define APERY_COMBINATORICS_HPP

#include "apery/exactnum.hpp"

#include <vector>

namespace apery {

/// C(n, k); zero when k > n.
Int binom(unsigned long n, unsigned long k);

/// Generalized harmonic number H_r^(order) = sum_{m=1..r} 1/m^order, order in {2, 3}.
/// Values are memoized; the table is safe to read and extend concurrently.
Rat harmonic(unsigned long r, unsigned order);

/// LCM(1, ..., n) together with its cube.
struct Dn {
    unsigned long n;
    Int value;
    Int cube;
};

/// Incremental LCM, memoized. Requires n >= 1.
const Dn& d(unsigned long n);

/// Independent route: product over primes p <= n of the largest p^a <= n.
Int lcm_prime_power(unsigned long n);

/// Primes <= n by the sieve of Eratosthenes.
std::vector<unsigned long> primes_up_to(unsigned long n);

}  // namespace apery

#endif  // APERY_COMBINATORICS_HPP
