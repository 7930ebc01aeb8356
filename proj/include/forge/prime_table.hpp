#pragma once

#include <cstdint>
#include <vector>

namespace forge {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;
};

// n = product of prime^exponent, primes strictly increasing; n = 1 gives an
// empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

// Least-prime-factor sieve up to a fixed limit. Immutable after
// construction; every query is read-only.
class PrimeTable {
public:
    explicit PrimeTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // least prime factor of n, 2 <= n <= limit
    std::uint32_t smallest_factor(std::uint64_t n) const;
    bool is_prime(std::uint64_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> lpf_;
};

PrimeTable sieve_primes(std::uint32_t limit);

Factorization factorize(std::uint64_t n, const PrimeTable& table);

// All divisors of a factored integer, in no particular order.
std::vector<std::uint64_t> divisors(const Factorization& f);

// Lambda(n) = log p when n = p^k, 0 otherwise. The table-free overload uses
// trial division and works for any 64-bit n.
double von_mangoldt(std::uint64_t n);
double von_mangoldt(std::uint64_t n, const PrimeTable& table);

// Omega(n): number of prime factors counted with multiplicity.
int prime_omega(std::uint64_t n);
int prime_omega(std::uint64_t n, const PrimeTable& table);

// lambda(n) = (-1)^Omega(n)
int liouville(std::uint64_t n);
int liouville(std::uint64_t n, const PrimeTable& table);

// |sum_{d|n} Lambda(d) - log n|
double mangoldt_divisor_identity_residual(std::uint64_t n, const PrimeTable& table);

}  // namespace forge
