#include "forge/prime_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace forge {

PrimeTable::PrimeTable(std::uint32_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    lpf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    // linear sieve: every composite is crossed exactly once, by its least
    // prime factor
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (lpf_[i] == 0) {
            lpf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            if (p > lpf_[i]) break;
            const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (ip > limit) break;
            lpf_[static_cast<std::size_t>(ip)] = p;
        }
    }
}

std::uint32_t PrimeTable::smallest_factor(std::uint64_t n) const {
    if (n < 2 || n > limit_)
        throw std::out_of_range("PrimeTable::smallest_factor: n=" + std::to_string(n) +
                                " outside [2, " + std::to_string(limit_) + "]");
    return lpf_[static_cast<std::size_t>(n)];
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n > limit_)
        throw std::out_of_range("PrimeTable::is_prime: n exceeds table limit");
    return lpf_[static_cast<std::size_t>(n)] == n;
}

PrimeTable sieve_primes(std::uint32_t limit) { return PrimeTable(limit); }

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > table.limit())
        throw std::out_of_range("factorize: n=" + std::to_string(n) +
                                " exceeds table limit " + std::to_string(table.limit()));
    Factorization f;
    f.n = n;
    while (n > 1) {
        const std::uint64_t p = table.smallest_factor(n);
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        f.factors.push_back({p, k});
    }
    return f;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, k] : f.factors) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (int j = 1; j <= k; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

namespace {

// Returns p if n = p^k (k >= 1), 0 otherwise, by trial division.
std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        return n == 1 ? d : 0;
    }
    return n;  // n itself is prime
}

std::uint64_t prime_power_base(std::uint64_t n, const PrimeTable& table) {
    if (n < 2) return 0;
    const std::uint64_t p = table.smallest_factor(n);
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

}  // namespace

double von_mangoldt(std::uint64_t n) {
    const std::uint64_t p = prime_power_base(n);
    return p ? std::log(static_cast<double>(p)) : 0.0;
}

double von_mangoldt(std::uint64_t n, const PrimeTable& table) {
    const std::uint64_t p = prime_power_base(n, table);
    return p ? std::log(static_cast<double>(p)) : 0.0;
}

int prime_omega(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("prime_omega: n must be positive");
    int omega = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            n /= d;
            ++omega;
        }
    }
    if (n > 1) ++omega;
    return omega;
}

int prime_omega(std::uint64_t n, const PrimeTable& table) {
    if (n == 0) throw std::invalid_argument("prime_omega: n must be positive");
    int omega = 0;
    while (n > 1) {
        n /= table.smallest_factor(n);
        ++omega;
    }
    return omega;
}

int liouville(std::uint64_t n) { return prime_omega(n) % 2 == 0 ? 1 : -1; }

int liouville(std::uint64_t n, const PrimeTable& table) {
    return prime_omega(n, table) % 2 == 0 ? 1 : -1;
}

double mangoldt_divisor_identity_residual(std::uint64_t n, const PrimeTable& table) {
    const Factorization f = factorize(n, table);
    double sum = 0.0;
    for (std::uint64_t d : divisors(f)) sum += von_mangoldt(d, table);
    return std::abs(sum - std::log(static_cast<double>(n)));
}

}  // namespace forge
