#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "forge/prime_table.hpp"
#include "forge/series_value.hpp"

namespace forge {

// Quadratic number field Q(sqrt(d)), d squarefree, d != 0, 1. norm_limit
// bounds the prime-ideal norms enumerated for the prime bijection; 0 means
// "use the sieve limit".
struct QuadraticFieldSpec {
    std::int64_t d = -1;
    std::uint64_t norm_limit = 0;
};

enum class SplitType { split, inert, ramified };

// Splitting of the rational prime p in Q(sqrt(d)).
SplitType quadratic_split_type(std::int64_t d, std::uint64_t p);

// A generalized prime system: a completely multiplicative beta with
// beta(p) >= beta0 > 1 and beta(p) >= p^{1/D}. beta extends over the prime
// factorization carried by the shared PrimeTable. Immutable after
// construction.
class BeurlingSystem {
public:
    // beta(p); throws out_of_range once the norm list / table is exhausted
    double prime_beta(std::uint64_t p) const;
    double log_prime_beta(std::uint64_t p) const;

    double beta(std::uint64_t n) const;      // prod beta(p)^mu
    double log_beta(std::uint64_t n) const;  // sum mu log beta(p)

    double beta0() const { return beta0_; }
    double degree_bound() const { return degree_; }
    // upper bound for the divergence abscissa sigma_1 (1 for the built-in
    // systems, the degree bound for custom tables)
    double abscissa_bound() const { return abscissa_; }
    const std::string& label() const { return label_; }

    const PrimeTable& table() const { return *table_; }
    const std::shared_ptr<const PrimeTable>& table_ptr() const { return table_; }
    // number of leading primes with a defined beta value
    std::size_t covered_primes() const { return prime_beta_.size(); }

    friend BeurlingSystem classical_system(std::shared_ptr<const PrimeTable> table);
    friend BeurlingSystem quadratic_field_system(const QuadraticFieldSpec& spec,
                                                 std::shared_ptr<const PrimeTable> table);
    friend BeurlingSystem custom_system_from_file(const std::string& path,
                                                  std::shared_ptr<const PrimeTable> table);

private:
    BeurlingSystem() = default;
    void finalize_and_check();  // validates beta0, degree and per-prime bounds

    std::shared_ptr<const PrimeTable> table_;
    std::vector<double> prime_beta_;      // aligned with table().primes()
    std::vector<double> log_prime_beta_;  // log of the above
    double beta0_ = 2.0;
    double degree_ = 1.0;
    double abscissa_ = 1.0;
    std::string label_;
};

// beta(n) = n
BeurlingSystem classical_system(std::shared_ptr<const PrimeTable> table);

// beta assigns the ascending multiset of prime-ideal norms of Q(sqrt(d)) to
// the rational primes (split p contributes the norm p twice, inert p^2,
// ramified p once; ties listed consecutively).
BeurlingSystem quadratic_field_system(const QuadraticFieldSpec& spec,
                                      std::shared_ptr<const PrimeTable> table);

// File format: header `#beta0=<v> degree=<D>`, then `p beta_p` lines.
// Entries violating beta(p) >= max(beta0, p^{1/D}) are rejected.
BeurlingSystem custom_system_from_file(const std::string& path,
                                       std::shared_ptr<const PrimeTable> table);

// log beta(p) when n = p^k, 0 otherwise
double beur_von_mangoldt(const BeurlingSystem& system, std::uint64_t n);

// |sum_{d|n} Lambda_beta(d) - log beta(n)|
double beur_mangoldt_identity_residual(const BeurlingSystem& system, std::uint64_t n);

// Z(s) = sum_{n<=N} beta(n)^{-s} with the tail treatment of
// eval_dirichlet_truncated
SeriesValue zeta_system_eval(const BeurlingSystem& system, Complex s, std::int64_t n_terms);

// sum_{p<=N} beta(p)^{-sigma} for each sigma; every sigma must exceed the
// abscissa bound
std::vector<double> prime_sum_divergence_probe(const BeurlingSystem& system,
                                               std::span<const double> sigmas, std::uint64_t n_max);

}  // namespace forge
