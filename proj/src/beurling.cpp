#include "forge/beurling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "forge/coefficients.hpp"
#include "forge/series_eval.hpp"

namespace forge {

namespace {

std::uint64_t powmod_small(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = static_cast<std::uint64_t>((static_cast<__uint128_t>(r) * base) % m);
        base = static_cast<std::uint64_t>((static_cast<__uint128_t>(base) * base) % m);
        exp >>= 1;
    }
    return r;
}

bool squarefree(std::int64_t d) {
    std::uint64_t n = static_cast<std::uint64_t>(d < 0 ? -d : d);
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
        while (n % q == 0) n /= q;
    }
    return true;
}

}  // namespace

SplitType quadratic_split_type(std::int64_t d, std::uint64_t p) {
    if (p == 2) {
        const std::int64_t m8 = ((d % 8) + 8) % 8;
        if (m8 % 4 != 1) return SplitType::ramified;  // disc = 4d
        return m8 == 1 ? SplitType::split : SplitType::inert;
    }
    const std::int64_t dm = ((d % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                            static_cast<std::int64_t>(p);
    if (dm == 0) return SplitType::ramified;
    // Euler's criterion
    const std::uint64_t ls = powmod_small(static_cast<std::uint64_t>(dm), (p - 1) / 2, p);
    return ls == 1 ? SplitType::split : SplitType::inert;
}

void BeurlingSystem::finalize_and_check() {
    if (!(beta0_ > 1.0))
        throw std::invalid_argument("BeurlingSystem: beta0 must exceed 1");
    if (degree_ < 1.0)
        throw std::invalid_argument("BeurlingSystem: degree bound must be >= 1");
    const auto& primes = table_->primes();
    log_prime_beta_.resize(prime_beta_.size());
    for (std::size_t i = 0; i < prime_beta_.size(); ++i) {
        const double b = prime_beta_[i];
        const double p = static_cast<double>(primes[i]);
        if (!(b >= beta0_))
            throw std::invalid_argument("BeurlingSystem: beta(" + std::to_string(primes[i]) +
                                        ") below beta0");
        if (!(b >= std::pow(p, 1.0 / degree_) * (1.0 - 1e-12)))
            throw std::invalid_argument("BeurlingSystem: beta(" + std::to_string(primes[i]) +
                                        ") below p^{1/D}");
        log_prime_beta_[i] = std::log(b);
    }
}

namespace {

// index of p in the ascending prime list, or npos
std::size_t prime_index(const PrimeTable& table, std::uint64_t p) {
    const auto& primes = table.primes();
    const auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - primes.begin());
}

}  // namespace

double BeurlingSystem::prime_beta(std::uint64_t p) const {
    const std::size_t i = prime_index(*table_, p);
    if (i == static_cast<std::size_t>(-1))
        throw std::out_of_range(label_ + ": " + std::to_string(p) + " is not a prime in the table");
    if (i >= prime_beta_.size())
        throw std::out_of_range(label_ + ": norm list exhausted at prime " + std::to_string(p));
    return prime_beta_[i];
}

double BeurlingSystem::log_prime_beta(std::uint64_t p) const {
    const std::size_t i = prime_index(*table_, p);
    if (i == static_cast<std::size_t>(-1) || i >= prime_beta_.size())
        prime_beta(p);  // throws with the right message
    return log_prime_beta_[i];
}

double BeurlingSystem::beta(std::uint64_t n) const {
    double r = 1.0;
    for (const auto& [p, k] : factorize(n, *table_).factors) {
        const double b = prime_beta(p);
        for (int j = 0; j < k; ++j) r *= b;
    }
    return r;
}

double BeurlingSystem::log_beta(std::uint64_t n) const {
    double r = 0.0;
    for (const auto& [p, k] : factorize(n, *table_).factors) r += k * log_prime_beta(p);
    return r;
}

BeurlingSystem classical_system(std::shared_ptr<const PrimeTable> table) {
    BeurlingSystem s;
    s.table_ = std::move(table);
    s.prime_beta_.reserve(s.table_->primes().size());
    for (std::uint32_t p : s.table_->primes()) s.prime_beta_.push_back(static_cast<double>(p));
    s.beta0_ = 2.0;
    s.degree_ = 1.0;
    s.abscissa_ = 1.0;
    s.label_ = "classical";
    s.finalize_and_check();
    return s;
}

BeurlingSystem quadratic_field_system(const QuadraticFieldSpec& spec,
                                      std::shared_ptr<const PrimeTable> table) {
    if (spec.d == 0 || spec.d == 1 || !squarefree(spec.d))
        throw std::invalid_argument("quadratic_field_system: d must be squarefree and != 0, 1");
    BeurlingSystem s;
    s.table_ = std::move(table);

    const std::uint64_t limit = s.table_->limit();
    const std::uint64_t norm_cap = spec.norm_limit == 0 ? limit : std::min(spec.norm_limit, limit);

    std::vector<std::uint64_t> norms;
    norms.reserve(s.table_->primes().size() + 64);
    for (std::uint32_t p : s.table_->primes()) {
        if (p > norm_cap) break;
        switch (quadratic_split_type(spec.d, p)) {
            case SplitType::split:
                norms.push_back(p);
                norms.push_back(p);
                break;
            case SplitType::ramified:
                norms.push_back(p);
                break;
            case SplitType::inert:
                if (static_cast<std::uint64_t>(p) * p <= norm_cap)
                    norms.push_back(static_cast<std::uint64_t>(p) * p);
                break;
        }
    }
    std::sort(norms.begin(), norms.end());

    const std::size_t coverage = std::min(norms.size(), s.table_->primes().size());
    s.prime_beta_.resize(coverage);
    for (std::size_t i = 0; i < coverage; ++i) s.prime_beta_[i] = static_cast<double>(norms[i]);

    s.beta0_ = coverage ? s.prime_beta_[0] : 2.0;
    s.degree_ = 2.0;
    s.abscissa_ = 1.0;
    s.label_ = "quadratic(" + std::to_string(spec.d) + ")";
    s.finalize_and_check();
    return s;
}

BeurlingSystem custom_system_from_file(const std::string& path,
                                       std::shared_ptr<const PrimeTable> table) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system file: " + path);

    BeurlingSystem s;
    s.table_ = std::move(table);

    std::string line;
    bool have_header = false;
    double beta0 = 0.0, degree = 0.0;
    std::vector<std::pair<std::uint64_t, double>> entries;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!have_header && line.rfind("#beta0=", 0) == 0) {
            std::istringstream ss(line.substr(7));
            std::string degree_tok;
            if (!(ss >> beta0 >> degree_tok) || degree_tok.rfind("degree=", 0) != 0)
                throw std::runtime_error(path + ": malformed header, expected `#beta0=<v> degree=<D>`");
            degree = std::stod(degree_tok.substr(7));
            have_header = true;
            continue;
        }
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::uint64_t p;
        double b;
        if (!(ss >> p)) continue;
        if (!(ss >> b))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `p beta_p`");
        entries.emplace_back(p, b);
    }
    if (!have_header)
        throw std::runtime_error(path + ": missing `#beta0=<v> degree=<D>` header");

    // entries must cover a prefix of the primes: beta is defined up to the
    // first gap
    std::sort(entries.begin(), entries.end());
    const auto& primes = s.table_->primes();
    std::size_t coverage = 0;
    for (const auto& [p, b] : entries) {
        if (coverage >= primes.size() || primes[coverage] != p)
            throw std::runtime_error(path + ": entries must list consecutive primes starting at 2 (got " +
                                     std::to_string(p) + ")");
        if (!(b >= std::max(beta0, std::pow(static_cast<double>(p), 1.0 / degree))))
            throw std::runtime_error(path + ": beta(" + std::to_string(p) +
                                     ") violates beta(p) >= max(beta0, p^{1/D})");
        s.prime_beta_.push_back(b);
        ++coverage;
    }
    s.beta0_ = beta0;
    s.degree_ = degree;
    s.abscissa_ = degree;
    s.label_ = "custom(" + path + ")";
    s.finalize_and_check();
    return s;
}

double beur_von_mangoldt(const BeurlingSystem& system, std::uint64_t n) {
    if (n < 2) return 0.0;
    const Factorization f = factorize(n, system.table());
    if (f.factors.size() != 1) return 0.0;
    return system.log_prime_beta(f.factors[0].prime);
}

double beur_mangoldt_identity_residual(const BeurlingSystem& system, std::uint64_t n) {
    const Factorization f = factorize(n, system.table());
    double sum = 0.0;
    for (std::uint64_t d : divisors(f)) sum += beur_von_mangoldt(system, d);
    return std::abs(sum - std::log(system.beta(n)));
}

SeriesValue zeta_system_eval(const BeurlingSystem& system, Complex s, std::int64_t n_terms) {
    return eval_dirichlet_truncated(CoefficientFunction::unit(), system, s, n_terms);
}

std::vector<double> prime_sum_divergence_probe(const BeurlingSystem& system,
                                               std::span<const double> sigmas,
                                               std::uint64_t n_max) {
    for (double sigma : sigmas)
        if (!(sigma > system.abscissa_bound()))
            throw std::domain_error("prime_sum_divergence_probe: sigma must exceed the abscissa bound");
    if (n_max > system.table().limit())
        throw std::out_of_range("prime_sum_divergence_probe: n_max exceeds table limit");

    const auto& primes = system.table().primes();
    std::int64_t count = 0;
    while (count < static_cast<std::int64_t>(primes.size()) &&
           primes[static_cast<std::size_t>(count)] <= n_max)
        ++count;
    if (count > static_cast<std::int64_t>(system.covered_primes()))
        throw std::out_of_range(system.label() + ": norm list exhausted below " +
                                std::to_string(n_max));

    std::vector<double> out;
    out.reserve(sigmas.size());
    for (double sigma : sigmas) {
        out.push_back(detail::block_sum<double>(0, count - 1, [&](std::int64_t i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            return std::exp(-sigma * system.log_prime_beta(primes[idx]));
        }));
    }
    return out;
}

}  // namespace forge
