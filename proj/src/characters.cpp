#include "forge/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace forge {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// least primitive root mod an odd prime p
std::uint64_t primitive_root_mod_p(std::uint64_t p) {
    const auto qs = prime_divisors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : qs) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root_mod_p: no generator found");
}

// primitive root mod p^e for odd p: a root mod p that stays primitive mod
// p^2 is primitive mod every power
std::uint64_t primitive_root_mod_pe(std::uint64_t p, std::uint64_t pe) {
    std::uint64_t g = primitive_root_mod_p(p);
    if (pe > p) {
        if (powmod(g, p - 1, p * p) == 1) g += p;
    }
    return g % pe;
}

// x = r mod pe, x = 1 mod (q / pe)
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t pe, std::uint64_t q) {
    const std::uint64_t rest = q / pe;
    if (rest == 1) return r % q;
    // x = r + pe * k with k = (1 - r) * pe^{-1} mod rest
    std::uint64_t pe_inv = powmod(pe % rest, euler_phi(rest) - 1, rest);
    std::uint64_t delta = ((1 + rest - (r % rest)) % rest);
    std::uint64_t k = mulmod(delta, pe_inv, rest);
    return (r + pe * k) % q;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        result -= result / d;
        while (n % d == 0) n /= d;
    }
    if (n > 1) result -= result / n;
    return result;
}

CharacterGroup::CharacterGroup(std::uint32_t q) : modulus_(q) {
    if (q < 2) throw std::invalid_argument("CharacterGroup: modulus must be >= 2");
    if (q > 1000000) throw std::invalid_argument("CharacterGroup: modulus above 10^6 not supported");

    std::uint64_t rem = q;
    // 2-power part first
    int e2 = 0;
    while (rem % 2 == 0) {
        rem /= 2;
        ++e2;
    }
    const std::uint64_t q2 = std::uint64_t(1) << e2;
    if (e2 == 2) {
        factors_.push_back({crt_lift(3, 4, q), 2});
    } else if (e2 >= 3) {
        factors_.push_back({crt_lift(q2 - 1, q2, q), 2});
        factors_.push_back({crt_lift(5, q2, q), q2 / 4});
    }
    // odd prime powers, ascending
    std::uint64_t m = rem;
    for (std::uint64_t p = 3; p * p <= m; p += 2) {
        if (m % p != 0) continue;
        std::uint64_t pe = 1;
        while (m % p == 0) {
            m /= p;
            pe *= p;
        }
        factors_.push_back({crt_lift(primitive_root_mod_pe(p, pe), pe, q), pe / p * (p - 1)});
    }
    if (m > 1) factors_.push_back({crt_lift(primitive_root_mod_p(m), m, q), m - 1});

    order_ = 1;
    exponent_ = 1;
    for (const auto& f : factors_) {
        order_ *= f.order;
        exponent_ = std::lcm(exponent_, f.order);
    }
}

DirichletCharacter CharacterGroup::character(std::uint64_t index) const {
    if (index >= order_)
        throw std::out_of_range("CharacterGroup::character: index " + std::to_string(index) +
                                " >= phi(q) = " + std::to_string(order_));

    // exponent tuple, lexicographic: factors_[0] is the most significant digit
    const std::size_t r = factors_.size();
    std::vector<std::uint64_t> t(r, 0);
    {
        std::uint64_t rest = index;
        for (std::size_t i = r; i-- > 0;) {
            t[i] = rest % factors_[i].order;
            rest /= factors_[i].order;
        }
    }

    DirichletCharacter chi;
    chi.modulus = modulus_;
    chi.index = index;
    chi.principal = (index == 0);
    chi.values.assign(modulus_, std::complex<double>(0.0, 0.0));

    const std::uint64_t L = exponent_;
    // weight of one step of digit i in the total angle numerator (mod L)
    std::vector<std::uint64_t> step(r, 0);
    for (std::size_t i = 0; i < r; ++i) step[i] = (t[i] * (L / factors_[i].order)) % L;

    // odometer over the unit group: digit i counts 0..order_i-1; advancing
    // digit i multiplies the unit by generator_i (wrap-around is absorbed by
    // g^order = 1 mod q)
    std::vector<std::uint64_t> digit(r, 0);
    std::uint64_t u = 1 % modulus_;
    std::uint64_t alpha = 0;
    for (std::uint64_t count = 0;; ++count) {
        const double angle = 2.0 * std::numbers::pi *
                             (static_cast<double>(alpha) / static_cast<double>(L));
        chi.values[static_cast<std::size_t>(u)] =
            std::complex<double>(std::cos(angle), std::sin(angle));
        if (count + 1 == order_) break;
        // advance odometer (digit r-1 fastest)
        for (std::size_t i = r; i-- > 0;) {
            u = mulmod(u, factors_[i].generator, modulus_);
            alpha = (alpha + step[i]) % L;
            if (++digit[i] < factors_[i].order) break;
            digit[i] = 0;  // carry: alpha and u wrapped by a full cycle already
        }
    }
    return chi;
}

std::vector<DirichletCharacter> characters_mod(std::uint32_t q) {
    const CharacterGroup group(q);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group.size()));
    for (std::uint64_t i = 0; i < group.size(); ++i) out.push_back(group.character(i));
    return out;
}

}  // namespace forge
