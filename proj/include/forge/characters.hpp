#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace forge {

// Dense value table of a Dirichlet character mod q. values[r] is chi(r) for
// the residue r; it vanishes exactly on residues sharing a factor with q and
// the nonzero values are roots of unity.
struct DirichletCharacter {
    std::uint32_t modulus = 0;
    std::uint64_t index = 0;
    bool principal = false;
    std::vector<std::complex<double>> values;

    std::complex<double> operator()(std::uint64_t n) const {
        return values[static_cast<std::size_t>(n % modulus)];
    }
};

// The unit group (Z/qZ)^* as a product of cyclic factors, each given by a
// generator lifted mod q. Characters are indexed by their exponent tuple in
// lexicographic order: index 0 is principal.
//
// Factor order: for 2^e | q the order-2 factor generated by -1 comes first,
// then the 2^{e-2} factor generated by 5 (e >= 3); odd prime powers follow
// in ascending prime order, each generated by a CRT-lifted least primitive
// root.
class CharacterGroup {
public:
    explicit CharacterGroup(std::uint32_t q);  // 2 <= q <= 10^6

    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t size() const { return order_; }        // phi(q)
    std::uint64_t exponent() const { return exponent_; }  // lcm of factor orders

    DirichletCharacter character(std::uint64_t index) const;

    struct CyclicFactor {
        std::uint64_t generator;
        std::uint64_t order;
    };
    const std::vector<CyclicFactor>& factors() const { return factors_; }

private:
    std::uint32_t modulus_;
    std::uint64_t order_;
    std::uint64_t exponent_;
    std::vector<CyclicFactor> factors_;
};

// All phi(q) characters mod q, ordered by index.
std::vector<DirichletCharacter> characters_mod(std::uint32_t q);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace forge
