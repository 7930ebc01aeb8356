#pragma once

#include <map>
#include <memory>
#include <string>

#include "forge/characters.hpp"
#include "forge/numeric.hpp"
#include "forge/prime_table.hpp"

namespace forge {

// A bounded completely multiplicative arithmetic function a(n), defined by
// its values on primes: a(1) = 1, a(mn) = a(m)a(n), |a(n)| <= 1.
class CoefficientFunction {
public:
    enum class Kind { unit, liouville, character, vertical_twist, custom };

    static CoefficientFunction unit();
    static CoefficientFunction liouville();
    static CoefficientFunction character(DirichletCharacter chi);
    static CoefficientFunction vertical_twist(double t0);  // a(n) = n^{-i t0}
    static CoefficientFunction custom(std::map<std::uint64_t, Complex> prime_values,
                                      std::string label = "custom");
    // File format: one `p re im` line per prime, `#` starts a comment.
    static CoefficientFunction custom_from_file(const std::string& path);

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    bool real_valued() const { return real_valued_; }
    double twist() const { return t0_; }
    const DirichletCharacter* chi() const { return chi_.get(); }

    // a(p); throws for a prime missing from a custom table
    Complex prime_value(std::uint64_t p) const;

    // the completely multiplicative extension a(n) = prod a(p)^mu
    Complex value(std::uint64_t n, const PrimeTable& table) const;

    // a(1..N) filled through the least-prime-factor recurrence; index 0 unused
    std::vector<Complex> values_up_to(std::uint64_t n_max, const PrimeTable& table) const;

private:
    CoefficientFunction(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

    Kind kind_;
    std::string label_;
    bool real_valued_ = true;
    double t0_ = 0.0;
    std::shared_ptr<const DirichletCharacter> chi_;
    std::shared_ptr<const std::map<std::uint64_t, Complex>> prime_values_;
};

}  // namespace forge
