#include "forge/coefficients.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

CoefficientFunction CoefficientFunction::unit() {
    return CoefficientFunction(Kind::unit, "unit");
}

CoefficientFunction CoefficientFunction::liouville() {
    return CoefficientFunction(Kind::liouville, "liouville");
}

CoefficientFunction CoefficientFunction::character(DirichletCharacter chi) {
    CoefficientFunction f(Kind::character, "character(" + std::to_string(chi.modulus) + ":" +
                                               std::to_string(chi.index) + ")");
    bool real = true;
    for (const auto& v : chi.values)
        if (std::abs(v.imag()) != 0.0) real = false;
    f.real_valued_ = real;
    f.chi_ = std::make_shared<DirichletCharacter>(std::move(chi));
    return f;
}

CoefficientFunction CoefficientFunction::vertical_twist(double t0) {
    CoefficientFunction f(Kind::vertical_twist, "twist(" + std::to_string(t0) + ")");
    f.t0_ = t0;
    f.real_valued_ = (t0 == 0.0);
    return f;
}

CoefficientFunction CoefficientFunction::custom(std::map<std::uint64_t, Complex> prime_values,
                                                std::string label) {
    CoefficientFunction f(Kind::custom, std::move(label));
    bool real = true;
    for (const auto& [p, v] : prime_values) {
        if (!is_prime_u64(p))
            throw std::invalid_argument("custom coefficient table: " + std::to_string(p) +
                                        " is not prime");
        if (std::abs(v) > 1.0 + 1e-12)
            throw std::invalid_argument("custom coefficient table: |a(" + std::to_string(p) +
                                        ")| exceeds 1");
        if (v.imag() != 0.0) real = false;
    }
    f.real_valued_ = real;
    f.prime_values_ = std::make_shared<std::map<std::uint64_t, Complex>>(std::move(prime_values));
    return f;
}

CoefficientFunction CoefficientFunction::custom_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient table: " + path);
    std::map<std::uint64_t, Complex> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::uint64_t p;
        double re, im;
        if (!(ss >> p)) continue;  // blank line
        if (!(ss >> re >> im))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected `p re im`");
        values[p] = Complex(re, im);
    }
    return custom(std::move(values), "custom(" + path + ")");
}

Complex CoefficientFunction::prime_value(std::uint64_t p) const {
    switch (kind_) {
        case Kind::unit:
            return {1.0, 0.0};
        case Kind::liouville:
            return {-1.0, 0.0};
        case Kind::character:
            return (*chi_)(p);
        case Kind::vertical_twist:
            return std::polar(1.0, -t0_ * std::log(static_cast<double>(p)));
        case Kind::custom: {
            const auto it = prime_values_->find(p);
            if (it == prime_values_->end())
                throw std::out_of_range("incomplete custom coefficient table: no value for prime " +
                                        std::to_string(p));
            return it->second;
        }
    }
    return {0.0, 0.0};  // unreachable
}

Complex CoefficientFunction::value(std::uint64_t n, const PrimeTable& table) const {
    Complex result{1.0, 0.0};
    for (const auto& [p, k] : factorize(n, table).factors)
        result *= complex_ipow(prime_value(p), k);
    return result;
}

std::vector<Complex> CoefficientFunction::values_up_to(std::uint64_t n_max,
                                                       const PrimeTable& table) const {
    if (n_max > table.limit())
        throw std::out_of_range("values_up_to: n_max exceeds table limit");
    std::vector<Complex> v(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    if (n_max == 0) return v;
    v[1] = Complex(1.0, 0.0);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::uint32_t p = table.smallest_factor(n);
        v[static_cast<std::size_t>(n)] =
            (p == n) ? prime_value(n)
                     : v[static_cast<std::size_t>(n / p)] * v[static_cast<std::size_t>(p)];
    }
    return v;
}

}  // namespace forge
