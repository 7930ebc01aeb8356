#pragma once

#include <cstdint>
#include <stdexcept>

#include "forge/numeric.hpp"

namespace forge {

// A computed series value together with a tail/remainder bound. When
// `heuristic` is set the bound is an estimate, not a certificate.
struct SeriesValue {
    Complex value{0.0, 0.0};
    double error_bound = 0.0;
    bool heuristic = false;
    std::int64_t terms_used = 0;
};

// sigma0 < sigma1 <= sigma2: extension boundary, abscissa, safe summation
// boundary.
struct EvaluationWindow {
    double sigma0;
    double sigma1;
    double sigma2;

    EvaluationWindow(double s0, double s1, double s2) : sigma0(s0), sigma1(s1), sigma2(s2) {
        if (!(s0 < s1 && s1 <= s2))
            throw std::invalid_argument("EvaluationWindow: need sigma0 < sigma1 <= sigma2");
    }
};

}  // namespace forge
