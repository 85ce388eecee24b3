#pragma once

// Record of every cutoff a bounded search is allowed to use. Verdicts carry
// the bounds they were produced under so "at bound" always means something
// concrete and reproducible.

#include "factorlab/rational.hpp"

#include <stdexcept>

namespace factorlab {

struct SearchBounds {
    Rat max_degree = 8;              // total degree / exponent ceiling
    long long max_denominator = 16;  // exponent or coefficient denominators
    long long max_coeff_height = 64; // |numerator| ceiling for coefficients
    long long max_factors = 8;       // factors per factorization
    long long max_multiset = 8;      // generator multiset size in monoid searches

    void validate() const {
        if (max_degree <= 0 || max_denominator <= 0 || max_coeff_height <= 0 ||
            max_factors <= 0 || max_multiset <= 0)
            throw std::invalid_argument("SearchBounds: all bounds must be positive");
    }
};

}  // namespace factorlab
