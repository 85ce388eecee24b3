#pragma once

// Deterministic bijection between pairs (n, m) -- n >= 1, m >= 1 odd -- and
// the odd primes: p(n, m) is the (k+1)-th odd prime where
// k = cantor(n-1, (m-1)/2). Injective, reproducible, invertible.

#include "factorlab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace factorlab {

inline Int cantor_pair(const Int& i, const Int& j) { return (i + j) * (i + j + 1) / 2 + j; }

inline Int nth_odd_prime(const Int& k) {  // 0-based: 3, 5, 7, 11, ...
    Int count = -1, p = 1;
    while (count < k) {
        p += 2;
        if (int_is_prime(p)) ++count;
    }
    return p;
}

inline Int odd_prime_index(const Int& p) {  // inverse of nth_odd_prime
    if (p < 3 || !int_is_prime(p)) throw std::invalid_argument("odd_prime_index: not an odd prime");
    Int k = -1;
    for (Int q = 3; q <= p; q += 2)
        if (int_is_prime(q)) ++k;
    return k;
}

inline Int pairing_prime(const Int& n, const Int& m) {
    if (n < 1) throw std::invalid_argument("pairing_prime: n must be >= 1");
    if (m < 1 || (m & 1) == 0) throw std::invalid_argument("pairing_prime: m must be odd and >= 1");
    return nth_odd_prime(cantor_pair(n - 1, (m - 1) / 2));
}

// Recovers (n, m) from an odd prime.
inline std::pair<Int, Int> pairing_inverse(const Int& p) {
    Int k = odd_prime_index(p);
    // Invert cantor: find the diagonal d with d(d+1)/2 <= k.
    Int d = 0;
    while ((d + 1) * (d + 2) / 2 <= k) ++d;
    Int j = k - d * (d + 1) / 2;
    Int i = d - j;
    return {i + 1, 2 * j + 1};
}

}  // namespace factorlab
