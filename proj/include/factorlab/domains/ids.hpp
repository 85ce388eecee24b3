#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

// The nine implemented integral domains.
//   d8       Z[x] + x^2 Q[x]
//   d9       Z[x] + x^2 Q(sqrt2)[x]
//   d23      Z + x Q[x]
//   d24      union of Z[x^(1/n)]
//   d12      truncated union of Z[[x^(1/n)]] + x^(1+1/n) Q[[x^(1/n)]]
//   ma_qplus F2[X]_(X), X = x^(Q+)
//   ma_s4    F2[X]_(X) over the alpha/dyadic exponent monoid
//   ma_appa  F2[X]_(X) over the sequence exponent monoid
//   appb     F2[X, y, Z]_(X, y, Z), Z = x^Q y^(>=2)
enum class DomainId { D8, D9, D23, D24, D12, MA_QPlus, MA_S4, MA_AppA, AppB };

inline const char* domain_tag(DomainId d) {
    switch (d) {
        case DomainId::D8: return "d8";
        case DomainId::D9: return "d9";
        case DomainId::D23: return "d23";
        case DomainId::D24: return "d24";
        case DomainId::D12: return "d12";
        case DomainId::MA_QPlus: return "ma_qplus";
        case DomainId::MA_S4: return "ma_s4";
        case DomainId::MA_AppA: return "ma_appa";
        case DomainId::AppB: return "appb";
    }
    return "?";
}

inline DomainId domain_from_tag(const std::string& s) {
    for (DomainId d : {DomainId::D8, DomainId::D9, DomainId::D23, DomainId::D24, DomainId::D12,
                       DomainId::MA_QPlus, DomainId::MA_S4, DomainId::MA_AppA, DomainId::AppB})
        if (s == domain_tag(d)) return d;
    throw std::invalid_argument(
        "unknown domain tag '" + s +
        "' (valid: d8, d9, d23, d24, d12, ma_qplus, ma_s4, ma_appa, appb)");
}

}  // namespace factorlab
