#pragma once

// Uniform entry points over the three implemented exponent monoids:
// the positive rationals (antimatter, no atoms), the alpha/dyadic monoid,
// and the eventually-constant sequence monoid.

#include "factorlab/alpha_monoid.hpp"
#include "factorlab/seq_monoid.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

enum class MonoidId { QPlus, SectionFour, AppendixA };

inline const char* monoid_tag(MonoidId m) {
    switch (m) {
        case MonoidId::QPlus: return "qplus";
        case MonoidId::SectionFour: return "section_four";
        case MonoidId::AppendixA: return "appendix_a";
    }
    return "?";
}

inline MonoidId monoid_from_tag(const std::string& s) {
    if (s == "qplus") return MonoidId::QPlus;
    if (s == "section_four" || s == "s4" || s == "section4") return MonoidId::SectionFour;
    if (s == "appendix_a" || s == "appa") return MonoidId::AppendixA;
    throw std::invalid_argument("unknown monoid tag '" + s +
                                "' (valid: qplus, section_four, appendix_a)");
}

// Atoms within the bounded universe, as canonical strings (the three monoids
// have different element types; reports and the CLI need only text).
//
// QPlus has no atoms at any bound: q = q/2 + q/2 splits everything.
// SectionFour's atoms are alpha and the scaled generators inside the grid.
// AppendixA runs the brute-force S \ (S + S) over the bounded universe.
inline std::vector<std::string> monoid_atoms_up_to(MonoidId m, const SearchBounds& bounds,
                                                   const SeqUniverse& uni = {}) {
    bounds.validate();
    std::vector<std::string> out;
    switch (m) {
        case MonoidId::QPlus:
            break;
        case MonoidId::SectionFour:
            for (auto& a : s4_atoms_up_to(bounds)) out.push_back(s4_str(a));
            break;
        case MonoidId::AppendixA:
            for (auto& a : seq_atoms_in_universe(uni)) out.push_back(seq_str(a));
            break;
    }
    return out;
}

}  // namespace factorlab
