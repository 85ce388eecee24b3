#pragma once

// Three-valued verdicts for property queries over infinite quantifiers.
// Holds / Refuted always ship evidence that re-verifies independently of the
// search that produced it; UnknownAtBound records exactly which cutoffs were
// exhausted.

#include "factorlab/search_bounds.hpp"

#include <optional>
#include <string>

namespace factorlab {

enum class Outcome { holds, refuted, unknown_at_bound };

inline const char* outcome_str(Outcome o, bool at_bound) {
    switch (o) {
        case Outcome::holds: return at_bound ? "holds_at_bound" : "holds";
        case Outcome::refuted: return at_bound ? "refuted_at_bound" : "refuted";
        case Outcome::unknown_at_bound: return "unknown_at_bound";
    }
    return "?";
}

template <class Evidence>
struct Verdict {
    Outcome outcome = Outcome::unknown_at_bound;
    // True when the verdict rests on a bounded sample/universe rather than a
    // closed-form argument.
    bool at_bound = false;
    // Short tag for the rule or argument that decided the query
    // (e.g. "const-prime", "factor-partition", "search-exhausted").
    std::string rule;
    std::optional<Evidence> evidence;
    SearchBounds bounds;

    bool holds() const { return outcome == Outcome::holds; }
    bool refuted() const { return outcome == Outcome::refuted; }
    bool unknown() const { return outcome == Outcome::unknown_at_bound; }

    static Verdict make_holds(std::string rule_, Evidence ev, SearchBounds b = {},
                              bool bounded = false) {
        return Verdict{Outcome::holds, bounded, std::move(rule_), std::move(ev), b};
    }
    static Verdict make_refuted(std::string rule_, Evidence ev, SearchBounds b = {},
                                bool bounded = false) {
        return Verdict{Outcome::refuted, bounded, std::move(rule_), std::move(ev), b};
    }
    static Verdict make_unknown(std::string rule_, SearchBounds b = {}) {
        return Verdict{Outcome::unknown_at_bound, true, std::move(rule_), std::nullopt, b};
    }
};

}  // namespace factorlab
