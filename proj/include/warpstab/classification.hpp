#pragma once

#include <string>
#include <vector>

#include "warpstab/errors.hpp"

namespace warpstab {

/// Linear stability verdict. Ordered from worst to best so that
/// monotonicity statements ("never moves toward Unstable") are
/// comparisons on the enum value.
enum class Verdict {
    Unstable = 0,
    Undetermined = 1,
    Stable = 2,
    StrictlyStable = 3,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Unstable: return "unstable";
        case Verdict::Undetermined: return "undetermined";
        case Verdict::Stable: return "stable";
        case Verdict::StrictlyStable: return "strictly-stable";
    }
    return "?";
}

inline Verdict verdict_from_string(std::string_view s) {
    if (s == "unstable") return Verdict::Unstable;
    if (s == "undetermined") return Verdict::Undetermined;
    if (s == "stable") return Verdict::Stable;
    if (s == "strictly-stable" || s == "s.stable") return Verdict::StrictlyStable;
    throw DomainError("unknown verdict token: '" + std::string(s) + "'");
}

/// One tagged fact contributing to a verdict: which criterion fired and the
/// numeric comparison that fired it.
struct Reason {
    std::string code;    // stable machine tag, e.g. "window-hit"
    std::string detail;  // human-readable comparison, e.g. "lambda=26 in (14, 26.2251)"
};

struct Classification {
    Verdict verdict = Verdict::Undetermined;
    std::vector<Reason> reasons;

    void add(std::string code, std::string detail) {
        reasons.push_back({std::move(code), std::move(detail)});
    }
    bool has_reason(std::string_view code) const {
        for (const auto& r : reasons)
            if (r.code == code) return true;
        return false;
    }
};

} // namespace warpstab
