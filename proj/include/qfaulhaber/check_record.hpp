#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/rational.hpp"

namespace qfaulhaber {

enum class Verdict { pass, fail, singular, skipped, error };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::singular: return "singular";
        case Verdict::skipped: return "skipped";
        case Verdict::error: return "error";
    }
    return "error";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "singular") return Verdict::singular;
    if (s == "skipped") return Verdict::skipped;
    if (s == "error") return Verdict::error;
    throw Error("unknown verdict: " + s);
}

// One identity-verification outcome.  lhs/rhs/residual are canonical RatFunc
// strings for symbolic suites and fixed-format decimal strings for numeric
// suites.
struct CheckRecord {
    std::string suite;
    std::map<std::string, std::string> params;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::error;
    std::string residual;

    friend bool operator==(const CheckRecord& a, const CheckRecord& b) {
        return a.suite == b.suite && a.params == b.params && a.lhs == b.lhs && a.rhs == b.rhs &&
               a.verdict == b.verdict && a.residual == b.residual;
    }
};

// Total order on records: (suite, params) with numeric-aware parameter values
// so that n=10 sorts after n=2.
inline bool record_less(const CheckRecord& a, const CheckRecord& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    auto ia = a.params.begin();
    auto ib = b.params.begin();
    for (; ia != a.params.end() && ib != b.params.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second == ib->second) continue;
        bool numeric = false;
        Rational ra, rb;
        try {
            ra = rational_from_string(ia->second);
            rb = rational_from_string(ib->second);
            numeric = true;
        } catch (const Error&) {
        }
        if (numeric) {
            if (ra != rb) return ra < rb;
        } else {
            return ia->second < ib->second;
        }
    }
    return a.params.size() < b.params.size();
}

}  // namespace qfaulhaber
