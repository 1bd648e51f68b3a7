#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace farq {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, gcd 1) as long as they are built through these helpers.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q" with optional leading '-' on either part; q must be nonzero.
inline Rat parse_rat(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    Int p(num), q(den);
    if (q == 0) throw std::invalid_argument("malformed rational (zero denominator): \"" + text + "\"");
    return rat(p, q);
}

// Canonical "p" or "p/q" form; parse_rat(to_string(x)) == x.
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace farq
