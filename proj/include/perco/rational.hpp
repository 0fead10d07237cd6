#pragma once

#include <gmpxx.h>

#include <string>

#include "perco/error.hpp"

namespace perco {

// Exact arithmetic throughout the library. Floating point appears only where
// the quantities themselves are transcendental (trig thresholds, p-star roots).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    require(den != 0, Err::usage_error, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a". Decimal strings are rejected: exact pipelines must not
// ingest floats silently.
inline Rat rat_parse(const std::string& s) {
    auto bad = [&]() -> Rat { fail(Err::usage_error, "not a rational: '" + s + "' (use num/den)"); };
    if (s.empty()) return bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.find('.') != std::string::npos) return bad();
            Rat r{Int(s)};
            return r;
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty() || num.find('.') != std::string::npos ||
            den.find('.') != std::string::npos)
            return bad();
        Int n(num), d(den);
        require(d != 0, Err::usage_error, "zero denominator in '" + s + "'");
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return bad();
    }
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rat_double(const Rat& r) { return r.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace perco
