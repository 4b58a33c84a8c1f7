#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "lmforge/error.hpp"

namespace lmforge {

using Rational = mpq_class;

inline Rational make_rational(long p, long q = 1) {
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
    if (s[0] == '+') s.erase(0, 1);
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
    Rational r;
    r.get_num() = mpz_class(num);
    r.get_den() = mpz_class(den);
    if (r.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace lmforge
