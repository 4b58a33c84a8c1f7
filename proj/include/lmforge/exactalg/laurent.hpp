#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmforge/exactalg/rational.hpp"

namespace lmforge {

// Laurent polynomial in one variable t over Q. Terms are kept sorted by
// exponent with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
    LaurentPoly(const Rational& c) {                    // NOLINT
        if (c != 0) terms_.emplace_back(0, c);
    }

    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(e, c);
        return p;
    }
    static LaurentPoly t(int e = 1) { return monomial(Rational(1), e); }

    static LaurentPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        LaurentPoly p;
        for (auto& [e, c] : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == e)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(e, c);
        }
        p.prune();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
    // Units of Q[t, t^-1] are exactly the nonzero monomials.
    bool is_unit() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }
    const Rational& leading() const { return terms_.back().second; }

    Rational coeff(int e) const {
        for (const auto& [k, c] : terms_)
            if (k == e) return c;
        return Rational(0);
    }
    Rational constant_value() const { return coeff(0); }

    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        for (auto& term : p.terms_) term.first += k;
        return p;
    }

    LaurentPoly unit_inverse() const {
        if (!is_unit()) throw Error(ErrorKind::Singular, "not a unit: " + to_string());
        Rational inv = 1 / terms_[0].second;
        return monomial(inv, -terms_[0].first);
    }

    // t -> t^-1
    LaurentPoly bar() const {
        LaurentPoly p;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
        return p;
    }

    Rational eval(const Rational& q) const {
        if (q == 0 && !terms_.empty() && terms_.front().first < 0)
            throw Error(ErrorKind::ZeroSpecialization, "negative powers of t at t = 0");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational pw = 1;
            Rational base = e >= 0 ? q : Rational(1 / q);
            for (int i = 0; i < std::abs(e); ++i) pw *= base;
            acc += c * pw;
        }
        return acc;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& term : p.terms_) term.second = -term.second;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                Rational c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1 && b.terms_.size() == 1)
            return monomial(a.terms_[0].second * b.terms_[0].second, a.terms_[0].first + b.terms_[0].first);
        int lo = a.min_exp() + b.min_exp();
        int hi = a.max_exp() + b.max_exp();
        std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        LaurentPoly out;
        for (std::size_t k = 0; k < dense.size(); ++k)
            if (dense[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        if (c == 0) return {};
        LaurentPoly p = *this;
        for (auto& term : p.terms_) term.second *= c;
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Terms "c*t^e" joined by " + ", exponents decreasing; the t^0 term is the bare coefficient.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += rational_to_string(it->second);
            if (it->first != 0) out += "*t^" + std::to_string(it->first);
        }
        return out;
    }

    static LaurentPoly parse(const std::string& text);

    // Dense coefficient vector of t^(-min_exp) * p, lowest degree first.
    std::vector<Rational> dense() const {
        std::vector<Rational> v;
        if (terms_.empty()) return v;
        v.assign(static_cast<std::size_t>(max_exp() - min_exp() + 1), Rational(0));
        for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - min_exp())] = c;
        return v;
    }
    static LaurentPoly from_dense(const std::vector<Rational>& v, int offset = 0) {
        LaurentPoly p;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) p.terms_.emplace_back(offset + static_cast<int>(k), v[k]);
        return p;
    }

private:
    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& x) { return x.second == 0; }),
                     terms_.end());
    }

    std::vector<Term> terms_;
};

namespace detail {

using Dense = std::vector<Rational>;

inline void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial division with remainder over Q; a = q*b + r.
inline std::pair<Dense, Dense> poly_divmod(Dense a, const Dense& b) {
    trim(a);
    if (b.empty()) throw Error(ErrorKind::Singular, "polynomial division by zero");
    Dense q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace detail

// Monic gcd in Q[t] of the polynomial parts of a and b (powers of t are units
// in the Laurent ring, so they are discarded).
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto g = detail::poly_gcd(a.dense(), b.dense());
    return LaurentPoly::from_dense(g);
}

// a / b when b divides a in Q[t, t^-1].
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::Singular, "division by zero");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_unit()) return a * b.unit_inverse();
    auto [q, r] = detail::poly_divmod(a.dense(), b.dense());
    if (!r.empty()) return std::nullopt;
    return LaurentPoly::from_dense(q, a.min_exp() - b.min_exp());
}

inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    std::size_t p = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, why + " in polynomial '" + text + "'");
    };
    auto read_int = [&]() {
        std::size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == digits) fail("expected integer");
        return std::stoi(s.substr(start, p - start));
    };
    std::vector<Term> terms;
    bool first = true;
    while (p < s.size()) {
        int sign = 1;
        bool saw_sign = false;
        while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -sign;
            saw_sign = true;
            ++p;
        }
        if (!first && !saw_sign) fail("expected '+' or '-'");
        first = false;
        Rational coef = 1;
        bool have_coef = false;
        std::size_t start = p;
        while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
        if (p > start) {
            coef = parse_rational(s.substr(start, p - start));
            have_coef = true;
        }
        int exponent = 0;
        if (p < s.size() && s[p] == '*') {
            ++p;
            if (p >= s.size() || s[p] != 't') fail("expected 't' after '*'");
        }
        if (p < s.size() && s[p] == 't') {
            ++p;
            exponent = 1;
            if (p < s.size() && s[p] == '^') {
                ++p;
                exponent = read_int();
            }
        } else if (!have_coef) {
            fail("expected term");
        }
        terms.emplace_back(exponent, sign * coef);
    }
    return from_terms(std::move(terms));
}

}  // namespace lmforge
