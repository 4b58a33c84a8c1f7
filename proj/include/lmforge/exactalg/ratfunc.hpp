#pragma once

#include <string>

#include "lmforge/exactalg/laurent.hpp"

namespace lmforge {

// Element of Q(t) stored as num/den with den a monic polynomial not divisible
// by t and coprime to num. Laurent polynomials are the den == 1 case.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}                  // NOLINT
    RatFunc(const Rational& c) : num_(c), den_(1) {}       // NOLINT
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}    // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc t(int e = 1) { return RatFunc(LaurentPoly::t(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::Singular, "inverse of zero");
        if (den_.is_one() && num_.is_unit()) return RatFunc(num_.unit_inverse());
        return RatFunc(den_, num_);
    }

    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    Rational eval(const Rational& q) const {
        Rational d = den_.eval(q);
        if (d == 0) throw Error(ErrorKind::ZeroSpecialization, "denominator vanishes at t = " + q.get_str());
        return num_.eval(q) / d;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    static RatFunc parse(const std::string& text) {
        std::size_t open = text.find_first_not_of(" \t");
        if (open != std::string::npos && text[open] == '(') {
            int depth = 0;
            std::size_t close = std::string::npos;
            for (std::size_t i = open; i < text.size(); ++i) {
                if (text[i] == '(') ++depth;
                if (text[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced '(' in '" + text + "'");
            LaurentPoly num = LaurentPoly::parse(text.substr(open + 1, close - open - 1));
            std::size_t slash = text.find_first_not_of(" \t", close + 1);
            if (slash == std::string::npos) return RatFunc(num);
            if (text[slash] != '/') throw Error(ErrorKind::ParseError, "expected '/' in '" + text + "'");
            std::size_t dopen = text.find_first_not_of(" \t", slash + 1);
            std::size_t dclose = text.find_last_of(')');
            if (dopen == std::string::npos || text[dopen] != '(' || dclose <= dopen)
                throw Error(ErrorKind::ParseError, "expected '(den)' in '" + text + "'");
            LaurentPoly den = LaurentPoly::parse(text.substr(dopen + 1, dclose - dopen - 1));
            if (den.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
            return RatFunc(num, den);
        }
        return RatFunc(LaurentPoly::parse(text));
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::Singular, "zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        int shift = den_.min_exp();
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
        if (!den_.is_constant()) {
            LaurentPoly g = laurent_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *exact_div(num_, g);
                den_ = *exact_div(den_, g);
            }
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = 1 / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

}  // namespace lmforge
