#pragma once

#include <string>

#include "lmforge/exactalg/ratfunc.hpp"

namespace lmforge {

enum class RingKind { Integers, Rationals, Laurent };

struct RingSpec {
    RingKind kind = RingKind::Laurent;
    bool fraction_field = false;  // allow entries in Q(t)

    static RingSpec integers() { return {RingKind::Integers, false}; }
    static RingSpec rationals() { return {RingKind::Rationals, false}; }
    static RingSpec laurent() { return {RingKind::Laurent, false}; }
    static RingSpec rational_functions() { return {RingKind::Laurent, true}; }

    bool contains(const RatFunc& x) const {
        switch (kind) {
            case RingKind::Integers:
                return x.is_constant() && x.constant_value().get_den() == 1;
            case RingKind::Rationals:
                return x.is_constant();
            case RingKind::Laurent:
                return fraction_field || x.is_laurent();
        }
        return false;
    }

    std::string name() const {
        switch (kind) {
            case RingKind::Integers: return "integers";
            case RingKind::Rationals: return "rationals";
            case RingKind::Laurent: return fraction_field ? "rational-functions" : "laurent";
        }
        return "?";
    }

    static RingSpec parse(const std::string& s) {
        if (s == "integers" || s == "Z") return integers();
        if (s == "rationals" || s == "Q") return rationals();
        if (s == "laurent" || s == "Q[t,t^-1]") return laurent();
        if (s == "rational-functions" || s == "Q(t)") return rational_functions();
        throw Error(ErrorKind::ParseError, "unknown ring '" + s + "'");
    }

    // Smallest ring in this list containing both.
    static RingSpec join(const RingSpec& a, const RingSpec& b) {
        RingSpec r;
        r.kind = static_cast<int>(a.kind) > static_cast<int>(b.kind) ? a.kind : b.kind;
        r.fraction_field = a.fraction_field || b.fraction_field;
        return r;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.kind == b.kind && a.fraction_field == b.fraction_field;
    }
};

}  // namespace lmforge
