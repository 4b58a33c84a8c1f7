#pragma once

#include <map>
#include <string>

#include "lmforge/exactalg/rational.hpp"
#include "lmforge/freefox/endomorphism.hpp"

namespace lmforge {

// Finite linear combination of free group elements.
template <class C = Rational>
class GroupRingElement {
public:
    using Terms = std::map<FreeWord, C>;

    GroupRingElement() = default;
    GroupRingElement(long c) {  // NOLINT
        if (c != 0) terms_.emplace(FreeWord(), C(c));
    }
    explicit GroupRingElement(const FreeWord& w, const C& c = C(1)) {
        if (c != 0) terms_.emplace(w, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C augmentation() const {
        C s(0);
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    void add_term(const FreeWord& w, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement operator-() const {
        GroupRingElement out = *this;
        for (auto& [w, c] : out.terms_) c = -c;
        return out;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        for (const auto& [w, c] : b.terms_) a.add_term(w, c);
        return a;
    }
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, C(ca * cb));
        return out;
    }
    GroupRingElement& operator+=(const GroupRingElement& b) {
        for (const auto& [w, c] : b.terms_) add_term(w, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& b) { return *this += -b; }

    bool operator==(const GroupRingElement&) const = default;

    // Pushforward along a group endomorphism, extended linearly.
    GroupRingElement mapped(const FreeEndomorphism& phi) const {
        GroupRingElement out;
        for (const auto& [w, c] : terms_) out.add_term(phi.apply(w), c);
        return out;
    }

    int max_gen() const {
        int m = 0;
        for (const auto& [w, c] : terms_) m = std::max(m, w.max_gen());
        return m;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += C(c).get_str() + "*[" + w.to_string() + "]";
        }
        return out;
    }

private:
    Terms terms_;
};

using ZF = GroupRingElement<Rational>;

template <class C>
bool is_zero(const GroupRingElement<C>& a) {
    return a.is_zero();
}

}  // namespace lmforge
