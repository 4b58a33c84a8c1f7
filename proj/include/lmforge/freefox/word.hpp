#pragma once

#include <cctype>
#include <compare>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "lmforge/error.hpp"

namespace lmforge {

struct Letter {
    int gen = 1;  // 1-based generator index
    int exp = 1;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
    Letter inverse() const { return {gen, -exp}; }
};

// Parses "x1 x2^-1 x1^3" (any alphabetic prefix; "e" is the identity) into
// unit letters, expanding powers.
inline std::vector<Letter> parse_letters(const std::string& text, const std::string& prefix) {
    std::vector<Letter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "e" || tok == "1") continue;
        std::size_t p = 0;
        while (p < tok.size() && std::isalpha(static_cast<unsigned char>(tok[p]))) ++p;
        std::string head = tok.substr(0, p);
        if (head.empty() || (!prefix.empty() && head != prefix))
            throw Error(ErrorKind::ParseError, "bad letter '" + tok + "' (expected prefix '" + prefix + "')");
        std::size_t digits = p;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p == digits) throw Error(ErrorKind::ParseError, "missing index in '" + tok + "'");
        int gen = std::stoi(tok.substr(digits, p - digits));
        if (gen < 1) throw Error(ErrorKind::IndexOutOfRange, "generator index must be >= 1 in '" + tok + "'");
        int power = 1;
        if (p < tok.size()) {
            if (tok[p] != '^' || p + 1 == tok.size()) throw Error(ErrorKind::ParseError, "bad exponent in '" + tok + "'");
            try {
                std::size_t used = 0;
                power = std::stoi(tok.substr(p + 1), &used);
                if (used != tok.size() - p - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad exponent in '" + tok + "'");
            }
        }
        for (int k = 0; k < std::abs(power); ++k) out.push_back({gen, power > 0 ? 1 : -1});
    }
    return out;
}

inline std::string format_letters(const std::vector<Letter>& letters, const std::string& prefix) {
    if (letters.empty()) return "e";
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += ' ';
        out += prefix + std::to_string(l.gen);
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

// Freely reduced word in x_1, x_2, ...
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(const std::vector<Letter>& letters) {
        for (const auto& l : letters) push(l);
    }
    static FreeWord gen(int i, int exp = 1) {
        FreeWord w;
        for (int k = 0; k < std::abs(exp); ++k) w.push({i, exp > 0 ? 1 : -1});
        return w;
    }
    static FreeWord parse(const std::string& text) { return FreeWord(parse_letters(text, "x")); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    int max_gen() const {
        int m = 0;
        for (const auto& l : letters_) m = std::max(m, l.gen);
        return m;
    }
    int exponent_sum(int k) const {
        int s = 0;
        for (const auto& l : letters_)
            if (l.gen == k) s += l.exp;
        return s;
    }

    FreeWord inverse() const {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
        return w;
    }

    // Suffix starting at position p (already reduced).
    FreeWord suffix(std::size_t p) const {
        FreeWord w;
        w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(p), letters_.end());
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        FreeWord w = a;
        for (const auto& l : b.letters_) w.push(l);
        return w;
    }
    FreeWord& operator*=(const FreeWord& b) {
        for (const auto& l : b.letters_) push(l);
        return *this;
    }

    auto operator<=>(const FreeWord&) const = default;
    bool operator==(const FreeWord&) const = default;

    std::string to_string() const { return format_letters(letters_, "x"); }

    // Is this word u x_k^{+1} u^{-1} for some u?
    bool is_conjugate_of_generator(int k) const {
        std::size_t n = letters_.size();
        if (n % 2 == 0) return false;
        std::size_t m = n / 2;
        if (letters_[m] != Letter{k, 1}) return false;
        for (std::size_t i = 0; i < m; ++i)
            if (letters_[n - 1 - i] != letters_[i].inverse()) return false;
        return true;
    }

private:
    void push(const Letter& l) {
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

}  // namespace lmforge
