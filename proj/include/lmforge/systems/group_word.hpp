#pragma once

#include <string>
#include <vector>

#include "lmforge/freefox/word.hpp"

namespace lmforge {

// Word in the generators s_1, s_2, ... of G_level, freely reduced.
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(int level, const std::vector<Letter>& letters) : level_(level) {
        for (const auto& l : letters) push(l);
    }
    static GroupWord identity(int level) { return GroupWord(level, {}); }
    static GroupWord gen(int level, int i, int exp = 1) { return GroupWord(level, {{i, exp}}); }
    static GroupWord parse(int level, const std::string& text) { return GroupWord(level, parse_letters(text, "s")); }

    int level() const { return level_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    int max_gen() const {
        int m = 0;
        for (const auto& l : letters_) m = std::max(m, l.gen);
        return m;
    }

    GroupWord inverse() const {
        GroupWord w(level_, {});
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
        return w;
    }

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
        if (a.level_ != b.level_)
            throw Error(ErrorKind::LevelMismatch,
                        "product of words at levels " + std::to_string(a.level_) + " and " + std::to_string(b.level_));
        GroupWord w = a;
        for (const auto& l : b.letters_) w.push(l);
        return w;
    }

    // The same letters read at a higher level (g |-> g # id).
    GroupWord at_level(int level) const {
        if (level < level_) throw Error(ErrorKind::LevelMismatch, "cannot lower a word's level");
        GroupWord w = *this;
        w.level_ = level;
        return w;
    }

    bool operator==(const GroupWord&) const = default;

    std::string to_string() const { return format_letters(letters_, "s"); }

private:
    void push(const Letter& l) {
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    int level_ = 0;
    std::vector<Letter> letters_;
};

}  // namespace lmforge
