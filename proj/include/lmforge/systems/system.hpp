#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lmforge/freefox/endomorphism.hpp"
#include "lmforge/systems/group_word.hpp"

namespace lmforge {

enum class SystemKind { Braid, Symmetric, Custom };

// Standard: s_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i.
// Mirror:   s_i sends x_i -> x_{i+1} and x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
enum class ArtinConvention { Standard, Mirror };

enum class SigmaRule { Trivial, NegativeSquares, PositiveSquares, Table };

struct CustomLevel {
    std::vector<FreeEndomorphism> generators;
    std::vector<FreeEndomorphism> inverses;  // optional
    std::vector<GroupWord> sigma;            // images of x_1..x_rank at level n + 1
    std::vector<GroupWord> gamma;            // optional images of the generators at level n + 1
};

// The data (G, H, A, sigma) from which the Long-Moody functor is built.
// Levels are indexed by n; H_n is free of rank n*r + r0 with the newest copy of
// H in the first r positions.
class LongMoodySystem {
public:
    static constexpr int kUnbounded = 1 << 20;

    static LongMoodySystem braid_sigma1() {
        return builtin_braid("braid-sigma1", ArtinConvention::Standard, SigmaRule::NegativeSquares, -1);
    }
    static LongMoodySystem braid_sigma1_positive() {
        return builtin_braid("braid-sigma1-positive", ArtinConvention::Mirror, SigmaRule::PositiveSquares, 1);
    }
    static LongMoodySystem braid_trivial() {
        return builtin_braid("braid-trivial", ArtinConvention::Standard, SigmaRule::Trivial, -1);
    }
    static LongMoodySystem symmetric_trivial() {
        LongMoodySystem s;
        s.name_ = "symmetric-trivial";
        s.kind_ = SystemKind::Symmetric;
        s.sigma_rule_ = SigmaRule::Trivial;
        s.braiding_ = {{1, 1}};
        return s;
    }
    static std::vector<std::string> builtin_names() {
        return {"braid-sigma1", "braid-sigma1-positive", "braid-trivial", "symmetric-trivial"};
    }
    static bool is_builtin(const std::string& name) {
        for (const auto& n : builtin_names())
            if (n == name) return true;
        return false;
    }
    static LongMoodySystem builtin(const std::string& name) {
        if (name == "braid-sigma1") return braid_sigma1();
        if (name == "braid-sigma1-positive") return braid_sigma1_positive();
        if (name == "braid-trivial") return braid_trivial();
        if (name == "symmetric-trivial") return symmetric_trivial();
        throw Error(ErrorKind::ParseError, "unknown built-in system '" + name + "'");
    }

    static LongMoodySystem custom(std::string name, int r, int r0, std::vector<CustomLevel> levels,
                                  std::vector<Letter> braiding,
                                  std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> relations) {
        LongMoodySystem s;
        s.name_ = std::move(name);
        s.kind_ = SystemKind::Custom;
        s.sigma_rule_ = SigmaRule::Table;
        s.r_ = r;
        s.r0_ = r0;
        s.levels_ = std::move(levels);
        s.braiding_ = std::move(braiding);
        s.relations_ = std::move(relations);
        s.validate_tables();
        return s;
    }

    const std::string& name() const { return name_; }
    SystemKind kind() const { return kind_; }
    SigmaRule sigma_rule() const { return sigma_rule_; }
    int r() const { return r_; }
    int r0() const { return r0_; }
    int rank(int n) const { return n * r_ + r0_; }
    // Highest level with complete data.
    int horizon() const { return kind_ == SystemKind::Custom ? static_cast<int>(levels_.size()) - 1 : kUnbounded; }

    int num_generators(int n) const {
        require_level(n);
        if (kind_ == SystemKind::Custom) return static_cast<int>(levels_[static_cast<std::size_t>(n)].generators.size());
        return n >= 2 ? n - 1 : 0;
    }

    std::string equality_oracle() const {
        switch (kind_) {
            case SystemKind::Braid: return "artin-action";
            case SystemKind::Symmetric: return "permutation";
            case SystemKind::Custom: return "action-equality";
        }
        return "?";
    }

    // A_n(s_i^exp) as an endomorphism of H_n.
    FreeEndomorphism action_generator(int n, int i, int exp) const {
        require_generator(n, i);
        int m = rank(n);
        if (kind_ == SystemKind::Custom) {
            const auto& lv = levels_[static_cast<std::size_t>(n)];
            if (exp > 0) return lv.generators[static_cast<std::size_t>(i - 1)];
            if (lv.inverses.empty())
                throw Error(ErrorKind::Unsupported, "custom system lists no inverse for s" + std::to_string(i));
            return lv.inverses[static_cast<std::size_t>(i - 1)];
        }
        auto images = FreeEndomorphism::identity(m).images();
        auto ui = static_cast<std::size_t>(i - 1);
        if (kind_ == SystemKind::Symmetric) {
            std::swap(images[ui], images[ui + 1]);
            return {m, images};
        }
        bool forward = (exp > 0) == (artin_ == ArtinConvention::Standard);
        if (forward) {
            images[ui] = FreeWord({{i, 1}, {i + 1, 1}, {i, -1}});
            images[ui + 1] = FreeWord::gen(i);
        } else {
            images[ui] = FreeWord::gen(i + 1);
            images[ui + 1] = FreeWord({{i + 1, -1}, {i, 1}, {i + 1, 1}});
        }
        return {m, images};
    }

    // A(g1 g2) = A(g1) o A(g2).
    FreeEndomorphism action_of(const GroupWord& g) const {
        FreeEndomorphism phi = FreeEndomorphism::identity(rank(g.level()));
        for (const auto& l : g.letters()) phi = phi.compose(action_generator(g.level(), l.gen, l.exp));
        return phi;
    }

    // sigma_n(x_k) as a word at level n + 1.
    GroupWord sigma_generator(int n, int k) const {
        require_level(n);
        if (k < 1 || k > rank(n))
            throw Error(ErrorKind::IndexOutOfRange, "x" + std::to_string(k) + " not in H_" + std::to_string(n));
        switch (sigma_rule_) {
            case SigmaRule::Trivial:
                return GroupWord::identity(n + 1);
            case SigmaRule::Table: {
                const auto& table = levels_[static_cast<std::size_t>(n)].sigma;
                if (table.empty())
                    throw Error(ErrorKind::HorizonExceeded, "no sigma table at level " + std::to_string(n));
                return table[static_cast<std::size_t>(k - 1)];
            }
            case SigmaRule::NegativeSquares:
            case SigmaRule::PositiveSquares: {
                int e = sigma_rule_ == SigmaRule::NegativeSquares ? -1 : 1;
                std::vector<Letter> ls;
                for (int j = 1; j < k; ++j) ls.push_back({j, -e});
                ls.push_back({k, e});
                ls.push_back({k, e});
                for (int j = k - 1; j >= 1; --j) ls.push_back({j, e});
                return GroupWord(n + 1, ls);
            }
        }
        return GroupWord::identity(n + 1);
    }

    GroupWord sigma_of(int n, const FreeWord& h) const {
        GroupWord out = GroupWord::identity(n + 1);
        for (const auto& l : h.letters()) {
            GroupWord s = sigma_generator(n, l.gen);
            out = out * (l.exp > 0 ? s : s.inverse());
        }
        return out;
    }

    bool sigma_is_trivial(int up_to) const {
        if (sigma_rule_ == SigmaRule::Trivial) return true;
        if (sigma_rule_ != SigmaRule::Table) return false;
        for (int n = 0; n <= std::min(up_to, horizon()); ++n)
            for (const auto& w : levels_[static_cast<std::size_t>(n)].sigma)
                if (!group_equal(w, GroupWord::identity(w.level()))) return false;
        return true;
    }

    // id_1 # g, one level up.
    GroupWord gamma(const GroupWord& g) const {
        if (kind_ == SystemKind::Custom && !levels_[static_cast<std::size_t>(g.level())].gamma.empty()) {
            const auto& table = levels_[static_cast<std::size_t>(g.level())].gamma;
            GroupWord out = GroupWord::identity(g.level() + 1);
            for (const auto& l : g.letters()) {
                const GroupWord& img = table[static_cast<std::size_t>(l.gen - 1)];
                out = out * (l.exp > 0 ? img : img.inverse());
            }
            return out;
        }
        std::vector<Letter> ls;
        for (const auto& l : g.letters()) ls.push_back({l.gen + 1, l.exp});
        return GroupWord(g.level() + 1, ls);
    }
    GroupWord gamma_pow(const GroupWord& g, int m) const {
        GroupWord out = g;
        for (int k = 0; k < m; ++k) out = gamma(out);
        return out;
    }

    GroupWord braiding() const { return GroupWord(2, braiding_); }

    // (b_{1,m})^-1 # id at the given level: gamma^{m-1}(b^-1) ... gamma(b^-1) b^-1.
    GroupWord braiding_inverse_at(int level, int m = 1) const {
        if (level < m + 1) throw Error(ErrorKind::LevelMismatch, "braiding needs level >= m + 1");
        GroupWord binv = braiding().inverse();
        GroupWord out = GroupWord::identity(m + 1);
        GroupWord factor = binv;
        std::vector<GroupWord> factors;
        for (int k = 0; k < m; ++k) {
            factors.push_back(factor.at_level(m + 1));
            factor = gamma(factor);
        }
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) out = out * *it;
        return out.at_level(level);
    }

    // Embedding H_n -> H_{n+1}, x_k -> x_{k+r}.
    FreeWord shift(const FreeWord& h) const {
        std::vector<Letter> ls;
        for (const auto& l : h.letters()) ls.push_back({l.gen + r_, l.exp});
        return FreeWord(ls);
    }

    bool group_equal(const GroupWord& a, const GroupWord& b) const {
        if (a.level() != b.level())
            throw Error(ErrorKind::LevelMismatch, "comparing words at different levels");
        if (a == b) return true;
        if (kind_ == SystemKind::Symmetric) return permutation_of(a) == permutation_of(b);
        return action_of(a) == action_of(b);
    }

    // Defining relations of G_n as pairs of words.
    std::vector<std::pair<GroupWord, GroupWord>> relations(int n) const {
        std::vector<std::pair<GroupWord, GroupWord>> out;
        int g = num_generators(n);
        if (kind_ == SystemKind::Custom) {
            for (const auto& [lhs, rhs] : relations_) {
                GroupWord a(n, lhs), b(n, rhs);
                if (std::max(a.max_gen(), b.max_gen()) <= g) out.emplace_back(a, b);
            }
            return out;
        }
        for (int i = 1; i <= g; ++i) {
            if (i + 1 <= g)
                out.emplace_back(GroupWord(n, {{i, 1}, {i + 1, 1}, {i, 1}}), GroupWord(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}}));
            for (int j = i + 2; j <= g; ++j)
                out.emplace_back(GroupWord(n, {{i, 1}, {j, 1}}), GroupWord(n, {{j, 1}, {i, 1}}));
            if (kind_ == SystemKind::Symmetric) out.emplace_back(GroupWord(n, {{i, 1}, {i, 1}}), GroupWord::identity(n));
        }
        return out;
    }

    const std::vector<CustomLevel>& custom_levels() const { return levels_; }
    const std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>>& custom_relations() const {
        return relations_;
    }

    void require_level(int n) const {
        if (n < 0 || n > horizon())
            throw Error(ErrorKind::HorizonExceeded,
                        "level " + std::to_string(n) + " beyond system horizon " + std::to_string(horizon()));
    }

private:
    static LongMoodySystem builtin_braid(std::string name, ArtinConvention a, SigmaRule s, int braiding_exp) {
        LongMoodySystem sys;
        sys.name_ = std::move(name);
        sys.kind_ = SystemKind::Braid;
        sys.artin_ = a;
        sys.sigma_rule_ = s;
        sys.braiding_ = {{1, braiding_exp}};
        return sys;
    }

    void require_generator(int n, int i) const {
        if (i < 1 || i > num_generators(n))
            throw Error(ErrorKind::IndexOutOfRange,
                        "s" + std::to_string(i) + " is not a generator of G_" + std::to_string(n));
    }

    // Image indices of x_1..x_n under the action (symmetric groups only).
    std::vector<int> permutation_of(const GroupWord& g) const {
        std::vector<int> p(static_cast<std::size_t>(rank(g.level())));
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<int>(j);
        for (const auto& l : g.letters()) {
            require_generator(g.level(), l.gen);
            auto i = static_cast<std::size_t>(l.gen - 1);
            // p <- p o tau_i
            std::swap(p[i], p[i + 1]);
        }
        return p;
    }

    void validate_tables() const {
        if (r_ < 0 || r0_ < 0) throw Error(ErrorKind::ParseError, "negative rank");
        if (levels_.empty()) throw Error(ErrorKind::ParseError, "custom system has no levels");
        for (std::size_t n = 0; n < levels_.size(); ++n) {
            const auto& lv = levels_[n];
            int m = rank(static_cast<int>(n));
            for (const auto& phi : lv.generators)
                if (phi.arity() != m)
                    throw Error(ErrorKind::ArityMismatch, "generator at level " + std::to_string(n) + " acts on F_" +
                                                              std::to_string(phi.arity()) + ", expected F_" +
                                                              std::to_string(m));
            if (!lv.inverses.empty() && lv.inverses.size() != lv.generators.size())
                throw Error(ErrorKind::ArityMismatch, "inverse table size at level " + std::to_string(n));
            for (const auto& phi : lv.inverses)
                if (phi.arity() != m) throw Error(ErrorKind::ArityMismatch, "inverse arity at level " + std::to_string(n));
            if (n + 1 < levels_.size() && static_cast<int>(lv.sigma.size()) != m)
                throw Error(ErrorKind::ArityMismatch, "sigma at level " + std::to_string(n) + " needs " +
                                                          std::to_string(m) + " words");
            for (const auto& w : lv.sigma)
                if (w.level() != static_cast<int>(n) + 1)
                    throw Error(ErrorKind::LevelMismatch, "sigma word must live at level n + 1");
            if (!lv.gamma.empty() && lv.gamma.size() != lv.generators.size())
                throw Error(ErrorKind::ArityMismatch, "gamma table size at level " + std::to_string(n));
        }
    }

    std::string name_;
    SystemKind kind_ = SystemKind::Braid;
    ArtinConvention artin_ = ArtinConvention::Standard;
    SigmaRule sigma_rule_ = SigmaRule::Trivial;
    int r_ = 1;
    int r0_ = 0;
    std::vector<Letter> braiding_;
    std::vector<CustomLevel> levels_;
    std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> relations_;
};

}  // namespace lmforge
