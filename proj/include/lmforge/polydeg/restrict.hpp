#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lmforge/functors/ugfunctor.hpp"

namespace lmforge {

struct CharacterTable {
    std::vector<std::string> classes;       // representative words in s_1..s_{m-1}
    std::vector<long> class_sizes;
    std::vector<std::string> partitions;
    std::vector<std::vector<long>> values;  // values[irrep][class]
    long order = 1;
};

inline CharacterTable symmetric_character_table(int m) {
    switch (m) {
        case 1: return {{"e"}, {1}, {"[1]"}, {{1}}, 1};
        case 2: return {{"e", "s1"}, {1, 1}, {"[2]", "[1,1]"}, {{1, 1}, {1, -1}}, 2};
        case 3:
            return {{"e", "s1", "s1 s2"}, {1, 3, 2}, {"[3]", "[2,1]", "[1,1,1]"}, {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}}, 6};
        case 4:
            return {{"e", "s1", "s1 s3", "s1 s2", "s1 s2 s3"},
                    {1, 6, 3, 8, 6},
                    {"[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"},
                    {{1, 1, 1, 1, 1}, {3, 1, -1, 0, -1}, {2, 0, 2, -1, 0}, {3, -1, -1, 0, 1}, {1, -1, 1, 1, -1}},
                    24};
        default:
            throw Error(ErrorKind::Unsupported, "character tables are available for m <= 4");
    }
}

struct Restriction {
    int n = 0;
    int m = 0;
    std::vector<std::string> classes;
    std::vector<Rational> traces;
    std::vector<std::pair<std::string, long>> multiplicities;
};

// Decomposes F(n) restricted to S_m = <s_1, ..., s_{m-1}> into irreducibles.
inline Restriction restrict_decompose(const UGFunctor& f, const LongMoodySystem& sys, int n, int m) {
    if (sys.kind() != SystemKind::Symmetric)
        throw Error(ErrorKind::Unsupported, "restriction needs a symmetric-group system");
    if (m < 1 || m > n) throw Error(ErrorKind::IndexOutOfRange, "need 1 <= m <= n");
    f.require_level(n);
    CharacterTable table = symmetric_character_table(m);
    Restriction out;
    out.n = n;
    out.m = m;
    out.classes = table.classes;
    for (const auto& c : table.classes) {
        FMatrix g = evaluate_word(f, GroupWord::parse(n, c));
        RatFunc tr(0);
        for (std::size_t i = 0; i < g.rows(); ++i) tr += g(i, i);
        if (!tr.is_constant())
            throw Error(ErrorKind::NonIntegerMultiplicity, "trace " + tr.to_string() + " is not a constant");
        out.traces.push_back(tr.constant_value());
    }
    for (std::size_t k = 0; k < table.partitions.size(); ++k) {
        Rational acc = 0;
        for (std::size_t c = 0; c < table.classes.size(); ++c)
            acc += Rational(table.class_sizes[c] * table.values[k][c]) * out.traces[c];
        acc /= table.order;
        if (acc.get_den() != 1 || acc < 0)
            throw Error(ErrorKind::NonIntegerMultiplicity, table.partitions[k] + " has multiplicity " + acc.get_str());
        out.multiplicities.emplace_back(table.partitions[k], acc.get_num().get_si());
    }
    return out;
}

}  // namespace lmforge
