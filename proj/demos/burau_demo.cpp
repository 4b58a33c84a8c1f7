// Recovers the unreduced Burau representation from a character of the braid
// group and prints the degree estimates of the result.
#include <iostream>

#include "lmforge/functors.hpp"
#include "lmforge/longmoody.hpp"
#include "lmforge/polydeg.hpp"

using namespace lmforge;

namespace {

void print(const FMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << m(i, j).to_string();
        std::cout << "]\n";
    }
}

std::string show(const std::optional<int>& d) { return d ? std::to_string(*d) : "undetermined"; }

}  // namespace

int main() {
    auto sys = LongMoodySystem::braid_sigma1();
    auto t = RatFunc::t();
    auto lm = lm_apply(sys, make_character(sys, t, 7)).functor;

    std::cout << "LM(character t)(s1) at n = 3:\n";
    print(lm.generator(3, 1));
    std::cout << "t^-1 times it, transposed:\n";
    print(lm.generator(3, 1).scaled(RatFunc::t(-1)).transpose());
    std::cout << "unreduced Burau at t^2, s1 at n = 3:\n";
    print(burau_reference(RatFunc::t(2), 3).generator(3, 1));

    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i)
            if (lm.generator(n, i).scaled(RatFunc::t(-1)).transpose() != burau_reference(RatFunc::t(2), 6).generator(n, i)) {
                std::cout << "mismatch at n = " << n << ", i = " << i << "\n";
                return 1;
            }
    std::cout << "match for 2 <= n <= 6\n\n";

    auto strong = degree(lm, sys, DegreeMode::Strong, 6);
    auto weak = weak_degree(lm, sys, 6, 3);
    std::cout << "strong degree " << show(strong.degree) << ", weak degree " << show(weak.degree)
              << " (levels <= 6)\n";
    return 0;
}
