#pragma once

#include <string>
#include <vector>

#include "lmforge/functors.hpp"

namespace lmforge::fixtures {

// Subfunctor spanned by the columns of bases[n] (assumed invariant).
inline UGFunctor subfunctor(const UGFunctor& f, const std::vector<FMatrix>& bases, const std::string& label) {
    UGFunctor out;
    out.ring = RingSpec::rational_functions();
    out.horizon = f.horizon;
    out.label = label;
    std::vector<FMatrix> left;
    for (const auto& b : bases) left.push_back(*left_inverse(b));
    for (int n = 0; n <= f.horizon; ++n) {
        auto un = static_cast<std::size_t>(n);
        out.dims.push_back(bases[un].cols());
        out.gens.emplace_back();
        for (const auto& g : f.gens[un]) out.gens.back().push_back(*solve_in_span(bases[un], left[un], FMatrix(g * bases[un])));
        if (n < f.horizon)
            out.stab.push_back(*solve_in_span(bases[un + 1], left[un + 1], FMatrix(f.stab[un] * bases[un])));
    }
    out.finalize();
    return out;
}

// Kernel of the invariant covector (1, s, ..., s^{n-1}) of the unreduced Burau functor.
inline UGFunctor reduced_burau(const RatFunc& s, int horizon) {
    UGFunctor bur = burau_reference(s, horizon, RingSpec::rational_functions());
    std::vector<FMatrix> bases;
    for (int n = 0; n <= horizon; ++n) {
        auto d = static_cast<std::size_t>(n);
        FMatrix b(d, d > 0 ? d - 1 : 0);
        for (std::size_t j = 0; j + 1 < d; ++j) {
            b(j + 1, j) = RatFunc(1);
            b(j, j) = -s;
        }
        bases.push_back(b);
    }
    return subfunctor(bur, bases, "reduced-burau");
}

// R at levels 0..cut, zero above.
inline UGFunctor truncated_constant(const LongMoodySystem& sys, int cut, int horizon) {
    UGFunctor f;
    f.ring = RingSpec::integers();
    f.horizon = horizon;
    f.label = "constant<=" + std::to_string(cut);
    for (int n = 0; n <= horizon; ++n) {
        std::size_t d = n <= cut ? 1 : 0;
        f.dims.push_back(d);
        f.gens.emplace_back(static_cast<std::size_t>(sys.num_generators(n)), FMatrix::identity(d));
        if (n < horizon) f.stab.push_back(n + 1 <= cut ? FMatrix::identity(1) : FMatrix(0, d));
    }
    f.finalize();
    return f;
}

}  // namespace lmforge::fixtures
