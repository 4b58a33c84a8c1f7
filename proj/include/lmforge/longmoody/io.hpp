#pragma once

#include <json.hpp>

#include "lmforge/functors/config.hpp"
#include "lmforge/longmoody/lm.hpp"

namespace lmforge {

// Functor config plus provenance and block layout.
inline nlohmann::json lm_result_to_json(const LMResult& res) {
    nlohmann::json j = functor_to_json(res.functor);
    j["system"] = res.system;
    j["input"] = res.input;
    j["iterations"] = res.iterations;
    j["blocks"] = res.blocks;
    j["block_dims"] = res.block_dims;
    return j;
}

}  // namespace lmforge
