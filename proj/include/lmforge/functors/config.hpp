#pragma once

#include <string>

#include <json.hpp>

#include "lmforge/functors/ugfunctor.hpp"

namespace lmforge {

inline nlohmann::json matrix_to_json(const FMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline FMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(rows) + " matrix rows");
    FMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error(ErrorKind::ParseError, "expected " + std::to_string(cols) + " entries in row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = j[i][c];
            if (e.is_number_integer())
                m(i, c) = RatFunc(e.get<long>());
            else if (e.is_string())
                m(i, c) = RatFunc::parse(e.get<std::string>());
            else
                throw Error(ErrorKind::ParseError, "matrix entries must be strings or integers");
        }
    }
    return m;
}

inline nlohmann::json functor_to_json(const UGFunctor& f) {
    nlohmann::json j;
    j["ring"] = f.ring.name();
    j["N"] = f.horizon;
    j["dims"] = f.dims;
    j["label"] = f.label;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& level : f.gens) {
        nlohmann::json lv = nlohmann::json::array();
        for (const auto& m : level) lv.push_back(matrix_to_json(m));
        gens.push_back(lv);
    }
    j["generators"] = gens;
    nlohmann::json stab = nlohmann::json::array();
    for (const auto& m : f.stab) stab.push_back(matrix_to_json(m));
    j["stab"] = stab;
    return j;
}

inline UGFunctor functor_from_json(const nlohmann::json& j) {
    try {
        UGFunctor f;
        f.ring = RingSpec::parse(j.at("ring").get<std::string>());
        f.horizon = j.at("N").get<int>();
        if (f.horizon < 0) throw Error(ErrorKind::ParseError, "N must be >= 0");
        f.dims = j.at("dims").get<std::vector<std::size_t>>();
        f.label = j.value("label", std::string("file"));
        if (static_cast<int>(f.dims.size()) != f.horizon + 1)
            throw Error(ErrorKind::ParseError, "dims must list levels 0..N");
        const auto& gens = j.at("generators");
        if (!gens.is_array() || static_cast<int>(gens.size()) != f.horizon + 1)
            throw Error(ErrorKind::ParseError, "generators must list levels 0..N");
        for (std::size_t n = 0; n < gens.size(); ++n) {
            f.gens.emplace_back();
            for (const auto& m : gens[n]) f.gens.back().push_back(matrix_from_json(m, f.dims[n], f.dims[n]));
        }
        if (j.contains("stab")) {
            const auto& stab = j.at("stab");
            if (!stab.is_array() || (stab.size() != 0 && static_cast<int>(stab.size()) != f.horizon))
                throw Error(ErrorKind::ParseError, "stab must list levels 0..N-1");
            for (std::size_t n = 0; n < stab.size(); ++n)
                f.stab.push_back(matrix_from_json(stab[n], f.dims[n + 1], f.dims[n]));
        }
        f.finalize();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("functor config: ") + e.what());
    }
}

}  // namespace lmforge
