#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lmforge/systems/system.hpp"

namespace lmforge {

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
}

}  // namespace detail

inline LongMoodySystem system_from_json(const nlohmann::json& j) {
    try {
        if (j.value("kind", std::string("custom")) != "custom")
            throw Error(ErrorKind::ParseError, "only kind 'custom' can be loaded from a file");
        int r = j.at("r").get<int>();
        int r0 = j.at("r0").get<int>();
        std::vector<CustomLevel> levels;
        const auto& lvls = j.at("levels");
        levels.resize(lvls.size());
        std::vector<bool> seen(lvls.size(), false);
        for (const auto& lv : lvls) {
            int n = lv.at("n").get<int>();
            if (n < 0 || n >= static_cast<int>(lvls.size()) || seen[static_cast<std::size_t>(n)])
                throw Error(ErrorKind::ParseError, "levels must be 0..N without gaps or repeats");
            seen[static_cast<std::size_t>(n)] = true;
            CustomLevel& out = levels[static_cast<std::size_t>(n)];
            int m = n * r + r0;
            auto endo = [&](const nlohmann::json& images) {
                std::vector<FreeWord> ws;
                for (const auto& w : images) ws.push_back(FreeWord::parse(w.get<std::string>()));
                if (static_cast<int>(ws.size()) != m)
                    throw Error(ErrorKind::ArityMismatch, "level " + std::to_string(n) + " generator lists " +
                                                              std::to_string(ws.size()) + " images, expected " +
                                                              std::to_string(m));
                return FreeEndomorphism(m, ws);
            };
            for (const auto& g : lv.at("g_generators")) out.generators.push_back(endo(g));
            if (lv.contains("g_inverses"))
                for (const auto& g : lv.at("g_inverses")) out.inverses.push_back(endo(g));
            if (lv.contains("sigma"))
                for (const auto& w : lv.at("sigma")) out.sigma.push_back(GroupWord::parse(n + 1, w.get<std::string>()));
            if (lv.contains("gamma"))
                for (const auto& w : lv.at("gamma")) out.gamma.push_back(GroupWord::parse(n + 1, w.get<std::string>()));
        }
        std::vector<Letter> braiding = parse_letters(j.value("braiding", std::string("e")), "s");
        std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> relations;
        if (j.contains("relations"))
            for (const auto& rel : j.at("relations")) {
                if (!rel.is_array() || rel.size() != 2) throw Error(ErrorKind::ParseError, "relation must be [lhs, rhs]");
                relations.emplace_back(parse_letters(rel[0].get<std::string>(), "s"),
                                       parse_letters(rel[1].get<std::string>(), "s"));
            }
        return LongMoodySystem::custom(j.value("name", std::string("custom")), r, r0, std::move(levels),
                                       std::move(braiding), std::move(relations));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("system config: ") + e.what());
    }
}

// Tables for levels 0..top in the custom format; sigma is written up to top - 1.
inline nlohmann::json system_to_json(const LongMoodySystem& sys, int top) {
    nlohmann::json j;
    j["kind"] = "custom";
    j["name"] = sys.name();
    j["r"] = sys.r();
    j["r0"] = sys.r0();
    j["braiding"] = sys.braiding().to_string();
    nlohmann::json levels = nlohmann::json::array();
    for (int n = 0; n <= top; ++n) {
        nlohmann::json lv;
        lv["n"] = n;
        auto images = [](const FreeEndomorphism& phi) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& w : phi.images()) a.push_back(w.to_string());
            return a;
        };
        lv["g_generators"] = nlohmann::json::array();
        lv["g_inverses"] = nlohmann::json::array();
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            lv["g_generators"].push_back(images(sys.action_generator(n, i, 1)));
            lv["g_inverses"].push_back(images(sys.action_generator(n, i, -1)));
        }
        if (n < top) {
            lv["sigma"] = nlohmann::json::array();
            for (int k = 1; k <= sys.rank(n); ++k) lv["sigma"].push_back(sys.sigma_generator(n, k).to_string());
        }
        levels.push_back(lv);
    }
    j["levels"] = levels;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& [a, b] : sys.relations(top)) rels.push_back({a.to_string(), b.to_string()});
    j["relations"] = rels;
    return j;
}

// A built-in name or a path to a JSON config.
inline LongMoodySystem load_system(const std::string& selector) {
    if (LongMoodySystem::is_builtin(selector)) return LongMoodySystem::builtin(selector);
    return system_from_json(detail::read_json_file(selector));
}

}  // namespace lmforge
