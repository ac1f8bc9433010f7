#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ravel::cli {

ClassifyOptions RunConfig::classify_options(bool refine) const {
    ClassifyOptions o;
    o.refine = refine;
    o.budget = search_budget;
    return o;
}

OracleOptions RunConfig::oracle_options() const {
    OracleOptions o;
    o.search_budget = search_budget;
    o.reidemeister_budget = reidemeister_budget;
    o.link_cap = link_cap;
    return o;
}

CatalogBounds RunConfig::bounds() const {
    return {max_summands, max_crossings, min_vertices, max_vertices, both_signs};
}

void RunConfig::validate() const {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    need(search_budget > 0, "search_budget must be positive");
    need(reidemeister_budget > 0, "reidemeister_budget must be positive");
    need(link_cap > 0, "link_cap must be positive");
    need(max_closure_crossings > 0, "max_closure_crossings must be positive");
    // zero summands is allowed and gives an empty enumeration
    need(max_summands >= 0 && max_crossings >= 0, "enumeration bounds must be non-negative");
    need(min_vertices >= 0 && max_vertices >= min_vertices, "need 0 <= min_vertices <= max_vertices");
    need(threads > 0, "threads must be positive");
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config " + path + " must be a JSON object");
    RunConfig c;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const auto& v = it.value();
        try {
            if (k == "search_budget") c.search_budget = v.get<int>();
            else if (k == "reidemeister_budget") c.reidemeister_budget = v.get<int>();
            else if (k == "link_cap") c.link_cap = v.get<std::uint64_t>();
            else if (k == "max_closure_crossings") c.max_closure_crossings = v.get<int>();
            else if (k == "max_summands") c.max_summands = v.get<int>();
            else if (k == "max_crossings") c.max_crossings = v.get<int>();
            else if (k == "min_vertices") c.min_vertices = v.get<int>();
            else if (k == "max_vertices") c.max_vertices = v.get<int>();
            else if (k == "both_signs") c.both_signs = v.get<bool>();
            else if (k == "threads") c.threads = v.get<int>();
            else if (k == "out") c.out = v.get<std::string>();
            else if (k == "format") c.format = parse_report_format(v.get<std::string>());
            else throw std::invalid_argument("unknown key");
        } catch (const std::exception& e) {
            throw std::invalid_argument("config " + path + ", key '" + k + "': " + e.what());
        }
    }
    c.validate();
    return c;
}

RunConfig default_config() {
    if (const char* p = std::getenv(kConfigEnv); p && *p) return load_config(p);
    return {};
}

}  // namespace ravel::cli
