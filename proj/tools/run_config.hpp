#pragma once

#include <cstdint>
#include <string>

#include "ravel/catalog.hpp"
#include "ravel/classify.hpp"
#include "ravel/report.hpp"
#include "ravel/verify.hpp"

namespace ravel::cli {

inline constexpr const char* kConfigEnv = "RAVEL_CONFIG";

struct RunConfig {
    int search_budget = kDefaultSearchBudget;
    int reidemeister_budget = kDefaultReidemeisterBudget;
    std::uint64_t link_cap = 100000;
    int max_closure_crossings = 60;  // classify/verify refuse bigger closures
    // enumeration bounds
    int max_summands = 2;
    int max_crossings = 6;  // per summand
    int min_vertices = 0;
    int max_vertices = 2;
    bool both_signs = true;
    int threads = 1;
    std::string out;  // empty: stdout
    ReportFormat format = ReportFormat::Json;

    ClassifyOptions classify_options(bool refine) const;
    OracleOptions oracle_options() const;
    CatalogBounds bounds() const;
    void validate() const;  // throws std::invalid_argument
};

// Keys mirror the field names; unknown keys are an error.
RunConfig load_config(const std::string& path);

// Reads $RAVEL_CONFIG when set, defaults otherwise.
RunConfig default_config();

}  // namespace ravel::cli
