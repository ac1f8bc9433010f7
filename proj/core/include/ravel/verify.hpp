#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ravel/classify.hpp"
#include "ravel/dsl.hpp"
#include "ravel/invariants.hpp"

namespace ravel {

struct ConstituentStatus {
    std::vector<int> cycles;
    int crossings = 0;
    int components = 0;
    Triviality status = Triviality::Inconclusive;
    std::string jones;
    std::string pd;  // PD text
};

struct OracleOptions {
    int search_budget = kDefaultSearchBudget;
    int reidemeister_budget = kDefaultReidemeisterBudget;
    std::size_t link_cap = 100000;
    bool stop_at_nontrivial = false;
    bool search_always = false;  // run the planarity search whatever the verdict
};

struct OracleReport {
    std::vector<ConstituentStatus> constituents;
    int trivial = 0, nontrivial = 0, inconclusive = 0;
    std::string error;  // enumeration or bracket budget exceeded
    std::optional<PlanarityResult> planarity;

    bool certified_planar() const { return planarity && planarity->certified; }
};

OracleReport run_oracle(const Diagram& closure, const OracleOptions& opt, bool search_planarity);

enum class Agreement { Agree, Disagree, Inconclusive, NotApplicable };
const char* to_string(Agreement a);

// Does the oracle back the verdict?
//   Ravel: every constituent trivial and no planar certificate
//   ContainsNontrivialKnotOrLink: some constituent non-trivial
//   Planar: a planar certificate and nothing non-trivial
//   NotRavel: a non-trivial constituent or a planar certificate
Agreement judge(const Verdict& v, const OracleReport& o, std::string* why = nullptr);

struct Verification {
    Classification classification;
    OracleReport oracle;
    Agreement agreement = Agreement::NotApplicable;
    std::string detail;
};

bool wants_planarity(VerdictKind k);

Verification verify(const ParsedInput& in, const ClassifyOptions& copt = {}, const OracleOptions& oopt = {});
Classification classify_input(const ParsedInput& in, const ClassifyOptions& opt = {});

}  // namespace ravel
