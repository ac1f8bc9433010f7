#include "ravel/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ravel {

using nlohmann::json;

ReportFormat parse_report_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown report format '" + s + "' (json or text)");
}

namespace {

json trace_json(const RewriteTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back(s.str());
    return {{"initial_crossings", t.initial_crossings}, {"final_crossings", t.final_crossings}, {"steps", steps}};
}

json exceptional_json(const ExceptionalReport& r) {
    json conds = json::array();
    for (int i = 0; i < 4; ++i) {
        const auto& c = r.conditions[i];
        conds.push_back({{"condition", i + 1}, {"pass", c.pass}, {"summand", c.summand}, {"note", c.note}});
    }
    return {{"exceptional", r.exceptional}, {"infinity_summand", r.infinity_summand}, {"conditions", conds}};
}

json classification_json(const Classification& c) {
    json loops = json::array();
    for (const auto& l : c.witness.loops) loops.push_back({{"name", l.name}, {"arcs", l.arcs}});
    json w = {{"loops", loops}, {"summand", c.witness.summand}, {"notes", c.witness.notes},
              {"planarity_requested", c.witness.planarity_requested}};
    if (c.witness.exceptional) w["exceptional"] = exceptional_json(*c.witness.exceptional);
    if (c.witness.planarity) w["planarity"] = trace_json(*c.witness.planarity);
    if (c.witness.nontrivial) {
        w["nontrivial_pd"] = to_text(*c.witness.nontrivial);
        w["nontrivial_jones"] = c.witness.nontrivial_jones;
    }
    return {{"verdict", to_string(c.verdict.kind)},
            {"reason", c.verdict.reason},
            {"closure", {{"crossings", c.closure.crossing_count()}, {"vertices", c.closure.vertex_count()},
                         {"arcs", c.closure.arcs().size()}}},
            {"witness", w}};
}

json oracle_json(const OracleReport& o) {
    json cs = json::array();
    for (const auto& s : o.constituents)
        cs.push_back({{"cycles", s.cycles}, {"crossings", s.crossings}, {"components", s.components},
                      {"status", to_string(s.status)}, {"jones", s.jones}, {"pd", s.pd}});
    json j = {{"trivial", o.trivial}, {"nontrivial", o.nontrivial}, {"inconclusive", o.inconclusive},
              {"constituents", cs}};
    if (!o.error.empty()) j["error"] = o.error;
    if (o.planarity) {
        j["planarity"] = trace_json(o.planarity->trace);
        j["planarity"]["certified"] = o.planarity->certified;
        j["planarity"]["steps_used"] = o.planarity->steps_used;
    }
    return j;
}

void text_classification(std::ostream& os, const Classification& c) {
    os << "verdict: " << to_string(c.verdict.kind);
    if (!c.verdict.reason.empty()) os << " (" << c.verdict.reason << ")";
    os << "\nclosure: " << c.closure.crossing_count() << " crossings, " << c.closure.vertex_count() << " vertices\n";
    for (const auto& l : c.witness.loops) os << "loop " << l.name << ": " << l.arcs.size() << " arcs\n";
    if (c.witness.exceptional) os << "exceptional: " << c.witness.exceptional->summary() << "\n";
    for (const auto& n : c.witness.notes) os << "note: " << n << "\n";
    if (c.witness.nontrivial) os << "non-trivial constituent, jones " << c.witness.nontrivial_jones << "\n";
    if (c.witness.planarity)
        os << "planarity trace: " << c.witness.planarity->initial_crossings << " -> "
           << c.witness.planarity->final_crossings << " crossings in " << c.witness.planarity->steps.size()
           << " moves\n";
}

}  // namespace

std::string report_classification(const ParsedInput& in, const Classification& c, ReportFormat f) {
    if (f == ReportFormat::Json) {
        json j = classification_json(c);
        j["schema"] = kReportSchema;
        j["input"] = print_input(in);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "input: " << print_input(in) << "\n";
    text_classification(os, c);
    return os.str();
}

std::string report_verification(const ParsedInput& in, const Verification& v, ReportFormat f) {
    if (f == ReportFormat::Json) {
        json j = classification_json(v.classification);
        j["schema"] = kReportSchema;
        j["input"] = print_input(in);
        j["oracle"] = oracle_json(v.oracle);
        j["agreement"] = to_string(v.agreement);
        j["agreement_detail"] = v.detail;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "input: " << print_input(in) << "\n";
    text_classification(os, v.classification);
    os << "oracle: " << v.oracle.trivial << " trivial, " << v.oracle.nontrivial << " non-trivial, "
       << v.oracle.inconclusive << " inconclusive constituents\n";
    for (const auto& s : v.oracle.constituents)
        if (s.status != Triviality::Trivial)
            os << "  " << to_string(s.status) << " (" << s.crossings << " crossings, " << s.components
               << " components) jones " << s.jones << "\n";
    if (!v.oracle.error.empty()) os << "oracle error: " << v.oracle.error << "\n";
    if (v.oracle.planarity) {
        os << "planarity search: " << (v.oracle.planarity->certified ? "certified" : "not certified") << " after "
           << v.oracle.planarity->steps_used << " steps\n";
        if (v.oracle.planarity->certified) os << v.oracle.planarity->trace.str();
    }
    os << "agreement: " << to_string(v.agreement) << " (" << v.detail << ")\n";
    return os.str();
}

std::string report_entry(const CatalogEntry& e, const Verification& v, ReportFormat f) {
    const ParsedInput in{e.presentation, e.insertion, {}};
    const auto& c = v.classification;
    if (f == ReportFormat::Json) {
        json j = {{"index", e.index},
                  {"input", print_input(in)},
                  {"verdict", to_string(c.verdict.kind)},
                  {"trivial", v.oracle.trivial},
                  {"nontrivial", v.oracle.nontrivial},
                  {"inconclusive", v.oracle.inconclusive},
                  {"planar", v.oracle.certified_planar()},
                  {"agreement", to_string(v.agreement)}};
        if (c.witness.exceptional) j["exceptional"] = c.witness.exceptional->exceptional;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << e.index << "\t" << print_input(in) << "\t" << to_string(c.verdict.kind) << "\t" << v.oracle.trivial << "/"
       << v.oracle.nontrivial << "/" << v.oracle.inconclusive << "\t" << (v.oracle.certified_planar() ? "planar" : "-")
       << "\t" << to_string(v.agreement) << "\n";
    return os.str();
}

}  // namespace ravel
