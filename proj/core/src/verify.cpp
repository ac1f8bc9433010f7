#include "ravel/verify.hpp"

#include <stdexcept>

#include "ravel/constituents.hpp"

namespace ravel {

const char* to_string(Agreement a) {
    switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::Inconclusive: return "inconclusive";
    case Agreement::NotApplicable: return "n/a";
    }
    return "?";
}

OracleReport run_oracle(const Diagram& closure, const OracleOptions& opt, bool search_planarity) {
    OracleReport r;
    ConstituentSet set;
    try {
        set = constituent_links(closure, opt.link_cap);
    } catch (const std::length_error& e) {
        r.error = e.what();
    }
    for (const auto& link : set.links) {
        ConstituentStatus s;
        s.cycles = link.cycles;
        const PDCode pd = extract_pd(closure, set, link);
        s.crossings = pd.size();
        s.components = pd.components;
        s.pd = to_text(pd);
        try {
            const TrivialityReport t = triviality(pd, pd.components, opt.reidemeister_budget);
            s.status = t.status;
            s.jones = t.jones.str();
        } catch (const std::length_error& e) {
            s.status = Triviality::Inconclusive;
            if (r.error.empty()) r.error = e.what();
        }
        switch (s.status) {
        case Triviality::Trivial: ++r.trivial; break;
        case Triviality::Nontrivial: ++r.nontrivial; break;
        case Triviality::Inconclusive: ++r.inconclusive; break;
        }
        r.constituents.push_back(std::move(s));
        if (opt.stop_at_nontrivial && r.nontrivial > 0) break;
    }
    if (search_planarity && (r.nontrivial == 0 || opt.search_always))
        r.planarity = planarity_search(closure, opt.search_budget);
    return r;
}

Agreement judge(const Verdict& v, const OracleReport& o, std::string* why) {
    auto say = [&](Agreement a, const char* text) {
        if (why) *why = text;
        return a;
    };
    const bool complete = o.error.empty();
    switch (v.kind) {
    case VerdictKind::Ravel:
        if (o.nontrivial > 0) return say(Agreement::Disagree, "ravel verdict but a constituent is non-trivial");
        if (o.certified_planar()) return say(Agreement::Disagree, "ravel verdict but the diagram was made planar");
        if (o.inconclusive > 0 || !complete) return say(Agreement::Inconclusive, "some constituents undecided");
        return say(Agreement::Agree, "all constituents trivial");
    case VerdictKind::ContainsNontrivialKnotOrLink:
        if (o.certified_planar()) return say(Agreement::Disagree, "knotted verdict but the diagram was made planar");
        if (o.nontrivial > 0) return say(Agreement::Agree, "non-trivial constituent found");
        if (o.inconclusive > 0 || !complete) return say(Agreement::Inconclusive, "some constituents undecided");
        return say(Agreement::Disagree, "knotted verdict but every constituent is trivial");
    case VerdictKind::Planar:
        if (o.nontrivial > 0) return say(Agreement::Disagree, "planar verdict but a constituent is non-trivial");
        if (o.certified_planar()) return say(Agreement::Agree, "planar certificate");
        return say(Agreement::Inconclusive, "no planar certificate within budget");
    case VerdictKind::NotRavel:
        if (o.nontrivial > 0) return say(Agreement::Agree, "refuted by a non-trivial constituent");
        if (o.certified_planar()) return say(Agreement::Agree, "refuted by a planar certificate");
        return say(Agreement::Inconclusive, "neither a knot nor a planar certificate within budget");
    case VerdictKind::HypothesisViolation: return say(Agreement::NotApplicable, "outside the classification hypotheses");
    }
    return Agreement::NotApplicable;
}

bool wants_planarity(VerdictKind k) {
    return k == VerdictKind::Planar || k == VerdictKind::NotRavel || k == VerdictKind::HypothesisViolation;
}

Classification classify_input(const ParsedInput& in, const ClassifyOptions& opt) {
    if (in.is_algebraic()) return classify_algebraic_closure(*in.expr, opt);
    if (in.insertion.addresses.empty()) return classify_closure(in.presentation, opt);
    return classify_insertion_closure(in.presentation, in.insertion, opt);
}

Verification verify(const ParsedInput& in, const ClassifyOptions& copt, const OracleOptions& oopt) {
    Verification v;
    ClassifyOptions quiet = copt;
    quiet.certify_planar = false;  // the oracle runs its own search
    v.classification = classify_input(in, quiet);
    v.oracle = run_oracle(v.classification.closure, oopt, wants_planarity(v.classification.verdict.kind));
    v.agreement = judge(v.classification.verdict, v.oracle, &v.detail);
    return v;
}

}  // namespace ravel
