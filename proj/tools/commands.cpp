#include "commands.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ravel/dsl.hpp"
#include "ravel/svg.hpp"

namespace ravel::cli {

namespace {

void check_cap(const RunConfig& cfg, const Diagram& closure) {
    if (closure.crossing_count() > cfg.max_closure_crossings)
        throw std::invalid_argument("closure has " + std::to_string(closure.crossing_count()) +
                                    " crossings, above the cap of " + std::to_string(cfg.max_closure_crossings));
}

}  // namespace

int cmd_classify(const RunConfig& cfg, const std::string& input, bool refine, std::ostream& out) {
    const ParsedInput in = parse_input(input);
    const Classification c = classify_input(in, cfg.classify_options(refine));
    check_cap(cfg, c.closure);
    out << report_classification(in, c, cfg.format);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& input, bool refine, std::ostream& out) {
    const ParsedInput in = parse_input(input);
    ClassifyOptions copt = cfg.classify_options(refine);
    copt.certify_planar = false;  // the oracle runs its own search
    Verification v;
    v.classification = classify_input(in, copt);
    check_cap(cfg, v.classification.closure);
    v.oracle = run_oracle(v.classification.closure, cfg.oracle_options(), wants_planarity(v.classification.verdict.kind));
    v.agreement = judge(v.classification.verdict, v.oracle, &v.detail);
    out << report_verification(in, v, cfg.format);
    return v.agreement == Agreement::Disagree ? kDisagreement : kOk;
}

int cmd_render(const RunConfig& cfg, const std::string& input, const std::string& path, bool labels) {
    const ParsedInput in = parse_input(input);
    ClassifyOptions copt = cfg.classify_options(false);
    copt.certify_planar = false;
    const Classification c = classify_input(in, copt);
    check_cap(cfg, c.closure);
    SvgOptions o;
    o.label_nodes = labels;
    o.title = print_input(in);
    write_svg(path, c.closure, o);
    return kOk;
}

std::uint64_t EnumerateStats::count(const std::string& k) const {
    auto it = agreement.find(k);
    return it == agreement.end() ? 0 : it->second;
}

std::string EnumerateStats::summary() const {
    std::ostringstream os;
    os << entries << " entries, next cursor " << next_cursor << ";";
    for (const auto& [k, n] : verdicts) os << " " << k << "=" << n;
    os << ";";
    for (const auto& [k, n] : agreement) os << " " << k << "=" << n;
    return os.str();
}

EnumerateStats run_enumeration(const RunConfig& cfg, std::uint64_t cursor, std::uint64_t limit, std::ostream& out) {
    cfg.validate();
    EnumerateStats st;
    st.next_cursor = cursor;
    if (cfg.max_summands == 0) return st;

    const Catalog catalog(cfg.bounds());
    const ClassifyOptions copt = cfg.classify_options(false);
    const OracleOptions oopt = cfg.oracle_options();
    const std::size_t batch_size = 64 * static_cast<std::size_t>(cfg.threads);

    std::vector<CatalogEntry> batch;
    std::vector<std::string> lines;
    std::vector<Verification> results;
    auto flush = [&] {
        lines.assign(batch.size(), {});
        results.assign(batch.size(), {});
        auto work = [&](std::size_t t) {
            for (std::size_t i = t; i < batch.size(); i += cfg.threads) {
                const ParsedInput in{batch[i].presentation, batch[i].insertion, {}};
                results[i] = verify(in, copt, oopt);
                lines[i] = report_entry(batch[i], results[i], cfg.format);
            }
        };
        if (cfg.threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(work, t);
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            out << lines[i];
            ++st.entries;
            ++st.verdicts[to_string(results[i].classification.verdict.kind)];
            ++st.agreement[to_string(results[i].agreement)];
            st.next_cursor = batch[i].index + 1;
        }
        batch.clear();
    };
    catalog.for_each(cursor, [&](const CatalogEntry& e) {
        if (limit != 0 && st.entries + batch.size() >= limit) return false;
        batch.push_back(e);
        if (batch.size() == batch_size) flush();
        return true;
    });
    flush();
    out.flush();
    return st;
}

}  // namespace ravel::cli
