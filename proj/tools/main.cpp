#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ravel/dsl.hpp"

using namespace ravel;
using namespace ravel::cli;

namespace {

struct Overrides {
    std::string config;
    std::optional<int> budget;
    std::optional<int> max_crossings;
    std::optional<std::string> format;
    std::string out;
};

RunConfig resolve(const Overrides& o, bool enumerate) {
    RunConfig c = o.config.empty() ? default_config() : load_config(o.config);
    if (o.budget) c.search_budget = *o.budget;
    if (o.max_crossings) (enumerate ? c.max_crossings : c.max_closure_crossings) = *o.max_crossings;
    if (o.format) c.format = parse_report_format(*o.format);
    if (!o.out.empty()) c.out = o.out;
    c.validate();
    return c;
}

// Runs f against the configured output file, or stdout.
template <class F>
auto with_output(const RunConfig& c, F&& f) {
    if (c.out.empty()) return f(std::cout);
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open " + c.out + " for writing");
    return f(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify vertex closures of Montesinos tangles as ravels."};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, std::string("JSON run config (default: $") + kConfigEnv + ")");
    app.add_option("--budget", o.budget, "planarity search budget in moves");
    app.add_option("--max-crossings", o.max_crossings,
                   "crossing cap: per summand for enumerate, for the whole closure otherwise");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", o.out, "output file (required for render)");

    std::string input;
    bool refine = false, labels = false;
    std::optional<int> summands, min_vertices, max_vertices, threads;
    std::uint64_t cursor = 0, limit = 0;

    auto* classify = app.add_subcommand("classify", "verdict and witness for one input");
    classify->add_option("input", input, "e.g. 'M[[2,2],[0,1,2]] v(2,2,1)'")->required();
    classify->add_flag("--refine", refine, "try to settle NotRavel verdicts");

    auto* verify_cmd = app.add_subcommand("verify", "classify, then check against the knot oracle");
    verify_cmd->add_option("input", input)->required();
    verify_cmd->add_flag("--refine", refine);

    auto* enumerate = app.add_subcommand("enumerate", "stream the catalog with verdicts and oracle status");
    enumerate->add_option("--max-summands", summands);
    enumerate->add_option("--min-vertices", min_vertices);
    enumerate->add_option("--max-vertices", max_vertices);
    enumerate->add_option("--threads", threads);
    enumerate->add_option("--cursor", cursor, "first entry index");
    enumerate->add_option("--limit", limit, "entries to emit, 0 for all");

    auto* render = app.add_subcommand("render", "draw the closure as SVG");
    render->add_option("input", input)->required();
    render->add_flag("--labels", labels, "number the nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*classify) {
            const RunConfig c = resolve(o, false);
            return with_output(c, [&](std::ostream& os) { return cmd_classify(c, input, refine, os); });
        }
        if (*verify_cmd) {
            const RunConfig c = resolve(o, false);
            return with_output(c, [&](std::ostream& os) { return cmd_verify(c, input, refine, os); });
        }
        if (*render) {
            const RunConfig c = resolve(o, false);
            if (o.out.empty()) throw std::invalid_argument("render needs --out");
            return cmd_render(c, input, o.out, labels);
        }
        RunConfig c = resolve(o, true);
        if (summands) c.max_summands = *summands;
        if (min_vertices) c.min_vertices = *min_vertices;
        if (max_vertices) c.max_vertices = *max_vertices;
        if (threads) c.threads = *threads;
        c.validate();
        const EnumerateStats st = with_output(c, [&](std::ostream& os) {
            return run_enumeration(c, cursor, limit, os);
        });
        std::cerr << st.summary() << "\n";
        return st.count("disagree") > 0 ? kDisagreement : kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
