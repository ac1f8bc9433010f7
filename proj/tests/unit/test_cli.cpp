#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ravel::cli;

TEST_CASE("classify and verify commands") {
    RunConfig cfg;
    std::ostringstream os;
    CHECK(cmd_classify(cfg, "M[[2,3]]", false, os) == kOk);
    CHECK(nlohmann::json::parse(os.str())["verdict"] == "Planar");
    std::ostringstream vs;
    CHECK(cmd_verify(cfg, "M[[2,3],[2,3]]", false, vs) == kOk);
    CHECK_THROWS(cmd_classify(cfg, "M[[2,", false, os));
    cfg.max_closure_crossings = 3;
    CHECK_THROWS_AS(cmd_classify(cfg, "M[[2,3]]", false, os), std::invalid_argument);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.search_budget = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.max_vertices = 1;
    c.min_vertices = 2;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("config file") {
    const std::string path = "ravel_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"search_budget": 77, "max_summands": 1, "format": "text"})";
    }
    const RunConfig c = load_config(path);
    CHECK(c.search_budget == 77);
    CHECK(c.max_summands == 1);
    CHECK(c.format == ravel::ReportFormat::Text);
    {
        std::ofstream f(path);
        f << R"({"no_such_key": 1})";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    CHECK_THROWS_AS(load_config("does/not/exist.json"), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("enumeration") {
    RunConfig c;
    c.max_summands = 1;
    c.max_crossings = 2;
    c.max_vertices = 1;
    std::ostringstream all;
    const auto st = run_enumeration(c, 0, 0, all);
    CHECK(st.entries > 0);
    CHECK(st.count("disagree") == 0);

    // resuming from a cursor continues the same stream
    std::ostringstream head, tail;
    const auto a = run_enumeration(c, 0, 3, head);
    CHECK(a.entries == 3);
    run_enumeration(c, a.next_cursor, 0, tail);
    CHECK(head.str() + tail.str() == all.str());

    c.threads = 3;
    std::ostringstream threaded;
    run_enumeration(c, 0, 0, threaded);
    CHECK(threaded.str() == all.str());

    c.max_summands = 0;
    std::ostringstream none;
    CHECK(run_enumeration(c, 0, 0, none).entries == 0);
    CHECK(none.str().empty());
}
