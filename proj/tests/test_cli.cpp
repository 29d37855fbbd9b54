#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "concord/cli.hpp"
#include "concord/errors.hpp"
#include "concord/knots.hpp"
#include "concord/report.hpp"

using namespace concord;
using nlohmann::json;

namespace {

json job(const char* command, json payload) {
    return {{"command", command}, {"payload", std::move(payload)}};
}

struct RunResult {
    int exit_code;
    std::string output;
};

// runs the installed binary; stderr folded into stdout
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CONCORD_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("alexander job end to end") {
    const json r = cli::run_job(job("alexander", json::parse(R"({"type":"torus","p":5,"q":2})")));
    CHECK(r.at("delta").get<std::string>() == "1 - t + t^2 - t^3 + t^4");
    CHECK(r.at("symmetric").get<bool>());
    CHECK(r.at("at_one").get<long>() == 1);
    CHECK(r.at("fox_milnor").at("verdict").get<std::string>() == "obstructed");
    CHECK(r.at("double_slice").at("verdict").get<std::string>() == "obstructed");

    // the emitted polynomial round-trips to the direct computation
    CHECK(parse_poly(r.at("delta").get<std::string>()) == alexander(KnotDescriptor::torus(5, 2)));
    const ObstructionReport fm = ObstructionReport::from_json(r.at("fox_milnor"));
    CHECK(fm.to_json() == r.at("fox_milnor"));

    CHECK(!cli::render_text(r).empty());
}

TEST_CASE("the double-slice example reproduced end to end") {
    const json knot = json::parse(
        R"({"type":"sum","left":{"type":"torus","p":5,"q":2},
            "right":{"type":"mirror","of":{"type":"torus","p":5,"q":2}}})");
    const json r = cli::run_job(job("alexander", knot));
    CHECK(r.at("double_slice").at("verdict").get<std::string>() == "passed");
    CHECK(r.at("c1_unknot").at("verdict").get<std::string>() == "obstructed");
    CHECK(r.at("c1_unknot").at("witness").get<std::string>() == "-1 - x + x^2");
    CHECK(parse_poly(r.at("c1_unknot").at("witness").get<std::string>(), 'x') ==
          parse_poly("x^2 - x - 1", 'x'));
}

TEST_CASE("unknot job") {
    const json r = cli::run_job(job("alexander", json::parse(R"({"type":"unknot"})")));
    CHECK(r.at("delta").get<std::string>() == "1");
    CHECK(r.at("fox_milnor").at("verdict").get<std::string>() == "passed");
    CHECK(r.at("c1_unknot").at("verdict").get<std::string>() == "inconclusive");
}

TEST_CASE("obstruct jobs") {
    const json one = cli::run_job(job("obstruct", {{"delta", "1 - t + t^2"}}));
    CHECK(one.at("spectrum").size() == 1);
    CHECK(one.at("spectrum")[0].at("sixth_root_class").get<bool>());
    CHECK(one.at("c1_unknot").at("verdict").get<std::string>() == "inconclusive");

    const json pair = cli::run_job(
        job("obstruct", {{"delta", "1 - t + t^2"}, {"delta2", "1 - t + t^2"}}));
    CHECK(pair.at("c1_pair").at("verdict").get<std::string>() == "inconclusive");
    CHECK(pair.at("divisibility").at("verdict").get<std::string>() == "passed");
    CHECK(pair.at("witness_search").at("verdict").get<std::string>() == "passed");
    CHECK(!cli::render_text(pair).empty());
}

TEST_CASE("wheel job routes") {
    const json m = cli::run_job(job("wheel", {{"legs", 2}, {"k", 1}, {"sign", "+"}}));
    CHECK(m.at("route").get<std::string>() == "matrix");
    CHECK(m.at("det_d").get<std::string>() == "1 - 3t + t^2");
    CHECK(m.at("ratio").get<std::string>() == "1 - 6t + 11t^2 - 6t^3 + t^4");
    CHECK(m.at("closed_form_check").get<std::string>() == "ok");
    CHECK(m.at("matrix_b").size() == 4);
    CHECK(!cli::render_text(m).empty());

    const json c = cli::run_job(job("wheel", {{"legs", 1}, {"k", 1}, {"sign", 1}}));
    CHECK(c.at("route").get<std::string>() == "closed_form");
    CHECK(c.at("ratio").get<std::string>() == "2 - 5t + 2t^2");
}

TEST_CASE("clover jobs") {
    const json loop_leaf = json::parse(
        R"({"vertices":[{"kind":"trivalent"},{"kind":"leaf","simple":true}],
            "edges":[[0,0],[0,1]]})");
    const json r = cli::run_job(job("clover", loop_leaf));
    CHECK(r.at("classification").at("in_c1nf").get<bool>());
    CHECK(r.at("orientation").at("feasible").get<bool>());
    CHECK(r.at("partition").at("sizes")[0].get<int>() == 2);
    CHECK(r.at("kirby").at("components_before").get<long>() == 4);
    CHECK(r.at("kirby").at("components_after").get<long>() == 2);

    // disconnected clovers are oriented component by component
    const json two = json::parse(
        R"({"vertices":[{"kind":"trivalent"},{"kind":"leaf","simple":true},
                        {"kind":"trivalent"},{"kind":"leaf","simple":true}],
            "edges":[[0,0],[0,1],[2,2],[2,3]]})");
    const json rtwo = cli::run_job(job("clover", two));
    CHECK(rtwo.at("classification").at("components").get<int>() == 2);
    CHECK(rtwo.at("orientation").at("feasible").get<bool>());
    CHECK(rtwo.at("partition").at("sizes")[0].get<int>() == 4);
    CHECK(rtwo.at("kirby").at("components_after").get<long>() == 4);

    const json y = json::parse(
        R"({"vertices":[{"kind":"trivalent"},{"kind":"leaf"},{"kind":"leaf"},{"kind":"leaf"}],
            "edges":[[0,1],[0,2],[0,3]]})");
    const json ry = cli::run_job(job("clover", y));
    CHECK(!ry.at("classification").at("in_c1").get<bool>());
    CHECK(!ry.at("orientation").at("feasible").get<bool>());
    CHECK(ry.at("orientation").at("reason").get<std::string>().find("source or sink") !=
          std::string::npos);
    CHECK(ry.at("kirby").contains("skipped"));
    CHECK(!cli::render_text(ry).empty());
}

TEST_CASE("family job") {
    const json r = cli::run_job(job("family", {{"k", 1}, {"n", 1}, {"sign", "+"}}));
    CHECK(r.at("polynomial").get<std::string>() == "1 - t + t^2");
    CHECK(r.at("only_sixth_roots").get<bool>());
    CHECK(!cli::render_text(r).empty());
}

TEST_CASE("batch preserves order") {
    json jobs = json::array();
    jobs.push_back(job("family", {{"k", 0}, {"n", 1}, {"sign", "-"}}));
    jobs.push_back(job("alexander", json::parse(R"({"type":"unknot"})")));
    const json out = cli::run_batch(jobs);
    REQUIRE(out.size() == 2);
    CHECK(out[0].at("command").get<std::string>() == "family");
    CHECK(out[1].at("command").get<std::string>() == "alexander");
    CHECK(!cli::render_batch_text(out).empty());
}

TEST_CASE("schema violations name the offending field") {
    CHECK_THROWS_WITH_AS(cli::run_job(job("alexander", json::parse(R"({"type":"torus","p":4})"))),
                         doctest::Contains("'q'"), invalid_input_error);
    CHECK_THROWS_AS(cli::run_job(job("nonsense", json::object())), invalid_input_error);
    CHECK_THROWS_AS(cli::run_job(json::parse(R"({"payload":{}})")), invalid_input_error);
    CHECK_THROWS_WITH_AS(cli::run_job(job("wheel", {{"legs", 2}, {"k", 0}, {"sign", "?"}})),
                         doctest::Contains("sign"), invalid_input_error);
}

TEST_CASE("per-job options override defaults") {
    json j = job("obstruct", {{"delta", "1 - t + t^2"}});
    j["options"] = {{"degree_limit", 1}};
    CHECK_THROWS_AS(cli::run_job(j), resource_limit_error);
}

TEST_CASE("binary: exit codes and json output") {
    const RunResult ok = run_cli("--json alexander '{\"type\":\"torus\",\"p\":5,\"q\":2}'");
    CHECK(ok.exit_code == 0);
    const json parsed = json::parse(ok.output);
    CHECK(parsed.at("delta").get<std::string>() == "1 - t + t^2 - t^3 + t^4");

    // obstructed verdicts are still successful computations
    const RunResult obstructed = run_cli("obstruct --delta '1 - t + t^2'");
    CHECK(obstructed.exit_code == 0);

    const RunResult invalid = run_cli("alexander '{\"type\":\"torus\",\"p\":4,\"q\":2}'");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.output.find("coprime") != std::string::npos);

    const RunResult malformed = run_cli("alexander 'not json'");
    CHECK(malformed.exit_code == 2);

    const RunResult resource =
        run_cli("--degree-limit 2 obstruct --delta '1 - t + t^2 - t^3 + t^4'");
    CHECK(resource.exit_code == 3);

    const RunResult text = run_cli("wheel --legs 1 --k 1 --sign +");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("closed_form") != std::string::npos);
}

TEST_CASE("binary: bounds flag and batch file") {
    // delta2 = delta * wheel ratio(2,1,+); bounds too small: exit 0, inconclusive
    const char* pair_args =
        "obstruct --delta '1 - t + t^2' --delta2 '1 - 7t + 18t^2 - 23t^3 + 18t^4 - 7t^5 + t^6'";
    const RunResult tight = run_cli(std::string("--bounds 1,1,1 ") + pair_args);
    CHECK(tight.exit_code == 0);
    CHECK(tight.output.find("exhausted") != std::string::npos);
    // with the defaults the same pair yields an explicit witness
    const RunResult wide = run_cli(pair_args);
    CHECK(wide.exit_code == 0);
    CHECK(wide.output.find("witness_search: PASSED") != std::string::npos);

    const char* path = "/tmp/concord_cli_test_batch.json";
    {
        std::FILE* f = std::fopen(path, "w");
        REQUIRE(f != nullptr);
        std::fputs(R"([{"command":"family","payload":{"k":1,"n":1,"sign":"+"}},
                       {"command":"alexander","payload":{"type":"unknot"}}])",
                   f);
        std::fclose(f);
    }
    const RunResult batch = run_cli(std::string("--json --batch ") + path);
    CHECK(batch.exit_code == 0);
    const json out = json::parse(batch.output);
    REQUIRE(out.is_array());
    REQUIRE(out.size() == 2);
    CHECK(out[0].at("command").get<std::string>() == "family");
    CHECK(out[1].at("delta").get<std::string>() == "1");
    std::remove(path);
}
