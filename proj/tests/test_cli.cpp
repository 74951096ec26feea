#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lpg/load_aggregator.hpp"
#include "lpg/param_scaling.hpp"
#include "lpg/plan_dsl.hpp"
#include "lpg/profile_io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("lpg_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Result run(const std::string& args) {
    const auto log = fs::temp_directory_path() / ("lpg_cli_out_" + std::to_string(::getpid()) + ".txt");
    const std::string cmd = std::string(LPG_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kMh = test::data_path("machines/material_handler_35t.json");
const std::string kFf = test::data_path("machines/forest_forwarder.json");
const std::string kCycle = test::data_path("plans/material_handler_cycle.json");
const std::string kFfPlan = test::data_path("plans/forwarder_plan.json");

}  // namespace

TEST_CASE("run writes a 31 s profile for the handling cycle") {
    const auto dir = scratch("cycle");
    const auto r = run("run --machine " + kMh + " --plan " + kCycle + " --out " + dir.string() + " --format csv,json --plot");
    REQUIRE(r.code == 0);
    const auto csv = slurp(dir / "profile.csv");
    CHECK(csv.rfind("t_s,p_boom_w,p_arm_w,p_swing_w,p_total_w\n", 0) == 0);
    const auto cols = lpg::parse_profile_csv(csv);
    CHECK(cols.time_s.size() == 3101);
    CHECK(cols.time_s.back() == doctest::Approx(31.0));
    CHECK(fs::exists(dir / "profile.json"));
    CHECK(fs::exists(dir / "power.svg"));
    CHECK(fs::exists(dir / "joints.svg"));
    CHECK(r.out.find("total energy") != std::string::npos);
}

TEST_CASE("forwarder summary puts the boom lift on top") {
    const auto dir = scratch("ff");
    const auto r = run("run --machine " + kFf + " --plan " + kFfPlan + " --out " + dir.string());
    REQUIRE(r.code == 0);
    const auto prof = lpg::aggregate(lpg::resolve_timeline(lpg::load_plan(kFfPlan)), lpg::load_machine(kFf));
    const auto top = std::max_element(prof.annotations.begin(), prof.annotations.end(),
                                      [](const auto& a, const auto& b) { return a.peak_power_w < b.peak_power_w; });
    CHECK(top->task == "boom_lift");
    CHECK(r.out.find("boom_lift") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("missing machine file writes nothing") {
        const auto dir = scratch("missing");
        const auto out = dir / "never";
        const auto r = run("run --machine " + (dir / "nope.json").string() + " --plan " + kCycle + " --out " + out.string());
        CHECK(r.code == 3);
        CHECK_FALSE(fs::exists(out));
    }
    SUBCASE("missing plan file") {
        CHECK(run("validate --machine " + kMh + " --plan /nonexistent/plan.json").code == 3);
    }
    SUBCASE("usage errors") {
        CHECK(run("").code == 2);
        CHECK(run("run --plan " + kCycle).code == 2);
        CHECK(run("run --machine " + kMh + " --plan " + kCycle + " --dt -1").code == 2);
        CHECK(run("run --machine " + kMh + " --plan " + kCycle + " --format xml").code == 2);
        CHECK(run("run --machine " + kMh + " --plan " + kCycle + " --bearing-friction bogus").code == 2);
    }
    SUBCASE("parse error") {
        const auto dir = scratch("parse");
        std::ofstream(dir / "bad.json") << "{\"machine\": \"x\", \"task_list\": [}";
        const auto r = run("validate --machine " + kMh + " --plan " + (dir / "bad.json").string());
        CHECK(r.code == 4);
        CHECK(r.out.find("line 1") != std::string::npos);
    }
    SUBCASE("validation error: task not available on the machine") {
        CHECK(run("validate --machine " + kFf + " --plan " + kCycle).code == 5);
        CHECK(run("run --machine " + kFf + " --plan " + kCycle + " --out " + scratch("v").string()).code == 5);
    }
    SUBCASE("simulation error: singular geometry") {
        const auto dir = scratch("sing");
        std::ofstream(dir / "plan.json")
            << R"({"machine": "forest_forwarder", "task_list": [{"task": "arm_lift", "params": {"time_ini": 0, "duration": 3, "value_ini": 150, "value_fin": 180, "velocity_max": 12.5, "boom_fin_ang": 30}}]})";
        CHECK(run("run --machine " + kFf + " --plan " + (dir / "plan.json").string() + " --out " + dir.string()).code == 6);
    }
    SUBCASE("validate and list-tasks succeed") {
        CHECK(run("validate --machine " + kMh + " --plan " + kCycle).code == 0);
        const auto r = run("list-tasks");
        CHECK(r.code == 0);
        CHECK(r.out.find("arm_lower_mh") != std::string::npos);
    }
}

TEST_CASE("overrides change the result") {
    const auto a = scratch("diameter_difference"), b = scratch("annulus"), c = scratch("nofric");
    REQUIRE(run("run --machine " + kMh + " --plan " + kCycle + " --out " + a.string()).code == 0);
    REQUIRE(run("run --machine " + kMh + " --plan " + kCycle + " --out " + b.string() + " --lowering-formula annulus").code == 0);
    REQUIRE(run("run --machine " + kMh + " --plan " + kCycle + " --out " + c.string() + " --bearing-friction none --dt 0.02").code == 0);
    CHECK(slurp(a / "profile.csv") != slurp(b / "profile.csv"));
    const auto coarse = lpg::parse_profile_csv(slurp(c / "profile.csv"));
    CHECK(coarse.time_s.size() == 1551);
}

TEST_CASE("scale subcommand") {
    const auto dir = scratch("scale");
    const std::string ref = test::data_path("machines/material_handler_20t_reference.json");

    SUBCASE("same mass reproduces the file") {
        REQUIRE(run("scale --machine " + ref + " --mass 20000 --output " + (dir / "same.json").string()).code == 0);
        CHECK(lpg::serialize_machine(lpg::load_machine((dir / "same.json").string())) ==
              lpg::serialize_machine(lpg::load_machine(ref)));
    }
    SUBCASE("30 t target") {
        REQUIRE(run("scale --machine " + ref + " --mass 30000 --output " + (dir / "30t.json").string()).code == 0);
        const auto s = lpg::load_machine((dir / "30t.json").string());
        const auto r = lpg::load_machine(ref);
        CHECK(s.m_cabin == doctest::Approx(1.5 * r.m_cabin));
        CHECK(s.m_boom == doctest::Approx(1.5 * r.m_boom));
        CHECK(s.m_arm == doctest::Approx(1.5 * r.m_arm));
        CHECK(s.m_bucket == doctest::Approx(1.5 * r.m_bucket));
        CHECK(s.m_vehicle == 30000.0);
    }
    SUBCASE("non-positive mass") {
        CHECK(run("scale --machine " + ref + " --mass 0 --output " + (dir / "zero.json").string()).code == 5);
        CHECK(run("scale --machine " + ref + " --mass -5 --output " + (dir / "neg.json").string()).code == 5);
        CHECK_FALSE(fs::exists(dir / "zero.json"));
    }
}

TEST_CASE("exported CSV is byte-stable across runs") {
    const auto a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(run("run --machine " + kFf + " --plan " + kFfPlan + " --out " + a.string()).code == 0);
    REQUIRE(run("run --machine " + kFf + " --plan " + kFfPlan + " --out " + b.string()).code == 0);
    CHECK(slurp(a / "profile.csv") == slurp(b / "profile.csv"));
}
