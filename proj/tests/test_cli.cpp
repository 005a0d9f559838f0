#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string cli = SQUAREPEG_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = cli + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("analyze: pentagon is obtuse with a positive threshold") {
    REQUIRE(run("analyze --shape '{\"kind\":\"regular_ngon\",\"n\":5,\"circumradius\":1.0}' "
                "--out a5.json") == 0);
    const json j = load("a5.json");
    CHECK(j["obtuseness"]["obtuse"] == true);
    CHECK(j["s_star"].get<double>() > 0.0);
}

TEST_CASE("analyze: square is non-obtuse with zero threshold") {
    REQUIRE(run("analyze --shape '{\"kind\":\"regular_ngon\",\"n\":4,\"circumradius\":1.0}' "
                "--out a4.json") == 0);
    const json j = load("a4.json");
    CHECK(j["obtuseness"]["obtuse"] == false);
    CHECK(j["s_star"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("analyze: sampled ellipse is obtuse") {
    REQUIRE(run("analyze --shape '{\"kind\":\"ellipse\",\"a\":2,\"b\":1,\"samples\":128}' "
                "--grid 24 --out ae.json") == 0);
    CHECK(load("ae.json")["obtuseness"]["obtuse"] == true);
}

TEST_CASE("inscribe: both methods agree on the disk") {
    REQUIRE(run("inscribe --shape '{\"kind\":\"disk\",\"radius\":1.0,\"samples\":256}' "
                "--method both --n-boundary 180 --grid 32 --svg disk.svg --out i.json") == 0);
    const json j = load("i.json");
    const double s1 = j["table"]["square"]["side"].get<double>();
    CHECK(s1 == doctest::Approx(std::sqrt(2.0)).epsilon(5e-3));
    bool oracle_match = false;
    for (const auto& sq : j["oracle"]["squares"])
        if (std::abs(sq["side"].get<double>() - s1) < 1e-2) oracle_match = true;
    CHECK(oracle_match);

    const std::string svg = slurp("disk.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<text") != std::string::npos);
}

TEST_CASE("inscribe: table method refuses the square with exit code 3") {
    CHECK(run("inscribe --shape '{\"kind\":\"regular_ngon\",\"n\":4,\"circumradius\":1.0}' "
              "--method table") == 3);
}

TEST_CASE("table: disk at side 1 reaches the analytic height") {
    REQUIRE(run("table --shape '{\"kind\":\"disk\",\"radius\":1.0,\"samples\":512}' --side 1 "
                "--out t.json") == 0);
    const json j = load("t.json");
    CHECK(j["level_square"]["y"].get<double>() ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-6));
    CHECK(j["level_square"]["trivial"] == false);
}

TEST_CASE("table: huge side gives the trivial solution") {
    REQUIRE(run("table --shape '{\"kind\":\"disk\",\"radius\":1.0,\"samples\":128}' --side 10 "
                "--out t10.json") == 0);
    const json j = load("t10.json");
    CHECK(j["level_square"]["trivial"] == true);
    CHECK(j["level_square"]["y"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("table: constant grid field levels immediately") {
    {
        json g;
        g["xmin"] = -1.5;
        g["ymin"] = -1.5;
        g["xmax"] = 1.5;
        g["ymax"] = 1.5;
        g["nx"] = 8;
        g["ny"] = 8;
        g["heights"] = std::vector<double>(64, 1.0);
        std::ofstream out("const_field.json");
        out << g.dump();
    }
    REQUIRE(run("table --shape '{\"kind\":\"disk\",\"radius\":1.0,\"samples\":64}' "
                "--field const_field.json --side 0.5 --out tc.json") == 0);
    const json j = load("tc.json");
    CHECK(j["level_square"]["residual"].get<double>() <= 1e-12);
    CHECK(j["level_square"]["start_index"] == 0);
}

TEST_CASE("witness: square corner verifies, pentagon refuses") {
    REQUIRE(run("witness --shape '{\"kind\":\"regular_ngon\",\"n\":4,\"circumradius\":1.0}' "
                "--auto --side 1 --out w4.json") == 0);
    const json j = load("w4.json");
    CHECK(j["verified"] == true);
    CHECK(j["direction_arc"]["width"].get<double>() == doctest::Approx(std::acos(-1.0) / 2.0));

    CHECK(run("witness --shape '{\"kind\":\"regular_ngon\",\"n\":5,\"circumradius\":1.0}' "
              "--auto --side 1") == 3);

    REQUIRE(run("witness --shape '{\"kind\":\"regular_ngon\",\"n\":3,\"circumradius\":1.0}' "
                "--auto --side 5 --out w3.json") == 0);
    CHECK(load("w3.json")["verified"] == true);
}

TEST_CASE("parse errors exit with code 2") {
    CHECK(run("analyze --shape '{\"kind\":\"heptadecagon\"}'") == 2);
    CHECK(run("analyze --shape 'not json'") == 2);
    CHECK(run("analyze") == 2);
}

TEST_CASE("reports are deterministic modulo timing") {
    for (const std::string& cmd :
         {std::string("analyze --shape '{\"kind\":\"regular_ngon\",\"n\":5,\"circumradius\":1.0}' "
                      "--grid 16"),
          std::string("witness --shape '{\"kind\":\"regular_ngon\",\"n\":4,\"circumradius\":1.0}' "
                      "--auto --side 1"),
          std::string("table --shape '{\"kind\":\"disk\",\"radius\":1.0,\"samples\":64}' "
                      "--side 0.5")}) {
        REQUIRE(run(cmd + " --out run1.json") == 0);
        REQUIRE(run(cmd + " --out run2.json") == 0);
        json a = load("run1.json");
        json b = load("run2.json");
        a.erase("timing");
        b.erase("timing");
        CHECK(a.dump() == b.dump());
    }
}
