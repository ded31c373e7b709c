#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcone/cli.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = tcone::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("report in text")
{
    const Run r = run({"report", "5", "6", "13", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Ap(4M) | 20 21 22 23 24") != std::string::npos);
    CHECK(r.out.find("not Buchsbaum, certificate (t^6)*·(t^13)*") != std::string::npos);
}

TEST_CASE("report rejects gcd != 1")
{
    const Run r = run({"report", "4", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("gcd") != std::string::npos);
}

TEST_CASE("malformed input is a usage error")
{
    CHECK(run({"report", "5", "six"}).code == 2);
    CHECK(run({"report"}).code == 2);
    CHECK(run({"report", "0", "3"}).code == 2);
    CHECK(run({"report", "5", "6", "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"batch"}).code == 2);
    CHECK(run({"batch", "--max-genus", "3", "--filter", "colour=red"}).code == 2);
    CHECK(run({"batch", "--max-genus", "3", "--filter", "e"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report in JSON")
{
    const Run r = run({"report", "10", "19", "47", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (int i = 0; i <= 9; ++i) CHECK(j["alpha"][std::to_string(i)] == 1);
}

TEST_CASE("table subcommand")
{
    const Run r = run({"table", "5", "6", "13"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Ap(S)  |  0  6 12 13 19\n"
          "Ap(M)  |  5  6 12 13 19\n"
          "Ap(2M) | 10 11 12 18 19\n"
          "Ap(3M) | 15 16 17 18 24\n"
          "Ap(4M) | 20 21 22 23 24\n");
    const Run csv = run({"table", "2", "3", "--format", "csv"});
    CHECK(csv.out == "0,3\n2,3\n");
}

TEST_CASE("selfcheck")
{
    CHECK(run({"selfcheck", "10", "11", "19"}).code == 0);
    CHECK(run({"selfcheck", "1"}).code == 0);
    const Run r = run({"selfcheck", "9", "10", "11", "23"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("not Buchsbaum") != std::string::npos);
    CHECK(run({"selfcheck", "4", "6"}).code == 2);
}

TEST_CASE("batch by genus")
{
    const Run r = run({"batch", "--max-genus", "3"});
    CHECK(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "generators,e,b,frobenius,genus,r,cohen_macaulay,buchsbaum,decomposition");
    CHECK(lines[1] == "1,1,1,-1,0,0,true,true,F");
    CHECK(r.err.find("# 8 semigroups") != std::string::npos);
}

TEST_CASE("batch is deterministic across worker counts")
{
    const Run one = run({"batch", "--max-genus", "9", "--jobs", "1"});
    const Run many = run({"batch", "--max-genus", "9", "--jobs", "8"});
    CHECK(one.out == many.out);
    CHECK(one.err == many.err);
}

TEST_CASE("batch filters")
{
    const Run m4 = run({"batch", "--max-multiplicity", "4", "--max-frobenius", "40", "--filter", "e=4"});
    REQUIRE(m4.code == 0);
    const auto rows = csv_lines(m4.out);
    CHECK(rows.size() > 10);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].find(",4,") != std::string::npos);
        CHECK(rows[k].find(",true,F") != std::string::npos);  // buchsbaum column precedes the decomposition
    }

    const Run r1 = run({"batch", "--max-genus", "10", "--filter", "r=1", "--format", "json"});
    REQUIRE(r1.code == 0);
    const auto j = nlohmann::json::parse(r1.out);
    CHECK(j["semigroups"].size() > 5);
    for (const auto& s : j["semigroups"]) {
        const int e = s["e"];
        const std::string expected = e == 1 ? "F" : (e == 2 ? "F ⊕ F(-1)" : "F ⊕ F(-1)^" + std::to_string(e - 1));
        CHECK(s["decomposition"] == expected);
    }
    for (const auto& row : j["summary"]) CHECK(row["r"] == 1);

    const Run cm = run({"batch", "--max-genus", "6", "--filter", "cm=false", "--filter", "buchsbaum=no", "--format",
                        "text"});
    REQUIRE(cm.code == 0);
    CHECK(cm.out.find("cm=true") == std::string::npos);
    CHECK(cm.out.find("# ") != std::string::npos);
}

TEST_CASE("batch warns beyond desk scale")
{
    // The warning is issued before enumeration; a Frobenius bound keeps the run small.
    const Run r = run({"batch", "--max-genus", "30", "--max-frobenius", "6"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("output file")
{
    const auto path = std::filesystem::temp_directory_path() / "tcone_cli_test_report.json";
    const Run r = run({"report", "4", "11", "29", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["buchsbaum"] == true);
    CHECK(j["torsion"].size() == 1);
    std::filesystem::remove(path);
}
