#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skewmorph/cli.hpp"
#include "skewmorph/records.hpp"

using namespace skewmorph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "skewmorph");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "skewmorph_test_" + name + ".json";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate prints one record per morphism") {
    CHECK(lines(run({"enumerate", "Z5"}).out).size() == 4);
    const auto z1 = run({"enumerate", "Z1"});
    CHECK(z1.code == kExitPass);
    CHECK(z1.out ==
          "{\"group\":[],\"perm\":[0],\"order\":1,\"power\":[0],\"smooth\":true,\"skew_type\":1,\"kernel\":[0],"
          "\"proper\":false}\n");
    CHECK(run({"enumerate", "Z3xZ3", "--oracle", "--quiet"}).out == run({"enumerate", "Z3xZ3", "--quiet"}).out);
}

TEST_CASE("every enumerated record checks") {
    for (const char* g : {"Z9", "Z2xZ4", "Z12", "Z3xZ3"})
        for (const auto& line : lines(run({"enumerate", g, "--quiet"}).out)) {
            const auto outcome = check_record(line);
            CHECK_MESSAGE(outcome.status == CheckOutcome::kMatch, line);
        }
}

TEST_CASE("exit codes") {
    CHECK(run({"enumerate", "Q8"}).code == kExitUsage);
    CHECK(run({"enumerate", "Z99"}).code == kExitGuard);
    CHECK(run({"enumerate", "Z11", "--oracle"}).code == kExitGuard);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"construct", "csm", "--n", "6", "--k", "2", "--r", "0", "--s", "1", "--t", "2"}).code == kExitUsage);
    CHECK(run({"construct", "pns", "--p", "3", "--e", "1"}).code == kExitUsage);
    CHECK(run({"construct", "nse", "--p", "2", "--d", "1", "--nu", "1", "--r", "2"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("census CSV") {
    const auto r = run({"census", "--cyclic-from", "4", "--cyclic-to", "15", "--no-timing"});
    REQUIRE(r.code == kExitPass);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == kCsvHeader);
    CHECK(rows[1] == "Z4,4,2,2,0,2,0,0");
    CHECK(rows[2] == "Z5,5,4,4,0,4,0,0");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string label;
        std::getline(in, label, ',');
        std::vector<long> v;
        for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stol(cell));
        CHECK(v[1] == v[2] + v[3]);
        CHECK(v[1] == v[4] + v[5]);
        if (label == "Z9") CHECK(v[5] >= 1);
        if (label == "Z15") CHECK(v[5] == 0);
    }
    CHECK(run({"census", "--groups", "Z2xZ2,Z6", "--no-timing"}).out ==
          run({"census", "--groups", "Z2xZ2,Z6", "--no-timing"}).out);
    CHECK(run({"census"}).code == kExitUsage);
    CHECK(run({"census", "--cyclic-from", "60", "--cyclic-to", "70"}).code == kExitGuard);
}

TEST_CASE("verify suites") {
    const auto t1 = run({"verify", "theorem1", "--max-n", "20", "--quiet"});
    CHECK(t1.code == kExitPass);
    CHECK(t1.out.find("non-smooth at {9,18}") != std::string::npos);
    CHECK(run({"verify", "csm", "--n", "6"}).code == kExitPass);
    CHECK(run({"verify", "identities", "--group", "Z2xZ4"}).code == kExitPass);
    const auto t2 = run({"verify", "theorem2", "--groups", "Z3xZ3,Z32xZ2"});
    CHECK(t2.code == kExitPass);
    CHECK(lines(t2.out).size() == 2);
    CHECK(run({"verify", "nonsense"}).code == kExitUsage);
}

TEST_CASE("check round trip and field mismatches") {
    const auto rec = run({"construct", "root", "--n", "9", "--k", "3", "--s", "8"});
    REQUIRE(rec.code == kExitPass);
    const std::string line = lines(rec.out).at(0);
    const auto ok = run({"check", "--file", write_temp("ok", line)});
    CHECK(ok.code == kExitPass);

    std::string flipped = line;
    flipped.replace(flipped.find("\"smooth\":false"), 14, "\"smooth\":true");
    const auto bad = run({"check", "--file", write_temp("smooth", flipped)});
    CHECK(bad.code == kExitFailure);
    CHECK(bad.err.find("'smooth'") != std::string::npos);

    std::string perm = line;
    perm.replace(perm.find("\"perm\":[0,8"), 11, "\"perm\":[0,0");
    const auto nonbij = run({"check", "--file", write_temp("perm", perm)});
    CHECK(nonbij.code == kExitFailure);
    CHECK(nonbij.err.find("'perm'") != std::string::npos);

    CHECK(run({"check", "--file", write_temp("junk", "{not json")}).code == kExitUsage);
    CHECK(run({"check", "--file", write_temp("missing", "{\"group\":[3]}")}).code == kExitUsage);
    for (const char* n : {"ok", "smooth", "perm", "junk", "missing"})
        std::remove(("skewmorph_test_" + std::string(n) + ".json").c_str());
}

TEST_CASE("reciprocal pairs") {
    CHECK(run({"reciprocal", "--m", "1", "--n", "1"}).out == "reciprocal pairs of Z1 and Z1: 1\n");
    CHECK(run({"reciprocal", "--m", "3", "--n", "3"}).out == "reciprocal pairs of Z3 and Z3: 1\n");
    const auto listed = run({"reciprocal", "--m", "4", "--n", "6", "--list"});
    CHECK(listed.code == kExitPass);
}

TEST_CASE("--out writes to a file") {
    const std::string path = "skewmorph_test_out.jsonl";
    CHECK(run({"enumerate", "Z6", "--out", path, "--quiet"}).code == kExitPass);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(lines(text).size() == 4);
    std::remove(path.c_str());
}

}
