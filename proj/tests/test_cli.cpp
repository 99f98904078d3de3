#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const std::string& cli_path() {
    static const std::string path = [] {
        const char* env = std::getenv("QSCHUR_CLI");
        REQUIRE_MESSAGE(env != nullptr, "QSCHUR_CLI must point at the built binary");
        return std::string(env);
    }();
    return path;
}

RunResult run(const std::string& args, bool keep_stderr = false) {
    const std::string cmd =
        cli_path() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
        s.pop_back();
    }
    return s;
}

} // namespace

TEST_CASE("qlr command") {
    auto r = run("qlr --l 5 --k 5 --lambda 5,4,4,2,2 --mu 3,2,1 --nu 2,1");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "1");

    r = run("qlr --l 4 --k 6 --lambda 3,3,2,1 --mu 4,3,2,1 --nu 4,2,2,1");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "0");

    r = run("qlr --l 5 --k 5 --lambda 3,3,2,1 --mu 4,3,2,1 --nu 4,2,2,1");
    CHECK(trimmed(r.out) == "6");
    r = run("qlr --l 6 --k 4 --lambda 3,3,2,1 --mu 4,3,2,1 --nu 4,2,2,1");
    CHECK(trimmed(r.out) == "2");

    // --explain carries the signed split 2 - 1 of the 5x5 instance.
    r = run("qlr --l 5 --k 5 --lambda 5,4,4,2,2 --mu 3,2,1 --nu 2,1 --explain --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("schema_version") == "1");
    CHECK(doc.at("coefficient") == 1);
    CHECK(doc.at("m") == 2);
    long long positive = 0;
    long long negative = 0;
    for (const auto& row : doc.at("explain")) {
        const long long classical = row.at("classical").get<long long>();
        (row.at("sign").get<int>() > 0 ? positive : negative) += classical;
    }
    CHECK(positive == 2);
    CHECK(negative == 1);
}

TEST_CASE("qlr degree mismatch notes") {
    auto r = run("qlr --l 2 --k 2 --lambda 1 --mu 1 --nu 1", /*keep_stderr=*/true);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("degree mismatch") != std::string::npos);
    CHECK(trimmed(run("qlr --l 2 --k 2 --lambda 1 --mu 1 --nu 1").out) == "0");

    const json doc =
        json::parse(run("qlr --l 2 --k 2 --lambda 1 --mu 1 --nu 1 --json").out);
    CHECK(doc.at("coefficient") == 0);
    CHECK(doc.at("note") == "degree mismatch");
}

TEST_CASE("qlr --dual interprets nu as its complement") {
    const auto r = run("qlr --l 2 --k 2 --lambda 2,1 --mu 1 --nu 0 --dual");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "1");   // classical coefficient at nu = (2,2)
}

TEST_CASE("product command") {
    auto r = run("product --l 4 --k 4 --lambda 2,2,1,1 --mu 3");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "σ[4,2,2,1] + q·σ[1]");

    r = run("product --l 4 --k 4 --lambda 2,2,1,1 --mu 0");
    CHECK(trimmed(r.out) == "σ[2,2,1,1]");

    r = run("product --l 2 --k 2 --lambda 1,1 --mu 2,2");
    CHECK(trimmed(r.out) == "q·σ[2]");

    r = run("product --l 2 --k 2 --lambda 1,1 --mu 2,2 --verify");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "q·σ[2]");
}

TEST_CASE("json output round-trips") {
    for (const std::string args :
         {"product --l 2 --k 2 --lambda 2,1 --mu 2,1 --json",
          "qlr --l 5 --k 5 --lambda 5,4,4,2,2 --mu 3,2,1 --nu 2,1 --explain --json",
          "qkostka --l 4 --k 5 --lambda 5,3,3,1 --nu 2,1 --mu-list 5,2,2 --json",
          "reduce --l 1 --k 2 --lambda 2,1 --json",
          "core --n 4 --lambda 2,2,1,1 --json"}) {
        const auto r = run(args);
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.out);
        CHECK(doc.at("schema_version") == "1");
        CHECK(json::parse(doc.dump()) == doc);
    }

    const json product =
        json::parse(run("product --l 4 --k 4 --lambda 2,2,1,1 --mu 3 --json").out);
    const json expected_terms = json::array({
        {{"m", 0}, {"nu", {4, 2, 2, 1}}, {"coeff", 1}},
        {{"m", 1}, {"nu", {1}}, {"coeff", 1}},
    });
    CHECK(product.at("terms") == expected_terms);
}

TEST_CASE("qkostka command") {
    auto r = run("qkostka --l 4 --k 5 --lambda 5,3,3,1 --nu 2,1 --mu-list 5,2,2");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "2");

    r = run("qkostka --l 4 --k 5 --lambda 5,3,3,1 --nu 2,1 --mu-list 2,5,2");
    CHECK(trimmed(r.out) == "2");

    r = run("qkostka --l 3 --k 3 --lambda 2,1 --nu 2,1");
    CHECK(trimmed(r.out) == "1");

    const json doc = json::parse(
        run("qkostka --l 4 --k 5 --lambda 5,3,3,1 --nu 2,1 --mu-list 5,2,2 "
            "--show-tableaux --json")
            .out);
    CHECK(doc.at("count") == 2);
    CHECK(doc.at("m") == 2);
    CHECK(doc.at("tableaux").size() == 2);

    r = run("qkostka --l 4 --k 5 --lambda 5,3,3,1 --nu 2,1 --mu-list 5,2,2 "
            "--show-tableaux");
    CHECK(r.out.find(". . . . .") != std::string::npos);
}

TEST_CASE("reduce and core commands") {
    CHECK(trimmed(run("reduce --l 1 --k 2 --lambda 2,1").out) ==
          "+q^1·σ[0]");
    CHECK(trimmed(run("reduce --l 1 --k 2 --lambda 2,1,1").out) == "0");
    CHECK(trimmed(run("reduce --l 2 --k 2 --lambda 2,1").out) == "+σ[2,1]");

    const auto r = run("core --n 4 --lambda 2,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("core: 2\n") != std::string::npos);
    CHECK(r.out.find("m: 1\n") != std::string::npos);
    CHECK(r.out.find("widths: 2\n") != std::string::npos);

    const json doc = json::parse(run("core --n 4 --lambda 2,2,1,1 --json").out);
    CHECK(doc.at("core") == json::array({2}));
    CHECK(doc.at("m") == 1);
    CHECK(doc.at("widths") == json::array({2}));
}

TEST_CASE("table command") {
    const auto r = run("table --l 1 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "l,k,lambda,mu,nu,m,coefficient\n"
          "1,1,\"0\",\"0\",\"0\",0,1\n"
          "1,1,\"0\",\"1\",\"1\",0,1\n"
          "1,1,\"1\",\"0\",\"1\",0,1\n"
          "1,1,\"1\",\"1\",\"0\",1,1\n");

    // Identical rows when streamed to a file, and a JSON variant that parses.
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv_path = dir / "qschur_test_table.csv";
    const auto json_path = dir / "qschur_test_table.json";
    CHECK(run("table --l 2 --k 2 --out " + csv_path.string()).exit_code == 0);
    CHECK(run("table --l 2 --k 2 --out " + json_path.string()).exit_code == 0);
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "l,k,lambda,mu,nu,m,coefficient");
    long long rows = 0;
    long long diagonal_ok = 0;
    std::string line;
    while (std::getline(csv, line)) {
        ++rows;
    }
    std::ifstream jf(json_path);
    const json doc = json::parse(jf);
    CHECK(doc.at("command") == "table");
    CHECK(static_cast<long long>(doc.at("rows").size()) == rows);
    // The table is symmetric in (lambda, mu).
    for (const auto& row : doc.at("rows")) {
        json swapped = row;
        swapped["lambda"] = row.at("mu");
        swapped["mu"] = row.at("lambda");
        bool found = false;
        for (const auto& other : doc.at("rows")) {
            found = found || other == swapped;
        }
        CHECK(found);
    }
    for (const auto& row : doc.at("rows")) {
        long long weight = 0;
        for (const auto& part : row.at("nu")) {
            weight += part.get<long long>();
        }
        long long lw = 0;
        long long mw = 0;
        for (const auto& part : row.at("lambda")) {
            lw += part.get<long long>();
        }
        for (const auto& part : row.at("mu")) {
            mw += part.get<long long>();
        }
        diagonal_ok += row.at("m").get<long long>() * 4 + weight == lw + mw;
    }
    CHECK(diagonal_ok == rows);
    std::filesystem::remove(csv_path);
    std::filesystem::remove(json_path);

    // --max-degree restricts the pair sweep.
    const auto limited = run("table --l 2 --k 2 --max-degree 0");
    CHECK(limited.out ==
          "l,k,lambda,mu,nu,m,coefficient\n"
          "2,2,\"0\",\"0\",\"0\",0,1\n");
}

TEST_CASE("exit codes") {
    CHECK(run("product --l 2 --k 2 --lambda 2,3 --mu 1").exit_code == 2);
    CHECK(run("product --l 2 --k 2 --lambda 3 --mu 1").exit_code == 2);
    CHECK(run("qlr --l 0 --k 2 --lambda 1 --mu 1 --nu 1").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("product --l 2 --k 2 --lambda 1 --mu 1 --bogus-flag").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("core --n 0 --lambda 1").exit_code == 2);
}

TEST_CASE("selftest command") {
    auto r = run("selftest --max-size 2", /*keep_stderr=*/true);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run("selftest --max-size 2 --inject-sign-fault", /*keep_stderr=*/true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);

    // The size-4 run extends the duality sweep beyond the acceptance rectangle.
    r = run("selftest --max-size 4", /*keep_stderr=*/true);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("duality identities hold") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
