#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "novbott/cli.hpp"
#include "novbott/corpus.hpp"
#include "novbott/documents.hpp"

using namespace novbott;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "novbott");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    CliResult res;
    res.code = cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("novikov prints the dimension table") {
    const CliResult zero = run_cli({"novikov", "circle_xi1", "--strategy", "exact"});
    CHECK(zero.code == cli::kExitOk);
    CHECK(contains(zero.out, "strategy: exact"));
    CHECK(contains(zero.out, "degree | betti | betti/fiber"));
    CHECK(contains(zero.out, "euler characteristic: 0"));
    CHECK(contains(zero.out, "rank failure bound: 0"));

    const CliResult untwisted = run_cli({"novikov", "circle_xi0", "--strategy", "exact"});
    CHECK(untwisted.code == cli::kExitOk);
    CHECK(contains(untwisted.out, "     0 |     1 | 1"));
    CHECK(contains(untwisted.out, "     1 |     1 | 1"));
}

TEST_CASE("novikov json output is deterministic") {
    const std::vector<std::string> args = {"--format", "json-like", "--seed", "7",
                                           "novikov",  "torus_xi10"};
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.code == cli::kExitOk);
    CHECK(first.out == second.out);

    const Json rep = parse_json_text(first.out);
    CHECK(rep["command"] == "novikov");
    CHECK(rep["strategy"] == "randomized");
    CHECK(rep["seed"] == 7);
    CHECK(rep["betti"] == Json::array({0, 0, 0}));
    CHECK(rep["euler"] == 0);
}

TEST_CASE("check certifies the bundled pairs") {
    const CliResult twisted = run_cli({"check", "torus_bott", "torus_xi10"});
    CHECK(twisted.code == cli::kExitOk);
    CHECK(contains(twisted.out, "counting polynomial   M = 1 + 2*λ + λ^2"));
    CHECK(contains(twisted.out, "quotient Q = 1 + λ, remainder = 0"));
    CHECK(contains(twisted.out, "factorization M - N = (1+λ)·Q with Q ≥ 0: holds"));
    CHECK(contains(twisted.out, "euler: M(-1) = 0, N(-1) = 0, complex gives 0: consistent"));
    CHECK(contains(twisted.out, "bottom_circle: index 0, euler 0"));
    CHECK(contains(twisted.out, "top_circle: index 1, euler 0"));

    // argument order does not matter
    const CliResult flipped = run_cli({"check", "torus_xi10", "torus_bott"});
    CHECK(flipped.out == twisted.out);

    const CliResult untwisted = run_cli({"check", "torus_bott", "torus_xi0"});
    CHECK(untwisted.code == cli::kExitOk);
    CHECK(contains(untwisted.out, "quotient Q = 0, remainder = 0"));

    const CliResult sphere = run_cli({"check", "sphere_morse", "sphere_complex"});
    CHECK(sphere.code == cli::kExitOk);
    CHECK(contains(sphere.out, "complex gives 2: consistent"));
}

TEST_CASE("check fails on incompatible counting data") {
    const auto betti_path = temp_file("novbott_bad_betti.json");
    write_file(betti_path,
               "{\"format\": \"novbott/betti\", \"name\": \"odd_line\","
               " \"fiber_dim\": 1, \"betti\": [0, 1, 0]}");
    const CliResult negative = run_cli({"check", "sphere_morse", betti_path.string()});
    CHECK(negative.code == cli::kExitNegative);
    CHECK(contains(negative.out, "factorization M - N = (1+λ)·Q with Q ≥ 0: fails"));
    std::filesystem::remove(betti_path);

    const auto mismatch_path = temp_file("novbott_fiber_mismatch.json");
    write_file(mismatch_path,
               "{\"format\": \"novbott/betti\", \"name\": \"doubled\","
               " \"fiber_dim\": 2, \"betti\": [0, 0, 0]}");
    const CliResult mismatch = run_cli({"check", "sphere_morse", mismatch_path.string()});
    CHECK(mismatch.code == cli::kExitMalformed);
    CHECK(contains(mismatch.err, "fiber dimensions disagree"));
    std::filesystem::remove(mismatch_path);

    const CliResult wrong = run_cli({"check", "circle_xi1", "torus_xi10"});
    CHECK(wrong.code == cli::kExitMalformed);
    CHECK(contains(wrong.err, "novbott/morse"));
}

TEST_CASE("document references resolve files before example names") {
    const std::filesystem::path shadow = "circle_xi1";
    write_file(shadow, corpus_document_text("circle_xi0"));
    const CliResult res =
        run_cli({"--format", "json-like", "novikov", "circle_xi1", "--strategy", "exact"});
    std::filesystem::remove(shadow);
    CHECK(res.code == cli::kExitOk);
    const Json rep = parse_json_text(res.out);
    CHECK(rep["name"] == "circle_xi0");
    CHECK(rep["betti"] == Json::array({1, 1}));
}

TEST_CASE("unknown documents list the built-in examples") {
    const CliResult res = run_cli({"novikov", "nonesuch"});
    CHECK(res.code == cli::kExitMalformed);
    CHECK(contains(res.err, "no file or built-in example named 'nonesuch'"));
    CHECK(contains(res.err, "klein_like"));
}

TEST_CASE("examples list and print the corpus") {
    const CliResult listed = run_cli({"examples"});
    CHECK(listed.code == cli::kExitOk);
    std::string expected;
    for (const std::string& name : corpus_names()) {
        expected += name;
        expected += "\n";
    }
    CHECK(listed.out == expected);
    CHECK(run_cli({"examples", "list"}).out == expected);

    for (const std::string& name : corpus_names()) {
        const CliResult printed = run_cli({"examples", name});
        CHECK(printed.code == cli::kExitOk);
        CHECK(parse_json_text(printed.out) == parse_json_text(corpus_document_text(name)));
    }

    CHECK(run_cli({"examples", "nonesuch"}).code == cli::kExitMalformed);
}

TEST_CASE("spectrum probes report jump points") {
    const CliResult res = run_cli(
        {"spectrum", "torus_xi10", "--probes", "1,1;2,3", "--strategy", "exact"});
    CHECK(res.code == cli::kExitOk);
    CHECK(contains(res.out, "background: 0 0 0"));
    CHECK(contains(res.out, "(1, 1) | 1 2 1 | 1 2 1 | 0 1 2"));
    CHECK(contains(res.out, "(2, 3) | 0 0 0 | 0 0 0 | none"));

    const CliResult bad_point = run_cli({"spectrum", "torus_xi10", "--probes", "1"});
    CHECK(bad_point.code == cli::kExitMalformed);
}

TEST_CASE("spectrum eigenvalues come out as csv") {
    const std::vector<std::string> args = {"--format", "csv", "spectrum", "circle_xi1",
                                           "0.5"};
    const CliResult res = run_cli(args);
    CHECK(res.code == cli::kExitOk);
    std::istringstream lines(res.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "s,degree,index,eigenvalue");
    std::string row;
    std::getline(lines, row);
    const auto last_comma = row.rfind(',');
    REQUIRE(last_comma != std::string::npos);
    CHECK(row.substr(0, last_comma) == "0.5,0,0");
    const double ev = std::strtod(row.c_str() + last_comma + 1, nullptr);
    CHECK(std::abs(ev - std::pow(std::exp(-0.5) - 1.0, 2)) <= 1e-12);

    CHECK(run_cli(args).out == res.out);

    const CliResult not_csv = run_cli({"--format", "csv", "novikov", "circle_xi1"});
    CHECK(not_csv.code == cli::kExitMalformed);
    CHECK(contains(not_csv.err, "csv output is only available"));
}

TEST_CASE("spectrum exit codes grade the comparison") {
    const CliResult mismatch = run_cli({"spectrum", "circle_xi1", "0"});
    CHECK(mismatch.code == cli::kExitNegative);
    CHECK(contains(mismatch.out, "kernel mismatch against the exact background"));

    const CliResult murky =
        run_cli({"spectrum", "circle_xi1", "0.5", "--epsilon", "0.03"});
    CHECK(murky.code == cli::kExitInconclusive);
    CHECK(contains(murky.out, "some cells are inconclusive at this epsilon"));

    const CliResult clean = run_cli({"spectrum", "circle_xi1", "0.5", "1.0"});
    CHECK(clean.code == cli::kExitOk);
    CHECK(contains(clean.out, "all cells conclusive and matching"));

    const CliResult both =
        run_cli({"spectrum", "circle_xi1", "0.5", "--probes", "1"});
    CHECK(both.code == cli::kExitMalformed);
    CHECK(contains(both.err, "either --probes or s values"));
}

TEST_CASE("ss prints pages and the stabilized limit") {
    const CliResult res = run_cli({"ss", "circle_linear_family"});
    CHECK(res.code == cli::kExitOk);
    CHECK(contains(res.out, "family: circle_linear_family (order 3, base point 0)"));
    CHECK(contains(res.out, "   1 | 1 1"));
    CHECK(contains(res.out, "   2 | 0 0"));
    CHECK(contains(res.out, "d_1 (degree 0 -> 1):"));
    CHECK(contains(res.out, "stabilized: yes, from page 2"));
    CHECK(contains(res.out, "limit dims: 0 0"));

    // a two-page window shows the drop but cannot confirm stabilization
    const CliResult narrow = run_cli({"ss", "circle_linear_family", "--order", "2"});
    CHECK(narrow.code == cli::kExitOk);
    CHECK(contains(narrow.out, "stabilized: not within the truncation window"));

    const CliResult beyond = run_cli({"ss", "circle_linear_family", "--order", "5"});
    CHECK(beyond.code == cli::kExitInconclusive);
    CHECK(contains(beyond.err, "inconclusive: page 4 needs truncation order >= 4"));

    CHECK(run_cli({"ss", "circle_xi1"}).code == cli::kExitMalformed);
}

TEST_CASE("payloads can be written to a file") {
    const auto out_path = temp_file("novbott_cli_out.txt");
    const CliResult res =
        run_cli({"--out", out_path.string(), "novikov", "circle_xi1", "--strategy", "exact"});
    CHECK(res.code == cli::kExitOk);
    CHECK(res.out.empty());
    std::ifstream f(out_path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(contains(content.str(), "euler characteristic: 0"));
    std::filesystem::remove(out_path);
}

TEST_CASE("argument errors exit with the malformed code") {
    CHECK(run_cli({}).code == cli::kExitMalformed);
    CHECK(run_cli({"bogus"}).code == cli::kExitMalformed);
    CHECK(run_cli({"novikov"}).code == cli::kExitMalformed);
    CHECK(run_cli({"--strategy", "sloppy", "novikov", "circle_xi1"}).code ==
          cli::kExitMalformed);
    CHECK(run_cli({"--format", "yaml", "novikov", "circle_xi1"}).code ==
          cli::kExitMalformed);

    const auto broken_path = temp_file("novbott_broken.json");
    write_file(broken_path, "{\"format\": \"novbott/complex\",");
    CHECK(run_cli({"novikov", broken_path.string()}).code == cli::kExitMalformed);
    std::filesystem::remove(broken_path);

    const CliResult help = run_cli({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(contains(help.out, "novikov"));
    CHECK(contains(help.out, "spectrum"));
}
