#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using namespace pfsp;
using namespace pfsp::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("pfsp_cli_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const std::string& name) const { return path / name; }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

std::size_t line_count(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

ExitCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const CommandError& e) {
        return e.code();
    }
    return kOk;
}

}  // namespace

TEST_CASE("sample-only solve writes a full scatter")
{
    TempDir dir;
    cmd_generate(10, 3, 12345, dir / "inst.txt");
    SolveSpec spec;
    spec.instance = dir / "inst.txt";
    spec.due.tightness = 0.6;
    spec.algorithms = {"sample"};
    spec.sample_count = 1000;
    spec.out = dir / "out";
    std::ostringstream log;
    const auto summary = cmd_solve(spec, log);
    CHECK(line_count(slurp(dir / "out/sample_run000.scatter")) == 1000);
    REQUIRE(summary.rows.size() == 1);
    CHECK(summary.rows[0].mean_d1 == 0.0);
    std::ifstream run(dir / "out/sample_run000.run");
    CHECK(read_run_result(run).evaluations_used == 1000);
}

TEST_CASE("solve is reproducible and its summary matches the per-run metrics")
{
    TempDir dir;
    cmd_generate(12, 4, 777, dir / "inst.txt");
    auto run_into = [&](const std::string& name, unsigned threads) {
        SolveSpec spec;
        spec.instance = dir / "inst.txt";
        spec.due.tightness = 0.7;
        spec.algorithms = {"pils", "mos", "sample"};
        spec.runs = 3;
        spec.budget = 4000;
        spec.seed = 10;
        spec.trace = true;
        spec.threads = threads;
        spec.out = dir / name;
        std::ostringstream log;
        return cmd_solve(spec, log);
    };
    const auto summary = run_into("a", 1);
    run_into("b", 3);

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        const auto name = entry.path().filename();
        CHECK_MESSAGE(slurp(entry.path()) == slurp(dir / "b" / name), name.string());
        ++files;
    }
    CHECK(files == 3 * 3 * 2 + 3 + 3 + 3);  // run + metrics, scatters, trajectories, reference + summaries

    std::ifstream tsv(dir / "a/summary.tsv");
    std::string header;
    std::getline(tsv, header);
    CHECK(header == "algorithm\truns\tmean_d1\tmean_d2");
    std::string algorithm;
    std::size_t runs = 0;
    double d1 = 0.0;
    double d2 = 0.0;
    std::size_t rows = 0;
    while (tsv >> algorithm >> runs >> d1 >> d2) {
        double s1 = 0.0;
        double s2 = 0.0;
        for (unsigned r = 0; r < runs; ++r) {
            char stem[64];
            std::snprintf(stem, sizeof(stem), "%s_run%03u.metrics", algorithm.c_str(), r);
            std::ifstream in(dir / "a" / stem);
            const auto report = read_metric_report(in);
            s1 += report.d1;
            s2 += report.d2;
        }
        CHECK(std::abs(s1 / runs - d1) <= 1e-9);
        CHECK(std::abs(s2 / runs - d2) <= 1e-9);
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(summary.rows.size() == 3);
}

TEST_CASE("solve argument errors")
{
    TempDir dir;
    cmd_generate(5, 2, 3, dir / "inst.txt");
    SolveSpec spec;
    spec.instance = dir / "inst.txt";
    spec.out = dir / "out";
    std::ostringstream log;
    SolveSpec bad = spec;
    bad.algorithms = {"tabu"};
    CHECK(code_of([&] { cmd_solve(bad, log); }) == kUsage);
    bad = spec;
    bad.budget = 0;
    CHECK(code_of([&] { cmd_solve(bad, log); }) == kUsage);
    bad = spec;
    bad.runs = 0;
    CHECK(code_of([&] { cmd_solve(bad, log); }) == kUsage);
    bad = spec;
    bad.instance = dir / "missing.txt";
    CHECK(code_of([&] { cmd_solve(bad, log); }) == kInputError);
    bad = spec;
    bad.due.tightness = 1.5;
    CHECK(code_of([&] { cmd_solve(bad, log); }) == kUsage);
}

TEST_CASE("oracle")
{
    TempDir dir;
    put(dir / "toy.txt", "2 2\n3 1\n2 4\n");
    put(dir / "toy.due", "4 8\n");
    DueDateSource due;
    due.file = dir / "toy.due";
    cmd_oracle(dir / "toy.txt", due, dir / "toy.front");
    CHECK(slurp(dir / "toy.front") == "7\t3\n9\t2\n");

    put(dir / "one.txt", "1 1\n5\n");
    cmd_oracle(dir / "one.txt", {}, dir / "one.front");
    CHECK(slurp(dir / "one.front") == "5\t5\n");

    cmd_generate(11, 2, 5, dir / "big.txt");
    CHECK(code_of([&] { cmd_oracle(dir / "big.txt", {}, dir / "big.front"); }) == kRefused);
    CHECK_FALSE(fs::exists(dir / "big.front"));
}

TEST_CASE("metrics")
{
    TempDir dir;
    put(dir / "ref.front", "0 10\n10 0\n");
    put(dir / "half.front", "0 10\n");
    std::ostringstream out;
    cmd_metrics(dir / "ref.front", dir / "ref.front", out);
    CHECK(out.str() == "0.0000 0.0000\n");
    out.str("");
    cmd_metrics(dir / "ref.front", dir / "half.front", out);
    CHECK(out.str() == "0.5000 1.0000\n");
    CHECK(code_of([&] { cmd_metrics(dir / "nope.front", dir / "half.front", out); }) == kInputError);
    put(dir / "bad.front", "1 x\n");
    CHECK(code_of([&] { cmd_metrics(dir / "ref.front", dir / "bad.front", out); }) == kInputError);
}

TEST_CASE("descent and sample")
{
    TempDir dir;
    put(dir / "one.txt", "1 1\n5\n");
    const auto report = cmd_descent(dir / "one.txt", {}, 1, 1, dir / "one.descent");
    CHECK(report.counts.size() == 1);
    std::ifstream in(dir / "one.descent");
    CHECK(read_descent_report(in) == report);
    CHECK(code_of([&] { cmd_descent(dir / "one.txt", {}, 0, 1, dir / "x"); }) == kUsage);

    cmd_generate(6, 2, 9, dir / "six.txt");
    cmd_sample(dir / "six.txt", {}, 250, 4, dir / "six.scatter");
    CHECK(line_count(slurp(dir / "six.scatter")) == 250);
    CHECK(code_of([&] { cmd_sample(dir / "six.txt", {}, 0, 4, dir / "x"); }) == kUsage);
}

TEST_CASE("generate")
{
    TempDir dir;
    cmd_generate(20, 5, 873654221, dir / "ta001.txt");
    std::ifstream in(dir / "ta001.txt");
    const auto inst = parse_taillard(in);
    CHECK(inst.processing(0, 0) == 54);
    CHECK(inst.processing(19, 0) == 94);
    CHECK(code_of([&] { cmd_generate(0, 5, 1, dir / "x"); }) == kUsage);
    CHECK(code_of([&] { cmd_generate(5, 5, 0, dir / "x"); }) == kUsage);
}
