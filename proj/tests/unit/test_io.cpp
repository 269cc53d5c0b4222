#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pfsp/io.hpp"

using namespace pfsp;

namespace {

RunResult sample_result()
{
    const auto inst = testing::random_instance(7, 3, 21, 1, 40, 150);
    return pils_run(inst, SolverConfig{3000, 4, true});
}

}  // namespace

TEST_CASE("solution lines use 1-based labels")
{
    const std::vector<Solution> sols{{Permutation{1, 0, 2}, ObjectiveVector{{12, 3}}}};
    std::stringstream ss;
    write_solutions(ss, sols);
    CHECK(ss.str() == "12\t3\t2 1 3\n");
    CHECK(read_solutions(ss) == sols);
}

TEST_CASE("run record round trip")
{
    const RunResult r = sample_result();
    REQUIRE_FALSE(r.trajectory.empty());
    std::stringstream ss;
    write_run_result(ss, r);
    const RunResult back = read_run_result(ss);
    CHECK(back == r);

    std::stringstream again;
    write_run_result(again, back);
    std::stringstream first;
    write_run_result(first, r);
    CHECK(again.str() == first.str());
}

TEST_CASE("run record errors")
{
    std::stringstream truncated;
    write_run_result(truncated, sample_result());
    std::string text = truncated.str();
    text.resize(text.size() / 2);
    std::istringstream in(text);
    CHECK_THROWS_AS(read_run_result(in), ParseError);

    std::istringstream wrong("algorithm\tpils\n");
    CHECK_THROWS_AS(read_run_result(wrong), ParseError);
}

TEST_CASE("metric report round trip keeps full precision")
{
    const MetricReport report{0.1 + 0.2, 1.0 / 3.0, 17, 4};
    std::stringstream ss;
    write_metric_report(ss, report);
    const auto back = read_metric_report(ss);
    CHECK(back.d1 == report.d1);
    CHECK(back.d2 == report.d2);
    CHECK(back.reference_size == 17);
    CHECK(back.approx_size == 4);
    CHECK(format_metrics(report) == "0.3000 0.3333");
}

TEST_CASE("descent report round trip")
{
    const DescentReport report{"inst", 20, 9, {100, 250, 31}};
    CHECK(report.mean() == doctest::Approx(127.0));
    std::stringstream ss;
    write_descent_report(ss, report);
    CHECK(ss.str().rfind("instance\tn\tmean_evaluations\ninst\t20\t127.0\n", 0) == 0);
    CHECK(read_descent_report(ss) == report);
}

TEST_CASE("front reader")
{
    SUBCASE("plain points with comments and blanks")
    {
        std::istringstream in("# reference\n1 9\n\n4.5\t4\n9 1\n");
        CHECK(read_front(in) == Front{{1, 9}, {4.5, 4}, {9, 1}});
    }
    SUBCASE("solution lines drop the permutation")
    {
        std::istringstream in("7\t3\t2 1\n9\t2\t1 2\n");
        CHECK(read_front(in) == Front{{7, 3}, {9, 2}});
    }
    SUBCASE("run records yield their front")
    {
        const RunResult r = sample_result();
        std::stringstream ss;
        write_run_result(ss, r);
        CHECK(read_front(ss) == to_front(std::span<const Solution>(r.front)));
    }
    SUBCASE("written fronts read back exactly")
    {
        const Front f{{0.1, 1e-300}, {1.0 / 3.0, 123456789.0}};
        std::stringstream ss;
        write_front(ss, f);
        CHECK(read_front(ss) == f);
    }
    SUBCASE("errors")
    {
        std::istringstream empty("# nothing\n");
        CHECK_THROWS_AS(read_front(empty), ParseError);
        std::istringstream junk("1 2\n3 x\n");
        try {
            read_front(junk);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
}

TEST_CASE("format_double round trips")
{
    for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 1e-17, 123456.789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(2.0) == "2");
}
