#pragma once

// Text formats for fronts, run records, metric reports, descent statistics and samples.
// Writers emit job labels 1-based; readers convert back to 0-based indices.
// All readers throw ParseError with the offending line number.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pfsp/archive.hpp"
#include "pfsp/metrics.hpp"
#include "pfsp/solvers.hpp"

namespace pfsp {

/// "C_max<TAB>T_sum<TAB>j1 j2 ... jn", one line per solution, in the given order.
void write_solutions(std::ostream& out, std::span<const Solution> solutions);
std::vector<Solution> read_solutions(std::istream& in);

/// Sorted by objective vector (C_max, then T_sum), then by permutation.
void write_archive(std::ostream& out, const ParetoArchive& archive);

/// One objective vector per line, tab separated.
void write_points(std::ostream& out, std::span<const ObjectiveVector> points);
void write_front(std::ostream& out, const Front& front);

/// Reference-front reader. Lines are whitespace-separated numbers; lines with three or more
/// tab-separated fields are read as solution lines and their permutation field is dropped.
/// Blank lines and '#' comments are skipped. A run record is accepted too and yields its front.
/// Throws ParseError on an empty front.
Front read_front(std::istream& in);

void write_run_result(std::ostream& out, const RunResult& result);
RunResult read_run_result(std::istream& in);

/// "d1 <value>" etc. with round-trip precision.
void write_metric_report(std::ostream& out, const MetricReport& report);
MetricReport read_metric_report(std::istream& in);

/// The two metric values with four decimals, space separated.
std::string format_metrics(const MetricReport& report);

struct DescentReport {
    std::string instance;
    std::size_t jobs = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;

    double mean() const;
    friend bool operator==(const DescentReport&, const DescentReport&) = default;
};

void write_descent_report(std::ostream& out, const DescentReport& report);
DescentReport read_descent_report(std::istream& in);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace pfsp
