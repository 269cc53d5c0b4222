#pragma once

// Subcommand implementations behind the pfsp executable. Kept in a library so the tests
// can drive them without spawning processes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfsp/io.hpp"
#include "pfsp/problem.hpp"

namespace pfsp::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,        ///< malformed arguments or experiment spec
    kInputError = 3,   ///< unreadable or unparsable input file
    kOutputError = 4,  ///< output location not writable
    kRefused = 5,      ///< instance too large for exhaustive enumeration
};

class CommandError : public std::runtime_error {
public:
    CommandError(ExitCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Due dates come from a file, from the tightness generator, or stay zero.
struct DueDateSource {
    std::optional<std::filesystem::path> file;
    std::optional<double> tightness;
};

/// Loads a Taillard-format instance and assigns due dates.
Instance load_instance(const std::filesystem::path& path, const DueDateSource& due);

struct SolveSpec {
    std::filesystem::path instance;
    DueDateSource due;
    std::vector<std::string> algorithms{"pils", "mos"};  ///< subset of pils, mos, sample
    unsigned runs = 1;
    std::uint64_t budget = 100000;
    std::uint64_t seed = 1;
    std::filesystem::path out;
    std::optional<std::filesystem::path> reference;
    std::optional<std::uint64_t> sample_count;  ///< samples per sample run; defaults to budget
    bool trace = false;
    unsigned threads = 1;
};

struct AlgorithmSummary {
    std::string algorithm;
    std::size_t runs = 0;
    double mean_d1 = 0.0;
    double mean_d2 = 0.0;
};

struct SolveSummary {
    std::string instance;
    std::size_t reference_size = 0;
    std::vector<AlgorithmSummary> rows;
};

/// Runs every (algorithm, run) pair with seed = spec.seed + run index and writes into spec.out:
///   <algo>_run<NNN>.run       run record
///   <algo>_run<NNN>.metrics   D1/D2 against the reference
///   sample_run<NNN>.scatter   sampled objective vectors (sample runs only)
///   pils_run<NNN>.trajectory  intensification path (with trace)
///   reference.front           pooled or supplied reference front
///   summary.txt / summary.tsv per-algorithm mean D1/D2 (4 decimals / full precision)
SolveSummary cmd_solve(const SolveSpec& spec, std::ostream& log);

/// Exact front of a small instance, written in reference-front format.
void cmd_oracle(const std::filesystem::path& instance, const DueDateSource& due, const std::filesystem::path& out);

/// Prints "d1 d2" with four decimals.
MetricReport cmd_metrics(const std::filesystem::path& reference, const std::filesystem::path& approx,
                         std::ostream& out);

DescentReport cmd_descent(const std::filesystem::path& instance, const DueDateSource& due, std::uint64_t repetitions,
                          std::uint64_t seed, const std::filesystem::path& out);

/// Writes `count` sampled objective vectors, one per line.
void cmd_sample(const std::filesystem::path& instance, const DueDateSource& due, std::uint64_t count,
                std::uint64_t seed, const std::filesystem::path& out);

/// Writes a Taillard-generator instance.
void cmd_generate(std::size_t jobs, std::size_t machines, std::int64_t time_seed, const std::filesystem::path& out);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

std::string format_summary_table(const SolveSummary& summary);

}  // namespace pfsp::cli
