#pragma once

// Permutation flow shop model: instances, schedule evaluation and instance I/O.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfsp {

using Time = std::int64_t;
using Job = std::uint32_t;

/// Job sequence, 0-based job indices. Files and console output use 1-based labels.
using Permutation = std::vector<Job>;

/// Raised by the text readers; carries the 1-based line number of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Point in outcome space. For flow shop instances values = (C_max, T_sum).
struct ObjectiveVector {
    std::vector<Time> values;

    std::size_t size() const noexcept { return values.size(); }
    Time operator[](std::size_t k) const { return values[k]; }

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// n jobs x m machines processing-time matrix plus per-job due dates.
/// Immutable once built; share freely between runs.
class Instance {
public:
    /// `processing[j][k]` is the duration of job j on machine k.
    Instance(std::string name, std::vector<std::vector<Time>> processing, std::vector<Time> due_dates);

    const std::string& name() const noexcept { return name_; }
    std::size_t jobs() const noexcept { return jobs_; }
    std::size_t machines() const noexcept { return machines_; }

    Time processing(std::size_t job, std::size_t machine) const { return processing_[job * machines_ + machine]; }
    std::span<const Time> job_row(std::size_t job) const
    {
        return {processing_.data() + job * machines_, machines_};
    }
    const std::vector<Time>& due_dates() const noexcept { return due_; }
    Time due_date(std::size_t job) const { return due_[job]; }

    /// Copy with the due dates replaced; throws std::invalid_argument on size mismatch or negative values.
    Instance with_due_dates(std::vector<Time> due_dates) const;
    Instance with_name(std::string name) const;

    std::vector<std::vector<Time>> processing_matrix() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Instance() = default;

    std::string name_;
    std::size_t jobs_ = 0;
    std::size_t machines_ = 0;
    std::vector<Time> processing_;  // job-major
    std::vector<Time> due_;
};

/// True iff `perm` holds each of 0..n-1 exactly once.
bool is_valid_permutation(std::span<const Job> perm, std::size_t n);

Permutation identity_permutation(std::size_t n);

/// Completion times of the semi-active schedule; row = sequence position, column = machine.
/// Throws std::invalid_argument if `perm` is not a permutation of the instance's jobs.
std::vector<std::vector<Time>> completion_matrix(const Instance& inst, std::span<const Job> perm);

/// (C_max, T_sum) of `perm`. Does not touch any evaluation counter.
ObjectiveVector evaluate(const Instance& inst, std::span<const Job> perm);

/// Counting evaluator. One call to evaluate() is one unit of budget.
/// Holds per-run state; give each run its own Evaluator.
class Evaluator {
public:
    explicit Evaluator(const Instance& inst);

    ObjectiveVector evaluate(std::span<const Job> perm);
    std::uint64_t count() const noexcept { return count_; }
    const Instance& instance() const noexcept { return *inst_; }

private:
    const Instance* inst_;
    std::uint64_t count_ = 0;
    std::vector<Time> front_;  // rolling completion row, one slot per machine
};

/// Reads the Taillard flow shop layout: a header line "n m [seed [ub [lb]]]" followed by an
/// m x n machine-major matrix. Label lines ending in ':' (as in the original distribution
/// files) are skipped. Due dates are zero.
Instance parse_taillard(std::istream& in, std::string name = "instance");
Instance load_taillard(const std::string& path);

/// Writes `inst` in the Taillard layout accepted by parse_taillard.
void write_taillard(std::ostream& out, const Instance& inst);

/// Taillard's benchmark generator (Lehmer LCG, p uniform in [1,99], machine-major draw order).
Instance generate_taillard(std::size_t jobs, std::size_t machines, std::int64_t time_seed,
                           std::string name = "generated");

/// Due dates from whitespace-separated integers, one per job in job order.
std::vector<Time> parse_due_dates(std::istream& in, std::size_t jobs);

/// d_j = round(tightness * C_j) with C_j the completion time of job j under the identity sequence.
/// Throws std::invalid_argument unless 0 < tightness <= 1.
std::vector<Time> generate_due_dates(const Instance& inst, double tightness);

}  // namespace pfsp
