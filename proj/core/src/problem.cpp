#include "pfsp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pfsp {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

Instance::Instance(std::string name, std::vector<std::vector<Time>> processing, std::vector<Time> due_dates)
    : name_(std::move(name)), jobs_(processing.size()), machines_(processing.empty() ? 0 : processing.front().size())
{
    if (jobs_ == 0 || machines_ == 0) {
        throw std::invalid_argument("instance needs at least one job and one machine");
    }
    processing_.reserve(jobs_ * machines_);
    for (const auto& row : processing) {
        if (row.size() != machines_) {
            throw std::invalid_argument("processing-time rows differ in length");
        }
        for (Time t : row) {
            if (t < 0) {
                throw std::invalid_argument("negative processing time");
            }
            processing_.push_back(t);
        }
    }
    if (due_dates.empty()) {
        due_dates.assign(jobs_, 0);
    }
    *this = with_due_dates(std::move(due_dates));
}

Instance Instance::with_due_dates(std::vector<Time> due_dates) const
{
    if (due_dates.size() != jobs_) {
        throw std::invalid_argument("expected " + std::to_string(jobs_) + " due dates, got " +
                                    std::to_string(due_dates.size()));
    }
    if (std::any_of(due_dates.begin(), due_dates.end(), [](Time d) { return d < 0; })) {
        throw std::invalid_argument("negative due date");
    }
    Instance copy;
    copy.name_ = name_;
    copy.jobs_ = jobs_;
    copy.machines_ = machines_;
    copy.processing_ = processing_;
    copy.due_ = std::move(due_dates);
    return copy;
}

Instance Instance::with_name(std::string name) const
{
    Instance copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

std::vector<std::vector<Time>> Instance::processing_matrix() const
{
    std::vector<std::vector<Time>> out(jobs_);
    for (std::size_t j = 0; j < jobs_; ++j) {
        auto row = job_row(j);
        out[j].assign(row.begin(), row.end());
    }
    return out;
}

bool is_valid_permutation(std::span<const Job> perm, std::size_t n)
{
    if (perm.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (Job j : perm) {
        if (j >= n || seen[j]) {
            return false;
        }
        seen[j] = true;
    }
    return true;
}

Permutation identity_permutation(std::size_t n)
{
    Permutation perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<Job>(i);
    }
    return perm;
}

namespace {

void require_permutation(const Instance& inst, std::span<const Job> perm)
{
    if (!is_valid_permutation(perm, inst.jobs())) {
        throw std::invalid_argument("sequence of length " + std::to_string(perm.size()) +
                                    " is not a permutation of " + std::to_string(inst.jobs()) + " jobs");
    }
}

}  // namespace

std::vector<std::vector<Time>> completion_matrix(const Instance& inst, std::span<const Job> perm)
{
    require_permutation(inst, perm);
    const std::size_t n = inst.jobs();
    const std::size_t m = inst.machines();
    std::vector<std::vector<Time>> c(n, std::vector<Time>(m, 0));
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Job job = perm[pos];
        for (std::size_t k = 0; k < m; ++k) {
            const Time above = pos > 0 ? c[pos - 1][k] : 0;
            const Time left = k > 0 ? c[pos][k - 1] : 0;
            c[pos][k] = std::max(above, left) + inst.processing(job, k);
        }
    }
    return c;
}

ObjectiveVector evaluate(const Instance& inst, std::span<const Job> perm)
{
    Evaluator eval(inst);
    return eval.evaluate(perm);
}

Evaluator::Evaluator(const Instance& inst) : inst_(&inst), front_(inst.machines(), 0) {}

ObjectiveVector Evaluator::evaluate(std::span<const Job> perm)
{
    const Instance& inst = *inst_;
    const std::size_t n = inst.jobs();
    const std::size_t m = inst.machines();
    if (perm.size() != n) {
        throw std::invalid_argument("sequence length " + std::to_string(perm.size()) + " does not match " +
                                    std::to_string(n) + " jobs");
    }
    ++count_;

    // front_[k] holds the completion time of the previous job on machine k.
    std::fill(front_.begin(), front_.end(), 0);
    Time tardiness = 0;
    for (Job job : perm) {
        if (job >= n) {
            throw std::invalid_argument("job index out of range");
        }
        const auto row = inst.job_row(job);
        Time t = 0;
        for (std::size_t k = 0; k < m; ++k) {
            t = std::max(t, front_[k]) + row[k];
            front_[k] = t;
        }
        tardiness += std::max<Time>(t - inst.due_date(job), 0);
    }
    // The last job finishes last on the final machine.
    return ObjectiveVector{{front_[m - 1], tardiness}};
}

namespace {

bool is_label_line(const std::string& line)
{
    auto last = line.find_last_not_of(" \t\r");
    return last != std::string::npos && line[last] == ':';
}

bool is_blank(const std::string& line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<Time> parse_numbers(const std::string& line, std::size_t line_no)
{
    std::vector<Time> out;
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(line_no, "non-numeric token '" + token + "'");
        }
        if (used != token.size()) {
            throw ParseError(line_no, "non-numeric token '" + token + "'");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace

Instance parse_taillard(std::istream& in, std::string name)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Time> values;  // machine-major

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) {
            continue;
        }
        if (is_label_line(line)) {
            if (have_header && !values.empty() && values.size() == n * m) {
                break;  // start of a following instance in a multi-instance file
            }
            continue;
        }
        auto numbers = parse_numbers(line, line_no);
        if (!have_header) {
            if (numbers.size() < 2 || numbers.size() > 5) {
                throw ParseError(line_no, "header must hold n m and at most seed, upper and lower bound");
            }
            if (numbers[0] < 1 || numbers[1] < 1) {
                throw ParseError(line_no, "job and machine counts must be positive");
            }
            n = static_cast<std::size_t>(numbers[0]);
            m = static_cast<std::size_t>(numbers[1]);
            have_header = true;
            values.reserve(n * m);
            continue;
        }
        if (values.size() + numbers.size() > n * m) {
            throw ParseError(line_no, "more processing times than " + std::to_string(n * m));
        }
        for (Time t : numbers) {
            if (t < 0) {
                throw ParseError(line_no, "negative processing time");
            }
            values.push_back(t);
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header line");
    }
    if (values.size() != n * m) {
        throw ParseError(line_no, "truncated matrix: expected " + std::to_string(n * m) + " processing times, got " +
                                      std::to_string(values.size()));
    }

    std::vector<std::vector<Time>> p(n, std::vector<Time>(m));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            p[j][k] = values[k * n + j];
        }
    }
    return Instance(std::move(name), std::move(p), {});
}

Instance load_taillard(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file '" + path + "'");
    }
    auto stem = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) {
        stem.erase(dot);
    }
    return parse_taillard(in, stem);
}

void write_taillard(std::ostream& out, const Instance& inst)
{
    out << inst.jobs() << ' ' << inst.machines() << '\n';
    for (std::size_t k = 0; k < inst.machines(); ++k) {
        for (std::size_t j = 0; j < inst.jobs(); ++j) {
            out << (j ? " " : "") << inst.processing(j, k);
        }
        out << '\n';
    }
}

namespace {

// Taillard (1993) uniform generator. The float division is part of the reference definition.
Time taillard_unif(std::int64_t& seed, Time low, Time high)
{
    constexpr std::int64_t m = 2147483647, a = 16807, b = 127773, c = 2836;
    const std::int64_t k = seed / b;
    seed = a * (seed % b) - k * c;
    if (seed < 0) {
        seed += m;
    }
    const double value_0_1 = static_cast<float>(seed) / static_cast<float>(m);
    return low + static_cast<Time>(value_0_1 * static_cast<double>(high - low + 1));
}

}  // namespace

Instance generate_taillard(std::size_t jobs, std::size_t machines, std::int64_t time_seed, std::string name)
{
    std::vector<std::vector<Time>> p(jobs, std::vector<Time>(machines));
    for (std::size_t k = 0; k < machines; ++k) {
        for (std::size_t j = 0; j < jobs; ++j) {
            p[j][k] = taillard_unif(time_seed, 1, 99);
        }
    }
    return Instance(std::move(name), std::move(p), {});
}

std::vector<Time> parse_due_dates(std::istream& in, std::size_t jobs)
{
    std::vector<Time> due;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (Time d : parse_numbers(line, line_no)) {
            if (d < 0) {
                throw ParseError(line_no, "negative due date");
            }
            due.push_back(d);
        }
    }
    if (due.size() != jobs) {
        throw ParseError(line_no, "expected " + std::to_string(jobs) + " due dates, got " + std::to_string(due.size()));
    }
    return due;
}

std::vector<Time> generate_due_dates(const Instance& inst, double tightness)
{
    if (!(tightness > 0.0 && tightness <= 1.0)) {
        throw std::invalid_argument("due-date tightness must lie in (0, 1]");
    }
    const auto c = completion_matrix(inst, identity_permutation(inst.jobs()));
    std::vector<Time> due(inst.jobs());
    for (std::size_t j = 0; j < inst.jobs(); ++j) {
        due[j] = static_cast<Time>(std::llround(tightness * static_cast<double>(c[j][inst.machines() - 1])));
    }
    return due;
}

}  // namespace pfsp
