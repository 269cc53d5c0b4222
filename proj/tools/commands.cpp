#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "pfsp/metrics.hpp"
#include "pfsp/solvers.hpp"

namespace pfsp::cli {

namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw CommandError(kInputError, "cannot open '" + path.string() + "'");
    }
    return in;
}

template <typename Fn>
auto parse_input(const fs::path& path, Fn&& fn)
{
    auto in = open_input(path);
    try {
        return fn(in);
    } catch (const ParseError& e) {
        throw CommandError(kInputError, path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw CommandError(kInputError, path.string() + ": " + e.what());
    }
}

std::string run_stem(const std::string& algorithm, unsigned run)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_run%03u", algorithm.c_str(), run);
    return buf;
}

void prepare_output_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw CommandError(kOutputError, "cannot create output directory '" + dir.string() + "'");
    }
}

void validate(const SolveSpec& spec)
{
    static const std::set<std::string> known{"pils", "mos", "sample"};
    if (spec.algorithms.empty()) {
        throw CommandError(kUsage, "select at least one algorithm");
    }
    for (const auto& a : spec.algorithms) {
        if (!known.contains(a)) {
            throw CommandError(kUsage, "unknown algorithm '" + a + "' (expected pils, mos or sample)");
        }
    }
    if (std::set<std::string>(spec.algorithms.begin(), spec.algorithms.end()).size() != spec.algorithms.size()) {
        throw CommandError(kUsage, "algorithm listed twice");
    }
    if (spec.runs == 0) {
        throw CommandError(kUsage, "runs must be at least 1");
    }
    if (spec.budget == 0 || (spec.sample_count && *spec.sample_count == 0)) {
        throw CommandError(kUsage, "budget must be at least 1");
    }
    if (spec.out.empty()) {
        throw CommandError(kUsage, "an output directory is required");
    }
}

std::string to_text(auto&& writer)
{
    std::ostringstream ss;
    writer(ss);
    return ss.str();
}

struct Task {
    std::string algorithm;
    unsigned run = 0;
    RunResult result;
    std::vector<ObjectiveVector> samples;
};

void execute(const Instance& inst, const SolveSpec& spec, Task& job)
{
    SolverConfig cfg{spec.budget, spec.seed + job.run, spec.trace};
    if (job.algorithm == "pils") {
        job.result = pils_run(inst, cfg);
    } else if (job.algorithm == "mos") {
        job.result = mos_run(inst, cfg);
    } else {
        cfg.budget = spec.sample_count.value_or(spec.budget);
        job.result = sample_run(inst, cfg, &job.samples);
    }
}

void run_all(const Instance& inst, const SolveSpec& spec, std::vector<Task>& jobs)
{
    const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(jobs.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                execute(inst, spec, jobs[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

void write_file_atomic(const fs::path& path, const std::string& contents)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << contents) || !out.flush()) {
            throw CommandError(kOutputError, "cannot write '" + path.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw CommandError(kOutputError, "cannot write '" + path.string() + "'");
    }
}

Instance load_instance(const fs::path& path, const DueDateSource& due)
{
    if (due.file && due.tightness) {
        throw CommandError(kUsage, "give either a due-date file or a tightness, not both");
    }
    Instance inst = parse_input(path, [&](std::istream& in) { return parse_taillard(in, path.stem().string()); });
    if (due.file) {
        auto dates = parse_input(*due.file, [&](std::istream& in) { return parse_due_dates(in, inst.jobs()); });
        return inst.with_due_dates(std::move(dates));
    }
    if (due.tightness) {
        try {
            return inst.with_due_dates(generate_due_dates(inst, *due.tightness));
        } catch (const std::invalid_argument& e) {
            throw CommandError(kUsage, e.what());
        }
    }
    return inst;
}

std::string format_summary_table(const SolveSummary& summary)
{
    std::ostringstream out;
    char buf[64];
    out << "Instance";
    for (const char* metric : {"D1", "D2"}) {
        for (const auto& row : summary.rows) {
            std::snprintf(buf, sizeof(buf), "\t%s:%s", metric, row.algorithm.c_str());
            out << buf;
        }
    }
    out << '\n' << summary.instance;
    for (int metric = 0; metric < 2; ++metric) {
        for (const auto& row : summary.rows) {
            std::snprintf(buf, sizeof(buf), "\t%.4f", metric == 0 ? row.mean_d1 : row.mean_d2);
            out << buf;
        }
    }
    out << '\n';
    return out.str();
}

SolveSummary cmd_solve(const SolveSpec& spec, std::ostream& log)
{
    validate(spec);
    const Instance inst = load_instance(spec.instance, spec.due);
    if (inst.jobs() < 1) {
        throw CommandError(kInputError, "instance has no jobs");
    }
    std::optional<Front> supplied;
    if (spec.reference) {
        supplied = parse_input(*spec.reference, [](std::istream& in) { return read_front(in); });
    }
    prepare_output_dir(spec.out);

    std::vector<Task> jobs;
    for (const auto& algorithm : spec.algorithms) {
        for (unsigned run = 0; run < spec.runs; ++run) {
            jobs.push_back(Task{algorithm, run, {}, {}});
        }
    }
    try {
        run_all(inst, spec, jobs);
    } catch (const std::invalid_argument& e) {
        throw CommandError(kUsage, e.what());
    }

    Front reference;
    if (supplied) {
        reference = *supplied;
    } else {
        Front pool;
        for (const auto& job : jobs) {
            auto points = to_front(job.result.front);
            pool.insert(pool.end(), points.begin(), points.end());
        }
        reference = non_dominated(std::move(pool));
    }
    if (!reference.empty() && reference.front().size() != 2) {
        throw CommandError(kInputError, "reference front must have two objectives");
    }
    write_file_atomic(spec.out / "reference.front", to_text([&](std::ostream& o) { write_front(o, reference); }));

    SolveSummary summary{inst.name(), reference.size(), {}};
    for (const auto& algorithm : spec.algorithms) {
        summary.rows.push_back(AlgorithmSummary{algorithm, 0, 0.0, 0.0});
    }
    for (const auto& job : jobs) {
        const std::string stem = run_stem(job.algorithm, job.run);
        const MetricReport report = d_metrics(reference, to_front(job.result.front));
        write_file_atomic(spec.out / (stem + ".run"),
                          to_text([&](std::ostream& o) { write_run_result(o, job.result); }));
        write_file_atomic(spec.out / (stem + ".metrics"),
                          to_text([&](std::ostream& o) { write_metric_report(o, report); }));
        if (job.algorithm == "sample") {
            write_file_atomic(spec.out / (stem + ".scatter"),
                              to_text([&](std::ostream& o) { write_points(o, job.samples); }));
        }
        if (spec.trace && job.algorithm == "pils") {
            write_file_atomic(spec.out / (stem + ".trajectory"),
                              to_text([&](std::ostream& o) { write_points(o, job.result.trajectory); }));
        }
        auto row = std::find_if(summary.rows.begin(), summary.rows.end(),
                                [&](const AlgorithmSummary& r) { return r.algorithm == job.algorithm; });
        row->runs += 1;
        row->mean_d1 += report.d1;
        row->mean_d2 += report.d2;
    }
    std::ostringstream tsv;
    tsv << "algorithm\truns\tmean_d1\tmean_d2\n";
    for (auto& row : summary.rows) {
        row.mean_d1 /= static_cast<double>(row.runs);
        row.mean_d2 /= static_cast<double>(row.runs);
        tsv << row.algorithm << '\t' << row.runs << '\t' << format_double(row.mean_d1) << '\t'
            << format_double(row.mean_d2) << '\n';
    }
    const std::string table = format_summary_table(summary);
    write_file_atomic(spec.out / "summary.txt", table);
    write_file_atomic(spec.out / "summary.tsv", tsv.str());
    log << table;
    return summary;
}

void cmd_oracle(const fs::path& instance, const DueDateSource& due, const fs::path& out)
{
    const Instance inst = load_instance(instance, due);
    ExactFront exact;
    try {
        exact = brute_force_pareto(inst);
    } catch (const std::length_error& e) {
        throw CommandError(kRefused, e.what());
    }
    write_file_atomic(out, to_text([&](std::ostream& o) { write_points(o, exact.points); }));
}

MetricReport cmd_metrics(const fs::path& reference, const fs::path& approx, std::ostream& out)
{
    const Front ref = parse_input(reference, [](std::istream& in) { return read_front(in); });
    const Front app = parse_input(approx, [](std::istream& in) { return read_front(in); });
    MetricReport report;
    try {
        report = d_metrics(ref, app);
    } catch (const std::invalid_argument& e) {
        throw CommandError(kInputError, e.what());
    }
    out << format_metrics(report) << '\n';
    return report;
}

DescentReport cmd_descent(const fs::path& instance, const DueDateSource& due, std::uint64_t repetitions,
                          std::uint64_t seed, const fs::path& out)
{
    if (repetitions == 0) {
        throw CommandError(kUsage, "repetitions must be at least 1");
    }
    const Instance inst = load_instance(instance, due);
    DescentReport report{inst.name(), inst.jobs(), seed, descent_stats(inst, repetitions, seed)};
    write_file_atomic(out, to_text([&](std::ostream& o) { write_descent_report(o, report); }));
    return report;
}

void cmd_sample(const fs::path& instance, const DueDateSource& due, std::uint64_t count, std::uint64_t seed,
                const fs::path& out)
{
    if (count == 0) {
        throw CommandError(kUsage, "count must be at least 1");
    }
    const Instance inst = load_instance(instance, due);
    const auto points = random_sample(inst, count, seed);
    write_file_atomic(out, to_text([&](std::ostream& o) { write_points(o, points); }));
}

void cmd_generate(std::size_t jobs, std::size_t machines, std::int64_t time_seed, const fs::path& out)
{
    if (jobs == 0 || machines == 0) {
        throw CommandError(kUsage, "jobs and machines must be positive");
    }
    if (time_seed <= 0 || time_seed >= 2147483647) {
        throw CommandError(kUsage, "time seed must lie in [1, 2^31 - 2]");
    }
    const Instance inst = generate_taillard(jobs, machines, time_seed);
    write_file_atomic(out, to_text([&](std::ostream& o) { write_taillard(o, inst); }));
}

}  // namespace pfsp::cli
