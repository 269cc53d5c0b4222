// pfsp: multi-objective permutation flow shop solver (PILS, MOS, random sampling).

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using pfsp::cli::DueDateSource;

void add_due_dates(CLI::App& cmd, DueDateSource& due, std::string& file, double& tau)
{
    auto* f = cmd.add_option("--due-dates", file, "Due-date file, one integer per job");
    auto* t = cmd.add_option("--tau", tau, "Generate due dates as round(tau * identity-sequence completion)");
    f->excludes(t);
    cmd.callback([&due, &file, &tau, f, t] {
        if (f->count() > 0) {
            due.file = file;
        }
        if (t->count() > 0) {
            due.tightness = tau;
        }
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multi-objective permutation flow shop scheduling: Pareto iterated local search"};
    app.require_subcommand(1);

    DueDateSource due;
    std::string due_file;
    double tau = 0.0;
    std::string instance;
    std::string out;
    std::uint64_t seed = 1;

    pfsp::cli::SolveSpec spec;
    std::string reference;
    std::uint64_t count = 0;
    auto* solve = app.add_subcommand("solve", "Seeded batch of PILS / MOS / sampling runs with D1/D2 summary");
    solve->add_option("--instance", instance, "Taillard-format instance")->required();
    solve->add_option("--algo", spec.algorithms, "Algorithms: pils, mos, sample")->delimiter(',');
    solve->add_option("--runs", spec.runs, "Runs per algorithm")->check(CLI::PositiveNumber);
    solve->add_option("--budget", spec.budget, "Evaluations per run")->check(CLI::PositiveNumber);
    solve->add_option("--seed", seed, "Base seed; run i uses seed + i");
    solve->add_option("--out", out, "Output directory")->required();
    solve->add_option("--reference", reference, "Reference front file (default: pooled front of all runs)");
    solve->add_option("--count", count, "Samples per sample run (default: budget)")->check(CLI::PositiveNumber);
    solve->add_flag("--trace", spec.trace, "Write PILS intensification trajectories");
    solve->add_option("--threads", spec.threads, "Concurrent runs")->check(CLI::PositiveNumber);
    add_due_dates(*solve, due, due_file, tau);

    auto* oracle = app.add_subcommand("oracle", "Exact Pareto front by enumeration (n <= 10)");
    oracle->add_option("--instance", instance, "Taillard-format instance")->required();
    oracle->add_option("--out", out, "Front file to write")->required();
    add_due_dates(*oracle, due, due_file, tau);

    std::string approx;
    auto* metrics = app.add_subcommand("metrics", "D1/D2 of an approximation against a reference front");
    metrics->add_option("--reference", reference, "Reference front file")->required();
    metrics->add_option("approx", approx, "Approximation front or run front file")->required();

    std::uint64_t repetitions = 100;
    auto* descent = app.add_subcommand("descent", "Evaluations until a local optimum from random starts");
    descent->add_option("--instance", instance, "Taillard-format instance")->required();
    descent->add_option("--repetitions", repetitions, "Random starts")->check(CLI::PositiveNumber);
    descent->add_option("--seed", seed, "Seed");
    descent->add_option("--out", out, "Statistics file to write")->required();
    add_due_dates(*descent, due, due_file, tau);

    std::uint64_t sample_count = 50000;
    auto* sample = app.add_subcommand("sample", "Objective vectors of random permutations (scatter data)");
    sample->add_option("--instance", instance, "Taillard-format instance")->required();
    sample->add_option("--count", sample_count, "Number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "Seed");
    sample->add_option("--out", out, "Scatter file to write")->required();
    add_due_dates(*sample, due, due_file, tau);

    std::size_t jobs = 20;
    std::size_t machines = 5;
    std::int64_t time_seed = 873654221;
    auto* generate = app.add_subcommand("generate", "Instance from Taillard's generator");
    generate->add_option("--jobs", jobs, "Number of jobs")->check(CLI::PositiveNumber);
    generate->add_option("--machines", machines, "Number of machines")->check(CLI::PositiveNumber);
    generate->add_option("--time-seed", time_seed, "Generator seed");
    generate->add_option("--out", out, "Instance file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pfsp::cli::kUsage;
    }

    try {
        if (solve->parsed()) {
            spec.instance = instance;
            spec.due = due;
            spec.seed = seed;
            spec.out = out;
            if (!reference.empty()) {
                spec.reference = reference;
            }
            if (count > 0) {
                spec.sample_count = count;
            }
            pfsp::cli::cmd_solve(spec, std::cout);
        } else if (oracle->parsed()) {
            pfsp::cli::cmd_oracle(instance, due, out);
        } else if (metrics->parsed()) {
            pfsp::cli::cmd_metrics(reference, approx, std::cout);
        } else if (descent->parsed()) {
            const auto report = pfsp::cli::cmd_descent(instance, due, repetitions, seed, out);
            std::cout << report.instance << '\t' << report.jobs << '\t' << report.mean() << '\n';
        } else if (sample->parsed()) {
            pfsp::cli::cmd_sample(instance, due, sample_count, seed, out);
        } else if (generate->parsed()) {
            pfsp::cli::cmd_generate(jobs, machines, time_seed, out);
        }
    } catch (const pfsp::cli::CommandError& e) {
        std::cerr << "pfsp: " << e.what() << '\n';
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "pfsp: " << e.what() << '\n';
        return pfsp::cli::kFailure;
    }
    return pfsp::cli::kOk;
}
