#include "pfsp/solvers.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "pfsp/neighborhoods.hpp"

namespace pfsp {

Permutation random_permutation(std::size_t n, Rng& rng)
{
    Permutation perm = identity_permutation(n);
    shuffle(std::span<Job>(perm), rng);
    return perm;
}

namespace {

/// Evaluator with a hard cap. Once the cap is hit every further request is refused.
class BudgetedEvaluator {
public:
    BudgetedEvaluator(const Instance& inst, std::uint64_t budget) : eval_(inst), budget_(budget) {}

    std::optional<ObjectiveVector> operator()(std::span<const Job> perm)
    {
        if (eval_.count() >= budget_) {
            return std::nullopt;
        }
        return eval_.evaluate(perm);
    }

    std::uint64_t used() const noexcept { return eval_.count(); }

private:
    Evaluator eval_;
    std::uint64_t budget_;
};

struct SearchPoint {
    Permutation perm;
    ObjectiveVector obj;
};

// Among the neighbors that dominate the current solution, the ones no other such neighbor
// dominates. Returns indices into `candidates`.
std::vector<std::size_t> efficient_subset(const std::vector<std::pair<std::size_t, ObjectiveVector>>& candidates)
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& other) {
            return dominates(other.second, candidates[a].second);
        });
        if (!dominated) {
            out.push_back(a);
        }
    }
    return out;
}

// Descent through the neighborhoods in `order` until no neighbor in any of them dominates x.
// Each neighborhood is evaluated in full and offered to the archive before the move decision.
// The move goes to a uniformly chosen neighbor among the efficient dominating ones.
// Returns false if the budget ran out before local optimality; neighbors evaluated up to
// that point are archived.
bool intensify(BudgetedEvaluator& eval, SearchPoint& x, NeighborhoodOrder& order, Rng& rng, ParetoArchive* archive,
               std::vector<ObjectiveVector>* trajectory)
{
    std::vector<std::pair<std::size_t, ObjectiveVector>> improving;
    std::size_t i = 0;
    while (i < order.size()) {
        auto batch = neighbors(order[i], x.perm);
        improving.clear();
        for (std::size_t idx = 0; idx < batch.size(); ++idx) {
            auto obj = eval(batch[idx]);
            if (!obj) {
                return false;
            }
            if (dominates(*obj, x.obj)) {
                improving.emplace_back(idx, *obj);
            }
            if (archive != nullptr) {
                archive->update(batch[idx], std::move(*obj));
            }
        }
        if (improving.empty()) {
            ++i;
            continue;
        }
        const auto efficient = efficient_subset(improving);
        auto& [idx, obj] = improving[efficient[uniform_index(rng, efficient.size())]];
        x.perm = std::move(batch[idx]);
        x.obj = std::move(obj);
        if (trajectory != nullptr) {
            trajectory->push_back(x.obj);
        }
        i = 0;
        order = shuffle_order(rng);
    }
    return true;
}

RunResult make_result(const Instance& inst, const SolverConfig& cfg, std::string algorithm)
{
    if (cfg.budget == 0) {
        throw std::invalid_argument("evaluation budget must be at least 1");
    }
    RunResult result;
    result.instance = inst.name();
    result.algorithm = std::move(algorithm);
    result.seed = cfg.seed;
    result.budget = cfg.budget;
    return result;
}

void finish(RunResult& result, const ParetoArchive& archive, const BudgetedEvaluator& eval)
{
    result.front = archive.snapshot();
    result.evaluations_used = eval.used();
}

}  // namespace

RunResult pils_run(const Instance& inst, const SolverConfig& cfg)
{
    RunResult result = make_result(inst, cfg, "pils");
    Rng rng(cfg.seed);
    BudgetedEvaluator eval(inst, cfg.budget);
    ParetoArchive archive;
    auto* trajectory = cfg.record_trace ? &result.trajectory : nullptr;

    SearchPoint x{random_permutation(inst.jobs(), rng), {}};
    x.obj = *eval(x.perm);
    archive.update(x.perm, x.obj);
    if (trajectory != nullptr) {
        trajectory->push_back(x.obj);
    }
    if (inst.jobs() < 2) {
        finish(result, archive, eval);
        return result;
    }

    NeighborhoodOrder order = shuffle_order(rng);
    for (;;) {
        const std::uint64_t start = eval.used();
        if (!intensify(eval, x, order, rng, &archive, trajectory)) {
            break;
        }
        result.descent_lengths.push_back(eval.used() - start);
        if (cfg.record_trace) {
            result.local_optima.push_back(x.perm);
        }
        archive.mark_investigated(x.perm);

        if (auto next = archive.select_uninvestigated(rng)) {
            x = SearchPoint{std::move(next->perm), std::move(next->obj)};
        } else {
            const ArchiveEntry& base = archive.select_any(rng);
            Permutation perturbed = perturb(base.perm, rng);
            auto obj = eval(perturbed);
            if (!obj) {
                break;
            }
            x = SearchPoint{std::move(perturbed), std::move(*obj)};
            archive.update(x.perm, x.obj);
        }
        if (trajectory != nullptr) {
            trajectory->push_back(x.obj);
        }
    }
    finish(result, archive, eval);
    return result;
}

RunResult mos_run(const Instance& inst, const SolverConfig& cfg)
{
    RunResult result = make_result(inst, cfg, "mos");
    Rng rng(cfg.seed);
    BudgetedEvaluator eval(inst, cfg.budget);
    ParetoArchive archive;

    {
        Permutation x = random_permutation(inst.jobs(), rng);
        auto obj = *eval(x);
        archive.update(std::move(x), std::move(obj));
    }
    if (inst.jobs() < 2) {
        finish(result, archive, eval);
        return result;
    }

    for (bool exhausted = false; !exhausted;) {
        auto x = archive.select_uninvestigated(rng);
        if (!x) {
            // Every member investigated: restart from a fresh solution, keeping the archive.
            Permutation restart = random_permutation(inst.jobs(), rng);
            auto obj = eval(restart);
            if (!obj) {
                break;
            }
            archive.update(std::move(restart), std::move(*obj));
            continue;
        }
        const NeighborhoodKind kind = kAllNeighborhoods[uniform_index(rng, kAllNeighborhoods.size())];
        for (auto& neighbor : neighbors(kind, x->perm)) {
            auto obj = eval(neighbor);
            if (!obj) {
                exhausted = true;
                break;
            }
            archive.update(std::move(neighbor), std::move(*obj));
        }
        if (!exhausted) {
            archive.mark_investigated(x->perm);
        }
    }
    finish(result, archive, eval);
    return result;
}

RunResult sample_run(const Instance& inst, const SolverConfig& cfg, std::vector<ObjectiveVector>* samples)
{
    RunResult result = make_result(inst, cfg, "sample");
    Rng rng(cfg.seed);
    BudgetedEvaluator eval(inst, cfg.budget);
    ParetoArchive archive;
    for (std::uint64_t i = 0; i < cfg.budget; ++i) {
        Permutation perm = random_permutation(inst.jobs(), rng);
        auto obj = *eval(perm);
        if (samples != nullptr) {
            samples->push_back(obj);
        }
        archive.update(std::move(perm), std::move(obj));
    }
    finish(result, archive, eval);
    return result;
}

std::vector<ObjectiveVector> random_sample(const Instance& inst, std::uint64_t count, std::uint64_t seed)
{
    std::vector<ObjectiveVector> out;
    if (count == 0) {
        return out;
    }
    out.reserve(count);
    sample_run(inst, SolverConfig{count, seed, false}, &out);
    return out;
}

std::vector<std::uint64_t> descent_stats(const Instance& inst, std::uint64_t repetitions, std::uint64_t seed)
{
    Rng rng(seed);
    BudgetedEvaluator eval(inst, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::uint64_t> counts;
    counts.reserve(repetitions);
    for (std::uint64_t r = 0; r < repetitions; ++r) {
        SearchPoint x{random_permutation(inst.jobs(), rng), {}};
        x.obj = *eval(x.perm);
        NeighborhoodOrder order = shuffle_order(rng);
        const std::uint64_t start = eval.used();
        intensify(eval, x, order, rng, nullptr, nullptr);
        counts.push_back(eval.used() - start);
    }
    return counts;
}

bool is_locally_optimal(const Instance& inst, std::span<const Job> perm)
{
    const ObjectiveVector own = evaluate(inst, perm);
    Evaluator eval(inst);
    for (NeighborhoodKind kind : kAllNeighborhoods) {
        for (const auto& neighbor : neighbors(kind, perm)) {
            if (dominates(eval.evaluate(neighbor), own)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pfsp
