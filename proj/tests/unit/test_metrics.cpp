#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pfsp/archive.hpp"
#include "pfsp/metrics.hpp"

using namespace pfsp;

namespace {

Front random_front(std::mt19937_64& rng, std::size_t max_size)
{
    std::uniform_int_distribution<int> size(1, static_cast<int>(max_size));
    std::uniform_real_distribution<double> value(0.0, 1000.0);
    Front f(static_cast<std::size_t>(size(rng)));
    for (auto& p : f) {
        p = {value(rng), value(rng)};
    }
    return non_dominated(std::move(f));
}

}  // namespace

TEST_CASE("D1/D2 hand examples")
{
    SUBCASE("self coverage")
    {
        const Front f{{1, 9}, {4, 4}, {9, 1}};
        const auto r = d_metrics(f, f);
        CHECK(r.d1 == 0.0);
        CHECK(r.d2 == 0.0);
        CHECK(r.reference_size == 3);
        CHECK(r.approx_size == 3);
    }
    SUBCASE("degenerate ranges fall back to unit weights")
    {
        const auto r = d_metrics({{0, 0}}, {{1, 1}});
        CHECK(r.d1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.d2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("half covered reference")
    {
        const auto r = d_metrics({{0, 10}, {10, 0}}, {{0, 10}});
        CHECK(std::abs(r.d1 - 0.5) <= 1e-9);
        CHECK(std::abs(r.d2 - 1.0) <= 1e-9);
    }
    SUBCASE("approximation points better than the reference cost nothing")
    {
        const auto r = d_metrics({{5, 5}}, {{4, 4}});
        CHECK(r.d1 == 0.0);
    }
}

TEST_CASE("D1/D2 errors")
{
    CHECK_THROWS_AS(d_metrics({}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(d_metrics({{1, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(d_metrics({{1, 1}}, {{1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(d_metrics({{1, 1}, {2}}, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("D1/D2 properties on random fronts")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const Front ref = random_front(rng, 12);
        Front approx = random_front(rng, 12);
        const auto base = d_metrics(ref, approx);
        CHECK(base.d1 >= 0.0);
        CHECK(base.d1 <= base.d2);

        // Adding a point never hurts.
        Front more = approx;
        more.push_back(random_front(rng, 1).front());
        const auto grown = d_metrics(ref, more);
        CHECK(grown.d1 <= base.d1 + 1e-12);
        CHECK(grown.d2 <= base.d2 + 1e-12);

        // A superset of the reference is a perfect approximation.
        Front superset = ref;
        superset.insert(superset.end(), approx.begin(), approx.end());
        const auto covered = d_metrics(ref, superset);
        CHECK(covered.d1 == 0.0);
        CHECK(covered.d2 == 0.0);

        // Zero stays zero under positive scaling; nonzero stays nonzero.
        const double factor = 0.5 + trial;
        auto scale = [factor](Front f) {
            for (auto& p : f) {
                for (auto& v : p) {
                    v *= factor;
                }
            }
            return f;
        };
        CHECK((d_metrics(scale(ref), scale(superset)).d1 == 0.0));
        CHECK((d_metrics(scale(ref), scale(approx)).d1 == 0.0) == (base.d1 == 0.0));
    }
}

TEST_CASE("non-dominated filter")
{
    const Front f = non_dominated({{3, 3}, {1, 5}, {3, 3}, {4, 4}, {5, 1}, {2, 6}});
    CHECK(f == Front{{1, 5}, {3, 3}, {5, 1}});
}

TEST_CASE("brute-force Pareto front")
{
    SUBCASE("single job")
    {
        const auto exact = brute_force_pareto(Instance("one", {{5}}, {2}));
        CHECK(exact.points == std::vector<ObjectiveVector>{ObjectiveVector{{5, 3}}});
    }
    SUBCASE("two jobs: both sequences are efficient")
    {
        const auto exact = brute_force_pareto(Instance("toy", {{3, 2}, {1, 4}}, {4, 8}));
        CHECK(exact.points == std::vector<ObjectiveVector>{ObjectiveVector{{7, 3}}, ObjectiveVector{{9, 2}}});
        CHECK(exact.witnesses == std::vector<Permutation>{{1, 0}, {0, 1}});
    }
    SUBCASE("refuses more than ten jobs")
    {
        CHECK_THROWS_AS(brute_force_pareto(testing::random_instance(11, 2, 1)), std::length_error);
    }
    SUBCASE("matches the archive and the O(N^2) filter")
    {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const auto inst = testing::random_instance(2 + seed % 6, 1 + seed % 4, seed, 1, 30, 120);
            const auto exact = brute_force_pareto(inst);
            CHECK(mutually_non_dominated(exact.points));

            const auto all = testing::all_objectives(inst);
            CHECK(exact.points == testing::nondominated_filter(all));

            ParetoArchive archive;
            Permutation perm = identity_permutation(inst.jobs());
            do {
                archive.update(perm, evaluate(inst, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(testing::sorted_vectors(archive.objective_vectors()) == exact.points);

            REQUIRE(exact.witnesses.size() == exact.points.size());
            for (std::size_t i = 0; i < exact.points.size(); ++i) {
                CHECK(evaluate(inst, exact.witnesses[i]) == exact.points[i]);
            }
        }
    }
}
