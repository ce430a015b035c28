// Acceptance suite: every guarantee the library advertises, checked at its
// stated tolerance, one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "parsched/adversary.hpp"
#include "parsched/cli.hpp"
#include "parsched/ladder.hpp"
#include "parsched/numeric.hpp"
#include "parsched/offline.hpp"
#include "parsched/online.hpp"
#include "parsched/online_general.hpp"
#include "parsched/online_sorted.hpp"
#include "parsched/rng.hpp"
#include "parsched/workload.hpp"

using namespace parsched;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<double> random_sizes(Xoshiro256& rng, int max_len, double lo, double hi) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_len)));
    std::vector<double> sizes;
    sizes.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sizes.push_back(rng.log_uniform(lo, hi));
    return sizes;
}

// 1. Every prefix ratio of the general algorithm stays below sqrt(5)-1 and
//    the two-unit-job instance reaches it.
Check criterion1() {
    Check c;
    const double bound = general_constants().ratio;
    Xoshiro256 rng(1001);
    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        GeneralDual state;
        const auto jobs = make_jobs(random_sizes(rng, 200, 1e-3, 1e3));
        for (const Job& job : jobs) {
            state.step(job);
            const double ms =
                std::min(state.solution_a().max_load(), state.solution_b().max_load());
            c.require(ms / state.opt() <= bound + 1e-9,
                      "prefix ratio above bound in trial " + std::to_string(trial));
            if (!c.ok) break;
        }
        c.require(validate(state.solution_a(), jobs, true).ok() &&
                      validate(state.solution_b(), jobs, true).ok(),
                  "validator violation in trial " + std::to_string(trial));
    }
    const RunResult tight = run_general(make_jobs({1.0, 1.0}));
    c.require(tight.audit.back().ratio >= bound - 1e-9, "the {1,1} instance is not tight");
    return c;
}

// 2. Same for the sorted algorithm, with the three-job family reaching it.
Check criterion2() {
    Check c;
    const double bound = sorted_constants().ratio;
    Xoshiro256 rng(1002);
    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        std::vector<double> sizes = random_sizes(rng, 200, 1e-3, 1e3);
        std::sort(sizes.begin(), sizes.end(), [](double a, double b) { return a > b; });
        const auto jobs = make_jobs(sizes);
        SortedDual state;
        for (const Job& job : jobs) {
            state.step(job);
            const double ms =
                std::min(state.solution_a().max_load(), state.solution_b().max_load());
            c.require(ms / state.opt_normalized() <= bound + 1e-9,
                      "prefix ratio above bound in trial " + std::to_string(trial));
            if (!c.ok) break;
        }
        const SolutionSet set = state.snapshot();
        c.require(validate(set.solutions[0], jobs, true).ok() &&
                      validate(set.solutions[1], jobs, true).ok(),
                  "validator violation in trial " + std::to_string(trial));
    }
    SortedAlgorithm target;
    const AdversaryResult forced = adversary_prop3(target);
    c.require(forced.ratio >= bound - 1e-6, "the {1, 1, sqrt(6)-2} family does not force the bound");
    return c;
}

// 3. The per-step invariant blocks hold, with tight equality when the
//    optimum is the half-total.
Check criterion3() {
    Check c;
    const GeneralConstants& g = general_constants();
    const SortedConstants& s = sorted_constants();
    Xoshiro256 rng(1003);

    for (int trial = 0; trial < 2000 && c.ok; ++trial) {
        GeneralDual state;
        const std::vector<double> sizes = random_sizes(rng, 150, 1e-3, 1e3);
        for (size_t i = 0; i < sizes.size(); ++i) {
            state.step(Job{static_cast<int>(i) + 1, sizes[i]});
            const double w = state.total();
            const double opt = state.opt();
            const double a1 = state.solution_a().load(1);
            const double b1 = state.solution_b().load(1);
            const double phi2 = g.phi * g.phi;
            c.require(a1 >= w / g.phi - 1e-9 && a1 <= g.ratio * opt + 1e-9,
                      "general invariant on a1 failed");
            c.require(b1 >= 2.0 * w / phi2 - 1e-9 && b1 <= g.ratio * g.ratio * opt + 1e-9,
                      "general invariant on b1 failed");
            c.require(state.solution_a().load(2) <= w / phi2 + 1e-9,
                      "general invariant on a2 failed");
            c.require(state.solution_b().load(2) <= w / (phi2 * g.phi) + 1e-9,
                      "general invariant on b2 failed");
            if (std::abs(opt - w / 2.0) <= 1e-12 * std::max(1.0, w)) {
                c.require(std::abs(a1 - w / g.phi) <= 1e-9, "tight equality a1 = W/phi failed");
                c.require(std::abs(b1 - 2.0 * w / phi2) <= 1e-9,
                          "tight equality b1 = 2W/phi^2 failed");
            }
            if (!c.ok) break;
        }
    }

    for (int trial = 0; trial < 2000 && c.ok; ++trial) {
        std::vector<double> sizes = random_sizes(rng, 150, 1e-3, 1e3);
        std::sort(sizes.begin(), sizes.end(), [](double a, double b) { return a > b; });
        SortedDual state;
        for (size_t i = 0; i < sizes.size(); ++i) {
            state.step(Job{static_cast<int>(i) + 1, sizes[i]});
            if (state.count() < 2) continue;
            const double w = state.total_normalized();
            const double opt = state.opt_normalized();
            const double a1 = state.solution_a().load(1);
            const double b1 = state.solution_b().load(1);
            const double half_ratio = s.ratio / 2.0;
            if (state.mode() == SortedMode::FirstApproach) {
                c.require(a1 >= std::max(1.0, half_ratio * w) - 1e-9 &&
                              a1 <= s.ratio * opt + 1e-9,
                          "first-approach invariant failed");
            } else {
                c.require(a1 >= std::max(s.ratio, half_ratio * w) - 1e-9 &&
                              a1 <= s.ratio * opt + 1e-9,
                          "second-approach invariant on a1 failed");
                c.require(b1 >= std::max(s.ratio_b, 0.6 * w) - 1e-9 &&
                              b1 <= s.ratio_b * opt + 1e-9,
                          "second-approach invariant on b1 failed");
                c.require(state.solution_b().load(2) <= 0.4 * w + 1e-9,
                          "second-approach invariant on b2 failed");
            }
            c.require(state.solution_a().load(2) <= (1.0 - half_ratio) * w + 1e-9,
                      "invariant on a2 failed");
            if (!c.ok) break;
        }
    }
    return c;
}

// 4. The wrap-around construction at the optimum is valid and exact.
Check criterion4() {
    Check c;
    Xoshiro256 rng(1004);
    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        const auto jobs = make_jobs(random_sizes(rng, 200, 1e-3, 1e3));
        const double opt = opt_makespan(jobs);
        const Schedule s = mcnaughton(jobs, opt);
        c.require(validate(s, jobs, true).ok(), "schedule invalid in trial " + std::to_string(trial));
        c.require(std::abs(s.max_load() - opt) <= 1e-9,
                  "max load misses the optimum in trial " + std::to_string(trial));
    }
    return c;
}

// 5. The ladder meets its (1+delta) guarantee with exactly 9/delta^2
//    solutions.
Check criterion5() {
    Check c;
    Xoshiro256 rng(1005);
    const std::vector<std::pair<double, int>> cases{{1.0, 9}, {0.5, 36}, {1.0 / 3.0, 81}};
    for (const auto& [delta, expected_count] : cases) {
        c.require(Ladder::solution_count_for(delta) == expected_count,
                  "wrong solution count for delta");
        for (int trial = 0; trial < 1000 && c.ok; ++trial) {
            const std::vector<double> sizes = random_sizes(rng, 60, 1e-3, 1e3);
            Ladder ladder(sizes[0], delta);
            c.require(ladder.solution_count() == expected_count, "wrong live solution count");
            c.require(ladder.best().second <= (1.0 + delta) * ladder.opt() + 1e-9,
                      "guarantee failed after the first job");
            for (size_t i = 1; i < sizes.size(); ++i) {
                ladder.step(Job{static_cast<int>(i) + 1, sizes[i]});
                c.require(ladder.best().second <= (1.0 + delta) * ladder.opt() + 1e-9,
                          "guarantee failed mid-run");
                if (!c.ok) break;
            }
        }
    }
    return c;
}

// 6. The gap adversary meets its closed-form bounds against the general
//    algorithm replicated to M solutions and the truncated ladder.
Check criterion6() {
    Check c;
    for (int m = 2; m <= 8 && c.ok; ++m) {
        for (const bool sorted_variant : {false, true}) {
            const double bound =
                sorted_variant ? 1.0 + 1.0 / (6.0 * m + 5.0) : 1.0 + 1.0 / (4.0 * m + 3.0);
            {
                ReplicatedAlgorithm alg(std::make_unique<GeneralAlgorithm>(), m);
                const AdversaryResult res = adversary_prop1(alg, m, sorted_variant);
                c.require(res.ratio >= bound - 1e-9,
                          "replicated general below bound at M=" + std::to_string(m));
                if (sorted_variant)
                    c.require(res.jobs[2] < m + 1.0, "sorted variant emitted a large job");
            }
            {
                TruncatedAlgorithm alg(std::make_unique<LadderAlgorithm>(1.0), m);
                const AdversaryResult res = adversary_prop1(alg, m, sorted_variant);
                c.require(res.ratio >= bound - 1e-9,
                          "truncated ladder below bound at M=" + std::to_string(m));
                if (sorted_variant)
                    c.require(res.jobs[2] < m + 1.0, "sorted variant emitted a large job");
            }
        }
    }
    return c;
}

// 7. Sand at grain 1e-4 pins the general algorithm's ratio from both sides.
Check criterion7() {
    Check c;
    const double bound = general_constants().ratio;
    const double grain = 1e-4;
    GeneralAlgorithm alg;
    const AdversaryResult res = adversary_prop2(alg, grain);
    c.require(res.ratio >= bound - 10.0 * grain, "forced ratio too small");
    c.require(res.ratio <= bound + 1e-9, "forced ratio above the upper bound");
    return c;
}

// 8. The unit-job construction is exactly optimal for n = 1..50.
Check criterion8() {
    Check c;
    for (int n = 1; n <= 50 && c.ok; ++n) {
        const SolutionSet set = unit_jobs_dual(n);
        c.require(makespan(set) == std::max(1.0, n / 2.0),
                  "makespan not exact at n=" + std::to_string(n));
        const auto jobs = make_jobs(std::vector<double>(static_cast<size_t>(n), 1.0));
        for (const Schedule& s : set.solutions)
            c.require(validate(s, jobs, true).ok(), "invalid solution at n=" + std::to_string(n));
    }
    return c;
}

// 9. Identical CLI invocations produce byte-identical output.
Check criterion9() {
    Check c;
    {
        std::ostringstream out, err;
        const int code = cli_run({"run", "--alg", "general", "--workload", "uniform", "--n",
                                  "20", "--seed", "1", "--emit-schedule",
                                  "acceptance_gantt_input.jsonl"},
                                 out, err);
        c.require(code == 0, "schedule emission failed: " + err.str());
    }
    const std::vector<std::vector<std::string>> commands{
        {"gantt", "acceptance_gantt_input.jsonl"},
        {"validate", "acceptance_gantt_input.jsonl", "--strict"},
        {"run", "--alg", "general", "--workload", "log_uniform", "--n", "150", "--seed", "42"},
        {"run", "--alg", "sorted", "--workload", "sorted_uniform", "--n", "150", "--seed", "42"},
        {"run", "--alg", "ladder", "--workload", "uniform", "--n", "60", "--seed", "42",
         "--delta", "0.5"},
        {"adversary", "--prop", "2", "--alg", "general", "--grain", "0.001"},
        {"adversary", "--prop", "1", "--alg", "ladder", "--m", "5", "--sorted"},
        {"sweep", "--alg", "general,ladder,naive", "--family", "uniform,log_uniform", "--n",
         "20,40", "--seeds", "4"},
        {"sweep", "--alg", "sorted", "--family", "sorted_uniform", "--n", "30", "--seeds", "4"},
    };
    for (const auto& cmd : commands) {
        std::ostringstream out_a, err_a, out_b, err_b;
        const int code_a = cli_run(cmd, out_a, err_a);
        const int code_b = cli_run(cmd, out_b, err_b);
        c.require(code_a == code_b, "exit codes differ for " + cmd[0]);
        c.require(out_a.str() == out_b.str() && err_a.str() == err_b.str(),
                  "output differs for " + cmd[0]);
        c.require(code_a == 0, "command failed: " + cmd[0] + " -- " + err_a.str());
    }
    std::remove("acceptance_gantt_input.jsonl");
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_seconds; // 0 = no runtime requirement
        std::function<Check()> fn;
    };
    const std::vector<Criterion> criteria{
        {1, "general algorithm tight at sqrt(5)-1 over 10^4 random sequences", 30.0, criterion1},
        {2, "sorted algorithm tight at 6-2*sqrt(6) over 10^4 sorted sequences", 30.0, criterion2},
        {3, "per-step invariant blocks and tight equalities", 0.0, criterion3},
        {4, "wrap-around construction valid and exact on 10^4 inputs", 0.0, criterion4},
        {5, "ladder guarantee (1+delta) with 9, 36, 81 solutions", 0.0, criterion5},
        {6, "gap adversary bounds for M = 2..8, both variants", 0.0, criterion6},
        {7, "sand adversary pins the general ratio at grain 1e-4", 0.0, criterion7},
        {8, "unit-job construction exactly optimal for n = 1..50", 0.0, criterion8},
        {9, "CLI runs are byte-identical", 0.0, criterion9},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criterion.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0.0 && seconds > criterion.budget_seconds) {
            c.ok = false;
            c.detail = "runtime " + std::to_string(seconds) + "s over budget";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, seconds, c.ok ? "" : " -- ", c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures;
}
