#include "parsched/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"
#include "parsched/offline.hpp"
#include "parsched/online_general.hpp"
#include "parsched/online_sorted.hpp"

namespace parsched {

std::vector<SolutionProfile> profile_solutions(const SolutionSet& set,
                                               const std::vector<Job>& jobs) {
    const double w = total_size(jobs);
    const double tol = tolerance() * std::max(1.0, w);
    std::vector<SolutionProfile> out;
    out.reserve(set.solutions.size());
    for (size_t i = 0; i < set.solutions.size(); ++i) {
        const Schedule& s = set.solutions[i];
        for (const Job& job : jobs)
            if (std::abs(s.assigned(job.index) - job.size) > tol)
                throw ProfileError("solution " + std::to_string(i) + " misses job " +
                                   std::to_string(job.index));
        const Occupancy occ = occupancy(s);
        if (std::abs(occ.active + occ.dual - w) > tol)
            throw ProfileError("solution " + std::to_string(i) +
                               " breaks active + dual = W accounting");
        out.push_back(SolutionProfile{occ.active, occ.dual});
    }
    return out;
}

namespace {

// Drives one algorithm, tracking emitted jobs, prefix optima and ratios.
struct Driver {
    OnlineAlgorithm& alg;
    std::vector<Job> fed;
    PrefixStats opt;
    std::vector<double> ratios;

    explicit Driver(OnlineAlgorithm& a) : alg(a) {}

    void feed(double size) {
        const Job job{static_cast<int>(fed.size()) + 1, size};
        fed.push_back(job);
        alg.step(job);
        opt.add(size);
        ratios.push_back(alg.current_makespan() / opt.opt());
    }

    std::vector<double> sizes() const {
        std::vector<double> out;
        out.reserve(fed.size());
        for (const Job& job : fed) out.push_back(job.size);
        return out;
    }

    double worst() const { return *std::max_element(ratios.begin(), ratios.end()); }

    // smallest per-solution active time right now; the lower-bound proofs
    // branch on this quantity, so it is recorded with the result
    double smaller_active() const {
        const SolutionSet snap = alg.snapshot();
        double smallest = -1.0;
        for (const Schedule& s : snap.solutions) {
            const double active = occupancy(s).active;
            if (smallest < 0.0 || active < smallest) smallest = active;
        }
        return std::max(smallest, 0.0);
    }
};

} // namespace

AdversaryResult adversary_prop1(OnlineAlgorithm& alg, int num_solutions, bool sorted_variant) {
    if (num_solutions < 2) throw std::invalid_argument("need at least two solutions");
    const double big = static_cast<double>(num_solutions) + 1.0;

    Driver drv(alg);
    drv.feed(big);
    drv.feed(big);

    const SolutionSet snap = alg.snapshot();
    if (static_cast<int>(snap.solutions.size()) != num_solutions)
        throw ProfileError("expected " + std::to_string(num_solutions) + " solutions, got " +
                           std::to_string(snap.solutions.size()));
    const std::vector<SolutionProfile> profiles = profile_solutions(snap, drv.fed);

    // sorted dual-occupancy values padded with 0 and M+1
    std::vector<double> b;
    b.push_back(0.0);
    for (const SolutionProfile& p : profiles) b.push_back(p.dual);
    b.push_back(big);
    std::sort(b.begin(), b.end());

    const double alpha = sorted_variant ? 0.5 : 1.0;
    int gap_at = -1;
    for (int j = 0; j <= num_solutions; ++j)
        if (b[static_cast<size_t>(j) + 1] - b[static_cast<size_t>(j)] >= alpha - 1e-12) gap_at = j;
    if (gap_at < 0) throw InvariantViolation("pigeonhole gap missing");

    const double third = 2.0 * big - 2.0 * b[static_cast<size_t>(gap_at) + 1] + alpha;
    if (!(third > 0.0)) throw InvariantViolation("adversary emitted a non-positive job");
    drv.feed(third);

    return AdversaryResult{drv.sizes(), drv.worst(), drv.ratios};
}

AdversaryResult adversary_prop2(OnlineAlgorithm& alg, double grain) {
    if (!(grain > 0.0) || grain > 0.01)
        throw std::invalid_argument("grain must be in (0, 0.01]");
    const int n = static_cast<int>(std::ceil(1.0 / grain));
    const double g = 1.0 / n;

    Driver drv(alg);
    double fed_sum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        drv.feed(g);
        fed_sum += g;
    }
    drv.feed(1.0 - fed_sum); // the last grain lands the total at exactly 1
    const double sand_ratio = drv.ratios.back();
    const double t1 = drv.smaller_active();

    const double alpha = general_constants().alpha;
    drv.feed(alpha);
    const double alpha_ratio = drv.ratios.back();

    // fork to decide between stopping here and continuing with 1+alpha
    const std::unique_ptr<OnlineAlgorithm> fork = alg.clone();
    const Job phi_job{static_cast<int>(drv.fed.size()) + 1, 1.0 + alpha};
    fork->step(phi_job);
    const double phi_ratio = fork->current_makespan() / (1.0 + alpha);

    if (phi_ratio > std::max(sand_ratio, alpha_ratio)) drv.feed(phi_job.size);
    return AdversaryResult{drv.sizes(), drv.worst(), drv.ratios, t1};
}

AdversaryResult adversary_prop3(OnlineAlgorithm& alg) {
    Driver drv(alg);
    drv.feed(1.0);
    drv.feed(1.0);
    const double t1 = drv.smaller_active();

    const double alpha = sorted_constants().alpha;
    double best_third = 1.0;
    double best_ratio = -1.0;
    for (const double third : {1.0, alpha}) {
        const std::unique_ptr<OnlineAlgorithm> fork = alg.clone();
        const Job job{3, third};
        fork->step(job);
        const double opt3 = std::max((2.0 + third) / 2.0, 1.0);
        const double r = fork->current_makespan() / opt3;
        if (r > best_ratio) {
            best_ratio = r;
            best_third = third;
        }
    }
    drv.feed(best_third);
    return AdversaryResult{drv.sizes(), drv.worst(), drv.ratios, t1};
}

} // namespace parsched
