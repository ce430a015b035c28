#ifndef PARSCHED_ADVERSARY_HPP
#define PARSCHED_ADVERSARY_HPP

#include <vector>

#include "parsched/online.hpp"
#include "parsched/solution_set.hpp"

namespace parsched {

// Busy-time measures of one solution as observed by an adversary.
struct SolutionProfile {
    double active = 0.0; // time at least one machine is busy
    double dual = 0.0;   // time both machines are busy
};

// Measures every solution by sweep-line over its piece endpoints. Throws
// ProfileError if a solution is incomplete or schedules with idle-time
// accounting that breaks active + dual = W.
std::vector<SolutionProfile> profile_solutions(const SolutionSet& set,
                                               const std::vector<Job>& jobs);

struct AdversaryResult {
    std::vector<double> jobs;          // the emitted input sequence
    double ratio = 0.0;                // worst prefix ratio actually forced
    std::vector<double> prefix_ratios; // ratio after each emitted prefix
    double smaller_active = 0.0;       // min over solutions of busy time at the
                                       // observation point (sand/two-job prefix)
};

// Gap construction against any M-solution algorithm: two jobs of size M+1,
// then a third job sized to miss every solution's dual-occupancy value.
// Forces ratio >= 1 + 1/(4M+3); the sorted variant uses a half-size gap
// threshold, keeps the input non-increasing and forces >= 1 + 1/(6M+5).
AdversaryResult adversary_prop1(OnlineAlgorithm& alg, int num_solutions, bool sorted_variant);

// Sand of total size 1, then a job of size alpha = (sqrt(5)-1)/2, then
// optionally one of size 1+alpha. Continuations are evaluated on forked
// copies; the returned sequence stops at the prefix that forces the most.
AdversaryResult adversary_prop2(OnlineAlgorithm& alg, double grain);

// Two unit jobs, then whichever of {1, sqrt(6)-2} forces the larger ratio.
// The input stays non-increasing, so sorted-input algorithms are fair game.
AdversaryResult adversary_prop3(OnlineAlgorithm& alg);

} // namespace parsched

#endif
