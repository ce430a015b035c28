#ifndef PARSCHED_ONLINE_SORTED_HPP
#define PARSCHED_ONLINE_SORTED_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "parsched/audit.hpp"
#include "parsched/online.hpp"
#include "parsched/online_general.hpp"
#include "parsched/schedule.hpp"
#include "parsched/solution_set.hpp"

namespace parsched {

// Constants of the two-solution algorithm for non-increasing sizes.
// `ratio` = 6 - 2*sqrt(6) is the competitive ratio, `ratio_b` = 3(sqrt(6)-2)
// is solution B's bound. alpha = sqrt(6)-2 satisfies alpha^2 + 4*alpha = 2;
// beta = 1 - sqrt(6)/3 = alpha/(2+alpha) only names the case-1 size
// threshold and plays no further role.
struct SortedConstants {
    double alpha;
    double ratio;
    double ratio_b;
    double beta;
};

const SortedConstants& sorted_constants();

enum class SortedMode { Undecided, FirstApproach, SecondApproach };

// Online state of the two-solution algorithm for jobs arriving sorted by
// non-increasing size. Input is normalized so the first job has size 1;
// the snapshot rescales back. With a small second job (p2 <= 0.4) a single
// solution suffices and B mirrors A; otherwise both solutions are used and
// swap roles on medium jobs, as in the arbitrary-order algorithm.
class SortedDual {
public:
    // Returns the audit tag of the rule applied. Throws UnsortedInputError
    // if the job exceeds its predecessor beyond tolerance.
    std::string step(const Job& job);

    SortedMode mode() const { return mode_; }
    double scale() const { return scale_; }
    int count() const { return count_; }

    // normalized views (first job = 1)
    double total_normalized() const { return total_; }
    double opt_normalized() const;
    const Schedule& solution_a() const { return sol_[static_cast<size_t>(role_a_)]; }
    const Schedule& solution_b() const { return sol_[static_cast<size_t>(1 - role_a_)]; }

    // rescaled to the original units
    SolutionSet snapshot() const;

private:
    void first_approach_assign(const Job& job, double q, double w);
    void keep_ratio(Schedule& s, const Job& job, double q, double m2_target, double m1_target);
    void check_invariants() const;

    SortedMode mode_ = SortedMode::Undecided;
    Schedule sol_[2];
    int role_a_ = 0;
    double total_ = 0.0;  // normalized
    double p_prev_ = 0.0; // normalized previous size
    double scale_ = 1.0;
    int count_ = 0;
};

// Folds SortedDual over the sequence; audit values are reported in the
// original units. Throws UnsortedInputError on an increasing step.
RunResult run_sorted(const std::vector<Job>& jobs);

class SortedAlgorithm : public OnlineAlgorithm {
public:
    void step(const Job& job) override { last_tag_ = state_.step(job); }
    SolutionSet snapshot() const override { return state_.snapshot(); }
    double current_makespan() const override {
        return std::min(state_.solution_a().max_load(), state_.solution_b().max_load()) *
               state_.scale();
    }
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<SortedAlgorithm>(*this);
    }
    const SortedDual& state() const { return state_; }
    const std::string& last_tag() const { return last_tag_; }

private:
    SortedDual state_;
    std::string last_tag_;
};

} // namespace parsched

#endif
