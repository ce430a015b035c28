#ifndef PARSCHED_ONLINE_GENERAL_HPP
#define PARSCHED_ONLINE_GENERAL_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "parsched/audit.hpp"
#include "parsched/online.hpp"
#include "parsched/schedule.hpp"
#include "parsched/solution_set.hpp"

namespace parsched {

// Constants of the two-solution algorithm for arbitrary inputs. `ratio` is
// the competitive ratio sqrt(5)-1; phi is the golden ratio and alpha = 1/phi.
struct GeneralConstants {
    double phi;
    double alpha;
    double ratio;
};

const GeneralConstants& general_constants();

// Online state of the two-solution algorithm for arbitrary job sizes.
// Solution A is kept balanced at a machine-load ratio of phi and carries the
// makespan guarantee; solution B is imbalanced at ratio 2*phi. A large
// enough job swaps the roles, which is a relabeling only.
//
// After every step the invariants hold:
//   W/phi       <= a1 <= ratio   * opt,  a2 <= W/phi^2
//   2*W/phi^2   <= b1 <= ratio^2 * opt,  b2 <= W/phi^3
// where a1,a2 / b1,b2 are the machine loads of A / B. A violation throws
// InvariantViolation (an implementation bug, never a legal input).
class GeneralDual {
public:
    GeneralDual();

    // Assigns the job in both solutions; returns the case taken (1..3).
    int step(const Job& job);

    const Schedule& solution_a() const { return sol_[static_cast<size_t>(role_a_)]; }
    const Schedule& solution_b() const { return sol_[static_cast<size_t>(1 - role_a_)]; }
    double total() const { return total_; }
    double p_max() const { return p_max_; }
    double opt() const;
    int count() const { return count_; }

    SolutionSet snapshot() const;

private:
    void cross_assign(double w, int job_index);
    void keep_ratio(Schedule& s, const Job& job, double m2_target, double m1_target);
    void check_invariants() const;

    Schedule sol_[2];
    int role_a_ = 0;
    double total_ = 0.0;
    double p_max_ = 0.0;
    int count_ = 0;
};

struct RunResult {
    SolutionSet set;
    std::vector<AuditRecord> audit;
};

// Folds GeneralDual over the sequence, recording one audit row per prefix.
// Final schedules are validated in strict no-idle mode.
RunResult run_general(const std::vector<Job>& jobs);

// The optimal two-solution construction for n unit jobs: one round-robin
// solution and one that preempts the second job ([1,1.5) on machine 1 and
// [0,0.5) on machine 2) before round-robin resumes. Makespan is exactly
// max(1, n/2) for n >= 1.
SolutionSet unit_jobs_dual(int n);

class GeneralAlgorithm : public OnlineAlgorithm {
public:
    void step(const Job& job) override { last_case_ = state_.step(job); }
    SolutionSet snapshot() const override { return state_.snapshot(); }
    double current_makespan() const override {
        return std::min(state_.solution_a().max_load(), state_.solution_b().max_load());
    }
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<GeneralAlgorithm>(*this);
    }
    const GeneralDual& state() const { return state_; }
    int last_case() const { return last_case_; }

private:
    GeneralDual state_;
    int last_case_ = 0;
};

} // namespace parsched

#endif
