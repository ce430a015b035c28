#ifndef PARSCHED_LADDER_HPP
#define PARSCHED_LADDER_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "parsched/offline.hpp"
#include "parsched/online.hpp"
#include "parsched/schedule.hpp"
#include "parsched/solution_set.hpp"

namespace parsched {

// The (1+delta)-competitive construction: 9/delta^2 parallel solutions whose
// length budgets are p1*(1+eps)^i for consecutive integer powers i, with
// eps = delta/3. A solution whose length falls below the current offline
// optimum is promoted by the factor (1+eps)^(1/eps^2) and starts a fresh
// sub-solution at the end of the previous one; closed sub-solutions occupy
// less than eps*L in total. Each job is packed into every solution's open
// sub-solution with the wrap-around rule. Sub-solution boundaries may leave
// machine 2 idle, so validation for this module runs in relaxed mode.
class Ladder {
public:
    struct TrackedSolution {
        long long power = 0;
        double window_start = 0.0; // total span of closed sub-solutions
        McNaughtonCursor cursor{0.0};
        PrefixStats window_opt;
        Schedule schedule; // global-time pieces across all sub-solutions

        double max_completion() const { return schedule.max_load(); }
    };

    // Creates the solutions and assigns job 1 optimally in the power-0 one.
    // Arbitrary delta in (0,1] is rounded down to 1/ceil(1/delta) so the
    // per-round promotion exponent 1/eps^2 is an integer.
    Ladder(double p1, double delta);

    void step(const Job& job);

    // (index, value) of the minimum max-completion-time solution; ties go
    // to the lowest index.
    std::pair<int, double> best() const;

    SolutionSet snapshot() const;

    int solution_count() const { return static_cast<int>(solutions_.size()); }
    double epsilon() const { return eps_; }
    double delta_effective() const { return delta_eff_; }
    double opt() const { return opt_.opt(); }
    int count() const { return opt_.count(); }
    int last_promotion_rounds() const { return last_promotion_rounds_; }
    const std::vector<TrackedSolution>& solutions() const { return solutions_; }

    static int solution_count_for(double delta);

private:
    double length_of(long long power) const;

    double p1_ = 0.0;
    double eps_ = 0.0;
    double delta_eff_ = 0.0;
    int per_round_ = 0; // promotion exponent 1/eps^2, also the solution count
    PrefixStats opt_;
    std::vector<TrackedSolution> solutions_;
    int last_promotion_rounds_ = 0;
};

class LadderAlgorithm : public OnlineAlgorithm {
public:
    explicit LadderAlgorithm(double delta);
    void step(const Job& job) override;
    SolutionSet snapshot() const override;
    double current_makespan() const override { return ladder_ ? ladder_->best().second : 0.0; }
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<LadderAlgorithm>(*this);
    }
    const Ladder* ladder() const { return ladder_ ? &*ladder_ : nullptr; }

private:
    double delta_;
    std::optional<Ladder> ladder_;
};

} // namespace parsched

#endif
