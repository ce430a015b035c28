#ifndef PARSCHED_SOLUTION_SET_HPP
#define PARSCHED_SOLUTION_SET_HPP

#include <vector>

#include "parsched/schedule.hpp"

namespace parsched {

// The parallel solutions an online algorithm maintains. All solutions hold
// the same job set; the output makespan is the minimum over solutions of
// the maximum machine completion time.
struct SolutionSet {
    std::vector<Schedule> solutions;
    double total_size = 0.0;
};

// min over solutions of max machine load. Throws EmptySetError when the
// set holds no solution.
double makespan(const SolutionSet& set);

} // namespace parsched

#endif
