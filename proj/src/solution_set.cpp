#include "parsched/solution_set.hpp"

#include <algorithm>

#include "parsched/errors.hpp"

namespace parsched {

double makespan(const SolutionSet& set) {
    if (set.solutions.empty()) throw EmptySetError("solution set is empty");
    double best = set.solutions.front().max_load();
    for (const Schedule& s : set.solutions) best = std::min(best, s.max_load());
    return best;
}

} // namespace parsched
