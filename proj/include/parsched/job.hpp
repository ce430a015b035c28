#ifndef PARSCHED_JOB_HPP
#define PARSCHED_JOB_HPP

#include <vector>

namespace parsched {

// A work item. Indices are 1-based arrival order; sizes are abstract time
// units and must be positive.
struct Job {
    int index = 0;
    double size = 0.0;
};

// Builds a job sequence with consecutive indices starting at 1.
// Throws NonPositiveSizeError if any size is <= 0.
std::vector<Job> make_jobs(const std::vector<double>& sizes);

double total_size(const std::vector<Job>& jobs);

} // namespace parsched

#endif
