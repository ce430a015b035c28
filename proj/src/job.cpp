#include "parsched/job.hpp"

#include <string>

#include "parsched/errors.hpp"

namespace parsched {

std::vector<Job> make_jobs(const std::vector<double>& sizes) {
    std::vector<Job> jobs;
    jobs.reserve(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (!(sizes[i] > 0.0)) {
            throw NonPositiveSizeError("job " + std::to_string(i + 1) + " has size " +
                                       std::to_string(sizes[i]) + ", must be > 0");
        }
        jobs.push_back(Job{static_cast<int>(i) + 1, sizes[i]});
    }
    return jobs;
}

double total_size(const std::vector<Job>& jobs) {
    double w = 0.0;
    for (const Job& job : jobs) w += job.size;
    return w;
}

} // namespace parsched
