#include "parsched/offline.hpp"

#include <string>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"

namespace parsched {

double opt_makespan(const std::vector<Job>& jobs) {
    PrefixStats stats;
    for (const Job& job : jobs) {
        if (!(job.size > 0.0))
            throw NonPositiveSizeError("job " + std::to_string(job.index) + " has non-positive size");
        stats.add(job.size);
    }
    return jobs.empty() ? 0.0 : stats.opt();
}

std::vector<Piece> McNaughtonCursor::append(const Job& job) {
    std::vector<Piece> out;
    const double prev = fill_;
    fill_ += job.size;
    if (machine_ == 1) {
        if (fill_ <= capacity_) {
            out.push_back(Piece{1, job.index, prev, fill_});
            return out;
        }
        // cut at the capacity, continue on machine 2 from 0
        if (capacity_ > prev) out.push_back(Piece{1, job.index, prev, capacity_});
        machine_ = 2;
        if (fill_ - capacity_ > capacity_ + tolerance())
            throw InfeasibleError("job " + std::to_string(job.index) + " overfills both machines");
        out.push_back(Piece{2, job.index, 0.0, fill_ - capacity_});
        return out;
    }
    if (fill_ - capacity_ > capacity_ + tolerance())
        throw InfeasibleError("job " + std::to_string(job.index) + " overfills machine 2");
    out.push_back(Piece{2, job.index, prev - capacity_, fill_ - capacity_});
    return out;
}

Schedule mcnaughton(const std::vector<Job>& jobs, double T) {
    const double opt = opt_makespan(jobs);
    if (T < opt - tolerance())
        throw InfeasibleError("target " + std::to_string(T) + " below optimum " +
                              std::to_string(opt));
    Schedule schedule;
    McNaughtonCursor cursor(T);
    for (const Job& job : jobs)
        for (const Piece& piece : cursor.append(job)) schedule.add_piece(piece);
    return schedule;
}

} // namespace parsched
