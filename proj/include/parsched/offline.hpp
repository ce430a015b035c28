#ifndef PARSCHED_OFFLINE_HPP
#define PARSCHED_OFFLINE_HPP

#include <algorithm>
#include <vector>

#include "parsched/job.hpp"
#include "parsched/schedule.hpp"

namespace parsched {

// Running prefix statistics: total size, largest size and the offline
// optimum max(W/2, p_max) for two identical machines.
class PrefixStats {
public:
    void add(double size) {
        total_ += size;
        if (size > p_max_) p_max_ = size;
        ++count_;
    }
    double total() const { return total_; }
    double p_max() const { return p_max_; }
    int count() const { return count_; }
    double opt() const { return std::max(total_ / 2.0, p_max_); }

private:
    double total_ = 0.0;
    double p_max_ = 0.0;
    int count_ = 0;
};

// Optimal offline makespan on two identical machines; 0 for the empty
// sequence. Throws NonPositiveSizeError.
double opt_makespan(const std::vector<Job>& jobs);

// Wrap-around packer: fills machine 1 left to right from 0 up to the
// capacity, cuts the crossing job at the capacity and continues its
// remainder on machine 2 from 0. Positions derive from one cumulative-work
// chain so the machine-2 fill equals (total - capacity) without independent
// rounding drift. At most one job is ever cut.
class McNaughtonCursor {
public:
    explicit McNaughtonCursor(double capacity) : capacity_(capacity) {}

    // Local-time pieces for one job (one piece, or two when the job wraps).
    // Throws InfeasibleError if the job cannot fit below the capacity on
    // machine 2 either.
    std::vector<Piece> append(const Job& job);

    double capacity() const { return capacity_; }
    double fill() const { return fill_; }

private:
    double capacity_;
    double fill_ = 0.0; // cumulative size of appended jobs
    int machine_ = 1;
};

// McNaughton's optimal construction: a valid complete schedule with max
// load <= T; max load == T whenever W/2 >= p_max and T is the optimum.
// Throws InfeasibleError if T < opt_makespan(jobs) - tolerance.
Schedule mcnaughton(const std::vector<Job>& jobs, double T);

} // namespace parsched

#endif
