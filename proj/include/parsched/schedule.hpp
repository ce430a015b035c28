#ifndef PARSCHED_SCHEDULE_HPP
#define PARSCHED_SCHEDULE_HPP

#include <array>
#include <string>
#include <vector>

#include "parsched/job.hpp"

namespace parsched {

// A half-open time interval [start, end) on one machine, assigned to one job.
struct Piece {
    int machine = 1; // 1 or 2
    int job = 0;     // job index, 1-based
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
};

enum class ViolationKind {
    MachineOverlap,       // two pieces on one machine overlap in time
    SelfParallel,         // one job runs on both machines at once
    IncompleteAssignment, // assigned total differs from the job size
    IdleTime,             // gap inside [0, load) on a machine (strict mode)
    BadPiece,             // malformed piece (external input)
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

std::string to_string(ViolationKind kind);

// Busy-time measures of one schedule: `active` is the measure of times when
// at least one machine runs a piece, `dual` when both do.
struct Occupancy {
    double active = 0.0;
    double dual = 0.0;
};

// One solution: per-machine piece lists plus per-job assigned totals. Loads
// are the supremum piece end per machine, so targets written by the online
// algorithms are preserved bit-exactly instead of re-accumulated.
class Schedule {
public:
    // Appends a piece. Pieces shorter than min_piece_length are dropped
    // silently. Throws OverlapError if the piece overlaps an existing piece
    // on the same machine or another piece of the same job (beyond
    // tolerance), std::invalid_argument on end <= start or a bad machine.
    void add_piece(const Piece& piece);

    double load(int machine) const { return load_[static_cast<size_t>(machine - 1)]; }
    double max_load() const { return load_[0] > load_[1] ? load_[0] : load_[1]; }
    double assigned(int job_index) const;
    double assigned_total() const { return assigned_total_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    // Wraps raw pieces without the add_piece checks, for loading external
    // (possibly defective) schedules that validate() will then inspect.
    // Schedules built this way are for inspection, not further assignment.
    static Schedule from_pieces_unchecked(const std::vector<Piece>& pieces);

private:
    struct Interval {
        double start;
        double end;
    };

    static bool insert_disjoint(std::vector<Interval>& intervals, double start, double end);

    std::vector<Piece> pieces_;
    std::array<std::vector<Interval>, 2> by_machine_;
    std::vector<std::vector<Interval>> by_job_; // index 0 holds job 1
    std::array<double, 2> load_{0.0, 0.0};
    std::vector<double> assigned_;
    double assigned_total_ = 0.0;
};

// Lists every violation of the schedule against the presented jobs.
// Violations are data, not exceptions. With strict_no_idle, any gap in
// [0, load) on either machine is reported too.
ValidationReport validate(const Schedule& schedule, const std::vector<Job>& jobs,
                          bool strict_no_idle);

// Exact sweep over piece endpoints.
Occupancy occupancy(const Schedule& schedule);

// Total measure of times at which both machines run a piece.
double dual_occupancy(const Schedule& schedule);

} // namespace parsched

#endif
