#include "parsched/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"

namespace parsched {

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::MachineOverlap: return "machine_overlap";
    case ViolationKind::SelfParallel: return "self_parallel";
    case ViolationKind::IncompleteAssignment: return "incomplete_assignment";
    case ViolationKind::IdleTime: return "idle_time";
    case ViolationKind::BadPiece: return "bad_piece";
    }
    return "unknown";
}

namespace {

std::string piece_str(const Piece& p) {
    std::ostringstream os;
    os << "job " << p.job << " on machine " << p.machine << " [" << p.start << ", " << p.end << ")";
    return os.str();
}

} // namespace

bool Schedule::insert_disjoint(std::vector<Interval>& intervals, double start, double end) {
    const double tol = tolerance();
    auto it = std::lower_bound(intervals.begin(), intervals.end(), start,
                               [](const Interval& iv, double s) { return iv.start < s; });
    if (it != intervals.begin()) {
        auto prev = std::prev(it);
        if (prev->end > start + tol) return false;
    }
    if (it != intervals.end() && it->start < end - tol) return false;
    intervals.insert(it, Interval{start, end});
    return true;
}

void Schedule::add_piece(const Piece& piece) {
    if (piece.machine != 1 && piece.machine != 2)
        throw std::invalid_argument("piece machine must be 1 or 2");
    if (piece.job < 1) throw std::invalid_argument("piece job index must be >= 1");
    if (!(piece.end > piece.start)) throw std::invalid_argument("piece must have positive length");
    if (piece.length() < min_piece_length) return; // residual at a case boundary

    auto& machine_ivs = by_machine_[static_cast<size_t>(piece.machine - 1)];
    if (!insert_disjoint(machine_ivs, piece.start, piece.end))
        throw OverlapError("machine overlap: " + piece_str(piece));

    const size_t j = static_cast<size_t>(piece.job - 1);
    if (by_job_.size() <= j) by_job_.resize(j + 1);
    if (!insert_disjoint(by_job_[j], piece.start, piece.end)) {
        // roll back the machine insertion
        auto it = std::find_if(machine_ivs.begin(), machine_ivs.end(), [&](const Interval& iv) {
            return iv.start == piece.start && iv.end == piece.end;
        });
        machine_ivs.erase(it);
        throw OverlapError("job runs in parallel with itself: " + piece_str(piece));
    }

    pieces_.push_back(piece);
    auto& load = load_[static_cast<size_t>(piece.machine - 1)];
    load = std::max(load, piece.end);
    if (assigned_.size() <= j) assigned_.resize(j + 1, 0.0);
    assigned_[j] += piece.length();
    assigned_total_ += piece.length();
}

double Schedule::assigned(int job_index) const {
    const size_t j = static_cast<size_t>(job_index - 1);
    if (job_index < 1 || j >= assigned_.size()) return 0.0;
    return assigned_[j];
}

Schedule Schedule::from_pieces_unchecked(const std::vector<Piece>& pieces) {
    // untrusted input: cap the per-job table so an absurd index cannot force
    // a giant allocation; the validator flags such pieces regardless
    size_t max_job = 0;
    for (const Piece& p : pieces)
        if (p.job >= 1 && static_cast<size_t>(p.job) <= pieces.size() + 1)
            max_job = std::max(max_job, static_cast<size_t>(p.job));

    Schedule s;
    for (const Piece& p : pieces) {
        s.pieces_.push_back(p);
        if (p.machine == 1 || p.machine == 2) {
            auto& load = s.load_[static_cast<size_t>(p.machine - 1)];
            load = std::max(load, p.end);
        }
        if (p.job >= 1 && static_cast<size_t>(p.job) <= max_job) {
            const size_t j = static_cast<size_t>(p.job - 1);
            if (s.assigned_.size() <= j) s.assigned_.resize(j + 1, 0.0);
            s.assigned_[j] += p.length();
            s.assigned_total_ += p.length();
        }
    }
    return s;
}

namespace {

struct MachineIntervals {
    std::vector<std::pair<double, double>> ivs; // sorted, coalesced
};

// Sorted union of a machine's piece intervals, coalescing abutments.
MachineIntervals merged_intervals(const Schedule& schedule, int machine) {
    std::vector<std::pair<double, double>> ivs;
    for (const Piece& p : schedule.pieces())
        if (p.machine == machine) ivs.emplace_back(p.start, p.end);
    std::sort(ivs.begin(), ivs.end());
    MachineIntervals out;
    for (const auto& iv : ivs) {
        if (!out.ivs.empty() && iv.first <= out.ivs.back().second) {
            out.ivs.back().second = std::max(out.ivs.back().second, iv.second);
        } else {
            out.ivs.push_back(iv);
        }
    }
    return out;
}

double measure(const std::vector<std::pair<double, double>>& ivs) {
    double m = 0.0;
    for (const auto& iv : ivs) m += iv.second - iv.first;
    return m;
}

} // namespace

Occupancy occupancy(const Schedule& schedule) {
    const MachineIntervals m1 = merged_intervals(schedule, 1);
    const MachineIntervals m2 = merged_intervals(schedule, 2);

    // intersection of the two sorted interval lists
    double dual = 0.0;
    size_t i = 0, j = 0;
    while (i < m1.ivs.size() && j < m2.ivs.size()) {
        const double lo = std::max(m1.ivs[i].first, m2.ivs[j].first);
        const double hi = std::min(m1.ivs[i].second, m2.ivs[j].second);
        if (hi > lo) dual += hi - lo;
        if (m1.ivs[i].second < m2.ivs[j].second)
            ++i;
        else
            ++j;
    }
    const double active = measure(m1.ivs) + measure(m2.ivs) - dual;
    return Occupancy{active, dual};
}

double dual_occupancy(const Schedule& schedule) { return occupancy(schedule).dual; }

ValidationReport validate(const Schedule& schedule, const std::vector<Job>& jobs,
                          bool strict_no_idle) {
    ValidationReport report;
    const double tol = tolerance();
    auto flag = [&](ViolationKind kind, const std::string& detail) {
        report.violations.push_back(Violation{kind, detail});
    };

    const int n = static_cast<int>(jobs.size());
    for (const Piece& p : schedule.pieces()) {
        if (p.machine != 1 && p.machine != 2)
            flag(ViolationKind::BadPiece, "bad machine in " + piece_str(p));
        if (!(p.end > p.start)) flag(ViolationKind::BadPiece, "empty interval in " + piece_str(p));
        if (p.job < 1 || p.job > n)
            flag(ViolationKind::BadPiece, "unknown job in " + piece_str(p));
    }

    // per machine: pairwise-disjoint pieces, and no gap in [0, load) if strict
    for (int machine = 1; machine <= 2; ++machine) {
        std::vector<Piece> on;
        for (const Piece& p : schedule.pieces())
            if (p.machine == machine) on.push_back(p);
        std::sort(on.begin(), on.end(),
                  [](const Piece& a, const Piece& b) { return a.start < b.start; });
        double cursor = 0.0;
        for (const Piece& p : on) {
            if (p.start > cursor + tol && strict_no_idle) {
                std::ostringstream os;
                os << "machine " << machine << " idle during [" << cursor << ", " << p.start << ")";
                flag(ViolationKind::IdleTime, os.str());
            }
            if (p.start < cursor - tol) flag(ViolationKind::MachineOverlap, piece_str(p));
            cursor = std::max(cursor, p.end);
        }
    }

    // per job: pieces on the two machines must be pairwise disjoint in time
    std::vector<std::vector<Piece>> per_job(jobs.size());
    for (const Piece& p : schedule.pieces())
        if (p.job >= 1 && p.job <= n) per_job[static_cast<size_t>(p.job - 1)].push_back(p);
    for (auto& list : per_job) {
        std::sort(list.begin(), list.end(),
                  [](const Piece& a, const Piece& b) { return a.start < b.start; });
        double busy_until = -1.0;
        for (const Piece& p : list) {
            if (busy_until >= 0.0 && p.start < busy_until - tol)
                flag(ViolationKind::SelfParallel, piece_str(p));
            busy_until = std::max(busy_until, p.end);
        }
    }

    for (const Job& job : jobs) {
        const double got = schedule.assigned(job.index);
        if (std::abs(got - job.size) > tol) {
            std::ostringstream os;
            os << "job " << job.index << " assigned " << got << " of " << job.size;
            flag(ViolationKind::IncompleteAssignment, os.str());
        }
    }
    return report;
}

} // namespace parsched
