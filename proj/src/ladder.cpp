#include "parsched/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"

namespace parsched {

namespace {

int reciprocal_steps(double delta) {
    if (!(delta > 0.0) || delta > 1.0 || !std::isfinite(delta))
        throw BadDeltaError("delta must be in (0, 1]");
    return static_cast<int>(std::ceil(1.0 / delta - 1e-9));
}

} // namespace

int Ladder::solution_count_for(double delta) {
    const int k = reciprocal_steps(delta);
    return 9 * k * k;
}

Ladder::Ladder(double p1, double delta) {
    if (!(p1 > 0.0)) throw NonPositiveSizeError("first job size must be > 0");
    const int k = reciprocal_steps(delta);
    delta_eff_ = 1.0 / k;
    eps_ = 1.0 / (3.0 * k);
    per_round_ = 9 * k * k;
    p1_ = p1;

    solutions_.resize(static_cast<size_t>(per_round_));
    for (int i = 0; i < per_round_; ++i) {
        solutions_[static_cast<size_t>(i)].power = i;
        solutions_[static_cast<size_t>(i)].cursor = McNaughtonCursor(length_of(i));
    }
    opt_.add(p1);
    const Job first{1, p1};
    for (TrackedSolution& sol : solutions_) {
        sol.window_opt.add(p1);
        for (const Piece& piece : sol.cursor.append(first)) sol.schedule.add_piece(piece);
    }
}

double Ladder::length_of(long long power) const {
    return p1_ * std::pow(1.0 + eps_, static_cast<double>(power));
}

void Ladder::step(const Job& job) {
    if (!(job.size > 0.0))
        throw NonPositiveSizeError("job " + std::to_string(job.index) + " has non-positive size");
    opt_.add(job.size);
    const double target = opt_.opt();
    const double tol = tolerance();
    last_promotion_rounds_ = 0;

    for (TrackedSolution& sol : solutions_) {
        if (length_of(sol.power) < target) {
            // close the open sub-solution; the rounds in between stay empty
            sol.window_start = sol.schedule.max_load();
            int rounds = 0;
            while (length_of(sol.power) < target) {
                sol.power += per_round_;
                ++rounds;
            }
            sol.cursor = McNaughtonCursor(length_of(sol.power));
            sol.window_opt = PrefixStats{};
            last_promotion_rounds_ = std::max(last_promotion_rounds_, rounds);
        }

        const double length = length_of(sol.power);
        sol.window_opt.add(job.size);
        if (sol.window_opt.opt() > length + tol)
            throw InvariantViolation("sub-solution window overfull");
        for (Piece piece : sol.cursor.append(job)) {
            piece.start += sol.window_start;
            piece.end += sol.window_start;
            sol.schedule.add_piece(piece);
        }
        if (sol.window_start > eps_ * length + tol * std::max(1.0, length))
            throw InvariantViolation("closed sub-solutions exceed eps*L");
    }
}

std::pair<int, double> Ladder::best() const {
    int best_index = 0;
    double best_value = solutions_.front().max_completion();
    for (size_t i = 1; i < solutions_.size(); ++i) {
        const double v = solutions_[i].max_completion();
        if (v < best_value) {
            best_value = v;
            best_index = static_cast<int>(i);
        }
    }
    return {best_index, best_value};
}

SolutionSet Ladder::snapshot() const {
    SolutionSet out;
    out.total_size = opt_.total();
    out.solutions.reserve(solutions_.size());
    for (const TrackedSolution& sol : solutions_) out.solutions.push_back(sol.schedule);
    return out;
}

LadderAlgorithm::LadderAlgorithm(double delta) : delta_(delta) {
    reciprocal_steps(delta); // validate eagerly
}

void LadderAlgorithm::step(const Job& job) {
    if (!ladder_)
        ladder_.emplace(job.size, delta_);
    else
        ladder_->step(job);
}

SolutionSet LadderAlgorithm::snapshot() const {
    if (ladder_) return ladder_->snapshot();
    SolutionSet out;
    out.solutions.resize(static_cast<size_t>(Ladder::solution_count_for(delta_)));
    return out;
}

} // namespace parsched
