#include "parsched/online_sorted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"

namespace parsched {

const SortedConstants& sorted_constants() {
    static const SortedConstants k = [] {
        SortedConstants c;
        const double root6 = std::sqrt(6.0);
        c.alpha = root6 - 2.0;
        c.ratio = 6.0 - 2.0 * root6;
        c.ratio_b = 3.0 * (root6 - 2.0);
        c.beta = 1.0 - root6 / 3.0;
        return c;
    }();
    return k;
}

namespace {

void fill_to(Schedule& s, int machine, double target, int job_index) {
    const double start = s.load(machine);
    const double len = target - start;
    if (len < min_piece_length) {
        if (len < -tolerance()) {
            std::ostringstream os;
            os << "fill target " << target << " below load " << start << " on machine " << machine;
            throw InvariantViolation(os.str());
        }
        return;
    }
    s.add_piece(Piece{machine, job_index, start, target});
}

} // namespace

double SortedDual::opt_normalized() const {
    // the first job (size 1 after normalization) is the largest
    return std::max(total_ / 2.0, count_ > 0 ? 1.0 : 0.0);
}

void SortedDual::keep_ratio(Schedule& s, const Job& job, double q, double m2_target,
                            double m1_target) {
    const double m2 = s.load(2);
    if (m2 + q <= m2_target) {
        s.add_piece(Piece{2, job.index, m2, m2 + q});
    } else {
        fill_to(s, 2, m2_target, job.index);
        fill_to(s, 1, m1_target, job.index);
    }
}

void SortedDual::first_approach_assign(const Job& job, double q, double w) {
    const SortedConstants& k = sorted_constants();
    const double half_ratio = k.ratio / 2.0;
    for (Schedule& s : sol_) keep_ratio(s, job, q, (1.0 - half_ratio) * w, half_ratio * w);
}

std::string SortedDual::step(const Job& job) {
    if (!(job.size > 0.0))
        throw NonPositiveSizeError("job " + std::to_string(job.index) + " has non-positive size");
    const SortedConstants& k = sorted_constants();
    const double tol = tolerance();

    double q;
    if (count_ == 0) {
        scale_ = job.size;
        q = 1.0;
    } else {
        q = job.size / scale_;
        if (q > p_prev_ + tol) {
            std::ostringstream os;
            os << "job " << job.index << " (size " << job.size << ") larger than its predecessor";
            throw UnsortedInputError(os.str());
        }
    }
    const double w = total_ + q;

    std::string tag;
    if (count_ == 0) {
        sol_[0].add_piece(Piece{1, job.index, 0.0, 1.0});
        sol_[1].add_piece(Piece{1, job.index, 0.0, 1.0});
        tag = "first-job";
    } else if (count_ == 1 && q <= 0.4) {
        mode_ = SortedMode::FirstApproach;
        first_approach_assign(job, q, w);
        tag = "first-approach";
    } else if (count_ == 1) {
        mode_ = SortedMode::SecondApproach;
        Schedule& a = sol_[static_cast<size_t>(role_a_)];
        Schedule& b = sol_[static_cast<size_t>(1 - role_a_)];
        a.add_piece(Piece{1, job.index, 1.0, k.ratio});
        a.add_piece(Piece{2, job.index, 0.0, q + 1.0 - k.ratio});
        b.add_piece(Piece{1, job.index, 1.0, k.ratio_b});
        b.add_piece(Piece{2, job.index, 0.0, q + 1.0 - k.ratio_b});
        tag = "second-start";
    } else if (mode_ == SortedMode::FirstApproach) {
        first_approach_assign(job, q, w);
        tag = "first-approach";
    } else {
        // second approach, third job onwards; sortedness gives q <= W/3
        if (q > w / 3.0 + tol)
            throw InvariantViolation("sorted input with p_j > W_j/3");
        const double half_ratio = k.ratio / 2.0;
        const bool small = (q <= w * k.beta) || (w <= std::sqrt(6.0));
        if (small) {
            tag = "case1";
            keep_ratio(sol_[static_cast<size_t>(role_a_)], job, q, (1.0 - half_ratio) * w,
                       half_ratio * w);
            keep_ratio(sol_[static_cast<size_t>(1 - role_a_)], job, q, 0.4 * w, 0.6 * w);
        } else {
            tag = "case2";
            Schedule& a = sol_[static_cast<size_t>(role_a_)];
            Schedule& b = sol_[static_cast<size_t>(1 - role_a_)];
            const double a1 = a.load(1), a2 = a.load(2);
            const double b1 = b.load(1), b2 = b.load(2);
            const double gamma = std::min({a2 + q, a1, 0.4 * w});

            auto require = [&](bool ok, const char* what) {
                if (!ok) throw InvariantViolation(std::string("case-2 precondition: ") + what);
            };
            require(b1 <= half_ratio * w + tol, "b1 <= (R/2)W");
            require(a1 <= w - gamma + tol, "a1 <= W - Gamma");
            require(b2 <= (1.0 - half_ratio) * w + tol, "b2 <= (1-R/2)W");
            require(a2 <= gamma + tol, "a2 <= Gamma");
            require((1.0 - half_ratio) * w <= b1 + tol, "(1-R/2)W <= b1");
            require(gamma <= a1 + tol, "Gamma <= a1");

            // A takes the imbalanced fill and becomes B; B becomes A
            fill_to(a, 2, gamma, job.index);
            fill_to(a, 1, w - gamma, job.index);
            fill_to(b, 2, (1.0 - half_ratio) * w, job.index);
            fill_to(b, 1, half_ratio * w, job.index);
            role_a_ = 1 - role_a_;
        }
    }

    total_ = w;
    p_prev_ = q;
    ++count_;
    check_invariants();
    return tag;
}

void SortedDual::check_invariants() const {
    const SortedConstants& k = sorted_constants();
    const double tol = tolerance();
    const double w = total_;
    const double best = opt_normalized();
    const double half_ratio = k.ratio / 2.0;
    const double a1 = solution_a().load(1);
    const double a2 = solution_a().load(2);
    const double b1 = solution_b().load(1);
    const double b2 = solution_b().load(2);

    auto require = [](bool ok, const char* what) {
        if (!ok) throw InvariantViolation(what);
    };
    require(std::abs(a1 + a2 - w) <= tol, "A loads do not sum to W");
    require(std::abs(b1 + b2 - w) <= tol, "B loads do not sum to W");

    if (count_ <= 1) {
        require(std::abs(a1 - 1.0) <= tol && std::abs(b1 - 1.0) <= tol, "first job misplaced");
        return;
    }
    if (mode_ == SortedMode::FirstApproach) {
        require(a1 >= std::max(1.0, half_ratio * w) - tol, "a1 below max{1, (R/2)W}");
        require(a1 <= k.ratio * best + tol, "a1 above R*opt");
        require(a2 <= (1.0 - half_ratio) * w + tol, "a2 above (1-R/2)W");
        require(std::abs(b1 - a1) <= tol, "mirror solution diverged");
    } else {
        require(a1 >= std::max(k.ratio, half_ratio * w) - tol, "a1 below max{R, (R/2)W}");
        require(a1 <= k.ratio * best + tol, "a1 above R*opt");
        require(a2 <= (1.0 - half_ratio) * w + tol, "a2 above (1-R/2)W");
        require(b1 >= std::max(k.ratio_b, 0.6 * w) - tol, "b1 below max{r, 0.6W}");
        require(b1 <= k.ratio_b * best + tol, "b1 above r*opt");
        require(b2 <= 0.4 * w + tol, "b2 above 0.4W");
    }
}

SolutionSet SortedDual::snapshot() const {
    SolutionSet out;
    out.total_size = total_ * scale_;
    for (const Schedule* s : {&solution_a(), &solution_b()}) {
        Schedule scaled;
        for (const Piece& p : s->pieces())
            scaled.add_piece(Piece{p.machine, p.job, p.start * scale_, p.end * scale_});
        out.solutions.push_back(std::move(scaled));
    }
    return out;
}

RunResult run_sorted(const std::vector<Job>& jobs) {
    SortedDual state;
    RunResult out;
    out.audit.reserve(jobs.size());
    for (const Job& job : jobs) {
        const std::string tag = state.step(job);
        AuditRecord rec;
        rec.prefix_len = state.count();
        rec.opt = state.opt_normalized() * state.scale();
        rec.per_solution_max = {state.solution_a().max_load() * state.scale(),
                                state.solution_b().max_load() * state.scale()};
        rec.makespan = std::min(rec.per_solution_max[0], rec.per_solution_max[1]);
        rec.ratio = std::min(state.solution_a().max_load(), state.solution_b().max_load()) /
                    state.opt_normalized();
        rec.case_taken = tag;
        rec.total_size = state.total_normalized() * state.scale();
        out.audit.push_back(std::move(rec));
    }
    out.set = state.snapshot();
    for (const Schedule& s : out.set.solutions) {
        const ValidationReport report = validate(s, jobs, true);
        if (!report.ok())
            throw InvariantViolation("final schedule invalid: " + report.violations.front().detail);
    }
    return out;
}

} // namespace parsched
