#include "parsched/online_general.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"

namespace parsched {

const GeneralConstants& general_constants() {
    static const GeneralConstants k = [] {
        GeneralConstants c;
        c.phi = (1.0 + std::sqrt(5.0)) / 2.0;
        c.alpha = (std::sqrt(5.0) - 1.0) / 2.0;
        c.ratio = std::sqrt(5.0) - 1.0;
        return c;
    }();
    return k;
}

namespace {

// Extends the machine's load to the target with one piece of the job.
// Analytically the fill is nonnegative; a target measurably below the
// current load is an algorithm bug.
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

GeneralDual::GeneralDual() = default;

double GeneralDual::opt() const { return std::max(total_ / 2.0, p_max_); }

void GeneralDual::keep_ratio(Schedule& s, const Job& job, double m2_target, double m1_target) {
    const double m2 = s.load(2);
    if (m2 + job.size <= m2_target) {
        s.add_piece(Piece{2, job.index, m2, m2 + job.size});
    } else {
        fill_to(s, 2, m2_target, job.index);
        fill_to(s, 1, m1_target, job.index);
    }
}

void GeneralDual::cross_assign(double w, int job_index) {
    const double phi = general_constants().phi;
    const double phi2 = phi * phi;
    Schedule& a = sol_[static_cast<size_t>(role_a_)];
    Schedule& b = sol_[static_cast<size_t>(1 - role_a_)];
    // A becomes the imbalanced solution, B becomes the balanced one.
    fill_to(a, 2, w / (phi2 * phi), job_index);
    fill_to(a, 1, 2.0 * w / phi2, job_index);
    fill_to(b, 2, w / phi2, job_index);
    fill_to(b, 1, w / phi, job_index);
    role_a_ = 1 - role_a_;
}

int GeneralDual::step(const Job& job) {
    if (!(job.size > 0.0))
        throw NonPositiveSizeError("job " + std::to_string(job.index) + " has non-positive size");
    const GeneralConstants& k = general_constants();
    const double p = job.size;
    const double w_prev = total_;
    const double w = w_prev + p;

    int case_id;
    if (p > w_prev) {
        // the job outweighs everything so far (equivalent to p > W/2):
        // assign a prefix of it as if the total had doubled, then put the
        // residue on machine 1 of both solutions
        case_id = 3;
        cross_assign(2.0 * w_prev, job.index);
        const double residue = p - w_prev;
        for (Schedule& s : sol_) {
            const double start = s.load(1);
            s.add_piece(Piece{1, job.index, start, start + residue});
        }
    } else if (p > w * (2.0 - k.phi)) {
        case_id = 2;
        cross_assign(w, job.index);
    } else {
        case_id = 1;
        const double phi2 = k.phi * k.phi;
        keep_ratio(sol_[static_cast<size_t>(role_a_)], job, w / phi2, w / k.phi);
        keep_ratio(sol_[static_cast<size_t>(1 - role_a_)], job, w / (phi2 * k.phi),
                   2.0 * w / phi2);
    }

    total_ = w;
    p_max_ = std::max(p_max_, p);
    ++count_;
    check_invariants();
    return case_id;
}

void GeneralDual::check_invariants() const {
    const GeneralConstants& k = general_constants();
    const double tol = tolerance();
    const double w = total_;
    const double best = opt();
    const double phi2 = k.phi * k.phi;
    const double a1 = solution_a().load(1);
    const double a2 = solution_a().load(2);
    const double b1 = solution_b().load(1);
    const double b2 = solution_b().load(2);

    auto require = [](bool ok, const char* what) {
        if (!ok) throw InvariantViolation(what);
    };
    require(a1 >= w / k.phi - tol, "a1 below W/phi");
    require(a1 <= k.ratio * best + tol, "a1 above ratio*opt");
    require(a2 <= w / phi2 + tol, "a2 above W/phi^2");
    require(b1 >= 2.0 * w / phi2 - tol, "b1 below 2W/phi^2");
    require(b1 <= k.ratio * k.ratio * best + tol, "b1 above ratio^2*opt");
    require(b2 <= w / (phi2 * k.phi) + tol, "b2 above W/phi^3");
    require(std::abs(a1 + a2 - w) <= tol, "A loads do not sum to W");
    require(std::abs(b1 + b2 - w) <= tol, "B loads do not sum to W");
    if (w > tol) {
        require(a1 > a2 - tol, "A loads out of order");
        require(b1 > b2 - tol, "B loads out of order");
    }
}

SolutionSet GeneralDual::snapshot() const {
    return SolutionSet{{solution_a(), solution_b()}, total_};
}

RunResult run_general(const std::vector<Job>& jobs) {
    GeneralDual state;
    RunResult out;
    out.audit.reserve(jobs.size());
    for (const Job& job : jobs) {
        const int case_id = state.step(job);
        AuditRecord rec;
        rec.prefix_len = state.count();
        rec.opt = state.opt();
        rec.per_solution_max = {state.solution_a().max_load(), state.solution_b().max_load()};
        rec.makespan = std::min(rec.per_solution_max[0], rec.per_solution_max[1]);
        rec.ratio = rec.makespan / rec.opt;
        rec.case_taken = "case" + std::to_string(case_id);
        rec.total_size = state.total();
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

SolutionSet unit_jobs_dual(int n) {
    Schedule round_robin;
    for (int k = 1; k <= n; ++k) {
        const int machine = ((k - 1) % 2) + 1;
        const double slot = static_cast<double>((k - 1) / 2);
        round_robin.add_piece(Piece{machine, k, slot, slot + 1.0});
    }

    // Preempting the second job opens a [0.5, 1.5) slot on machine 2, which
    // makes odd job counts optimal as well.
    Schedule preempting;
    if (n >= 1) preempting.add_piece(Piece{1, 1, 0.0, 1.0});
    if (n >= 2) {
        preempting.add_piece(Piece{1, 2, 1.0, 1.5});
        preempting.add_piece(Piece{2, 2, 0.0, 0.5});
    }
    if (n >= 3) preempting.add_piece(Piece{2, 3, 0.5, 1.5});
    for (int k = 4; k <= n; ++k) {
        const int machine = ((k - 4) % 2) + 1;
        const double slot = 1.5 + static_cast<double>((k - 4) / 2);
        preempting.add_piece(Piece{machine, k, slot, slot + 1.0});
    }

    return SolutionSet{{round_robin, preempting}, static_cast<double>(n)};
}

} // namespace parsched
