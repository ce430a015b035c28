#include "parsched/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "parsched/adversary.hpp"
#include "parsched/audit.hpp"
#include "parsched/errors.hpp"
#include "parsched/gantt.hpp"
#include "parsched/ladder.hpp"
#include "parsched/numeric.hpp"
#include "parsched/offline.hpp"
#include "parsched/online.hpp"
#include "parsched/online_general.hpp"
#include "parsched/online_sorted.hpp"
#include "parsched/schedule_io.hpp"
#include "parsched/workload.hpp"

namespace parsched {

namespace {

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, double delta) {
    if (name == "general") return std::make_unique<GeneralAlgorithm>();
    if (name == "sorted") return std::make_unique<SortedAlgorithm>();
    if (name == "ladder") return std::make_unique<LadderAlgorithm>(delta);
    if (name == "naive") return std::make_unique<NaiveClonePair>();
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

struct RunOptions {
    std::string alg = "general";
    std::string family = "uniform";
    int n = 100;
    uint64_t seed = 0;
    double delta = 1.0;
    double total = 1.0;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> sizes;
    std::string workload_file;
    std::string out_path;
    std::string emit_schedule_path;
    std::string emit_workload_path;
};

Workload resolve_workload(const RunOptions& opt) {
    if (!opt.workload_file.empty()) {
        std::ifstream in(opt.workload_file);
        if (!in) throw SchedulingError("cannot open workload file " + opt.workload_file);
        return parse_workload(in);
    }
    if (!opt.sizes.empty()) {
        Workload w;
        w.name = "explicit";
        w.family = "explicit";
        w.jobs = make_jobs(opt.sizes);
        return w;
    }
    std::map<std::string, std::string> params;
    if (opt.family == "sand") {
        params["total"] = format_double(opt.total);
    } else if (opt.family == "uniform" || opt.family == "sorted_uniform" ||
               opt.family == "log_uniform") {
        if (opt.family == "log_uniform" && opt.lo == 0.0) {
            params["lo"] = format_double(1e-3);
            params["hi"] = format_double(1e3);
        } else {
            params["lo"] = format_double(opt.lo);
            params["hi"] = format_double(opt.hi);
        }
    }
    return make_workload(opt.family, opt.n, opt.seed, params);
}

// One audited online run with per-prefix validation. Validation is strict
// (no idle) except for the ladder, whose sub-solution boundaries may leave
// machine 2 idle by construction.
std::vector<AuditRecord> drive_run(const std::string& alg_name, double delta,
                                   const std::vector<Job>& jobs, SolutionSet& final_set) {
    std::vector<AuditRecord> audit;
    audit.reserve(jobs.size());
    const bool strict = alg_name != "ladder";

    std::unique_ptr<OnlineAlgorithm> alg = make_algorithm(alg_name, delta);
    PrefixStats opt;
    std::vector<Job> prefix;
    prefix.reserve(jobs.size());

    for (const Job& job : jobs) {
        alg->step(job);
        opt.add(job.size);
        prefix.push_back(job);

        AuditRecord rec;
        rec.prefix_len = static_cast<int>(prefix.size());
        rec.opt = opt.opt();
        const SolutionSet snap = alg->snapshot();
        rec.per_solution_max.reserve(snap.solutions.size());
        for (const Schedule& s : snap.solutions) rec.per_solution_max.push_back(s.max_load());
        rec.makespan = makespan(snap);
        rec.ratio = rec.makespan / rec.opt;
        rec.total_size = opt.total();
        if (const auto* g = dynamic_cast<const GeneralAlgorithm*>(alg.get())) {
            rec.case_taken = "case" + std::to_string(g->last_case());
        } else if (const auto* s = dynamic_cast<const SortedAlgorithm*>(alg.get())) {
            rec.case_taken = s->last_tag();
        } else if (const auto* l = dynamic_cast<const LadderAlgorithm*>(alg.get())) {
            const int rounds = l->ladder() ? l->ladder()->last_promotion_rounds() : 0;
            rec.case_taken =
                rec.prefix_len == 1 ? "init" : "promotions=" + std::to_string(rounds);
        } else {
            rec.case_taken = "greedy";
        }
        audit.push_back(std::move(rec));

        for (const Schedule& s : snap.solutions) {
            const ValidationReport report = validate(s, prefix, strict);
            if (!report.ok())
                throw InvariantViolation("prefix " + std::to_string(prefix.size()) +
                                         " schedule invalid: " + report.violations.front().detail);
        }
    }
    final_set = alg->snapshot();
    return audit;
}

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const Workload workload = resolve_workload(opt);
    if (opt.alg == "sorted") {
        for (size_t i = 1; i < workload.jobs.size(); ++i) {
            if (workload.jobs[i].size > workload.jobs[i - 1].size + tolerance()) {
                err << "error: workload is not sorted by non-increasing size (job "
                    << workload.jobs[i].index << ")\n";
                return 1;
            }
        }
    }

    SolutionSet final_set;
    const std::vector<AuditRecord> audit =
        drive_run(opt.alg, opt.delta, workload.jobs, final_set);

    std::ostringstream body;
    body << "# parsched run alg=" << opt.alg << " workload=" << workload.name
         << " family=" << workload.family << " n=" << workload.jobs.size()
         << " seed=" << workload.seed << " tol=" << format_double(tolerance());
    if (opt.alg == "ladder") body << " delta=" << format_double(opt.delta);
    body << "\n";
    write_audit_csv(body, audit);
    body << "# max_prefix_ratio=" << format_double(max_ratio(audit)) << "\n";

    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw SchedulingError("cannot open output file " + opt.out_path);
        f << body.str();
    } else {
        out << body.str();
    }

    if (!opt.emit_workload_path.empty()) {
        std::ofstream f(opt.emit_workload_path);
        if (!f) throw SchedulingError("cannot open " + opt.emit_workload_path);
        emit_workload(workload, f);
    }
    if (!opt.emit_schedule_path.empty()) {
        // the post-hoc choice: emit the best solution
        size_t best = 0;
        for (size_t i = 1; i < final_set.solutions.size(); ++i)
            if (final_set.solutions[i].max_load() < final_set.solutions[best].max_load()) best = i;
        std::ofstream f(opt.emit_schedule_path);
        if (!f) throw SchedulingError("cannot open " + opt.emit_schedule_path);
        ScheduleFile file;
        file.name = workload.name + "-best";
        file.jobs = workload.jobs;
        file.schedule = final_set.solutions.empty() ? Schedule{} : final_set.solutions[best];
        emit_schedule(file, f);
    }
    return 0;
}

struct AdversaryOptions {
    int prop = 1;
    std::string alg = "general";
    int m = 2;
    double grain = 1e-3;
    double delta = 1.0;
    bool sorted_variant = false;
    std::string out_path;
};

int cmd_adversary(const AdversaryOptions& opt, std::ostream& out, std::ostream& err) {
    (void)err;
    std::unique_ptr<OnlineAlgorithm> alg;
    AdversaryResult result;
    if (opt.prop == 1) {
        if (opt.alg == "ladder") {
            alg = std::make_unique<TruncatedAlgorithm>(std::make_unique<LadderAlgorithm>(opt.delta),
                                                       opt.m);
        } else {
            alg = std::make_unique<ReplicatedAlgorithm>(make_algorithm(opt.alg, opt.delta), opt.m);
        }
        result = adversary_prop1(*alg, opt.m, opt.sorted_variant);
    } else if (opt.prop == 2) {
        alg = make_algorithm(opt.alg, opt.delta);
        result = adversary_prop2(*alg, opt.grain);
    } else if (opt.prop == 3) {
        alg = make_algorithm(opt.alg, opt.delta);
        result = adversary_prop3(*alg);
    } else {
        throw std::invalid_argument("prop must be 1, 2 or 3");
    }

    out << "# parsched adversary prop=" << opt.prop << " alg=" << opt.alg;
    if (opt.prop == 1) out << " m=" << opt.m << " sorted=" << (opt.sorted_variant ? 1 : 0);
    if (opt.prop == 2) out << " grain=" << format_double(opt.grain);
    out << "\n";
    out << "forced_ratio=" << format_double(result.ratio) << "\n";
    if (opt.prop != 1) out << "smaller_active=" << format_double(result.smaller_active) << "\n";
    out << "jobs=" << result.jobs.size() << "\n";
    if (result.jobs.size() <= 16) {
        out << "sequence=";
        for (size_t i = 0; i < result.jobs.size(); ++i) {
            if (i) out << ',';
            out << format_double(result.jobs[i]);
        }
        out << "\n";
    }

    if (!opt.out_path.empty()) {
        Workload w;
        w.family = "adversarial";
        w.name = "adversarial-prop" + std::to_string(opt.prop) + "-" + opt.alg;
        w.params["prop"] = std::to_string(opt.prop);
        w.params["alg"] = opt.alg;
        if (opt.prop == 1) {
            w.params["m"] = std::to_string(opt.m);
            w.params["sorted"] = opt.sorted_variant ? "1" : "0";
        }
        if (opt.prop == 2) w.params["grain"] = format_double(opt.grain);
        w.jobs = make_jobs(result.jobs);
        std::ofstream f(opt.out_path);
        if (!f) throw SchedulingError("cannot open " + opt.out_path);
        emit_workload(w, f);
    }
    return 0;
}

int cmd_validate(const std::string& path, bool strict, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << "\n";
        return 1;
    }
    const ScheduleFile file = parse_schedule(in);
    const ValidationReport report = validate(file.schedule, file.jobs, strict);
    for (const Violation& v : report.violations)
        out << to_string(v.kind) << ": " << v.detail << "\n";
    if (report.ok()) {
        out << "ok: " << file.schedule.pieces().size() << " pieces, " << file.jobs.size()
            << " jobs\n";
        return 0;
    }
    out << report.violations.size() << " violation(s)\n";
    return 1;
}

int cmd_gantt(const std::vector<std::string>& paths, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, Schedule>> solutions;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) {
            err << "error: cannot open " << path << "\n";
            return 1;
        }
        ScheduleFile file = parse_schedule(in);
        solutions.emplace_back(file.name.empty() ? path : file.name, std::move(file.schedule));
    }
    const std::string svg = render_gantt_svg(solutions);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw SchedulingError("cannot open " + out_path);
        f << svg;
    } else {
        out << svg;
    }
    return 0;
}

struct SweepOptions {
    std::vector<std::string> algs{"general"};
    std::vector<std::string> families{"uniform"};
    std::vector<int> lengths{100};
    int seeds = 5;
    double delta = 1.0;
    std::string out_path;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    (void)err;
    std::ostringstream body;
    body << "# parsched sweep seeds=0.." << (opt.seeds - 1) << " tol=" << format_double(tolerance())
         << "\n";
    body << "alg,family,n,seed,max_prefix_ratio,final_ratio,final_makespan,final_opt\n";
    for (const std::string& alg : opt.algs) {
        for (const std::string& family : opt.families) {
            for (const int n : opt.lengths) {
                for (int seed = 0; seed < opt.seeds; ++seed) {
                    RunOptions ropt;
                    ropt.alg = alg;
                    ropt.family = family;
                    ropt.n = n;
                    ropt.seed = static_cast<uint64_t>(seed);
                    ropt.delta = opt.delta;
                    const Workload workload = resolve_workload(ropt);
                    SolutionSet final_set;
                    const std::vector<AuditRecord> audit =
                        drive_run(alg, opt.delta, workload.jobs, final_set);
                    if (audit.empty()) continue;
                    const AuditRecord& last = audit.back();
                    body << alg << ',' << family << ',' << n << ',' << seed << ','
                         << format_double(max_ratio(audit)) << ',' << format_double(last.ratio)
                         << ',' << format_double(last.makespan) << ',' << format_double(last.opt)
                         << "\n";
                }
            }
        }
    }
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw SchedulingError("cannot open " + opt.out_path);
        f << body.str();
    } else {
        out << body.str();
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"online preemptive makespan scheduling on two identical machines "
                 "with parallel solutions"};
    app.name("parsched");
    app.require_subcommand(1);

    RunOptions ropt;
    CLI::App* run = app.add_subcommand("run", "run an algorithm over a workload, audit ratios");
    run->add_option("--alg", ropt.alg, "general|sorted|ladder|naive")->capture_default_str();
    run->add_option("--workload", ropt.family,
                    "uniform|log_uniform|sorted_uniform|sand (generated families)")
        ->capture_default_str();
    run->add_option("--n", ropt.n, "number of jobs")->capture_default_str();
    run->add_option("--seed", ropt.seed, "PRNG seed")->capture_default_str();
    run->add_option("--delta", ropt.delta, "ladder guarantee parameter in (0,1]")
        ->capture_default_str();
    run->add_option("--total", ropt.total, "sand total size")->capture_default_str();
    run->add_option("--lo", ropt.lo, "size range low end");
    run->add_option("--hi", ropt.hi, "size range high end");
    run->add_option("--sizes", ropt.sizes, "explicit comma-separated sizes")->delimiter(',');
    run->add_option("--workload-file", ropt.workload_file, "read the workload from a JSONL file");
    run->add_option("--out", ropt.out_path, "write the audit CSV here instead of stdout");
    run->add_option("--emit-schedule", ropt.emit_schedule_path,
                    "write the best final solution as JSONL");
    run->add_option("--emit-workload", ropt.emit_workload_path, "write the workload as JSONL");

    AdversaryOptions aopt;
    CLI::App* adv = app.add_subcommand("adversary", "drive a lower-bound construction");
    adv->add_option("--prop", aopt.prop, "construction: 1 (gap), 2 (sand), 3 (sorted)")
        ->capture_default_str();
    adv->add_option("--alg", aopt.alg, "algorithm under attack")->capture_default_str();
    adv->add_option("--m", aopt.m, "number of solutions the construction-1 target exposes")
        ->capture_default_str();
    adv->add_option("--grain", aopt.grain, "sand grain size (construction 2)")
        ->capture_default_str();
    adv->add_option("--delta", aopt.delta, "ladder parameter")->capture_default_str();
    adv->add_flag("--sorted", aopt.sorted_variant, "sorted variant of construction 1");
    adv->add_option("--out", aopt.out_path, "record the emitted sequence as a workload file");

    std::string validate_path;
    bool validate_strict = false;
    CLI::App* val = app.add_subcommand("validate", "check a schedule file, report violations");
    val->add_option("file", validate_path, "schedule JSONL file")->required();
    val->add_flag("--strict", validate_strict, "also flag idle time");

    std::vector<std::string> gantt_paths;
    std::string gantt_out;
    CLI::App* gan = app.add_subcommand("gantt", "render schedule files as an SVG chart");
    gan->add_option("files", gantt_paths, "schedule JSONL files, one lane pair each")->required();
    gan->add_option("--out", gantt_out, "write the SVG here instead of stdout");

    SweepOptions sopt;
    CLI::App* sweep = app.add_subcommand("sweep", "grid of runs, one CSV summary row each");
    sweep->add_option("--alg", sopt.algs, "algorithms")->delimiter(',')->capture_default_str();
    sweep->add_option("--family", sopt.families, "workload families")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--n", sopt.lengths, "job counts")->delimiter(',')->capture_default_str();
    sweep->add_option("--seeds", sopt.seeds, "seeds 0..k-1")->capture_default_str();
    sweep->add_option("--delta", sopt.delta, "ladder parameter")->capture_default_str();
    sweep->add_option("--out", sopt.out_path, "write the CSV here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage_out, usage_err;
        const int code = app.exit(e, usage_out, usage_err);
        out << usage_out.str();
        err << usage_err.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(ropt, out, err);
        if (adv->parsed()) return cmd_adversary(aopt, out, err);
        if (val->parsed()) return cmd_validate(validate_path, validate_strict, out, err);
        if (gan->parsed()) return cmd_gantt(gantt_paths, gantt_out, out, err);
        if (sweep->parsed()) return cmd_sweep(sopt, out, err);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace parsched
