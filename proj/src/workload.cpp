#include "parsched/workload.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "parsched/audit.hpp"
#include "parsched/errors.hpp"
#include "parsched/numeric.hpp"
#include "parsched/rng.hpp"

namespace parsched {

namespace {

double param_or(const std::map<std::string, std::string>& params, const std::string& key,
                double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    return std::stod(it->second);
}

} // namespace

Workload make_workload(const std::string& family, int n, uint64_t seed,
                       const std::map<std::string, std::string>& params) {
    if (n < 0) throw std::invalid_argument("workload length must be >= 0");
    Workload w;
    w.family = family;
    w.seed = seed;
    w.params = params;
    std::ostringstream name;
    name << family << "-n" << n << "-s" << seed;
    w.name = name.str();

    Xoshiro256 rng(seed);
    std::vector<double> sizes;
    sizes.reserve(static_cast<size_t>(n));
    if (family == "uniform" || family == "sorted_uniform") {
        const double lo = param_or(params, "lo", 0.0);
        const double hi = param_or(params, "hi", 1.0);
        for (int i = 0; i < n; ++i) sizes.push_back(lo + rng.uniform01() * (hi - lo));
        if (family == "sorted_uniform") std::sort(sizes.begin(), sizes.end(), std::greater<>());
    } else if (family == "log_uniform") {
        const double lo = param_or(params, "lo", 1e-3);
        const double hi = param_or(params, "hi", 1e3);
        for (int i = 0; i < n; ++i) sizes.push_back(rng.log_uniform(lo, hi));
    } else if (family == "sand") {
        const double total = param_or(params, "total", 1.0);
        if (n > 0) {
            const double g = total / n;
            double sum = 0.0;
            for (int i = 0; i < n - 1; ++i) {
                sizes.push_back(g);
                sum += g;
            }
            sizes.push_back(total - sum); // lands the running sum exactly on total
        }
    } else if (family == "explicit" || family == "adversarial") {
        throw std::invalid_argument("family '" + family + "' has no generator; provide jobs");
    } else {
        throw std::invalid_argument("unknown workload family '" + family + "'");
    }
    w.jobs = make_jobs(sizes);
    return w;
}

void emit_workload(const Workload& workload, std::ostream& out) {
    nlohmann::json header;
    header["type"] = "workload";
    header["name"] = workload.name;
    header["family"] = workload.family;
    header["seed"] = workload.seed;
    if (!workload.params.empty()) header["params"] = workload.params;
    header["count"] = workload.jobs.size();
    out << header.dump() << "\n";
    for (const Job& job : workload.jobs)
        out << "{\"index\":" << job.index << ",\"size\":" << format_double(job.size) << "}\n";
}

Workload parse_workload(std::istream& in) {
    Workload w;
    std::string line;
    int line_number = 0;
    bool have_header = false;
    size_t expected = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_number);
        }
        if (!have_header) {
            if (!obj.is_object() || obj.value("type", "") != "workload")
                throw ParseError("expected a workload header object", line_number);
            w.name = obj.value("name", "");
            w.family = obj.value("family", "explicit");
            w.seed = obj.value("seed", uint64_t{0});
            if (obj.contains("params"))
                w.params = obj["params"].get<std::map<std::string, std::string>>();
            expected = obj.value("count", size_t{0});
            have_header = true;
            continue;
        }
        if (!obj.is_object() || !obj.contains("index") || !obj.contains("size"))
            throw ParseError("expected a job object with index and size", line_number);
        const int index = obj["index"].get<int>();
        const double size = obj["size"].get<double>();
        if (!(size > 0.0)) throw ParseError("job size must be > 0", line_number);
        if (index != static_cast<int>(w.jobs.size()) + 1)
            throw ParseError("job indices must be consecutive from 1", line_number);
        w.jobs.push_back(Job{index, size});
    }
    if (!have_header) throw ParseError("missing workload header", std::max(line_number, 1));
    if (expected != 0 && expected != w.jobs.size())
        throw ParseError("header count " + std::to_string(expected) + " but parsed " +
                             std::to_string(w.jobs.size()) + " jobs",
                         line_number);
    if (w.family == "sorted_uniform") {
        for (size_t i = 1; i < w.jobs.size(); ++i)
            if (w.jobs[i].size > w.jobs[i - 1].size + tolerance())
                throw ParseError("workload tagged sorted_uniform is not non-increasing",
                                 static_cast<int>(i) + 2);
    }
    return w;
}

} // namespace parsched
