#ifndef PARSCHED_WORKLOAD_HPP
#define PARSCHED_WORKLOAD_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "parsched/job.hpp"

namespace parsched {

// A named job sequence. Pure families regenerate bit-identically from
// (family, seed, params); adversarial sequences record the construction in
// params and parse back as explicit job lists.
struct Workload {
    std::string name;
    std::string family; // explicit, uniform, log_uniform, sorted_uniform, sand, adversarial
    uint64_t seed = 0;
    std::map<std::string, std::string> params;
    std::vector<Job> jobs;
};

// Generates a workload of a pure family. Params understood:
//   uniform / sorted_uniform: lo (default 0 exclusive), hi (default 1)
//   log_uniform:              lo (default 1e-3),        hi (default 1e3)
//   sand:                     total (default 1)
Workload make_workload(const std::string& family, int n, uint64_t seed,
                       const std::map<std::string, std::string>& params = {});

// Line-delimited JSON: a header object, then one job object per line.
// Sizes are serialized as decimal with 17 significant digits.
void emit_workload(const Workload& workload, std::ostream& out);

// Lossless inverse of emit_workload. Throws ParseError (with line number)
// on malformed lines, non-positive sizes, non-consecutive indices, or an
// unsorted sequence tagged sorted_uniform.
Workload parse_workload(std::istream& in);

} // namespace parsched

#endif
