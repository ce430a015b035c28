#ifndef PARSCHED_AUDIT_HPP
#define PARSCHED_AUDIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace parsched {

// Per-prefix record of an online run: offline optimum, each solution's max
// completion time, the achieved makespan and ratio. Ratio reporting starts
// at prefix 1, where opt > 0 is guaranteed by positive sizes.
struct AuditRecord {
    int prefix_len = 0;
    double opt = 0.0;
    std::vector<double> per_solution_max;
    double makespan = 0.0;
    double ratio = 0.0;
    std::string case_taken;
    double total_size = 0.0;
};

// Header: prefix,opt,a_max,b_max,makespan,ratio,case. For runs with more
// than two solutions, a_max/b_max carry the min/max completion time.
void write_audit_csv(std::ostream& out, const std::vector<AuditRecord>& audit);

double max_ratio(const std::vector<AuditRecord>& audit);

// 17-significant-digit decimal rendering, enough to round-trip a double.
std::string format_double(double value);

} // namespace parsched

#endif
