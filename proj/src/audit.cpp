#include "parsched/audit.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace parsched {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_audit_csv(std::ostream& out, const std::vector<AuditRecord>& audit) {
    out << "prefix,opt,a_max,b_max,makespan,ratio,case\n";
    for (const AuditRecord& rec : audit) {
        double a_max = 0.0, b_max = 0.0;
        if (rec.per_solution_max.size() == 2) {
            a_max = rec.per_solution_max[0];
            b_max = rec.per_solution_max[1];
        } else if (!rec.per_solution_max.empty()) {
            const auto [lo, hi] =
                std::minmax_element(rec.per_solution_max.begin(), rec.per_solution_max.end());
            a_max = *lo;
            b_max = *hi;
        }
        out << rec.prefix_len << ',' << format_double(rec.opt) << ',' << format_double(a_max)
            << ',' << format_double(b_max) << ',' << format_double(rec.makespan) << ','
            << format_double(rec.ratio) << ',' << rec.case_taken << '\n';
    }
}

double max_ratio(const std::vector<AuditRecord>& audit) {
    double worst = 0.0;
    for (const AuditRecord& rec : audit) worst = std::max(worst, rec.ratio);
    return worst;
}

} // namespace parsched
