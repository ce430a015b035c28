#ifndef PARSCHED_SCHEDULE_IO_HPP
#define PARSCHED_SCHEDULE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "parsched/job.hpp"
#include "parsched/schedule.hpp"

namespace parsched {

struct ScheduleFile {
    std::string name;
    std::vector<Job> jobs;
    Schedule schedule;
};

// Line-delimited JSON: a header object carrying the job sizes, then one
// piece object per line. Reals use 17 significant digits.
void emit_schedule(const ScheduleFile& file, std::ostream& out);

// Ingests without overlap enforcement, so defective external schedules can
// be loaded and then inspected with validate(). Throws ParseError with the
// offending line number on malformed input.
ScheduleFile parse_schedule(std::istream& in);

} // namespace parsched

#endif
