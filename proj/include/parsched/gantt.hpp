#ifndef PARSCHED_GANTT_HPP
#define PARSCHED_GANTT_HPP

#include <string>
#include <utility>
#include <vector>

#include "parsched/schedule.hpp"

namespace parsched {

// Static SVG: one horizontal lane per machine per solution, pieces as
// labeled rectangles colored by job. Output is deterministic.
std::string render_gantt_svg(const std::vector<std::pair<std::string, Schedule>>& solutions);

} // namespace parsched

#endif
