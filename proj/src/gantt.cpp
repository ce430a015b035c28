#include "parsched/gantt.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace parsched {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// evenly spread hues, one per job
std::string job_color(int job) {
    const int hue = (job * 137) % 360;
    std::ostringstream os;
    os << "hsl(" << hue << ",65%,72%)";
    return os.str();
}

} // namespace

std::string render_gantt_svg(const std::vector<std::pair<std::string, Schedule>>& solutions) {
    constexpr double lane_height = 26.0;
    constexpr double lane_gap = 6.0;
    constexpr double block_gap = 18.0;
    constexpr double margin_left = 90.0;
    constexpr double margin_top = 24.0;
    constexpr double plot_width = 760.0;

    double horizon = 0.0;
    for (const auto& [name, schedule] : solutions) horizon = std::max(horizon, schedule.max_load());
    if (horizon <= 0.0) horizon = 1.0;
    const double x_scale = plot_width / horizon;

    const double block_height = 2 * lane_height + lane_gap;
    const double total_height =
        margin_top * 2 + static_cast<double>(solutions.size()) * (block_height + block_gap);
    const double total_width = margin_left + plot_width + 30.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total_width)
        << "\" height=\"" << fmt(total_height) << "\" font-family=\"monospace\" font-size=\"11\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    double y = margin_top;
    for (const auto& [name, schedule] : solutions) {
        for (int machine = 1; machine <= 2; ++machine) {
            const double lane_y = y + (machine - 1) * (lane_height + lane_gap);
            svg << "<text x=\"4\" y=\"" << fmt(lane_y + lane_height / 2 + 4) << "\">" << name
                << " m" << machine << "</text>\n";
            svg << "<rect x=\"" << fmt(margin_left) << "\" y=\"" << fmt(lane_y) << "\" width=\""
                << fmt(plot_width) << "\" height=\"" << fmt(lane_height)
                << "\" fill=\"#f4f4f4\" stroke=\"#ccc\"/>\n";
        }
        for (const Piece& p : schedule.pieces()) {
            const double lane_y = y + (p.machine - 1) * (lane_height + lane_gap);
            const double x = margin_left + p.start * x_scale;
            const double w = std::max(p.length() * x_scale, 0.5);
            svg << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(lane_y + 1) << "\" width=\""
                << fmt(w) << "\" height=\"" << fmt(lane_height - 2) << "\" fill=\""
                << job_color(p.job) << "\" stroke=\"#555\"/>\n";
            if (w > 18.0) {
                svg << "<text x=\"" << fmt(x + w / 2) << "\" y=\""
                    << fmt(lane_y + lane_height / 2 + 4) << "\" text-anchor=\"middle\">j" << p.job
                    << "</text>\n";
            }
        }
        y += block_height + block_gap;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace parsched
