#include "parsched/schedule_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "parsched/audit.hpp"
#include "parsched/errors.hpp"

namespace parsched {

void emit_schedule(const ScheduleFile& file, std::ostream& out) {
    out << "{\"type\":\"schedule\",\"name\":\"" << file.name << "\",\"jobs\":[";
    for (size_t i = 0; i < file.jobs.size(); ++i) {
        if (i) out << ',';
        out << format_double(file.jobs[i].size);
    }
    out << "]}\n";
    for (const Piece& p : file.schedule.pieces()) {
        out << "{\"machine\":" << p.machine << ",\"job\":" << p.job
            << ",\"start\":" << format_double(p.start) << ",\"end\":" << format_double(p.end)
            << "}\n";
    }
}

ScheduleFile parse_schedule(std::istream& in) {
    ScheduleFile file;
    std::vector<Piece> pieces;
    std::string line;
    int line_number = 0;
    bool have_header = false;
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
            if (!obj.is_object() || obj.value("type", "") != "schedule")
                throw ParseError("expected a schedule header object", line_number);
            file.name = obj.value("name", "");
            if (!obj.contains("jobs") || !obj["jobs"].is_array())
                throw ParseError("schedule header must list job sizes", line_number);
            std::vector<double> sizes;
            for (const auto& v : obj["jobs"]) sizes.push_back(v.get<double>());
            try {
                file.jobs = make_jobs(sizes);
            } catch (const NonPositiveSizeError& e) {
                throw ParseError(e.what(), line_number);
            }
            have_header = true;
            continue;
        }
        if (!obj.is_object() || !obj.contains("machine") || !obj.contains("job") ||
            !obj.contains("start") || !obj.contains("end"))
            throw ParseError("expected a piece object with machine/job/start/end", line_number);
        pieces.push_back(Piece{obj["machine"].get<int>(), obj["job"].get<int>(),
                               obj["start"].get<double>(), obj["end"].get<double>()});
    }
    if (!have_header) throw ParseError("missing schedule header", 1);
    file.schedule = Schedule::from_pieces_unchecked(pieces);
    return file;
}

} // namespace parsched
