#ifndef PROGEVO_REPORT_HPP
#define PROGEVO_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "progevo/harness.hpp"

namespace progevo {

inline constexpr char const* csv_header =
    "algorithm,problem,l,num_junk,neg_join,k,delta,max_depth,pop_size,avg_evaluations,success_rate,seed_base";

// Shortest text that parses back to exactly the same double.
std::string format_double(double v);

void write_csv(std::ostream& os, std::vector<SweepRow> const& rows);
std::vector<SweepRow> read_csv(std::istream& is);

// Log-log line plot, one polyline per series. Series are keyed by algorithm,
// and additionally by max depth when one algorithm has rows at several depths
// for the same x.
void write_svg(std::ostream& os, std::vector<SweepRow> const& rows, SweepAxis axis);

struct ReportFiles {
    std::filesystem::path csv;
    std::filesystem::path svg;
};

// Writes <dir>/<stem>.csv and <dir>/<stem>.svg, creating dir if needed. Throws
// std::runtime_error naming the file that could not be written.
ReportFiles emit_report(std::vector<SweepRow> const& rows, SweepAxis axis, std::filesystem::path const& dir,
                        std::string const& stem);

} // namespace progevo

#endif
