#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "progevo/report.hpp"

using namespace progevo;

namespace {

std::vector<SweepRow> sample_rows()
{
    SweepRow a{Algorithm::Gp, ProblemFamily::Order, 10, 0, false, 0, 0.0, 5, 60, 612.1, 1.0, 1};
    SweepRow b{Algorithm::Gp, ProblemFamily::Order, 20, 0, false, 0, 0.0, 6, 224, 4622.0 / 3, 1.0, 1};
    SweepRow c{Algorithm::Pipe, ProblemFamily::Trap, 12, 2, true, 3, 0.25, 5, 1 << 20, 0.0, 0.0, 1};
    SweepRow d{Algorithm::Pipe, ProblemFamily::Trap, 6, 2, true, 3, 0.25, 4, 1024, 1058.2, 1.0, 1};
    return {a, b, c, d};
}

std::size_t count(std::string const& s, std::string const& needle)
{
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("CSV layout")
{
    std::ostringstream os;
    write_csv(os, sample_rows());
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "algorithm,problem,l,num_junk,neg_join,k,delta,max_depth,pop_size,avg_evaluations,success_rate,seed_base");
    std::getline(lines, line);
    CHECK(line == "gp,order,10,0,0,0,0,5,60,612.1,1,1");
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line == "pipe,trap,12,2,1,3,0.25,5,1048576,0,0,1");
}

TEST_CASE("CSV round-trips bit for bit")
{
    auto rows = sample_rows();
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1e7);
    for (int i = 0; i < 200; ++i) {
        auto r = rows[static_cast<std::size_t>(i) % rows.size()];
        r.avg_evaluations = u(rng);
        r.success_rate = u(rng) / 1e7;
        r.seed_base = rng();
        rows.push_back(r);
    }
    std::stringstream ss;
    write_csv(ss, rows);
    CHECK(read_csv(ss) == rows);

    std::istringstream bad_header("a,b\n");
    CHECK_THROWS_AS(read_csv(bad_header), std::runtime_error);
    std::istringstream bad_row(std::string(csv_header) + "\ngp,order,x,0,0,0,0,5,60,1,1,1\n");
    CHECK_THROWS_AS(read_csv(bad_row), std::runtime_error);
}

TEST_CASE("shortest round-trip number formatting")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(4659.2) == "4659.2");
    double const third = 1.0 / 3;
    CHECK(std::stod(format_double(third)) == third);
}

TEST_CASE("SVG plot has one polyline per algorithm and labelled axes")
{
    std::ostringstream os;
    write_svg(os, sample_rows(), SweepAxis::ProblemSize);
    auto const svg = os.str();
    CHECK(svg.starts_with("<?xml"));
    CHECK(svg.ends_with("</svg>\n"));
    CHECK(count(svg, "<polyline") == 2);
    CHECK(count(svg, "data-series=\"gp\"") == 1);
    CHECK(count(svg, "data-series=\"pipe\"") == 1);
    CHECK(svg.find("problem size") != std::string::npos);
    CHECK(svg.find("fitness evaluations") != std::string::npos);
    CHECK(count(svg, "<svg") == count(svg, "</svg>"));
    CHECK(count(svg, "<g") == count(svg, "</g>"));
    CHECK(count(svg, "<text") == count(svg, "</text>"));
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("mixed depths split the series")
{
    std::vector<SweepRow> rows;
    for (int depth : {6, 7}) {
        for (int j : {5, 10, 20}) {
            rows.push_back({Algorithm::Gp, ProblemFamily::Order, 20, j, false, 0, 0.0, depth, 100, 1000.0 * j, 1.0, 1});
        }
    }
    std::ostringstream os;
    write_svg(os, rows, SweepAxis::JunkCount);
    auto const svg = os.str();
    CHECK(count(svg, "<polyline") == 2);
    CHECK(svg.find("data-series=\"gp depth 7\"") != std::string::npos);
    CHECK(svg.find("number of junk terminals") != std::string::npos);
    std::smatch m;
    std::regex const points("data-series=\"gp depth 6\"[^>]*points=\"([^\"]*)\"");
    REQUIRE(std::regex_search(svg, m, points));
    CHECK(count(m[1].str(), ",") == 3);
}

TEST_CASE("reports land on disk and bad paths fail loudly")
{
    auto const dir = std::filesystem::temp_directory_path() / "progevo_report_test";
    std::filesystem::remove_all(dir);
    auto const files = emit_report(sample_rows(), SweepAxis::ProblemSize, dir, "order");
    CHECK(std::filesystem::exists(files.csv));
    CHECK(std::filesystem::exists(files.svg));
    std::ifstream in(files.csv);
    CHECK(read_csv(in) == sample_rows());
    std::filesystem::remove_all(dir);

    // A regular file where the directory should be.
    auto const blocker = std::filesystem::temp_directory_path() / "progevo_report_blocker";
    std::ofstream(blocker) << "x";
    CHECK_THROWS_WITH_AS(emit_report(sample_rows(), SweepAxis::ProblemSize, blocker, "order"),
                         doctest::Contains("cannot write"), std::runtime_error);
    std::filesystem::remove(blocker);
}
