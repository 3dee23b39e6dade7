#include "progevo/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace progevo {

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw std::runtime_error("cannot format floating-point value");
    }
    return std::string(buf, ptr);
}

void write_csv(std::ostream& os, std::vector<SweepRow> const& rows)
{
    os << csv_header << '\n';
    for (auto const& r : rows) {
        os << to_string(r.algo) << ',' << (r.family == ProblemFamily::Order ? "order" : "trap") << ',' << r.l << ','
           << r.num_junk << ',' << (r.neg_join ? 1 : 0) << ',' << r.k << ',' << format_double(r.delta) << ','
           << r.max_depth << ',' << r.pop_size << ',' << format_double(r.avg_evaluations) << ','
           << format_double(r.success_rate) << ',' << r.seed_base << '\n';
    }
}

namespace {

template <class T>
T parse_field(std::string const& field, char const* name)
{
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::runtime_error(std::string("malformed CSV field ") + name + ": '" + field + "'");
    }
    return value;
}

} // namespace

std::vector<SweepRow> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != csv_header) {
        throw std::runtime_error("CSV header does not match the sweep schema");
    }
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            f.push_back(field);
        }
        if (f.size() != 12) {
            throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields, expected 12");
        }
        SweepRow r;
        auto algo = parse_algorithm(f[0]);
        if (!algo || (f[1] != "order" && f[1] != "trap")) {
            throw std::runtime_error("CSV row has unknown algorithm or problem: " + line);
        }
        r.algo = *algo;
        r.family = f[1] == "order" ? ProblemFamily::Order : ProblemFamily::Trap;
        r.l = parse_field<int>(f[2], "l");
        r.num_junk = parse_field<int>(f[3], "num_junk");
        r.neg_join = parse_field<int>(f[4], "neg_join") != 0;
        r.k = parse_field<int>(f[5], "k");
        r.delta = parse_field<double>(f[6], "delta");
        r.max_depth = parse_field<int>(f[7], "max_depth");
        r.pop_size = parse_field<int>(f[8], "pop_size");
        r.avg_evaluations = parse_field<double>(f[9], "avg_evaluations");
        r.success_rate = parse_field<double>(f[10], "success_rate");
        r.seed_base = parse_field<std::uint64_t>(f[11], "seed_base");
        rows.push_back(r);
    }
    return rows;
}

void write_svg(std::ostream& os, std::vector<SweepRow> const& rows, SweepAxis axis)
{
    constexpr double width = 640, height = 480;
    constexpr double left = 80, right = 150, top = 30, bottom = 60;
    constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
    static constexpr char const* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    // Depth joins the series key only when one algorithm has several rows at
    // the same x, as in the fixed-l junk sweep at two depths.
    bool split_by_depth = false;
    std::set<std::tuple<Algorithm, int, int>> seen;
    for (auto const& r : rows) {
        int const x = axis == SweepAxis::JunkCount ? r.num_junk : r.l;
        seen.emplace(r.algo, x, r.max_depth);
    }
    std::set<std::pair<Algorithm, int>> xs;
    for (auto const& [algo, x, depth] : seen) {
        split_by_depth = split_by_depth || !xs.emplace(algo, x).second;
    }
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (auto const& r : rows) {
        double const x = axis == SweepAxis::JunkCount ? r.num_junk : r.l;
        if (x <= 0 || r.avg_evaluations <= 0) {
            continue;
        }
        std::string key(to_string(r.algo));
        if (split_by_depth) {
            key += " depth " + std::to_string(r.max_depth);
        }
        series[key].emplace_back(std::log10(x), std::log10(r.avg_evaluations));
    }

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool any = false;
    for (auto const& [key, pts] : series) {
        for (auto const& [x, y] : pts) {
            if (!any) {
                x0 = x1 = x;
                y0 = y1 = y;
                any = true;
            }
            x0 = std::min(x0, x), x1 = std::max(x1, x);
            y0 = std::min(y0, y), y1 = std::max(y1, y);
        }
    }
    x0 = std::floor(x0 * 10) / 10, x1 = std::ceil(x1 * 10) / 10;
    y0 = std::floor(y0), y1 = std::ceil(y1);
    if (x1 <= x0) {
        x0 -= 0.1, x1 += 0.1;
    }
    if (y1 <= y0) {
        y1 = y0 + 1;
    }
    auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * plot_w; };
    auto sy = [&](double y) { return top + plot_h - (y - y0) / (y1 - y0) * plot_h; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
       << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double y = y0; y <= y1 + 1e-9; y += 1.0) {
        os << "<line x1=\"" << left - 4 << "\" y1=\"" << sy(y) << "\" x2=\"" << left << "\" y2=\"" << sy(y)
           << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << left - 8 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">1e" << y << "</text>\n";
    }
    std::set<double> xticks;
    for (auto const& r : rows) {
        double const x = axis == SweepAxis::JunkCount ? r.num_junk : r.l;
        if (x > 0) {
            xticks.insert(x);
        }
    }
    for (double const x : xticks) {
        double const lx = std::log10(x);
        os << "<line x1=\"" << sx(lx) << "\" y1=\"" << top + plot_h << "\" x2=\"" << sx(lx) << "\" y2=\""
           << top + plot_h + 4 << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << sx(lx) << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\">" << x
           << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
       << (axis == SweepAxis::JunkCount ? "number of junk terminals" : "problem size") << "</text>\n"
       << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << top + plot_h / 2 << ")\">fitness evaluations</text>\n";
    os << "</g>\n";

    std::size_t idx = 0;
    for (auto const& [key, pts] : series) {
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        auto const* color = colors[idx % std::size(colors)];
        os << "<polyline class=\"series\" data-series=\"" << key << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            os << (i ? " " : "") << sx(sorted[i].first) << ',' << sy(sorted[i].second);
        }
        os << "\"/>\n";
        for (auto const& [x, y] : sorted) {
            os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        double const ly = top + 20 + 18 * static_cast<double>(idx);
        os << "<line x1=\"" << width - right + 15 << "\" y1=\"" << ly << "\" x2=\"" << width - right + 40 << "\" y2=\""
           << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << width - right + 45 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << key << "</text>\n";
        ++idx;
    }
    os << "</svg>\n";
}

ReportFiles emit_report(std::vector<SweepRow> const& rows, SweepAxis axis, std::filesystem::path const& dir,
                        std::string const& stem)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    ReportFiles files{dir / (stem + ".csv"), dir / (stem + ".svg")};

    auto write = [](std::filesystem::path const& path, auto&& body) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        body(out);
        out.flush();
        if (!out) {
            throw std::runtime_error("failed while writing " + path.string());
        }
    };
    write(files.csv, [&](std::ostream& os) { write_csv(os, rows); });
    if (!rows.empty()) {
        write(files.svg, [&](std::ostream& os) { write_svg(os, rows, axis); });
    }
    return files;
}

} // namespace progevo
