#include "xcmos/results.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace xcmos {

namespace {

void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// One CSV record, honoring quotes; handles embedded newlines by reading
// further lines from the stream.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string line;
    if (!std::getline(in, line)) return false;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (true) {
        if (i >= line.size()) {
            if (quoted) {
                std::string more;
                if (!std::getline(in, more)) break;
                line += '\n';
                line += more;
                continue;
            }
            break;
        }
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c == '\r') {
            // tolerate CRLF
        } else {
            field += c;
        }
        ++i;
    }
    fields.push_back(field);
    return true;
}

} // namespace

void ResultSet::sort() {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) {
                         if (a.benchmark != b.benchmark)
                             return a.benchmark < b.benchmark;
                         return a.device < b.device;
                     });
}

std::vector<std::string> ResultSet::metric_names() const {
    std::set<std::string> names;
    for (const auto& r : rows) {
        for (const auto& [k, v] : r.metrics) {
            (void)v;
            names.insert(k);
        }
    }
    return {names.begin(), names.end()};
}

std::string metric_unit(const std::string& name) {
    static const std::map<std::string, std::string> units{
        {"t_op", "s"},
        {"t_stage", "s"},
        {"E_op", "J"},
        {"E_dyn", "J"},
        {"E_leak", "J"},
        {"EDP", "J*s"},
        {"A_circ", "m^2"},
        {"p_density", "W/m^2"},
        {"p_cap", "W/m^2"},
        {"logic_depth", "1"},
        {"theta_unconstrained", "ops/(s*m^2)"},
        {"theta_capped", "ops/(s*m^2)"},
        {"theta_capped_pipelined", "ops/(s*m^2)"},
        {"limited_by", "1"},
        {"limited_by_pipelined", "1"},
        {"wire_delay", "s"},
        {"wire_energy", "J"},
        {"length", "m"},
        {"t_int", "s"},
        {"T_clk", "s"},
        {"l_max", "m"},
        {"n_gates", "1"},
        {"A_gate", "m^2"},
        {"pixel_accuracy", "1"},
        {"trials_recalled", "1"},
        {"settle_steps", "1"},
        {"settle_time_tau", "tau"},
        {"E_assoc", "J"},
        {"t_assoc", "s"},
        {"accuracy_pass", "1"},
        {"activity", "1"},
        {"noise_fraction", "1"},
        {"spin", "1"},
    };
    auto it = units.find(name);
    return it == units.end() ? "?" : it->second;
}

void emit_csv(const ResultSet& rs, std::ostream& out) {
    const auto names = rs.metric_names();
    out << "benchmark,device";
    for (const auto& n : names) {
        out << ',' << csv_quote(n + " (" + metric_unit(n) + ")");
    }
    out << ",note\n";
    for (const auto& r : rs.rows) {
        out << csv_quote(r.benchmark) << ',' << csv_quote(r.device);
        for (const auto& n : names) {
            out << ',';
            auto it = r.metrics.find(n);
            if (it != r.metrics.end()) {
                require(std::isfinite(it->second), Errc::Internal,
                        "non-finite value for metric '" + n + "' of device '" +
                            r.device + "'");
                out << format_double(it->second);
            }
        }
        out << ',' << csv_quote(r.note) << '\n';
    }
}

void emit_csv(const ResultSet& rs, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Errc::Internal, "cannot write '" + path + "'");
    emit_csv(rs, out);
}

ResultSet parse_csv(std::istream& in) {
    std::vector<std::string> header;
    require(read_record(in, header), Errc::Parse, "CSV is empty");
    require(header.size() >= 3 && header[0] == "benchmark" &&
                header[1] == "device" && header.back() == "note",
            Errc::Parse, "CSV header must be benchmark,device,...,note");

    std::vector<std::string> names;
    for (std::size_t i = 2; i + 1 < header.size(); ++i) {
        const std::string& h = header[i];
        const auto pos = h.rfind(" (");
        names.push_back(pos == std::string::npos ? h : h.substr(0, pos));
    }

    ResultSet rs;
    std::vector<std::string> fields;
    while (read_record(in, fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;
        require(fields.size() == header.size(), Errc::Parse,
                "CSV row has " + std::to_string(fields.size()) +
                    " fields, expected " + std::to_string(header.size()));
        ResultRow row;
        row.benchmark = fields[0];
        row.device = fields[1];
        for (std::size_t i = 0; i < names.size(); ++i) {
            const std::string& cell = fields[i + 2];
            if (cell.empty()) continue;
            row.metrics[names[i]] = std::stod(cell);
        }
        row.note = fields.back();
        rs.rows.push_back(std::move(row));
    }
    return rs;
}

ResultSet parse_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::Parse, "cannot open '" + path + "'");
    return parse_csv(in);
}

namespace {

struct LogAxis {
    double lo_decade = 0.0;
    double hi_decade = 1.0;

    double fraction(double v) const {
        const double d = std::log10(v);
        return (d - lo_decade) / (hi_decade - lo_decade);
    }
};

LogAxis fit_axis(const std::vector<double>& values) {
    LogAxis ax;
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (double v : values) {
        if (v <= 0.0) continue; // log scale can only carry positives
        const double d = std::log10(v);
        lo = any ? std::min(lo, d) : d;
        hi = any ? std::max(hi, d) : d;
        any = true;
    }
    if (!any) return ax;
    ax.lo_decade = std::floor(lo);
    ax.hi_decade = std::ceil(hi);
    if (ax.hi_decade <= ax.lo_decade) ax.hi_decade = ax.lo_decade + 1.0;
    return ax;
}

} // namespace

void emit_svg_scatter(const ResultSet& rs, const std::string& x_metric,
                      const std::string& y_metric, std::ostream& out) {
    const auto names = rs.metric_names();
    auto known = [&](const std::string& m) {
        return std::find(names.begin(), names.end(), m) != names.end();
    };
    if (!rs.rows.empty() && (!known(x_metric) || !known(y_metric))) {
        std::string avail;
        for (const auto& n : names) {
            if (!avail.empty()) avail += ", ";
            avail += n;
        }
        fail(Errc::UnknownMetric, "unknown metric '" +
                                      (known(x_metric) ? y_metric : x_metric) +
                                      "'; available: " + avail);
    }

    struct Point {
        double x, y;
        std::string label;
        bool spin;
    };
    std::vector<Point> pts;
    std::vector<double> xs, ys;
    for (const auto& r : rs.rows) {
        auto ix = r.metrics.find(x_metric);
        auto iy = r.metrics.find(y_metric);
        if (ix == r.metrics.end() || iy == r.metrics.end()) continue;
        auto is = r.metrics.find("spin");
        pts.push_back(Point{ix->second, iy->second, r.device,
                            is != r.metrics.end() && is->second > 0.5});
        xs.push_back(ix->second);
        ys.push_back(iy->second);
    }

    const double width = 800, height = 600;
    const double ml = 90, mr = 40, mt = 40, mb = 70;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const LogAxis xa = fit_axis(xs), ya = fit_axis(ys);

    auto px = [&](double v) { return ml + xa.fraction(v) * pw; };
    auto py = [&](double v) { return mt + (1.0 - ya.fraction(v)) * ph; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // decade gridlines and tick labels
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double d = xa.lo_decade; d <= xa.hi_decade + 0.5; d += 1.0) {
        const double x = ml + (d - xa.lo_decade) / (xa.hi_decade - xa.lo_decade) * pw;
        out << "<line x1=\"" << format_short(x) << "\" y1=\"" << mt
            << "\" x2=\"" << format_short(x) << "\" y2=\"" << mt + ph << "\"/>\n";
    }
    for (double d = ya.lo_decade; d <= ya.hi_decade + 0.5; d += 1.0) {
        const double y = mt + (1.0 - (d - ya.lo_decade) / (ya.hi_decade - ya.lo_decade)) * ph;
        out << "<line x1=\"" << ml << "\" y1=\"" << format_short(y)
            << "\" x2=\"" << ml + pw << "\" y2=\"" << format_short(y) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (double d = xa.lo_decade; d <= xa.hi_decade + 0.5; d += 1.0) {
        const double x = ml + (d - xa.lo_decade) / (xa.hi_decade - xa.lo_decade) * pw;
        out << "<text x=\"" << format_short(x) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\">1e" << static_cast<int>(d)
            << "</text>\n";
    }
    for (double d = ya.lo_decade; d <= ya.hi_decade + 0.5; d += 1.0) {
        const double y = mt + (1.0 - (d - ya.lo_decade) / (ya.hi_decade - ya.lo_decade)) * ph;
        out << "<text x=\"" << ml - 8 << "\" y=\"" << format_short(y + 4)
            << "\" text-anchor=\"end\">1e" << static_cast<int>(d) << "</text>\n";
    }
    out << "</g>\n";

    // axes frame and labels
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
        << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(x_metric + " (" + metric_unit(x_metric) + ")")
        << "</text>\n";
    out << "<text x=\"20\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\""
        << " transform=\"rotate(-90 20 " << mt + ph / 2 << ")\">"
        << xml_escape(y_metric + " (" + metric_unit(y_metric) + ")")
        << "</text>\n";

    // preferred corner: low-x, low-y
    {
        const double cx = ml + 14, cy = mt + ph - 14;
        out << "<path d=\"M " << format_short(cx) << " " << format_short(cy - 9);
        for (int i = 1; i < 10; ++i) {
            const double ang = -0.5 * std::numbers::pi + i * std::numbers::pi / 5.0;
            const double rr = (i % 2 == 0) ? 9.0 : 3.8;
            out << " L " << format_short(cx + rr * std::cos(ang)) << " "
                << format_short(cy + rr * std::sin(ang));
        }
        out << " Z\" fill=\"red\"/>\n";
        out << "<text x=\"" << format_short(cx + 14) << "\" y=\""
            << format_short(cy + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"red\">"
               "preferred corner</text>\n";
    }

    out << "<g font-family=\"sans-serif\" font-size=\"9\">\n";
    for (const auto& p : pts) {
        if (p.x <= 0.0 || p.y <= 0.0) continue;
        const double x = px(p.x), y = py(p.y);
        const char* color = p.spin ? "#c0392b" : "#2c5f8a";
        out << "<circle cx=\"" << format_short(x) << "\" cy=\""
            << format_short(y) << "\" r=\"4\" fill=\"" << color
            << "\" fill-opacity=\"0.8\"/>\n";
        out << "<text x=\"" << format_short(x + 6) << "\" y=\""
            << format_short(y - 4) << "\">" << xml_escape(p.label)
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
}

void emit_svg_scatter(const ResultSet& rs, const std::string& x_metric,
                      const std::string& y_metric, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Errc::Internal, "cannot write '" + path + "'");
    emit_svg_scatter(rs, x_metric, y_metric, out);
}

} // namespace xcmos
