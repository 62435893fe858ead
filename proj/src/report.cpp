#include <syncline/report.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace syncline {

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string format_si_seconds(double seconds) {
    if (std::isinf(seconds)) {
        return "inf";
    }
    if (seconds == 0.0) {
        return "0 s";
    }
    struct Prefix {
        const char* unit;
        double scale;
    };
    // Units restricted to the report set {s, ms, us}; values below 1 us keep
    // the us unit with a sub-unity mantissa.
    static constexpr Prefix prefixes[] = {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}};
    const Prefix* chosen = &prefixes[2];
    for (const auto& p : prefixes) {
        if (std::abs(seconds) >= p.scale) {
            chosen = &p;
            break;
        }
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4g %s", seconds / chosen->scale,
                  chosen->unit);
    return buffer;
}

namespace {

void check_rectangular(const ReportTable& table) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("ReportTable: ragged row");
        }
    }
}

} // namespace

std::string render_text(const ReportTable& table) {
    check_rectangular(table);
    std::vector<std::size_t> widths(table.columns.size(), 0);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        widths[c] = table.columns[c].size();
        for (const auto& row : table.rows) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    if (!table.caption.empty()) {
        out << table.caption << "\n";
    }
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c == 0 ? "" : "  ");
            out << cells[c];
            out << std::string(widths[c] - cells[c].size(), ' ');
        }
        out << "\n";
    };
    emit_row(table.columns);
    std::size_t total = 0;
    for (std::size_t c = 0; c < widths.size(); ++c) {
        total += widths[c] + (c == 0 ? 0 : 2);
    }
    out << std::string(total, '-') << "\n";
    for (const auto& row : table.rows) {
        emit_row(row);
    }
    return out.str();
}

std::string render_csv(const ReportTable& table) {
    check_rectangular(table);
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c != 0) {
                out << ',';
            }
            out << cells[c];
        }
        out << '\n';
    };
    emit_row(table.columns);
    for (const auto& row : table.rows) {
        emit_row(row);
    }
    return out.str();
}

std::string curve_csv(const SynclineCurve& curve) {
    std::ostringstream out;
    out << "tau_s,delta_m,sync_accuracy_per_s,est_accuracy_per_m\n";
    for (const auto& s : curve.samples) {
        out << format_double(s.tau_s) << ',' << format_double(s.delta_m) << ','
            << format_double(s.sync_accuracy_per_s) << ','
            << format_double(s.est_accuracy_per_m) << '\n';
    }
    return out.str();
}

std::string run_csv(const RunResult& result) {
    std::ostringstream out;
    out << "tau_s,worst_case_error_m,syncline_prediction_m,ratio\n";
    for (const auto& row : result.rows) {
        out << format_double(row.tau_s) << ','
            << format_double(row.worst_case_error_m) << ','
            << format_double(row.prediction_m) << ','
            << format_double(row.ratio) << '\n';
    }
    return out.str();
}

// =============================================================================
// SVG
// =============================================================================

namespace {

struct Frame {
    double left = 80, right = 30, top = 48, bottom = 64;
    double width = 860, height = 600;
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1; // log10 data bounds

    double x_px(double log_x) const {
        return left + (log_x - x_min) / (x_max - x_min) *
                          (width - left - right);
    }
    double y_px(double log_y) const {
        return top + (y_max - log_y) / (y_max - y_min) *
                         (height - top - bottom);
    }
};

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

void decade_labels(std::ostringstream& svg, const Frame& f) {
    for (int k = static_cast<int>(std::ceil(f.x_min));
         k <= static_cast<int>(std::floor(f.x_max)); ++k) {
        const double x = f.x_px(k);
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.top) << "\" x2=\""
            << num(x) << "\" y2=\"" << num(f.height - f.bottom)
            << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\""
            << num(f.height - f.bottom + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">1e" << k
            << "</text>\n";
    }
    for (int k = static_cast<int>(std::ceil(f.y_min));
         k <= static_cast<int>(std::floor(f.y_max)); ++k) {
        const double y = f.y_px(k);
        svg << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(y)
            << "\" x2=\"" << num(f.width - f.right) << "\" y2=\"" << num(y)
            << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << num(f.left - 8) << "\" y=\"" << num(y + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">1e" << k << "</text>\n";
    }
}

} // namespace

std::string curve_svg(const SynclineCurve& curve, const std::string& title) {
    if (curve.samples.size() < 2) {
        throw std::invalid_argument("curve_svg: need at least two samples");
    }
    Frame f;
    f.x_min = std::log10(curve.samples.back().sync_accuracy_per_s);
    f.x_max = std::log10(curve.samples.front().sync_accuracy_per_s);
    double y_lo = kInfinity, y_hi = -kInfinity;
    for (const auto& s : curve.samples) {
        if (s.est_accuracy_per_m > 0 && std::isfinite(s.est_accuracy_per_m)) {
            y_lo = std::min(y_lo, std::log10(s.est_accuracy_per_m));
            y_hi = std::max(y_hi, std::log10(s.est_accuracy_per_m));
        }
    }
    if (!std::isfinite(y_lo)) {
        y_lo = 0;
        y_hi = 1;
    }
    if (y_hi - y_lo < 0.5) {
        y_hi = y_lo + 0.5;
    }
    f.y_min = y_lo - 0.2;
    f.y_max = y_hi + 0.2;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width
        << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width << " "
        << f.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(f.width / 2)
        << "\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">" << title
        << "</text>\n";
    decade_labels(svg, f);

    // axes
    svg << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top)
        << "\" width=\"" << num(f.width - f.left - f.right) << "\" height=\""
        << num(f.height - f.top - f.bottom)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(f.width / 2) << "\" y=\"" << num(f.height - 16)
        << "\" font-size=\"13\" text-anchor=\"middle\">"
        << "Synchronization accuracy 1/tau [1/s]</text>\n";
    svg << "<text x=\"20\" y=\"" << num(f.height / 2)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "20 "
        << num(f.height / 2) << ")\">Estimation accuracy [1/m]</text>\n";

    svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
           "points=\"";
    for (const auto& s : curve.samples) {
        const double y = std::isfinite(s.est_accuracy_per_m) && s.est_accuracy_per_m > 0
                             ? std::log10(s.est_accuracy_per_m)
                             : f.y_max;
        svg << num(f.x_px(std::log10(s.sync_accuracy_per_s))) << ","
            << num(f.y_px(std::clamp(y, f.y_min, f.y_max))) << " ";
    }
    svg << "\"/>\n";

    if (std::isfinite(curve.roof_per_m)) {
        const double y = f.y_px(std::log10(curve.roof_per_m));
        svg << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(y)
            << "\" x2=\"" << num(f.width - f.right) << "\" y2=\"" << num(y)
            << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>\n";
        svg << "<text x=\"" << num(f.left + 8) << "\" y=\"" << num(y - 6)
            << "\" font-size=\"12\" fill=\"#d62728\">roof = "
            << format_double(curve.roof_per_m) << " 1/m</text>\n";
    }
    if (std::isfinite(curve.tau_crit_s) && curve.tau_crit_s > 0.0) {
        const double log_x = std::log10(1.0 / curve.tau_crit_s);
        if (log_x >= f.x_min && log_x <= f.x_max) {
            const double x = f.x_px(log_x);
            svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.top)
                << "\" x2=\"" << num(x) << "\" y2=\""
                << num(f.height - f.bottom)
                << "\" stroke=\"#2ca02c\" stroke-dasharray=\"6 4\"/>\n";
            svg << "<text x=\"" << num(x + 6) << "\" y=\"" << num(f.top + 16)
                << "\" font-size=\"12\" fill=\"#2ca02c\">tau_crit = "
                << format_si_seconds(curve.tau_crit_s) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace syncline
