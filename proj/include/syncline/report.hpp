// Rendering: fixed-format CSV, plain-text tables and a minimal log-log SVG
// plot. All numeric formatting here is deterministic so machine outputs are
// byte-stable.
#pragma once

#include <syncline/model.hpp>
#include <syncline/simulate.hpp>

#include <string>
#include <vector>

namespace syncline {

struct ReportTable {
    std::string caption;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // rectangular
};

std::string render_text(const ReportTable& table);
std::string render_csv(const ReportTable& table);

/// printf-style "%.12g" with classic locale; used for every machine value.
std::string format_double(double v);

/// Seconds with an SI prefix chosen so the mantissa lands in [1, 1000):
/// "520 ms", "67.03 us", "1.5 s". Infinity renders as "inf".
std::string format_si_seconds(double seconds);

std::string curve_csv(const SynclineCurve& curve);
std::string run_csv(const RunResult& result);

/// Log-log estimation-accuracy vs synchronization-accuracy plot with decade
/// gridlines and tau_crit / roof annotations.
std::string curve_svg(const SynclineCurve& curve, const std::string& title);

} // namespace syncline
