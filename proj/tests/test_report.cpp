#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <syncline/report.hpp>

#include <stdexcept>

using namespace syncline;

TEST_CASE("format_si_seconds picks the unit with mantissa in [1, 1000)") {
    CHECK(format_si_seconds(0.5196152422706631) == "519.6 ms");
    CHECK(format_si_seconds(6.703296e-5) == "67.03 us");
    CHECK(format_si_seconds(1.5) == "1.5 s");
    CHECK(format_si_seconds(0.0) == "0 s");
    CHECK(format_si_seconds(kInfinity) == "inf");
    CHECK(format_si_seconds(5e-7) == "0.5 us"); // below the smallest unit
}

TEST_CASE("table rendering") {
    ReportTable table;
    table.caption = "demo";
    table.columns = {"a", "b"};
    table.rows = {{"x", "1"}, {"yy", "22"}};
    const std::string text = render_text(table);
    CHECK(text.find("demo") != std::string::npos);
    CHECK(text.find("yy") != std::string::npos);
    CHECK(render_csv(table) == "a,b\nx,1\nyy,22\n");

    table.rows.push_back({"ragged"});
    CHECK_THROWS_AS(render_text(table), std::invalid_argument);
    CHECK_THROWS_AS(render_csv(table), std::invalid_argument);
}

TEST_CASE("curve and run CSV headers are pinned") {
    const SynclineCurve curve = sample_curve(ErrorBudget{10.0, 0.1}, 1e-3, 1.0, 3);
    const std::string csv = curve_csv(curve);
    CHECK(csv.rfind("tau_s,delta_m,sync_accuracy_per_s,est_accuracy_per_m\n", 0) ==
          0);

    RunResult result;
    result.rows.push_back({1e-3, 0.5, 0.6, 0.5 / 0.6});
    const std::string run_text = run_csv(result);
    CHECK(run_text.rfind("tau_s,worst_case_error_m,syncline_prediction_m,ratio\n",
                         0) == 0);
    CHECK(run_text.find("0.833333333333") != std::string::npos);
}

TEST_CASE("curve_svg produces a plot with annotations") {
    const SynclineCurve curve =
        sample_curve(ErrorBudget{45.097, 0.1}, 1e-7, 1.0, 24);
    const std::string svg = curve_svg(curve, "demo");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("tau_crit") != std::string::npos);
    CHECK(svg.find("roof") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    SynclineCurve tiny;
    tiny.samples.push_back({1e-3, 0.1, 1e3, 10.0});
    CHECK_THROWS_AS(curve_svg(tiny, "x"), std::invalid_argument);
}
