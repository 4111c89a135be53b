#include "olapcube/chart.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <utility>
#include <vector>

#include "olapcube/errors.hpp"

namespace olapcube {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kPlotLeft = 70.0;
constexpr double kPlotRight = 620.0;
constexpr double kPlotTop = 30.0;
constexpr double kPlotBottom = 430.0;
constexpr double kLegendX = 640.0;
constexpr double kLegendY = 40.0;
constexpr double kLegendStep = 22.0;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

}  // namespace

std::string render_chart(const PivotReport& report) {
    if (report.axis_values.empty()) {
        throw DomainError("chart needs at least one axis value");
    }

    // Geometry order: series sorted by (dimension, value) pairs with the
    // dimensions themselves sorted, so pivot display order cannot move or
    // recolor a line.
    std::vector<std::size_t> order(report.series.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::vector<std::pair<std::string, std::string>>> keys(report.series.size());
    for (std::size_t s = 0; s < report.series.size(); ++s) {
        for (std::size_t i = 0; i < report.series[s].pivot_values.size(); ++i) {
            keys[s].emplace_back(report.view.pivots[i], report.series[s].pivot_values[i]);
        }
        std::sort(keys[s].begin(), keys[s].end());
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    Measure max_value = 0;
    for (const auto& s : report.series) {
        for (const auto& c : s.cells) {
            if (c.has_value()) max_value = std::max(max_value, *c);
        }
    }
    const double y_max = max_value == 0 ? 1.0 : static_cast<double>(max_value);

    const std::size_t ticks = report.axis_values.size();
    auto x_at = [&](std::size_t i) {
        if (ticks == 1) return (kPlotLeft + kPlotRight) / 2.0;
        return kPlotLeft + (kPlotRight - kPlotLeft) * static_cast<double>(i) /
                               static_cast<double>(ticks - 1);
    };
    auto y_at = [&](double value) {
        return kPlotBottom - (kPlotBottom - kPlotTop) * value / y_max;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kWidth) +
           "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) +
           "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
           "\" fill=\"white\"/>\n";

    // Axes and horizontal gridlines with value labels.
    svg += "  <line x1=\"" + fmt(kPlotLeft) + "\" y1=\"" + fmt(kPlotTop) + "\" x2=\"" +
           fmt(kPlotLeft) + "\" y2=\"" + fmt(kPlotBottom) + "\" stroke=\"black\"/>\n";
    svg += "  <line x1=\"" + fmt(kPlotLeft) + "\" y1=\"" + fmt(kPlotBottom) + "\" x2=\"" +
           fmt(kPlotRight) + "\" y2=\"" + fmt(kPlotBottom) + "\" stroke=\"black\"/>\n";
    for (int g = 0; g <= 4; ++g) {
        const double value = y_max * g / 4.0;
        const double y = y_at(value);
        if (g > 0) {
            svg += "  <line x1=\"" + fmt(kPlotLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
                   fmt(kPlotRight) + "\" y2=\"" + fmt(y) + "\" stroke=\"#dddddd\"/>\n";
        }
        char label[32];
        std::snprintf(label, sizeof(label), "%g", value);
        svg += "  <text class=\"ytick\" x=\"" + fmt(kPlotLeft - 8.0) + "\" y=\"" + fmt(y + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\">" + label + "</text>\n";
    }

    // Axis value labels and the axis name.
    for (std::size_t i = 0; i < ticks; ++i) {
        svg += "  <text class=\"xtick\" x=\"" + fmt(x_at(i)) + "\" y=\"" + fmt(kPlotBottom + 18.0) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + escape_xml(report.axis_values[i]) +
               "</text>\n";
    }
    svg += "  <text class=\"xlabel\" x=\"" + fmt((kPlotLeft + kPlotRight) / 2.0) + "\" y=\"" +
           fmt(kPlotBottom + 40.0) + "\" font-size=\"13\" text-anchor=\"middle\">" +
           escape_xml(report.view.horizontal) + "</text>\n";

    // One polyline per series, absent cells as 0.
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const Series& series = report.series[order[rank]];
        const char* color = kPalette[rank % kPalette.size()];
        std::string points;
        for (std::size_t i = 0; i < ticks; ++i) {
            if (i > 0) points += ' ';
            const double value =
                series.cells[i].has_value() ? static_cast<double>(*series.cells[i]) : 0.0;
            points += fmt(x_at(i)) + "," + fmt(y_at(value));
        }
        svg += "  <polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    }

    // Legend: swatch plus label per series, in geometry order.
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const Series& series = report.series[order[rank]];
        const char* color = kPalette[rank % kPalette.size()];
        const double y = kLegendY + kLegendStep * static_cast<double>(rank);
        svg += "  <line x1=\"" + fmt(kLegendX) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kLegendX + 24.0) + "\" y2=\"" + fmt(y) + "\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\"/>\n";
        const std::string label = series.label.empty() ? report.measure : series.label;
        svg += "  <text class=\"legend\" x=\"" + fmt(kLegendX + 30.0) + "\" y=\"" + fmt(y + 4.0) +
               "\" font-size=\"12\">" + escape_xml(label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace olapcube
