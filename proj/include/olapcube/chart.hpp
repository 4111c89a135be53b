#pragma once

#include <string>

#include "olapcube/report.hpp"

namespace olapcube {

// SVG 1.1 line chart: one polyline per series over evenly spaced axis
// ticks, plus a legend box. Absent cells plot as 0. Polyline order, colors
// and geometry depend only on the data, never on legend text, so reports
// that differ only in pivot display order render byte-identical charts
// apart from the legend labels. DomainError when the report has no axis
// values.
std::string render_chart(const PivotReport& report);

}  // namespace olapcube
