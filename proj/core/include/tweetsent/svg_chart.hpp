#pragma once

#include <string>

#include "tweetsent/report.hpp"

namespace tweetsent {

// Grouped bar chart: one group per query, three bars per group
// (positive, negative, neutral), y-axis 0 to 100 percent. Each bar is a
// <rect> with class "bar-positive" | "bar-negative" | "bar-neutral".
// Geometry is computed in integer hundredths of a pixel, so equal inputs
// render byte-identical valid XML.
std::string render_chart(const ReportSet& set);

}  // namespace tweetsent
