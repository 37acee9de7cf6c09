#include "tweetsent/svg_chart.hpp"

#include <cstdio>

namespace tweetsent {

namespace {

// Pixel layout; bar heights are percent-hundredths * 4 centi-pixels so
// 100.00% spans exactly the 400 px plot height.
constexpr long long kLeft = 100;
constexpr long long kTop = 30;
constexpr long long kPlotHeight = 400;
constexpr long long kBarWidth = 36;
constexpr long long kBarGap = 8;
constexpr long long kGroupWidth = 3 * kBarWidth + 2 * kBarGap;
constexpr long long kGroupGap = 40;
constexpr long long kBottom = 70;
constexpr long long kRight = 20;

std::string centi(long long value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", value / 100, value % 100);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void append_bar(std::string& out, const char* cls, long long x,
                std::int64_t pct_hundredths) {
  const long long height_centi = pct_hundredths * 4;
  const long long y_centi = (kTop + kPlotHeight) * 100 - height_centi;
  out += "  <rect class=\"" + std::string(cls) + "\" x=\"" +
         std::to_string(x) + "\" y=\"" + centi(y_centi) + "\" width=\"" +
         std::to_string(kBarWidth) + "\" height=\"" + centi(height_centi) +
         "\"/>\n";
}

}  // namespace

std::string render_chart(const ReportSet& set) {
  const long long groups = static_cast<long long>(set.reports().size());
  const long long width =
      kLeft + kGroupGap + groups * (kGroupWidth + kGroupGap) + kRight;
  const long long height = kTop + kPlotHeight + kBottom;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out +=
      "  <style>\n"
      "    .bar-positive, .swatch-positive { fill: #2e7d32; }\n"
      "    .bar-negative, .swatch-negative { fill: #c62828; }\n"
      "    .bar-neutral, .swatch-neutral { fill: #9e9e9e; }\n"
      "    .axis { stroke: #333333; stroke-width: 1; }\n"
      "    .grid { stroke: #dddddd; stroke-width: 1; }\n"
      "    text { font-family: sans-serif; font-size: 12px; fill: #333333; }\n"
      "  </style>\n";

  for (long long v = 0; v <= 100; v += 20) {
    const long long y = kTop + kPlotHeight - v * 4;
    if (v != 0)
      out += "  <line class=\"grid\" x1=\"" + std::to_string(kLeft) +
             "\" y1=\"" + std::to_string(y) + "\" x2=\"" +
             std::to_string(width - kRight) + "\" y2=\"" + std::to_string(y) +
             "\"/>\n";
    out += "  <text x=\"" + std::to_string(kLeft - 8) + "\" y=\"" +
           std::to_string(y + 4) + "\" text-anchor=\"end\">" +
           std::to_string(v) + "</text>\n";
  }
  out += "  <line class=\"axis\" x1=\"" + std::to_string(kLeft) + "\" y1=\"" +
         std::to_string(kTop) + "\" x2=\"" + std::to_string(kLeft) +
         "\" y2=\"" + std::to_string(kTop + kPlotHeight) + "\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + std::to_string(kLeft) + "\" y1=\"" +
         std::to_string(kTop + kPlotHeight) + "\" x2=\"" +
         std::to_string(width - kRight) + "\" y2=\"" +
         std::to_string(kTop + kPlotHeight) + "\"/>\n";

  long long group_x = kLeft + kGroupGap;
  for (const QueryReport& r : set.reports()) {
    append_bar(out, "bar-positive", group_x, r.positive_pct.hundredths());
    append_bar(out, "bar-negative", group_x + kBarWidth + kBarGap,
               r.negative_pct.hundredths());
    append_bar(out, "bar-neutral", group_x + 2 * (kBarWidth + kBarGap),
               r.neutral_pct.hundredths());
    out += "  <text x=\"" + std::to_string(group_x + kGroupWidth / 2) +
           "\" y=\"" + std::to_string(kTop + kPlotHeight + 20) +
           "\" text-anchor=\"middle\">" + xml_escape(r.query) + "</text>\n";
    group_x += kGroupWidth + kGroupGap;
  }

  const char* legend[][2] = {{"swatch-positive", "Positive"},
                             {"swatch-negative", "Negative"},
                             {"swatch-neutral", "Neutral"}};
  long long legend_x = kLeft;
  const long long legend_y = height - 24;
  for (const auto& [cls, label] : legend) {
    out += "  <rect class=\"" + std::string(cls) + "\" x=\"" +
           std::to_string(legend_x) + "\" y=\"" + std::to_string(legend_y) +
           "\" width=\"12\" height=\"12\"/>\n";
    out += "  <text x=\"" + std::to_string(legend_x + 18) + "\" y=\"" +
           std::to_string(legend_y + 11) + "\">" + label + "</text>\n";
    legend_x += 110;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tweetsent
