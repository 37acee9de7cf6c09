#include <doctest.h>

#include <string>

#include "support/xml_check.hpp"
#include "tweetsent/svg_chart.hpp"

using namespace tweetsent;
using testsupport::is_well_formed_xml;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

ReportSet one_query_set(std::int64_t pos_h, std::int64_t neg_h,
                        std::int64_t neu_h, std::string query = "q") {
  ReportSet set("2017-11-11T00:00:00Z", "fixture-1");
  set.add(QueryReport::display_only(std::move(query),
                                    Pct2::from_hundredths(pos_h),
                                    Pct2::from_hundredths(neg_h),
                                    Pct2::from_hundredths(neu_h)));
  return set;
}

}  // namespace

TEST_CASE("one query draws exactly three bars") {
  std::string svg = render_chart(one_query_set(1639, 7213, 1147));
  CHECK(count_of(svg, "class=\"bar-positive\"") == 1);
  CHECK(count_of(svg, "class=\"bar-negative\"") == 1);
  CHECK(count_of(svg, "class=\"bar-neutral\"") == 1);
  CHECK(count_of(svg, "<rect class=\"bar-") == 3);

  std::string error;
  CHECK_MESSAGE(is_well_formed_xml(svg, &error), error);
}

TEST_CASE("six queries draw eighteen bars and six labels") {
  ReportSet set("t", "v");
  auto pct = [](std::int64_t h) { return Pct2::from_hundredths(h); };
  set.add(QueryReport::display_only("Movie", pct(5300), pct(1110), pct(3580)));
  set.add(QueryReport::display_only("politics", pct(2660), pct(1220), pct(6110)));
  set.add(QueryReport::display_only("fashion", pct(3880), pct(1330), pct(4770)));
  set.add(QueryReport::display_only("fake news", pct(1630), pct(7210), pct(1140)));
  set.add(QueryReport::display_only("Justice", pct(3520), pct(1590), pct(4880)));
  set.add(QueryReport::display_only("Humanity", pct(3690), pct(3330), pct(2970)));

  std::string svg = render_chart(set);
  CHECK(count_of(svg, "<rect class=\"bar-") == 18);
  CHECK(count_of(svg, "text-anchor=\"middle\"") == 6);
  CHECK(svg.find(">fake news</text>") != std::string::npos);

  std::string error;
  CHECK_MESSAGE(is_well_formed_xml(svg, &error), error);
}

TEST_CASE("bar heights scale linearly with the percentage") {
  // 50% : 25% : 25% must come out 2 : 1 : 1 in pixels.
  std::string svg = render_chart(one_query_set(5000, 2500, 2500));
  CHECK(count_of(svg, "height=\"200.00\"") == 1);
  CHECK(count_of(svg, "height=\"100.00\"") == 2);
  // Bars are anchored to the baseline at y = 430.
  CHECK(svg.find("y=\"230.00\"") != std::string::npos);
  CHECK(count_of(svg, "y=\"330.00\"") == 2);
}

TEST_CASE("a zero percentage still emits its bar") {
  std::string svg = render_chart(one_query_set(10000, 0, 0));
  CHECK(count_of(svg, "<rect class=\"bar-") == 3);
  CHECK(count_of(svg, "height=\"0.00\"") == 2);
  CHECK(count_of(svg, "height=\"400.00\"") == 1);
}

TEST_CASE("hundredths survive into the geometry") {
  // 11.47% of 400 px is 45.88 px; fractional pixels must not be rounded.
  std::string svg = render_chart(one_query_set(1639, 7213, 1147));
  CHECK(svg.find("height=\"45.88\"") != std::string::npos);
  CHECK(svg.find("height=\"65.56\"") != std::string::npos);
  CHECK(svg.find("height=\"288.52\"") != std::string::npos);
}

TEST_CASE("query text is escaped, output stays well formed") {
  std::string svg = render_chart(one_query_set(10000, 0, 0, "q<&>\"'x"));
  CHECK(svg.find("q&lt;&amp;&gt;&quot;&apos;x") != std::string::npos);
  CHECK(svg.find("q<&>") == std::string::npos);
  std::string error;
  CHECK_MESSAGE(is_well_formed_xml(svg, &error), error);
}

TEST_CASE("rendering is byte deterministic") {
  auto set = one_query_set(1639, 7213, 1147, "fake news");
  CHECK(render_chart(set) == render_chart(set));
}

TEST_CASE("empty set still renders axes and legend") {
  ReportSet set("t", "v");
  std::string svg = render_chart(set);
  CHECK(count_of(svg, "<rect class=\"bar-") == 0);
  CHECK(count_of(svg, "class=\"swatch-") == 3);
  CHECK(count_of(svg, "class=\"axis\"") == 2);
  std::string error;
  CHECK_MESSAGE(is_well_formed_xml(svg, &error), error);
}

TEST_CASE("the svg declares its own size") {
  // Width grows by one group width plus gap per query.
  std::string one = render_chart(one_query_set(100, 100, 9800));
  CHECK(one.find("width=\"324\"") != std::string::npos);
  CHECK(one.find("height=\"500\"") != std::string::npos);

  ReportSet two("t", "v");
  two.add(QueryReport::display_only("a", Pct2{}, Pct2{},
                                    Pct2::from_hundredths(10000)));
  two.add(QueryReport::display_only("b", Pct2::from_hundredths(10000),
                                    Pct2{}, Pct2{}));
  CHECK(render_chart(two).find("width=\"488\"") != std::string::npos);
}
