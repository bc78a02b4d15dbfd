#include "doctest.h"
#include "gen.hpp"

#include "wbinom/serialize.hpp"
#include "wbinom/suites.hpp"
#include "wbinom/svg.hpp"
#include "wbinom/wbinom.hpp"

using namespace wb;

TEST_CASE("polynomial json round trip") {
  auto p = wbinom(-1, 2);
  auto text = poly_json_string(p);
  CHECK(text == R"([{"coeff":"1","factors":[{"s":1,"t":0,"exp":-1},{"s":2,"t":-1,"exp":-1},{"s":2,"t":0,"exp":-1}]}])");
  CHECK(parse_poly_json(text) == p);
  CHECK(poly_json_string(WeightPolynomial()) == "[]");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto q = gen::polynomial(rng);
    auto s = poly_json_string(q);
    CHECK(poly_json_string(parse_poly_json(s)) == s);
    CHECK(parse_poly_json(s) == q);
  }
  for (int n = -4; n <= 4; ++n)
    for (int k = -4; k <= 4; ++k) {
      auto s = poly_json_string(wbinom(n, k));
      CHECK(poly_json_string(parse_poly_json(s)) == s);
    }
}

TEST_CASE("json parsing canonicalizes and rejects junk") {
  auto p = parse_poly_json(R"([{"coeff":"2","factors":[{"s":1,"t":1,"exp":1}]},{"coeff":-2,"factors":[{"s":1,"t":1,"exp":1}]}])");
  CHECK(p.is_zero());
  auto huge = parse_poly_json(R"([{"coeff":"123456789012345678901234567890","factors":[]}])");
  CHECK(poly_json_string(huge) == R"([{"coeff":"123456789012345678901234567890","factors":[]}])");
  CHECK_THROWS_AS(parse_poly_json("{"), parse_error);
  CHECK_THROWS_AS(parse_poly_json(R"({"coeff":"1"})"), parse_error);
  CHECK_THROWS_AS(parse_poly_json(R"([{"coeff":"x1","factors":[]}])"), parse_error);
  CHECK_THROWS_AS(parse_poly_json(R"([{"coeff":"1","factors":[{"s":1}]}])"), parse_error);
}

TEST_CASE("range syntax") {
  CHECK(parse_range("-4..4") == IntRange{-4, 4});
  CHECK(parse_range("3") == IntRange{3, 3});
  CHECK(parse_range("-3") == IntRange{-3, -3});
  CHECK_THROWS(parse_range("4..-4"));
  CHECK_THROWS(parse_range("a..b"));
  CHECK_THROWS(parse_range(""));
  CHECK_THROWS(parse_range("1..2x"));
}

TEST_CASE("small suites pass and are ordered") {
  for (const auto& name : suite_names()) {
    SuiteConfig c;
    c.suite = name;
    c.n = c.m = c.k = IntRange{-2, 2};
    if (name == "conv1" || name == "involution") c.k = IntRange{0, 3};
    c.span = 3;
    c.samples = 1;
    auto recs = run_suite(c);
    INFO(name);
    CHECK(!recs.empty());
    for (const auto& r : recs) {
      INFO(instance_key(r));
      CHECK(r.pass);
      CHECK(r.suite == name);
    }
    for (std::size_t i = 1; i < recs.size(); ++i)
      CHECK(std::tie(recs[i - 1].name, recs[i - 1].instance) <= std::tie(recs[i].name, recs[i].instance));
  }
  SuiteConfig bad;
  bad.suite = "nope";
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
}

TEST_CASE("report formats") {
  std::vector<SuiteRecord> recs{{"conv1", "conv1", {-2, 3, 2}, true, 0.0, "", ""},
                                {"elliptic", "ft_10v9", {0, 3}, false, 2.5e-3, "1+0i", "2+0i"}};
  auto csv = report_csv(recs);
  CHECK(csv == "suite,instance,pass,residual\nconv1,\"conv1(-2,3,2)\",true,0\nelliptic,\"ft_10v9(0,3)\",false,0.0025\n");
  auto doc = nlohmann::json::parse(report_json(recs));
  CHECK(doc["total"] == 2);
  CHECK(doc["failed"] == 1);
  CHECK(doc["records"][1]["lhs"] == "1+0i");
  CHECK(!doc["records"][0].contains("lhs"));
}

TEST_CASE("svg output") {
  auto fig = parse_path("E N E N E E");
  auto svg = render_svg(fig);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // one shaded rect per weight cell
  std::size_t rects = 0;
  for (auto pos = svg.find("fill-opacity"); pos != std::string::npos; pos = svg.find("fill-opacity", pos + 1)) ++rects;
  CHECK(rects == area_cells(fig).size());
  auto combo = render_svg(parse_path("S ES S ES"));
  CHECK(combo.find(" Q ") != std::string::npos);
  CHECK(combo.find("stroke-dasharray") != std::string::npos);
  auto grid = render_svg_grid(enumerate_paths(2, -4));
  std::size_t panels = 0;
  for (auto pos = grid.find("<path"); pos != std::string::npos; pos = grid.find("<path", pos + 1)) ++panels;
  CHECK(panels == 3);
  CHECK(render_svg_grid({}).find("</svg>") != std::string::npos);
}
