#include "definetti/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "definetti/util.hpp"
#include "doctest.h"

using namespace definetti;
using Pt = std::pair<Rational, Rational>;

TEST_CASE("simplex grid enumerates ordered spectra") {
  auto g = simplex_grid(2, 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == parse_spectrum("1,0"));
  CHECK(g[1] == parse_spectrum("1/2,1/2"));
  auto g3 = simplex_grid(3, 3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0] == parse_spectrum("1,0,0"));
  CHECK(g3[1] == parse_spectrum("2/3,1/3,0"));
  CHECK(g3[2] == parse_spectrum("1/3,1/3,1/3"));
  CHECK_THROWS_AS(simplex_grid(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(simplex_grid(2, 0), std::invalid_argument);
}

TEST_CASE("grid contains every uniform vertex at a common-multiple resolution") {
  auto g = simplex_grid(3, 6);  // 6 = lcm(1,2,3)
  for (int q = 1; q <= 3; ++q) {
    CAPTURE(q);
    CHECK(std::count(g.begin(), g.end(), simplex_vertex(q, 3)) == 1);
  }
}

TEST_CASE("projected image carries the frozen vertex weights") {
  ProjectedCloud cloud = fk_image(3, 3, 3, Partition({1, 1, 1}), Partition({2, 1}));
  REQUIRE(cloud.points.size() == 3);
  bool found = false;
  for (const CloudPoint& p : cloud.points) {
    CHECK(p.group == "grid");
    if (p.x == frac(1, 27) && p.y == frac(16, 27)) found = true;
  }
  CHECK(found);
  CHECK_THROWS_AS(fk_image(3, 3, 3, Partition({4}), Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("two-copy image is a segment") {
  ProjectedCloud cloud = fk_image(2, 3, 12, Partition({2}), Partition({1, 1}));
  std::vector<Pt> pts;
  for (const CloudPoint& p : cloud.points) {
    CHECK(p.x + p.y == 1);
    pts.emplace_back(p.x, p.y);
  }
  auto hull = convex_hull_2d(pts);
  REQUIRE(hull.size() == 2);
  // Antisymmetric weight spans [0, (1 - 1/d)/2]; endpoints in lex order.
  CHECK(hull[0] == Pt{frac(2, 3), frac(1, 3)});
  CHECK(hull[1] == Pt{Rational(1), Rational(0)});
}

TEST_CASE("convex hull handles degenerate input") {
  CHECK(convex_hull_2d({}).empty());
  CHECK(convex_hull_2d({Pt{1, 2}}).size() == 1);
  CHECK(convex_hull_2d({Pt{1, 2}, Pt{1, 2}}).size() == 1);
  auto seg = convex_hull_2d({Pt{0, 0}, Pt{2, 2}, Pt{1, 1}});
  REQUIRE(seg.size() == 2);
  CHECK(seg[0] == Pt{0, 0});
  CHECK(seg[1] == Pt{2, 2});
}

TEST_CASE("convex hull is counterclockwise with collinear points dropped") {
  std::vector<Pt> pts = {Pt{0, 0}, Pt{1, 0},
                         Pt{1, 1}, Pt{0, 1},
                         Pt{frac(1, 2), frac(1, 2)}, Pt{frac(1, 2), 0}};
  auto hull = convex_hull_2d(pts);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0] == Pt{0, 0});
  CHECK(hull[1] == Pt{1, 0});
  CHECK(hull[2] == Pt{1, 1});
  CHECK(hull[3] == Pt{0, 1});
}

TEST_CASE("span containment flips at four copies") {
  CHECK_FALSE(polytope_span_test(2, 2, 8).escapes);
  CHECK_FALSE(polytope_span_test(2, 3, 8).escapes);
  SpanTestResult r33 = polytope_span_test(3, 3, 8);
  CHECK_FALSE(r33.escapes);
  CHECK(r33.rank == 3);
  SpanTestResult r43 = polytope_span_test(4, 3, 24);
  CHECK(r43.escapes);
  CHECK(r43.rank == 3);
}

TEST_CASE("face tangent values and rejections") {
  CHECK(tangent_test(3, 3, parse_spectrum("3/4,1/4,0")) == frac(3, 2));
  CHECK(tangent_test(3, 3, parse_spectrum("2/3,1/6,1/6")) == frac(5, 4));
  CHECK(tangent_test(4, 5, parse_spectrum("3/4,1/4,0,0,0")) == frac(25, 16));
  CHECK_THROWS_AS(tangent_test(3, 3, parse_spectrum("1,0,0")), std::invalid_argument);
  CHECK_THROWS_AS(tangent_test(3, 3, parse_spectrum("1/3,1/3,1/3")), std::invalid_argument);
  CHECK_THROWS_AS(tangent_test(3, 3, parse_spectrum("1/4,3/4,0")), std::invalid_argument);
  CHECK_THROWS_AS(tangent_test(3, 3, parse_spectrum("1/2,1/2")), std::invalid_argument);
}

TEST_CASE("striations at n = k sit on the block corners") {
  ProjectedCloud cloud = striations_data(3, 3, 3, Partition({1, 1, 1}), Partition({2, 1}));
  REQUIRE(cloud.points.size() == 3);
  // Identity reduction: each block is its own point mass.
  for (const CloudPoint& p : cloud.points) {
    if (p.tag == "[3]") {
      CHECK(p.x == 0);
      CHECK(p.y == 0);
      CHECK(p.group == "3");
    }
    if (p.tag == "[2,1]") {
      CHECK(p.x == 0);
      CHECK(p.y == 1);
      CHECK(p.group == "2");
    }
    if (p.tag == "[1,1,1]") {
      CHECK(p.x == 1);
      CHECK(p.y == 0);
      CHECK(p.group == "1");
    }
  }
}

TEST_CASE("striations approach the image hull as the system count grows") {
  Partition c1({4}), c2({2, 2});
  ProjectedCloud image = fk_image(4, 5, 30, c1, c2);
  std::vector<Pt> pts;
  for (const CloudPoint& p : image.points) pts.emplace_back(p.x, p.y);
  auto hull = convex_hull_2d(pts);
  double d10 = max_hull_distance(striations_data(10, 4, 5, c1, c2), hull);
  double d60 = max_hull_distance(striations_data(60, 4, 5, c1, c2), hull);
  CHECK(d10 > 0.0);
  CHECK(d60 < d10);
  CHECK(max_hull_distance(image, hull) == 0.0);
}

TEST_CASE("csv quoting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("") == "");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("csv writers emit stable quoted rows") {
  ProjectedCloud cloud = fk_image(2, 2, 2, Partition({2}), Partition({1, 1}));
  std::ostringstream os;
  write_csv(os, cloud);
  CHECK(os.str() ==
        "x,y,tag,group\n"
        "1,0,\"1,0\",grid\n"
        "0.75,0.25,\"1/2,1/2\",grid\n");
  std::ostringstream hs;
  write_hull_csv(hs, {Pt{0, 0}, Pt{1, 0}});
  CHECK(hs.str() ==
        "x,y,tag,group\n"
        "0,0,hull,0\n"
        "1,0,hull,1\n");
}

TEST_CASE("hull distance measures escape") {
  std::vector<Pt> square = {Pt{0, 0}, Pt{1, 0}, Pt{1, 1}, Pt{0, 1}};
  ProjectedCloud cloud{2, 2, Partition({2}), Partition({1, 1}), {}};
  cloud.points.push_back(CloudPoint{Rational(2), Rational(0), "out", "g"});
  cloud.points.push_back(CloudPoint{frac(1, 2), frac(1, 2), "in", "g"});
  CHECK(max_hull_distance(cloud, square) == doctest::Approx(1.0));
  cloud.points.pop_back();
  cloud.points[0] = CloudPoint{frac(1, 2), frac(1, 2), "in", "g"};
  CHECK(max_hull_distance(cloud, square) == 0.0);
  CHECK_THROWS_AS(max_hull_distance(cloud, {}), std::invalid_argument);
}
