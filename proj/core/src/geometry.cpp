#include "definetti/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "definetti/util.hpp"

namespace definetti {

std::vector<Spectrum> simplex_grid(int d, int resolution) {
  if (d < 1 || resolution < 1) throw std::invalid_argument("simplex_grid: bad arguments");
  std::vector<Spectrum> out;
  for (const Partition& p : enumerate_partitions(resolution, d)) {
    Spectrum r(static_cast<size_t>(d), Rational(0));
    for (int i = 0; i < p.num_rows(); ++i) r[static_cast<size_t>(i)] = frac(p.row(i), resolution);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

size_t coord_pos(const std::vector<Partition>& index, const Partition& c, const char* who) {
  auto it = std::find(index.begin(), index.end(), c);
  if (it == index.end())
    throw std::invalid_argument(std::string(who) + ": coordinate not in Par(k,d)");
  return static_cast<size_t>(it - index.begin());
}

}  // namespace

ProjectedCloud fk_image(int k, int d, int resolution, const Partition& c1, const Partition& c2) {
  auto grid = simplex_grid(d, resolution);
  auto index = enumerate_partitions(k, d);
  size_t p1 = coord_pos(index, c1, "fk_image");
  size_t p2 = coord_pos(index, c2, "fk_image");
  ProjectedCloud cloud{k, d, c1, c2, {}};
  cloud.points.resize(grid.size());
  parallel_for(grid.size(), [&](size_t i) {
    WernerState w = twirled_product(grid[i], k, d);
    cloud.points[i] =
        CloudPoint{w.weights[p1], w.weights[p2], spectrum_str(grid[i]), "grid"};
  });
  return cloud;
}

namespace {

using Pt = std::pair<Rational, Rational>;

// Cross product sign of (b - a) x (c - a).
int orient(const Pt& a, const Pt& b, const Pt& c) {
  Rational v = (b.first - a.first) * (c.second - a.second) -
               (b.second - a.second) * (c.first - a.first);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

std::vector<Pt> convex_hull_2d(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Pt> hull(2 * n);
  size_t h = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (h >= 2 && orient(hull[h - 2], hull[h - 1], pts[i]) <= 0) h--;
    hull[h++] = pts[i];
  }
  size_t lower = h + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (h >= lower && orient(hull[h - 2], hull[h - 1], pts[i]) <= 0) h--;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);  // last point repeats the first
  if (hull.size() < 2) return {pts.front(), *std::max_element(pts.begin(), pts.end())};
  return hull;
}

SpanTestResult polytope_span_test(int k, int d, int resolution) {
  auto index = enumerate_partitions(k, d);
  RationalSpan span;
  for (int q = 1; q <= d; ++q) {
    WernerState w = twirled_product(simplex_vertex(q, d), k, d);
    span.insert(w.weights);
  }
  SpanTestResult res;
  res.rank = span.rank();
  for (const Spectrum& r : simplex_grid(d, resolution)) {
    WernerState w = twirled_product(r, k, d);
    if (!span.contains(w.weights)) {
      res.escapes = true;
      break;
    }
  }
  return res;
}

Rational tangent_test(int k, int d, const Spectrum& a) {
  if (k < 1 || d < 2) throw std::invalid_argument("tangent_test: need k >= 1, d >= 2");
  if (static_cast<int>(a.size()) != d)
    throw std::invalid_argument("tangent_test: point length must equal d");
  if (!is_state_spectrum(a)) throw std::invalid_argument("tangent_test: not a state spectrum");
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) throw std::invalid_argument("tangent_test: point must be nonincreasing");
  // Constant-value blocks of positive entries give the face decomposition
  // a = sum_i u_i x^{q_i}; a vertex has exactly one block and is rejected.
  std::vector<int> breaks;  // q_1 < q_2 < ...: ends of successive blocks
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) break;
    if (i + 1 == a.size() || a[i + 1] != a[i]) breaks.push_back(static_cast<int>(i) + 1);
  }
  if (breaks.empty()) throw std::invalid_argument("tangent_test: zero point");
  if (breaks.size() < 2) throw std::invalid_argument("tangent_test: point is a vertex");
  int q1 = breaks[0], q2 = breaks[1];
  auto powdm1 = [&](int i) {  // a_i^{d-1}
    Rational p = 1;
    for (int e = 0; e < d - 1; ++e) p *= a[static_cast<size_t>(i)];
    return p;
  };
  Rational first = 0, second = 0;
  for (int i = 0; i < q1; ++i) first += powdm1(i);
  for (int i = q1; i < q2; ++i) second += powdm1(i);
  Rational value = d * first - frac(static_cast<long>(d) * q1, q2 - q1) * second;
  if (!(value > 0)) throw std::logic_error("tangent_test: directional derivative not positive");
  return value;
}

ProjectedCloud striations_data(int n, int k, int d, const Partition& c1, const Partition& c2) {
  auto index = enumerate_partitions(k, d);
  size_t p1 = coord_pos(index, c1, "striations_data");
  size_t p2 = coord_pos(index, c2, "striations_data");
  auto blocks = enumerate_partitions(n, d);
  ProjectedCloud cloud{k, d, c1, c2, {}};
  cloud.points.resize(blocks.size());
  parallel_for(blocks.size(), [&](size_t i) {
    WernerState w = partial_trace_coeffs_shifted(blocks[i], n, k, d);
    cloud.points[i] = CloudPoint{w.weights[p1], w.weights[p2], blocks[i].to_string(),
                                 std::to_string(blocks[i].row(0))};
  });
  return cloud;
}

namespace {

std::string float_str(double v) {
  char buf[64];
  snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const ProjectedCloud& cloud) {
  os << "x,y,tag,group\n";
  for (const CloudPoint& p : cloud.points)
    os << float_str(to_double(p.x)) << ',' << float_str(to_double(p.y)) << ','
       << csv_quote(p.tag) << ',' << csv_quote(p.group) << '\n';
}

void write_hull_csv(std::ostream& os, const std::vector<Pt>& hull) {
  os << "x,y,tag,group\n";
  for (size_t i = 0; i < hull.size(); ++i)
    os << float_str(to_double(hull[i].first)) << ',' << float_str(to_double(hull[i].second))
       << ",hull," << i << '\n';
}

namespace {

double seg_distance(double px, double py, double ax, double ay, double bx, double by) {
  double vx = bx - ax, vy = by - ay;
  double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((px - ax) * vx + (py - ay) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double dx = px - (ax + t * vx), dy = py - (ay + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

double max_hull_distance(const ProjectedCloud& cloud, const std::vector<Pt>& hull) {
  if (hull.empty()) throw std::invalid_argument("max_hull_distance: empty hull");
  double worst = 0;
  for (const CloudPoint& p : cloud.points) {
    bool inside = hull.size() >= 3;
    for (size_t i = 0; inside && i < hull.size(); ++i) {
      const Pt& a = hull[i];
      const Pt& b = hull[(i + 1) % hull.size()];
      Rational cross = (b.first - a.first) * (p.y - a.second) -
                       (b.second - a.second) * (p.x - a.first);
      if (cross < 0) inside = false;  // hull is counterclockwise
    }
    if (inside) continue;
    double px = to_double(p.x), py = to_double(p.y);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < hull.size(); ++i) {
      const Pt& a = hull[i];
      const Pt& b = hull[(i + 1) % hull.size()];
      best = std::min(best, seg_distance(px, py, to_double(a.first), to_double(a.second),
                                         to_double(b.first), to_double(b.second)));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace definetti
