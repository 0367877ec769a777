#pragma once

#include <iosfwd>
#include <utility>

#include "definetti/partition.hpp"
#include "definetti/symfunc.hpp"
#include "definetti/werner.hpp"

namespace definetti {

struct CloudPoint {
  Rational x, y;
  std::string tag;    // provenance: source spectrum or partition
  std::string group;  // series the point belongs to
};

struct ProjectedCloud {
  int k = 0, d = 0;
  Partition coord1, coord2;  // block labels of the two plotted weights
  std::vector<CloudPoint> points;
};

// Canonicalized barycentric lattice of the ordered simplex: partitions of
// `resolution` into at most d parts, scaled by 1/resolution, reverse-lex order.
std::vector<Spectrum> simplex_grid(int d, int resolution);

// Twirled-product weights over the grid, projected onto two block coordinates.
ProjectedCloud fk_image(int k, int d, int resolution, const Partition& c1, const Partition& c2);

// Andrew monotone chain on exact coordinates; returns the hull
// counterclockwise from the lexicographically smallest vertex, collinear
// points dropped. Handles degenerate (point/segment) input.
std::vector<std::pair<Rational, Rational>> convex_hull_2d(
    std::vector<std::pair<Rational, Rational>> pts);

struct SpanTestResult {
  int rank = 0;       // dimension of span{f^k(x^1), ..., f^k(x^d)}
  bool escapes = false;  // some grid image lies outside that span
};

// Linear-span membership of grid images in the span of the d vertex images,
// all exact. escapes == true certifies the image is not contained in the
// vertex span, the polytope obstruction.
SpanTestResult polytope_span_test(int k, int d, int resolution);

// Directional derivative d * sum_{i<=q1} a_i^{d-1} - (d q1/(q2-q1)) *
// sum_{q1<i<=q2} a_i^{d-1} at a face point a (blocks of equal entries define
// q1 < q2). Positive for every non-vertex face point; the value is returned
// and positivity enforced.
Rational tangent_test(int k, int d, const Spectrum& a);

// Reduction coefficients of every block state at |la| = n, projected onto two
// block coordinates; group = first-row length of la.
ProjectedCloud striations_data(int n, int k, int d, const Partition& c1, const Partition& c2);

// One row per point, header x,y,tag,group, RFC 4180 quoting; floats only here.
void write_csv(std::ostream& os, const ProjectedCloud& cloud);
void write_hull_csv(std::ostream& os, const std::vector<std::pair<Rational, Rational>>& hull);

// Max Euclidean distance from cloud points to the hull (0 for inside points).
double max_hull_distance(const ProjectedCloud& cloud,
                         const std::vector<std::pair<Rational, Rational>>& hull);

}  // namespace definetti
