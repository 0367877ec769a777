#include "definetti/werner.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace definetti;

TEST_CASE("werner state validation") {
  WernerState w(2, 2, {frac(1, 4), frac(3, 4)});
  REQUIRE(w.index.size() == 2);
  CHECK(w.index[0] == Partition({2}));
  CHECK(w.index[1] == Partition({1, 1}));
  CHECK(w.weight(Partition({1, 1})) == frac(3, 4));
  CHECK_THROWS_AS(WernerState(2, 2, {frac(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(WernerState(2, 2, {frac(3, 4), frac(3, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(WernerState(2, 2, {frac(5, 4), frac(-1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(w.weight(Partition({3})), std::invalid_argument);

  WernerState pm = WernerState::point_mass(Partition({2}), 2, 3);
  CHECK(pm.weight(Partition({2})) == 1);
  CHECK(pm.weight(Partition({1, 1})) == 0);
}

TEST_CASE("json round trip is canonical") {
  WernerState w(3, 3, {frac(10, 27), frac(16, 27), frac(1, 27)});
  std::string text = werner_to_json(w);
  CHECK(text ==
        "{\"d\":3,\"k\":3,\"weights\":[{\"den\":\"27\",\"num\":\"10\",\"partition\":[3]},"
        "{\"den\":\"27\",\"num\":\"16\",\"partition\":[2,1]},"
        "{\"den\":\"27\",\"num\":\"1\",\"partition\":[1,1,1]}]}");
  WernerState back = werner_from_json(text);
  CHECK(back.k == 3);
  CHECK(back.d == 3);
  CHECK(back.weights == w.weights);
  CHECK_THROWS(werner_from_json("{\"k\":2}"));
}

TEST_CASE("twirl of product states hits the frozen vertices") {
  // Uniform rank-q spectra at k = 3, d = 3.
  WernerState v1 = twirled_product(simplex_vertex(1, 3), 3, 3);
  CHECK(v1.weights == std::vector<Rational>{1, 0, 0});
  WernerState v2 = twirled_product(simplex_vertex(2, 3), 3, 3);
  CHECK(v2.weights == std::vector<Rational>{frac(1, 2), frac(1, 2), 0});
  WernerState v3 = twirled_product(simplex_vertex(3, 3), 3, 3);
  CHECK(v3.weights == std::vector<Rational>{frac(10, 27), frac(16, 27), frac(1, 27)});
  CHECK_THROWS_AS(twirled_product(parse_spectrum("1/2,1/3"), 2, 2), std::invalid_argument);
}

TEST_CASE("partial trace of a two-row block") {
  WernerState got = partial_trace_coeffs_shifted(Partition({2, 1}), 3, 2, 3);
  CHECK(got.weight(Partition({2})) == frac(1, 2));
  CHECK(got.weight(Partition({1, 1})) == frac(1, 2));
  WernerState lr = partial_trace_coeffs_lr(Partition({2, 1}), 3, 2, 3);
  CHECK(lr.weights == got.weights);
  // Tracing down to nothing leaves the empty-shape point mass.
  WernerState none = partial_trace_coeffs_shifted(Partition({2, 1}), 3, 0, 3);
  CHECK(none.weights == std::vector<Rational>{1});
}

TEST_CASE("both reduction routes agree on a sweep") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : enumerate_partitions(n, 3))
      for (int k = 0; k <= n; ++k) {
        WernerState a = partial_trace_coeffs_shifted(la, n, k, 3);
        WernerState b = partial_trace_coeffs_lr(la, n, k, 3);
        CAPTURE(la.to_string());
        CAPTURE(k);
        CHECK(a.weights == b.weights);
      }
}

TEST_CASE("trace distance basics") {
  WernerState a(2, 2, {1, 0});
  WernerState b(2, 2, {frac(1, 4), frac(3, 4)});
  CHECK(trace_distance(a, b) == frac(3, 4));
  CHECK(trace_distance(a, a) == 0);
  WernerState c(3, 2, {frac(1, 2), frac(1, 2)});
  CHECK_THROWS_AS(trace_distance(a, c), std::invalid_argument);
}

TEST_CASE("distance to the best twirled product, two copies") {
  // Weight b on the antisymmetric block costs max(0, b - (1 - 1/d)/2).
  WernerState sep(2, 3, {frac(2, 3), frac(1, 3)});
  CHECK(distance_to_products_k2(sep) == 0);
  WernerState anti(2, 3, {0, 1});
  CHECK(distance_to_products_k2(anti) == frac(2, 3));
  WernerState mid(2, 2, {frac(1, 4), frac(3, 4)});
  CHECK(distance_to_products_k2(mid) == frac(1, 2));
  CHECK_THROWS_AS(distance_to_products_k2(WernerState(3, 2, {1, 0})), std::invalid_argument);
}

TEST_CASE("grid minimum brackets the closed form") {
  WernerState target(2, 2, {frac(1, 4), frac(3, 4)});
  Rational closed = distance_to_products_k2(target);
  for (int res : {40, 120}) {
    GridMinimum gm = min_distance_grid(target, res);
    CAPTURE(res);
    CHECK(gm.value >= closed);
    CHECK(gm.value <= closed + frac(2, res));
  }
  // Separable target is hit exactly once the grid contains its spectrum.
  GridMinimum exact = min_distance_grid(WernerState::point_mass(Partition({2}), 2, 2), 10);
  CHECK(exact.value == 0);
  CHECK(exact.argmin == simplex_vertex(1, 2));
}

TEST_CASE("block reduction distance against the balanced two-row family") {
  // la = (m,m): distance to the twirl at la/n is 3/(4(2m-1)).
  for (int m = 1; m <= 4; ++m) {
    Partition la = Partition::rectangle(2, m);
    BoundReport rep = definetti_bound_werner(la, 2 * m, 2);
    CAPTURE(m);
    CHECK(rep.exact_distance == frac(3, 4 * (2 * m - 1)));
    CHECK(rep.bound_value == frac(3, 2 * m));
    CHECK(rep.satisfied);
  }
  CHECK(definetti_bound_werner(Partition({2, 2}), 4, 2).exact_distance ==
        distance_to_twirled(Partition({2, 2}), 4, 2, parse_spectrum("1/2,1/2")));
}

TEST_CASE("exchange distance") {
  Spectrum half = parse_spectrum("1/2,1/2");
  CHECK(exchange_distance(half, 4, 4, 2) == 0);
  CHECK(exchange_distance(half, 4, 8, 2) == frac(1, 7));
  // Monotone decrease as both sizes grow.
  CHECK(exchange_distance(half, 8, 16, 2) < exchange_distance(half, 4, 8, 2));
  CHECK_THROWS_AS(exchange_distance(parse_spectrum("1/3,2/3"), 4, 8, 2),
                  std::invalid_argument);  // 4/3 is not an integer row
  CHECK_THROWS_AS(exchange_distance(half, 8, 4, 2), std::invalid_argument);
}

TEST_CASE("antisymmetric rectangular lower bound") {
  for (int d = 3; d <= 5; ++d)
    for (int m = 1; m <= 3; ++m) {
      BoundReport rep = lower_bound_antisym(d, m);
      long n = static_cast<long>(d) * m;
      CAPTURE(d);
      CAPTURE(m);
      CHECK(rep.bound_value == frac(d, 2 * (n - 1)) * (1 - frac(1, static_cast<long>(d) * d)));
      CHECK(rep.exact_distance == rep.bound_value);
      CHECK(rep.satisfied);
    }
  CHECK(lower_bound_antisym(3, 2).bound_value == frac(4, 15));
  CHECK_THROWS_AS(lower_bound_antisym(2, 1), std::invalid_argument);  // needs k < d
}

TEST_CASE("finite bound family values") {
  CHECK(eps_symmetric(100, 2, 2) == frac(2, 25));
  CHECK(eps_mixed(100, 2, 2) == frac(4, 25));
  CHECK(eps_classical(100, 2, 2) == frac(1, 100));  // pair term k(k-1)/(2n) wins
  CHECK(eps_classical(100, 4, 1) == frac(1, 25));   // dk/n wins at d = 1
  CHECK(eps_classical(6, 2, 3) == frac(1, 6));
  CHECK(eps_coherent(Partition({1}), Partition({1}), 2) == frac(2, 3));
  CHECK(eps_coherent(Partition(), Partition({1}), 3) == 0);
  CHECK_THROWS_AS(eps_symmetric(0, 1, 1), std::invalid_argument);
}

TEST_CASE("reduction composes like a semigroup") {
  // Reducing n -> k directly equals reducing n -> j then mixing j -> k.
  Partition la({3, 2, 1});
  int n = 6, j = 4, k = 2, d = 3;
  WernerState direct = partial_trace_coeffs_shifted(la, n, k, d);
  WernerState middle = partial_trace_coeffs_shifted(la, n, j, d);
  std::vector<Rational> mixed(direct.weights.size(), 0);
  for (size_t b = 0; b < middle.index.size(); ++b) {
    WernerState step = partial_trace_coeffs_shifted(middle.index[b], j, k, d);
    for (size_t a = 0; a < mixed.size(); ++a)
      mixed[a] += middle.weights[b] * step.weights[a];
  }
  CHECK(mixed == direct.weights);
}
