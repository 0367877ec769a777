#include "definetti/symfunc.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace definetti;

namespace {

// Plain trapezoid quadrature on [0, 12]; the integrand decays like
// exp(-(1-a)u^2/2), so the truncated tail is far below the tolerance.
double phi_trapezoid(double a) {
  const int steps = 400000;
  const double hi = 12.0;
  const double h = hi / steps;
  auto f = [a](double u) {
    return std::abs(1.0 - std::sqrt(1.0 - a) * std::exp(a * u * u / 2)) * std::exp(-u * u / 2);
  };
  double sum = 0.5 * (f(0.0) + f(hi));
  for (int i = 1; i < steps; ++i) sum += f(h * i);
  return sum * h / std::sqrt(2.0 * std::atan2(0.0, -1.0));  // even integrand: 2/(2 sqrt(2pi))
}

}  // namespace

TEST_CASE("spectrum parsing and validation") {
  Spectrum r = parse_spectrum("1/2,1/3,1/6");
  REQUIRE(r.size() == 3);
  CHECK(r[0] == frac(1, 2));
  CHECK(r[2] == frac(1, 6));
  CHECK(spectrum_str(r) == "1/2,1/3,1/6");
  CHECK(is_state_spectrum(r));
  CHECK_FALSE(is_state_spectrum(parse_spectrum("1/2,1/3")));
  CHECK_FALSE(is_state_spectrum(parse_spectrum("3/2,-1/2")));
  CHECK(canonical_spectrum(parse_spectrum("1/6,1/2,1/3")) == r);
  CHECK(simplex_vertex(2, 3) == parse_spectrum("1/2,1/2,0"));
  CHECK_THROWS_AS(parse_spectrum(""), std::invalid_argument);
  CHECK_THROWS_AS(simplex_vertex(4, 3), std::invalid_argument);
}

TEST_CASE("schur at the uniform point counts tableaux") {
  Spectrum u(3, frac(1, 3));
  CHECK(schur_eval(Partition({3}), u) == frac(10, 27));
  CHECK(schur_eval(Partition({2, 1}), u) == frac(8, 27));
  CHECK(schur_eval(Partition({1, 1, 1}), u) == frac(1, 27));
  CHECK(schur_eval(Partition({1, 1, 1}), Spectrum(2, frac(1, 2))) == 0);
  CHECK(schur_eval(Partition(), u) == 1);
}

TEST_CASE("schur matches the determinant oracle on random points") {
  std::vector<Spectrum> points = {
      parse_spectrum("1/2,1/3,1/6"), parse_spectrum("2,1,1/5"),
      parse_spectrum("1,-1/2,1/3"),  parse_spectrum("0,1/2,1/2"),
      parse_spectrum("3/7,2/7,2/7")};
  for (int k = 0; k <= 5; ++k)
    for (const Partition& mu : enumerate_partitions(k, 3))
      for (const auto& x : points) {
        CAPTURE(mu.to_string());
        CAPTURE(spectrum_str(x));
        CHECK(schur_eval(mu, x) == oracle::schur_jt(mu, x));
      }
}

TEST_CASE("schur symmetry and stability") {
  Partition mu({3, 1});
  Spectrum x = parse_spectrum("1/2,1/5,1/7");
  Spectrum y = parse_spectrum("1/7,1/2,1/5");
  CHECK(schur_eval(mu, x) == schur_eval(mu, y));
  Spectrum padded = x;
  padded.push_back(0);
  padded.push_back(0);
  CHECK(schur_eval(mu, padded) == schur_eval(mu, x));
}

TEST_CASE("shifted schur frozen values") {
  CHECK(shifted_schur_eval(Partition({2}), {2, 1}) == 3);
  CHECK(shifted_schur_eval(Partition({1, 1}), {1, 1}) == 2);
  CHECK(shifted_schur_eval(Partition({1, 1}), {2, 2}) == 6);
  CHECK(shifted_schur_eval(Partition(), {5, 2}) == 1);
  // Vanishing: zero on any partition point that does not contain mu.
  CHECK(shifted_schur_eval(Partition({2}), {1, 1}) == 0);
  CHECK(shifted_schur_eval(Partition({1, 1, 1}), {3, 2}) == 0);
  CHECK(shifted_schur_eval(Partition({2, 2}), {3, 1}) == 0);
}

TEST_CASE("shifted schur is stable but not symmetric") {
  Partition mu({2, 1});
  CHECK(shifted_schur_eval(mu, {3, 2}) == shifted_schur_eval(mu, {3, 2, 0, 0}));
  // Argument order matters: the point is consumed as given.
  CHECK(shifted_schur_eval(Partition({1, 1}), {2, 1}) == 3);
  CHECK(shifted_schur_eval(Partition({1, 1}), {1, 2}) == 4);
}

TEST_CASE("monomial sums over distinct permutations") {
  Spectrum x = parse_spectrum("1/2,1/3");
  CHECK(monomial_eval(Partition({2, 1}), x) == frac(1, 12) + frac(1, 18));
  CHECK(monomial_eval(Partition({2}), x) == frac(1, 4) + frac(1, 9));
  CHECK(monomial_eval(Partition({1, 1}), x) == frac(1, 6));
  CHECK(monomial_eval(Partition({1, 1, 1}), x) == 0);
  CHECK(monomial_eval(Partition(), x) == 1);
}

TEST_CASE("kostka matrix for two boxes in two variables") {
  KostkaMatrix km = kostka_matrix(2, 2);
  REQUIRE(km.index.size() == 2);
  CHECK(km.index[0] == Partition({2}));
  CHECK(km.index[1] == Partition({1, 1}));
  CHECK(km.kostka[0][0] == 1);
  CHECK(km.kostka[0][1] == 1);
  CHECK(km.kostka[1][0] == 0);
  CHECK(km.kostka[1][1] == 1);
  // m_(2) = s_(2) - s_(1,1); m_(1,1) = s_(1,1).
  CHECK(km.kappa(Partition({2}), Partition({2})) == 1);
  CHECK(km.kappa(Partition({1, 1}), Partition({2})) == -1);
  CHECK(km.kappa(Partition({2}), Partition({1, 1})) == 0);
  CHECK(km.kappa(Partition({1, 1}), Partition({1, 1})) == 1);
  CHECK_THROWS_AS(km.kappa(Partition({3}), Partition({2})), std::invalid_argument);
}

TEST_CASE("kostka transition reproduces monomials at a random point") {
  KostkaMatrix km = kostka_matrix(4, 3);
  Spectrum x = parse_spectrum("2/3,1/4,1/12");
  for (size_t m = 0; m < km.index.size(); ++m) {
    Rational sum = 0;
    for (size_t l = 0; l < km.index.size(); ++l)
      sum += km.kappa(km.index[l], km.index[m]) * schur_eval(km.index[l], x);
    CAPTURE(km.index[m].to_string());
    CHECK(sum == monomial_eval(km.index[m], x));
  }
}

TEST_CASE("df_phi matches a dense quadrature oracle") {
  for (const Rational& a : {frac(1, 10), frac(1, 4), frac(2, 5), frac(49, 100)}) {
    double got = df_phi(a);
    double want = phi_trapezoid(to_double(a));
    CAPTURE(to_double(a));
    CHECK(std::abs(got - want) < 1e-7);
  }
  CHECK(df_phi(frac(1, 4)) > 0.0);
  CHECK(df_phi(frac(1, 1000)) < df_phi(frac(1, 4)));
  CHECK_THROWS_AS(df_phi(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(df_phi(frac(1, 2)), std::domain_error);
  CHECK_THROWS_AS(df_phi(frac(-1, 3)), std::domain_error);
}
