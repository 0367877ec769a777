#include "definetti/partition.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace definetti;

TEST_CASE("enumeration order is reverse-lexicographic") {
  auto p43 = enumerate_partitions(4, 3);
  REQUIRE(p43.size() == 4);
  CHECK(p43[0] == Partition({4}));
  CHECK(p43[1] == Partition({3, 1}));
  CHECK(p43[2] == Partition({2, 2}));
  CHECK(p43[3] == Partition({2, 1, 1}));

  auto p33 = enumerate_partitions(3, 3);
  REQUIRE(p33.size() == 3);
  CHECK(p33[0] == Partition({3}));
  CHECK(p33[1] == Partition({2, 1}));
  CHECK(p33[2] == Partition({1, 1, 1}));

  CHECK(enumerate_partitions(0, 2) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(5, 1) == std::vector<Partition>{Partition({5})});
}

TEST_CASE("partition counting against the closed totals") {
  CHECK(enumerate_partitions(8, 8).size() == 22);
  CHECK(enumerate_partitions(10, 5).size() == 30);  // striations point count
}

TEST_CASE("canonical form strips zeros and validates") {
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK(Partition({2, 1}).to_string() == "[2,1]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("0") == Partition());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("padded, contains, conjugate, dominates") {
  Partition la({3, 1});
  CHECK(la.padded(4) == std::vector<long>{3, 1, 0, 0});
  CHECK(la.contains(Partition({2, 1})));
  CHECK_FALSE(la.contains(Partition({1, 1, 1})));
  CHECK(la.conjugate() == Partition({2, 1, 1}));
  CHECK(la.conjugate().conjugate() == la);
  CHECK(Partition({4}).dominates(Partition({2, 2})));
  CHECK_FALSE(Partition({2, 2}).dominates(Partition({4})));
  CHECK_FALSE(Partition({3}).dominates(Partition({2, 2})));  // different totals
  CHECK(la.row_sum(Partition({1, 1})) == Partition({4, 2}));
}

TEST_CASE("hook-length dimension matches the frozen values and brute counts") {
  // dim V_(2,1) = 2 and dim U^3_(2,1) = 8 are the worked example values.
  CHECK(dim_sn(Partition({2, 1})) == 2);
  CHECK(dim_ud(Partition({2, 1}), 3) == 8);
  CHECK(dim_sn(Partition()) == 1);
  CHECK(dim_ud(Partition(), 3) == 1);
  CHECK(dim_ud(Partition({1, 1, 1}), 2) == 0);  // too tall

  for (int n = 0; n <= 6; ++n)
    for (const Partition& la : enumerate_partitions(n, n > 0 ? n : 1)) {
      CAPTURE(la.to_string());
      CHECK(dim_sn(la) == oracle::count_syt_brute(la));
    }
  for (int n = 0; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const Partition& la : enumerate_partitions(n, n > 0 ? n : 1)) {
        CAPTURE(la.to_string());
        CAPTURE(d);
        CHECK(dim_ud(la, d) == oracle::count_ssyt_brute(la, d));
      }
}

TEST_CASE("tableau validators") {
  SkewShape straight{Partition({2, 1})};
  Tableau good(straight, {{1, 2}, {2}});
  CHECK(good.is_semistandard());
  CHECK_FALSE(good.is_standard());
  Tableau syt(straight, {{1, 3}, {2}});
  CHECK(syt.is_standard());
  Tableau bad(straight, {{2, 1}, {3}});
  CHECK_FALSE(bad.is_semistandard());
  Tableau rev(straight, {{2, 2}, {1}});
  CHECK(rev.is_reverse());
  CHECK_FALSE(rev.is_semistandard());
}

TEST_CASE("skew shapes enforce containment") {
  CHECK_NOTHROW(SkewShape(Partition({3, 1}), Partition({1})));
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), std::invalid_argument);
  SkewShape sk(Partition({3, 1}), Partition({1}));
  CHECK(sk.num_cells() == 3);
  CHECK_FALSE(sk.cell_present(0, 0));
  CHECK(sk.cell_present(0, 1));
  CHECK(sk.cell_present(1, 0));
}

TEST_CASE("enumeration is deterministic and complete") {
  SkewShape shape{Partition({2, 1})};
  auto list = enumerate_ssyt(shape, 2);
  REQUIRE(list.size() == 2);  // dim U^2_(2,1) = 2
  // Row-major backtracking emits the smallest filling first.
  CHECK(list[0].entry(0, 0) == 1);
  CHECK(list[0].entry(0, 1) == 1);
  CHECK(list[0].entry(1, 0) == 2);
  CHECK(list[1].entry(0, 1) == 2);
  CHECK(enumerate_reverse(shape, 2).size() == 2);

  SkewShape skew(Partition({3, 1}), Partition({1}));
  CHECK(enumerate_ssyt(skew, 2).size() == enumerate_reverse(skew, 2).size());
}

TEST_CASE("skew standard counts match a hand-expanded case") {
  // (3,1)/(1): cells (0,1),(0,2),(1,0); the column constraint never binds,
  // row cells must increase, so the count is C(3,1) choices for the lone
  // row-1 cell = 3.
  CHECK(dim_skew(SkewShape(Partition({3, 1}), Partition({1}))) == 3);
  CHECK(dim_skew(SkewShape(Partition({2, 1}))) == dim_sn(Partition({2, 1})));
  CHECK(dim_skew(SkewShape(Partition({3, 2}), Partition({3, 2}))) == 1);  // empty shape
}
