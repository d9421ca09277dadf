#include <vector>

#include "doctest.h"
#include "harp/alias.hpp"

using namespace harp;

TEST_CASE("alias: empirical frequencies match weights (1,3)") {
  std::vector<double> w{1.0, 3.0};
  AliasTable table(w);
  Rng rng(99);
  const int draws = 100000;
  int count0 = 0;
  for (int i = 0; i < draws; ++i) {
    if (table.sample(rng) == 0) ++count0;
  }
  const double f0 = static_cast<double>(count0) / draws;
  CHECK(f0 == doctest::Approx(0.25).epsilon(0.04));  // +-0.01 absolute
  CHECK(std::abs(f0 - 0.25) < 0.01);
}

TEST_CASE("alias: table probabilities are exact") {
  std::vector<double> w{2.0, 5.0, 3.0};
  AliasTable table(w);
  CHECK(table.probability(0) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(table.probability(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(table.probability(2) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("alias: zero-weight entries are never drawn") {
  std::vector<double> w{0.0, 1.0, 0.0, 2.0};
  AliasTable table(w);
  Rng rng(3);
  for (int i = 0; i < 20000; ++i) {
    auto s = table.sample(rng);
    CHECK((s == 1 || s == 3));
  }
  CHECK(table.probability(0) == 0.0);
  CHECK(table.probability(2) == 0.0);
}

TEST_CASE("alias: deterministic under a fixed seed") {
  std::vector<double> w{1.0, 2.0, 3.0, 4.0};
  AliasTable table(w);
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(table.sample(a) == table.sample(b));
}

TEST_CASE("alias: rejects empty and negative weights") {
  CHECK_THROWS_AS(AliasTable(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(AliasTable(std::vector<double>{1.0, -1.0}), std::invalid_argument);
}
