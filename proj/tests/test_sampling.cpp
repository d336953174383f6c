#include <doctest.h>

#include <cmath>

#include "coklab/sampling.hpp"

using namespace coklab;

TEST_CASE("distribution presets") {
  EntryDistribution b = EntryDistribution::preset("bernoulli:0.5");
  CHECK(b.support == std::vector<std::int64_t>({0, 1}));
  CHECK(b.probs[1] == doctest::Approx(0.5));
  CHECK(epsilon_of(b) == doctest::Approx(0.5));

  EntryDistribution u = EntryDistribution::preset("uniform:0..2");
  CHECK(u.support.size() == 3);
  CHECK(epsilon_of(u) == doctest::Approx(1.0 / 3.0));

  EntryDistribution r = EntryDistribution::preset("rademacher01");
  CHECK(r.probs == std::vector<double>({0.25, 0.5, 0.25}));
  CHECK(epsilon_of(r, {2}) == doctest::Approx(0.5));
  CHECK(epsilon_of(r, {3}) == doctest::Approx(0.5));

  CHECK_THROWS_AS(EntryDistribution::preset("bernoulli:1.5"), std::domain_error);
  CHECK_THROWS_AS(EntryDistribution::preset("nonsense"), std::domain_error);
  EntryDistribution bad;
  bad.support = {0, 1};
  bad.probs = {0.5};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("draw frequencies follow the law") {
  EntryDistribution d = EntryDistribution::preset("bernoulli:0.25");
  Prf prf{987654321};
  std::uint64_t ones = 0, total = 100000;
  for (std::uint64_t i = 0; i < total; ++i)
    if (draw(d, prf.at(i)) == 1) ++ones;
  CHECK(std::fabs(static_cast<double>(ones) / total - 0.25) < 0.01);
}

TEST_CASE("matrix sampling is shaped and reproducible") {
  EntryDistribution d = EntryDistribution::preset("rademacher01");
  Prf prf{42};
  IntMatrix m = sample_matrix(8, MatrixKind::Symmetric, d, prf, 5);
  IntMatrix m2 = sample_matrix(8, MatrixKind::Symmetric, d, prf, 5);
  CHECK(m.a == m2.a);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(m.at(i, j) == m.at(j, i));

  IntMatrix alt = sample_matrix(8, MatrixKind::Alternating, d, prf, 5);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(alt.at(i, i) == 0);
    for (std::size_t j = 0; j < 8; ++j) CHECK(alt.at(i, j) == -alt.at(j, i));
  }

  IntMatrix other = sample_matrix(8, MatrixKind::Symmetric, d, prf, 6);
  CHECK(m.a != other.a);
}

TEST_CASE("uniform residue sampling") {
  Prf prf{7};
  ModMatrix m = sample_uniform_mod(6, MatrixKind::Alternating, 9, prf, 0);
  CHECK_NOTHROW(check_shape(m));
  for (std::uint64_t v : m.a) CHECK(v < 9);
  // entries cover the range
  ModMatrix big = sample_uniform_mod(40, MatrixKind::Symmetric, 5, prf, 1);
  std::vector<bool> seen(5, false);
  for (std::uint64_t v : big.a) seen[v] = true;
  for (bool s : seen) CHECK(s);
}

TEST_CASE("prf path separation") {
  Prf a{1}, b{2};
  CHECK(a.at(0, 0, 0) != b.at(0, 0, 0));
  CHECK(a.at(1, 2, 3) != a.at(1, 3, 2));
  CHECK(a.at(1, 2, 3) == a.at(1, 2, 3));
}
