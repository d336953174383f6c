#include <doctest.h>

#include "coklab/matrix.hpp"
#include "coklab/sampling.hpp"

using namespace coklab;

namespace {

ModMatrix sym(std::size_t n, std::uint64_t mod, std::initializer_list<std::int64_t> rows) {
  IntMatrix m(n, MatrixKind::Symmetric);
  std::size_t i = 0;
  for (auto v : rows) m.a[i++] = v;
  return reduce_mod(m, mod);
}

}  // namespace

TEST_CASE("reduce_mod validates the declared shape") {
  IntMatrix bad(2, MatrixKind::Symmetric);
  bad.at(0, 1) = 1;
  bad.at(1, 0) = 2;
  CHECK_THROWS_AS(reduce_mod(bad, 9), std::domain_error);

  IntMatrix alt(2, MatrixKind::Alternating);
  alt.at(0, 1) = 4;
  alt.at(1, 0) = -4;
  ModMatrix a = reduce_mod(alt, 9);
  CHECK(a.at(1, 0) == 5);
  alt.at(0, 0) = 3;
  CHECK_THROWS_AS(reduce_mod(alt, 9), std::domain_error);
}

TEST_CASE("rank and submatrix") {
  ModMatrix m = sym(3, 5, {1, 2, 0, 2, 4, 0, 0, 0, 0});
  CHECK(rank_mod_p(m, 5) == 1);
  ModMatrix s = submatrix(m, {0, 1}, {0, 1});
  CHECK(s.n == 2);
  CHECK(s.at(1, 1) == 4);
  ModMatrix r = submatrix(m, {2}, {0, 1, 2});
  CHECK(r.a == std::vector<std::uint64_t>({0, 0, 0}));
}

TEST_CASE("schur complement") {
  ModMatrix m = sym(2, 9, {2, 1, 1, 2});
  ModMatrix s = schur_complement(m, {0});
  REQUIRE(s.n == 1);
  // 2 - 1 * inv(2) * 1 = 2 - 5 = 6 mod 9
  CHECK(s.at(0, 0) == 6);
}

TEST_CASE("invertible principal minor matches rank") {
  Prf prf{12345};
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (std::uint64_t idx = 0; idx < 40; ++idx) {
      for (MatrixKind k : {MatrixKind::Symmetric, MatrixKind::Alternating}) {
        ModMatrix m = sample_uniform_mod(6, k, p, prf, idx * 7 + p);
        auto piv = find_invertible_principal_minor(m, p);
        CHECK(piv.size() == rank_mod_p(m, p));
        if (!piv.empty()) {
          ModMatrix blk = submatrix(m, piv, piv);
          blk.kind = MatrixKind::General;
          CHECK(rank_mod_p(blk, p) == piv.size());
        }
        CHECK(std::is_sorted(piv.begin(), piv.end()));
      }
    }
  }
  ModMatrix z(4, 3, MatrixKind::Symmetric);
  CHECK(find_invertible_principal_minor(z, 3).empty());
}

TEST_CASE("inverse_mod") {
  for (std::uint64_t mod : {8ull, 9ull, 45ull}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ModMatrix u = random_invertible(4, mod, seed);
      ModMatrix inv = inverse_mod(u);
      ModMatrix prod(4, mod, MatrixKind::General);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t t = 0; t < 4; ++t) acc = (acc + u.at(i, t) * inv.at(t, j)) % mod;
          prod.at(i, j) = acc;
        }
      CHECK(prod.a == ModMatrix::identity(4, mod).a);
    }
  }
  ModMatrix sing(2, 4, MatrixKind::General);
  sing.at(0, 0) = 2;
  sing.at(1, 1) = 1;
  CHECK_THROWS_AS(inverse_mod(sing), NonUnitError);
}

TEST_CASE("congruence and border") {
  ModMatrix m = sym(2, 9, {1, 0, 0, 3});
  ModMatrix u = ModMatrix::identity(2, 9);
  CHECK(congruence_apply(u, m) == m);

  ModMatrix b = border(m, {2, 5}, 7);
  REQUIRE(b.n == 3);
  CHECK(b.kind == MatrixKind::Symmetric);
  CHECK(b.at(0, 2) == 2);
  CHECK(b.at(2, 1) == 5);
  CHECK(b.at(2, 2) == 7);

  ModMatrix a(2, 9, MatrixKind::Alternating);
  a.at(0, 1) = 1;
  a.at(1, 0) = 8;
  ModMatrix ab = border(a, {4, 0}, 5);
  REQUIRE(ab.n == 3);
  CHECK(ab.at(0, 2) == 4);
  CHECK(ab.at(2, 0) == 5);  // -4 mod 9
  CHECK(ab.at(2, 2) == 0);
}

TEST_CASE("random_invertible is invertible per prime") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ModMatrix u = random_invertible(5, 12, seed);
    CHECK(rank_mod_p(u, 2) == 5);
    CHECK(rank_mod_p(u, 3) == 5);
  }
}

TEST_CASE("bounded reduction stays in range") {
  for (std::uint64_t r : {0ull, 1ull, ~0ull, 0x8000000000000000ull})
    CHECK(bounded(r, 7) < 7);
}
