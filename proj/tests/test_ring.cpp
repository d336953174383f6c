#include <doctest.h>

#include "coklab/ring.hpp"

using namespace coklab;

TEST_CASE("factorize and primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));

  Modulus m = factorize(360);
  CHECK(m.a == 360);
  REQUIRE(m.factors.size() == 3);
  CHECK(m.factors[0].p == 2);
  CHECK(m.factors[0].e == 3);
  CHECK(m.factors[1].p == 3);
  CHECK(m.factors[1].e == 2);
  CHECK(m.factors[2].p == 5);
  CHECK(m.factors[2].e == 1);
  CHECK(m.factors[0].value() == 8);
}

TEST_CASE("valuation") {
  CHECK(val_p(0, 3, 4) == 4);
  CHECK(val_p(18 % 27, 3, 3) == 2);
  CHECK(val_p(12, 2, 5) == 2);
  CHECK(val_p(7, 7, 2) == 1);
  CHECK(val_p(1, 5, 3) == 0);
}

TEST_CASE("unit inverses") {
  CHECK(inverse_unit(3, 8) == 3);
  CHECK(inverse_unit(5, 9) == 2);
  CHECK(inverse_unit(2, 9) == 5);
  for (std::uint64_t x = 1; x < 27; ++x) {
    if (x % 3 == 0) {
      CHECK_FALSE(is_unit(x, 27));
      CHECK_THROWS_AS(inverse_unit(x, 27), NonUnitError);
    } else {
      CHECK(is_unit(x, 27));
      CHECK(x * inverse_unit(x, 27) % 27 == 1);
    }
  }
}

TEST_CASE("square classes") {
  // squares mod 7: 1, 2, 4
  CHECK(square_class_odd(1, 7) == 0);
  CHECK(square_class_odd(2, 7) == 0);
  CHECK(square_class_odd(4, 7) == 0);
  CHECK(square_class_odd(3, 7) == 1);
  CHECK(square_class_odd(5, 7) == 1);
  CHECK(square_class_odd(6, 7) == 1);
  // a unit mod p^e is decided by its residue mod p
  CHECK(square_class_odd(4 + 7, 7) == square_class_odd(4, 7));

  CHECK(square_class_two(3) == 3);
  CHECK(square_class_two(13) == 5);
  CHECK(square_class_two(17) == 1);

  CHECK(smallest_nonsquare_unit(3) == 2);
  CHECK(smallest_nonsquare_unit(5) == 2);
  CHECK(smallest_nonsquare_unit(7) == 3);
  CHECK(smallest_nonsquare_unit(11) == 2);
}

TEST_CASE("crt round trip") {
  Modulus m = factorize(36);
  for (std::uint64_t x = 0; x < 36; ++x) {
    auto parts = crt_split(x, m);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == x % 4);
    CHECK(parts[1] == x % 9);
    CHECK(crt_combine(parts, m) == x);
  }
}

TEST_CASE("mix64 is a bijection on small probes and deterministic") {
  CHECK(mix64(0xdeadbeef) == mix64(0xdeadbeef));
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(0) != 0);
}
