#include <doctest.h>

#include <cmath>

#include "coklab/audit.hpp"
#include "oracles.hpp"

using namespace coklab;

namespace {

AuditParams desk14() {
  // desk-scale thresholds for n around 14: weight-1 xi only, no tolerated
  // orthogonal window rows, window starts after the first row
  AuditParams p;
  p.weight_bound = 2;
  p.ibound = 0;
  p.window_start = 1;
  return p;
}

}  // namespace

TEST_CASE("corank events") {
  ModMatrix id = ModMatrix::identity(12, 2);
  id.kind = MatrixKind::Symmetric;
  CHECK(check_corank_event(id, 2).pass());

  ModMatrix zero(12, 2, MatrixKind::Symmetric);
  NonSparsityReport rep = check_corank_event(zero, 2);
  CHECK(rep.event == "S1");
  CHECK_FALSE(rep.pass());
  CHECK(rep.verdict == AuditVerdict::Violated);

  zero.kind = MatrixKind::Alternating;
  CHECK(check_corank_event(zero, 2).event == "A1");

  rep = check_corank_event_2(zero, {});
  CHECK(rep.event == "S1'");
  CHECK_FALSE(rep.pass());
}

TEST_CASE("orthogonality event flags sparse matrices with witnesses") {
  ModMatrix id = ModMatrix::identity(14, 2);
  id.kind = MatrixKind::Symmetric;
  NonSparsityReport rep = check_orthogonality_event(id, 2, desk14());
  CHECK(rep.event == "S2");
  REQUIRE_FALSE(rep.pass());
  // witness is a standard basis vector: orthogonal to every window row
  REQUIRE(rep.witness.size() == 14);
  unsigned wt = 0;
  for (auto v : rep.witness) wt += v != 0;
  CHECK(wt == 1);
  std::uint64_t dots = 0;
  for (std::size_t j = 1; j < 14; ++j) {
    std::uint64_t dot = 0;
    for (std::size_t t = 0; t < 14; ++t) dot = (dot + id.at(j, t) * rep.witness[t]) % 2;
    dots += dot != 0;
  }
  CHECK(dots == 0);

  // a dense symmetric sample passes
  Prf prf{2024};
  ModMatrix rnd = sample_uniform_mod(14, MatrixKind::Symmetric, 2, prf, 3);
  CHECK(check_orthogonality_event(rnd, 2, desk14()).pass());

  // alternating window covers every row, so the zero matrix is violated too
  ModMatrix zero(14, 2, MatrixKind::Alternating);
  rep = check_orthogonality_event(zero, 2, desk14());
  CHECK(rep.event == "A2");
  CHECK_FALSE(rep.pass());

  // the asymptotic default weight bound is degenerate at small n
  CHECK(check_orthogonality_event(id, 2).pass());
}

TEST_CASE("two-adic combination event") {
  ModMatrix id = ModMatrix::identity(16, 2);
  id.kind = MatrixKind::Symmetric;
  AuditParams params;
  params.comb_weight_min = 1;
  NonSparsityReport rep = check_sdagger(id, params);
  CHECK(rep.event == "S2'");
  // identity: any single I2 column of B^{-1}C is exactly zero
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.witness_set.empty());

  Prf prf{515};
  ModMatrix rnd = sample_uniform_mod(16, MatrixKind::Symmetric, 2, prf, 1);
  CHECK_NOTHROW(check_sdagger(rnd, params));

  ModMatrix big(65, 2, MatrixKind::Symmetric);
  CHECK_THROWS_AS(check_sdagger(big, params), BudgetExceeded);
}

TEST_CASE("principal minor census") {
  ModMatrix id = ModMatrix::identity(6, 3);
  CHECK(principal_minor_census(id, 3) == 6);
  ModMatrix m = id;
  m.at(0, 0) = 0;  // leading 1x1 minor singular, later ones recover
  m.at(0, 1) = m.at(1, 0) = 1;
  CHECK(principal_minor_census(m, 3) == 5);
  ModMatrix zero(6, 3, MatrixKind::Symmetric);
  CHECK(principal_minor_census(zero, 3) == 0);
}

TEST_CASE("character sum bound") {
  EntryDistribution u = EntryDistribution::preset("uniform:0..1");
  CharBoundReport rep = char_bound_check(u, 2);
  CHECK(rep.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.epsilon == doctest::Approx(0.5));
  CHECK(rep.pass());

  EntryDistribution b = EntryDistribution::preset("bernoulli:0.1");
  rep = char_bound_check(b, 4);
  CHECK(rep.pass());
  CHECK(rep.lhs < 1.0);
  CHECK_THROWS_AS(char_bound_check(b, 1), std::domain_error);
}

TEST_CASE("entropy and Hamming volume") {
  CHECK(entropy_p(2, 0.5) == doctest::Approx(1.0));
  CHECK(entropy_p(3, 2.0 / 3.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(entropy_p(2, 0.0), std::domain_error);

  CHECK(static_cast<std::uint64_t>(hamming_volume(2, 4, 1)) == 5);
  CHECK(static_cast<std::uint64_t>(hamming_volume(2, 4, 4)) == 16);
  CHECK(static_cast<std::uint64_t>(hamming_volume(3, 3, 1)) == 7);
  CHECK(static_cast<std::uint64_t>(hamming_volume(3, 3, 3)) == 27);

  HammingBoundReport h = hamming_bound_check(2, 10, 0.3);
  CHECK(h.volume == 176.0L);
  CHECK(h.pass());
  // the volume bound requires x <= (p-1)/p
  for (unsigned n = 4; n <= 64; n += 10)
    for (double x : {0.05, 0.1, 0.25, 0.4, 0.5}) CHECK(hamming_bound_check(2, n, x).pass());
}

TEST_CASE("zero diagonal of an invertible matrix passes to the inverse") {
  // exhaustive over invertible symmetric matrices mod 2, n <= 4
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : oracles::all_symmetric(n, 2)) {
      if (rank_mod_p(m, 2) != n) continue;
      ModMatrix inv = inverse_mod(m);
      bool diag_zero = true, inv_diag_zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, i)) diag_zero = false;
        if (inv.at(i, i)) inv_diag_zero = false;
      }
      CHECK(diag_zero == inv_diag_zero);
    }
  }
}
