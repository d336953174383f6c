#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coklab/matrix.hpp"
#include "coklab/sampling.hpp"

namespace coklab {

struct AuditParams {
  // asymptotic defaults; desk-scale runs override the absolute thresholds
  double corank_exponent = 2.0 / 3.0;       // corank(M mod p) <= n^exp
  double ibound_exponent = 0.75;            // #I_{xi,1} <= n^exp
  double weight_fraction = 0.01;            // violations need wt(xi) < fraction * n
  double window_fraction = 0.001;           // window rows j with j >= fraction * n
  double comb_weight_factor = 0.5;          // S2': weights >= factor * sqrt(n)
  double i2_exponent = 0.25;                // S2': |I2| <= n^exp, S1': corank <= n^exp

  std::optional<std::uint64_t> corank_bound;   // absolute overrides
  std::optional<std::uint64_t> ibound;
  std::optional<std::uint64_t> weight_bound;   // wt(xi) < weight_bound
  std::optional<std::size_t> window_start;     // first row index in window (0-based)
  std::optional<std::uint64_t> comb_weight_min;
  std::optional<std::size_t> i2_max;

  std::uint64_t budget = 100000000;
};

enum class AuditVerdict { PassExhaustive, PassSearch, Violated };

struct NonSparsityReport {
  std::string event;
  AuditVerdict verdict = AuditVerdict::PassExhaustive;
  bool pass() const { return verdict != AuditVerdict::Violated; }
  std::vector<std::uint64_t> witness;      // violating xi (mod p), when violated
  std::vector<std::size_t> witness_set;    // violating I2 for the 2-adic event
  std::string detail;
};

// S1 / A1: corank of M mod p is small
NonSparsityReport check_corank_event(const ModMatrix& m, std::uint64_t p,
                                     const AuditParams& params = {});

// S2 / A2: every low-weight xi has many non-orthogonal rows in the window;
// the window covers all rows for alternating matrices
NonSparsityReport check_orthogonality_event(const ModMatrix& m, std::uint64_t p,
                                            const AuditParams& params = {});

// S1': corank of M mod 2 is at most n^{1/4}
NonSparsityReport check_corank_event_2(const ModMatrix& m, const AuditParams& params = {});

// S2': for each small I2, the complement block is singular or all nonzero
// combinations of B^{-1}C columns and the inverse diagonal have large weight
NonSparsityReport check_sdagger(const ModMatrix& m, const AuditParams& params = {});

// number of leading principal minors of full rank mod p
unsigned principal_minor_census(const ModMatrix& m, std::uint64_t p);

struct CharBoundReport {
  double lhs = 0.0;  // |E e^{2 pi i z / a}|
  double rhs = 1.0;  // exp(-eps / a^2)
  double epsilon = 0.0;
  bool pass() const { return lhs <= rhs + 1e-12; }
};
CharBoundReport char_bound_check(const EntryDistribution& d, std::uint64_t a);

// p-ary entropy and Hamming volume
double entropy_p(std::uint64_t p, double x);
unsigned __int128 hamming_volume(std::uint64_t p, unsigned n, unsigned t);

struct HammingBoundReport {
  long double volume = 0;
  long double bound = 0;
  bool pass() const { return volume <= bound * (1.0L + 1e-12L); }
};
HammingBoundReport hamming_bound_check(std::uint64_t p, unsigned n, double x);

}  // namespace coklab
