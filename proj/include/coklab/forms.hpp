#pragma once

#include <string>
#include <vector>

#include "coklab/matrix.hpp"

namespace coklab {

// diag(p^lambda_i * eps_i) with lambda nondecreasing; entries with lambda == e
// are zero mod p^e and carry no unit class (eps stored as 0 there)
struct SymOddCanonical {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<unsigned> lambda;   // nondecreasing
  std::vector<int> eps;           // 0 = square class, 1 = nonsquare class
  bool capped = false;            // some lambda_i == e
  bool operator==(const SymOddCanonical&) const = default;
  std::string to_string() const;
};

// raw congruence-diagonalization part: scale and unit (unit known mod p^{e-d})
struct DiagPart {
  unsigned d = 0;
  std::uint64_t u = 0;  // 0 when d == e (zero entry)
};

// shared engine: W symmetric mod p^e, p odd; returns parts in extraction order
std::vector<DiagPart> sym_diagonalize_odd(const ModMatrix& m, std::uint64_t p, unsigned e);

SymOddCanonical canonical_sym_odd(const ModMatrix& m, std::uint64_t p, unsigned e);

struct TwoAdicBlock {
  enum class Shape { Unit, U, V };
  Shape shape = Shape::Unit;
  unsigned d = 0;
  unsigned u = 0;           // unit mod 8 for Shape::Unit, 0 otherwise
  std::uint64_t ufull = 0;  // unit mod 2^{e-d} for Shape::Unit
  bool operator==(const TwoAdicBlock&) const = default;
};

struct TwoAdicDecomposition {
  std::vector<TwoAdicBlock> blocks;  // sorted by (d, shape, u)
  std::size_t residual = 0;          // zero-block size mod 2^e
  bool incomplete = false;           // stopped early: pivot scale above e-3
  unsigned e = 0;
};

// strict=true throws InsufficientPrecision instead of setting incomplete
TwoAdicDecomposition decompose_sym_2(const ModMatrix& m, unsigned e, bool strict = true);

// merged-pairing block label (T1..T4 merge classes, otherwise shape-specific id)
std::string ti_class(const TwoAdicBlock& b);

struct AltCanonical {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<unsigned> lambda;  // block exponents, nonincreasing, values <= e-1
  std::size_t residual = 0;      // zero-block size mod p^e
  bool operator==(const AltCanonical&) const = default;
  std::string to_string() const;
};

AltCanonical canonical_alt(const ModMatrix& m, std::uint64_t p, unsigned e);

// do the 1x1 forms (alpha) and (alpha2) present the same cokernel pairing?
bool same_pairing_scalar(std::uint64_t alpha, std::uint64_t alpha2, std::uint64_t p, unsigned e);

// block diagonal sum diag(M, X); X must be invertible mod every prime of the modulus
ModMatrix pad_invertible(const ModMatrix& m, const ModMatrix& x);

}  // namespace coklab
