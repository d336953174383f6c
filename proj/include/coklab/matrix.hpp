#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coklab/ring.hpp"

namespace coklab {

enum class MatrixKind { Symmetric, Alternating, General };

// square integer matrix, row-major
struct IntMatrix {
  std::size_t n = 0;
  MatrixKind kind = MatrixKind::General;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::size_t n_, MatrixKind k) : n(n_), kind(k), a(n_ * n_, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// square matrix of least nonnegative residues mod `mod`
struct ModMatrix {
  std::size_t n = 0;
  std::uint64_t mod = 1;
  MatrixKind kind = MatrixKind::General;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::size_t n_, std::uint64_t mod_, MatrixKind k)
      : n(n_), mod(mod_), kind(k), a(n_ * n_, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  static ModMatrix identity(std::size_t n, std::uint64_t mod);
  bool operator==(const ModMatrix& o) const = default;
};

// validates the declared shape (symmetry / zero-diagonal antisymmetry)
ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t mod);
void check_shape(const ModMatrix& m);

ModMatrix submatrix(const ModMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);

unsigned rank_mod_p(const ModMatrix& m, std::uint64_t p);

// greedy pivot search mod p for symmetric/alternating matrices; returns sorted
// index set of an invertible principal minor of size rank(M mod p)
std::vector<std::size_t> find_invertible_principal_minor(const ModMatrix& m, std::uint64_t p);

// inverse of a matrix whose determinant is a unit mod m.mod; throws NonUnitError
ModMatrix inverse_mod(const ModMatrix& m);

// Schur complement M/I_c = M[I,I] - M[I,Ic] M[Ic,Ic]^{-1} M[Ic,I]
ModMatrix schur_complement(const ModMatrix& m, const std::vector<std::size_t>& pivot);

// U M U^T
ModMatrix congruence_apply(const ModMatrix& u, const ModMatrix& m);

// one exposure step: append row/column xi and corner z (z ignored for alternating)
ModMatrix border(const ModMatrix& m, const std::vector<std::uint64_t>& xi, std::uint64_t z);

ModMatrix random_invertible(std::size_t n, std::uint64_t mod, std::uint64_t seed);

// uniform residue from a 64-bit word, multiply-shift reduction
inline std::uint64_t bounded(std::uint64_t r, std::uint64_t bound) {
  return static_cast<std::uint64_t>(((__uint128_t)r * bound) >> 64);
}

}  // namespace coklab
