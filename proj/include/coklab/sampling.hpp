#pragma once

#include <string>
#include <vector>

#include "coklab/matrix.hpp"

namespace coklab {

struct EntryDistribution {
  std::vector<std::int64_t> support;
  std::vector<double> probs;
  std::string name;  // preset spelling when constructed from one

  static EntryDistribution preset(const std::string& spec);
  void validate() const;
};

// min over primes p <= bound of (1 - max residue mass); primes beyond the
// support diameter contribute nothing new, so bound defaults from the support
double epsilon_of(const EntryDistribution& d);
double epsilon_of(const EntryDistribution& d, const std::vector<std::uint64_t>& primes);

// counter-based PRF; a draw is keyed by (master seed, path ids), so results
// are independent of threading and evaluation order
struct Prf {
  std::uint64_t master = 0;
  std::uint64_t at(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
    std::uint64_t h = mix64(master ^ 0x243f6a8885a308d3ULL);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return mix64(h ^ c);
  }
};

std::int64_t draw(const EntryDistribution& d, std::uint64_t word);

IntMatrix sample_matrix(std::size_t n, MatrixKind kind, const EntryDistribution& d,
                        const Prf& prf, std::uint64_t sample_index);

ModMatrix sample_uniform_mod(std::size_t n, MatrixKind kind, std::uint64_t mod, const Prf& prf,
                             std::uint64_t sample_index);

}  // namespace coklab
