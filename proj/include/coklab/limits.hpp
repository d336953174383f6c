#pragma once

#include <map>
#include <string>
#include <vector>

#include "coklab/cokernel.hpp"

namespace coklab {

// prod_{k=1..K} (1 - p^{1-2k}); also equals prod_{i>=0} (1 - p^{-(2i+1)})
double product_sym(std::uint64_t p, int terms = 60);
// prod_{k=1..K} (1 - p^{-1-2k})
double product_alt_odd(std::uint64_t p, int terms = 60);

// limit law of corank(M_n mod p), symmetric model
double nu_inf_sym(std::uint64_t p, int corank);
// alternating model, even sizes (corank 2k) and odd sizes (corank 2k+1)
double nu_inf_alt_even(std::uint64_t p, int corank);
double nu_inf_alt_odd(std::uint64_t p, int corank);

// limit mass of one determinate local class
double mu_inf_local(const PairedClassKey& key, const ClassifyBudget& budget = {});

struct DistributionTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t samples = 0;

  void add(const std::string& key, std::uint64_t c = 1) {
    counts[key] += c;
    samples += c;
  }
  double prob(const std::string& key) const;
  void merge(const DistributionTable& o);
  std::string to_csv() const;
};

double l_distance(const DistributionTable& a, const DistributionTable& b, double q = 1.0);
double l_distance(const DistributionTable& a, const std::map<std::string, double>& ref,
                  double q = 1.0);

// smallest modulus determining classes of depth <= depth_cap at the given primes
Modulus modulus_for(const std::vector<std::uint64_t>& primes, unsigned depth_cap,
                    MatrixKind kind);

}  // namespace coklab
