#include "coklab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coklab {

void EntryDistribution::validate() const {
  if (support.empty() || support.size() != probs.size())
    throw std::domain_error("entry distribution: support/probs mismatch");
  double s = 0.0;
  for (double q : probs) {
    if (q < 0.0) throw std::domain_error("entry distribution: negative probability");
    s += q;
  }
  if (std::fabs(s - 1.0) > 1e-9) throw std::domain_error("entry distribution: mass != 1");
}

EntryDistribution EntryDistribution::preset(const std::string& spec) {
  EntryDistribution d;
  d.name = spec;
  if (spec.rfind("bernoulli:", 0) == 0) {
    double q = std::stod(spec.substr(10));
    if (q <= 0.0 || q >= 1.0) throw std::domain_error("bernoulli parameter out of range");
    d.support = {0, 1};
    d.probs = {1.0 - q, q};
  } else if (spec.rfind("uniform:", 0) == 0) {
    std::string body = spec.substr(8);
    std::size_t dots = body.find("..");
    if (dots == std::string::npos) throw std::domain_error("uniform preset needs l..r");
    std::int64_t l = std::stoll(body.substr(0, dots));
    std::int64_t r = std::stoll(body.substr(dots + 2));
    if (r < l) throw std::domain_error("uniform preset needs l <= r");
    for (std::int64_t v = l; v <= r; ++v) {
      d.support.push_back(v);
      d.probs.push_back(1.0 / static_cast<double>(r - l + 1));
    }
  } else if (spec == "rademacher01") {
    d.support = {-1, 0, 1};
    d.probs = {0.25, 0.5, 0.25};
  } else {
    throw std::domain_error("unknown distribution preset: " + spec);
  }
  return d;
}

double epsilon_of(const EntryDistribution& d, const std::vector<std::uint64_t>& primes) {
  d.validate();
  double eps = 1.0;
  for (std::uint64_t p : primes) {
    std::vector<double> mass(p, 0.0);
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      std::int64_t r = d.support[i] % static_cast<std::int64_t>(p);
      if (r < 0) r += static_cast<std::int64_t>(p);
      mass[static_cast<std::size_t>(r)] += d.probs[i];
    }
    double mx = *std::max_element(mass.begin(), mass.end());
    eps = std::min(eps, 1.0 - mx);
  }
  return eps;
}

double epsilon_of(const EntryDistribution& d) {
  d.validate();
  std::int64_t lo = *std::min_element(d.support.begin(), d.support.end());
  std::int64_t hi = *std::max_element(d.support.begin(), d.support.end());
  std::uint64_t diameter = static_cast<std::uint64_t>(hi - lo);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= std::max<std::uint64_t>(2, diameter); ++p)
    if (is_prime(p)) primes.push_back(p);
  return epsilon_of(d, primes);
}

std::int64_t draw(const EntryDistribution& d, std::uint64_t word) {
  // inverse CDF against fixed-point thresholds; deterministic across platforms
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < d.support.size(); ++i) {
    acc += d.probs[i];
    std::uint64_t thr = static_cast<std::uint64_t>(acc * 18446744073709551615.0);
    if (word < thr) return d.support[i];
  }
  return d.support.back();
}

IntMatrix sample_matrix(std::size_t n, MatrixKind kind, const EntryDistribution& d,
                        const Prf& prf, std::uint64_t sample_index) {
  IntMatrix m(n, kind);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (kind == MatrixKind::Alternating && i == j) continue;
      std::int64_t v = draw(d, prf.at(sample_index, i, j));
      m.at(i, j) = v;
      if (i != j) m.at(j, i) = kind == MatrixKind::Alternating ? -v : v;
    }
  return m;
}

ModMatrix sample_uniform_mod(std::size_t n, MatrixKind kind, std::uint64_t mod, const Prf& prf,
                             std::uint64_t sample_index) {
  ModMatrix m(n, mod, kind);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (kind == MatrixKind::Alternating && i == j) continue;
      std::uint64_t v = bounded(prf.at(sample_index, i, j), mod);
      m.at(i, j) = v;
      if (i != j) m.at(j, i) = kind == MatrixKind::Alternating ? (mod - v) % mod : v;
    }
  return m;
}

}  // namespace coklab
