#include "coklab/limits.hpp"

#include <cmath>
#include <sstream>

namespace coklab {

double product_sym(std::uint64_t p, int terms) {
  double r = 1.0;
  for (int k = 1; k <= terms; ++k) r *= 1.0 - std::pow(static_cast<double>(p), 1.0 - 2.0 * k);
  return r;
}

double product_alt_odd(std::uint64_t p, int terms) {
  double r = 1.0;
  for (int k = 1; k <= terms; ++k) r *= 1.0 - std::pow(static_cast<double>(p), -1.0 - 2.0 * k);
  return r;
}

double nu_inf_sym(std::uint64_t p, int corank) {
  double d = 1.0;
  for (int i = 1; i <= corank; ++i) d *= std::pow(static_cast<double>(p), i) - 1.0;
  return product_sym(p) / d;
}

double nu_inf_alt_even(std::uint64_t p, int corank) {
  if (corank % 2 != 0) return 0.0;
  double d = 1.0;
  for (int i = 1; i <= corank; ++i) d *= std::pow(static_cast<double>(p), i) - 1.0;
  return product_sym(p) * std::pow(static_cast<double>(p), corank) / d;
}

double nu_inf_alt_odd(std::uint64_t p, int corank) {
  if (corank % 2 != 1) return 0.0;
  double d = 1.0;
  for (int i = 1; i <= corank; ++i) d *= std::pow(static_cast<double>(p), i) - 1.0;
  return product_sym(p) * std::pow(static_cast<double>(p), corank) / d;
}

double mu_inf_local(const PairedClassKey& key, const ClassifyBudget& budget) {
  if (!key.determinate) throw Indeterminate("mu_inf_local: undetermined key");
  if (key.kind == KeyKind::Alt) {
    double sp = static_cast<double>(sp_count(key.lambda, key.p, budget));
    GroupType h;
    h.lambda = key.lambda;
    double horder = static_cast<double>(h.order(key.p));
    if (key.parity_odd) return product_alt_odd(key.p) / sp;
    return horder * horder / sp * product_sym(key.p);
  }
  PairingGram g = gram_from_key(key);
  double aut = static_cast<double>(aut_count_paired(g, budget));
  return product_sym(key.p) / (static_cast<double>(g.group_order()) * aut);
}

double DistributionTable::prob(const std::string& key) const {
  auto it = counts.find(key);
  if (it == counts.end() || samples == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(samples);
}

void DistributionTable::merge(const DistributionTable& o) {
  for (const auto& [k, c] : o.counts) counts[k] += c;
  samples += o.samples;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream os;
  os << "key,probability,count\n";
  for (const auto& [k, c] : counts)  // keys may contain commas, so quote them
    os << '"' << k << "\"," << (samples ? static_cast<double>(c) / samples : 0.0) << "," << c
       << "\n";
  return os.str();
}

double l_distance(const DistributionTable& a, const DistributionTable& b, double q) {
  std::map<std::string, double> diff;
  for (const auto& [k, c] : a.counts) diff[k] = a.prob(k);
  for (const auto& [k, c] : b.counts) diff[k] -= b.prob(k);
  double s = 0.0;
  for (const auto& [k, d] : diff) s += std::pow(std::fabs(d), q);
  return std::pow(s, 1.0 / q);
}

double l_distance(const DistributionTable& a, const std::map<std::string, double>& ref,
                  double q) {
  std::map<std::string, double> diff;
  for (const auto& [k, c] : a.counts) diff[k] = a.prob(k);
  for (const auto& [k, v] : ref) diff[k] -= v;
  double s = 0.0;
  for (const auto& [k, d] : diff) s += std::pow(std::fabs(d), q);
  return std::pow(s, 1.0 / q);
}

Modulus modulus_for(const std::vector<std::uint64_t>& primes, unsigned depth_cap,
                    MatrixKind kind) {
  std::uint64_t a = 1;
  for (std::uint64_t p : primes) {
    unsigned e = depth_cap + ((kind == MatrixKind::Symmetric && p == 2) ? 3 : 1);
    a *= pow_u64(p, e);
  }
  return factorize(a);
}

}  // namespace coklab
