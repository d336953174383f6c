#pragma once

// independent brute-force oracles used only by tests

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "coklab/cokernel.hpp"
#include "coklab/matrix.hpp"

namespace oracles {

using namespace coklab;

// all invertible n x n matrices over Z/mod (small n and mod only)
inline std::vector<ModMatrix> all_invertible(std::size_t n, std::uint64_t mod) {
  Modulus f = factorize(mod);
  std::vector<ModMatrix> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= mod;
  for (std::uint64_t t = 0; t < total; ++t) {
    ModMatrix u(n, mod, MatrixKind::General);
    std::uint64_t x = t;
    for (std::size_t i = 0; i < n * n; ++i) {
      u.a[i] = x % mod;
      x /= mod;
    }
    bool ok = true;
    for (const auto& pp : f.factors)
      if (rank_mod_p(u, pp.p) != n) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(u));
  }
  return out;
}

// all symmetric n x n matrices over Z/mod
inline std::vector<ModMatrix> all_symmetric(std::size_t n, std::uint64_t mod) {
  std::vector<ModMatrix> out;
  std::size_t vars = n * (n + 1) / 2;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= mod;
  for (std::uint64_t t = 0; t < total; ++t) {
    ModMatrix m(n, mod, MatrixKind::Symmetric);
    std::uint64_t x = t;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m.at(i, j) = m.at(j, i) = x % mod;
        x /= mod;
      }
    out.push_back(std::move(m));
  }
  return out;
}

// brute-force congruence test: exists U in GL with U M U^T = M2
inline bool congruent_brute(const ModMatrix& m1, const ModMatrix& m2,
                            const std::vector<ModMatrix>& gl) {
  for (const auto& u : gl)
    if (congruence_apply(u, m1) == m2) return true;
  return false;
}

// |Aut(G)| for G = sum Z/p^{lambda_i} (Hillar-Rhea closed form)
inline std::uint64_t aut_group_order(std::vector<unsigned> lambda, std::uint64_t p) {
  std::sort(lambda.begin(), lambda.end());  // ascending e_1 <= ... <= e_n
  std::size_t n = lambda.size();
  if (n == 0) return 1;
  std::vector<std::size_t> dk(n), ck(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t d = k, c = k;
    for (std::size_t l = 0; l < n; ++l) {
      if (lambda[l] == lambda[k]) {
        d = std::max(d, l);
        c = std::min(c, l);
      }
    }
    dk[k] = d + 1;  // 1-based max index with equal exponent
    ck[k] = c + 1;  // 1-based min index
  }
  long double acc = 1.0L;
  for (std::size_t k = 0; k < n; ++k)
    acc *= std::pow((long double)p, (long double)dk[k]) -
           std::pow((long double)p, (long double)k);
  for (std::size_t j = 0; j < n; ++j)
    acc *= std::pow((long double)p, (long double)lambda[j] * (n - dk[j]));
  for (std::size_t i = 0; i < n; ++i)
    acc *= std::pow((long double)p, (long double)(lambda[i] - 1) * (n - ck[i] + 1));
  return static_cast<std::uint64_t>(acc + 0.5L);
}

// orbit of a scaled gram under Aut(G), via BFS with elementary generators
inline std::uint64_t gram_orbit_size(const PairingGram& g) {
  std::size_t k = g.k();
  if (k == 0) return 1;
  std::uint64_t p = g.p, vmod = g.value_mod();
  std::vector<std::uint64_t> ordmod(k);
  for (std::size_t i = 0; i < k; ++i) ordmod[i] = pow_u64(p, g.lambda[i]);

  // an automorphism given as coefficient matrix a[j][i] = coeff of g_j in phi(g_i)
  using Mat = std::vector<std::uint64_t>;  // k x k, entry (j,i) at j*k+i
  auto apply = [&](const Mat& a, const std::vector<std::uint64_t>& scaled) {
    std::vector<std::uint64_t> out(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        __uint128_t acc = 0;
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t t = 0; t < k; ++t)
            acc += (__uint128_t)(a[s * k + i] * a[t * k + j] % vmod) * scaled[s * k + t];
        out[i * k + j] = static_cast<std::uint64_t>(acc % vmod);
      }
    return out;
  };

  std::vector<Mat> gens;
  // transvections g_i -> g_i + p^{max(0, li - lj)} g_j
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      Mat a(k * k, 0);
      for (std::size_t t = 0; t < k; ++t) a[t * k + t] = 1;
      unsigned lo = g.lambda[j] > g.lambda[i] ? g.lambda[j] - g.lambda[i] : 0;
      a[j * k + i] = pow_u64(p, lo) % ordmod[j];
      gens.push_back(a);
    }
  // unit scalings of each generator
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> units;
    if (p == 2) {
      if (ordmod[i] > 2) units = {ordmod[i] - 1, 5 % ordmod[i]};
    } else {
      // a generator of (Z/p^l)^x: smallest primitive root mod p^l
      for (std::uint64_t u = 2; u < ordmod[i]; ++u) {
        if (u % p == 0) continue;
        // order check by brute force
        std::uint64_t x = u % ordmod[i], ord = 1;
        while (x != 1) {
          x = x * u % ordmod[i];
          ++ord;
        }
        std::uint64_t phi = ordmod[i] / p * (p - 1);
        if (ord == phi) {
          units = {u};
          break;
        }
      }
    }
    for (std::uint64_t u : units) {
      Mat a(k * k, 0);
      for (std::size_t t = 0; t < k; ++t) a[t * k + t] = 1;
      a[i * k + i] = u;
      gens.push_back(a);
    }
  }
  // swaps of generators with equal exponent
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.lambda[i] != g.lambda[j]) continue;
      Mat a(k * k, 0);
      for (std::size_t t = 0; t < k; ++t) a[t * k + t] = t == i || t == j ? 0 : 1;
      a[i * k + j] = a[j * k + i] = 1;
      gens.push_back(a);
    }

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> frontier{g.scaled};
  seen.insert(g.scaled);
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& s : frontier)
      for (const auto& a : gens) {
        auto ns = apply(a, s);
        if (seen.insert(ns).second) next.push_back(std::move(ns));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace oracles
