#include "coklab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace coklab {

namespace {

std::uint64_t floor_pow(std::size_t n, double expo) {
  return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(n), expo) + 1e-9));
}

}  // namespace

NonSparsityReport check_corank_event(const ModMatrix& m, std::uint64_t p,
                                     const AuditParams& params) {
  NonSparsityReport rep;
  rep.event = m.kind == MatrixKind::Alternating ? "A1" : "S1";
  std::uint64_t bound = params.corank_bound.value_or(floor_pow(m.n, params.corank_exponent));
  unsigned corank = static_cast<unsigned>(m.n) - rank_mod_p(m, p);
  std::ostringstream os;
  os << "corank=" << corank << " bound=" << bound;
  rep.detail = os.str();
  rep.verdict = corank <= bound ? AuditVerdict::PassExhaustive : AuditVerdict::Violated;
  return rep;
}

NonSparsityReport check_orthogonality_event(const ModMatrix& m, std::uint64_t p,
                                            const AuditParams& params) {
  NonSparsityReport rep;
  rep.event = m.kind == MatrixKind::Alternating ? "A2" : "S2";
  std::size_t n = m.n;
  std::uint64_t ibound = params.ibound.value_or(floor_pow(n, params.ibound_exponent));
  std::uint64_t wbound = params.weight_bound.value_or(
      static_cast<std::uint64_t>(std::floor(params.weight_fraction * static_cast<double>(n))));
  std::size_t wstart = 0;
  if (m.kind != MatrixKind::Alternating)
    wstart = params.window_start.value_or(
        static_cast<std::size_t>(std::floor(params.window_fraction * static_cast<double>(n))));

  if (wbound == 0) {
    rep.detail = "weight bound 0: no candidate xi";
    rep.verdict = AuditVerdict::PassExhaustive;
    return rep;
  }
  std::uint64_t max_w = std::min<std::uint64_t>(wbound - 1, n);

  std::vector<std::uint64_t> row_mod(n * n);
  for (std::size_t i = 0; i < n * n; ++i) row_mod[i] = m.a[i] % p;

  // enumerate xi by weight strata; complete because violations need wt < wbound
  std::vector<std::size_t> supp;
  std::vector<std::uint64_t> vals;
  std::vector<std::uint64_t> budget_used{0};
  bool violated = false;
  std::vector<std::uint64_t> witness;

  auto test_xi = [&]() {
    if (++budget_used[0] > params.budget)
      throw BudgetExceeded("check_orthogonality_event: budget exceeded");
    std::uint64_t icount = 0;
    for (std::size_t j = wstart; j < n; ++j) {
      std::uint64_t dot = 0;
      for (std::size_t t = 0; t < supp.size(); ++t)
        dot = (dot + row_mod[j * n + supp[t]] * vals[t]) % p;
      if (dot) {
        ++icount;
        if (icount > ibound) return;
      }
    }
    violated = true;
    witness.assign(n, 0);
    for (std::size_t t = 0; t < supp.size(); ++t) witness[supp[t]] = vals[t];
  };

  auto rec_vals = [&](auto&& self, std::size_t t) -> void {
    if (violated) return;
    if (t == supp.size()) {
      test_xi();
      return;
    }
    for (std::uint64_t v = 1; v < p; ++v) {
      vals[t] = v;
      self(self, t + 1);
    }
  };
  auto rec_supp = [&](auto&& self, std::size_t next, std::uint64_t w) -> void {
    if (violated) return;
    if (w == 0) {
      vals.assign(supp.size(), 0);
      rec_vals(rec_vals, 0);
      return;
    }
    for (std::size_t i = next; i + w <= n; ++i) {
      supp.push_back(i);
      self(self, i + 1, w - 1);
      supp.pop_back();
    }
  };
  for (std::uint64_t w = 1; w <= max_w && !violated; ++w) {
    supp.clear();
    rec_supp(rec_supp, 0, w);
  }

  std::ostringstream os;
  os << "ibound=" << ibound << " wbound=" << wbound << " window_start=" << wstart;
  rep.detail = os.str();
  if (violated) {
    rep.verdict = AuditVerdict::Violated;
    rep.witness = witness;
  } else {
    rep.verdict = AuditVerdict::PassExhaustive;
  }
  return rep;
}

NonSparsityReport check_corank_event_2(const ModMatrix& m, const AuditParams& params) {
  AuditParams p2 = params;
  if (!p2.corank_bound) p2.corank_bound = floor_pow(m.n, params.i2_exponent);
  NonSparsityReport rep = check_corank_event(m, 2, p2);
  rep.event = "S1'";
  return rep;
}

namespace {

// F2 linear algebra on uint64 row masks (n <= 64)
struct F2Matrix {
  std::size_t n;
  std::vector<std::uint64_t> rows;
};

bool f2_invert(const F2Matrix& a, F2Matrix& inv) {
  std::size_t n = a.n;
  std::vector<std::uint64_t> w(a.rows);
  inv.n = n;
  inv.rows.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) inv.rows[i] = 1ULL << i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (w[r] >> col & 1) {
        piv = r;
        break;
      }
    if (piv == n) return false;
    std::swap(w[piv], w[col]);
    std::swap(inv.rows[piv], inv.rows[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      if (w[r] >> col & 1) {
        w[r] ^= w[col];
        inv.rows[r] ^= inv.rows[col];
      }
    }
  }
  return true;
}

}  // namespace

NonSparsityReport check_sdagger(const ModMatrix& m, const AuditParams& params) {
  NonSparsityReport rep;
  rep.event = "S2'";
  std::size_t n = m.n;
  if (n > 64) throw BudgetExceeded("check_sdagger: n > 64 unsupported");
  std::size_t i2max = params.i2_max.value_or(static_cast<std::size_t>(floor_pow(n, params.i2_exponent)));
  std::uint64_t wmin = params.comb_weight_min.value_or(static_cast<std::uint64_t>(
      std::ceil(params.comb_weight_factor * std::sqrt(static_cast<double>(n)) - 1e-9)));

  F2Matrix full{n, std::vector<std::uint64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) % 2) full.rows[i] |= 1ULL << j;

  std::vector<std::size_t> i2;
  bool violated = false;

  auto test_i2 = [&]() {
    std::vector<std::size_t> comp;
    std::uint64_t in_i2 = 0;
    for (std::size_t i : i2) in_i2 |= 1ULL << i;
    for (std::size_t i = 0; i < n; ++i)
      if (!(in_i2 >> i & 1)) comp.push_back(i);
    std::size_t cn = comp.size();
    F2Matrix b{cn, std::vector<std::uint64_t>(cn, 0)};
    for (std::size_t i = 0; i < cn; ++i)
      for (std::size_t j = 0; j < cn; ++j)
        if (full.rows[comp[i]] >> comp[j] & 1) b.rows[i] |= 1ULL << j;
    F2Matrix binv;
    if (!f2_invert(b, binv)) return;  // case (a): complement block singular
    // candidate columns: B^{-1} * (columns of C), plus the inverse diagonal
    std::vector<std::uint64_t> cols;
    for (std::size_t jc : i2) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < cn; ++i)
        if (full.rows[comp[i]] >> jc & 1) c |= 1ULL << i;
      std::uint64_t bc = 0;
      for (std::size_t i = 0; i < cn; ++i)
        if (__builtin_parityll(binv.rows[i] & c)) bc |= 1ULL << i;
      cols.push_back(bc);
    }
    std::uint64_t zeta = 0;
    for (std::size_t i = 0; i < cn; ++i)
      if (binv.rows[i] >> i & 1) zeta |= 1ULL << i;
    cols.push_back(zeta);
    for (std::uint64_t mask = 1; mask < (1ULL << cols.size()); ++mask) {
      std::uint64_t comb = 0;
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (mask >> t & 1) comb ^= cols[t];
      if (static_cast<std::uint64_t>(__builtin_popcountll(comb)) < wmin) {
        violated = true;
        rep.witness_set = i2;
        std::ostringstream os;
        os << "combination mask=" << mask << " weight=" << __builtin_popcountll(comb)
           << " < " << wmin;
        rep.detail = os.str();
        return;
      }
    }
  };

  auto rec = [&](auto&& self, std::size_t next, std::size_t left) -> void {
    if (violated) return;
    test_i2();
    if (left == 0) return;
    for (std::size_t i = next; i < n && !violated; ++i) {
      i2.push_back(i);
      self(self, i + 1, left - 1);
      i2.pop_back();
    }
  };
  rec(rec, 0, i2max);

  rep.verdict = violated ? AuditVerdict::Violated : AuditVerdict::PassExhaustive;
  if (!violated) {
    std::ostringstream os;
    os << "i2max=" << i2max << " wmin=" << wmin;
    rep.detail = os.str();
  }
  return rep;
}

unsigned principal_minor_census(const ModMatrix& m, std::uint64_t p) {
  unsigned census = 0;
  for (std::size_t t = 1; t <= m.n; ++t) {
    ModMatrix c(t, m.mod, MatrixKind::General);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) c.at(i, j) = m.at(i, j);
    if (rank_mod_p(c, p) == t) ++census;
  }
  return census;
}

CharBoundReport char_bound_check(const EntryDistribution& d, std::uint64_t a) {
  if (a < 2) throw std::domain_error("char_bound_check: a >= 2 required");
  CharBoundReport rep;
  std::vector<std::uint64_t> primes;
  for (const auto& pp : factorize(a).factors) primes.push_back(pp.p);
  rep.epsilon = epsilon_of(d, primes);
  std::complex<double> s = 0.0;
  const double tau = 6.283185307179586476925286766559;
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    double ang = tau * static_cast<double>(d.support[i]) / static_cast<double>(a);
    s += d.probs[i] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  rep.lhs = std::abs(s);
  rep.rhs = std::exp(-rep.epsilon / (static_cast<double>(a) * static_cast<double>(a)));
  return rep;
}

double entropy_p(std::uint64_t p, double x) {
  if (x <= 0.0 || x >= 1.0) throw std::domain_error("entropy_p: x in (0,1) required");
  double lp = std::log(static_cast<double>(p));
  return x * std::log(static_cast<double>(p - 1)) / lp - x * std::log(x) / lp -
         (1.0 - x) * std::log(1.0 - x) / lp;
}

unsigned __int128 hamming_volume(std::uint64_t p, unsigned n, unsigned t) {
  unsigned __int128 total = 0;
  unsigned __int128 binom = 1;   // C(n, i)
  unsigned __int128 powq = 1;    // (p-1)^i
  for (unsigned i = 0; i <= t && i <= n; ++i) {
    total += binom * powq;
    binom = binom * (n - i) / (i + 1);
    powq *= (p - 1);
  }
  return total;
}

HammingBoundReport hamming_bound_check(std::uint64_t p, unsigned n, double x) {
  HammingBoundReport rep;
  unsigned t = static_cast<unsigned>(std::floor(x * n + 1e-9));
  if (t == 0) {
    rep.volume = 1;
    rep.bound = std::pow(static_cast<long double>(p),
                         static_cast<long double>(entropy_p(p, x) * n));
    return rep;
  }
  unsigned __int128 vol = hamming_volume(p, n, t);
  rep.volume = static_cast<long double>(vol);
  rep.bound =
      std::pow(static_cast<long double>(p), static_cast<long double>(entropy_p(p, x) * n));
  return rep;
}

}  // namespace coklab
