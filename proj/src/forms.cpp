#include "coklab/forms.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace coklab {

namespace {

// working state for congruence elimination over Z/p^e
struct Work {
  std::size_t n;
  std::uint64_t mod;
  std::vector<std::uint64_t> w;
  std::vector<std::size_t> avail;

  explicit Work(const ModMatrix& m) : n(m.n), mod(m.mod), w(m.a) {
    avail.resize(n);
    for (std::size_t i = 0; i < n; ++i) avail[i] = i;
  }
  std::uint64_t& at(std::size_t i, std::size_t j) { return w[i * n + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  void remove(std::size_t i) {
    avail.erase(std::find(avail.begin(), avail.end(), i));
  }
};

unsigned min_val(const Work& wk, std::uint64_t p, unsigned e, bool off_diag_only) {
  unsigned best = e;
  for (std::size_t i : wk.avail)
    for (std::size_t j : wk.avail) {
      if (off_diag_only && i == j) continue;
      unsigned v = val_p(wk.at(i, j), p, e);
      if (v < best) best = v;
    }
  return best;
}

}  // namespace

std::vector<DiagPart> sym_diagonalize_odd(const ModMatrix& m, std::uint64_t p, unsigned e) {
  if (p == 2) throw std::domain_error("sym_diagonalize_odd: p must be odd");
  check_shape(m);
  std::uint64_t mod = pow_u64(p, e);
  if (m.mod != mod) throw std::domain_error("sym_diagonalize_odd: modulus mismatch");
  Work wk(m);
  std::vector<DiagPart> parts;

  while (!wk.avail.empty()) {
    unsigned d = min_val(wk, p, e, false);
    if (d >= e) {
      for (std::size_t i = 0; i < wk.avail.size(); ++i) parts.push_back({e, 0});
      break;
    }
    std::size_t piv = m.n;
    for (std::size_t i : wk.avail)
      if (val_p(wk.at(i, i), p, e) == d) {
        piv = i;
        break;
      }
    if (piv == m.n) {
      // all diagonal entries have higher valuation; create a pivot by a row/col add
      std::size_t bi = m.n, bj = m.n;
      for (std::size_t ii = 0; ii < wk.avail.size() && bi == m.n; ++ii)
        for (std::size_t jj = ii + 1; jj < wk.avail.size(); ++jj)
          if (val_p(wk.at(wk.avail[ii], wk.avail[jj]), p, e) == d) {
            bi = wk.avail[ii];
            bj = wk.avail[jj];
            break;
          }
      std::uint64_t plus = (wk.at(bi, bi) + wk.at(bj, bj) + 2 * wk.at(bi, bj)) % mod;
      std::uint64_t sign = val_p(plus, p, e) == d ? 1 : mod - 1;
      for (std::size_t t : wk.avail)
        wk.at(bi, t) = (wk.at(bi, t) + sign * wk.at(bj, t)) % mod;
      for (std::size_t t : wk.avail)
        wk.at(t, bi) = (wk.at(t, bi) + sign * wk.at(t, bj)) % mod;
      piv = bi;
      assert(val_p(wk.at(piv, piv), p, e) == d);
    }
    std::uint64_t pd = pow_u64(p, d);
    std::uint64_t umod = mod / pd;  // p^{e-d}
    std::uint64_t u0 = (wk.at(piv, piv) / pd) % umod;
    std::uint64_t uinv = inverse_unit(u0, umod);
    parts.push_back({d, u0});
    std::vector<std::size_t> rest = wk.avail;
    rest.erase(std::find(rest.begin(), rest.end(), piv));
    std::vector<std::uint64_t> f(m.n, 0);
    for (std::size_t s : rest) f[s] = (wk.at(s, piv) / pd) % umod * uinv % umod;
    for (std::size_t s : rest)
      for (std::size_t t : rest)
        wk.at(s, t) = (wk.at(s, t) + mod - f[s] * wk.at(piv, t) % mod) % mod;
    wk.remove(piv);
  }
  return parts;
}

std::string SymOddCanonical::to_string() const {
  std::ostringstream os;
  os << "diag_" << p << "^" << e << "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ",";
    os << lambda[i];
    if (lambda[i] < e) os << (eps[i] ? "n" : "s");
    else os << "+";
  }
  os << ")";
  return os.str();
}

SymOddCanonical canonical_sym_odd(const ModMatrix& m, std::uint64_t p, unsigned e) {
  auto parts = sym_diagonalize_odd(m, p, e);
  std::stable_sort(parts.begin(), parts.end(),
                   [](const DiagPart& a, const DiagPart& b) { return a.d < b.d; });
  SymOddCanonical c;
  c.p = p;
  c.e = e;
  for (const auto& pt : parts) {
    c.lambda.push_back(pt.d);
    c.eps.push_back(pt.d < e ? square_class_odd(pt.u, p) : 0);
    if (pt.d == e) c.capped = true;
  }
  // within each run of equal lambda < e only the last entry may be the nonsquare
  std::size_t i = 0;
  while (i < c.lambda.size()) {
    std::size_t j = i;
    while (j < c.lambda.size() && c.lambda[j] == c.lambda[i]) ++j;
    if (c.lambda[i] < e) {
      int nonsq = 0;
      for (std::size_t k = i; k < j; ++k) nonsq += c.eps[k];
      for (std::size_t k = i; k < j; ++k) c.eps[k] = 0;
      c.eps[j - 1] = nonsq % 2;
    }
    i = j;
  }
  return c;
}

TwoAdicDecomposition decompose_sym_2(const ModMatrix& m, unsigned e, bool strict) {
  check_shape(m);
  std::uint64_t mod = pow_u64(2, e);
  if (m.mod != mod) throw std::domain_error("decompose_sym_2: modulus mismatch");
  if (m.kind != MatrixKind::Symmetric)
    throw std::domain_error("decompose_sym_2: symmetric matrices only");
  Work wk(m);
  TwoAdicDecomposition dec;
  dec.e = e;

  while (!wk.avail.empty()) {
    unsigned d = min_val(wk, 2, e, false);
    if (d >= e) {
      dec.residual = wk.avail.size();
      break;
    }
    if (d + 3 > e) {
      if (strict) throw InsufficientPrecision("decompose_sym_2: pivot scale needs 3 more bits");
      dec.incomplete = true;
      dec.residual = wk.avail.size();
      break;
    }
    std::uint64_t umod = mod >> d;  // 2^{e-d}
    std::size_t piv = m.n;
    for (std::size_t i : wk.avail)
      if (val_p(wk.at(i, i), 2, e) == d) {
        piv = i;
        break;
      }
    if (piv != m.n) {
      std::uint64_t u0 = (wk.at(piv, piv) >> d) % umod;
      dec.blocks.push_back({TwoAdicBlock::Shape::Unit, d, static_cast<unsigned>(u0 & 7), u0});
      std::uint64_t uinv = inverse_unit(u0, umod);
      std::vector<std::size_t> rest = wk.avail;
      rest.erase(std::find(rest.begin(), rest.end(), piv));
      std::vector<std::uint64_t> f(m.n, 0);
      for (std::size_t s : rest) f[s] = (wk.at(s, piv) >> d) % umod * uinv % umod;
      for (std::size_t s : rest)
        for (std::size_t t : rest)
          wk.at(s, t) = (wk.at(s, t) + mod - f[s] * wk.at(piv, t) % mod) % mod;
      wk.remove(piv);
      continue;
    }
    // joint 2x2 pivot on the first minimal off-diagonal entry
    std::size_t bi = m.n, bj = m.n;
    for (std::size_t ii = 0; ii < wk.avail.size() && bi == m.n; ++ii)
      for (std::size_t jj = ii + 1; jj < wk.avail.size(); ++jj)
        if (val_p(wk.at(wk.avail[ii], wk.avail[jj]), 2, e) == d) {
          bi = wk.avail[ii];
          bj = wk.avail[jj];
          break;
        }
    std::uint64_t wii = wk.at(bi, bi), wij = wk.at(bi, bj), wjj = wk.at(bj, bj);
    unsigned q = static_cast<unsigned>(((wii * wjj - wij * wij) >> (2 * d)) & 7);
    assert(q == 3 || q == 7);
    dec.blocks.push_back({q == 7 ? TwoAdicBlock::Shape::U : TwoAdicBlock::Shape::V, d, 0});
    std::uint64_t b00 = (wii >> d) % umod, b01 = (wij >> d) % umod, b11 = (wjj >> d) % umod;
    std::uint64_t det0 = (b00 * b11 + umod * umod - b01 * b01 % umod) % umod;
    std::uint64_t dinv = inverse_unit(det0, umod);
    // inverse of [[b00,b01],[b01,b11]]
    std::uint64_t i00 = b11 * dinv % umod, i01 = (umod - b01) * dinv % umod,
                  i11 = b00 * dinv % umod;
    std::vector<std::size_t> rest = wk.avail;
    rest.erase(std::find(rest.begin(), rest.end(), bj));
    rest.erase(std::find(rest.begin(), rest.end(), bi));
    std::vector<std::uint64_t> f0(m.n, 0), f1(m.n, 0);
    for (std::size_t s : rest) {
      std::uint64_t c0 = (wk.at(s, bi) >> d) % umod, c1 = (wk.at(s, bj) >> d) % umod;
      f0[s] = (c0 * i00 + c1 * i01) % umod;
      f1[s] = (c0 * i01 + c1 * i11) % umod;
    }
    for (std::size_t s : rest)
      for (std::size_t t : rest) {
        std::uint64_t sub = (f0[s] * wk.at(bi, t) + f1[s] * wk.at(bj, t)) % mod;
        wk.at(s, t) = (wk.at(s, t) + mod - sub) % mod;
      }
    wk.remove(bi);
    wk.remove(bj);
  }
  std::sort(dec.blocks.begin(), dec.blocks.end(),
            [](const TwoAdicBlock& a, const TwoAdicBlock& b) {
              if (a.d != b.d) return a.d < b.d;
              if (a.shape != b.shape) return a.shape < b.shape;
              return a.u < b.u;
            });
  return dec;
}

std::string ti_class(const TwoAdicBlock& b) {
  using Shape = TwoAdicBlock::Shape;
  if (b.d == 1) return b.shape == Shape::Unit ? "T1" : "T2";
  if (b.shape == Shape::Unit && b.d == 2) return (b.u % 4 == 1) ? "T3" : "T4";
  std::ostringstream os;
  if (b.shape == Shape::Unit)
    os << "u" << b.d << ":" << b.u;
  else
    os << (b.shape == Shape::U ? "U" : "V") << b.d;
  return os.str();
}

std::string AltCanonical::to_string() const {
  std::ostringstream os;
  os << "alt_" << p << "^" << e << "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ",";
    os << lambda[i];
  }
  os << ";r" << residual << ")";
  return os.str();
}

AltCanonical canonical_alt(const ModMatrix& m, std::uint64_t p, unsigned e) {
  check_shape(m);
  std::uint64_t mod = pow_u64(p, e);
  if (m.mod != mod) throw std::domain_error("canonical_alt: modulus mismatch");
  if (m.kind != MatrixKind::Alternating)
    throw std::domain_error("canonical_alt: alternating matrices only");
  Work wk(m);
  AltCanonical c;
  c.p = p;
  c.e = e;

  while (wk.avail.size() >= 2) {
    unsigned d = min_val(wk, p, e, true);
    if (d >= e) break;
    std::size_t bi = m.n, bj = m.n;
    for (std::size_t ii = 0; ii < wk.avail.size() && bi == m.n; ++ii)
      for (std::size_t jj = ii + 1; jj < wk.avail.size(); ++jj)
        if (val_p(wk.at(wk.avail[ii], wk.avail[jj]), p, e) == d) {
          bi = wk.avail[ii];
          bj = wk.avail[jj];
          break;
        }
    c.lambda.push_back(d);
    std::uint64_t pd = pow_u64(p, d);
    std::uint64_t umod = mod / pd;
    std::uint64_t wu = (wk.at(bi, bj) / pd) % umod;
    std::uint64_t winv = inverse_unit(wu, umod);
    std::vector<std::size_t> rest = wk.avail;
    rest.erase(std::find(rest.begin(), rest.end(), bj));
    rest.erase(std::find(rest.begin(), rest.end(), bi));
    for (std::size_t si = 0; si < rest.size(); ++si)
      for (std::size_t ti = si + 1; ti < rest.size(); ++ti) {
        std::size_t s = rest[si], t = rest[ti];
        std::uint64_t as = (wk.at(s, bj) / pd) % umod, at = (wk.at(t, bi) / pd) % umod;
        std::uint64_t bs = (wk.at(s, bi) / pd) % umod, bt = (wk.at(t, bj) / pd) % umod;
        // pivot block [[0,w],[-w,0]]: A'_{st} = A_{st} + (A_{s,bj} A_{t,bi} - A_{s,bi} A_{t,bj}) / w
        std::uint64_t num = (as * at + umod * umod - bs * bt % umod) % umod;
        std::uint64_t delta = pd * (num * winv % umod) % mod;
        wk.at(s, t) = (wk.at(s, t) + delta) % mod;
        wk.at(t, s) = (mod - wk.at(s, t)) % mod;
      }
    wk.remove(bi);
    wk.remove(bj);
  }
  c.residual = wk.avail.size();
  // nonzero 1x1 leftover cannot happen for alternating matrices
  std::sort(c.lambda.begin(), c.lambda.end(), std::greater<unsigned>());
  return c;
}

bool same_pairing_scalar(std::uint64_t alpha, std::uint64_t alpha2, std::uint64_t p, unsigned e) {
  std::uint64_t mod = pow_u64(p, e);
  alpha %= mod;
  alpha2 %= mod;
  unsigned d = val_p(alpha, p, e), d2 = val_p(alpha2, p, e);
  if (d == e || d2 == e)
    throw InsufficientPrecision("same_pairing_scalar: scalar vanishes mod p^e");
  if (d != d2) return false;
  if (d == 0) return true;
  std::uint64_t pd = pow_u64(p, d);
  std::uint64_t u = alpha / pd, u2 = alpha2 / pd;
  if (p != 2) return square_class_odd(u, p) == square_class_odd(u2, p);
  unsigned need = std::min(d, 3u);
  if (e < d + 3) throw InsufficientPrecision("same_pairing_scalar: need unit mod 8");
  std::uint64_t mask = (1ULL << need) - 1;
  return (u & mask) == (u2 & mask);
}

ModMatrix pad_invertible(const ModMatrix& m, const ModMatrix& x) {
  if (m.mod != x.mod) throw std::domain_error("pad_invertible: modulus mismatch");
  if (m.kind != x.kind) throw std::domain_error("pad_invertible: kind mismatch");
  for (const auto& pp : factorize(m.mod).factors)
    if (rank_mod_p(x, pp.p) != x.n) throw NonUnitError("pad_invertible: block not invertible");
  ModMatrix r(m.n + x.n, m.mod, m.kind);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r.at(i, j) = m.at(i, j);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) r.at(m.n + i, m.n + j) = x.at(i, j);
  return r;
}

}  // namespace coklab
