#include "coklab/matrix.hpp"

#include <algorithm>

namespace coklab {

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t mod) {
  ModMatrix m(n, mod, MatrixKind::Symmetric);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % mod;
  return m;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t mod) {
  if (mod < 2) throw std::domain_error("reduce_mod: modulus must be >= 2");
  ModMatrix r(m.n, mod, m.kind);
  for (std::size_t i = 0; i < m.n * m.n; ++i) {
    std::int64_t v = m.a[i] % static_cast<std::int64_t>(mod);
    if (v < 0) v += static_cast<std::int64_t>(mod);
    r.a[i] = static_cast<std::uint64_t>(v);
  }
  check_shape(r);
  return r;
}

void check_shape(const ModMatrix& m) {
  if (m.kind == MatrixKind::General) return;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (m.kind == MatrixKind::Symmetric) {
        if (m.at(i, j) != m.at(j, i)) throw std::domain_error("matrix not symmetric");
      } else {
        if (i == j) {
          if (m.at(i, i) != 0) throw std::domain_error("alternating matrix has nonzero diagonal");
        } else if ((m.at(i, j) + m.at(j, i)) % m.mod != 0) {
          throw std::domain_error("matrix not antisymmetric");
        }
      }
    }
}

ModMatrix submatrix(const ModMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  // generally rectangular; stored with row stride cols.size()
  ModMatrix out;
  out.n = rows.size();
  out.mod = m.mod;
  out.kind = MatrixKind::General;
  out.a.resize(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.a[i * cols.size() + j] = m.at(rows[i], cols[j]);
  return out;
}

unsigned rank_mod_p(const ModMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> w(m.a);
  for (auto& x : w) x %= p;
  std::size_t n = m.n;
  unsigned rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && w[piv * n + col] == 0) ++piv;
    if (piv == n) continue;
    std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(piv * n),
                     w.begin() + static_cast<std::ptrdiff_t>((piv + 1) * n),
                     w.begin() + static_cast<std::ptrdiff_t>(row * n));
    std::uint64_t inv = inverse_unit(w[row * n + col], p);
    for (std::size_t r = row + 1; r < n; ++r) {
      std::uint64_t f = w[r * n + col] * inv % p;
      if (!f) continue;
      for (std::size_t c = col; c < n; ++c)
        w[r * n + c] = (w[r * n + c] + (p - f) * w[row * n + c]) % p;
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::vector<std::size_t> find_invertible_principal_minor(const ModMatrix& m, std::uint64_t p) {
  if (m.kind == MatrixKind::General)
    throw std::domain_error("find_invertible_principal_minor: symmetric or alternating only");
  std::size_t n = m.n;
  std::vector<std::uint64_t> w(n * n);
  for (std::size_t i = 0; i < n * n; ++i) w[i] = m.a[i] % p;
  std::vector<std::size_t> avail(n);
  for (std::size_t i = 0; i < n; ++i) avail[i] = i;
  std::vector<std::size_t> pivots;

  auto rank1_clear = [&](std::size_t r) {
    // symmetric 1x1 pivot at r
    std::uint64_t inv = inverse_unit(w[r * n + r], p);
    for (std::size_t s : avail) {
      if (s == r) continue;
      std::uint64_t fs = w[s * n + r] * inv % p;
      if (!fs) continue;
      for (std::size_t t : avail) {
        if (t == r) continue;
        w[s * n + t] = (w[s * n + t] + (p - fs) * w[r * n + t]) % p;
      }
    }
  };
  auto pair_clear = [&](std::size_t i, std::size_t j) {
    // 2x2 pivot on {i,j}; works for both kinds
    std::uint64_t a = w[i * n + i], b = w[i * n + j], c = w[j * n + i], d = w[j * n + j];
    std::uint64_t det = ((a * d) % p + p * p - (b * c) % p) % p;
    std::uint64_t dinv = inverse_unit(det, p);
    // inverse of [[a,b],[c,d]]
    std::uint64_t i00 = d * dinv % p, i01 = (p - b % p) * dinv % p;
    std::uint64_t i10 = (p - c % p) * dinv % p, i11 = a * dinv % p;
    for (std::size_t s : avail) {
      if (s == i || s == j) continue;
      std::uint64_t csi = w[s * n + i], csj = w[s * n + j];
      std::uint64_t f0 = (csi * i00 + csj * i10) % p;
      std::uint64_t f1 = (csi * i01 + csj * i11) % p;
      for (std::size_t t : avail) {
        if (t == i || t == j) continue;
        std::uint64_t sub = (f0 * w[i * n + t] + f1 * w[j * n + t]) % p;
        w[s * n + t] = (w[s * n + t] + p - sub) % p;
      }
    }
  };

  for (;;) {
    std::size_t diag = n;
    for (std::size_t i : avail)
      if (w[i * n + i] % p != 0) {
        diag = i;
        break;
      }
    if (diag < n) {
      pivots.push_back(diag);
      rank1_clear(diag);
      avail.erase(std::find(avail.begin(), avail.end(), diag));
      continue;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t ii = 0; ii < avail.size() && bi == n; ++ii)
      for (std::size_t jj = ii + 1; jj < avail.size(); ++jj)
        if (w[avail[ii] * n + avail[jj]] % p != 0) {
          bi = avail[ii];
          bj = avail[jj];
          break;
        }
    if (bi == n) break;
    pivots.push_back(bi);
    pivots.push_back(bj);
    pair_clear(bi, bj);
    avail.erase(std::find(avail.begin(), avail.end(), bj));
    avail.erase(std::find(avail.begin(), avail.end(), bi));
  }
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

namespace {

// single prime-power modulus: a unit pivot exists in every column iff invertible
ModMatrix inverse_mod_local(const ModMatrix& m) {
  std::size_t n = m.n;
  std::uint64_t mod = m.mod;
  std::vector<std::uint64_t> w(m.a);
  ModMatrix inv = ModMatrix::identity(n, mod);
  inv.kind = MatrixKind::General;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (is_unit(w[r * n + col], mod)) {
        piv = r;
        break;
      }
    if (piv == n) throw NonUnitError("inverse_mod: no unit pivot, matrix not invertible");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(w[piv * n + c], w[col * n + c]);
        std::swap(inv.a[piv * n + c], inv.a[col * n + c]);
      }
    }
    std::uint64_t f = inverse_unit(w[col * n + col], mod);
    for (std::size_t c = 0; c < n; ++c) {
      w[col * n + c] = w[col * n + c] * f % mod;
      inv.a[col * n + c] = inv.a[col * n + c] * f % mod;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint64_t g = w[r * n + col] % mod;
      if (!g) continue;
      for (std::size_t c = 0; c < n; ++c) {
        w[r * n + c] = (w[r * n + c] + (mod - g) * w[col * n + c]) % mod;
        inv.a[r * n + c] = (inv.a[r * n + c] + (mod - g) * inv.a[col * n + c]) % mod;
      }
    }
  }
  return inv;
}

}  // namespace

ModMatrix inverse_mod(const ModMatrix& m) {
  Modulus f = factorize(m.mod);
  if (f.factors.size() == 1) return inverse_mod_local(m);
  // composite modulus: invert per prime power and recombine, since a column
  // of an invertible matrix may hold no single unit entry
  std::vector<ModMatrix> parts;
  for (const auto& pp : f.factors) {
    ModMatrix mp(m.n, pp.value(), m.kind);
    for (std::size_t i = 0; i < m.n * m.n; ++i) mp.a[i] = m.a[i] % pp.value();
    parts.push_back(inverse_mod_local(mp));
  }
  ModMatrix inv(m.n, m.mod, MatrixKind::General);
  std::vector<std::uint64_t> res(f.factors.size());
  for (std::size_t i = 0; i < m.n * m.n; ++i) {
    for (std::size_t t = 0; t < parts.size(); ++t) res[t] = parts[t].a[i];
    inv.a[i] = crt_combine(res, f);
  }
  return inv;
}

ModMatrix schur_complement(const ModMatrix& m, const std::vector<std::size_t>& pivot) {
  std::size_t n = m.n;
  std::vector<char> inp(n, 0);
  for (std::size_t i : pivot) inp[i] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!inp[i]) keep.push_back(i);

  ModMatrix b(pivot.size(), m.mod, MatrixKind::General);
  for (std::size_t i = 0; i < pivot.size(); ++i)
    for (std::size_t j = 0; j < pivot.size(); ++j) b.at(i, j) = m.at(pivot[i], pivot[j]);
  ModMatrix binv = inverse_mod(b);

  ModMatrix s(keep.size(), m.mod, m.kind);
  std::uint64_t mod = m.mod;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      __uint128_t acc = 0;
      for (std::size_t u = 0; u < pivot.size(); ++u) {
        std::uint64_t row = 0;
        for (std::size_t v = 0; v < pivot.size(); ++v)
          row = (row + m.at(keep[i], pivot[v]) * binv.at(v, u)) % mod;
        acc += (__uint128_t)row * m.at(pivot[u], keep[j]);
      }
      std::uint64_t sub = static_cast<std::uint64_t>(acc % mod);
      s.at(i, j) = (m.at(keep[i], keep[j]) + mod - sub) % mod;
    }
  check_shape(s);
  return s;
}

ModMatrix congruence_apply(const ModMatrix& u, const ModMatrix& m) {
  if (u.n != m.n) throw std::domain_error("congruence_apply: size mismatch");
  std::size_t n = m.n;
  std::uint64_t mod = m.mod;
  // t = U M
  std::vector<std::uint64_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t f = u.at(i, k) % mod;
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j)
        t[i * n + j] = (t[i * n + j] + f * m.at(k, j)) % mod;
    }
  ModMatrix r(n, mod, m.kind);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = (acc + t[i * n + k] * (u.at(j, k) % mod)) % mod;
      r.at(i, j) = acc;
    }
  check_shape(r);
  return r;
}

ModMatrix border(const ModMatrix& m, const std::vector<std::uint64_t>& xi, std::uint64_t z) {
  if (xi.size() != m.n) throw std::domain_error("border: xi size mismatch");
  ModMatrix r(m.n + 1, m.mod, m.kind);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r.at(i, j) = m.at(i, j);
  for (std::size_t i = 0; i < m.n; ++i) {
    std::uint64_t v = xi[i] % m.mod;
    r.at(i, m.n) = v;
    if (m.kind == MatrixKind::Alternating)
      r.at(m.n, i) = (m.mod - v) % m.mod;
    else
      r.at(m.n, i) = v;
  }
  r.at(m.n, m.n) = m.kind == MatrixKind::Alternating ? 0 : z % m.mod;
  return r;
}

ModMatrix random_invertible(std::size_t n, std::uint64_t mod, std::uint64_t seed) {
  Modulus f = factorize(mod);
  for (std::uint64_t attempt = 0;; ++attempt) {
    ModMatrix u(n, mod, MatrixKind::General);
    for (std::size_t i = 0; i < n * n; ++i) {
      std::uint64_t r = mix64(mix64(mix64(seed ^ 0x72616e646d617478ULL) ^ attempt) ^ i);
      u.a[i] = bounded(r, mod);
    }
    bool ok = true;
    for (const auto& pp : f.factors)
      if (rank_mod_p(u, pp.p) != n) {
        ok = false;
        break;
      }
    if (ok) return u;
    if (attempt > 10000) throw BudgetExceeded("random_invertible: too many attempts");
  }
}

}  // namespace coklab
