#include "coklab/cokernel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace coklab {

std::uint64_t GroupType::order(std::uint64_t p) const {
  std::uint64_t o = 1;
  for (unsigned l : lambda) o *= pow_u64(p, l);
  return o;
}

std::uint64_t PairingGram::group_order() const {
  std::uint64_t o = 1;
  for (unsigned l : lambda) o *= pow_u64(p, l);
  return o;
}

GroupType group_type(const ModMatrix& m, std::uint64_t p, unsigned e) {
  std::uint64_t mod = pow_u64(p, e);
  if (m.mod != mod) throw std::domain_error("group_type: modulus mismatch");
  std::size_t n = m.n;
  std::vector<std::uint64_t> w(m.a);
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  GroupType gt;

  while (!rows.empty()) {
    unsigned d = e;
    std::size_t pi = 0, pj = 0;
    for (std::size_t r : rows)
      for (std::size_t c : cols) {
        unsigned v = val_p(w[r * n + c], p, e);
        if (v < d) {
          d = v;
          pi = r;
          pj = c;
        }
      }
    if (d >= e) {
      for (std::size_t i = 0; i < rows.size(); ++i) gt.lambda.push_back(e);
      gt.capped = true;
      break;
    }
    std::uint64_t pd = pow_u64(p, d);
    std::uint64_t umod = mod / pd;
    std::uint64_t uinv = inverse_unit((w[pi * n + pj] / pd) % umod, umod);
    for (std::size_t r : rows) {
      if (r == pi) continue;
      std::uint64_t f = (w[r * n + pj] / pd) % umod * uinv % umod;
      if (!f) continue;
      for (std::size_t c : cols)
        w[r * n + c] = (w[r * n + c] + mod - f * w[pi * n + c] % mod) % mod;
    }
    for (std::size_t c : cols) {
      if (c == pj) continue;
      std::uint64_t g = (w[pi * n + c] / pd) % umod * uinv % umod;
      if (!g) continue;
      for (std::size_t r : rows)
        w[r * n + c] = (w[r * n + c] + mod - g * w[r * n + pj] % mod) % mod;
    }
    if (d >= 1) gt.lambda.push_back(d);
    rows.erase(std::find(rows.begin(), rows.end(), pi));
    cols.erase(std::find(cols.begin(), cols.end(), pj));
  }
  std::sort(gt.lambda.begin(), gt.lambda.end(), std::greater<unsigned>());
  return gt;
}

namespace {

// DFS over generator images with order constraints and mod-p independence
struct GroupDfs {
  const PairingGram& g;
  std::size_t k;
  std::uint64_t p, vmod;
  std::vector<std::uint64_t> ordmod;
  std::uint64_t nodes = 0, node_cap;

  explicit GroupDfs(const PairingGram& gr, const ClassifyBudget& budget)
      : g(gr), k(gr.k()), p(gr.p), vmod(gr.value_mod()), node_cap(budget.node_cap) {
    if (gr.group_order() > budget.group_order_cap)
      throw BudgetExceeded("paired group order exceeds cap");
    ordmod.resize(k);
    for (std::size_t i = 0; i < k; ++i) ordmod[i] = pow_u64(p, g.lambda[i]);
  }

  void tick() {
    if (++nodes > node_cap) throw BudgetExceeded("group automorphism search budget exceeded");
  }

  std::uint64_t pair(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) const {
    __uint128_t acc = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (!x[a]) continue;
      for (std::size_t b = 0; b < k; ++b)
        if (y[b]) acc += (__uint128_t)(x[a] * y[b] % vmod) * g.scaled[a * k + b];
    }
    return static_cast<std::uint64_t>(acc % vmod);
  }

  // candidates for the image of generator i: elements killed by p^{lambda_i}
  std::vector<std::vector<std::uint64_t>> candidates(std::size_t i) const {
    std::vector<std::uint64_t> step(k), cnt(k);
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < k; ++j) {
      unsigned lo = g.lambda[j] > g.lambda[i] ? g.lambda[j] - g.lambda[i] : 0;
      step[j] = pow_u64(p, lo);
      cnt[j] = ordmod[j] / step[j];
      total *= cnt[j];
    }
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(total);
    std::vector<std::uint64_t> idx(k, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<std::uint64_t> x(k);
      for (std::size_t j = 0; j < k; ++j) x[j] = idx[j] * step[j];
      out.push_back(std::move(x));
      for (std::size_t j = 0; j < k; ++j) {
        if (++idx[j] < cnt[j]) break;
        idx[j] = 0;
      }
    }
    return out;
  }

  // Gaussian state for reductions mod p (Nakayama: full rank <=> automorphism)
  bool extend_basis(std::vector<std::vector<std::uint64_t>>& basis,
                    const std::vector<std::uint64_t>& x) const {
    std::vector<std::uint64_t> v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = x[j] % p;
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (lead < k && !b[lead]) ++lead;
      if (lead < k && v[lead]) {
        std::uint64_t f = v[lead] * inverse_unit(b[lead], p) % p;
        for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + (p - f) * b[j]) % p;
      }
    }
    if (std::all_of(v.begin(), v.end(), [](std::uint64_t t) { return t == 0; })) return false;
    basis.push_back(v);
    return true;
  }
};

std::uint64_t count_preserving(const PairingGram& g, const ClassifyBudget& budget) {
  GroupDfs dfs(g, budget);
  std::size_t k = dfs.k;
  if (k == 0) return 1;
  std::vector<std::vector<std::uint64_t>> images;
  std::vector<std::vector<std::uint64_t>> basis;
  std::uint64_t count = 0;

  std::vector<std::vector<std::vector<std::uint64_t>>> cands(k);
  for (std::size_t i = 0; i < k; ++i) cands[i] = dfs.candidates(i);

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      ++count;
      return;
    }
    for (const auto& x : cands[i]) {
      dfs.tick();
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = dfs.pair(images[j], x) == g.scaled[j * k + i];
      if (ok && !g.alternating) ok = dfs.pair(x, x) == g.scaled[i * k + i];
      if (!ok) continue;
      std::size_t save = basis.size();
      if (!dfs.extend_basis(basis, x)) continue;
      images.push_back(x);
      self(self, i + 1);
      images.pop_back();
      basis.resize(save);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

std::uint64_t aut_count_paired(const PairingGram& g, const ClassifyBudget& budget) {
  return count_preserving(g, budget);
}

PairingGram standard_alt_gram(const std::vector<unsigned>& lambdaH, std::uint64_t p) {
  std::vector<unsigned> lam(lambdaH);
  std::sort(lam.begin(), lam.end(), std::greater<unsigned>());
  PairingGram g;
  g.p = p;
  g.alternating = true;
  for (unsigned l : lam) {
    g.lambda.push_back(l);
    g.lambda.push_back(l);
  }
  std::size_t k = g.lambda.size();
  g.scaled.assign(k * k, 0);
  if (k == 0) return g;
  std::uint64_t vmod = pow_u64(p, g.lambda.front());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    std::uint64_t v = pow_u64(p, g.lambda.front() - lam[i]);
    g.scaled[(2 * i) * k + (2 * i + 1)] = v;
    g.scaled[(2 * i + 1) * k + (2 * i)] = vmod - v;
  }
  return g;
}

std::uint64_t sp_count(const std::vector<unsigned>& lambdaH, std::uint64_t p,
                       const ClassifyBudget& budget) {
  return count_preserving(standard_alt_gram(lambdaH, p), budget);
}

std::string minimal_gram_key(const PairingGram& g, const ClassifyBudget& budget) {
  GroupDfs dfs(g, budget);
  std::size_t k = dfs.k;
  if (k == 0) return "";
  std::vector<std::vector<std::vector<std::uint64_t>>> cands(k);
  for (std::size_t i = 0; i < k; ++i) cands[i] = dfs.candidates(i);

  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::vector<std::vector<std::uint64_t>> images;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::uint64_t> prefix;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      best = prefix;
      have_best = true;
      return;
    }
    // candidate segments sorted, so pruning can stop the whole level
    std::vector<std::pair<std::vector<std::uint64_t>, const std::vector<std::uint64_t>*>> segs;
    for (const auto& x : cands[i]) {
      dfs.tick();
      std::vector<std::uint64_t> seg(i + 1);
      for (std::size_t j = 0; j < i; ++j) seg[j] = dfs.pair(images[j], x);
      seg[i] = dfs.pair(x, x);
      segs.emplace_back(std::move(seg), &x);
    }
    std::sort(segs.begin(), segs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [seg, xp] : segs) {
      if (have_best) {
        bool worse = false, better = false;
        std::size_t off = prefix.size();
        for (std::size_t t = 0; t < seg.size(); ++t) {
          if (seg[t] < best[off + t]) {
            better = true;
            break;
          }
          if (seg[t] > best[off + t]) {
            worse = true;
            break;
          }
        }
        if (worse) break;  // sorted: everything later is worse too
        (void)better;
      }
      std::size_t save = basis.size();
      if (!dfs.extend_basis(basis, *xp)) continue;
      images.push_back(*xp);
      prefix.insert(prefix.end(), seg.begin(), seg.end());
      self(self, i + 1);
      prefix.resize(prefix.size() - seg.size());
      images.pop_back();
      basis.resize(save);
    }
  };
  rec(rec, 0);
  if (!have_best) throw std::logic_error("minimal_gram_key: no automorphism found");

  std::ostringstream os;
  os << std::hex;
  for (std::size_t t = 0; t < best.size(); ++t) {
    if (t) os << ".";
    os << best[t];
  }
  return os.str();
}

namespace {

PairingGram gram_from_odd_parts(std::uint64_t p, const std::vector<DiagPart>& torsion) {
  // parts must all have d >= 1, sorted nonincreasing by caller
  PairingGram g;
  g.p = p;
  for (const auto& pt : torsion) g.lambda.push_back(pt.d);
  std::size_t k = g.lambda.size();
  g.scaled.assign(k * k, 0);
  if (k == 0) return g;
  std::uint64_t vmod = pow_u64(p, g.lambda.front());
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t ord = pow_u64(p, g.lambda[i]);
    std::uint64_t c = inverse_unit(torsion[i].u % ord, ord);
    g.scaled[i * k + i] = c * (vmod / ord) % vmod;
  }
  return g;
}

PairingGram gram_from_two_blocks(const std::vector<TwoAdicBlock>& blocks) {
  struct Gen {
    unsigned lambda;
    std::size_t block;
    int pos;  // 0 or 1 within the block
  };
  std::vector<Gen> gens;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].d == 0) continue;
    gens.push_back({blocks[b].d, b, 0});
    if (blocks[b].shape != TwoAdicBlock::Shape::Unit) gens.push_back({blocks[b].d, b, 1});
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Gen& a, const Gen& b) { return a.lambda > b.lambda; });
  PairingGram g;
  g.p = 2;
  for (const auto& gn : gens) g.lambda.push_back(gn.lambda);
  std::size_t k = gens.size();
  g.scaled.assign(k * k, 0);
  if (k == 0) return g;
  std::uint64_t vmod = pow_u64(2, g.lambda.front());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (gens[i].block != gens[j].block) continue;
      const TwoAdicBlock& bl = blocks[gens[i].block];
      std::uint64_t ord = 1ULL << bl.d;
      std::uint64_t scale = vmod / ord;
      std::uint64_t c = 0;
      if (bl.shape == TwoAdicBlock::Shape::Unit) {
        c = inverse_unit(bl.ufull % ord, ord);
      } else if (bl.shape == TwoAdicBlock::Shape::U) {
        c = (gens[i].pos != gens[j].pos) ? 1 : 0;
      } else {
        std::uint64_t inv3 = inverse_unit(3 % ord, ord);
        c = (gens[i].pos == gens[j].pos) ? 2 * inv3 % ord : (ord - inv3) % ord;
      }
      g.scaled[i * k + j] = c % ord * scale % vmod;
    }
  return g;
}

std::string lambda_string(const std::vector<unsigned>& lambda, unsigned e, bool mark_cap,
                          const std::vector<int>* eps = nullptr) {
  std::ostringstream os;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ",";
    os << lambda[i];
    if (mark_cap && lambda[i] == e) os << "+";
    if (eps) os << ((*eps)[i] ? "n" : "s");
  }
  return os.str();
}

}  // namespace

std::string PairedClassKey::to_string() const {
  std::ostringstream os;
  os << p << ":";
  switch (kind) {
    case KeyKind::SymOdd:
      os << "S:" << lambda_string(lambda, e, false, &eps);
      break;
    case KeyKind::SymTwo:
      os << "S:" << lambda_string(lambda, e, false) << ":" << payload;
      break;
    case KeyKind::Alt:
      os << "A:" << (parity_odd ? "o" : "e") << ":" << lambda_string(lambda, e, false);
      break;
    case KeyKind::Undetermined:
      if (context == MatrixKind::Alternating)
        os << "UA:" << (parity_odd ? "o" : "e") << ":" << lambda_string(lambda, e, true) << ";r"
           << residual;
      else
        os << "U:" << lambda_string(lambda, e, true);
      break;
  }
  return os.str();
}

PairedClassKey quasi_class(const ModMatrix& m, std::uint64_t p, unsigned e,
                           const ClassifyBudget& budget) {
  std::uint64_t mod = pow_u64(p, e);
  if (m.mod != mod) throw std::domain_error("quasi_class: modulus mismatch");
  PairedClassKey key;
  key.p = p;
  key.e = e;
  key.context = m.kind;

  if (m.kind == MatrixKind::Alternating) {
    AltCanonical can = canonical_alt(m, p, e);
    key.parity_odd = m.n % 2 == 1;
    for (unsigned l : can.lambda)
      if (l >= 1) key.lambda.push_back(l);
    key.residual = can.residual;
    std::size_t expected = key.parity_odd ? 1 : 0;
    if (can.residual == expected) {
      key.kind = KeyKind::Alt;
      key.determinate = true;
    } else {
      key.kind = KeyKind::Undetermined;
      key.capped = true;
    }
    return key;
  }

  std::vector<std::size_t> ic = find_invertible_principal_minor(m, p);
  ModMatrix nil = ic.size() == m.n ? ModMatrix(0, mod, MatrixKind::Symmetric)
                                   : (ic.empty() ? m : schur_complement(m, ic));

  if (p != 2) {
    SymOddCanonical can = canonical_sym_odd(nil, p, e);
    if (!can.capped) {
      key.kind = KeyKind::SymOdd;
      key.determinate = true;
      for (std::size_t i = can.lambda.size(); i-- > 0;) {
        key.lambda.push_back(can.lambda[i]);
        key.eps.push_back(can.eps[i]);
      }
    } else {
      key.kind = KeyKind::Undetermined;
      key.capped = true;
      for (std::size_t i = can.lambda.size(); i-- > 0;) key.lambda.push_back(can.lambda[i]);
    }
    return key;
  }

  TwoAdicDecomposition dec = decompose_sym_2(nil, e, false);
  if (!dec.incomplete && dec.residual == 0) {
    key.kind = KeyKind::SymTwo;
    key.determinate = true;
    key.blocks = dec.blocks;
    PairingGram g = gram_from_two_blocks(dec.blocks);
    key.lambda = g.lambda;
    key.payload = minimal_gram_key(g, budget);
  } else {
    key.kind = KeyKind::Undetermined;
    GroupType gt = group_type(nil, 2, e);
    key.lambda = gt.lambda;
    key.capped = gt.capped;
  }
  return key;
}

bool paired_iso(const ModMatrix& m1, const ModMatrix& m2, std::uint64_t p, unsigned e,
                const ClassifyBudget& budget) {
  PairedClassKey k1 = quasi_class(m1, p, e, budget);
  PairedClassKey k2 = quasi_class(m2, p, e, budget);
  if (!k1.determinate || !k2.determinate)
    throw Indeterminate("paired_iso: quasi-class undetermined at this precision");
  return k1 == k2;
}

AltType alt_type(const ModMatrix& m, std::uint64_t p, unsigned e) {
  AltCanonical can = canonical_alt(m, p, e);
  AltType t;
  unsigned unit_blocks = 0;
  for (unsigned l : can.lambda) {
    if (l >= 1)
      t.torsion.lambda.push_back(l);
    else
      ++unit_blocks;
  }
  t.torsion.capped = can.residual > 0;
  t.residual = can.residual;
  t.corank_mod_p = static_cast<unsigned>(m.n - 2 * unit_blocks);
  return t;
}

PairingGram gram_from_key(const PairedClassKey& key) {
  if (!key.determinate) throw Indeterminate("gram_from_key: undetermined key");
  if (key.kind == KeyKind::SymOdd) {
    std::vector<DiagPart> parts;
    std::uint64_t rp = smallest_nonsquare_unit(key.p);
    for (std::size_t i = 0; i < key.lambda.size(); ++i)
      parts.push_back({key.lambda[i], key.eps[i] ? rp : 1});
    return gram_from_odd_parts(key.p, parts);
  }
  if (key.kind == KeyKind::SymTwo) {
    if (key.blocks.empty() && !key.lambda.empty())
      throw std::domain_error("gram_from_key: key carries no block witness");
    return gram_from_two_blocks(key.blocks);
  }
  if (key.kind == KeyKind::Alt) return standard_alt_gram(key.lambda, key.p);
  throw std::domain_error("gram_from_key: unsupported key kind");
}

ModMatrix representative(const PairedClassKey& key, unsigned e) {
  if (!key.determinate) throw Indeterminate("representative: undetermined key");
  std::uint64_t mod = pow_u64(key.p, e);
  if (key.kind == KeyKind::SymOdd) {
    ModMatrix m(key.lambda.size(), mod, MatrixKind::Symmetric);
    std::uint64_t rp = smallest_nonsquare_unit(key.p);
    for (std::size_t i = 0; i < key.lambda.size(); ++i) {
      if (key.lambda[i] >= e) throw InsufficientPrecision("representative: modulus too small");
      m.at(i, i) = pow_u64(key.p, key.lambda[i]) * (key.eps[i] ? rp : 1) % mod;
    }
    return m;
  }
  if (key.kind == KeyKind::SymTwo) {
    std::size_t n = 0;
    for (const auto& b : key.blocks) n += b.shape == TwoAdicBlock::Shape::Unit ? 1 : 2;
    ModMatrix m(n, mod, MatrixKind::Symmetric);
    std::size_t at = 0;
    for (const auto& b : key.blocks) {
      if (b.d + 3 > e) throw InsufficientPrecision("representative: modulus too small");
      std::uint64_t pd = 1ULL << b.d;
      if (b.shape == TwoAdicBlock::Shape::Unit) {
        m.at(at, at) = pd * b.u % mod;
        at += 1;
      } else if (b.shape == TwoAdicBlock::Shape::U) {
        m.at(at, at + 1) = m.at(at + 1, at) = pd;
        at += 2;
      } else {
        m.at(at, at) = m.at(at + 1, at + 1) = 2 * pd % mod;
        m.at(at, at + 1) = m.at(at + 1, at) = pd;
        at += 2;
      }
    }
    return m;
  }
  // alternating
  std::size_t n = 2 * key.lambda.size() + (key.parity_odd ? 1 : 0);
  ModMatrix m(n, mod, MatrixKind::Alternating);
  for (std::size_t i = 0; i < key.lambda.size(); ++i) {
    if (key.lambda[i] >= e) throw InsufficientPrecision("representative: modulus too small");
    std::uint64_t pl = pow_u64(key.p, key.lambda[i]);
    m.at(2 * i, 2 * i + 1) = pl;
    m.at(2 * i + 1, 2 * i) = mod - pl;
  }
  return m;
}

PairingGram pairing_gram(const IntMatrix& m, std::uint64_t p) {
  using boost::multiprecision::cpp_int;
  std::size_t n = m.n;
  // fraction-free Bareiss determinant
  std::vector<cpp_int> w(n * n);
  for (std::size_t i = 0; i < n * n; ++i) w[i] = m.a[i];
  cpp_int det = 1;
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t kk = 0; kk + 1 < n; ++kk) {
    if (w[kk * n + kk] == 0) {
      std::size_t piv = n;
      for (std::size_t r = kk + 1; r < n; ++r)
        if (w[r * n + kk] != 0) {
          piv = r;
          break;
        }
      if (piv == n) throw SingularError("pairing_gram: matrix is singular");
      for (std::size_t c = 0; c < n; ++c) std::swap(w[kk * n + c], w[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t r = kk + 1; r < n; ++r)
      for (std::size_t c = kk + 1; c < n; ++c)
        w[r * n + c] = (w[r * n + c] * w[kk * n + kk] - w[r * n + kk] * w[kk * n + c]) / prev;
    prev = w[kk * n + kk];
  }
  det = n == 0 ? cpp_int(1) : w[(n - 1) * n + (n - 1)] * sign;
  if (det == 0) throw SingularError("pairing_gram: matrix is singular");
  unsigned v = 0;
  cpp_int d = det < 0 ? cpp_int(-det) : det;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  unsigned e = v + 4;
  cpp_int modc = 1;
  for (unsigned i = 0; i < e; ++i) modc *= p;
  if (modc >= (cpp_int(1) << 31))
    throw BudgetExceeded("pairing_gram: required precision too large");
  ModMatrix mm = reduce_mod(m, static_cast<std::uint64_t>(modc));

  PairingGram g;
  if (p != 2) {
    std::vector<DiagPart> parts = sym_diagonalize_odd(mm, p, e);
    std::vector<DiagPart> torsion;
    for (const auto& pt : parts)
      if (pt.d >= 1) torsion.push_back(pt);
    std::sort(torsion.begin(), torsion.end(),
              [](const DiagPart& a, const DiagPart& b) { return a.d > b.d; });
    g = gram_from_odd_parts(p, torsion);
  } else {
    TwoAdicDecomposition dec = decompose_sym_2(mm, e, true);
    if (dec.residual != 0) throw std::logic_error("pairing_gram: unexpected residual");
    g = gram_from_two_blocks(dec.blocks);
  }

  // perfectness: every nonzero element pairs nontrivially with some generator
  if (g.group_order() <= 4096 && g.k() > 0) {
    std::size_t k = g.k();
    std::uint64_t vmod = g.value_mod();
    std::vector<std::uint64_t> ordmod(k);
    for (std::size_t i = 0; i < k; ++i) ordmod[i] = pow_u64(p, g.lambda[i]);
    std::vector<std::uint64_t> x(k, 0);
    for (std::uint64_t t = 1; t < g.group_order(); ++t) {
      std::size_t j = 0;
      while (++x[j] == ordmod[j]) {
        x[j] = 0;
        ++j;
      }
      bool hit = false;
      for (std::size_t gen = 0; gen < k && !hit; ++gen) {
        __uint128_t acc = 0;
        for (std::size_t a = 0; a < k; ++a)
          acc += (__uint128_t)x[a] * g.scaled[a * k + gen];
        hit = acc % vmod != 0;
      }
      if (!hit) throw std::logic_error("pairing_gram: pairing not perfect");
    }
  }
  return g;
}

}  // namespace coklab
