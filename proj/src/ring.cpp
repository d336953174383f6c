#include "coklab/ring.hpp"

namespace coklab {

std::uint64_t PrimePower::value() const { return pow_u64(p, e); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Modulus factorize(std::uint64_t a) {
  if (a < 2) throw std::domain_error("factorize: modulus must be >= 2");
  Modulus m;
  m.a = a;
  std::uint64_t rest = a;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    m.factors.push_back({d, e});
  }
  if (rest > 1) m.factors.push_back({rest, 1});
  return m;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

unsigned val_p(std::uint64_t x, std::uint64_t p, unsigned e) {
  unsigned v = 0;
  while (v < e && x % p == 0 && x != 0) {
    x /= p;
    ++v;
  }
  return x == 0 ? e : v;
}

std::uint64_t inverse_unit(std::uint64_t x, std::uint64_t m) {
  x %= m;
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(x);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw NonUnitError("inverse_unit: not a unit");
  if (t0 < 0) t0 += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t0);
}

bool is_unit(std::uint64_t x, std::uint64_t m) {
  x %= m;
  std::uint64_t a = m, b = x;
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a == 1;
}

static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % m;
    b = (__uint128_t)b * b % m;
    e >>= 1;
  }
  return r;
}

int square_class_odd(std::uint64_t u, std::uint64_t p) {
  std::uint64_t r = u % p;
  if (r == 0) throw NonUnitError("square_class_odd: not a unit");
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 0 : 1;
}

unsigned square_class_two(std::uint64_t u) {
  if (u % 2 == 0) throw NonUnitError("square_class_two: not a unit");
  return static_cast<unsigned>(u % 8);
}

std::uint64_t smallest_nonsquare_unit(std::uint64_t p) {
  for (std::uint64_t r = 2; r < p; ++r)
    if (square_class_odd(r, p) == 1) return r;
  throw std::domain_error("smallest_nonsquare_unit: no nonsquare mod p");
}

std::vector<std::uint64_t> crt_split(std::uint64_t x, const Modulus& m) {
  std::vector<std::uint64_t> parts;
  parts.reserve(m.factors.size());
  for (const auto& f : m.factors) parts.push_back(x % f.value());
  return parts;
}

std::uint64_t crt_combine(const std::vector<std::uint64_t>& parts, const Modulus& m) {
  if (parts.size() != m.factors.size())
    throw std::domain_error("crt_combine: part count mismatch");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::uint64_t q = m.factors[i].value();
    std::uint64_t rest = m.a / q;
    std::uint64_t inv = inverse_unit(rest % q, q);
    std::uint64_t term = (__uint128_t)(parts[i] % q) * inv % q;
    x = (x + (__uint128_t)term * rest) % m.a;
  }
  return x;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace coklab
