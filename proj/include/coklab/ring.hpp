#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coklab {

// error taxonomy shared across modules
struct NonUnitError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularError : std::domain_error {
  using std::domain_error::domain_error;
};
struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Indeterminate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t value() const;
};

// a modulus together with its prime-power factorization, primes ascending
struct Modulus {
  std::uint64_t a = 1;
  std::vector<PrimePower> factors;
};

bool is_prime(std::uint64_t n);
Modulus factorize(std::uint64_t a);
std::uint64_t pow_u64(std::uint64_t base, unsigned e);

// valuation of x (given as residue mod p^e); returns e when x == 0
unsigned val_p(std::uint64_t x, std::uint64_t p, unsigned e);

// inverse of a unit mod m (any m >= 2); throws NonUnitError
std::uint64_t inverse_unit(std::uint64_t x, std::uint64_t m);

bool is_unit(std::uint64_t x, std::uint64_t m);

// p odd: 0 = square, 1 = nonsquare (of a unit, decided mod p)
int square_class_odd(std::uint64_t u, std::uint64_t p);

// p = 2: class of a unit is its residue mod 8; u must be odd
unsigned square_class_two(std::uint64_t u);

// least positive nonsquare unit mod p (p odd)
std::uint64_t smallest_nonsquare_unit(std::uint64_t p);

std::vector<std::uint64_t> crt_split(std::uint64_t x, const Modulus& m);
std::uint64_t crt_combine(const std::vector<std::uint64_t>& parts, const Modulus& m);

// splitmix64 finalizer, the building block of the counter-based PRF
std::uint64_t mix64(std::uint64_t x);

}  // namespace coklab
