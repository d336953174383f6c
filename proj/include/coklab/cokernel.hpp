#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coklab/forms.hpp"
#include "coklab/matrix.hpp"

namespace coklab {

// p-group type: lambda nonincreasing, entries in [1, e]; an entry equal to e
// means "at least e" and sets the capped flag
struct GroupType {
  std::vector<unsigned> lambda;
  bool capped = false;
  unsigned dep() const { return lambda.empty() ? 0 : lambda.front(); }
  std::uint64_t order(std::uint64_t p) const;
  bool operator==(const GroupType&) const = default;
};

GroupType group_type(const ModMatrix& m, std::uint64_t p, unsigned e);

// pairing on G = sum Z/p^{lambda_i}; scaled[i*k+j] stores the value
// <g_i, g_j> * p^{lambda_1} as a residue mod p^{lambda_1}
struct PairingGram {
  std::uint64_t p = 0;
  std::vector<unsigned> lambda;  // nonincreasing, all >= 1
  std::vector<std::uint64_t> scaled;
  bool alternating = false;
  std::size_t k() const { return lambda.size(); }
  std::uint64_t value_mod() const { return lambda.empty() ? 1 : pow_u64(p, lambda.front()); }
  std::uint64_t group_order() const;
};

// pairing of the p-part of Cok(M) for a nonsingular integer symmetric matrix
PairingGram pairing_gram(const IntMatrix& m, std::uint64_t p);

// standard alternating pairing on H + H for H of type lambdaH
PairingGram standard_alt_gram(const std::vector<unsigned>& lambdaH, std::uint64_t p);

enum class KeyKind { SymOdd, SymTwo, Alt, Undetermined };

struct PairedClassKey {
  std::uint64_t p = 0;
  unsigned e = 0;
  KeyKind kind = KeyKind::Undetermined;
  MatrixKind context = MatrixKind::Symmetric;  // what was classified
  bool parity_odd = false;                     // alternating context only
  bool determinate = false;
  std::vector<unsigned> lambda;  // nonincreasing
  std::vector<int> eps;          // SymOdd payload
  std::string payload;           // SymTwo canonical minimal-gram payload
  std::size_t residual = 0;      // undetermined alternating leftover block size
  bool capped = false;
  std::vector<TwoAdicBlock> blocks;  // SymTwo witness blocks (not part of identity)

  std::string to_string() const;
  bool operator==(const PairedClassKey& o) const { return to_string() == o.to_string(); }
  bool operator<(const PairedClassKey& o) const { return to_string() < o.to_string(); }
};

struct ClassifyBudget {
  std::uint64_t group_order_cap = 4096;
  std::uint64_t node_cap = 20000000;
};

// quasi-class of Cok with pairing, read off M mod p^e
PairedClassKey quasi_class(const ModMatrix& m, std::uint64_t p, unsigned e,
                           const ClassifyBudget& budget = {});

// throws Indeterminate when either side is quasi-undetermined at this precision
bool paired_iso(const ModMatrix& m1, const ModMatrix& m2, std::uint64_t p, unsigned e,
                const ClassifyBudget& budget = {});

// lexicographically minimal scaled-gram string over group automorphisms
std::string minimal_gram_key(const PairingGram& g, const ClassifyBudget& budget = {});

// automorphisms of (G, pairing); brute-force with pruning
std::uint64_t aut_count_paired(const PairingGram& g, const ClassifyBudget& budget = {});

// automorphisms of H + H preserving the standard alternating pairing
std::uint64_t sp_count(const std::vector<unsigned>& lambdaH, std::uint64_t p,
                       const ClassifyBudget& budget = {});

struct AltType {
  GroupType torsion;
  unsigned corank_mod_p = 0;
  std::size_t residual = 0;
};
AltType alt_type(const ModMatrix& m, std::uint64_t p, unsigned e);

// canonical small matrix in the class of a determinate key, over Z/p^e
ModMatrix representative(const PairedClassKey& key, unsigned e);

// pairing gram of a determinate symmetric key (torsion part)
PairingGram gram_from_key(const PairedClassKey& key);

}  // namespace coklab
