#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coklab/limits.hpp"
#include "coklab/sampling.hpp"

namespace coklab {

// per-prime classification plan for one experiment
struct ClassPlan {
  Modulus modulus;          // product of p^{e_p}
  MatrixKind kind = MatrixKind::Symmetric;
  ClassifyBudget budget;
};

// classify an integer matrix: per-prime quasi keys joined with '|'
std::string combined_key(const IntMatrix& m, const ClassPlan& plan);
std::string combined_key_mod(const ModMatrix& m_mod_a, const ClassPlan& plan);

struct ExposureSnapshot {
  std::size_t t = 0;
  std::vector<PairedClassKey> keys;  // one per prime, ascending p
  std::string combined;
};

struct ExposureRun {
  std::vector<ExposureSnapshot> snapshots;
  std::vector<std::vector<unsigned>> corank_track;  // [prime][t-1] corank of t-corner mod p
};

// reveal corners t = 1..n; throws std::logic_error if the corank step
// invariant |corank(t+1) - corank(t)| <= 1 ever fails along the track
ExposureRun run_exposure(std::size_t n, const EntryDistribution& d, const ClassPlan& plan,
                         const std::vector<std::size_t>& snapshot_ts, std::uint64_t seed,
                         std::uint64_t sample_index = 0);

// terminal-corner law over many independent exposure runs
DistributionTable simulate_terminal(std::size_t n, const EntryDistribution& d,
                                    const ClassPlan& plan, std::uint64_t samples,
                                    std::uint64_t seed, unsigned threads = 1);
DistributionTable simulate_terminal_uniform(std::size_t n, const ClassPlan& plan,
                                            std::uint64_t samples, std::uint64_t seed,
                                            unsigned threads = 1);

struct TransitionTable {
  std::string source;
  DistributionTable law;
  bool exact = false;
  std::uint64_t denominator = 0;  // exact mode: total enumerated borders
};

// exact one-step kernel by full enumeration of (xi, z) mod p^e
TransitionTable enumerate_transition(const ModMatrix& m, std::uint64_t p, unsigned e,
                                     std::uint64_t budget = 100000000,
                                     const ClassifyBudget& cb = {});

TransitionTable estimate_transition(const ModMatrix& m, std::uint64_t p, unsigned e,
                                    const std::optional<EntryDistribution>& d,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const ClassifyBudget& cb = {});

struct CorankWalkReport {
  std::uint64_t steps_corank1 = 0, dec_corank1 = 0;
  std::uint64_t steps_corank2p = 0, dec_corank2p = 0;
  bool increments_ok = true;
  double dec_rate_corank1() const {
    return steps_corank1 ? static_cast<double>(dec_corank1) / steps_corank1 : 0.0;
  }
  double dec_rate_corank2p() const {
    return steps_corank2p ? static_cast<double>(dec_corank2p) / steps_corank2p : 0.0;
  }
};

// uniform-mod-p symmetric growth process; transitions conditioned on the
// corank at steps t in [n/2, n)
CorankWalkReport corank_walk(std::size_t n, std::uint64_t p, std::uint64_t runs,
                             std::uint64_t seed);

struct JointCornersReport {
  DistributionTable joint;     // keys "k_{n-j+1}>...>k_n"
  DistributionTable marginal;  // first recorded corner
  std::map<std::string, double> product_form;  // marginal x exact kernels
  double l1 = 0.0;
  double covered = 0.0;  // joint mass with a determinate product-form value
};

JointCornersReport joint_corners(std::size_t n, unsigned j, const EntryDistribution& d,
                                 std::uint64_t p, unsigned e, std::uint64_t samples,
                                 std::uint64_t seed, std::uint64_t enum_budget = 100000000);

struct SimulationReport {
  DistributionTable law;                    // combined-key terminal law
  std::map<std::string, double> reference;  // limit masses of determinate keys
  std::vector<DistributionTable> corank;    // per prime factor, keys "0","1",...
  double covered = 0.0;                     // law mass holding a reference value
  double l1_covered = 0.0;                  // L1 distance over covered keys
};

// terminal law plus limit-law reference and per-prime corank marginals;
// d == nullptr means uniform residues mod the plan modulus
SimulationReport simulate_reference(std::size_t n, const EntryDistribution* d,
                                    const ClassPlan& plan, std::uint64_t samples,
                                    std::uint64_t seed, unsigned threads = 1);

struct CouplingReport {
  DistributionTable balanced;
  DistributionTable uniform;
  std::map<std::string, double> reference;  // limit law on determinate keys
  double d_balanced_uniform = 0.0;
  double d_balanced_reference = 0.0;
  double d_uniform_reference = 0.0;
};

CouplingReport coupling_compare(std::size_t n, const EntryDistribution& d, const ClassPlan& plan,
                                std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace coklab
