#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "coklab/audit.hpp"
#include "coklab/exposure.hpp"
#include "coklab/json_io.hpp"

using namespace coklab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "coklab 0.1.0";

// exit codes: 0 ok, 2 usage/input, 3 indeterminate, 4 budget exceeded
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitBudget = 4;

std::uint64_t env_budget() {
  const char* v = std::getenv("COKLAB_BUDGET");
  if (!v) return 100000000;
  char* end = nullptr;
  unsigned long long b = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || b == 0)
    throw std::domain_error("COKLAB_BUDGET must be a positive integer");
  return b;
}

json table_json(const DistributionTable& t) {
  json probs = json::object(), counts = json::object();
  for (const auto& [k, c] : t.counts) {
    counts[k] = c;
    probs[k] = t.prob(k);
  }
  return {{"samples", t.samples}, {"counts", counts}, {"probabilities", probs}};
}

json key_json(const PairedClassKey& k) {
  json j = {{"p", k.p},       {"e", k.e},
            {"key", k.to_string()}, {"determinate", k.determinate},
            {"lambda", k.lambda},   {"capped", k.capped}};
  if (k.context == MatrixKind::Alternating) {
    j["parity"] = k.parity_odd ? "odd" : "even";
    j["residual"] = k.residual;
  }
  return j;
}

struct Emitter {
  std::string out_path, csv_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(json report, const DistributionTable* table = nullptr) const {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["version"] = kVersion;
    report["runtime_seconds"] = secs;
    if (out_path.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::domain_error("cannot open output file: " + out_path);
      f << report.dump(2) << "\n";
    }
    if (!csv_path.empty()) {
      if (!table) throw std::domain_error("this command produces no CSV table");
      std::ofstream f(csv_path);
      if (!f) throw std::domain_error("cannot open CSV file: " + csv_path);
      f << table->to_csv();
    }
  }
};

// flat JSON config: {"option": value} or {"subcommand.option": value}
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    input >> j;
    if (!j.is_object()) throw CLI::FileError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, val] : j.items()) {
      CLI::ConfigItem item;
      std::size_t pos = 0, dot;
      std::string rest = key;
      while ((dot = rest.find('.')) != std::string::npos) {
        item.parents.push_back(rest.substr(0, dot));
        rest = rest.substr(dot + 1);
      }
      (void)pos;
      item.name = rest;
      if (val.is_array())
        for (const auto& v : val)
          item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      else
        item.inputs.push_back(val.is_string() ? val.get<std::string>() : val.dump());
      items.push_back(std::move(item));
    }
    return items;
  }
};

ModMatrix load_residue_matrix(const std::string& path, std::uint64_t p, unsigned e) {
  std::uint64_t mod = pow_u64(p, e);
  json j = load_json_file(path);
  if (j.value("modulus", std::uint64_t{0}) == 0) return reduce_mod(int_matrix_from_json(j), mod);
  ModMatrix m = mod_matrix_from_json(j);
  if (m.mod == mod) return m;
  if (m.mod % mod == 0) {
    ModMatrix r(m.n, mod, m.kind);
    for (std::size_t i = 0; i < m.n * m.n; ++i) r.a[i] = m.a[i] % mod;
    return r;
  }
  throw std::domain_error("matrix modulus is incompatible with the requested prime power");
}

std::vector<unsigned> parse_group(const std::string& spec, std::uint64_t p) {
  std::vector<unsigned> lambda;
  if (spec.empty() || spec == "trivial") return lambda;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.rfind("Z/", 0) != 0) throw std::domain_error("group spec: expected Z/q factors");
    std::uint64_t q = std::stoull(part.substr(2));
    unsigned l = 0;
    while (q > 1) {
      if (q % p) throw std::domain_error("group spec: " + part + " is not a power of the prime");
      q /= p;
      ++l;
    }
    if (l == 0) throw std::domain_error("group spec: trivial factor " + part);
    lambda.push_back(l);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cokernel-with-pairing laboratory"};
  app.require_subcommand(1);
  app.set_config("--config")->description("JSON config file merged under flags");
  app.config_formatter(std::make_shared<JsonConfig>());

  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path, csv_path;
  app.add_option("--threads", threads, "worker pool size (output invariant to it)");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--csv", csv_path, "also write the main table as CSV");

  std::uint64_t default_budget = 100000000;

  // ---- cokernel ----
  auto* c_cok = app.add_subcommand("cokernel", "classify one matrix per prime");
  std::string cok_matrix;
  std::vector<std::uint64_t> cok_primes;
  unsigned cok_exp = 0;
  std::uint64_t cok_modulus = 0;
  c_cok->add_option("--matrix", cok_matrix, "matrix JSON file")->required();
  c_cok->add_option("--prime", cok_primes, "prime(s) to localize at");
  c_cok->add_option("--exp", cok_exp, "precision exponent e (classes read mod p^e)");
  c_cok->add_option("--modulus", cok_modulus, "alternative: full modulus, factorized");

  // ---- simulate ----
  auto* c_sim = app.add_subcommand("simulate", "terminal cokernel law vs limit law");
  std::string sim_kind = "sym", sim_dist = "bernoulli:0.5";
  std::size_t sim_n = 40;
  std::vector<std::uint64_t> sim_primes{3};
  unsigned sim_depth = 1;
  std::uint64_t sim_samples = 10000, sim_seed = 1;
  bool sim_uniform = false;
  c_sim->add_option("--kind", sim_kind, "sym | alt")->check(CLI::IsMember({"sym", "alt"}));
  c_sim->add_option("--n", sim_n, "matrix size");
  c_sim->add_option("--dist", sim_dist, "entry distribution preset");
  c_sim->add_flag("--uniform", sim_uniform, "uniform residues instead of --dist");
  c_sim->add_option("--primes", sim_primes, "primes to classify at");
  c_sim->add_option("--depth-cap", sim_depth, "class depth resolved exactly");
  c_sim->add_option("--samples", sim_samples, "Monte Carlo samples");
  c_sim->add_option("--seed", sim_seed, "PRF master seed");

  // ---- transition ----
  auto* c_tr = app.add_subcommand("transition", "one-step border transition kernel");
  std::string tr_matrix, tr_dist;
  std::uint64_t tr_p = 3, tr_samples = 10000, tr_seed = 1, tr_budget = 0;
  unsigned tr_e = 1;
  bool tr_enum = false;
  c_tr->add_option("--matrix", tr_matrix, "source matrix JSON file")->required();
  c_tr->add_option("--prime", tr_p, "prime p");
  c_tr->add_option("--exp", tr_e, "exponent e");
  c_tr->add_flag("--enumerate", tr_enum, "exact enumeration of all borders");
  c_tr->add_option("--samples", tr_samples, "samples for the estimated kernel");
  c_tr->add_option("--seed", tr_seed, "PRF master seed");
  c_tr->add_option("--dist", tr_dist, "border entry distribution (default uniform)");
  c_tr->add_option("--budget", tr_budget, "enumeration budget (default COKLAB_BUDGET)");

  // ---- corank-law ----
  auto* c_cw = app.add_subcommand("corank-law", "corank decrease rates along exposure");
  std::size_t cw_n = 60;
  std::uint64_t cw_p = 2, cw_runs = 200, cw_seed = 1;
  c_cw->add_option("--n", cw_n, "matrix size");
  c_cw->add_option("--p", cw_p, "prime");
  c_cw->add_option("--runs", cw_runs, "independent exposure runs");
  c_cw->add_option("--seed", cw_seed, "PRF master seed");

  // ---- joint-corners ----
  auto* c_jc = app.add_subcommand("joint-corners", "joint law of trailing corners");
  std::size_t jc_n = 30;
  unsigned jc_j = 2, jc_e = 1;
  std::string jc_dist = "bernoulli:0.5";
  std::uint64_t jc_p = 3, jc_samples = 10000, jc_seed = 1, jc_budget = 0;
  c_jc->add_option("--n", jc_n, "matrix size");
  c_jc->add_option("--j", jc_j, "number of trailing corners");
  c_jc->add_option("--dist", jc_dist, "entry distribution preset");
  c_jc->add_option("--p", jc_p, "prime");
  c_jc->add_option("--exp", jc_e, "exponent e");
  c_jc->add_option("--samples", jc_samples, "Monte Carlo samples");
  c_jc->add_option("--seed", jc_seed, "PRF master seed");
  c_jc->add_option("--budget", jc_budget, "enumeration budget (default COKLAB_BUDGET)");

  // ---- audit ----
  auto* c_au = app.add_subcommand("audit", "non-sparsity events on one matrix");
  std::string au_event = "S1", au_matrix, au_builtin;
  std::size_t au_n = 14;
  std::uint64_t au_p = 2, au_seed = 0, au_budget = 0;
  bool au_exhaustive = false, au_sample = false;
  AuditParams au_params;
  std::uint64_t au_corank_bound = 0, au_ibound = 0, au_weight_bound = 0, au_comb_min = 0;
  std::int64_t au_window_start = -1, au_i2max = -1;
  c_au->add_option("--event", au_event, "S1 | S2 | A1 | A2 | S1' | S2'")
      ->check(CLI::IsMember({"S1", "S2", "A1", "A2", "S1'", "S2'"}));
  c_au->add_option("--matrix", au_matrix, "matrix JSON file");
  c_au->add_option("--builtin", au_builtin, "identity | zero test matrix")
      ->check(CLI::IsMember({"identity", "zero"}));
  c_au->add_flag("--sample", au_sample, "audit a uniform random matrix instead");
  c_au->add_option("--n", au_n, "size for --builtin / --sample");
  c_au->add_option("--p", au_p, "prime");
  c_au->add_option("--seed", au_seed, "seed for --sample");
  c_au->add_flag("--exhaustive", au_exhaustive, "fail (exit 4) if the search is truncated");
  auto* oc = c_au->add_option("--corank-bound", au_corank_bound, "override corank bound");
  auto* oi = c_au->add_option("--ibound", au_ibound, "override tolerated orthogonal-row count");
  auto* ow = c_au->add_option("--weight-bound", au_weight_bound, "override xi weight bound");
  auto* os = c_au->add_option("--window-start", au_window_start, "override window start row");
  auto* om = c_au->add_option("--comb-weight-min", au_comb_min, "override combination weight");
  auto* o2 = c_au->add_option("--i2-max", au_i2max, "override max |I2|");
  c_au->add_option("--budget", au_budget, "search budget (default COKLAB_BUDGET)");

  // ---- limits ----
  auto* c_li = app.add_subcommand("limits", "reference limit values for a class");
  std::uint64_t li_p = 3;
  std::string li_group, li_pairing, li_parity = "even";
  bool li_alt = false;
  unsigned li_exp = 0;
  c_li->add_option("--primes,--p", li_p, "prime");
  c_li->add_option("--group", li_group, "p-group, e.g. Z/3 or Z/9xZ/3");
  c_li->add_option("--pairing", li_pairing,
                   "odd p: comma list of diagonal units or s/n classes per factor");
  c_li->add_flag("--alt", li_alt, "alternating context (group is H, doubled)");
  c_li->add_option("--parity", li_parity, "odd | even (alternating context)")
      ->check(CLI::IsMember({"odd", "even"}));
  c_li->add_option("--exp", li_exp, "precision exponent (default depth + 1)");

  // ---- bounds ----
  auto* c_bo = app.add_subcommand("bounds", "character / entropy / Hamming bound checks");
  std::string bo_dist = "bernoulli:0.5";
  std::uint64_t bo_amax = 10, bo_p = 2;
  unsigned bo_n = 32;
  std::vector<double> bo_x{0.1, 0.25, 0.5};
  c_bo->add_option("--dist", bo_dist, "entry distribution preset");
  c_bo->add_option("--amax", bo_amax, "check the character bound for a = 2..amax");
  c_bo->add_option("--p", bo_p, "prime for the Hamming/entropy suite");
  c_bo->add_option("--n", bo_n, "length for the Hamming suite");
  c_bo->add_option("--x", bo_x, "relative radii, each <= (p-1)/p");

  // let the global --out/--csv/--threads flags appear after the subcommand too
  for (auto* sub : {c_cok, c_sim, c_tr, c_cw, c_jc, c_au, c_li, c_bo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  Emitter emit{out_path, csv_path};
  try {
    default_budget = env_budget();
    if (tr_budget == 0) tr_budget = default_budget;
    if (jc_budget == 0) jc_budget = default_budget;
    if (au_budget == 0) au_budget = default_budget;

    if (app.got_subcommand(c_cok)) {
      std::vector<PrimePower> pps;
      if (cok_modulus > 1) {
        for (const auto& pp : factorize(cok_modulus).factors) pps.push_back(pp);
      } else {
        if (cok_primes.empty() || cok_exp == 0)
          throw std::domain_error("need --prime and --exp, or --modulus");
        for (std::uint64_t p : cok_primes) {
          if (!is_prime(p)) throw std::domain_error("--prime must be prime");
          pps.push_back({p, cok_exp});
        }
      }
      json keys = json::array();
      bool all_det = true;
      for (const auto& pp : pps) {
        ModMatrix m = load_residue_matrix(cok_matrix, pp.p, pp.e);
        PairedClassKey key = quasi_class(m, pp.p, pp.e);
        json kj = key_json(key);
        GroupType gt = group_type(m, pp.p, pp.e);
        kj["group_lambda"] = gt.lambda;
        kj["group_capped"] = gt.capped;
        kj["group_order"] = gt.order(pp.p);
        if (key.determinate && key.context == MatrixKind::Symmetric) {
          PairingGram g = gram_from_key(key);
          kj["gram"] = {{"lambda", g.lambda}, {"scaled", g.scaled}};
        }
        all_det = all_det && key.determinate;
        keys.push_back(std::move(kj));
      }
      json rep = {{"command", "cokernel"},
                  {"parameters", {{"matrix", cok_matrix}, {"modulus", cok_modulus}}},
                  {"keys", keys}};
      emit.emit(rep);
      return all_det ? 0 : kExitIndeterminate;
    }

    if (app.got_subcommand(c_sim)) {
      ClassPlan plan;
      plan.kind = sim_kind == "alt" ? MatrixKind::Alternating : MatrixKind::Symmetric;
      plan.modulus = modulus_for(sim_primes, sim_depth, plan.kind);
      EntryDistribution d;
      if (!sim_uniform) d = EntryDistribution::preset(sim_dist);
      SimulationReport rep = simulate_reference(sim_n, sim_uniform ? nullptr : &d, plan,
                                                sim_samples, sim_seed, threads);
      json coranks = json::array();
      json nu_ref = json::object();
      for (std::size_t pi = 0; pi < plan.modulus.factors.size(); ++pi) {
        std::uint64_t p = plan.modulus.factors[pi].p;
        coranks.push_back(table_json(rep.corank[pi]));
        json nu = json::array();
        for (int k = 0; k <= 6; ++k) {
          double v = plan.kind == MatrixKind::Alternating
                         ? (sim_n % 2 ? nu_inf_alt_odd(p, k) : nu_inf_alt_even(p, k))
                         : nu_inf_sym(p, k);
          nu.push_back(v);
        }
        nu_ref[std::to_string(p)] = nu;
      }
      json out = {{"command", "simulate"},
                  {"parameters",
                   {{"kind", sim_kind},
                    {"n", sim_n},
                    {"dist", sim_uniform ? "uniform" : sim_dist},
                    {"modulus", plan.modulus.a},
                    {"depth_cap", sim_depth},
                    {"samples", sim_samples},
                    {"seed", sim_seed}}},
                  {"law", table_json(rep.law)},
                  {"reference", rep.reference},
                  {"covered_mass", rep.covered},
                  {"l1_distance_covered", rep.l1_covered},
                  {"corank", coranks},
                  {"nu_reference", nu_ref}};
      emit.emit(out, &rep.law);
      return 0;
    }

    if (app.got_subcommand(c_tr)) {
      ModMatrix m = load_residue_matrix(tr_matrix, tr_p, tr_e);
      TransitionTable t;
      if (tr_enum) {
        t = enumerate_transition(m, tr_p, tr_e, tr_budget);
      } else {
        std::optional<EntryDistribution> d;
        if (!tr_dist.empty()) d = EntryDistribution::preset(tr_dist);
        t = estimate_transition(m, tr_p, tr_e, d, tr_samples, tr_seed);
      }
      json out = {{"command", "transition"},
                  {"parameters",
                   {{"matrix", tr_matrix},
                    {"prime", tr_p},
                    {"exp", tr_e},
                    {"enumerate", tr_enum},
                    {"samples", tr_samples},
                    {"seed", tr_seed},
                    {"dist", tr_dist.empty() ? "uniform" : tr_dist}}},
                  {"source", t.source},
                  {"exact", t.exact},
                  {"denominator", t.denominator},
                  {"law", table_json(t.law)}};
      emit.emit(out, &t.law);
      return 0;
    }

    if (app.got_subcommand(c_cw)) {
      if (!is_prime(cw_p)) throw std::domain_error("--p must be prime");
      CorankWalkReport rep = corank_walk(cw_n, cw_p, cw_runs, cw_seed);
      json out = {{"command", "corank-law"},
                  {"parameters", {{"n", cw_n}, {"p", cw_p}, {"runs", cw_runs}, {"seed", cw_seed}}},
                  {"steps_corank1", rep.steps_corank1},
                  {"dec_rate_corank1", rep.dec_rate_corank1()},
                  {"reference_corank1", 1.0 - 1.0 / static_cast<double>(cw_p)},
                  {"steps_corank2plus", rep.steps_corank2p},
                  {"dec_rate_corank2plus", rep.dec_rate_corank2p()},
                  {"reference_corank2plus_floor",
                   1.0 - 1.0 / static_cast<double>(cw_p * cw_p)},
                  {"increments_ok", rep.increments_ok}};
      emit.emit(out);
      return 0;
    }

    if (app.got_subcommand(c_jc)) {
      EntryDistribution d = EntryDistribution::preset(jc_dist);
      JointCornersReport rep =
          joint_corners(jc_n, jc_j, d, jc_p, jc_e, jc_samples, jc_seed, jc_budget);
      json out = {{"command", "joint-corners"},
                  {"parameters",
                   {{"n", jc_n},
                    {"j", jc_j},
                    {"dist", jc_dist},
                    {"p", jc_p},
                    {"exp", jc_e},
                    {"samples", jc_samples},
                    {"seed", jc_seed}}},
                  {"joint", table_json(rep.joint)},
                  {"marginal", table_json(rep.marginal)},
                  {"product_form", rep.product_form},
                  {"l1", rep.l1},
                  {"covered_mass", rep.covered}};
      emit.emit(out, &rep.joint);
      return 0;
    }

    if (app.got_subcommand(c_au)) {
      if (*oc) au_params.corank_bound = au_corank_bound;
      if (*oi) au_params.ibound = au_ibound;
      if (*ow) au_params.weight_bound = au_weight_bound;
      if (*os) au_params.window_start = static_cast<std::size_t>(au_window_start);
      if (*om) au_params.comb_weight_min = au_comb_min;
      if (*o2) au_params.i2_max = static_cast<std::size_t>(au_i2max);
      au_params.budget = au_budget;
      if (!is_prime(au_p)) throw std::domain_error("--p must be prime");

      MatrixKind kind = (au_event == "A1" || au_event == "A2") ? MatrixKind::Alternating
                                                               : MatrixKind::Symmetric;
      ModMatrix m;
      if (!au_matrix.empty()) {
        m = load_residue_matrix(au_matrix, au_p, 1);
      } else if (au_builtin == "identity") {
        m = ModMatrix::identity(au_n, au_p);
        m.kind = MatrixKind::Symmetric;
      } else if (au_builtin == "zero") {
        m = ModMatrix(au_n, au_p, kind);
      } else if (au_sample) {
        Prf prf{au_seed};
        m = sample_uniform_mod(au_n, kind, au_p, prf, 0);
      } else {
        throw std::domain_error("need --matrix, --builtin, or --sample");
      }
      if (m.kind != kind) throw std::domain_error("matrix kind does not fit the event");

      NonSparsityReport rep;
      if (au_event == "S1" || au_event == "A1")
        rep = check_corank_event(m, au_p, au_params);
      else if (au_event == "S2" || au_event == "A2")
        rep = check_orthogonality_event(m, au_p, au_params);
      else if (au_event == "S1'")
        rep = check_corank_event_2(m, au_params);
      else
        rep = check_sdagger(m, au_params);
      if (au_exhaustive && rep.verdict == AuditVerdict::PassSearch)
        throw BudgetExceeded("audit: exhaustive verdict requested but search was truncated");

      json out = {{"command", "audit"},
                  {"parameters",
                   {{"event", au_event},
                    {"n", m.n},
                    {"p", au_p},
                    {"source", !au_matrix.empty() ? au_matrix
                               : au_sample        ? "sample:" + std::to_string(au_seed)
                                                  : au_builtin}}},
                  {"event", rep.event},
                  {"verdict", rep.verdict == AuditVerdict::Violated ? "violated"
                              : rep.verdict == AuditVerdict::PassExhaustive
                                  ? "pass-exhaustive"
                                  : "pass-search"},
                  {"witness", rep.witness},
                  {"witness_set", rep.witness_set},
                  {"detail", rep.detail}};
      emit.emit(out);
      return 0;
    }

    if (app.got_subcommand(c_li)) {
      if (!is_prime(li_p)) throw std::domain_error("--primes must name a prime");
      std::vector<unsigned> lambda = parse_group(li_group, li_p);
      unsigned dep = lambda.empty() ? 0 : lambda.front();
      unsigned e = li_exp ? li_exp : dep + 1;
      json out = {{"command", "limits"},
                  {"parameters",
                   {{"p", li_p},
                    {"group", li_group.empty() ? "trivial" : li_group},
                    {"pairing", li_pairing},
                    {"alt", li_alt},
                    {"parity", li_parity},
                    {"exp", e}}},
                  {"product_sym", product_sym(li_p)},
                  {"tail_bound", std::fabs(product_sym(li_p) - product_sym(li_p, 45))}};
      if (li_p == 2) out["product_alt_odd"] = product_alt_odd(2);
      json nu = json::array();
      for (int k = 0; k <= 8; ++k)
        nu.push_back(li_alt ? (li_parity == "odd" ? nu_inf_alt_odd(li_p, k)
                                                  : nu_inf_alt_even(li_p, k))
                            : nu_inf_sym(li_p, k));
      out["nu"] = nu;

      PairedClassKey key;
      key.p = li_p;
      key.e = e;
      key.determinate = true;
      if (li_alt) {
        key.kind = KeyKind::Alt;
        key.context = MatrixKind::Alternating;
        key.parity_odd = li_parity == "odd";
        key.lambda = lambda;
        out["sp_count"] = sp_count(lambda, li_p);
      } else {
        if (li_p == 2)
          throw std::domain_error("symmetric p=2 references need a matrix; use `cokernel`");
        key.kind = KeyKind::SymOdd;
        key.lambda = lambda;
        key.eps.assign(lambda.size(), 0);
        if (!li_pairing.empty()) {
          std::stringstream ss(li_pairing);
          std::string tok;
          std::size_t i = 0;
          while (std::getline(ss, tok, ',')) {
            if (i >= key.eps.size()) throw std::domain_error("--pairing has too many entries");
            if (tok == "s")
              key.eps[i] = 0;
            else if (tok == "n")
              key.eps[i] = 1;
            else
              key.eps[i] = square_class_odd(std::stoull(tok), li_p);
            ++i;
          }
        }
        out["aut_count"] = aut_count_paired(gram_from_key(key));
      }
      out["key"] = key.to_string();
      out["mu_inf"] = mu_inf_local(key);
      emit.emit(out);
      return 0;
    }

    if (app.got_subcommand(c_bo)) {
      EntryDistribution d = EntryDistribution::preset(bo_dist);
      json chars = json::array();
      bool all_pass = true;
      for (std::uint64_t a = 2; a <= bo_amax; ++a) {
        CharBoundReport r = char_bound_check(d, a);
        chars.push_back({{"a", a}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass()}});
        all_pass = all_pass && r.pass();
      }
      json hams = json::array();
      for (double x : bo_x) {
        if (x <= 0.0 || x > 1.0 - 1.0 / static_cast<double>(bo_p))
          throw std::domain_error("--x must lie in (0, (p-1)/p]");
        HammingBoundReport r = hamming_bound_check(bo_p, bo_n, x);
        hams.push_back({{"x", x},
                        {"volume", static_cast<double>(r.volume)},
                        {"bound", static_cast<double>(r.bound)},
                        {"entropy", entropy_p(bo_p, x)},
                        {"pass", r.pass()}});
        all_pass = all_pass && r.pass();
      }
      json out = {{"command", "bounds"},
                  {"parameters",
                   {{"dist", bo_dist}, {"amax", bo_amax}, {"p", bo_p}, {"n", bo_n}, {"x", bo_x}}},
                  {"char_bound", chars},
                  {"hamming_bound", hams},
                  {"all_pass", all_pass}};
      emit.emit(out);
      return 0;
    }

    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const Indeterminate& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
