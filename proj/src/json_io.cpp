#include "coklab/json_io.hpp"

#include <fstream>

namespace coklab {

namespace {

std::string kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Symmetric:
      return "symmetric";
    case MatrixKind::Alternating:
      return "alternating";
    default:
      return "general";
  }
}

MatrixKind kind_from(const std::string& s) {
  if (s == "symmetric") return MatrixKind::Symmetric;
  if (s == "alternating") return MatrixKind::Alternating;
  if (s == "general") return MatrixKind::General;
  throw std::domain_error("unknown matrix kind: " + s);
}

}  // namespace

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    entries.push_back(row);
  }
  return {{"n", m.n}, {"modulus", 0}, {"kind", kind_name(m.kind)}, {"entries", entries}};
}

nlohmann::json matrix_to_json(const ModMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    entries.push_back(row);
  }
  return {{"n", m.n}, {"modulus", m.mod}, {"kind", kind_name(m.kind)}, {"entries", entries}};
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (j.value("modulus", 0) != 0)
    throw std::domain_error("expected an integer matrix (modulus 0)");
  std::size_t n = j.at("n").get<std::size_t>();
  IntMatrix m(n, kind_from(j.at("kind").get<std::string>()));
  const auto& entries = j.at("entries");
  if (entries.size() != n) throw std::domain_error("entries: wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::domain_error("entries: wrong column count");
    for (std::size_t jj = 0; jj < n; ++jj) m.at(i, jj) = entries[i][jj].get<std::int64_t>();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (m.kind == MatrixKind::Symmetric && m.at(i, jj) != m.at(jj, i))
        throw std::domain_error("entries: not symmetric");
      if (m.kind == MatrixKind::Alternating &&
          (m.at(i, jj) != -m.at(jj, i) || (i == jj && m.at(i, i) != 0)))
        throw std::domain_error("entries: not alternating");
    }
  return m;
}

ModMatrix mod_matrix_from_json(const nlohmann::json& j) {
  std::uint64_t mod = j.at("modulus").get<std::uint64_t>();
  if (mod == 0) throw std::domain_error("expected a residue matrix (modulus > 0)");
  std::size_t n = j.at("n").get<std::size_t>();
  IntMatrix m(n, kind_from(j.at("kind").get<std::string>()));
  const auto& entries = j.at("entries");
  if (entries.size() != n) throw std::domain_error("entries: wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::domain_error("entries: wrong column count");
    for (std::size_t jj = 0; jj < n; ++jj) m.at(i, jj) = entries[i][jj].get<std::int64_t>();
  }
  return reduce_mod(m, mod);
}

nlohmann::json distribution_to_json(const EntryDistribution& d) {
  if (!d.name.empty()) return {{"preset", d.name}};
  return {{"support", d.support}, {"probs", d.probs}};
}

EntryDistribution distribution_from_json(const nlohmann::json& j) {
  if (j.contains("preset")) return EntryDistribution::preset(j.at("preset").get<std::string>());
  EntryDistribution d;
  d.support = j.at("support").get<std::vector<std::int64_t>>();
  d.probs = j.at("probs").get<std::vector<double>>();
  d.validate();
  return d;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace coklab
