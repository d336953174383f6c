#pragma once

#include <string>

#include <json.hpp>

#include "coklab/matrix.hpp"
#include "coklab/sampling.hpp"

namespace coklab {

// matrix schema: {"n":..,"modulus":..,"kind":"symmetric"|"alternating"|"general",
//                 "entries":[[..],..]}; modulus 0 means an integer matrix
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json matrix_to_json(const ModMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
ModMatrix mod_matrix_from_json(const nlohmann::json& j);

// distribution schema: {"preset":"bernoulli:0.5"} or {"support":[..],"probs":[..]}
nlohmann::json distribution_to_json(const EntryDistribution& d);
EntryDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace coklab
