#pragma once

// JSON (de)serialization for the external interfaces: tableaux as arrays of
// 1/2, operators as triplet lists, tensor vectors as amplitude lists, and
// embedding specs.

#include <nlohmann/json_fwd.hpp>

#include "swlab/diagrams.hpp"
#include "swlab/embeddings.hpp"
#include "swlab/orthoform.hpp"
#include "swlab/tensorspace.hpp"

namespace swlab {

nlohmann::json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j);

// {dim, basis, triplets: [[row, col, value], ...]}
nlohmann::json operator_to_json(const SparseOperator& a);

// {n, amplitudes: [[bitstringAsInteger, re, im], ...]}
nlohmann::json tensor_to_json(const TensorVector& v);
TensorVector tensor_from_json(const nlohmann::json& j);

// {k, stationary, p, q} or {kJump, h: [...]}
nlohmann::json spec_to_json(const EmbeddingSpec& s);
EmbeddingSpec spec_from_json(const nlohmann::json& j);

}  // namespace swlab
