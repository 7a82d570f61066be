#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "taugp/torsion.hpp"

namespace taugp {

// Insertion-ordered JSON keeps the emitted key order canonical, so two
// runs on the same input are byte-identical.
using Json = nlohmann::ordered_json;

std::string scalar_text(const mpq_class& x);

Json matrix_to_json(const Matrix& m);
Json rep_to_json(const Representation& m);
// Inverse of rep_to_json over a known algebra; validates the relations
// through the Representation constructor.
Representation rep_from_json(const AlgebraPtr& a, const Json& j);
Json verdict_to_json(const GpVerdict& v);
Json cm_verdict_to_json(const CmTauVerdict& v);

// Radical-layer text for an indecomposable, e.g. "1/2/3" or "2/(1 3)";
// the zero module prints as "0".
std::string module_label(const Representation& m);
// Bracket notation mirroring the figure style: module summand labels
// first, then one empty slot per support vertex.
std::string pair_label(const RigidPair& rp);

Json graph_to_json(const ExchangeGraph& g, int bound);
std::string graph_to_dot(const ExchangeGraph& g, int bound);

Json torsion_to_json(const TorsionPairDescriptor& d, int bound);

// File cache keyed by algebra content hash plus a tag.
std::string cache_key(const BoundQuiverAlgebra& a, const std::string& tag);
std::optional<Json> cache_load(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, const Json& payload);

}  // namespace taugp
