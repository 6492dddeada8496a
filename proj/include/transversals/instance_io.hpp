#pragma once

// JSON instance files:
//   {"kind": "hamiltonian" | "perfect_matching", "num_vertices": n,
//    "subgraphs": [[[u, v], ...], k, ...],     // color c = position c; an
//                                              // integer k repeats subgraph k < c
//    "base_edges": [[u, v], ...],              // optional, extra base edges
//    "planted": {"edges": [[u, v], ...], "colors": [c, ...]},   // optional
//    "metadata": {"key": "value", ...}}        // optional
// The base graph is the union of the subgraphs plus base_edges.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "transversals/core.hpp"

namespace transversals {

struct InstanceFile {
  SubgraphFamily family;
  std::optional<Transversal> planted;
  std::map<std::string, std::string> metadata;
};

/// Throws Error(parse_error) on malformed input or an invalid family, and
/// Error(invalid_transversal) when the planted transversal fails validation.
InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceFile& inst);

InstanceFile read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const InstanceFile& inst);

/// {"edges": [[u, v], ...], "colors": [...]} in canonical edge order.
nlohmann::json transversal_to_json(const Transversal& t);
Transversal transversal_from_json(const nlohmann::json& j, TransversalKind kind);

}  // namespace transversals
