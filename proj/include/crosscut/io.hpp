#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crosscut/branches.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/group_action.hpp"
#include "crosscut/reduction.hpp"
#include "crosscut/reducts.hpp"
#include "crosscut/structures.hpp"

namespace crosscut::io {

using Json = nlohmann::ordered_json;

// All readers throw crosscut::Error on schema violations.

// {"vertices": k, "edges": [[i, j], ...], "directed": bool}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"size": n, "relations": [{"name": "E0", "labels": [...]}, ...],
//  "branches": [[...], ...], "tags": ["A" | "B", ...]}
// Labels are renormalized on load.
Json to_json(const EqStructure& s);
EqStructure structure_from_json(const Json& j);

// {"size": n, "predicates": m, "bits": [[0|1, ...], ...]}
Json to_json(const UnaryStructure& u);
UnaryStructure unary_from_json(const Json& j);

// {"blocks": [[begin, end], ...], "products": [...], "dropped": [begin, end]}
Json to_json(const BlockPartition& bp);

// {"counts": [...], "k": k, "m": m, "members": [[...], ...]}
Json to_json(const BranchFamily& family);

// counts, k, m, cutoff, thresholds
Json params_json(const ReductionParams& params);

/// m lines; line n lists the images of 1..counts[n].
std::string to_text(const GroupElement& g);
GroupElement group_element_from_text(std::string_view text);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// "2,3,4" -> {2, 3, 4}
std::vector<int> parse_int_list(std::string_view text);
std::string join(const std::vector<int>& values, std::string_view sep = ",");

}  // namespace crosscut::io
