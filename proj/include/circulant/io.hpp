#pragma once

// Textual and JSON forms.
//
// Graph literal grammar: [Cc] digits '(' digits (',' digits)* ')', no
// whitespace. Jumps must lie in [1, n-1]; they are reflexively reduced, so
// "C16(15,2)" denotes C16(1,2).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circulant/adams.hpp"
#include "circulant/classification.hpp"
#include "circulant/core.hpp"
#include "circulant/families.hpp"
#include "circulant/theta.hpp"

namespace circulant {

CirculantGraph parse_graph_literal(std::string_view text);

/// Strict comma-separated integer list, e.g. "1,3,8,10".
std::vector<int> parse_int_list(std::string_view text);

/// Jumps in [1, n-1], then reflexively reduced. Zero and out-of-range values
/// are errors rather than silently dropped.
CirculantGraph make_graph(int n, const std::vector<std::int64_t>& jumps);

using Json = nlohmann::ordered_json;

Json to_json(const CirculantGraph& graph);
CirculantGraph graph_from_json(const Json& j);

Json to_json(const Type1Set& set);
Type1Set type1_set_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

/// {"source", "n", "t", "m", "verdict", "jumps", "fast_symmetric",
///  "fast_multiset", "classification"}
Json to_json(const ThetaImage& image, const Classification& classification);
/// Recomputes the image from source/m/t and rejects documents whose recorded
/// fields disagree.
ThetaImage theta_image_from_json(const Json& j);

Json to_json(const Type2SetResult& set);
Type2SetResult type2_set_from_json(const Json& j);

Json to_json(const GroupReport& report);

Json to_json(const FamilyNp3& family);
Json to_json(const Family8n& family);

/// DOT text, vertices implicit.
std::string to_dot(const CirculantGraph& graph);
/// 0/1 adjacency matrix rows, space separated.
std::string to_adjacency_text(const CirculantGraph& graph);

}  // namespace circulant
