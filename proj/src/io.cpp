#include "circulant/io.hpp"

#include <charconv>
#include <sstream>

namespace circulant {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::parse, what); }

int parse_digits(std::string_view text, std::string_view context) {
  if (text.empty()) parse_error("empty number in " + std::string(context));
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.front() == '-' ||
      text.front() == '+') {
    parse_error("bad number '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_digits(text.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CirculantGraph make_graph(int n, const std::vector<std::int64_t>& jumps) {
  if (n < 3) {
    throw Error(ErrorCode::bad_order, "order " + std::to_string(n) + " is below the minimum of 3");
  }
  if (jumps.empty()) throw Error(ErrorCode::bad_jumps, "no jumps given");
  for (auto r : jumps) {
    if (r == 0) throw Error(ErrorCode::zero_jump, "zero jump");
    if (r < 1 || r > n - 1) {
      throw Error(ErrorCode::bad_jumps, "jump " + std::to_string(r) + " outside [1, " +
                                            std::to_string(n - 1) + "]");
    }
  }
  return CirculantGraph(reflexive_reduce(jumps, n));
}

CirculantGraph parse_graph_literal(std::string_view text) {
  const std::string context = "graph literal '" + std::string(text) + "'";
  if (text.size() < 4 || (text.front() != 'C' && text.front() != 'c') || text.back() != ')') {
    parse_error("expected C<n>(<jumps>) in " + context);
  }
  const auto open = text.find('(');
  if (open == std::string_view::npos) parse_error("missing '(' in " + context);
  const int n = parse_digits(text.substr(1, open - 1), context);
  const auto inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::int64_t> jumps;
  for (int r : parse_int_list(inner)) jumps.push_back(r);
  return make_graph(n, jumps);
}

Json to_json(const CirculantGraph& graph) {
  const auto values = graph.jumps().values();
  return Json{{"n", graph.order()}, {"jumps", std::vector<int>(values.begin(), values.end())}};
}

CirculantGraph graph_from_json(const Json& j) {
  try {
    return make_graph(j.at("n").get<int>(), j.at("jumps").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("graph object: ") + e.what());
  }
}

Json to_json(const Type1Set& set) {
  Json members = Json::array();
  Json witnesses = Json::object();
  for (const auto& m : set.members) {
    members.push_back(to_json(m));
    witnesses[m.to_string()] = set.witnesses.at(m).value();
  }
  return Json{{"base", to_json(set.base)}, {"members", members}, {"witnesses", witnesses}};
}

Type1Set type1_set_from_json(const Json& j) {
  try {
    Type1Set set{graph_from_json(j.at("base")), {}, {}};
    for (const auto& m : j.at("members")) set.members.push_back(graph_from_json(m));
    for (const auto& [literal, x] : j.at("witnesses").items()) {
      const auto member = parse_graph_literal(literal);
      set.witnesses.emplace(member, UnitMultiplier(member.order(), x.get<int>()));
    }
    return set;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("type1 set: ") + e.what());
  }
}

Json to_json(const Classification& c) {
  Json out{{"tag", tag_name(c)}, {"witness", nullptr}, {"evidence", nullptr}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, verdict::Type1>) {
          out["witness"] = {{"x", v.x}};
        } else if constexpr (std::is_same_v<T, verdict::Type2>) {
          out["witness"] = {{"m", v.m}, {"t", v.t}, {"applied_to", v.reversed ? "second" : "first"}};
        } else if constexpr (std::is_same_v<T, verdict::Type1AfterType2>) {
          out["witness"] = {{"x", v.x}, {"m", v.m}, {"t", v.t}};
        } else if constexpr (std::is_same_v<T, verdict::IsomorphicOther>) {
          out["witness"] = {{"permutation", v.permutation}};
        } else if constexpr (std::is_same_v<T, verdict::NotIsomorphic>) {
          out["evidence"] = {{"invariant", v.invariant}, {"reason", v.reason}};
        }
      },
      c);
  return out;
}

Classification classification_from_json(const Json& j) {
  try {
    const auto tag = j.at("tag").get<std::string>();
    const auto& w = j.at("witness");
    if (tag == "identical") return verdict::Identical{};
    if (tag == "type1") return verdict::Type1{w.at("x").get<int>()};
    if (tag == "type2") {
      return verdict::Type2{w.at("m").get<int>(), w.at("t").get<int>(),
                            w.at("applied_to").get<std::string>() == "second"};
    }
    if (tag == "type1-after-type2") {
      return verdict::Type1AfterType2{w.at("x").get<int>(), w.at("m").get<int>(),
                                      w.at("t").get<int>()};
    }
    if (tag == "isomorphic-other") {
      return verdict::IsomorphicOther{w.at("permutation").get<std::vector<Vertex>>()};
    }
    if (tag == "not-isomorphic") {
      const auto& e = j.at("evidence");
      return verdict::NotIsomorphic{e.at("invariant").get<std::string>(),
                                    e.at("reason").get<std::string>()};
    }
    if (tag == "non-circulant") return verdict::NonCirculantImage{};
    parse_error("unknown classification tag '" + tag + "'");
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("classification: ") + e.what());
  }
}

Json to_json(const ThetaImage& image, const Classification& classification) {
  Json out;
  out["source"] = to_json(image.source);
  out["n"] = image.transform.order();
  out["t"] = image.transform.shift();
  out["m"] = image.transform.modulus();
  out["verdict"] = image.circulant() ? "circulant" : "non-circulant";
  if (image.verdict) {
    const auto values = image.verdict->values();
    out["jumps"] = std::vector<int>(values.begin(), values.end());
  } else {
    out["jumps"] = nullptr;
  }
  out["fast_symmetric"] = image.fast.symmetric;
  out["fast_multiset"] = image.fast.multiset;
  out["classification"] = to_json(classification);
  return out;
}

ThetaImage theta_image_from_json(const Json& j) {
  try {
    const auto source = graph_from_json(j.at("source"));
    const ThetaTransform transform(source.order(), j.at("m").get<int>(), j.at("t").get<int>());
    auto image = theta_exact_image(source, transform);
    const bool circulant = j.at("verdict").get<std::string>() == "circulant";
    bool consistent = circulant == image.circulant() &&
                      j.at("fast_symmetric").get<bool>() == image.fast.symmetric;
    if (consistent && circulant) {
      const auto jumps = j.at("jumps").get<std::vector<int>>();
      const auto values = image.verdict->values();
      consistent = jumps == std::vector<int>(values.begin(), values.end());
    }
    if (!consistent) parse_error("theta image document disagrees with recomputation");
    return image;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("theta image: ") + e.what());
  }
}

Json to_json(const Type2SetResult& set) {
  Json members = Json::array();
  for (const auto& m : set.members) members.push_back(to_json(m));
  return Json{{"base", to_json(set.base)},
              {"m", set.m},
              {"members", members},
              {"member_shifts", set.member_shifts},
              {"t1", set.t1 ? Json(*set.t1) : Json(nullptr)},
              {"period", set.period},
              {"warnings", set.warnings}};
}

Type2SetResult type2_set_from_json(const Json& j) {
  try {
    Type2SetResult set{graph_from_json(j.at("base")), j.at("m").get<int>(), {}, {},
                       std::nullopt, j.at("period").get<int>(),
                       j.at("warnings").get<std::vector<std::string>>()};
    for (const auto& m : j.at("members")) set.members.push_back(graph_from_json(m));
    set.member_shifts = j.at("member_shifts").get<std::vector<int>>();
    if (!j.at("t1").is_null()) set.t1 = j.at("t1").get<int>();
    if (set.members.size() != set.member_shifts.size()) {
      parse_error("type2 set: members and member_shifts differ in length");
    }
    return set;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("type2 set: ") + e.what());
  }
}

Json to_json(const GroupReport& report) {
  return Json{{"order", report.order},
              {"elements", report.elements},
              {"closed", report.closed},
              {"identity", report.has_identity},
              {"inverses", report.has_inverses},
              {"commutative", report.commutative},
              {"cyclic", report.cyclic},
              {"generator", report.generator ? Json(*report.generator) : Json(nullptr)},
              {"violations", report.violations}};
}

Json to_json(const FamilyNp3& family) {
  Json members = Json::array();
  for (const auto& m : family.members) members.push_back(to_json(CirculantGraph(m)));
  return Json{{"p", family.p},
              {"n", family.n},
              {"k", family.k},
              {"x", family.x},
              {"y", family.y},
              {"order", family.order()},
              {"members", members},
              {"full_members", family.full_members}};
}

Json to_json(const Family8n& family) {
  return Json{{"n", family.n},
              {"s", family.s},
              {"evens", family.evens},
              {"order", family.order()},
              {"R", to_json(CirculantGraph(family.r))},
              {"S", to_json(CirculantGraph(family.s_set))},
              {"transform", {{"n", family.order()}, {"m", 2}, {"t", family.n}}}};
}

std::string to_dot(const CirculantGraph& graph) {
  std::ostringstream out;
  out << "graph \"" << graph.to_string() << "\" {\n";
  const auto adj = adjacency(graph);
  for (const auto& e : adj.edges()) {
    out << "  " << e.a << " -- " << e.b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_adjacency_text(const CirculantGraph& graph) {
  const auto adj = adjacency(graph);
  std::ostringstream out;
  for (Vertex u = 0; u < adj.order(); ++u) {
    for (Vertex v = 0; v < adj.order(); ++v) {
      out << (v ? " " : "") << (adj.adjacent(u, v) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace circulant
