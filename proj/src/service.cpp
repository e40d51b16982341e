#include "circulant/service.hpp"

#include <iostream>
#include <sstream>

#include <httplib.h>

namespace circulant {

namespace {

struct HttpError {
  ApiError error;
};

[[noreturn]] void fail(int status, std::string code, std::string message) {
  throw HttpError{{status, std::move(code), std::move(message)}};
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto slash = path.find('/', start);
    const auto end = slash == std::string_view::npos ? path.size() : slash;
    if (end > start) parts.push_back(path.substr(start, end - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return parts;
}

int query_int(const std::map<std::string, std::string>& query, const std::string& key,
              const std::string& code) {
  auto it = query.find(key);
  if (it == query.end()) fail(400, code, "missing query parameter '" + key + "'");
  try {
    const auto values = parse_int_list(it->second);
    if (values.size() != 1) throw Error(ErrorCode::parse, "");
    return values.front();
  } catch (const Error&) {
    fail(400, code, "query parameter '" + key + "' is not a non-negative integer");
  }
}

std::string join(std::span<const int> values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string badge(const Classification& c) {
  if (std::holds_alternative<verdict::NonCirculantImage>(c)) return "Non-Circulant";
  if (std::holds_alternative<verdict::Type2>(c)) return "Non-Adams";
  return "Adams";
}

Json echo(const CirculantGraph& g, Json body) {
  Json out{{"graph", g.to_string()}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string query_string(const std::map<std::string, std::string>& query) {
  std::string out;
  for (const auto& [k, v] : query) out += (out.empty() ? "?" : "&") + k + "=" + v;
  return out;
}

}  // namespace

ApiError to_api_error(const Error& error) {
  switch (error.code()) {
    case ErrorCode::bad_order:
    case ErrorCode::bad_jumps:
    case ErrorCode::zero_jump:
    case ErrorCode::order_mismatch:
      return {400, "bad-jumps", error.what()};
    case ErrorCode::bad_modulus: return {400, "bad-m", error.what()};
    case ErrorCode::bad_shift: return {400, "bad-t", error.what()};
    case ErrorCode::bad_unit: return {400, "bad-unit", error.what()};
    case ErrorCode::bad_parameter: return {400, "bad-parameter", error.what()};
    case ErrorCode::bound_exceeded: return {422, "order-too-large", error.what()};
    case ErrorCode::parse: return {400, "bad-request", error.what()};
  }
  return {500, "internal", "internal error"};
}

ApiResponse Api::handle(std::string_view method, std::string_view path,
                        const std::map<std::string, std::string>& query,
                        std::string_view body) const {
  auto error_response = [](const ApiError& e) {
    return ApiResponse{e.status, Json{{"error", e.code}, {"message", e.message}}, {}};
  };
  try {
    return dispatch(method, path, query, body);
  } catch (const HttpError& e) {
    return error_response(e.error);
  } catch (const Error& e) {
    return error_response(to_api_error(e));
  } catch (const std::exception&) {
    return error_response({500, "internal", "internal error"});
  }
}

ApiResponse Api::dispatch(std::string_view method, std::string_view path,
                          const std::map<std::string, std::string>& query,
                          std::string_view body) const {
  const auto parts = split_path(path);
  auto route_is = [&](std::initializer_list<std::string_view> expected) {
    if (parts.size() != expected.size()) return false;
    std::size_t i = 0;
    for (auto e : expected) {
      if (!e.empty() && parts[i] != e) return false;
      ++i;
    }
    return true;
  };
  auto check_order = [&](int n) {
    if (n > max_order_) {
      fail(422, "order-too-large",
           "order " + std::to_string(n) + " exceeds the service limit " + std::to_string(max_order_));
    }
  };
  auto parse_body = [&]() {
    try {
      return Json::parse(body);
    } catch (const nlohmann::json::exception&) {
      fail(400, "bad-request", "request body is not valid JSON");
    }
  };
  auto body_graph = [&](const Json& doc, const char* key) {
    try {
      const int n = doc.at("n").get<int>();
      check_order(n);
      return make_graph(n, doc.at(key).get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
      fail(400, "bad-jumps", std::string("expected {n, ") + key + "}: " + e.what());
    }
  };

  if (method == "GET" && route_is({"api", "health"})) {
    return {200, Json{{"ok", true}}, {}};
  }

  if (method == "POST" && route_is({"api", "graph"})) {
    const auto g = body_graph(parse_body(), "jumps");
    std::vector<int> moduli;
    for (int m = 2; m <= g.order(); ++m) {
      if (g.order() % m == 0) moduli.push_back(m);
    }
    std::vector<int> unit_values;
    for (const auto& u : units(g.order())) unit_values.push_back(u.value());
    return {200,
            echo(g, Json{{"n", g.order()},
                         {"jumps", to_json(g)["jumps"]},
                         {"degree", g.degree()},
                         {"edge_count_weighted", g.edge_count_weighted()},
                         {"edge_count_simple", g.edge_count_simple()},
                         {"moduli", moduli},
                         {"units", unit_values}}),
            {}};
  }

  if (method == "POST" && route_is({"api", "classify"})) {
    const auto doc = parse_body();
    const auto a = body_graph(doc, "a");
    const auto b = body_graph(doc, "b");
    const auto c = classify_pair(a, b, oracle_);
    return {200,
            echo(a, Json{{"a", a.to_string()}, {"b", b.to_string()}, {"classification", to_json(c)}}),
            {}};
  }

  if (method == "GET" && route_is({"api", "families", "np3"})) {
    const int p = query_int(query, "p", "bad-parameter");
    const int n = query_int(query, "n", "bad-parameter");
    if (n < 1 || static_cast<std::int64_t>(n) * p * p * p > 200000) {
      fail(400, "bad-parameter", "n must be >= 1 with n*p^3 <= 200000");
    }
    Json families = Json::array();
    for (const auto& f : gen_np3(p, n)) families.push_back(to_json(f));
    return {200, Json{{"p", p}, {"n", n}, {"families", families}}, {}};
  }

  if (method == "GET" && route_is({"api", "graph", "", "", ""})) {
    auto n_text = parts[2];
    if (!n_text.empty() && (n_text.front() == 'C' || n_text.front() == 'c')) n_text.remove_prefix(1);
    int n = 0;
    std::vector<std::int64_t> jumps;
    try {
      const auto n_values = parse_int_list(n_text);
      if (n_values.size() != 1) fail(400, "bad-jumps", "bad order segment");
      n = n_values.front();
      for (int r : parse_int_list(parts[3])) jumps.push_back(r);
    } catch (const Error& e) {
      fail(400, "bad-jumps", e.what());
    }
    check_order(n);
    const auto g = make_graph(n, jumps);
    const auto canonical = join(g.jumps().values());
    if (parts[3] != canonical) {
      const std::string location = "/api/graph/" + std::string(parts[2]) + "/" + canonical +
                                   "/" + std::string(parts[4]) + query_string(query);
      return {301, Json{{"redirect", location}}, location};
    }

    const auto action = parts[4];
    if (action == "type1") return {200, echo(g, to_json(type1_set(g))), {}};
    if (action == "type2") {
      const auto set = type2_set(g, query_int(query, "m", "bad-m"));
      auto out = to_json(set);
      out["group"] = to_json(type2_group_check(set));
      return {200, echo(g, out), {}};
    }
    if (action == "theta") {
      const int m = query_int(query, "m", "bad-m");
      const int t = query_int(query, "t", "bad-t");
      if (m < 2 || n % m != 0) fail(400, "bad-m", "m must be >= 2 and divide n");
      const ThetaTransform transform(n, m, t);
      const auto image = theta_exact_image(g, transform);
      const auto c = classify_theta(g, transform);
      Json out = to_json(image, c);
      out["classification_detail"] = out["classification"];
      out["classification"] = tag_name(c);
      out["image"] = image.verdict ? CirculantGraph(*image.verdict).to_string() : "Non-Circulant";
      out["badge"] = badge(c);
      out["permutation"] = vertex_permutation(transform);
      return {200, echo(g, out), {}};
    }
    if (action == "adam") {
      const UnitMultiplier u(n, query_int(query, "x", "bad-unit"));
      const auto image = adams_image(g, u);
      return {200,
              echo(g, Json{{"x", u.value()},
                           {"jumps", to_json(image)["jumps"]},
                           {"image", image.to_string()},
                           {"badge", "Adams"}}),
              {}};
    }
  }

  fail(404, "not-found", "no route for " + std::string(method) + " " + std::string(path));
}

struct HttpServer::Impl {
  Impl(ServerOptions o, Api a) : options(std::move(o)), api(a) {}
  ServerOptions options;
  Api api;
  httplib::Server server;
};

HttpServer::HttpServer(ServerOptions options, Api api)
    : impl_(std::make_unique<Impl>(std::move(options), api)) {
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  auto forward = [impl = impl_.get()](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const auto out = impl->api.handle(req.method, req.path, query, req.body);
    res.status = out.status;
    if (!out.location.empty()) res.set_header("Location", out.location);
    res.set_content(out.body.dump(), "application/json");
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind() {
  auto& o = impl_->options;
  if (o.static_dir && !impl_->server.set_mount_point("/", *o.static_dir)) {
    throw Error(ErrorCode::parse, "static directory not found: " + *o.static_dir);
  }
  if (o.port == 0) return impl_->server.bind_to_any_port(o.host);
  return impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

int run_server(const ServerOptions& options, const Api& api) {
  HttpServer server(options, api);
  const int port = server.bind();
  if (port < 0) {
    std::cerr << "cannot bind " << options.host << ":" << options.port << "\n";
    return 1;
  }
  std::cerr << "listening on " << options.host << ":" << port << "\n";
  return server.listen() ? 0 : 1;
}

}  // namespace circulant
