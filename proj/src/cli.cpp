#include "circulant/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "circulant/io.hpp"
#include "circulant/oracle.hpp"
#include "circulant/service.hpp"

namespace circulant {

namespace {

// Input problems are usage errors (exit 2); anything thrown while computing
// is a computation error (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto validate(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void print_lines(std::ostream& out, const std::vector<CirculantGraph>& graphs) {
  for (const auto& g : graphs) out << g.to_string() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant graph laboratory: Type-1 and Type-2 isomorphism", "circulant"};
  app.require_subcommand(1);

  std::function<void()> action;
  bool json = false;

  // families
  auto* families = app.add_subcommand("families", "Generate explicit Type-2 families");
  families->require_subcommand(1);

  auto* np3 = families->add_subcommand("np3", "Order n*p^3 families, m = p");
  int p = 0;
  int n_max = 5;
  std::optional<int> k_max;
  bool full_range = false;
  bool program_format = false;
  np3->add_option("--p", p, "Odd prime p")->required();
  np3->add_option("--n-max", n_max, "Generate n = 1..N")->check(CLI::PositiveNumber);
  np3->add_option("--k-max", k_max, "Largest base value k (default n*p-1)");
  np3->add_flag("--full-range", full_range, "Scan k up to n*p^2-1");
  np3->add_flag("--program-format", program_format, "Print full symmetric lists as the generator did");
  np3->add_flag("--json", json, "JSON output");
  np3->callback([&] {
    validate([&] {
      if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw Error(ErrorCode::bad_parameter, "p = " + std::to_string(p) + " is not an odd prime");
      }
      if (k_max && *k_max < 1) throw Error(ErrorCode::bad_parameter, "need --k-max >= 1");
      return 0;
    });
    action = [&] {
      Np3Options options{k_max, full_range};
      if (program_format) {
        out << np3_program_output(p, n_max, options);
        return;
      }
      Json doc = Json::array();
      for (int n = 1; n <= n_max; ++n) {
        Np3Options per_n = options;
        if (per_n.k_max) per_n.k_max = std::min(*per_n.k_max, n * p * p - 1);
        for (const auto& f : gen_np3(p, n, per_n)) {
          if (json) {
            doc.push_back(to_json(f));
            continue;
          }
          out << "# p=" << f.p << " n=" << f.n << " k=" << f.k << " x=" << f.x << " y=" << f.y
              << '\n';
          for (const auto& m : f.members) out << CirculantGraph(m).to_string() << '\n';
        }
      }
      if (json) out << doc.dump(2) << '\n';
    };
  });

  auto* eight = families->add_subcommand("8n", "Order 8n families, m = 2");
  int n8 = 0;
  int s8 = 0;
  std::string evens_text;
  eight->add_option("--n", n8, "Parameter n >= 2")->required();
  eight->add_option("--s", s8, "Parameter s")->required();
  eight->add_option("--evens", evens_text, "Even jumps 2p_1,...,2p_k (extended form)");
  eight->add_flag("--json", json, "JSON output");
  eight->callback([&] {
    const auto evens = evens_text.empty() ? std::vector<int>{}
                                          : validate([&] { return parse_int_list(evens_text); });
    const auto f = validate(
        [&] { return evens.empty() ? gen_8n_basic(n8, s8) : gen_8n_extended(n8, s8, evens); });
    action = [&, f] {
      if (json) {
        out << to_json(f).dump(2) << '\n';
        return;
      }
      out << "R: " << CirculantGraph(f.r).to_string() << '\n';
      out << "S: " << CirculantGraph(f.s_set).to_string() << '\n';
      out << "transform: theta(" << f.order() << ",2," << f.n << ")\n";
    };
  });

  // type1
  auto* type1 = app.add_subcommand("type1", "Adam's (Type-1) set of a graph");
  std::string graph_text;
  type1->add_option("--graph", graph_text, "Graph literal, e.g. C16(1,2,4,7)")->required();
  type1->add_flag("--json", json, "JSON output");
  type1->callback([&] {
    const auto g = validate([&] { return parse_graph_literal(graph_text); });
    action = [&, g] {
      const auto set = type1_set(g);
      if (json) {
        out << to_json(set).dump(2) << '\n';
        return;
      }
      for (const auto& m : set.members) {
        out << m.to_string() << " x=" << set.witnesses.at(m).value() << '\n';
      }
    };
  });

  // type2
  auto* type2 = app.add_subcommand("type2", "Type-2 set of a graph w.r.t. m");
  int m = 0;
  type2->add_option("--graph", graph_text, "Graph literal")->required();
  type2->add_option("--m", m, "Modulus m dividing n")->required();
  type2->add_flag("--json", json, "JSON output");
  type2->callback([&] {
    const auto g = validate([&] {
      auto graph = parse_graph_literal(graph_text);
      ThetaTransform(graph.order(), m, 0);
      return graph;
    });
    action = [&, g] {
      const auto set = type2_set(g, m);
      if (json) {
        auto doc = to_json(set);
        doc["group"] = to_json(type2_group_check(set));
        out << doc.dump(2) << '\n';
        return;
      }
      print_lines(out, set.members);
      for (const auto& w : set.warnings) out << "# warning: " << w << '\n';
    };
  });

  // step
  auto* step = app.add_subcommand("step", "Apply one theta transform and classify the image");
  int t = 0;
  step->add_option("--graph", graph_text, "Graph literal")->required();
  step->add_option("--m", m, "Modulus m dividing n")->required();
  step->add_option("--t", t, "Shift 0 <= t < n/m")->required();
  step->add_flag("--json", json, "JSON output");
  step->callback([&] {
    const auto g = validate([&] { return parse_graph_literal(graph_text); });
    const auto transform = validate([&] { return ThetaTransform(g.order(), m, t); });
    action = [&, g, transform] {
      const auto image = theta_exact_image(g, transform);
      const auto c = classify_theta(g, transform);
      if (json) {
        out << to_json(image, c).dump(2) << '\n';
        return;
      }
      out << "theta(" << transform.order() << ',' << transform.modulus() << ','
          << transform.shift() << "): "
          << (image.verdict ? CirculantGraph(*image.verdict).to_string() : "Non-Circulant")
          << '\n';
      out << describe(c) << '\n';
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a pair of circulant graphs");
  std::string a_text;
  std::string b_text;
  classify->add_option("--a", a_text, "First graph literal")->required();
  classify->add_option("--b", b_text, "Second graph literal")->required();
  classify->add_flag("--json", json, "JSON output");
  classify->callback([&] {
    const auto a = validate([&] { return parse_graph_literal(a_text); });
    const auto b = validate([&] { return parse_graph_literal(b_text); });
    const auto oracle = validate([] { return OracleConfig::from_environment(); });
    action = [&, a, b, oracle] {
      const auto c = classify_pair(a, b, oracle);
      if (json) {
        out << to_json(c).dump(2) << '\n';
        return;
      }
      out << describe(c) << '\n';
    };
  });

  // export
  auto* exporter = app.add_subcommand("export", "Write a graph as DOT, adjacency matrix or JSON");
  std::string format = "dot";
  exporter->add_option("--graph", graph_text, "Graph literal")->required();
  exporter->add_option("--format", format, "dot | adj | json")
      ->check(CLI::IsMember({"dot", "adj", "json"}));
  exporter->callback([&] {
    const auto g = validate([&] { return parse_graph_literal(graph_text); });
    action = [&, g] {
      if (format == "dot") {
        out << to_dot(g);
      } else if (format == "adj") {
        out << to_adjacency_text(g);
      } else {
        out << to_json(g).dump() << '\n';
      }
    };
  });

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON service");
  ServerOptions server_options;
  std::string static_dir;
  serve->add_option("--port", server_options.port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", server_options.host, "Bind address");
  serve->add_option("--static", static_dir, "Directory of static UI assets");
  serve->callback([&] {
    if (!static_dir.empty()) server_options.static_dir = static_dir;
    const auto oracle = validate([] { return OracleConfig::from_environment(); });
    action = [&, oracle] {
      if (run_server(server_options, Api(oracle)) != 0) {
        throw Error(ErrorCode::parse, "server failed to start");
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace circulant
