#pragma once

// Stateless JSON facade for the web explorer.
//
//   GET  /api/health
//   POST /api/graph                         {n, jumps}
//   GET  /api/graph/{n}/{jumps}/type1
//   GET  /api/graph/{n}/{jumps}/type2?m=
//   GET  /api/graph/{n}/{jumps}/theta?m=&t=
//   GET  /api/graph/{n}/{jumps}/adam?x=
//   POST /api/classify                      {n, a, b}
//   GET  /api/families/np3?p=&n=
//
// {n} may be written "27" or "C27"; {jumps} is comma separated. Jump lists
// that are not already canonical get a 301 to the canonical path.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "circulant/io.hpp"
#include "circulant/oracle.hpp"

namespace circulant {

struct ApiError {
  int status;
  std::string code;
  std::string message;
};

/// Every module error maps to exactly one (status, code) pair.
ApiError to_api_error(const Error& error);

struct ApiResponse {
  int status = 200;
  Json body;
  std::string location;  // set on redirects
};

class Api {
 public:
  /// Orders above max_order are refused with 422 before any work is done.
  explicit Api(OracleConfig oracle = {}, int max_order = 4096)
      : oracle_(oracle), max_order_(max_order) {}

  ApiResponse handle(std::string_view method, std::string_view path,
                     const std::map<std::string, std::string>& query,
                     std::string_view body) const;

 private:
  ApiResponse dispatch(std::string_view method, std::string_view path,
                       const std::map<std::string, std::string>& query,
                       std::string_view body) const;

  OracleConfig oracle_;
  int max_order_;
};

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::optional<std::string> static_dir;
};

/// HTTP/1.1 front end over an Api. port 0 binds an ephemeral port.
class HttpServer {
 public:
  HttpServer(ServerOptions options, Api api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port, or -1 on failure.
  int bind();
  /// Blocks until stop() is called from another thread.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds and serves until the process is stopped.
int run_server(const ServerOptions& options, const Api& api);

}  // namespace circulant
