#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace bracerig {

inline constexpr int kDefaultPort = 8741;
inline constexpr std::size_t kMaxRequestBytes = 1 << 20;

struct HttpResponse {
  int status = 200;
  std::string body;  ///< JSON
};

/// Routes one request without any server state. Used by the HTTP server and
/// directly by tests.
HttpResponse dispatch(std::string_view method, std::string_view path, std::string_view content_type,
                      std::string_view body);

HttpResponse handle_analyze(std::string_view body);
/// Body: {"document": ..., "coloring": n, "frames": k, "t_range": [t0, t1]}.
HttpResponse handle_flex(std::string_view body);
/// Body: {"kind": "grid", "a": n, "b": m} | {"kind": "grec", "steps": n,
/// "seed": s, "max_vertices": v} | {"kind": "carpet", "parallelograms": [...]}.
HttpResponse handle_generate(std::string_view body);
HttpResponse handle_health();

/// HTTP front end over dispatch, with CORS headers and the body size limit.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  int bind_to_any_port(const std::string& host);
  /// Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving HTTP. Returns false if the port cannot be bound.
bool run_server(const std::string& host, int port);

}  // namespace bracerig
