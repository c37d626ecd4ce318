#include "bracerig/service.hpp"

#include <numbers>

#include <json.hpp>

#include "bracerig/document.hpp"
#include "bracerig/error.hpp"
#include "bracerig/flex.hpp"

// After Eigen: resolv.h, pulled in by httplib, defines a macro named _res.
#include <httplib.h>

namespace bracerig {

using nlohmann::json;

namespace {

int status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kMalformedJson:
    case ErrorCode::kInvalidArgument:
      return 400;
    case ErrorCode::kSeparationViolated:
      return 409;
    default:
      return 422;
  }
}

HttpResponse error_response(int status, const Error& e) { return {status, e.to_json().dump()}; }

HttpResponse guarded(std::string_view body, auto&& handler) {
  if (body.size() > kMaxRequestBytes) {
    return error_response(413, Error(ErrorCode::kTooLarge, "request body exceeds 1 MB",
                                     {{"limit", kMaxRequestBytes}, {"size", body.size()}}));
  }
  try {
    return handler();
  } catch (const Error& e) {
    return error_response(status_for(e), e);
  }
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedJson, std::string("malformed JSON: ") + e.what());
  }
}

const json& require_object(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  return j;
}

template <typename T>
T param(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad parameter \"") + key + "\"", {{"param", key}});
  }
}

template <typename T>
T required_param(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing parameter \"") + key + "\"", {{"param", key}});
  }
  return param<T>(j, key, T{});
}

}  // namespace

HttpResponse handle_analyze(std::string_view body) {
  return guarded(body, [&] {
    const json j = parse_body(body);
    const auto braced = to_braced(document_from_json(j));
    return HttpResponse{200, analyze_report(braced).dump()};
  });
}

HttpResponse handle_flex(std::string_view body) {
  return guarded(body, [&]() -> HttpResponse {
    const json j = require_object(parse_body(body));
    if (!j.contains("document")) throw Error(ErrorCode::kInvalidArgument, "missing \"document\"");
    const auto braced = to_braced(document_from_json(j["document"]));
    const auto index = param<long long>(j, "coloring", 0);
    const int frames = param<int>(j, "frames", 10);
    auto range = param<std::vector<double>>(j, "t_range", {0.0, std::numbers::pi / 3});
    if (range.size() != 2) throw Error(ErrorCode::kInvalidArgument, "t_range must be [t0, t1]");
    if (frames < 2) throw Error(ErrorCode::kInvalidArgument, "frames must be at least 2");

    const Verdict verdict = rigidity_verdict(braced);
    if (verdict.status == RigidityStatus::kRigid) {
      return error_response(409, Error(ErrorCode::kInvalidArgument, "framework is rigid; it has no flex",
                                       {{"status", "Rigid"}}));
    }
    const auto nacs = enumerate_cartesian_nac(braced);
    if (index < 0 || static_cast<std::uint64_t>(index) >= nacs.size()) {
      return error_response(404, Error(ErrorCode::kInvalidArgument,
                                       "unknown coloring index " + std::to_string(index),
                                       {{"index", index}, {"count", nacs.size()}}));
    }
    const auto coloring = nacs.at(static_cast<std::uint64_t>(index));
    const Flex flex = build_flex(braced, coloring);
    json out = json::parse(export_animation(flex, frames, range[0], range[1], AnimationFormat::kJson));
    out["coloring_index"] = index;
    out["coloring"] = coloring_json(braced.combined_graph(), coloring);
    return HttpResponse{200, out.dump()};
  });
}

HttpResponse handle_generate(std::string_view body) {
  return guarded(body, [&] {
    const json j = require_object(parse_body(body));
    const auto kind = required_param<std::string>(j, "kind");
    if (kind == "grid") {
      const int a = required_param<int>(j, "a");
      const int b = required_param<int>(j, "b");
      if (a < 1 || b < 1 || a > 64 || b > 64) throw Error(ErrorCode::kInvalidArgument, "grid sides must be in 1..64");
      const auto pf = generate_grid(a, b);
      return HttpResponse{200, document_to_json(document_from_pframework(
                                   pf, "grid " + std::to_string(a) + "x" + std::to_string(b)))
                                   .dump()};
    }
    if (kind == "grec") {
      const int steps = required_param<int>(j, "steps");
      const auto seed = param<std::uint64_t>(j, "seed", 0);
      const auto max_vertices = param<std::size_t>(j, "max_vertices", 0);
      if (steps < 0 || steps > 500) throw Error(ErrorCode::kInvalidArgument, "steps must be in 0..500");
      const auto pf = generate_random_grec(steps, seed, max_vertices);
      return HttpResponse{200, document_to_json(document_from_pframework(
                                   pf, "grec " + std::to_string(steps), seed))
                                   .dump()};
    }
    if (kind == "carpet") {
      if (!j.contains("parallelograms")) throw Error(ErrorCode::kInvalidArgument, "missing \"parallelograms\"");
      const auto carpet = carpet_from_json(j["parallelograms"]);
      const auto pf = carpet_to_framework(carpet, default_epsilon());
      return HttpResponse{200, document_to_json(document_from_pframework(pf, "carpet")).dump()};
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown kind \"" + kind + "\"", {{"kind", kind}});
  });
}

HttpResponse handle_health() {
  const json out = {{"status", "ok"},
                    {"service", "bracerig"},
                    {"version", "1.0.0"},
                    {"build", {{"compiler", __VERSION__}, {"cplusplus", __cplusplus}}}};
  return {200, out.dump()};
}

HttpResponse dispatch(std::string_view method, std::string_view path, std::string_view content_type,
                      std::string_view body) {
  if (method == "GET" && path == "/api/health") return handle_health();
  const bool known = path == "/api/analyze" || path == "/api/flex" || path == "/api/generate";
  if (!known) return error_response(404, Error(ErrorCode::kInvalidArgument, "no such endpoint"));
  if (method != "POST") return error_response(405, Error(ErrorCode::kInvalidArgument, "use POST"));
  const auto media = content_type.substr(0, content_type.find(';'));
  if (media != "application/json") {
    return error_response(415, Error(ErrorCode::kUnsupportedFormat, "content type must be application/json",
                                     {{"content_type", std::string(content_type)}}));
  }
  if (path == "/api/analyze") return handle_analyze(body);
  if (path == "/api/flex") return handle_flex(body);
  return handle_generate(body);
}

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  http.set_payload_max_length(kMaxRequestBytes);
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    const auto reply = dispatch(req.method, req.path, req.get_header_value("Content-Type"), req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  http.Get(R"(/api/.*)", route);
  http.Post(R"(/api/.*)", route);
  http.Put(R"(/api/.*)", route);
  http.Patch(R"(/api/.*)", route);
  http.Delete(R"(/api/.*)", route);
  http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  return impl_->http.bind_to_port(host, port) ? port : -1;
}
int Server::bind_to_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }
bool Server::listen_after_bind() { return impl_->http.listen_after_bind(); }
void Server::stop() { impl_->http.stop(); }

bool run_server(const std::string& host, int port) {
  Server server;
  if (server.bind(host, port) < 0) return false;
  return server.listen_after_bind();
}

}  // namespace bracerig
