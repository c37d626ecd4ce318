#include "bracerig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "bracerig/document.hpp"
#include "bracerig/error.hpp"
#include "bracerig/flex.hpp"
#include "bracerig/service.hpp"

namespace bracerig {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path == "-") {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << bytes;
}

std::pair<int, int> parse_dimensions(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(text.substr(0, x), &used_a);
    const int b = std::stoi(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1 || a < 1 || b < 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("grid size must look like AxB with A, B >= 1, got \"" + text + "\"");
  }
}

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string out = "-";
  bool all = false;
  long long coloring = 0;
  int frames = 30;
  double t0 = 0.0;
  double t1 = std::numbers::pi / 3;
  std::string grid;
  int steps = 0;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 0;
  std::string host = "127.0.0.1";
  int port = kDefaultPort;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity analysis of braced parallelogram frameworks", "bracerig"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices));
  };

  auto* ribbons = app.add_subcommand("ribbons", "List ribbons with size, simplicity and edge-cut status");
  ribbons->add_option("file", o.input, "Framework document, - for stdin");
  add_format(ribbons, {"text", "json"});

  auto* analyze = app.add_subcommand("analyze", "Rigidity verdict");
  analyze->add_option("file", o.input, "Framework document, - for stdin");
  add_format(analyze, {"text", "json"});

  auto* nac = app.add_subcommand("nac", "Count or list cartesian NAC-colorings");
  nac->add_option("file", o.input, "Framework document, - for stdin");
  nac->add_flag("--all", o.all, "List every coloring");
  add_format(nac, {"text", "json"});

  auto* flex = app.add_subcommand("flex", "Export the flex given by one cartesian NAC-coloring");
  flex->add_option("file", o.input, "Framework document, - for stdin");
  flex->add_option("--coloring", o.coloring, "Coloring index as listed by nac --all");
  flex->add_option("--frames", o.frames, "Number of frames")->check(CLI::PositiveNumber);
  flex->add_option("--t0", o.t0, "First parameter value");
  flex->add_option("--t1", o.t1, "Last parameter value");
  flex->add_option("--out", o.out, "Output path, - for stdout");
  o.format = "json";
  flex->add_option("--format", o.format, "json or svg");

  auto* brace_min = app.add_subcommand("brace-min", "Fewest braces that make the framework rigid");
  brace_min->add_option("file", o.input, "Framework document, - for stdin");
  add_format(brace_min, {"text", "json"});

  auto* gen = app.add_subcommand("gen", "Generate a framework document");
  gen->require_subcommand(1);
  gen->add_option("--out", o.out, "Output path, - for stdout");
  auto* gen_grid = gen->add_subcommand("grid", "Grid of AxB unit cells");
  gen_grid->add_option("size", o.grid, "AxB")->required();
  auto* gen_grec = gen->add_subcommand("grec", "Random Add4-cycle / Close4-cycle sequence");
  gen_grec->add_option("steps", o.steps, "Number of moves")->required()->check(CLI::NonNegativeNumber);
  gen_grec->add_option("--seed", o.seed, "Generator seed");
  gen_grec->add_option("--max-vertices", o.max_vertices, "Stop adding vertices beyond this count");
  auto* gen_carpet = gen->add_subcommand("carpet", "One-skeleton of a carpet of parallelograms");
  gen_carpet->add_option("file", o.input, "Carpet JSON, - for stdin");

  auto* serve = app.add_subcommand("serve", "Start the HTTP analysis service");
  serve->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", o.host, "Bind address");

  // The text default applies to every command but flex.
  for (auto* cmd : {ribbons, analyze, nac, brace_min}) {
    cmd->preparse_callback([&](std::size_t) { o.format = "text"; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const bool json_errors = o.format == "json";
  try {
    if (*ribbons) {
      const auto braced = parse_framework(read_input(o.input, in));
      out << (o.format == "json" ? ribbons_report(braced.pframework()).dump(2) + "\n"
                                 : ribbons_text(braced.pframework()));
    } else if (*analyze) {
      const auto braced = parse_framework(read_input(o.input, in));
      out << (o.format == "json" ? analyze_report(braced).dump(2) + "\n" : analyze_text(braced));
    } else if (*nac) {
      const auto braced = parse_framework(read_input(o.input, in));
      const auto nacs = enumerate_cartesian_nac(braced);
      if (o.format == "json") {
        json report = {{"count", nacs.size()}, {"precondition_unverified", nacs.precondition_unverified()}};
        if (o.all) {
          report["colorings"] = json::array();
          for (const auto& c : nacs.all()) report["colorings"].push_back(coloring_json(braced.combined_graph(), c));
        }
        out << report.dump(2) << "\n";
      } else {
        out << "cartesian NAC-colorings: " << nacs.size() << "\n";
        if (nacs.precondition_unverified()) out << "(found by exhaustive search)\n";
        if (o.all) {
          const auto& g = braced.combined_graph();
          for (std::uint64_t i = 0; i < nacs.size(); ++i) {
            const auto c = nacs.at(i);
            out << i << ":";
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
              const auto [a, b] = g.edge_ids(static_cast<int>(e));
              out << " " << a << "-" << b << "=" << (c.color(static_cast<int>(e)) == Color::kRed ? 'r' : 'b');
            }
            out << "\n";
          }
        }
      }
    } else if (*flex) {
      const auto format = parse_animation_format(o.format);
      const auto braced = parse_framework(read_input(o.input, in));
      if (rigidity_verdict(braced).status == RigidityStatus::kRigid) {
        throw Error(ErrorCode::kInvalidArgument, "framework is rigid; it has no flex");
      }
      const auto nacs = enumerate_cartesian_nac(braced);
      if (o.coloring < 0) throw Error(ErrorCode::kInvalidArgument, "coloring index must be non-negative");
      const Flex f = build_flex(braced, nacs.at(static_cast<std::uint64_t>(o.coloring)));
      write_output(o.out, export_animation(f, o.frames, o.t0, o.t1, format), out);
    } else if (*brace_min) {
      const auto braced = parse_framework(read_input(o.input, in));
      const auto result = minimal_brace_completion(braced);
      if (o.format == "json") {
        out << completion_json(result).dump(2) << "\n";
      } else {
        for (const auto& [a, b] : result.added_braces) out << a << " " << b << "\n";
        if (!result.feasible()) out << "infeasible: " << *result.infeasible_reason << "\n";
      }
    } else if (*gen) {
      std::string bytes;
      if (*gen_grid) {
        const auto [a, b] = parse_dimensions(o.grid);
        bytes = serialize_document(document_from_pframework(generate_grid(a, b), "grid " + o.grid));
      } else if (*gen_grec) {
        bytes = serialize_document(document_from_pframework(generate_random_grec(o.steps, o.seed, o.max_vertices),
                                                            "grec " + std::to_string(o.steps), o.seed));
      } else {
        const auto carpet = parse_carpet(read_input(o.input, in));
        bytes = serialize_document(document_from_pframework(carpet_to_framework(carpet, default_epsilon()), "carpet"));
      }
      write_output(o.out, bytes, out);
    } else if (*serve) {
      err << "serving on http://" << o.host << ":" << o.port << "\n";
      if (!run_server(o.host, o.port)) {
        err << "error: cannot listen on " << o.host << ":" << o.port << "\n";
        return kExitUsage;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (json_errors) {
      err << e.to_json().dump() << "\n";
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return e.code() == ErrorCode::kSeparationViolated ? kExitRefusal : kExitValidation;
  }
  return kExitOk;
}

}  // namespace bracerig
