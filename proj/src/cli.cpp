#include "glie/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "glie/algebra.hpp"
#include "glie/graph.hpp"
#include "glie/prolongation.hpp"
#include "glie/rigidity.hpp"
#include "glie/serialize.hpp"

namespace glie::cli {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return hex.str();
}

namespace {

struct InputOptions {
  std::string path;
  std::optional<std::string> text;
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
};

void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("input", in.path, "Graph source file, or '-' for standard input");
  sub->add_option("--text", in.text, "Inline graph source");
  sub->add_option("--family", in.family, "Generated family: complete, path, cycle, star-same-label, random");
  sub->add_option("--n", in.n, "Family size");
  sub->add_option("--seed", in.seed, "Seed for the random family");
}

// Thrown for inputs that cannot be read or parsed; carries the validation
// report to embed in the payload.
struct InvalidInput {
  Json report;
  std::string digest_source;
};

struct ResolvedInput {
  std::string source;  // graph text the digest is computed over
  std::optional<LabeledDigraph> graph;
};

ResolvedInput read_source(const InputOptions& opts, std::istream& stdin_stream) {
  const int sources = int(!opts.path.empty()) + int(opts.text.has_value()) + int(opts.family.has_value());
  if (sources != 1)
    throw CLI::ValidationError("input", "exactly one of <input>, --text or --family is required");

  ResolvedInput resolved;
  if (opts.family) {
    if (!opts.n) throw CLI::ValidationError("--n", "--family needs --n");
    resolved.graph = generate_family(parse_family(*opts.family), *opts.n, opts.seed);
    resolved.source = render_graph(*resolved.graph);
    return resolved;
  }
  if (opts.text) {
    resolved.source = *opts.text;
  } else if (opts.path == "-") {
    std::ostringstream buffer;
    buffer << stdin_stream.rdbuf();
    resolved.source = buffer.str();
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) {
      Json violation = {{"rule", "io"}, {"message", "cannot read '" + opts.path + "'"}};
      throw InvalidInput{
          {{"ok", false}, {"violations", Json::array({violation})}, {"warnings", Json::array()}, {"stats", nullptr}},
          ""};
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    resolved.source = buffer.str();
  }
  try {
    resolved.graph = parse_graph(resolved.source);
  } catch (const GraphError& e) {
    throw InvalidInput{parse_error_json(e), resolved.source};
  }
  return resolved;
}

Json run_report(std::string_view subcommand, const std::string& source, Json payload) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"subcommand", subcommand},
          {"input_digest", "sha256:" + sha256_hex(source)},
          {"payload", std::move(payload)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"Graph Lie algebras: construction, Tanaka prolongation and rigidity certificates"};
  app.name(std::string(kToolName));
  app.require_subcommand(1);
  unsigned workers = 1;
  app.add_option("--workers", workers, "Worker threads for internal parallelism")->check(CLI::Range(1U, 256U));

  InputOptions input;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph and report its statistics");
  auto* build_cmd = app.add_subcommand("build", "Emit the structure constants of Lie(G)");
  auto* classify_cmd = app.add_subcommand("classify", "Decide finite or infinite Tanaka type");
  auto* prolong_cmd = app.add_subcommand("prolong", "Compute the Tanaka prolongation degree by degree");
  auto* center_cmd = app.add_subcommand("center", "Compute the center of Lie(G)");
  auto* generate_cmd = app.add_subcommand("generate", "Generate a graph from a named family");
  for (auto* sub : {validate_cmd, build_cmd, classify_cmd, prolong_cmd, center_cmd}) add_input_options(sub, input);

  int max_degree = 10;
  std::string budget_text = "signed-pairs";
  bool emit_bases = false;
  classify_cmd->add_option("--max-degree", max_degree, "Safety valve for the prolongation fallback")
      ->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--search-budget", budget_text,
                           "basis-only | signed-pairs | exhaustive:COEFFS:SUPPORT (e.g. exhaustive:-1,1:4)");
  prolong_cmd->add_option("--max-degree", max_degree, "Highest degree to compute")
      ->required()
      ->check(CLI::NonNegativeNumber);
  prolong_cmd->add_flag("--emit-bases", emit_bases, "Include exact basis data");

  std::string gen_family;
  std::size_t gen_n = 0;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_format = "json";
  generate_cmd->add_option("--family", gen_family, "complete, path, cycle, star-same-label, random")->required();
  generate_cmd->add_option("--n", gen_n, "Family size")->required();
  generate_cmd->add_option("--seed", gen_seed, "Seed (random family)");
  generate_cmd->add_option("--format", gen_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv{kToolName.data()};
  for (const auto& a : args) argv.push_back(a.c_str());

  int code = 0;
  std::string subcommand;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    subcommand = app.get_subcommands().front()->get_name();

    if (subcommand == "generate") {
      const auto g = generate_family(parse_family(gen_family), gen_n, gen_seed);
      const auto source = render_graph(g);
      if (gen_format == "text") {
        out << source;
      } else {
        Json payload = {{"family", gen_family},
                        {"n", gen_n},
                        {"seed", gen_seed ? Json(*gen_seed) : Json(nullptr)},
                        {"source", source}};
        out << run_report(subcommand, source, std::move(payload)).dump(2) << "\n";
      }
    } else {
      const auto resolved = read_source(input, in);
      const auto& g = *resolved.graph;
      const auto report = validate(g);
      Json payload;
      if (subcommand == "validate") {
        payload = to_json(report);
        code = report.ok ? 0 : 1;
      } else if (!report.ok) {
        payload = {{"error", "invalid-input"}, {"validation", to_json(report)}};
        code = 1;
      } else if (subcommand == "build") {
        payload = structure_json(build_lie_algebra(g));
      } else if (subcommand == "classify") {
        ClassifyOptions options;
        options.max_prolongation_degree = max_degree;
        options.search_budget = parse_search_budget(budget_text);
        options.workers = workers;
        payload = to_json(classify(g, options));
      } else if (subcommand == "prolong") {
        const auto alg = build_lie_algebra(g);
        payload = to_json(alg, prolong(alg, max_degree, workers), emit_bases);
      } else if (subcommand == "center") {
        const auto alg = build_lie_algebra(g);
        payload = to_json(alg, center(alg));
      }
      out << run_report(subcommand, resolved.source, std::move(payload)).dump(2) << "\n";
    }
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err);
    if (code != 0) code = 2;
  } catch (const InvalidInput& e) {
    Json payload = subcommand == "validate" ? e.report : Json{{"error", "invalid-input"}, {"validation", e.report}};
    out << run_report(subcommand, e.digest_source, std::move(payload)).dump(2) << "\n";
    code = 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  }

  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "wall_time_s: " << std::fixed << std::setprecision(3) << elapsed << "\n";
  return code;
}

}  // namespace glie::cli
