#pragma once

#include "fanforge/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fanforge::cli {

using Json = nlohmann::ordered_json;

// A parsed configuration document. Indices in `triangulation` are 1-based.
struct Document {
  TablePtr table;
  Json symbols = Json::array();
  VectorConfiguration config;
  std::vector<IndexSet> triangulation;
  std::optional<Vector> height;
  std::optional<Vector> nu;
};

// Document-shape problems raise ParseError with a JSON-pointer prefix such as "/vectors/2/0".
Document parse_document(const nlohmann::json& j, unsigned sign_budget = kDefaultSignBudget);
Document load_document(const std::string& path, unsigned sign_budget = kDefaultSignBudget);

// Serializes back to the input format; parse_document(to_json(d)) reproduces d.
Json document_to_json(const Document& d);

struct Options {
  std::string format = "json";
  std::optional<std::string> svg_path;
  std::vector<std::string> nu;  // overrides the document's nu when nonempty
  int precision = 6;
};

const std::vector<std::string>& command_names();

// Throws fanforge::Error on domain failures.
Json run_command(const std::string& command, const Document& doc, const Options& opts);

std::string render(const Json& report, const std::string& format);

struct Outcome {
  int exit_code = 0;
  std::string output;
};

// Full pipeline for one invocation: load, run, render, map errors to exit codes (0 ok, 1 parse, 2 domain).
Outcome execute(const std::string& command, const std::string& path, const Options& opts);

// Sign budget from FANFORGE_SIGN_BUDGET, or the default.
unsigned sign_budget_from_env();

std::string chambers_svg(const GaleDual& g, const std::vector<Chamber2D>& chambers, int precision);

}  // namespace fanforge::cli
