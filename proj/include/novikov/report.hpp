#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "novikov/dsl.hpp"
#include "novikov/error.hpp"
#include "novikov/oracle.hpp"

namespace novikov {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::json;

/// Arguments of one analysis command. Which fields are read depends on
/// `command`: check, series, radical, quasi-inverse, gd, certify, oracle.
struct ReportOptions {
  std::string command;
  std::optional<std::string> kind;  // series, radical, oracle intersection
  std::optional<std::string> element;
  std::string side = "left";
  bool lift = false;
  std::optional<std::string> derivation;
  std::optional<std::string> claim;
  std::vector<std::string> ideal;
  std::optional<std::size_t> n;
  std::optional<std::string> task;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  oracle::Budget budget;
};

/// Throws novikov::Error on a failed precondition and ParseError when a
/// combo argument does not parse.
Json run_report(const AlgebraDoc& doc, const ReportOptions& options);

/// {"command", "error": {"code", "message"}, "version"}
Json error_report(std::string_view command, ErrorCode code, std::string_view message);
Json parse_error_report(std::string_view command, const ParseError& e);

/// Sorted keys, two-space indent, trailing newline.
std::string render_json(const Json& report);

/// Indented key/value listing for terminals.
std::string render_text(const Json& report);

Json subspace_json(const Subspace& s);
Json element_json(const Element& x);

}  // namespace novikov
