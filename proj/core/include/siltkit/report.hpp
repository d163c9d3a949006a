#pragma once

#include <optional>
#include <string>

#include "siltkit/explorer.hpp"

namespace siltkit {

/* Rendered command result. The JSON text follows the report-v1 schema with
 * stable field order; the DOT text exists only for Hasse outputs. */
struct Report {
  std::string command;
  std::string algebra;
  std::string json;
  std::optional<std::string> dot;
};

std::string export_report(const Report& r, const std::string& format);

std::string hasse_to_dot(const HasseGraph& g);

}  // namespace siltkit
