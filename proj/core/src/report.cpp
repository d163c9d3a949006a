#include "siltkit/report.hpp"

#include <sstream>

namespace siltkit {

std::string export_report(const Report& r, const std::string& format) {
  if (format == "json") return r.json;
  if (format == "dot") {
    if (!r.dot) throw unsupported_format("this report has no graph payload; dot applies to Hasse outputs");
    return *r.dot;
  }
  throw unsupported_format("unknown export format '" + format + "'");
}

std::string hasse_to_dot(const HasseGraph& g) {
  std::ostringstream os;
  os << "digraph silting {\n";
  os << "  rankdir=TB;\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    /* label: rows of the g-matrix */
    const auto& cols = g.nodes[i].cols;
    int n = cols.empty() ? 0 : (int)cols[0].size();
    std::ostringstream label;
    label << "[";
    for (int r = 0; r < n; ++r) {
      if (r) label << ",";
      label << "[";
      for (size_t c = 0; c < cols.size(); ++c) {
        if (c) label << ",";
        label << cols[c][r];
      }
      label << "]";
    }
    label << "]";
    os << "  n" << i << " [label=\"" << label.str() << "\"];\n";
  }
  for (const auto& [from, k, to] : g.edges)
    os << "  n" << from << " -> n" << to << " [label=\"" << k << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace siltkit
