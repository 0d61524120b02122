#include "diagmon/dot.hpp"

#include <sstream>

#include "diagmon/json_io.hpp"

namespace diagmon {

  namespace {

    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    bool any_marked(std::vector<Index> const& cell, std::vector<bool> const& mark) {
      for (Index x : cell) {
        if (x < mark.size() && mark[x]) {
          return true;
        }
      }
      return false;
    }

    std::string node_name(FiniteMonoid const& s, EggBox::DClass const& dc) {
      return "D:" + element_key(s.element(dc.cells.front().front().front()));
    }

  }  // namespace

  std::string eggbox_dot(FiniteMonoid const& s, EggBox const& box, EggBoxStyle const& style) {
    std::ostringstream out;
    out << "digraph " << quoted(style.name) << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (std::size_t k = 0; k < box.classes.size(); ++k) {
      auto const& dc   = box.classes[k];
      std::size_t size = 0;
      for (auto const& row : dc.cells) {
        for (auto const& cell : row) {
          size += cell.size();
        }
      }
      out << "  subgraph cluster_d" << k << " {\n";
      out << "    label=" << quoted("D" + std::to_string(k) + " (" + std::to_string(size) + ")")
          << ";\n";
      out << "    " << quoted(node_name(s, dc)) << " [label=<\n";
      out << "      <TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">\n";
      for (std::size_t r = 0; r < dc.rows.size(); ++r) {
        out << "        <TR>";
        for (std::size_t c = 0; c < dc.cols.size(); ++c) {
          auto const& cell  = dc.cells[r][c];
          bool const  group = dc.group[r][c];
          bool const  shade = any_marked(cell, style.shade);
          out << "<TD";
          if (any_marked(cell, style.highlight)) {
            out << " BGCOLOR=\"green\"";
          } else if (group && shade) {
            out << " BGCOLOR=\"darkorange\"";
          } else if (group) {
            out << " BGCOLOR=\"gray\"";
          } else if (shade) {
            out << " BGCOLOR=\"orange\"";
          }
          if (group) {
            out << " TITLE=\"shaded=true\"";
          }
          out << ">" << cell.size() << "</TD>";
        }
        out << "</TR>\n";
      }
      out << "      </TABLE>>];\n";
      out << "  }\n";
    }
    for (auto [lo, hi] : box.hasse) {
      out << "  " << quoted(node_name(s, box.classes[lo])) << " -> "
          << quoted(node_name(s, box.classes[hi])) << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace diagmon
