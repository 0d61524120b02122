#ifndef DIAGMON_DOT_HPP_
#define DIAGMON_DOT_HPP_

#include <string>
#include <vector>

#include "diagmon/finite_monoid.hpp"
#include "diagmon/green.hpp"

namespace diagmon {

  struct EggBoxStyle {
    std::string       name = "eggbox";
    std::vector<bool> shade;      // cells holding a member are orange
    std::vector<bool> highlight;  // cells holding a member are green
  };

  // Graphviz source for an egg-box diagram: one cluster per D-class, listed
  // bottom first, each holding an HTML-like table whose rows are R-classes
  // and columns L-classes. Group H-classes are grey and carry
  // TITLE="shaded=true"; a group cell that is also in the shade set is dark
  // orange. Edges are the covering pairs of the D-order, pointing up.
  std::string eggbox_dot(FiniteMonoid const& s, EggBox const& box, EggBoxStyle const& style = {});

}  // namespace diagmon

#endif  // DIAGMON_DOT_HPP_
