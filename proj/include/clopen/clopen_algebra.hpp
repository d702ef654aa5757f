#pragma once

#include <string>
#include <vector>

#include "clopen/boolean_algebra.hpp"
#include "clopen/topology.hpp"

namespace clopen {

// The algebra of clopen subsets of a finite space. Components are the atoms;
// every clopen set is the union of the components it contains, so algebra
// elements and clopen point sets translate back and forth exactly.
struct ClopenAlgebra {
  FiniteSpace space;
  BooleanAlgebra algebra;
  std::vector<Mask> atom_masks;  // component point sets, atom order

  static ClopenAlgebra of(const FiniteSpace& x) {
    std::vector<Mask> comps = x.component_masks();
    std::vector<std::string> names;
    names.reserve(comps.size());
    for (Mask c : comps) names.push_back(join_names(x.points, c, "+"));
    return ClopenAlgebra{x, BooleanAlgebra(std::move(names)), std::move(comps)};
  }

  Mask to_points(Element a) const {
    algebra.require(a);
    Mask m = 0;
    for (std::size_t i : mask_indices(a)) m |= atom_masks[i];
    return m;
  }

  Element to_element(Mask m) const {
    Element a = 0;
    for (std::size_t i = 0; i < atom_masks.size(); ++i)
      if ((atom_masks[i] & m) != 0) a |= Element{1} << i;
    if (to_points(a) != m)
      throw Error("set " + space.set_name(m) + " is not clopen");
    return a;
  }

  std::size_t component_of(std::size_t point_index) const {
    for (std::size_t i = 0; i < atom_masks.size(); ++i)
      if (mask_contains(atom_masks[i], point_index)) return i;
    throw Error("point index out of range");
  }

  std::vector<Mask> carrier_point_masks() const {
    std::vector<Mask> out;
    for (Element a = 0;; ++a) {
      out.push_back(to_points(a));
      if (a == algebra.top()) break;
    }
    return out;
  }
};

}  // namespace clopen
