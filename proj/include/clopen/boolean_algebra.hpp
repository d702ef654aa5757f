#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "clopen/base.hpp"

namespace clopen {

// An element of a finite Boolean algebra, encoded as the set of atoms below
// it. The algebra with n atoms is the full power set of its atom list.
using Element = std::uint32_t;

struct BooleanAlgebra {
  std::vector<std::string> atoms;

  explicit BooleanAlgebra(std::vector<std::string> atom_names)
      : atoms(std::move(atom_names)) {
    if (atoms.size() > kMaxPoints)
      throw Error("algebra has " + std::to_string(atoms.size()) +
                  " atoms; at most " + std::to_string(kMaxPoints) +
                  " are supported");
    std::set<std::string> seen;
    for (const auto& name : atoms) {
      if (name.empty()) throw Error("atom names must be nonempty");
      if (!seen.insert(name).second)
        throw Error("duplicate atom name '" + name + "'");
    }
  }

  std::size_t atom_count() const { return atoms.size(); }
  bool is_trivial() const { return atoms.empty(); }

  Element bottom() const { return 0; }
  Element top() const { return full_mask(atoms.size()); }
  Element atom(std::size_t i) const {
    if (i >= atoms.size()) throw Error("atom index out of range");
    return Element{1} << i;
  }

  bool valid(Element a) const { return mask_subset(a, top()); }
  void require(Element a) const {
    if (!valid(a)) throw Error("element outside the algebra");
  }

  Element join(Element a, Element b) const {
    require(a);
    require(b);
    return a | b;
  }
  Element meet(Element a, Element b) const {
    require(a);
    require(b);
    return a & b;
  }
  Element complement(Element a) const {
    require(a);
    return top() & ~a;
  }

  // Addition of the induced ring over the two-element field: symmetric
  // difference expressed through the lattice operations.
  Element f2_add(Element a, Element b) const {
    return meet(join(a, b), complement(meet(a, b)));
  }
  Element f2_mul(Element a, Element b) const { return meet(a, b); }

  std::vector<Element> carrier() const {
    std::vector<Element> out;
    out.reserve(std::size_t{1} << atoms.size());
    for (Element a = 0;; ++a) {
      out.push_back(a);
      if (a == top()) break;
    }
    return out;
  }

  std::string element_name(Element a) const {
    require(a);
    return set_to_string(atoms, a);
  }

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;
};

// A filter given by its full element set, kept sorted. Whether the set
// actually satisfies the filter conditions is a separate check so that
// arbitrary candidate sets can be examined.
struct Filter {
  BooleanAlgebra algebra;
  std::vector<Element> elements;

  Filter(BooleanAlgebra a, std::vector<Element> elems)
      : algebra(std::move(a)), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    for (Element e : elements) algebra.require(e);
  }

  bool contains(Element e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }

  Element minimum() const {
    if (elements.empty()) throw Error("empty element set has no minimum");
    Element m = algebra.top();
    for (Element e : elements) m &= e;
    return m;
  }

  friend bool operator==(const Filter&, const Filter&) = default;
};

// Filter conditions: contains the top element, closed under meet, and
// absorbing under join with arbitrary elements.
inline bool is_filter(const Filter& f) {
  if (!f.contains(f.algebra.top())) return false;
  for (Element a : f.elements)
    for (Element b : f.elements)
      if (!f.contains(f.algebra.meet(a, b))) return false;
  for (Element a : f.elements)
    for (Element b = 0;; ++b) {
      if (!f.contains(f.algebra.join(a, b))) return false;
      if (b == f.algebra.top()) break;
    }
  return true;
}

inline bool is_proper(const Filter& f) {
  return !f.contains(f.algebra.bottom());
}

// Smallest filter containing the given sets: all elements above the meet of
// all finite wedges from the generating set (the empty wedge being top).
inline Filter fil_generate(const BooleanAlgebra& algebra,
                           const std::vector<Element>& generators) {
  Element wedge = algebra.top();
  for (Element g : generators) wedge = algebra.meet(wedge, g);
  std::vector<Element> elements;
  for (Element e = 0;; ++e) {
    if (mask_subset(wedge, e)) elements.push_back(e);
    if (e == algebra.top()) break;
  }
  return Filter(algebra, std::move(elements));
}

// An ultrafilter together with its minimum element, which for a finite
// algebra is always an atom.
struct Ultrafilter {
  Filter filter;
  Element minimum;

  std::size_t atom_index() const { return lowest_index(minimum); }

  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

// The four ultrafilter conditions: proper, meet-closed, join-absorbing, and
// deciding every element or its complement.
inline bool is_ultrafilter(const Filter& f) {
  if (f.contains(f.algebra.bottom())) return false;
  for (Element a : f.elements)
    for (Element b : f.elements)
      if (!f.contains(f.algebra.meet(a, b))) return false;
  for (Element a : f.elements)
    for (Element b = 0;; ++b) {
      if (!f.contains(f.algebra.join(a, b))) return false;
      if (b == f.algebra.top()) break;
    }
  for (Element a = 0;; ++a) {
    if (!f.contains(a) && !f.contains(f.algebra.complement(a))) return false;
    if (a == f.algebra.top()) break;
  }
  return true;
}

inline Ultrafilter principal_ultrafilter(const BooleanAlgebra& algebra,
                                         std::size_t atom_index) {
  Element atom = algebra.atom(atom_index);
  std::vector<Element> elements;
  for (Element e = 0;; ++e) {
    if (mask_subset(atom, e)) elements.push_back(e);
    if (e == algebra.top()) break;
  }
  return Ultrafilter{Filter(algebra, std::move(elements)), atom};
}

// Extends a proper filter to the ultrafilter at the lowest-index atom below
// the filter's minimum. Improper filters extend to nothing.
inline Ultrafilter extend_to_ultrafilter(const Filter& f) {
  if (!is_filter(f)) throw Error("element set is not a filter");
  if (!is_proper(f))
    throw Error("no ultrafilter extends the improper filter");
  Element m = f.minimum();
  return principal_ultrafilter(f.algebra, lowest_index(m));
}

// One ultrafilter per atom, in atom order; empty exactly for the trivial
// algebra.
inline std::vector<Ultrafilter> enumerate_ultrafilters(
    const BooleanAlgebra& algebra) {
  std::vector<Ultrafilter> out;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i)
    out.push_back(principal_ultrafilter(algebra, i));
  return out;
}

}  // namespace clopen
