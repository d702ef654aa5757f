#pragma once

#include <string>
#include <vector>

#include "clopen/clopen_algebra.hpp"

namespace clopen {

// The space of ultrafilters on the clopen algebra of a finite space, with
// the topology generated by the basic sets U_a = {F : a in F}.
struct UltrafilterSpace {
  ClopenAlgebra co;
  std::vector<Ultrafilter> ultrafilters;          // atom order
  FiniteSpace realized;                           // one point per ultrafilter
  std::vector<Mask> basis;                        // indexed by Element
  std::vector<std::size_t> principal_assignment;  // base point -> index

  Mask basic_open(Element a) const {
    co.algebra.require(a);
    return basis[a];
  }

  ContinuousMap principal_map() const {
    return ContinuousMap(co.space, realized, principal_assignment);
  }
};

// The ultrafilter of clopen sets containing the given point.
inline Ultrafilter principal(const ClopenAlgebra& co, std::size_t point_index) {
  if (point_index >= co.space.size()) throw Error("point index out of range");
  std::vector<Element> elements;
  for (Element a = 0;; ++a) {
    if (mask_contains(co.to_points(a), point_index)) elements.push_back(a);
    if (a == co.algebra.top()) break;
  }
  Filter f(co.algebra, std::move(elements));
  Element m = f.minimum();
  if (mask_size(m) != 1)
    throw Error("principal filter minimum is not an atom");
  return Ultrafilter{std::move(f), m};
}

inline Ultrafilter principal(const FiniteSpace& x, const std::string& point) {
  ClopenAlgebra co = ClopenAlgebra::of(x);
  return principal(co, x.point_index(point));
}

// Intersection of all members of the ultrafilter, as a point set.
inline Mask cluster_points(const ClopenAlgebra& co, const Ultrafilter& uf) {
  if (!(uf.filter.algebra == co.algebra))
    throw Error("ultrafilter does not live on this clopen algebra");
  Mask m = co.space.full();
  for (Element e : uf.filter.elements) m &= co.to_points(e);
  return m;
}

inline UltrafilterSpace build_uf(const FiniteSpace& x) {
  ClopenAlgebra co = ClopenAlgebra::of(x);
  std::vector<Ultrafilter> ufs = enumerate_ultrafilters(co.algebra);
  std::vector<Mask> basis;
  basis.reserve(std::size_t{1} << co.algebra.atom_count());
  for (Element a = 0;; ++a) {
    Mask m = 0;
    for (std::size_t i = 0; i < ufs.size(); ++i)
      if (ufs[i].filter.contains(a)) m |= Mask{1} << i;
    basis.push_back(m);
    if (a == co.algebra.top()) break;
  }
  FiniteSpace realized =
      generate_topology(co.algebra.atoms, basis);
  std::vector<std::size_t> assignment(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) assignment[i] = co.component_of(i);
  return UltrafilterSpace{std::move(co), std::move(ufs), std::move(realized),
                          std::move(basis), std::move(assignment)};
}

// Image ultrafilter {b : preimage of b lies in uf} along a continuous map.
inline Ultrafilter pushforward(const ContinuousMap& f, const Ultrafilter& uf) {
  if (!check_continuous(f)) throw Error("map is not continuous");
  ClopenAlgebra source_co = ClopenAlgebra::of(f.source);
  if (!(uf.filter.algebra == source_co.algebra))
    throw Error("ultrafilter does not live on the source clopen algebra");
  ClopenAlgebra target_co = ClopenAlgebra::of(f.target);
  std::vector<Element> elements;
  for (Element b = 0;; ++b) {
    Mask pre = f.preimage(target_co.to_points(b));
    if (uf.filter.contains(source_co.to_element(pre))) elements.push_back(b);
    if (b == target_co.algebra.top()) break;
  }
  Filter pushed(target_co.algebra, std::move(elements));
  if (!is_ultrafilter(pushed))
    throw Error("pushforward failed to produce an ultrafilter");
  Element minimum = pushed.minimum();
  return Ultrafilter{std::move(pushed), minimum};
}

struct UfExtension {
  UltrafilterSpace source;
  ContinuousMap map;  // realized ultrafilter space -> target
};

// The unique continuous map out of the ultrafilter space through which a map
// into a discrete target factors. Each ultrafilter goes to the unique
// cluster point of its pushforward.
inline UfExtension uf_map(const ContinuousMap& f) {
  if (!check_continuous(f)) throw Error("map is not continuous");
  if (!f.target.is_discrete())
    throw Error(
        "target space is not discrete, so pushforward cluster points are "
        "not unique");
  UltrafilterSpace u = build_uf(f.source);
  ClopenAlgebra target_co = ClopenAlgebra::of(f.target);
  std::vector<std::size_t> assignment;
  assignment.reserve(u.ultrafilters.size());
  for (const Ultrafilter& uf : u.ultrafilters) {
    Mask cluster = cluster_points(target_co, pushforward(f, uf));
    if (mask_size(cluster) != 1)
      throw Error("pushforward cluster point is not unique");
    assignment.push_back(lowest_index(cluster));
  }
  ContinuousMap extension(u.realized, f.target, std::move(assignment));
  return UfExtension{std::move(u), std::move(extension)};
}

// Compactness, separation, and total disconnectedness read off from cluster
// point counts, together with the same verdicts phrased through the
// principal map.
struct CriterionReport {
  bool applicable = false;  // the clopen sets form an open basis
  std::vector<std::size_t> cluster_counts;
  bool compact = false;
  bool hausdorff = false;
  bool td_compact_hausdorff = false;
  bool principal_surjective = false;
  bool principal_injective = false;
  bool principal_homeomorphism = false;
};

inline CriterionReport criterion_report(const FiniteSpace& x) {
  CriterionReport report;
  UltrafilterSpace u = build_uf(x);
  std::vector<Mask> clopen = x.clopen_masks();
  report.applicable = true;
  for (Mask open : x.opens) {
    Mask covered = 0;
    for (Mask c : clopen)
      if (mask_subset(c, open)) covered |= c;
    if (covered != open) {
      report.applicable = false;
      break;
    }
  }
  report.compact = report.hausdorff = report.td_compact_hausdorff = true;
  for (const Ultrafilter& uf : u.ultrafilters) {
    std::size_t count = mask_size(cluster_points(u.co, uf));
    report.cluster_counts.push_back(count);
    if (count < 1) report.compact = false;
    if (count > 1) report.hausdorff = false;
    if (count != 1) report.td_compact_hausdorff = false;
  }
  ContinuousMap p = u.principal_map();
  std::vector<bool> hit(u.ultrafilters.size(), false);
  for (std::size_t t : p.assignment) hit[t] = true;
  report.principal_surjective =
      std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  std::vector<bool> used(u.ultrafilters.size(), false);
  report.principal_injective = true;
  for (std::size_t t : p.assignment) {
    if (used[t]) report.principal_injective = false;
    used[t] = true;
  }
  bool open_map = true;
  for (Mask o : x.opens)
    if (!u.realized.is_open(p.image(o))) open_map = false;
  report.principal_homeomorphism = report.principal_surjective &&
                                   report.principal_injective &&
                                   check_continuous(p) && open_map;
  return report;
}

// The ultrafilter space of an ultrafilter space reproduces it: the principal
// map of the realized space is a homeomorphism.
inline bool check_idempotent(const FiniteSpace& x) {
  UltrafilterSpace once = build_uf(x);
  CriterionReport again = criterion_report(once.realized);
  return again.applicable && again.principal_homeomorphism;
}

}  // namespace clopen
