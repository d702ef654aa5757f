// Walks one small space through the whole chain: clopen algebra, ultrafilters,
// verdicts, and the universal property of the ultrafilter space.
#include <clopen/clopen.hpp>

#include <cstdio>

using namespace clopen;

int main() {
  // Five points: a Sierpinski-style tangle {a,b}, an isolated point c, and a
  // glued pair {d,e}. Three components, none of the non-singleton ones
  // separable by opens inside them.
  FiniteSpace x = FiniteSpace::from_point_sets(
      {"a", "b", "c", "d", "e"},
      {{},
       {"b"},
       {"a", "b"},
       {"c"},
       {"b", "c"},
       {"a", "b", "c"},
       {"d", "e"},
       {"b", "d", "e"},
       {"a", "b", "d", "e"},
       {"c", "d", "e"},
       {"b", "c", "d", "e"},
       {"a", "b", "c", "d", "e"}});
  std::printf("space with %zu points and %zu open sets\n", x.size(),
              x.opens.size());

  ClopenAlgebra co = ClopenAlgebra::of(x);
  std::printf("clopen algebra: %zu atoms", co.algebra.atom_count());
  for (const auto& name : co.algebra.atoms) std::printf("  [%s]", name.c_str());
  std::printf("\n");
  std::printf("every clopen set is a union of atoms; the carrier has %zu elements\n",
              co.algebra.carrier().size());

  Element ab = co.algebra.atom(0), c = co.algebra.atom(1);
  std::printf("join of [a+b] and [c] is %s; in ring form a+b+ab gives %s\n",
              co.algebra.element_name(co.algebra.join(ab, c)).c_str(),
              co.algebra
                  .element_name(co.algebra.f2_add(
                      co.algebra.f2_add(ab, c), co.algebra.f2_mul(ab, c)))
                  .c_str());

  UltrafilterSpace u = build_uf(x);
  std::printf("\nultrafilter space: %zu points, one per component\n",
              u.ultrafilters.size());
  for (const Ultrafilter& uf : u.ultrafilters)
    std::printf("  ultrafilter concentrated on %s\n",
                x.set_name(co.to_points(uf.minimum)).c_str());

  CriterionReport r = criterion_report(x);
  std::printf("clopen sets form a basis: %s\n", r.applicable ? "yes" : "no");
  std::printf("compact: %s, hausdorff: %s, homeomorphic to its ultrafilter space: %s\n",
              r.compact ? "yes" : "no", r.hausdorff ? "yes" : "no",
              r.principal_homeomorphism ? "yes" : "no");
  std::printf("building the ultrafilter space twice changes nothing: %s\n",
              check_idempotent(x) ? "yes" : "no");

  // Any continuous map into a discrete target factors uniquely through the
  // ultrafilter space.
  FiniteSpace two = FiniteSpace::discrete({"left", "right"});
  ContinuousMap f = ContinuousMap::from_names(x, two,
                                              {{"a", "left"},
                                               {"b", "left"},
                                               {"c", "left"},
                                               {"d", "right"},
                                               {"e", "right"}});
  UfExtension ext = uf_map(f);
  std::printf("\na two-valued map on the points factors through the %zu ultrafilters:\n",
              ext.source.ultrafilters.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    std::printf("  %s -> %s -> %s\n", x.points[i].c_str(),
                ext.source.realized.points[ext.source.principal_assignment[i]]
                    .c_str(),
                two.points[ext.map.apply(ext.source.principal_assignment[i])]
                    .c_str());
  return 0;
}
