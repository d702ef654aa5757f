#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clopen/boolean_algebra.hpp"
#include "clopen/clopen_algebra.hpp"
#include "clopen/compactification.hpp"
#include "clopen/enumeration.hpp"
#include "clopen/function_algebra.hpp"
#include "clopen/topology.hpp"
#include "clopen/ultrafilter_space.hpp"
#include "clopen/valued_field.hpp"

namespace clopen {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few, with exact values
  double seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

struct Config {
  std::uint64_t seed = 0;
  std::size_t max_points = 6;
  std::size_t random_cases = 1000;
};

struct VerificationReport {
  std::string suite;
  Config config;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  double seconds() const {
    double total = 0.0;
    for (const CheckResult& c : checks) total += c.seconds;
    return total;
  }
};

namespace detail {

inline void record(CheckResult& r, std::string message) {
  ++r.failure_count;
  if (r.failures.size() < 10) r.failures.push_back(std::move(message));
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<ValuedField> catalogue_fields() {
  return {ValuedField::trivial_fq(2), ValuedField::trivial_fq(4),
          ValuedField::trivial_q(),   ValuedField::trivial_qi(),
          ValuedField::padic(2),      ValuedField::padic(3)};
}

inline std::string describe(const FiniteSpace& x) {
  std::string out = x.set_name(x.full()) + " with opens";
  for (Mask o : x.opens) out += " " + x.set_name(o);
  return out;
}

// All field elements, for exhaustive grids over small finite fields.
inline std::vector<Scalar> all_field_elements(const ValuedField& k) {
  if (k.kind != FieldKind::TrivialFq)
    throw Error("only finite fields are enumerable");
  std::vector<Scalar> out;
  int degree = k.extension_degree();
  std::vector<int> coeffs(degree, 0);
  for (;;) {
    out.push_back(Scalar::from_poly(k, coeffs));
    int pos = 0;
    while (pos < degree && ++coeffs[pos] == k.p) coeffs[pos++] = 0;
    if (pos == degree) break;
  }
  return out;
}

}  // namespace detail

// Lattice axioms, complementation, the induced ring over the two-element
// field, and the translations between the two structures, exhaustively over
// small algebras.
inline CheckResult check_boolean_laws(const Config&) {
  detail::Timer timer;
  CheckResult r{"boolean-laws"};
  for (std::size_t atoms = 0; atoms <= 4; ++atoms) {
    BooleanAlgebra alg(default_point_names(atoms));
    std::vector<Element> carrier = alg.carrier();
    for (Element a : carrier) {
      if (alg.join(a, alg.complement(a)) != alg.top())
        detail::record(r, "complement join law fails at " +
                              alg.element_name(a));
      if (alg.meet(a, alg.complement(a)) != alg.bottom())
        detail::record(r, "complement meet law fails at " +
                              alg.element_name(a));
      if (alg.join(a, alg.bottom()) != a || alg.meet(a, alg.top()) != a)
        detail::record(r, "unit laws fail at " + alg.element_name(a));
      if (alg.complement(a) != alg.f2_add(alg.top(), a))
        detail::record(r, "complement is not 1 + a at " +
                              alg.element_name(a));
      if (alg.f2_add(a, a) != alg.bottom())
        detail::record(r, "a + a is not 0 at " + alg.element_name(a));
      if (alg.f2_mul(alg.top(), a) != a)
        detail::record(r, "1 * a is not a at " + alg.element_name(a));
      for (Element b : carrier) {
        if (alg.join(a, b) != alg.join(b, a) ||
            alg.meet(a, b) != alg.meet(b, a))
          detail::record(r, "commutativity fails");
        if (alg.meet(a, alg.join(a, b)) != a ||
            alg.join(a, alg.meet(a, b)) != a)
          detail::record(r, "absorption fails");
        Element rebuilt =
            alg.f2_add(alg.f2_add(a, b), alg.f2_mul(a, b));
        if (alg.join(a, b) != rebuilt)
          detail::record(r, "join is not a + b + ab at " +
                                alg.element_name(a) + ", " +
                                alg.element_name(b));
        if (alg.f2_add(a, b) != alg.f2_add(b, a))
          detail::record(r, "ring addition not commutative");
        for (Element c : carrier) {
          if (alg.join(a, alg.join(b, c)) != alg.join(alg.join(a, b), c) ||
              alg.meet(a, alg.meet(b, c)) != alg.meet(alg.meet(a, b), c))
            detail::record(r, "associativity fails");
          if (alg.meet(a, alg.join(b, c)) !=
                  alg.join(alg.meet(a, b), alg.meet(a, c)) ||
              alg.join(a, alg.meet(b, c)) !=
                  alg.meet(alg.join(a, b), alg.join(a, c)))
            detail::record(r, "distributivity fails");
          if (alg.f2_add(a, alg.f2_add(b, c)) !=
              alg.f2_add(alg.f2_add(a, b), c))
            detail::record(r, "ring addition not associative");
          if (alg.f2_mul(a, alg.f2_add(b, c)) !=
              alg.f2_add(alg.f2_mul(a, b), alg.f2_mul(a, c)))
            detail::record(r, "ring distributivity fails");
          ++r.cases;
        }
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

// Generated filters against two independent oracles: the intersection of all
// filters containing the generators, and the literal set of joins above the
// wedge of every generator subset. Properness against the wedge criterion.
inline CheckResult check_filter_generation(const Config&) {
  detail::Timer timer;
  CheckResult r{"filter-generation"};
  for (std::size_t atoms = 0; atoms <= 3; ++atoms) {
    BooleanAlgebra alg(default_point_names(atoms));
    std::vector<Element> carrier = alg.carrier();
    std::size_t csize = carrier.size();
    std::vector<std::vector<Element>> filters;
    for (Mask sub = 0; sub < (Mask{1} << csize); ++sub) {
      std::vector<Element> elems;
      for (std::size_t i = 0; i < csize; ++i)
        if (mask_contains(sub, i)) elems.push_back(carrier[i]);
      if (is_filter(Filter(alg, elems))) filters.push_back(std::move(elems));
    }
    for (Mask sub = 0; sub < (Mask{1} << csize); ++sub) {
      std::vector<Element> gens;
      for (std::size_t i = 0; i < csize; ++i)
        if (mask_contains(sub, i)) gens.push_back(carrier[i]);
      Filter fil = fil_generate(alg, gens);
      if (!is_filter(fil))
        detail::record(r, "generated set is not a filter");
      std::vector<Element> smallest;
      bool first = true;
      for (const std::vector<Element>& f : filters) {
        if (!std::includes(f.begin(), f.end(), gens.begin(), gens.end()))
          continue;
        if (first) {
          smallest = f;
          first = false;
        } else {
          std::vector<Element> merged;
          std::set_intersection(smallest.begin(), smallest.end(), f.begin(),
                                f.end(), std::back_inserter(merged));
          smallest = std::move(merged);
        }
      }
      if (fil.elements != smallest)
        detail::record(r, "generated filter differs from the smallest filter "
                          "containing the generators");
      std::set<Element> literal;
      for (Mask t = 0; t < (Mask{1} << gens.size()); ++t) {
        Element wedge = alg.top();
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (mask_contains(t, i)) wedge = alg.meet(wedge, gens[i]);
        for (Element b : carrier) literal.insert(alg.join(wedge, b));
      }
      std::vector<Element> literal_sorted(literal.begin(), literal.end());
      if (fil.elements != literal_sorted)
        detail::record(r, "generated filter differs from the literal join "
                          "form");
      Element wedge = alg.top();
      for (Element g : gens) wedge = alg.meet(wedge, g);
      if (is_proper(fil) != (wedge != alg.bottom()))
        detail::record(r, "properness differs from the wedge criterion at "
                          "generators " +
                              std::to_string(sub));
      ++r.cases;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

// Ultrafilter recognition against brute-force maximality among all proper
// filters, the count of ultrafilters, extension of proper filters with the
// lowest-atom tie break, and emptiness exactly over the trivial algebra.
inline CheckResult check_ultrafilter_axioms(const Config&) {
  detail::Timer timer;
  CheckResult r{"ultrafilter-axioms"};
  for (std::size_t atoms = 0; atoms <= 4; ++atoms) {
    BooleanAlgebra alg(default_point_names(atoms));
    std::vector<Element> carrier = alg.carrier();
    std::size_t csize = carrier.size();
    std::vector<std::vector<Element>> proper;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << csize); ++sub) {
      std::vector<Element> elems;
      for (std::size_t i = 0; i < csize; ++i)
        if ((sub >> i) & 1) elems.push_back(carrier[i]);
      Filter cand(alg, elems);
      if (is_filter(cand) && is_proper(cand)) proper.push_back(elems);
    }
    auto maximal = [&](const std::vector<Element>& f) {
      for (const std::vector<Element>& g : proper)
        if (g.size() > f.size() &&
            std::includes(g.begin(), g.end(), f.begin(), f.end()))
          return false;
      return true;
    };
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << csize); ++sub) {
      std::vector<Element> elems;
      for (std::size_t i = 0; i < csize; ++i)
        if ((sub >> i) & 1) elems.push_back(carrier[i]);
      Filter cand(alg, std::move(elems));
      bool oracle = is_filter(cand) && is_proper(cand) &&
                    maximal(cand.elements);
      if (is_ultrafilter(cand) != oracle)
        detail::record(r, "ultrafilter recognition disagrees with "
                          "brute-force maximality on a " +
                              std::to_string(atoms) + "-atom algebra");
      ++r.cases;
    }
    std::vector<Ultrafilter> ufs = enumerate_ultrafilters(alg);
    if (ufs.size() != atoms)
      detail::record(r, "ultrafilter count " + std::to_string(ufs.size()) +
                            " differs from atom count " +
                            std::to_string(atoms));
    if (ufs.empty() != alg.is_trivial())
      detail::record(r, "emptiness does not characterize the trivial algebra");
    for (const Ultrafilter& uf : ufs) {
      if (!is_ultrafilter(uf.filter))
        detail::record(r, "enumerated ultrafilter fails the axioms");
      for (Element a : carrier) {
        bool has = uf.filter.contains(a);
        bool has_comp = uf.filter.contains(alg.complement(a));
        if (has == has_comp)
          detail::record(r, "ultrafilter fails the dichotomy at " +
                                alg.element_name(a));
      }
    }
    for (const std::vector<Element>& f : proper) {
      Filter filter(alg, f);
      Ultrafilter ext = extend_to_ultrafilter(filter);
      if (!is_ultrafilter(ext.filter))
        detail::record(r, "extension is not an ultrafilter");
      for (Element e : f)
        if (!ext.filter.contains(e))
          detail::record(r, "extension does not contain the filter");
      if (ext.minimum != (Element{1} << lowest_index(filter.minimum())))
        detail::record(r, "extension does not pick the lowest atom");
    }
    if (!alg.is_trivial()) {
      bool threw = false;
      try {
        extend_to_ultrafilter(Filter(alg, carrier));
      } catch (const Error&) {
        threw = true;
      }
      if (!threw)
        detail::record(r, "extending the improper filter did not fail");
    }
    bool threw = false;
    try {
      extend_to_ultrafilter(Filter(alg, {}));
    } catch (const Error&) {
      threw = true;
    }
    if (!threw)
      detail::record(r, "extending a non-filter did not fail");
  }
  r.seconds = timer.seconds();
  return r;
}

// Ultrafilter spaces over every small topology: clopens are exactly unions
// of components, counts match, the principal image is dense, clustered
// ultrafilters are principal, criterion verdicts coincide with discreteness,
// and building twice changes nothing.
inline CheckResult check_uf_spaces(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"uf-spaces"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> spaces = spaces_up_to(cfg.max_points, rng, 40);
  for (const FiniteSpace& x : spaces) {
    ClopenAlgebra co = ClopenAlgebra::of(x);
    std::vector<Mask> comps = x.component_masks();
    if (x.clopen_masks().size() !=
        (std::size_t{1} << comps.size()))
      detail::record(r, "clopen count is not 2^components on " +
                            detail::describe(x));
    for (Mask sel = 0; sel < (Mask{1} << comps.size()); ++sel) {
      Mask u = 0;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (mask_contains(sel, c)) u |= comps[c];
      if (!x.is_clopen(u))
        detail::record(r, "a union of components is not clopen");
      if (co.to_points(co.to_element(u)) != u)
        detail::record(r, "clopen roundtrip through the algebra fails");
    }
    UltrafilterSpace u = build_uf(x);
    if (u.ultrafilters.size() != comps.size())
      detail::record(r, "ultrafilter count differs from component count on " +
                            detail::describe(x));
    if (!u.realized.is_discrete())
      detail::record(r, "realized ultrafilter space is not discrete");
    CriterionReport on_uf = criterion_report(u.realized);
    if (!(on_uf.applicable && on_uf.td_compact_hausdorff &&
          on_uf.principal_homeomorphism))
      detail::record(r, "the ultrafilter space fails its own criterion");
    for (Element a = 0;; ++a) {
      if (u.basis[a] != 0) {
        bool meets = false;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (mask_contains(u.basis[a], u.principal_assignment[i]))
            meets = true;
        if (!meets)
          detail::record(r, "principal image misses the basic open " +
                                co.algebra.element_name(a));
      }
      if (a == co.algebra.top()) break;
    }
    for (const Ultrafilter& uf : u.ultrafilters) {
      Mask cluster = cluster_points(co, uf);
      if (cluster == 0) {
        detail::record(r, "an ultrafilter on a finite space has no cluster "
                          "point");
        continue;
      }
      bool is_principal = false;
      for (std::size_t i : mask_indices(cluster))
        if (principal(co, i) == uf) is_principal = true;
      if (!is_principal)
        detail::record(r, "a clustered ultrafilter is not principal");
    }
    CriterionReport cr = criterion_report(x);
    bool d = x.is_discrete();
    if (!cr.compact)
      detail::record(r, "a finite space reported non-compact");
    if ((cr.applicable && cr.td_compact_hausdorff) != d)
      detail::record(r, "criterion verdict differs from discreteness on " +
                            detail::describe(x));
    if (cr.principal_homeomorphism != d)
      detail::record(r, "principal homeomorphism verdict differs from "
                        "discreteness on " +
                            detail::describe(x));
    if (d && !cr.applicable)
      detail::record(r, "clopen basis precondition fails on a discrete space");
    if (!check_idempotent(x))
      detail::record(r, "rebuilding the ultrafilter space is not the "
                        "identity on " +
                            detail::describe(x));
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

// Factorization through the ultrafilter space: every continuous map into a
// small discrete target factors as claimed, and enumeration of all candidate
// maps shows the factoring map is unique.
inline CheckResult check_uf_map(const Config&) {
  detail::Timer timer;
  CheckResult r{"uf-map"};
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FiniteSpace& x : all_topologies(n)) {
      UltrafilterSpace u = build_uf(x);
      for (std::size_t m = 0; m <= 3; ++m) {
        std::vector<std::string> target_names(m);
        for (std::size_t i = 0; i < m; ++i)
          target_names[i] = "t" + std::to_string(i);
        FiniteSpace y = FiniteSpace::discrete(target_names);
        if (m == 0 && n > 0) continue;
        std::vector<std::size_t> assign(n, 0);
        for (;;) {
          ContinuousMap f(x, y, assign);
          if (check_continuous(f)) {
            UfExtension ext = uf_map(f);
            for (std::size_t i = 0; i < n; ++i)
              if (ext.map.apply(u.principal_assignment[i]) != f.apply(i))
                detail::record(r, "factorization through the principal map "
                                  "fails");
            if (!check_continuous(ext.map))
              detail::record(r, "factoring map is not continuous");
            std::size_t ufs = u.ultrafilters.size();
            std::size_t found = 0;
            bool matches_ext = false;
            std::vector<std::size_t> g(ufs, 0);
            bool exhausted = ufs == 0;
            for (;;) {
              bool factors = true;
              for (std::size_t i = 0; i < n; ++i)
                if (g[u.principal_assignment[i]] != f.apply(i))
                  factors = false;
              if (factors && (m > 0 || ufs == 0)) {
                ++found;
                if (g == ext.map.assignment) matches_ext = true;
              }
              if (exhausted || m == 0) break;
              std::size_t pos = 0;
              while (pos < ufs && ++g[pos] == m) g[pos++] = 0;
              if (pos == ufs) break;
            }
            if (found != 1)
              detail::record(r, "factoring map is not unique: " +
                                    std::to_string(found) + " candidates");
            if (found == 1 && !matches_ext)
              detail::record(r, "the unique factoring map differs from the "
                                "computed one");
            ++r.cases;
          }
          if (n == 0 || m == 0) break;
          std::size_t pos = 0;
          while (pos < n && ++assign[pos] == m) assign[pos++] = 0;
          if (pos == n) break;
        }
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

// The indicator-coordinate evaluation map is a homeomorphism onto its image
// exactly over discrete spaces; it is always continuous and open onto its
// image, and its coordinates are indexed by all clopen sets.
inline CheckResult check_evaluation_embedding(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"evaluation-embedding"};
  std::mt19937_64 rng(cfg.seed);
  std::size_t bound = std::max<std::size_t>(cfg.max_points, 8);
  std::vector<FiniteSpace> spaces = spaces_up_to(bound, rng, 30);
  std::vector<ValuedField> fields = {ValuedField::trivial_fq(2),
                                     ValuedField::padic(2)};
  std::size_t turn = 0;
  for (const FiniteSpace& x : spaces) {
    const ValuedField& k = fields[turn++ % fields.size()];
    EvaluationEmbedding e = sc_embed(x, k);
    bool d = x.is_discrete();
    if (e.injective != d)
      detail::record(r, "injectivity differs from discreteness on " +
                            detail::describe(x));
    if (e.homeomorphism != d)
      detail::record(r, "homeomorphism verdict differs from discreteness on " +
                            detail::describe(x));
    if (!e.continuous)
      detail::record(r, "evaluation map is not continuous");
    if (!e.open_onto_image)
      detail::record(r, "evaluation map is not open onto its image");
    if (e.coordinates.size() != x.clopen_masks().size())
      detail::record(r, "coordinate count differs from the clopen count");
    for (Mask c : e.coordinates)
      if (!x.is_clopen(c))
        detail::record(r, "a coordinate is not clopen");
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

// Extension of bounded functions to the ultrafilter space: composing with
// the principal map recovers the function, sup norms agree exactly, the
// extension is unique because the principal image covers everything, and
// constants extend to constants.
inline CheckResult check_function_extension(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"function-extension"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> spaces = spaces_up_to(cfg.max_points, rng, 20);
  std::vector<ValuedField> fields = {ValuedField::trivial_fq(2),
                                     ValuedField::padic(2),
                                     ValuedField::trivial_qi()};
  for (const FiniteSpace& x : spaces) {
    UltrafilterSpace u = build_uf(x);
    std::vector<bool> covered(u.ultrafilters.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i)
      covered[u.principal_assignment[i]] = true;
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
      detail::record(r, "principal image does not cover the ultrafilter "
                        "space, so extensions would not be unique");
    for (const ValuedField& k : fields) {
      for (int round = 0; round < 2; ++round) {
        BoundedFunction f = random_function(rng, x, k);
        BoundedFunction ext = extend_function(u, f);
        for (std::size_t i = 0; i < x.size(); ++i)
          if (!(ext.values[u.principal_assignment[i]] == f.values[i]))
            detail::record(r, "extension does not restrict to the function");
        if (!(sup_norm(ext) == sup_norm(f)))
          detail::record(r, "extension changes the sup norm: " +
                                sup_norm(ext).to_string() + " vs " +
                                sup_norm(f).to_string());
        ++r.cases;
      }
      if (x.size() > 0) {
        Scalar c = random_scalar(rng, k);
        BoundedFunction ext =
            extend_function(u, BoundedFunction::constant(x, c));
        for (const Scalar& v : ext.values)
          if (!(v == c))
            detail::record(r, "a constant does not extend to the same "
                              "constant");
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

// Maximal ideals against ultrafilters: the two constructions invert each
// other, membership outside the ideal recovers the principal ultrafilter,
// there is one maximal ideal per component, and primality happens exactly
// at one-component zero sets (witnessed concretely otherwise).
inline CheckResult check_ideal_bijection(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"ideal-bijection"};
  std::mt19937_64 rng(cfg.seed);
  std::size_t bound = std::max<std::size_t>(cfg.max_points, 8);
  std::vector<FiniteSpace> spaces = spaces_up_to(bound, rng, 25);
  std::vector<ValuedField> fields = {ValuedField::trivial_fq(2),
                                     ValuedField::padic(2),
                                     ValuedField::padic(3)};
  for (const FiniteSpace& x : spaces) {
    ClopenAlgebra co = ClopenAlgebra::of(x);
    std::vector<Mask> comps = x.component_masks();
    for (const ValuedField& k : fields) {
      if (x.size() == 0) {
        if (!enumerate_max_ideals(x, k).empty())
          detail::record(r, "the empty space claims a maximal ideal");
        continue;
      }
      std::vector<Ideal> ideals = enumerate_max_ideals(x, k);
      if (ideals.size() != comps.size())
        detail::record(r, "maximal ideal count differs from component count");
      UltrafilterSpace u = build_uf(x);
      for (std::size_t c = 0; c < ideals.size(); ++c) {
        const Ideal& m = ideals[c];
        if (!m.is_maximal() || !m.is_prime())
          detail::record(r, "enumerated maximal ideal is not maximal prime");
        if (m.zero_mask != comps[c])
          detail::record(r, "maximal ideal zero set is not its component");
        Ultrafilter uf = uf_from_ideal(m);
        if (co.to_points(uf.minimum) != m.zero_mask)
          detail::record(r, "induced ultrafilter concentrates elsewhere");
        Ideal back = ideal_from_uf(x, k, uf);
        if (back.zero_mask != m.zero_mask)
          detail::record(r, "ideal roundtrip changes the zero set");
      }
      for (const Ultrafilter& uf : u.ultrafilters) {
        Ideal m = ideal_from_uf(x, k, uf);
        Ultrafilter back = uf_from_ideal(m);
        if (!(back == uf))
          detail::record(r, "ultrafilter roundtrip changes the ultrafilter");
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        Ultrafilter p = principal(co, i);
        Ideal m = ideal_from_uf(x, k, p);
        if (clopens_outside(m) != p.filter.elements)
          detail::record(r, "clopens outside the point ideal differ from "
                            "the principal ultrafilter at " +
                                x.points[i]);
      }
      std::vector<Mask> selections;
      if (comps.size() <= 4) {
        for (Mask sel = 1; sel < (Mask{1} << comps.size()); ++sel)
          selections.push_back(sel);
      } else {
        selections = {Mask{1}, Mask{3}};
      }
      std::vector<BoundedFunction> family;
      if (comps.size() <= 4) {
        for (Mask s2 = 0; s2 < (Mask{1} << comps.size()); ++s2) {
          Mask pts = 0;
          for (std::size_t c = 0; c < comps.size(); ++c)
            if (mask_contains(s2, c)) pts |= comps[c];
          family.push_back(BoundedFunction::indicator(x, pts, k));
        }
      }
      for (Mask sel : selections) {
        Mask zero = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
          if (mask_contains(sel, c)) zero |= comps[c];
        Ideal m(x, k,
                {BoundedFunction::indicator(x, x.full() & ~zero, k)});
        std::size_t picked = mask_size(sel);
        if (m.is_prime() != (picked == 1))
          detail::record(r, "primality differs from having one zero "
                            "component");
        if (picked >= 2) {
          Mask first = comps[lowest_index(sel)];
          BoundedFunction f =
              BoundedFunction::indicator(x, x.full() & ~first, k);
          BoundedFunction g = BoundedFunction::indicator(
              x, x.full() & ~(zero & ~first), k);
          if (!m.contains(f * g) || m.contains(f) || m.contains(g))
            detail::record(r, "non-primality witness does not behave");
        } else {
          for (const BoundedFunction& f : family)
            for (const BoundedFunction& g : family)
              if (m.contains(f * g) && !m.contains(f) && !m.contains(g))
                detail::record(r, "prime ideal admits a product witness");
        }
      }
      bool threw = false;
      try {
        uf_from_ideal(Ideal(x, k, {BoundedFunction::zero(x, k)}));
        threw = comps.size() == 1;
      } catch (const Error&) {
        threw = true;
      }
      if (!threw)
        detail::record(r, "zero ideal with several components was accepted "
                          "as prime");
      ++r.cases;
    }
  }
  bool threw = false;
  try {
    FiniteSpace empty({}, {Mask{0}});
    FiniteSpace one = FiniteSpace::discrete(default_point_names(1));
    ideal_from_uf(empty, ValuedField::trivial_fq(2),
                  principal(ClopenAlgebra::of(one), 0));
  } catch (const Error&) {
    threw = true;
  }
  if (!threw)
    detail::record(r, "the empty space produced a maximal ideal");
  r.seconds = timer.seconds();
  return r;
}

// Exact magnitude arithmetic: multiplicativity, the ultrametric inequality
// with forced equality at distinct magnitudes, total order against the exact
// rational value, and print/parse roundtrips.
inline CheckResult check_absolute_value_laws(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"absolute-value-laws"};
  std::mt19937_64 rng(cfg.seed);
  for (const ValuedField& k : detail::catalogue_fields()) {
    for (std::size_t i = 0; i < cfg.random_cases; ++i) {
      Scalar a = random_scalar(rng, k);
      Scalar b = random_scalar(rng, k);
      if (!(abs(a * b) == abs(a) * abs(b)))
        detail::record(r, "multiplicativity fails: |ab| = " +
                              abs(a * b).to_string() + ", |a||b| = " +
                              (abs(a) * abs(b)).to_string());
      AbsValue sum = abs(a + b);
      AbsValue bigger = max(abs(a), abs(b));
      if (!(sum <= bigger))
        detail::record(r, "ultrametric inequality fails");
      if (!(abs(a) == abs(b)) && !(sum == bigger))
        detail::record(r, "ultrametric equality case fails: |a+b| = " +
                              sum.to_string() + ", max = " +
                              bigger.to_string());
      if (is_integral(a) != (abs(a) <= AbsValue::one()))
        detail::record(r, "integrality differs from |a| <= 1");
      ++r.cases;
    }
  }
  std::vector<AbsValue> values = {AbsValue::zero(), AbsValue::one()};
  for (int base : {2, 3, 5})
    for (int e = -6; e <= 6; ++e)
      if (e != 0) values.push_back(AbsValue::power(base, e));
  for (const AbsValue& u : values) {
    for (const AbsValue& v : values) {
      int got = AbsValue::compare(u, v);
      Rational ru = u.as_rational();
      Rational rv = v.as_rational();
      int expected = ru < rv ? -1 : (ru == rv ? 0 : 1);
      if (got != expected)
        detail::record(r, "order disagrees with exact rationals: " +
                              u.to_string() + " vs " + v.to_string());
      ++r.cases;
    }
    if (!(parse_abs_value(u.to_string()) == u))
      detail::record(r, "magnitude print/parse roundtrip fails at " +
                            u.to_string());
  }
  r.seconds = timer.seconds();
  return r;
}

// Seminorm identities over randomized functions: multiplicativity at every
// ultrafilter, boundedness, attainment at the smallest member, agreement
// of quotient norms with ultrafilter seminorms (with a grid-search infimum
// oracle on small spaces), the sup norm as the largest quotient norm, and
// the spectrum seminorm axioms.
inline CheckResult check_seminorm_identities(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"seminorm-identities"};
  std::mt19937_64 rng(cfg.seed);
  struct Instance {
    FiniteSpace x;
    ClopenAlgebra co;
    UltrafilterSpace u;
  };
  std::vector<Instance> pool;
  for (FiniteSpace& x :
       spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 12)) {
    ClopenAlgebra co = ClopenAlgebra::of(x);
    UltrafilterSpace u = build_uf(x);
    pool.push_back(Instance{std::move(x), std::move(co), std::move(u)});
  }
  for (const ValuedField& k : detail::catalogue_fields()) {
    for (std::size_t it = 0; it < cfg.random_cases; ++it) {
      const Instance& inst = pool[it % pool.size()];
      const FiniteSpace& x = inst.x;
      BoundedFunction f = random_function(rng, x, k);
      BoundedFunction g = random_function(rng, x, k);
      for (const Ultrafilter& uf : inst.u.ultrafilters) {
        AbsValue nf = uf_seminorm(f, uf);
        AbsValue ng = uf_seminorm(g, uf);
        AbsValue nfg = uf_seminorm(f * g, uf);
        if (!(nfg == nf * ng))
          detail::record(r, "seminorm multiplicativity fails: " +
                                nfg.to_string() + " vs " +
                                (nf * ng).to_string());
        if (!(nf <= sup_norm(f)))
          detail::record(r, "seminorm exceeds the sup norm");
        AbsValue attained = AbsValue::zero();
        for (std::size_t i : mask_indices(inst.co.to_points(uf.minimum)))
          attained = max(attained, abs(f.values[i]));
        if (!(nf == attained))
          detail::record(r, "seminorm is not attained at the smallest "
                            "member");
      }
      if (!(algebraic_norm(f) == sup_norm(f)))
        detail::record(r, "largest quotient norm differs from the sup norm");
      for (const Ideal& m : enumerate_max_ideals(x, k)) {
        AbsValue qn = quotient_norm(f, m);
        if (!(qn == uf_seminorm(f, uf_from_ideal(m))))
          detail::record(r, "quotient norm differs from the ultrafilter "
                            "seminorm");
        if (it % 16 == 0 && x.size() <= 4) {
          std::vector<Mask> free_comps;
          for (Mask comp : x.component_masks())
            if ((comp & m.zero_mask) == 0) free_comps.push_back(comp);
          std::vector<Scalar> grid;
          if (k.kind == FieldKind::TrivialFq) {
            grid = detail::all_field_elements(k);
          } else {
            grid = {Scalar::zero(k), Scalar::one(k), -Scalar::one(k)};
            for (Mask comp : free_comps) {
              Scalar v = f.values[lowest_index(comp)];
              grid.push_back(v);
              grid.push_back(-v);
            }
            if (k.kind == FieldKind::PadicQ) {
              grid.push_back(Scalar::from_rational(k, Rational(k.p)));
              grid.push_back(
                  Scalar::from_rational(k, Rational(BigInt(1), BigInt(k.p))));
            }
          }
          std::vector<std::size_t> pick(free_comps.size(), 0);
          bool first = true;
          AbsValue best = AbsValue::zero();
          for (;;) {
            AbsValue sup = AbsValue::zero();
            for (std::size_t i : mask_indices(m.zero_mask))
              sup = max(sup, abs(f.values[i]));
            for (std::size_t c = 0; c < free_comps.size(); ++c)
              for (std::size_t i : mask_indices(free_comps[c]))
                sup = max(sup, abs(f.values[i] + grid[pick[c]]));
            if (first || sup < best) best = sup;
            first = false;
            std::size_t pos = 0;
            while (pos < pick.size() && ++pick[pos] == grid.size())
              pick[pos++] = 0;
            if (pos == pick.size()) break;
          }
          if (!(best == qn))
            detail::record(r, "grid infimum " + best.to_string() +
                                  " differs from the quotient norm " +
                                  qn.to_string());
        }
      }
      if (it % 8 == 0) {
        for (const BerkovichPoint& pt : spectrum(x, k)) {
          if (!(pt.evaluate(f * g) == pt.evaluate(f) * pt.evaluate(g)))
            detail::record(r, "spectrum point is not multiplicative");
          if (!(pt.evaluate(f + g) <=
                max(pt.evaluate(f), pt.evaluate(g))))
            detail::record(r, "spectrum point is not ultrametric");
          if (!(pt.evaluate(f) <= sup_norm(f)))
            detail::record(r, "spectrum point is not bounded");
          if (!(pt.evaluate(BoundedFunction::zero(x, k)) == AbsValue::zero()))
            detail::record(r, "spectrum point does not kill zero");
          if (x.size() > 0 &&
              !(pt.evaluate(BoundedFunction::constant(x, Scalar::one(k))) ==
                AbsValue::one()))
            detail::record(r, "spectrum point does not fix one");
        }
      }
      ++r.cases;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

// The spectrum is in bijection with the ultrafilter space, by the same
// bijection over every base field, respecting the basic opens.
inline CheckResult check_spectrum_bijection(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"spectrum-bijection"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> spaces =
      spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 25);
  std::vector<ValuedField> fields = {ValuedField::trivial_fq(2),
                                     ValuedField::padic(2),
                                     ValuedField::padic(3)};
  for (const FiniteSpace& x : spaces) {
    UltrafilterSpace u = build_uf(x);
    std::vector<std::vector<BerkovichPoint>> spectra;
    for (const ValuedField& k : fields) {
      std::vector<BerkovichPoint> pts = spectrum(x, k);
      if (pts.size() != u.ultrafilters.size())
        detail::record(r, "spectrum size differs from the ultrafilter count");
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (!(pts[i].uf == u.ultrafilters[i]))
          detail::record(r, "spectrum point differs from its ultrafilter");
      BoundedFunction f = random_function(rng, x, k);
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (!(pts[i].evaluate(f) == uf_seminorm(f, u.ultrafilters[i])))
          detail::record(r, "spectrum evaluation differs from the seminorm");
      spectra.push_back(std::move(pts));
    }
    for (std::size_t fi = 1; fi < spectra.size(); ++fi)
      for (std::size_t i = 0; i < spectra[fi].size(); ++i)
        if (!(spectra[fi][i].uf == spectra[0][i].uf))
          detail::record(r, "the bijection onto ultrafilters depends on the "
                            "base field");
    ClopenAlgebra co = ClopenAlgebra::of(x);
    for (Element a = 0;; ++a) {
      for (std::size_t i = 0; i < u.ultrafilters.size(); ++i)
        if (mask_contains(u.basis[a], i) !=
            u.ultrafilters[i].filter.contains(a))
          detail::record(r, "basic opens do not match ultrafilter "
                            "membership");
      if (a == co.algebra.top()) break;
    }
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

// Norms split over the constants-plus-ideal decomposition, randomized.
inline CheckResult check_orthogonality(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"orthogonality"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> pool;
  for (FiniteSpace& x :
       spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 12))
    if (x.size() > 0) pool.push_back(std::move(x));
  std::vector<ValuedField> fields = detail::catalogue_fields();
  for (std::size_t it = 0; it < cfg.random_cases; ++it) {
    const FiniteSpace& x = pool[it % pool.size()];
    const ValuedField& k = fields[it % fields.size()];
    std::vector<Ideal> ideals = enumerate_max_ideals(x, k);
    const Ideal& m = ideals[it % ideals.size()];
    BoundedFunction g = random_function(rng, x, k);
    std::vector<Scalar> vals = g.values;
    for (std::size_t i : mask_indices(m.zero_mask)) vals[i] = Scalar::zero(k);
    g = BoundedFunction(x, k, std::move(vals));
    Scalar a = random_scalar(rng, k);
    if (!orthogonal_decomposition_check(a, g, m))
      detail::record(r, "orthogonal decomposition fails: a = " +
                            scalar_to_string(a));
    AbsValue lhs = sup_norm(BoundedFunction::constant(x, a) + g);
    AbsValue rhs = max(abs(a), sup_norm(g));
    if (!(lhs == rhs))
      detail::record(r, "norm split fails: " + lhs.to_string() + " vs " +
                            rhs.to_string());
    if (it % 64 == 0) {
      bool threw = false;
      try {
        orthogonal_decomposition_check(
            a, BoundedFunction::constant(x, Scalar::one(k)), m);
      } catch (const Error&) {
        threw = true;
      }
      if (!threw)
        detail::record(r, "a function outside the ideal was accepted");
    }
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

// The partition-to-subalgebra correspondence for discrete spaces: block
// indicators recover exactly the partition they came from, separating twice
// is idempotent, and full indicator families separate into components.
inline CheckResult check_gelfand(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"gelfand-roundtrip"};
  std::mt19937_64 rng(cfg.seed);
  ValuedField f2 = ValuedField::trivial_fq(2);
  ValuedField q2 = ValuedField::padic(2);
  for (std::size_t n = 0; n <= std::min<std::size_t>(cfg.max_points, 6);
       ++n) {
    FiniteSpace x = FiniteSpace::discrete(default_point_names(n));
    for (const Partition& p : all_partitions(n)) {
      GelfandRoundtrip round = gelfand_roundtrip(x, p, f2);
      if (!round.ok || !(round.recovered == p))
        detail::record(r, "roundtrip fails on a partition of " +
                              std::to_string(n) + " points");
      ++r.cases;
    }
    for (const ValuedField& k : {f2, q2}) {
      for (int round = 0; round < 3; ++round) {
        std::vector<BoundedFunction> gens;
        std::uniform_int_distribution<int> count(0, 3);
        int total = count(rng);
        for (int i = 0; i < total; ++i)
          gens.push_back(random_function(rng, x, k));
        if (!separation_closure_consistent(x, gens, k))
          detail::record(r, "separating twice moved the partition");
      }
    }
  }
  std::vector<FiniteSpace> spaces =
      spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 10);
  for (const FiniteSpace& x : spaces) {
    std::vector<BoundedFunction> indicators;
    for (Mask c : x.clopen_masks())
      indicators.push_back(BoundedFunction::indicator(x, c, f2));
    SeparationResult sep = separation_quotient(x, indicators);
    Partition comps(x.size(), x.component_masks());
    if (!(sep.partition == comps))
      detail::record(r, "all clopen indicators separate differently from "
                        "components on " +
                            detail::describe(x));
    ++r.cases;
  }
  FiniteSpace three = FiniteSpace::discrete(default_point_names(3));
  SeparationResult single = separation_quotient(
      three,
      {BoundedFunction::indicator(three, three.point_set({"a", "b"}), f2)});
  if (single.partition.blocks !=
      std::vector<Mask>{three.point_set({"a", "b"}), three.point_set({"c"})})
    detail::record(r, "a single indicator separates into the wrong blocks");
  SeparationResult constant_only = separation_quotient(
      three, {BoundedFunction::constant(three, Scalar::one(f2))});
  if (constant_only.partition.blocks.size() != 1)
    detail::record(r, "constants separate a discrete space");
  bool threw = false;
  try {
    FiniteSpace sierpinski =
        generate_topology(default_point_names(2), {Mask{1}});
    gelfand_roundtrip(sierpinski, all_partitions(2).front(), f2);
  } catch (const Error&) {
    threw = true;
  }
  if (!threw)
    detail::record(r, "a non-discrete space was accepted for the roundtrip");
  r.seconds = timer.seconds();
  return r;
}

// Locally constant approximation: the blocks are exactly the equivalence
// classes of "distance below the radius" (an equivalence relation because
// the metric is an ultrametric), the error stays inside the radius, the
// approximation never grows the norm, and small radii reproduce the
// function.
inline CheckResult check_approximation(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"approximation"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> pool =
      spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 12);
  std::vector<ValuedField> fields = {ValuedField::padic(2),
                                     ValuedField::padic(3),
                                     ValuedField::trivial_fq(4),
                                     ValuedField::trivial_qi()};
  std::uniform_int_distribution<int> exp(-4, 4);
  for (std::size_t it = 0; it < cfg.random_cases; ++it) {
    const FiniteSpace& x = pool[it % pool.size()];
    const ValuedField& k = fields[it % fields.size()];
    BoundedFunction f = random_function(rng, x, k);
    AbsValue eps = k.kind == FieldKind::PadicQ
                       ? AbsValue::power(k.p, exp(rng))
                       : (it % 2 == 0 ? AbsValue::one()
                                      : AbsValue::power(2, 1));
    ApproxResult res = locally_constant_approx(f, eps);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(abs(f.values[i] - res.g.values[i]) < eps))
        detail::record(r, "pointwise error reaches the radius");
    if (!(sup_norm(f - res.g) <= eps))
      detail::record(r, "approximation error exceeds the radius");
    if (!(sup_norm(res.g) <= sup_norm(f)))
      detail::record(r, "approximation grows the norm");
    for (Mask block : res.blocks.blocks) {
      if (!x.is_clopen(block))
        detail::record(r, "an approximation block is not clopen");
      std::size_t rep = lowest_index(block);
      for (std::size_t i : mask_indices(block))
        if (!(res.g.values[i] == f.values[rep]))
          detail::record(r, "approximation is not the first value on its "
                            "block");
    }
    if (x.size() > 0) {
      std::vector<Mask> classes;
      Mask seen = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (mask_contains(seen, i)) continue;
        Mask cls = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
          if (abs(f.values[i] - f.values[j]) < eps) cls |= Mask{1} << j;
        classes.push_back(cls);
        seen |= cls;
      }
      if (!(res.blocks == Partition(x.size(), std::move(classes))))
        detail::record(r, "blocks differ from the distance equivalence "
                          "classes");
      AbsValue min_positive = AbsValue::zero();
      bool found = false;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          AbsValue d = abs(f.values[i] - f.values[j]);
          if (d.is_zero()) continue;
          if (!found || d < min_positive) min_positive = d;
          found = true;
        }
      if (found) {
        ApproxResult exact = locally_constant_approx(f, min_positive);
        if (!(exact.g == f))
          detail::record(r, "a radius below every gap still moved the "
                            "function");
      }
    }
    ++r.cases;
  }
  ValuedField q2 = ValuedField::padic(2);
  FiniteSpace four = FiniteSpace::discrete(default_point_names(4));
  BoundedFunction worked(four, q2,
                         {Scalar::from_int(q2, 1), Scalar::from_int(q2, 3),
                          Scalar::from_int(q2, 4), Scalar::from_int(q2, 12)});
  ApproxResult res = locally_constant_approx(worked, AbsValue::one());
  if (res.blocks.blocks != std::vector<Mask>{four.point_set({"a", "b"}),
                                             four.point_set({"c", "d"})})
    detail::record(r, "worked example produces the wrong blocks");
  BoundedFunction expected(four, q2,
                           {Scalar::from_int(q2, 1), Scalar::from_int(q2, 1),
                            Scalar::from_int(q2, 4), Scalar::from_int(q2, 4)});
  if (!(res.g == expected))
    detail::record(r, "worked example produces the wrong approximation");
  if (!(sup_norm(worked - res.g) == AbsValue::power(2, -1)))
    detail::record(r, "worked example error is not 2^-1");
  bool threw = false;
  try {
    locally_constant_approx(worked, AbsValue::zero());
  } catch (const Error&) {
    threw = true;
  }
  if (!threw) detail::record(r, "a zero radius was accepted");
  r.seconds = timer.seconds();
  return r;
}

// Every function is an exact finite combination of scaled indicators with
// distinct nonzero coefficients and disjoint clopen supports.
inline CheckResult check_idempotent_density(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"idempotent-density"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> pool =
      spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 12);
  std::vector<ValuedField> fields = detail::catalogue_fields();
  for (std::size_t it = 0; it < cfg.random_cases; ++it) {
    const FiniteSpace& x = pool[it % pool.size()];
    const ValuedField& k = fields[it % fields.size()];
    BoundedFunction f = random_function(rng, x, k);
    IdempotentWitness w = idempotent_decomposition(f);
    std::vector<Scalar> distinct;
    for (const Scalar& v : f.values) {
      if (v.is_zero()) continue;
      bool fresh = true;
      for (const Scalar& d : distinct)
        if (d == v) fresh = false;
      if (fresh) distinct.push_back(v);
    }
    if (w.terms.size() != distinct.size())
      detail::record(r, "term count differs from the distinct nonzero "
                        "values");
    Mask covered = 0;
    BoundedFunction rebuilt = BoundedFunction::zero(x, k);
    for (const IdempotentTerm& t : w.terms) {
      if (t.coefficient.is_zero())
        detail::record(r, "a zero coefficient appears");
      if ((covered & t.support) != 0)
        detail::record(r, "supports overlap");
      covered |= t.support;
      if (!x.is_clopen(t.support))
        detail::record(r, "a support is not clopen");
      rebuilt = rebuilt + t.coefficient *
                              BoundedFunction::indicator(x, t.support, k);
    }
    if (covered != (x.full() & ~f.zero_set()))
      detail::record(r, "supports do not cover the nonzero set");
    if (!(rebuilt == f))
      detail::record(r, "the combination does not rebuild the function");
    ++r.cases;
  }
  ValuedField q2 = ValuedField::padic(2);
  FiniteSpace three = FiniteSpace::discrete(default_point_names(3));
  BoundedFunction f(three, q2,
                    {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2),
                     Scalar::from_int(q2, 4)});
  IdempotentWitness w = idempotent_decomposition(f);
  if (w.terms.size() != 3)
    detail::record(r, "the three-value example does not give three terms");
  BoundedFunction c = BoundedFunction::constant(three, Scalar::from_int(q2, 5));
  IdempotentWitness wc = idempotent_decomposition(c);
  if (wc.terms.size() != 1 || wc.terms[0].support != three.full())
    detail::record(r, "a constant does not give a single full-support term");
  if (!idempotent_decomposition(BoundedFunction::zero(three, q2))
           .terms.empty())
    detail::record(r, "zero does not give the empty combination");
  r.seconds = timer.seconds();
  return r;
}

// Ground-field extension along the catalogue bases: the tensor norm equals
// the sup norm of the multiplied-out function, while the bound read off an
// arbitrary presentation only dominates it.
inline CheckResult check_tensor_isometry(const Config& cfg) {
  detail::Timer timer;
  CheckResult r{"tensor-isometry"};
  std::mt19937_64 rng(cfg.seed);
  std::vector<FiniteSpace> pool =
      spaces_up_to(std::min<std::size_t>(cfg.max_points, 6), rng, 12);
  for (const TensorExtension& ext :
       {TensorExtension::f4_over_f2(), TensorExtension::qi_over_q()}) {
    for (std::size_t it = 0; it < cfg.random_cases; ++it) {
      const FiniteSpace& x = pool[it % pool.size()];
      std::size_t summands = it % 5;
      std::vector<std::pair<Scalar, BoundedFunction>> terms;
      for (std::size_t s = 0; s < summands; ++s)
        terms.emplace_back(random_scalar(rng, ext.field),
                           random_function(rng, x, ext.base));
      TensorElement t(ext, x, std::move(terms));
      BoundedFunction applied = apply_extension(t);
      if (!tensor_isometry_check(t))
        detail::record(r, "tensor norm differs from the applied sup norm: " +
                              tensor_norm(t).to_string() + " vs " +
                              sup_norm(applied).to_string());
      if (!(tensor_naive_bound(t) >= sup_norm(applied)))
        detail::record(r, "the presentation bound fails to dominate");
      if (it % 10 == 0 && x.size() > 0) {
        Scalar c = random_scalar(rng, ext.field);
        TensorElement constant(
            ext, x,
            {{c, BoundedFunction::constant(x, Scalar::one(ext.base))}});
        if (!(tensor_norm(constant) == abs(c)) ||
            !(sup_norm(apply_extension(constant)) == abs(c)))
          detail::record(r, "a constant tensor does not have the "
                            "coefficient magnitude");
      }
      ++r.cases;
    }
  }
  TensorExtension f4 = TensorExtension::f4_over_f2();
  FiniteSpace two = FiniteSpace::discrete(default_point_names(2));
  ValuedField f2 = f4.base;
  TensorElement frozen(
      f4, two,
      {{f4.basis[0],
        BoundedFunction(two, f2, {Scalar::one(f2), Scalar::zero(f2)})},
       {f4.basis[1],
        BoundedFunction(two, f2, {Scalar::zero(f2), Scalar::one(f2)})}});
  if (!(tensor_norm(frozen) == AbsValue::one()) ||
      !(sup_norm(apply_extension(frozen)) == AbsValue::one()))
    detail::record(r, "the two-point example does not have norm one");
  bool threw = false;
  try {
    TensorExtension::named("bogus");
  } catch (const Error&) {
    threw = true;
  }
  if (!threw) detail::record(r, "an unknown extension was accepted");
  r.seconds = timer.seconds();
  return r;
}

inline VerificationReport run_suite(const std::string& name,
                                    const Config& cfg) {
  using CheckFn = CheckResult (*)(const Config&);
  struct Suite {
    const char* name;
    std::vector<CheckFn> checks;
  };
  static const std::vector<Suite> suites = {
      {"boolean-laws", {check_boolean_laws}},
      {"filters", {check_filter_generation, check_ultrafilter_axioms}},
      {"uf-universality",
       {check_uf_spaces, check_uf_map, check_evaluation_embedding,
        check_function_extension}},
      {"ideal-bijection", {check_ideal_bijection}},
      {"seminorm-identities",
       {check_absolute_value_laws, check_seminorm_identities,
        check_spectrum_bijection}},
      {"orthogonality", {check_orthogonality}},
      {"gelfand", {check_gelfand}},
      {"approximation", {check_approximation, check_idempotent_density}},
      {"tensor-isometry", {check_tensor_isometry}},
  };
  VerificationReport report;
  report.suite = name;
  report.config = cfg;
  bool found = false;
  for (const Suite& s : suites) {
    if (name == s.name || name == "all") {
      found = true;
      for (CheckFn fn : s.checks) report.checks.push_back(fn(cfg));
    }
  }
  if (!found) {
    std::string known;
    for (const Suite& s : suites) known += std::string(s.name) + ", ";
    throw Error("unknown suite '" + name + "' (known: " + known + "all)");
  }
  return report;
}

}  // namespace clopen
