#pragma once

#include <string>
#include <vector>

#include "clopen/clopen_algebra.hpp"
#include "clopen/ultrafilter_space.hpp"
#include "clopen/valued_field.hpp"

namespace clopen {

// A continuous function from a finite space into a valued field: one scalar
// per point, constant on each connected component.
struct BoundedFunction {
  FiniteSpace space;
  ValuedField field;
  std::vector<Scalar> values;

  BoundedFunction(FiniteSpace sp, ValuedField f, std::vector<Scalar> vals)
      : space(std::move(sp)), field(std::move(f)), values(std::move(vals)) {
    if (values.size() != space.size())
      throw Error("function must assign a value to every point");
    for (const Scalar& v : values)
      if (!(v.field == field))
        throw Error("function value from the wrong field");
    for (Mask comp : space.component_masks()) {
      std::size_t first = lowest_index(comp);
      for (std::size_t i : mask_indices(comp))
        if (!(values[i] == values[first]))
          throw Error("function is not constant on the component " +
                      space.set_name(comp));
    }
  }

  static BoundedFunction constant(const FiniteSpace& sp, const Scalar& c) {
    return BoundedFunction(sp, c.field,
                           std::vector<Scalar>(sp.size(), c));
  }

  static BoundedFunction zero(const FiniteSpace& sp, const ValuedField& f) {
    return constant(sp, Scalar::zero(f));
  }

  static BoundedFunction indicator(const FiniteSpace& sp, Mask support,
                                   const ValuedField& f) {
    if (!sp.is_clopen(support))
      throw Error("indicator support " + sp.set_name(support) +
                  " is not clopen");
    std::vector<Scalar> vals;
    vals.reserve(sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i)
      vals.push_back(mask_contains(support, i) ? Scalar::one(f)
                                               : Scalar::zero(f));
    return BoundedFunction(sp, f, std::move(vals));
  }

  const Scalar& at(std::size_t i) const { return values.at(i); }
  const Scalar& at(const std::string& name) const {
    return values[space.point_index(name)];
  }

  Mask zero_set() const {
    Mask m = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i].is_zero()) m |= Mask{1} << i;
    return m;
  }

  friend bool operator==(const BoundedFunction& a, const BoundedFunction& b) {
    return a.space == b.space && a.field == b.field && a.values == b.values;
  }
};

namespace detail {

inline void require_compatible(const BoundedFunction& a,
                               const BoundedFunction& b) {
  if (!(a.space == b.space)) throw Error("functions on different spaces");
  if (!(a.field == b.field)) throw Error("functions over different fields");
}

}  // namespace detail

inline BoundedFunction operator+(const BoundedFunction& a,
                                 const BoundedFunction& b) {
  detail::require_compatible(a, b);
  std::vector<Scalar> vals;
  vals.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    vals.push_back(a.values[i] + b.values[i]);
  return BoundedFunction(a.space, a.field, std::move(vals));
}

inline BoundedFunction operator-(const BoundedFunction& a,
                                 const BoundedFunction& b) {
  detail::require_compatible(a, b);
  std::vector<Scalar> vals;
  vals.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    vals.push_back(a.values[i] - b.values[i]);
  return BoundedFunction(a.space, a.field, std::move(vals));
}

inline BoundedFunction operator*(const BoundedFunction& a,
                                 const BoundedFunction& b) {
  detail::require_compatible(a, b);
  std::vector<Scalar> vals;
  vals.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    vals.push_back(a.values[i] * b.values[i]);
  return BoundedFunction(a.space, a.field, std::move(vals));
}

inline BoundedFunction operator*(const Scalar& c, const BoundedFunction& f) {
  std::vector<Scalar> vals;
  vals.reserve(f.values.size());
  for (const Scalar& v : f.values) vals.push_back(c * v);
  return BoundedFunction(f.space, f.field, std::move(vals));
}

// Largest pointwise magnitude; zero on the empty space.
inline AbsValue sup_norm(const BoundedFunction& f) {
  AbsValue out = AbsValue::zero();
  for (const Scalar& v : f.values) out = max(out, abs(v));
  return out;
}

// Infimum over members U of the ultrafilter of the largest magnitude on U.
// The infimum is attained on the minimum member.
inline AbsValue uf_seminorm(const BoundedFunction& f, const Ultrafilter& uf) {
  ClopenAlgebra co = ClopenAlgebra::of(f.space);
  if (!(uf.filter.algebra == co.algebra))
    throw Error("ultrafilter does not live on the function's space");
  bool first = true;
  AbsValue out = AbsValue::zero();
  for (Element e : uf.filter.elements) {
    AbsValue sup = AbsValue::zero();
    for (std::size_t i : mask_indices(co.to_points(e)))
      sup = max(sup, abs(f.values[i]));
    out = first ? sup : min(out, sup);
    first = false;
  }
  if (first) throw Error("ultrafilter has no members");
  return out;
}

// An ideal of the function algebra, described by generators. Because the
// algebra is a finite product of fields indexed by the components, an ideal
// is exactly the set of functions vanishing wherever all generators vanish.
struct Ideal {
  FiniteSpace space;
  ValuedField field;
  std::vector<BoundedFunction> generators;
  std::vector<Mask> component_masks;
  std::vector<std::size_t> zero_components;
  Mask zero_mask = 0;

  Ideal(FiniteSpace sp, ValuedField f, std::vector<BoundedFunction> gens)
      : space(std::move(sp)), field(std::move(f)),
        generators(std::move(gens)) {
    for (const BoundedFunction& g : generators) {
      if (!(g.space == space)) throw Error("generator on the wrong space");
      if (!(g.field == field)) throw Error("generator over the wrong field");
    }
    component_masks = space.component_masks();
    for (std::size_t c = 0; c < component_masks.size(); ++c) {
      std::size_t rep = lowest_index(component_masks[c]);
      bool all_vanish = true;
      for (const BoundedFunction& g : generators)
        if (!g.values[rep].is_zero()) all_vanish = false;
      if (all_vanish) {
        zero_components.push_back(c);
        zero_mask |= component_masks[c];
      }
    }
  }

  bool contains(const BoundedFunction& f) const {
    if (!(f.space == space)) throw Error("function on the wrong space");
    if (!(f.field == field)) throw Error("function over the wrong field");
    for (std::size_t i : mask_indices(zero_mask))
      if (!f.values[i].is_zero()) return false;
    return true;
  }

  bool is_prime() const { return zero_components.size() == 1; }
  bool is_maximal() const { return zero_components.size() == 1; }
};

// The ideal of functions whose seminorm at the ultrafilter vanishes: those
// vanishing on the component the ultrafilter concentrates on.
inline Ideal ideal_from_uf(const FiniteSpace& x, const ValuedField& k,
                           const Ultrafilter& uf) {
  if (x.size() == 0) throw Error("the empty space has no maximal ideals");
  ClopenAlgebra co = ClopenAlgebra::of(x);
  if (!(uf.filter.algebra == co.algebra))
    throw Error("ultrafilter does not live on this space");
  Mask component = co.to_points(uf.minimum);
  BoundedFunction gen =
      BoundedFunction::indicator(x, x.full() & ~component, k);
  return Ideal(x, k, {std::move(gen)});
}

// Clopen sets whose indicator lies outside the ideal. For a prime ideal this
// is an ultrafilter; the construction is the inverse of ideal_from_uf.
inline std::vector<Element> clopens_outside(const Ideal& m) {
  ClopenAlgebra co = ClopenAlgebra::of(m.space);
  std::vector<Element> out;
  for (Element a = 0;; ++a) {
    if ((co.to_points(a) & m.zero_mask) != 0) out.push_back(a);
    if (a == co.algebra.top()) break;
  }
  return out;
}

inline Ultrafilter uf_from_ideal(const Ideal& m) {
  if (!m.is_prime())
    throw Error("ideal is not prime: its zero set has " +
                std::to_string(m.zero_components.size()) +
                " components instead of 1");
  ClopenAlgebra co = ClopenAlgebra::of(m.space);
  Filter f(co.algebra, clopens_outside(m));
  if (!is_ultrafilter(f))
    throw Error("ideal did not induce an ultrafilter");
  Element minimum = f.minimum();
  return Ultrafilter{std::move(f), minimum};
}

// Distance from f to the maximal ideal: the largest magnitude of f on the
// ideal's zero set. This is the exact infimum of sup_norm(f - g) over g in
// the ideal, since g can match f off the zero set.
inline AbsValue quotient_norm(const BoundedFunction& f, const Ideal& m) {
  if (!(f.space == m.space)) throw Error("function on the wrong space");
  if (!(f.field == m.field)) throw Error("function over the wrong field");
  if (!m.is_maximal()) throw Error("quotient norm requires a maximal ideal");
  AbsValue out = AbsValue::zero();
  for (std::size_t i : mask_indices(m.zero_mask))
    out = max(out, abs(f.values[i]));
  return out;
}

// One maximal ideal per component, in component order.
inline std::vector<Ideal> enumerate_max_ideals(const FiniteSpace& x,
                                               const ValuedField& k) {
  std::vector<Ideal> out;
  for (Mask comp : x.component_masks()) {
    BoundedFunction gen =
        BoundedFunction::indicator(x, x.full() & ~comp, k);
    out.push_back(Ideal(x, k, {std::move(gen)}));
  }
  return out;
}

// The constants and a maximal ideal decompose the algebra orthogonally:
// the norm of (constant a) + g is exactly max(|a|, sup_norm(g)).
inline bool orthogonal_decomposition_check(const Scalar& a,
                                           const BoundedFunction& g,
                                           const Ideal& m) {
  if (!m.is_maximal())
    throw Error("orthogonal decomposition requires a maximal ideal");
  if (!m.contains(g))
    throw Error("function does not belong to the ideal");
  AbsValue lhs = sup_norm(BoundedFunction::constant(g.space, a) + g);
  AbsValue rhs = max(abs(a), sup_norm(g));
  return lhs == rhs;
}

// Largest quotient norm over all maximal ideals; agrees with the sup norm.
inline AbsValue algebraic_norm(const BoundedFunction& f) {
  AbsValue out = AbsValue::zero();
  for (const Ideal& m : enumerate_max_ideals(f.space, f.field))
    out = max(out, quotient_norm(f, m));
  return out;
}

// A point of the analytic spectrum: a multiplicative seminorm on the
// function algebra, realized as evaluation of the ultrafilter seminorm.
struct BerkovichPoint {
  FiniteSpace space;
  ValuedField field;
  Ultrafilter uf;

  AbsValue evaluate(const BoundedFunction& f) const {
    if (!(f.space == space)) throw Error("function on the wrong space");
    if (!(f.field == field)) throw Error("function over the wrong field");
    return uf_seminorm(f, uf);
  }
};

inline std::vector<BerkovichPoint> spectrum(const FiniteSpace& x,
                                            const ValuedField& k) {
  ClopenAlgebra co = ClopenAlgebra::of(x);
  std::vector<BerkovichPoint> out;
  for (Ultrafilter& uf : enumerate_ultrafilters(co.algebra))
    out.push_back(BerkovichPoint{x, k, std::move(uf)});
  return out;
}

}  // namespace clopen
