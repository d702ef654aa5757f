#pragma once

#include <array>
#include <string>
#include <vector>

#include "clopen/function_algebra.hpp"

namespace clopen {

// Evaluation of a space into the product of integral scalars indexed by its
// clopen sets: each point goes to its tuple of indicator values. The image
// carries the topology induced by separating the two indicator values.
struct EvaluationEmbedding {
  FiniteSpace space;
  ValuedField field;
  std::vector<Mask> coordinates;             // clopen sets, carrier order
  std::vector<std::vector<int>> fingerprints;  // per point, 0/1 per coordinate
  FiniteSpace image_space;
  ContinuousMap map;  // space -> image_space
  bool injective = false;
  bool continuous = false;
  bool open_onto_image = false;
  bool homeomorphism = false;
};

inline EvaluationEmbedding sc_embed(const FiniteSpace& x,
                                    const ValuedField& k) {
  ClopenAlgebra co = ClopenAlgebra::of(x);
  std::vector<Mask> coords = co.carrier_point_masks();
  std::vector<std::vector<int>> prints;
  prints.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<int> row;
    row.reserve(coords.size());
    for (Mask c : coords) row.push_back(mask_contains(c, i) ? 1 : 0);
    prints.push_back(std::move(row));
  }
  std::vector<std::size_t> class_of(x.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool found = false;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (prints[reps[r]] == prints[i]) {
        class_of[i] = r;
        found = true;
        break;
      }
    }
    if (!found) {
      class_of[i] = reps.size();
      reps.push_back(i);
    }
  }
  std::vector<Mask> class_masks(reps.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    class_masks[class_of[i]] |= Mask{1} << i;
  std::vector<std::string> names;
  names.reserve(reps.size());
  for (Mask m : class_masks) names.push_back(join_names(x.points, m, "+"));
  // Both indicator values are separated by opens of the integral scalars,
  // so every one-coordinate cylinder traces both sides on the image.
  std::vector<Mask> basis;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    Mask ones = 0;
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (prints[reps[r]][c] == 1) ones |= Mask{1} << r;
    basis.push_back(ones);
    basis.push_back(full_mask(reps.size()) & ~ones);
  }
  FiniteSpace image = generate_topology(names, basis);
  ContinuousMap map(x, image, std::vector<std::size_t>(class_of));
  EvaluationEmbedding out{x,
                          k,
                          std::move(coords),
                          std::move(prints),
                          std::move(image),
                          std::move(map),
                          false,
                          false,
                          false,
                          false};
  out.injective = reps.size() == x.size();
  out.continuous = check_continuous(out.map);
  out.open_onto_image = true;
  for (Mask o : x.opens)
    if (!out.image_space.is_open(out.map.image(o))) out.open_onto_image = false;
  out.homeomorphism = out.injective && out.continuous && out.open_onto_image;
  return out;
}

// Extends a function to the ultrafilter space through the scaling device:
// pick a unit a dominating the sup norm, evaluate the integral rescaling
// a^{-1} f at each ultrafilter's concentration component, and scale back.
// The result does not depend on the choice, which is checked for two units.
inline BoundedFunction extend_function(const UltrafilterSpace& u,
                                       const BoundedFunction& f) {
  if (!(u.co.space == f.space))
    throw Error("function and ultrafilter space disagree");
  AbsValue norm = sup_norm(f);
  std::vector<Scalar> choices;
  switch (f.field.kind) {
    case FieldKind::PadicQ: {
      long long e = norm.kind == AbsValue::Kind::Power ? norm.exp : 0;
      long long m = e > 0 ? e : 0;
      BigInt pw = boost::multiprecision::pow(BigInt(f.field.p),
                                             static_cast<unsigned>(m));
      choices.push_back(
          Scalar::from_rational(f.field, Rational(BigInt(1), pw)));
      choices.push_back(Scalar::from_rational(
          f.field, Rational(BigInt(1), pw * f.field.p)));
      break;
    }
    case FieldKind::TrivialQ:
      choices.push_back(Scalar::from_int(f.field, 1));
      choices.push_back(Scalar::from_int(f.field, 2));
      break;
    case FieldKind::TrivialQi:
      choices.push_back(Scalar::from_int(f.field, 1));
      choices.push_back(Scalar::from_gaussian(f.field, 0, 1));
      break;
    case FieldKind::TrivialFq:
      choices.push_back(Scalar::from_int(f.field, 1));
      if (f.field.extension_degree() > 1)
        choices.push_back(Scalar::from_poly(f.field, {0, 1}));
      else if (f.field.p > 2)
        choices.push_back(Scalar::from_int(f.field, 2));
      else
        choices.push_back(Scalar::from_int(f.field, 1));
      break;
  }
  std::vector<std::vector<Scalar>> results;
  for (const Scalar& a : choices) {
    if (abs(a) < norm) throw Error("scaling unit does not dominate the norm");
    Scalar a_inv = inverse(a);
    std::vector<Scalar> extension;
    extension.reserve(u.ultrafilters.size());
    for (const Ultrafilter& uf : u.ultrafilters) {
      Mask comp = u.co.to_points(uf.minimum);
      Scalar coordinate = a_inv * f.values[lowest_index(comp)];
      if (!is_integral(coordinate))
        throw Error("rescaled coordinate escaped the integral scalars");
      extension.push_back(a * coordinate);
    }
    results.push_back(std::move(extension));
  }
  for (std::size_t i = 1; i < results.size(); ++i)
    if (!(results[i] == results[0]))
      throw Error("extension depends on the scaling unit");
  return BoundedFunction(u.realized, f.field, std::move(results[0]));
}

// Quotient by indistinguishability under a generating family of functions.
struct SeparationResult {
  Partition partition;
  FiniteSpace space;
  ContinuousMap projection;
};

inline SeparationResult separation_quotient(
    const FiniteSpace& x, const std::vector<BoundedFunction>& generators) {
  if (!generators.empty()) {
    for (const BoundedFunction& g : generators) {
      if (!(g.space == x)) throw Error("generator on the wrong space");
      if (!(g.field == generators.front().field))
        throw Error("generators over different fields");
    }
  }
  std::vector<Mask> blocks;
  Mask seen = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mask_contains(seen, i)) continue;
    Mask block = Mask{1} << i;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      bool same = true;
      for (const BoundedFunction& g : generators)
        if (!(g.values[i] == g.values[j])) same = false;
      if (same) block |= Mask{1} << j;
    }
    blocks.push_back(block);
    seen |= block;
  }
  QuotientResult q = quotient(x, Partition(x.size(), std::move(blocks)));
  return SeparationResult{std::move(q.partition), std::move(q.space),
                          std::move(q.projection)};
}

// Gelfand correspondence at finite scale: a partition of a discrete space
// and the subalgebra generated by its block indicators determine each other.
struct GelfandRoundtrip {
  std::vector<BoundedFunction> generators;
  Partition recovered;
  bool ok = false;
};

inline std::vector<BoundedFunction> gelfand_forward(const FiniteSpace& x,
                                                    const Partition& p,
                                                    const ValuedField& k) {
  if (p.ground_size != x.size())
    throw Error("partition does not match the space");
  std::vector<BoundedFunction> gens;
  gens.reserve(p.blocks.size());
  for (Mask b : p.blocks)
    gens.push_back(BoundedFunction::indicator(x, b, k));
  return gens;
}

inline GelfandRoundtrip gelfand_roundtrip(const FiniteSpace& x,
                                          const Partition& p,
                                          const ValuedField& k) {
  if (!x.is_discrete())
    throw Error("the correspondence requires a discrete space");
  std::vector<BoundedFunction> gens = gelfand_forward(x, p, k);
  if (gens.empty()) {
    Partition empty(x.size(), {});
    bool ok = empty == p;
    return GelfandRoundtrip{{}, std::move(empty), ok};
  }
  SeparationResult sep = separation_quotient(x, gens);
  bool ok = sep.partition == p;
  return GelfandRoundtrip{std::move(gens), std::move(sep.partition), ok};
}

// Separating twice through block indicators changes nothing.
inline bool separation_closure_consistent(
    const FiniteSpace& x, const std::vector<BoundedFunction>& generators,
    const ValuedField& k) {
  SeparationResult first = separation_quotient(x, generators);
  std::vector<BoundedFunction> indicators;
  for (Mask b : first.partition.blocks)
    indicators.push_back(BoundedFunction::indicator(x, b, k));
  if (indicators.empty()) return x.size() == 0;
  SeparationResult second = separation_quotient(x, indicators);
  return first.partition == second.partition;
}

// Best locally constant approximation within an open disc of radius eps:
// points merge in order while their values stay strictly within eps, and
// each block adopts the value at its first point.
struct ApproxResult {
  BoundedFunction g;
  Partition blocks;
};

inline ApproxResult locally_constant_approx(const BoundedFunction& f,
                                            const AbsValue& eps) {
  if (eps.is_zero()) throw Error("approximation radius must be positive");
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < f.space.size(); ++i) {
    bool placed = false;
    for (auto& block : blocks) {
      bool close = true;
      for (std::size_t member : block)
        if (!(abs(f.values[i] - f.values[member]) < eps)) close = false;
      if (close) {
        block.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.push_back({i});
  }
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (std::size_t i : block) m |= Mask{1} << i;
    masks.push_back(m);
  }
  std::vector<Scalar> vals(f.space.size(), Scalar::zero(f.field));
  for (const auto& block : blocks)
    for (std::size_t i : block) vals[i] = f.values[block.front()];
  return ApproxResult{BoundedFunction(f.space, f.field, std::move(vals)),
                      Partition(f.space.size(), std::move(masks))};
}

// A finite extension of valued fields from the catalogue, with an explicit
// orthogonal basis: F4 over F2 with basis {1, x}, or Q(i) over Q with basis
// {1, i}. Both extensions are trivially valued.
struct TensorExtension {
  std::string name;
  ValuedField field;  // the extension field
  ValuedField base;
  std::array<Scalar, 2> basis;

  static TensorExtension f4_over_f2() {
    ValuedField f4 = ValuedField::trivial_fq(4);
    return TensorExtension{"F4/F2", f4, ValuedField::trivial_fq(2),
                           {Scalar::one(f4), Scalar::from_poly(f4, {0, 1})}};
  }

  static TensorExtension qi_over_q() {
    ValuedField qi = ValuedField::trivial_qi();
    return TensorExtension{"Qi/Q", qi, ValuedField::trivial_q(),
                           {Scalar::one(qi), Scalar::from_gaussian(qi, 0, 1)}};
  }

  static TensorExtension named(const std::string& name) {
    if (name == "F4/F2") return f4_over_f2();
    if (name == "Qi/Q") return qi_over_q();
    throw Error("unknown extension '" + name +
                "'; no orthogonal basis on record (known: F4/F2, Qi/Q)");
  }

  Scalar embed(const Scalar& c) const {
    if (!(c.field == base)) throw Error("scalar not in the base field");
    if (field.kind == FieldKind::TrivialFq) {
      std::vector<int> coeffs = c.poly();
      return Scalar::from_poly(field, std::move(coeffs));
    }
    return Scalar::from_rational(field, c.rational());
  }

  // Coordinates in the orthogonal basis {1, w}: c = out[0] + out[1] * w.
  std::array<Scalar, 2> decompose(const Scalar& c) const {
    if (!(c.field == field)) throw Error("scalar not in the extension field");
    if (field.kind == FieldKind::TrivialFq) {
      const std::vector<int>& poly = c.poly();
      int c0 = poly.size() > 0 ? poly[0] : 0;
      int c1 = poly.size() > 1 ? poly[1] : 0;
      return {Scalar::from_int(base, c0), Scalar::from_int(base, c1)};
    }
    return {Scalar::from_rational(base, c.gaussian().re),
            Scalar::from_rational(base, c.gaussian().im)};
  }
};

// An element of the tensor product of the extension field with the function
// algebra over the base field, as a finite sum of coefficient/function pairs.
struct TensorElement {
  TensorExtension extension;
  FiniteSpace space;
  std::vector<std::pair<Scalar, BoundedFunction>> summands;

  TensorElement(TensorExtension ext, FiniteSpace sp,
                std::vector<std::pair<Scalar, BoundedFunction>> terms)
      : extension(std::move(ext)), space(std::move(sp)),
        summands(std::move(terms)) {
    for (const auto& [c, g] : summands) {
      if (!(c.field == extension.field))
        throw Error("tensor coefficient not in the extension field");
      if (!(g.field == extension.base))
        throw Error("tensor function not over the base field");
      if (!(g.space == space)) throw Error("tensor function on the wrong space");
    }
  }
};

// Rewrites the element over the orthogonal basis: t = sum_i basis_i (x) g_i.
inline std::array<BoundedFunction, 2> tensor_coordinates(
    const TensorElement& t) {
  std::array<BoundedFunction, 2> out{
      BoundedFunction::zero(t.space, t.extension.base),
      BoundedFunction::zero(t.space, t.extension.base)};
  for (const auto& [c, g] : t.summands) {
    std::array<Scalar, 2> coords = t.extension.decompose(c);
    out[0] = out[0] + coords[0] * g;
    out[1] = out[1] + coords[1] * g;
  }
  return out;
}

// Tensor norm through the orthogonal basis: max_i |basis_i| sup_norm(g_i).
inline AbsValue tensor_norm(const TensorElement& t) {
  std::array<BoundedFunction, 2> coords = tensor_coordinates(t);
  AbsValue out = AbsValue::zero();
  for (std::size_t i = 0; i < 2; ++i)
    out = max(out, abs(t.extension.basis[i]) * sup_norm(coords[i]));
  return out;
}

// The bound read off the given presentation before any rewriting.
inline AbsValue tensor_naive_bound(const TensorElement& t) {
  AbsValue out = AbsValue::zero();
  for (const auto& [c, g] : t.summands) out = max(out, abs(c) * sup_norm(g));
  return out;
}

// Multiplies out the tensor into a single function over the extension field.
inline BoundedFunction apply_extension(const TensorElement& t) {
  BoundedFunction out = BoundedFunction::zero(t.space, t.extension.field);
  for (const auto& [c, g] : t.summands) {
    std::vector<Scalar> vals;
    vals.reserve(g.values.size());
    for (const Scalar& v : g.values)
      vals.push_back(c * t.extension.embed(v));
    out = out + BoundedFunction(t.space, t.extension.field, std::move(vals));
  }
  return out;
}

inline bool tensor_isometry_check(const TensorElement& t) {
  return tensor_norm(t) == sup_norm(apply_extension(t));
}

// Exact finite combination of idempotents: one term per distinct nonzero
// value, supported on its clopen level set.
struct IdempotentTerm {
  Scalar coefficient;
  Mask support;
};

struct IdempotentWitness {
  std::vector<IdempotentTerm> terms;
};

inline IdempotentWitness idempotent_decomposition(const BoundedFunction& f) {
  IdempotentWitness out;
  Mask seen = 0;
  for (std::size_t i = 0; i < f.space.size(); ++i) {
    if (mask_contains(seen, i) || f.values[i].is_zero()) continue;
    Mask level = 0;
    for (std::size_t j = 0; j < f.space.size(); ++j)
      if (f.values[j] == f.values[i]) level |= Mask{1} << j;
    seen |= level;
    out.terms.push_back(IdempotentTerm{f.values[i], level});
  }
  BoundedFunction rebuilt = BoundedFunction::zero(f.space, f.field);
  for (const IdempotentTerm& term : out.terms)
    rebuilt = rebuilt + term.coefficient * BoundedFunction::indicator(
                                               f.space, term.support, f.field);
  if (!(rebuilt == f))
    throw Error("idempotent combination failed to rebuild the function");
  return out;
}

}  // namespace clopen
