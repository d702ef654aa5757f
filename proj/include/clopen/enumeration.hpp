#pragma once

#include <random>
#include <string>
#include <vector>

#include "clopen/function_algebra.hpp"
#include "clopen/topology.hpp"
#include "clopen/valued_field.hpp"

namespace clopen {

inline std::vector<std::string> default_point_names(std::size_t n) {
  if (n > kMaxPoints) throw Error("too many points");
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

// Every topology on a finite set is the family of up-sets of a unique
// preorder, so enumerating transitive reflexive relations enumerates
// topologies exactly once. Feasible for n up to 4 (counts 1, 1, 4, 29, 355).
inline std::vector<FiniteSpace> all_topologies(std::size_t n) {
  if (n > 4) throw Error("exhaustive enumeration supports at most 4 points");
  std::vector<std::string> names = default_point_names(n);
  if (n == 0) return {FiniteSpace(names, {0})};
  std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off_diagonal.emplace_back(i, j);
  std::vector<FiniteSpace> out;
  for (Mask bits = 0; bits < (Mask{1} << off_diagonal.size()); ++bits) {
    std::vector<Mask> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Mask{1} << i;
    for (std::size_t k = 0; k < off_diagonal.size(); ++k)
      if (mask_contains(bits, k))
        row[off_diagonal[k].first] |= Mask{1} << off_diagonal[k].second;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (mask_contains(row[i], j) && !mask_subset(row[j], row[i]))
          transitive = false;
    if (!transitive) continue;
    std::vector<Mask> opens;
    for (Mask u = 0; u <= full_mask(n); ++u) {
      bool up_closed = true;
      for (std::size_t i = 0; i < n && up_closed; ++i)
        if (mask_contains(u, i) && !mask_subset(row[i], u)) up_closed = false;
      if (up_closed) opens.push_back(u);
    }
    out.emplace_back(names, std::move(opens));
  }
  return out;
}

inline FiniteSpace random_space(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> names = default_point_names(n);
  if (n == 0) return FiniteSpace(names, {0});
  std::uniform_int_distribution<Mask> subset(0, full_mask(n));
  std::vector<Mask> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(subset(rng));
  return generate_topology(names, basis);
}

// Exhaustive through 4 points, random samples beyond.
inline std::vector<FiniteSpace> spaces_up_to(std::size_t max_points,
                                             std::mt19937_64& rng,
                                             std::size_t samples_per_size) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = 0; n <= max_points && n <= 4; ++n)
    for (FiniteSpace& x : all_topologies(n)) out.push_back(std::move(x));
  for (std::size_t n = 5; n <= max_points; ++n)
    for (std::size_t s = 0; s < samples_per_size; ++s)
      out.push_back(random_space(rng, n));
  return out;
}

// Set partitions via restricted growth strings: position i may use any
// label up to one past the maximum of the labels before it.
inline std::vector<Partition> all_partitions(std::size_t n) {
  if (n > kMaxPoints) throw Error("too many points");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<Mask>{});
    return out;
  }
  std::vector<std::size_t> label(n, 0);
  auto emit = [&] {
    std::size_t block_count = 0;
    for (std::size_t l : label) block_count = std::max(block_count, l + 1);
    std::vector<Mask> blocks(block_count, 0);
    for (std::size_t i = 0; i < n; ++i) blocks[label[i]] |= Mask{1} << i;
    out.emplace_back(n, std::move(blocks));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t l = 0; l <= max_used + 1 && l < n; ++l) {
      label[i] = l;
      self(self, i + 1, std::max(max_used, l));
    }
  };
  label[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline Scalar random_scalar(std::mt19937_64& rng, const ValuedField& k) {
  switch (k.kind) {
    case FieldKind::TrivialFq: {
      std::uniform_int_distribution<int> coeff(0, k.p - 1);
      std::vector<int> poly(k.extension_degree());
      for (int& c : poly) c = coeff(rng);
      return Scalar::from_poly(k, std::move(poly));
    }
    case FieldKind::TrivialQi: {
      std::uniform_int_distribution<long long> num(-30, 30);
      std::uniform_int_distribution<long long> den(1, 30);
      return Scalar::from_gaussian(k, Rational(num(rng), den(rng)),
                                   Rational(num(rng), den(rng)));
    }
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: {
      std::uniform_int_distribution<long long> num(-30, 30);
      std::uniform_int_distribution<long long> den(1, 30);
      Rational r(num(rng), den(rng));
      if (k.kind == FieldKind::PadicQ) {
        std::uniform_int_distribution<int> shift(-3, 3);
        int j = shift(rng);
        BigInt pw = boost::multiprecision::pow(
            BigInt(k.p), static_cast<unsigned>(j < 0 ? -j : j));
        r *= j < 0 ? Rational(BigInt(1), pw) : Rational(pw);
      }
      return Scalar::from_rational(k, r);
    }
  }
  throw Error("unknown field kind");
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng,
                                    const ValuedField& k) {
  for (;;) {
    Scalar s = random_scalar(rng, k);
    if (!s.is_zero()) return s;
  }
}

inline BoundedFunction random_function(std::mt19937_64& rng,
                                       const FiniteSpace& x,
                                       const ValuedField& k) {
  std::vector<Scalar> values(x.size(), Scalar::zero(k));
  for (Mask comp : x.component_masks()) {
    Scalar v = random_scalar(rng, k);
    for (std::size_t i : mask_indices(comp)) values[i] = v;
  }
  return BoundedFunction(x, k, std::move(values));
}

}  // namespace clopen
