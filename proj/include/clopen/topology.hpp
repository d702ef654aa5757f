#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clopen/base.hpp"

namespace clopen {

// A finite topological space: named points plus the explicit family of open
// sets. Construction rejects families that are not closed under union and
// intersection or that miss the empty set or the whole set.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<Mask> opens;  // sorted, unique

  FiniteSpace(std::vector<std::string> point_names, std::vector<Mask> open_sets)
      : points(std::move(point_names)), opens(std::move(open_sets)) {
    validate();
  }

  static FiniteSpace discrete(std::vector<std::string> names) {
    std::vector<Mask> opens;
    for (Mask m = 0; m <= full_mask(names.size()); ++m) {
      opens.push_back(m);
      if (names.empty()) break;
    }
    return FiniteSpace(std::move(names), std::move(opens));
  }

  static FiniteSpace indiscrete(std::vector<std::string> names) {
    std::vector<Mask> opens{0};
    if (!names.empty()) opens.push_back(full_mask(names.size()));
    return FiniteSpace(std::move(names), std::move(opens));
  }

  static FiniteSpace from_point_sets(
      std::vector<std::string> names,
      const std::vector<std::vector<std::string>>& open_families) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
    std::vector<Mask> opens;
    for (const auto& family : open_families) {
      Mask m = 0;
      for (const auto& name : family) {
        auto it = index.find(name);
        if (it == index.end())
          throw Error("unknown point name '" + name + "' in open set");
        m |= Mask{1} << it->second;
      }
      opens.push_back(m);
    }
    return FiniteSpace(std::move(names), std::move(opens));
  }

  std::size_t size() const { return points.size(); }
  Mask full() const { return full_mask(points.size()); }

  bool is_open(Mask m) const {
    return std::binary_search(opens.begin(), opens.end(), m);
  }

  bool is_clopen(Mask m) const { return is_open(m) && is_open(full() & ~m); }

  std::size_t point_index(const std::string& name) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == name) return i;
    throw Error("unknown point name '" + name + "'");
  }

  Mask point_set(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& name : names) m |= Mask{1} << point_index(name);
    return m;
  }

  std::string set_name(Mask m) const { return set_to_string(points, m); }

  bool is_discrete() const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (!is_open(Mask{1} << i)) return false;
    return true;
  }

  std::vector<Mask> clopen_masks() const {
    std::vector<Mask> out;
    for (Mask m : opens)
      if (is_open(full() & ~m)) out.push_back(m);
    return out;
  }

  // Blocks of the relation "no clopen set separates", ordered by lowest
  // member. For finite spaces these are the connected components.
  std::vector<Mask> component_masks() const {
    std::vector<Mask> clopen = clopen_masks();
    std::vector<Mask> blocks;
    Mask seen = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (mask_contains(seen, i)) continue;
      Mask block = full();
      for (Mask u : clopen)
        if (mask_contains(u, i)) block &= u;
      blocks.push_back(block);
      seen |= block;
    }
    return blocks;
  }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  void validate() {
    if (points.size() > kMaxPoints)
      throw Error("space has " + std::to_string(points.size()) +
                  " points; at most " + std::to_string(kMaxPoints) +
                  " are supported");
    std::set<std::string> seen;
    for (const auto& name : points) {
      if (name.empty()) throw Error("point names must be nonempty");
      if (!seen.insert(name).second)
        throw Error("duplicate point name '" + name + "'");
    }
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (Mask m : opens)
      if (!mask_subset(m, full()))
        throw Error("open set refers to points outside the space");
    if (!is_open(0)) throw Error("open family must contain the empty set");
    if (!is_open(full()))
      throw Error("open family must contain the whole set " + set_name(full()));
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        Mask u = opens[i] | opens[j];
        if (!is_open(u))
          throw Error("open family not closed under union: " +
                      set_name(opens[i]) + " union " + set_name(opens[j]) +
                      " = " + set_name(u) + " is missing");
        Mask v = opens[i] & opens[j];
        if (!is_open(v))
          throw Error("open family not closed under intersection: " +
                      set_name(opens[i]) + " intersect " + set_name(opens[j]) +
                      " = " + set_name(v) + " is missing");
      }
    }
  }
};

// Smallest topology containing the given sets.
inline FiniteSpace generate_topology(std::vector<std::string> names,
                                     const std::vector<Mask>& basis) {
  std::set<Mask> opens{0, full_mask(names.size())};
  opens.insert(basis.begin(), basis.end());
  bool grew = true;
  while (grew && opens.size() < (std::size_t{1} << names.size())) {
    grew = false;
    std::vector<Mask> current(opens.begin(), opens.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (opens.insert(current[i] | current[j]).second) grew = true;
        if (opens.insert(current[i] & current[j]).second) grew = true;
      }
    }
  }
  return FiniteSpace(std::move(names),
                     std::vector<Mask>(opens.begin(), opens.end()));
}

// A point assignment between finite spaces. Continuity is a separate check,
// so discontinuous assignments can be represented and rejected by callers.
struct ContinuousMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> assignment;  // source point index -> target index

  ContinuousMap(FiniteSpace src, FiniteSpace tgt,
                std::vector<std::size_t> assign)
      : source(std::move(src)), target(std::move(tgt)),
        assignment(std::move(assign)) {
    if (assignment.size() != source.size())
      throw Error("map must assign every point of the source");
    for (std::size_t t : assignment)
      if (t >= target.size())
        throw Error("map assigns a point outside the target");
  }

  static ContinuousMap identity(const FiniteSpace& x) {
    std::vector<std::size_t> assign(x.size());
    for (std::size_t i = 0; i < assign.size(); ++i) assign[i] = i;
    return ContinuousMap(x, x, std::move(assign));
  }

  static ContinuousMap from_names(
      const FiniteSpace& src, const FiniteSpace& tgt,
      const std::map<std::string, std::string>& name_map) {
    std::vector<std::size_t> assign(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto it = name_map.find(src.points[i]);
      if (it == name_map.end())
        throw Error("map does not assign point '" + src.points[i] + "'");
      assign[i] = tgt.point_index(it->second);
    }
    return ContinuousMap(src, tgt, std::move(assign));
  }

  std::size_t apply(std::size_t i) const { return assignment.at(i); }

  Mask preimage(Mask target_set) const {
    Mask m = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (mask_contains(target_set, assignment[i])) m |= Mask{1} << i;
    return m;
  }

  Mask image(Mask source_set) const {
    Mask m = 0;
    for (std::size_t i : mask_indices(source_set))
      m |= Mask{1} << assignment[i];
    return m;
  }

  friend bool operator==(const ContinuousMap&, const ContinuousMap&) = default;
};

inline bool check_continuous(const ContinuousMap& f) {
  for (Mask o : f.target.opens)
    if (!f.source.is_open(f.preimage(o))) return false;
  return true;
}

// A partition of {0, ..., ground_size-1}; blocks ordered by lowest member.
struct Partition {
  std::size_t ground_size = 0;
  std::vector<Mask> blocks;

  Partition(std::size_t n, std::vector<Mask> bs)
      : ground_size(n), blocks(std::move(bs)) {
    Mask covered = 0;
    for (Mask b : blocks) {
      if (b == 0) throw Error("partition blocks must be nonempty");
      if (!mask_subset(b, full_mask(n)))
        throw Error("partition block outside the ground set");
      if ((covered & b) != 0) throw Error("partition blocks overlap");
      covered |= b;
    }
    if (covered != full_mask(n))
      throw Error("partition blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
      return std::countr_zero(a) < std::countr_zero(b);
    });
  }

  std::size_t block_of(std::size_t i) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask_contains(blocks[b], i)) return b;
    throw Error("index outside the ground set");
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline Partition components(const FiniteSpace& x) {
  return Partition(x.size(), x.component_masks());
}

struct QuotientResult {
  Partition partition;
  FiniteSpace space;
  ContinuousMap projection;
};

// Quotient by a partition: block names join member names with "+", and the
// opens are exactly the block sets with open preimage.
inline QuotientResult quotient(const FiniteSpace& x, const Partition& p) {
  if (p.ground_size != x.size())
    throw Error("partition does not match the space");
  std::vector<std::string> names;
  names.reserve(p.blocks.size());
  for (Mask b : p.blocks) names.push_back(join_names(x.points, b, "+"));
  std::vector<Mask> opens;
  for (Mask s = 0;; ++s) {
    Mask pre = 0;
    for (std::size_t b : mask_indices(s)) pre |= p.blocks[b];
    if (x.is_open(pre)) opens.push_back(s);
    if (s == full_mask(p.blocks.size())) break;
  }
  FiniteSpace q(names, opens);
  std::vector<std::size_t> assign(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) assign[i] = p.block_of(i);
  ContinuousMap proj(x, q, std::move(assign));
  return QuotientResult{p, std::move(q), std::move(proj)};
}

}  // namespace clopen
