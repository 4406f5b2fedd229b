#ifndef LIEQUAD_RELATIONS_HPP
#define LIEQUAD_RELATIONS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "liequad/form.hpp"
#include "liequad/multibracket.hpp"
#include "liequad/relation_set.hpp"
#include "liequad/roots.hpp"

namespace liequad {

/// Non-root multibrackets whose tail is a root: i.w for every root sequence w
/// and every head i with <e_i, e_w>_q != -1. Needs a weakly positive form.
inline RelationSet gen_r(const UnitForm& q, std::size_t cap = kDefaultSequenceCap) {
  const std::size_t n = q.size();
  std::vector<Multibracket> out;
  for (const auto& w : root_sequences(q, cap)) {
    const IntVector degree = w.degree(n);
    for (std::size_t i = 0; i < n; ++i)
      if (pairing_unit(q, i, degree) != -1) out.push_back(w.prepend(static_cast<Letter>(i)));
  }
  return RelationSet(RelationTag::r, std::move(out));
}

/// Elements of r whose head pairs to exactly 0 with the tail degree.
inline RelationSet gen_r0(const UnitForm& q, std::size_t cap = kDefaultSequenceCap) {
  const std::size_t n = q.size();
  std::vector<Multibracket> out;
  for (const auto& w : root_sequences(q, cap)) {
    const IntVector degree = w.degree(n);
    for (std::size_t i = 0; i < n; ++i)
      if (pairing_unit(q, i, degree) == 0) out.push_back(w.prepend(static_cast<Letter>(i)));
  }
  return RelationSet(RelationTag::r0, std::move(out));
}

/// Commutation relations [v_i,v_j] for non-adjacent-by-(-1) pairs and the two
/// Serre-type relations [v_i,[v_i,v_j]], [v_j,[v_i,v_j]] for pairs with
/// <e_i,e_j>_q = -1. Uses pairing values, so it also runs on non-strict forms.
inline RelationSet gen_r1(const UnitForm& q) {
  std::vector<Multibracket> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      const auto a = static_cast<Letter>(i);
      const auto b = static_cast<Letter>(j);
      if (q.coefficient(i, j) != -1) {
        out.push_back({a, b});
      } else {
        out.push_back({a, a, b});
        out.push_back({b, a, b});
      }
    }
  return RelationSet(RelationTag::r1, std::move(out));
}

inline RelationSet gen_p(const UnitForm& q, std::size_t cap = kDefaultSequenceCap) {
  return unite(RelationTag::p, gen_r1(q), gen_r0(q, cap));
}

/// Induced cycle of B(q) on at least three vertices.
struct ChordlessCycle {
  std::vector<Letter> vertices;
  /// Exactly one cyclically consecutive pair has pairing +1 and every other
  /// one -1. Positive cycles are stored starting at the smaller end of that
  /// pair and walking away from it, so the +1 pair closes the sequence.
  bool positive = false;

  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

/// Canonical orientation of a cycle given by any rotation or reflection.
///
/// Positive cycles start at the smaller endpoint of their broken edge and leave
/// along the solid edge. Other cycles use the lexicographically smallest of
/// their 2m rotations and reflections.
inline ChordlessCycle canonical_cycle(const UnitForm& q, std::vector<Letter> cycle) {
  const std::size_t m = cycle.size();
  if (m < 3) throw Error("a chordless cycle needs at least three vertices");
  std::size_t broken = m;
  std::size_t plus_pairs = 0;
  bool others_minus_one = true;
  for (std::size_t k = 0; k < m; ++k) {
    const auto a = q.coefficient(cycle[k], cycle[(k + 1) % m]);
    if (a == 1) {
      ++plus_pairs;
      broken = k;
    } else if (a != -1) {
      others_minus_one = false;
    }
  }
  const bool positive = plus_pairs == 1 && others_minus_one;

  std::vector<std::vector<Letter>> candidates;
  for (int direction : {1, -1})
    for (std::size_t start = 0; start < m; ++start) {
      std::vector<Letter> c;
      for (std::size_t k = 0; k < m; ++k)
        c.push_back(cycle[direction > 0 ? (start + k) % m : (start + m - k) % m]);
      candidates.push_back(std::move(c));
    }

  if (positive) {
    const Letter u = cycle[broken];
    const Letter v = cycle[(broken + 1) % m];
    const Letter first = std::min(u, v);
    const Letter last = std::max(u, v);
    for (auto& c : candidates)
      if (c.front() == first && c.back() == last) return {std::move(c), true};
  }
  return {*std::min_element(candidates.begin(), candidates.end()), false};
}

/// Every chordless cycle of B(q), one per geometric cycle, in canonical
/// orientation, sorted by (length, vertices).
inline std::vector<ChordlessCycle> chordless_cycles(const UnitForm& q) {
  const std::size_t n = q.size();
  std::set<std::pair<std::size_t, std::vector<Letter>>> seen;
  std::vector<ChordlessCycle> out;
  std::vector<Letter> path;

  // Grows induced paths whose smallest vertex is path[0].
  auto extend = [&](auto&& self) -> void {
    const Letter start = path.front();
    const Letter last = path.back();
    for (std::size_t v = start + 1; v < n; ++v) {
      const auto lv = static_cast<Letter>(v);
      if (std::find(path.begin(), path.end(), lv) != path.end()) continue;
      if (!q.adjacent(last, v)) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k)
        if (q.adjacent(path[k], v)) chord = true;
      if (chord) continue;
      path.push_back(lv);
      if (path.size() >= 3 && q.adjacent(start, v)) {
        auto c = canonical_cycle(q, path);
        if (seen.emplace(c.vertices.size(), c.vertices).second) out.push_back(std::move(c));
      } else {
        self(self);
      }
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path = {static_cast<Letter>(s)};
    extend(extend);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size()
                                                  : a.vertices < b.vertices;
  });
  return out;
}

/// One multibracket per positive chordless cycle, in canonical orientation.
inline RelationSet gen_r2(const UnitForm& q) {
  std::vector<Multibracket> out;
  for (const auto& c : chordless_cycles(q))
    if (c.positive) out.emplace_back(c.vertices);
  return RelationSet(RelationTag::r2, std::move(out));
}

inline RelationSet gen_j(const UnitForm& q) { return unite(RelationTag::j, gen_r1(q), gen_r2(q)); }

/// Dispatch by tag; `custom` has no generator.
inline RelationSet generate_relations(const UnitForm& q, RelationTag tag,
                                      std::size_t cap = kDefaultSequenceCap) {
  switch (tag) {
    case RelationTag::r: return gen_r(q, cap);
    case RelationTag::r0: return gen_r0(q, cap);
    case RelationTag::r1: return gen_r1(q);
    case RelationTag::r2: return gen_r2(q);
    case RelationTag::p: return gen_p(q, cap);
    case RelationTag::j: return gen_j(q);
    case RelationTag::custom: break;
  }
  throw Error("custom relation sets are read from a file, not generated");
}

}  // namespace liequad

#endif  // LIEQUAD_RELATIONS_HPP
