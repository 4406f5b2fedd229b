#ifndef LIEQUAD_ROOTS_HPP
#define LIEQUAD_ROOTS_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "liequad/form.hpp"
#include "liequad/multibracket.hpp"

namespace liequad {

inline constexpr std::size_t kDefaultRootCap = 10000;
inline constexpr std::size_t kDefaultSequenceCap = 100000;

/// Positive roots of a weakly positive form, in lexicographic order.
struct RootSet {
  UnitForm form;
  std::set<IntVector> roots;
  std::int64_t max_height = 0;

  bool contains(const IntVector& x) const { return roots.contains(x); }
  std::size_t size() const { return roots.size(); }
};

/// Closure of {e_1..e_n} under x -> x + e_i whenever <e_i,x>_q = -1.
///
/// For weakly positive q every positive root descends to a unit vector through
/// positive roots, so the closure is exactly the set of positive roots. Throws
/// RootBudgetExceeded once more than `cap` roots have been produced.
inline RootSet positive_roots(const UnitForm& q, std::size_t cap = kDefaultRootCap) {
  const std::size_t n = q.size();
  RootSet result{q, {}, 0};
  std::vector<IntVector> frontier;
  for (std::size_t i = 0; i < n; ++i) frontier.push_back(IntVector::unit(n, i));
  for (const auto& x : frontier) result.roots.insert(x);
  if (result.roots.size() > cap) throw RootBudgetExceeded(cap);

  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        if (pairing_unit(q, i, x) != -1) continue;
        IntVector y = x + IntVector::unit(n, i);
        if (result.roots.insert(y).second) {
          if (result.roots.size() > cap) throw RootBudgetExceeded(cap);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& x : result.roots) result.max_height = std::max(result.max_height, x.height());
  return result;
}

/// Descending chain of positive roots from a root down to a unit vector, each
/// step removing one e_j.
struct WeylChain {
  std::vector<IntVector> steps;
};

/// Greedy descent: at each step remove the smallest index i with <e_i,x>_q = 1
/// and x - e_i still positive (then x - e_i is a root automatically).
inline WeylChain weyl_chain(const UnitForm& q, const IntVector& z) {
  require_size(q, z);
  if (!z.is_positive() || !is_root(q, z)) throw NotARoot("vector is not a positive root");
  WeylChain chain{{z}};
  IntVector x = z;
  while (x.height() > 1) {
    bool moved = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (x[i] == 0 || pairing_unit(q, i, x) != 1) continue;
      x[i] -= 1;
      chain.steps.push_back(x);
      moved = true;
      break;
    }
    if (!moved) {
      std::ostringstream os;
      os << "positive root " << x << " has no descent; the form is not weakly positive";
      throw NoDescent(os.str());
    }
  }
  return chain;
}

/// All index sequences (i1..im) whose multibracket is a root: every head
/// pairs to -1 with the degree of the suffix after it. Grown from the right,
/// so the result is suffix-closed. Sorted by (length, lex).
inline std::vector<Multibracket> root_sequences(const UnitForm& q,
                                                std::size_t cap = kDefaultSequenceCap) {
  const std::size_t n = q.size();
  std::vector<Multibracket> all;
  std::vector<std::pair<Multibracket, IntVector>> frontier;
  for (std::size_t i = 0; i < n; ++i)
    frontier.emplace_back(Multibracket{static_cast<Letter>(i)}, IntVector::unit(n, i));

  while (!frontier.empty()) {
    std::vector<std::pair<Multibracket, IntVector>> next;
    for (auto& [w, degree] : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        if (pairing_unit(q, i, degree) == -1)
          next.emplace_back(w.prepend(static_cast<Letter>(i)), degree + IntVector::unit(n, i));
      }
      all.push_back(std::move(w));
      if (all.size() > cap) throw SequenceBudgetExceeded(cap);
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace liequad

#endif  // LIEQUAD_ROOTS_HPP
