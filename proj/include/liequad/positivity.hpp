#ifndef LIEQUAD_POSITIVITY_HPP
#define LIEQUAD_POSITIVITY_HPP

#include <optional>
#include <string_view>

#include "liequad/form.hpp"
#include "liequad/roots.hpp"

namespace liequad {

inline constexpr std::int64_t kDefaultBoxBound = 12;

struct WeakPositivity {
  enum class Status { WeaklyPositive, NotWeaklyPositive, Inconclusive };
  Status status = Status::Inconclusive;
  /// Set iff NotWeaklyPositive: a positive vector x with q(x) <= 0.
  std::optional<IntVector> witness;
};

inline std::string_view to_string(WeakPositivity::Status s) {
  switch (s) {
    case WeakPositivity::Status::WeaklyPositive: return "weakly_positive";
    case WeakPositivity::Status::NotWeaklyPositive: return "not_weakly_positive";
    case WeakPositivity::Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace detail {

// Depth-first over {0..bound}^n in lexicographic order, carrying the partial
// value of q on the already assigned coordinates.
inline bool find_nonpositive(const UnitForm& q, std::int64_t bound, IntVector& x, std::size_t k,
                             std::int64_t partial) {
  const std::size_t n = q.size();
  if (k == n) return partial <= 0 && !x.is_zero();
  std::int64_t cross = 0;
  for (std::size_t j = 0; j < k; ++j) cross = checked_add(cross, checked_mul(q.coefficient(j, k), x[j]));
  for (std::int64_t v = 0; v <= bound; ++v) {
    x[k] = v;
    std::int64_t value = checked_add(partial, checked_mul(v, checked_add(v, cross)));
    if (find_nonpositive(q, bound, x, k + 1, value)) return true;
  }
  x[k] = 0;
  return false;
}

}  // namespace detail

/// Three-valued weak positivity test. A negative answer carries a certificate;
/// a positive answer is given for positive definite forms, or when the box
/// {0..bound}^n holds no counterexample and every positive root produced by
/// completion lies inside the box.
inline WeakPositivity is_weakly_positive(const UnitForm& q, std::int64_t bound = kDefaultBoxBound,
                                         std::size_t root_cap = kDefaultRootCap) {
  using Status = WeakPositivity::Status;
  if (is_positive_definite(q)) return {Status::WeaklyPositive, std::nullopt};
  IntVector x(q.size());
  if (detail::find_nonpositive(q, bound, x, 0, 0)) return {Status::NotWeaklyPositive, x};
  try {
    auto roots = positive_roots(q, root_cap);
    for (const auto& r : roots.roots)
      for (auto v : r.entries())
        if (v > bound) return {Status::Inconclusive, std::nullopt};
  } catch (const RootBudgetExceeded&) {
    return {Status::Inconclusive, std::nullopt};
  }
  return {Status::WeaklyPositive, std::nullopt};
}

}  // namespace liequad

#endif  // LIEQUAD_POSITIVITY_HPP
