#ifndef LIEQUAD_ROW_SPACE_HPP
#define LIEQUAD_ROW_SPACE_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "liequad/integer.hpp"

namespace liequad {

/// Sparse integer row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

namespace detail {

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// a * x - b * y, dropping cancelled entries.
inline SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      out.emplace_back(iy->first, -b * iy->second);
      ++iy;
    } else {
      Integer v = a * ix->second - b * iy->second;
      if (sgn(v) != 0) out.emplace_back(ix->first, std::move(v));
      ++ix;
      ++iy;
    }
  }
  return out;
}

inline const Integer* find_entry(const SparseRow& row, std::uint32_t column) {
  auto it = std::lower_bound(row.begin(), row.end(), column,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == column ? &it->second : nullptr;
}

}  // namespace detail

/// Row space over Q kept in fully reduced echelon form with primitive integer
/// rows and positive pivots. All elimination is fraction-free: a row is
/// replaced by p*row - c*pivot_row and then divided by its content.
///
/// The stored basis is canonical for the spanned subspace, so it does not
/// depend on insertion order.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(std::size_t columns) : pivot_row_(columns, kNone) {}

  std::size_t columns() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Adds `row` to the span. Returns true iff the rank grew.
  bool insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    detail::make_primitive(row);
    const auto pivot = row.front().first;
    const Integer& p = row.front().second;
    for (auto& other : rows_) {
      if (const Integer* c = detail::find_entry(other, pivot)) {
        other = detail::combine(p, other, *c, row);
        detail::make_primitive(other);
      }
    }
    // Keep rows ordered by pivot column.
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const SparseRow& r, std::uint32_t c) { return r.front().first < c; });
    auto index = static_cast<std::size_t>(pos - rows_.begin());
    rows_.insert(pos, std::move(row));
    for (auto& slot : pivot_row_)
      if (slot != kNone && slot >= index) ++slot;
    pivot_row_[pivot] = index;
    return true;
  }

  bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

  /// True iff every column is a pivot.
  bool full() const { return rank() == columns(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Eliminates every pivot column from `row`. Reduced rows have zeros in all
  // other pivot columns, so one pass in column order suffices.
  SparseRow reduce(SparseRow row) const {
    std::size_t k = 0;
    while (k < row.size()) {
      const auto column = row[k].first;
      const auto r = pivot_row_[column];
      if (r == kNone) {
        ++k;
        continue;
      }
      const SparseRow& pivot = rows_[r];
      Integer c = row[k].second;
      row = detail::combine(pivot.front().second, row, c, pivot);
      detail::make_primitive(row);
      // Entries before k were non-pivot columns and are untouched in position.
    }
    return row;
  }

  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace liequad

#endif  // LIEQUAD_ROW_SPACE_HPP
