#ifndef LIEQUAD_FORM_HPP
#define LIEQUAD_FORM_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "liequad/error.hpp"
#include "liequad/integer.hpp"

namespace liequad {

/// Element of Z^n. Used both as a candidate root and as a multidegree.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n, 0) {}
  IntVector(std::initializer_list<std::int64_t> init) : entries_(init) {}
  explicit IntVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  static IntVector unit(std::size_t n, std::size_t i) {
    IntVector v(n);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  /// Sum of the entries.
  std::int64_t height() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto x) { return x == 0; });
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto x) { return x >= 0; });
  }

  /// All entries >= 0 and at least one > 0.
  bool is_positive() const { return is_nonnegative() && !is_zero(); }

  IntVector& operator+=(const IntVector& o) {
    if (o.size() != size()) throw DimensionMismatch(size(), o.size());
    for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked_add(entries_[i], o[i]);
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    if (o.size() != size()) throw DimensionMismatch(size(), o.size());
    for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked_add(entries_[i], -o[i]);
    return *this;
  }
  IntVector& operator*=(std::int64_t k) {
    for (auto& x : entries_) x = checked_mul(x, k);
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(std::int64_t k, IntVector a) { return a *= k; }

  /// Lexicographic on entries.
  friend auto operator<=>(const IntVector&, const IntVector&) = default;
  friend bool operator==(const IntVector&, const IntVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  std::vector<std::int64_t> entries_;
};

/// Off-diagonal coefficient a_ij of a unit form, indices 0-based with i < j.
struct Coefficient {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t value = 0;
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// Unit integral quadratic form q(x) = sum x(i)^2 + sum_{i<j} a_ij x(i) x(j).
///
/// The diagonal is implicitly 1. Coefficients are stored symmetrically and may be
/// arbitrary integers; `strict_unit()` tells whether all of them lie in {-1,0,1}.
/// Immutable after construction.
class UnitForm {
 public:
  static constexpr std::size_t kMaxVariables = 127;

  UnitForm() = default;

  /// Throws IndexOutOfRange for bad indices and Error for diagonal or repeated pairs.
  UnitForm(std::size_t n, std::span<const Coefficient> coefficients) : n_(n), a_(n * n, 0) {
    if (n == 0 || n > kMaxVariables) throw Error("number of variables must be in 1..127");
    std::vector<bool> seen(n * n, false);
    for (const auto& c : coefficients) {
      if (c.i >= n) throw IndexOutOfRange(c.i, n);
      if (c.j >= n) throw IndexOutOfRange(c.j, n);
      if (c.i == c.j) throw Error("diagonal coefficients of a unit form are fixed to 1");
      if (seen[c.i * n + c.j]) throw Error("coefficient for pair given twice");
      seen[c.i * n + c.j] = seen[c.j * n + c.i] = true;
      a_[c.i * n + c.j] = a_[c.j * n + c.i] = c.value;
    }
  }

  UnitForm(std::size_t n, std::initializer_list<Coefficient> coefficients)
      : UnitForm(n, std::span<const Coefficient>(coefficients.begin(), coefficients.size())) {}

  std::size_t size() const { return n_; }

  /// a_ij for i != j, 0 on the diagonal.
  std::int64_t coefficient(std::size_t i, std::size_t j) const {
    if (i >= n_) throw IndexOutOfRange(i, n_);
    if (j >= n_) throw IndexOutOfRange(j, n_);
    return a_[i * n_ + j];
  }

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && coefficient(i, j) != 0; }

  bool strict_unit() const {
    return std::all_of(a_.begin(), a_.end(), [](auto v) { return v >= -1 && v <= 1; });
  }

  /// Nonzero coefficients with i < j, sorted lexicographically.
  std::vector<Coefficient> coefficients() const {
    std::vector<Coefficient> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (a_[i * n_ + j] != 0) out.push_back({i, j, a_[i * n_ + j]});
    return out;
  }

  friend bool operator==(const UnitForm&, const UnitForm&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

inline void require_size(const UnitForm& q, const IntVector& x) {
  if (x.size() != q.size()) throw DimensionMismatch(q.size(), x.size());
}

/// q(x), exact (throws ArithmeticOverflow rather than wrapping).
inline std::int64_t evaluate(const UnitForm& q, const IntVector& x) {
  require_size(q, x);
  const std::size_t n = q.size();
  std::int64_t value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    value = checked_add(value, checked_mul(x[i], x[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto a = q.coefficient(i, j); a != 0)
        value = checked_add(value, checked_mul(a, checked_mul(x[i], x[j])));
    }
  }
  return value;
}

/// <x,y>_q = q(x+y) - q(x) - q(y).
inline std::int64_t pairing(const UnitForm& q, const IntVector& x, const IntVector& y) {
  require_size(q, x);
  require_size(q, y);
  return checked_add(evaluate(q, x + y), -checked_add(evaluate(q, x), evaluate(q, y)));
}

/// <e_i,x>_q = 2 x(i) + sum_{j != i} a_ij x(j). `i` is 0-based.
inline std::int64_t pairing_unit(const UnitForm& q, std::size_t i, const IntVector& x) {
  require_size(q, x);
  if (i >= q.size()) throw IndexOutOfRange(i, q.size());
  std::int64_t value = checked_mul(2, x[i]);
  for (std::size_t j = 0; j < q.size(); ++j)
    if (j != i) value = checked_add(value, checked_mul(q.coefficient(i, j), x[j]));
  return value;
}

inline bool is_root(const UnitForm& q, const IntVector& x) { return evaluate(q, x) == 1; }

/// Symmetric matrix (<e_i,e_j>_q): 2 on the diagonal, a_ij elsewhere.
inline std::vector<std::vector<Integer>> cartan_matrix(const UnitForm& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = i == j ? Integer(2) : to_integer(q.coefficient(i, j));
  return c;
}

/// Leading principal minors of the Cartan matrix, by Bareiss elimination
/// without pivoting. Stops after the first non-positive minor.
inline std::vector<Integer> leading_minors(const UnitForm& q) {
  auto m = cartan_matrix(q);
  const std::size_t n = q.size();
  std::vector<Integer> minors;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (sgn(m[k][k]) <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    previous = m[k][k];
  }
  return minors;
}

/// Sylvester's criterion on the Cartan matrix, exact.
inline bool is_positive_definite(const UnitForm& q) {
  auto minors = leading_minors(q);
  return minors.size() == q.size() &&
         std::all_of(minors.begin(), minors.end(), [](const Integer& m) { return sgn(m) > 0; });
}

/// Solid edges carry -a_ij when a_ij < 0, broken edges a_ij when a_ij > 0.
/// Keys are 0-based pairs (i, j) with i < j; values are multiplicities.
struct Bigraph {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> solid_edges;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> broken_edges;
  friend bool operator==(const Bigraph&, const Bigraph&) = default;
};

inline Bigraph bigraph(const UnitForm& q) {
  Bigraph b{q.size(), {}, {}};
  for (const auto& c : q.coefficients()) {
    if (c.value < 0)
      b.solid_edges[{c.i, c.j}] = -c.value;
    else
      b.broken_edges[{c.i, c.j}] = c.value;
  }
  return b;
}

inline UnitForm from_bigraph(const Bigraph& b) {
  std::vector<Coefficient> coeffs;
  for (const auto& [edge, mult] : b.solid_edges) {
    if (b.broken_edges.contains(edge)) throw Error("pair carries both solid and broken edges");
    coeffs.push_back({edge.first, edge.second, -mult});
  }
  for (const auto& [edge, mult] : b.broken_edges) coeffs.push_back({edge.first, edge.second, mult});
  return UnitForm(b.n, coeffs);
}

/// Connectivity of the underlying graph of B(q).
inline bool is_connected(const UnitForm& q) {
  const std::size_t n = q.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (!seen[w] && q.adjacent(v, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace liequad

#endif  // LIEQUAD_FORM_HPP
