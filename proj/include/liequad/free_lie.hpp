#ifndef LIEQUAD_FREE_LIE_HPP
#define LIEQUAD_FREE_LIE_HPP

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "liequad/form.hpp"
#include "liequad/integer.hpp"
#include "liequad/relation_set.hpp"
#include "liequad/roots.hpp"
#include "liequad/row_space.hpp"
#include "liequad/tensor_poly.hpp"

namespace liequad {

namespace detail {

inline int mobius(std::int64_t d) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  return d > 1 ? -sign : sign;
}

inline Integer factorial(std::int64_t k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

/// Dimension of the degree-e component of the free Lie algebra on n
/// generators (multigraded Witt formula):
///   (1/|e|) sum_{d | gcd(e)} mu(d) (|e|/d)! / prod_i (e_i/d)!
inline Integer free_lie_dim(const IntVector& e) {
  if (!e.is_positive()) throw Error("free_lie_dim needs a nonzero nonnegative degree");
  std::int64_t g = 0;
  for (auto x : e.entries()) g = std::gcd(g, x);
  const std::int64_t total = e.height();
  Integer sum = 0;
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const int mu = detail::mobius(d);
    if (mu == 0) continue;
    Integer term = detail::factorial(total / d);
    for (auto x : e.entries()) mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), detail::factorial(x / d).get_mpz_t());
    sum += mu * term;
  }
  mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(total));
  return sum;
}

/// Every multidegree in N^n of total height h, lexicographically descending.
inline std::vector<IntVector> degrees_of_height(std::size_t n, std::int64_t h) {
  std::vector<IntVector> out;
  IntVector e(n);
  auto rec = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
    if (k + 1 == n) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
      e[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (h >= 0 && n > 0) rec(rec, 0, h);
  return out;
}

/// All words with letter content e, in lexicographic order.
inline std::vector<Word> words_of_degree(const IntVector& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i) w.append(static_cast<std::size_t>(e[i]), static_cast<char>(i));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Homogeneous components of the ideal (S) of the free Lie algebra and of the
/// quotient L(q)/(S), computed degree by degree and memoized.
///
/// (S)_e is spanned by the expansions of generators of degree e together with
/// [v_i, (S)_{e - e_i}] for every i; this is the whole ideal because the free
/// Lie algebra is generated in degree one. Each component is a canonical row
/// space over the words of degree e.
///
/// Not safe for concurrent use from several threads; `ensure_height` uses
/// worker threads internally.
class QuotientEngine {
 public:
  QuotientEngine(UnitForm form, RelationSet relations)
      : form_(std::move(form)), relations_(std::move(relations)) {
    const std::size_t n = form_.size();
    for (const auto& s : relations_.elements()) {
      TensorPoly p = expand(s, n);
      if (p.is_zero()) continue;
      IntVector d = s.degree(n);
      generator_degrees_.push_back(d);
      generators_[d].push_back(std::move(p));
    }
  }

  const UnitForm& form() const { return form_; }
  const RelationSet& relations() const { return relations_; }

  std::size_t ideal_dim(const IntVector& e) { return component(e).ideal.rank(); }
  std::size_t free_dim(const IntVector& e) { return component(e).free_dim; }
  std::size_t quotient_dim(const IntVector& e) {
    const auto& c = component(e);
    return c.free_dim - c.ideal.rank();
  }

  /// Reduced basis of (S)_e as tensor polynomials.
  std::vector<TensorPoly> ideal_basis(const IntVector& e) {
    const auto& c = component(e);
    std::vector<TensorPoly> out;
    for (const auto& row : c.ideal.rows()) {
      TensorPoly p(e);
      for (const auto& [col, v] : row) p.add(c.words[col], v);
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Whether a homogeneous element of the free Lie algebra lies in (S).
  bool contains(const TensorPoly& p) {
    if (p.is_zero()) return true;
    const auto& c = component(p.degree());
    if (c.ideal.rank() == 0) return false;
    return c.ideal.contains(to_row(c, p));
  }

  bool contains(const Multibracket& v) { return contains(expand(v, form_.size())); }

  /// Computes every component of total height <= h, one height at a time,
  /// building the components of each height on up to `threads` workers.
  void ensure_height(std::int64_t h, unsigned threads = 1) {
    for (std::int64_t level = 1; level <= h; ++level) {
      std::vector<IntVector> todo;
      for (auto& e : degrees_of_height(form_.size(), level))
        if (!cache_.contains(e)) todo.push_back(std::move(e));
      std::vector<std::unique_ptr<Component>> built(todo.size());
      parallel_for(todo.size(), threads, [&](std::size_t k) { built[k] = build(todo[k]); });
      for (std::size_t k = 0; k < todo.size(); ++k) cache_.emplace(std::move(todo[k]), std::move(built[k]));
    }
  }

 private:
  struct Component {
    std::size_t free_dim = 0;
    std::vector<Word> words;
    std::unordered_map<Word, std::uint32_t> column;
    RowSpace ideal;
  };

  const Component& component(const IntVector& e) {
    require_size(form_, e);
    if (!e.is_positive()) throw Error("ideal components need a nonzero nonnegative degree");
    if (auto it = cache_.find(e); it != cache_.end()) return *it->second;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      IntVector d = e;
      d[i] -= 1;
      if (!d.is_zero()) component(d);
    }
    return *cache_.emplace(e, build(e)).first->second;
  }

  bool below_some_generator(const IntVector& e) const {
    return std::any_of(generator_degrees_.begin(), generator_degrees_.end(), [&](const IntVector& g) {
      for (std::size_t i = 0; i < e.size(); ++i)
        if (g[i] > e[i]) return false;
      return true;
    });
  }

  static SparseRow to_row(const Component& c, const TensorPoly& p) {
    SparseRow row;
    row.reserve(p.terms().size());
    for (const auto& [w, v] : p.terms()) row.emplace_back(c.column.at(w), v);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  // Requires the components of every e - e_i to be cached; reads them only.
  std::unique_ptr<Component> build(const IntVector& e) const {
    auto c = std::make_unique<Component>();
    c->free_dim = free_lie_dim(e).get_ui();
    if (c->free_dim == 0 || !below_some_generator(e)) return c;

    c->words = words_of_degree(e);
    c->column.reserve(c->words.size());
    for (std::uint32_t k = 0; k < c->words.size(); ++k) c->column.emplace(c->words[k], k);
    c->ideal = RowSpace(c->words.size());

    if (auto it = generators_.find(e); it != generators_.end())
      for (const auto& p : it->second) {
        c->ideal.insert(to_row(*c, p));
        if (c->ideal.rank() == c->free_dim) return c;
      }

    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      IntVector d = e;
      d[i] -= 1;
      if (d.is_zero()) continue;
      const Component& lower = *cache_.at(d);
      const char letter = static_cast<char>(i);
      for (const auto& row : lower.ideal.rows()) {
        std::map<std::uint32_t, Integer> acc;
        for (const auto& [col, v] : row) {
          const Word& w = lower.words[col];
          acc[c->column.at(letter + w)] += v;
          acc[c->column.at(w + letter)] -= v;
        }
        SparseRow out;
        for (auto& [col, v] : acc)
          if (sgn(v) != 0) out.emplace_back(col, std::move(v));
        c->ideal.insert(std::move(out));
        if (c->ideal.rank() == c->free_dim) return c;
      }
    }
    return c;
  }

  template <class F>
  static void parallel_for(std::size_t count, unsigned threads, F&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
      for (std::size_t k = 0; k < count; ++k) body(k);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) body(k);
      });
  }

  UnitForm form_;
  RelationSet relations_;
  std::vector<IntVector> generator_degrees_;
  std::map<IntVector, std::vector<TensorPoly>> generators_;
  std::map<IntVector, std::unique_ptr<Component>> cache_;
};

/// Graded dimensions of L(q)/(S) for every degree of height <= H+1, where H is
/// the largest height of a positive root.
struct GradedDims {
  UnitForm form;
  RelationSet generators;
  /// Degrees with nonzero free Lie component, mapped to the quotient dimension.
  std::map<IntVector, std::size_t> dims;
  std::int64_t max_root_height = 0;
  /// H+1 when every component of height H+1 vanishes. The quotient is
  /// generated in degree one, so all higher components vanish as well.
  std::optional<std::int64_t> nilpotency_certified_at;

  std::size_t dim(const IntVector& e) const {
    auto it = dims.find(e);
    return it == dims.end() ? 0 : it->second;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [e, d] : dims) t += d;
    return t;
  }
};

inline GradedDims lie_algebra(QuotientEngine& engine, std::int64_t max_root_height, unsigned threads = 1) {
  const std::int64_t top = max_root_height + 1;
  engine.ensure_height(top, threads);
  GradedDims out{engine.form(), engine.relations(), {}, max_root_height, std::nullopt};
  bool top_vanishes = true;
  for (std::int64_t h = 1; h <= top; ++h)
    for (const auto& e : degrees_of_height(engine.form().size(), h)) {
      if (engine.free_dim(e) == 0) continue;
      const auto d = engine.quotient_dim(e);
      out.dims.emplace(e, d);
      if (h == top && d != 0) top_vanishes = false;
    }
  if (top_vanishes) out.nilpotency_certified_at = top;
  return out;
}

inline GradedDims lie_algebra(const RootSet& roots, const RelationSet& relations, unsigned threads = 1) {
  QuotientEngine engine(roots.form, relations);
  return lie_algebra(engine, roots.max_height, threads);
}

/// Needs a weakly positive form: the degree bound comes from its positive roots.
inline GradedDims lie_algebra(const UnitForm& q, const RelationSet& relations, unsigned threads = 1,
                              std::size_t root_cap = kDefaultRootCap) {
  return lie_algebra(positive_roots(q, root_cap), relations, threads);
}

inline std::vector<TensorPoly> ideal_component(const UnitForm& q, const RelationSet& relations,
                                               const IntVector& e) {
  QuotientEngine engine(q, relations);
  return engine.ideal_basis(e);
}

inline std::size_t quotient_dim(const UnitForm& q, const RelationSet& relations, const IntVector& e) {
  QuotientEngine engine(q, relations);
  return engine.quotient_dim(e);
}

inline bool ideal_contains(const UnitForm& q, const RelationSet& relations, const Multibracket& v) {
  QuotientEngine engine(q, relations);
  return engine.contains(v);
}

}  // namespace liequad

#endif  // LIEQUAD_FREE_LIE_HPP
