#ifndef LIEQUAD_TENSOR_POLY_HPP
#define LIEQUAD_TENSOR_POLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "liequad/form.hpp"
#include "liequad/integer.hpp"
#include "liequad/multibracket.hpp"

namespace liequad {

/// Noncommutative monomial; one char per letter holding the 0-based index.
using Word = std::string;

inline Word make_word(std::initializer_list<Letter> letters) {
  Word w;
  for (auto l : letters) w.push_back(static_cast<char>(l));
  return w;
}

inline Letter letter_at(const Word& w, std::size_t k) { return static_cast<Letter>(w[k]); }

/// Homogeneous element of the tensor algebra with integer coefficients.
///
/// Lie elements are represented by their image under [a,b] -> ab - ba. All
/// data in this library is integral, so Z coefficients span the same Q-spaces.
class TensorPoly {
 public:
  using Terms = std::map<Word, Integer>;

  TensorPoly() = default;
  explicit TensorPoly(IntVector degree) : degree_(std::move(degree)) {}

  static TensorPoly generator(std::size_t n, Letter i) {
    TensorPoly p(IntVector::unit(n, i));
    p.terms_.emplace(Word(1, static_cast<char>(i)), 1);
    return p;
  }

  const IntVector& degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * w. The word must have content equal to degree().
  void add(const Word& w, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    if (is_zero() && degree_.size() == 0) degree_ = o.degree_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    if (is_zero() && degree_.size() == 0) degree_ = o.degree_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  TensorPoly operator-() const {
    TensorPoly p(degree_);
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.terms_ == b.terms_ && (a.is_zero() || a.degree_ == b.degree_);
  }

  friend std::ostream& operator<<(std::ostream& os, const TensorPoly& p) {
    if (p.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [w, c] : p.terms_) {
      if (sgn(c) < 0)
        os << (first ? "-" : " - ");
      else if (!first)
        os << " + ";
      if (abs(c) != 1) os << abs(c) << '*';
      for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "." : "") << int(letter_at(w, k)) + 1;
      first = false;
    }
    return os;
  }

 private:
  IntVector degree_;
  Terms terms_;
};

/// Commutator ab - ba in the tensor algebra.
inline TensorPoly bracket(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out(a.degree() + b.degree());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [w, cw] : b.terms()) {
      Integer c = cu * cw;
      out.add(u + w, c);
      out.add(w + u, -c);
    }
  return out;
}

/// [v_i, p] = v_i p - p v_i.
inline TensorPoly bracket_generator(Letter i, const TensorPoly& p) {
  IntVector d = p.degree();
  d[i] += 1;
  TensorPoly out(std::move(d));
  const char letter = static_cast<char>(i);
  for (const auto& [w, c] : p.terms()) {
    out.add(letter + w, c);
    out.add(w + letter, -c);
  }
  return out;
}

/// Tensor-algebra image of the right-normed multibracket.
inline TensorPoly expand(const Multibracket& v, std::size_t n) {
  const auto& idx = v.indices();
  if (idx.empty()) throw Error("cannot expand an empty multibracket");
  for (auto i : idx)
    if (i >= n) throw IndexOutOfRange(i, n);
  TensorPoly p = TensorPoly::generator(n, idx.back());
  for (std::size_t k = idx.size() - 1; k-- > 0;) p = bracket_generator(idx[k], p);
  return p;
}

}  // namespace liequad

#endif  // LIEQUAD_TENSOR_POLY_HPP
