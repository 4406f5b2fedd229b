#ifndef LIEQUAD_MULTIBRACKET_HPP
#define LIEQUAD_MULTIBRACKET_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "liequad/form.hpp"

namespace liequad {

/// 0-based generator index.
using Letter = std::uint8_t;

/// Right-normed bracket [v_{i1},[v_{i2},[...,v_{im}]]], stored as its index
/// sequence (0-based). The same sequences double as root sequences.
class Multibracket {
 public:
  Multibracket() = default;
  explicit Multibracket(std::vector<Letter> indices) : indices_(std::move(indices)) {}
  Multibracket(std::initializer_list<Letter> indices) : indices_(indices) {}

  /// Builds from 1-based indices as they appear in files and on the command line.
  static Multibracket from_one_based(const std::vector<std::int64_t>& indices, std::size_t n) {
    std::vector<Letter> out;
    out.reserve(indices.size());
    for (auto i : indices) {
      if (i < 1 || static_cast<std::size_t>(i) > n)
        throw IndexOutOfRange(static_cast<std::size_t>(i - 1), n);
      out.push_back(static_cast<Letter>(i - 1));
    }
    if (out.empty()) throw Error("a multibracket needs at least one generator");
    return Multibracket(std::move(out));
  }

  std::vector<std::int64_t> one_based() const {
    std::vector<std::int64_t> out;
    for (auto i : indices_) out.push_back(std::int64_t{i} + 1);
    return out;
  }

  const std::vector<Letter>& indices() const { return indices_; }
  std::size_t length() const { return indices_.size(); }
  Letter head() const { return indices_.front(); }

  /// [v_{i2},...,v_{im}]; empty for length 1.
  Multibracket tail() const { return Multibracket({indices_.begin() + 1, indices_.end()}); }

  /// [v_i, this].
  Multibracket prepend(Letter i) const {
    std::vector<Letter> out;
    out.reserve(indices_.size() + 1);
    out.push_back(i);
    out.insert(out.end(), indices_.begin(), indices_.end());
    return Multibracket(std::move(out));
  }

  /// Multidegree e_v = sum of e_{ik}.
  IntVector degree(std::size_t n) const {
    IntVector e(n);
    for (auto i : indices_) {
      if (i >= n) throw IndexOutOfRange(i, n);
      e[i] += 1;
    }
    return e;
  }

  /// Canonical order: by length, then lexicographically.
  friend bool operator<(const Multibracket& a, const Multibracket& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.indices_ < b.indices_;
  }
  friend bool operator==(const Multibracket&, const Multibracket&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Multibracket& v) {
    os << '[';
    for (std::size_t k = 0; k < v.length(); ++k) os << (k ? "," : "") << int(v.indices_[k]) + 1;
    return os << ']';
  }

 private:
  std::vector<Letter> indices_;
};

inline std::string to_string(const Multibracket& v) {
  std::string s;
  for (std::size_t k = 0; k < v.length(); ++k) {
    if (k) s += ',';
    s += std::to_string(int(v.indices()[k]) + 1);
  }
  return s;
}

}  // namespace liequad

#endif  // LIEQUAD_MULTIBRACKET_HPP
