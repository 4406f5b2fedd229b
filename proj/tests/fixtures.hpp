#ifndef LIEQUAD_TESTS_FIXTURES_HPP
#define LIEQUAD_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "liequad/liequad.hpp"

namespace fixture {

inline liequad::UnitForm load(const std::string& name) {
  return liequad::load_qform(std::string(LIEQUAD_DATA_DIR) + "/forms/" + name + ".qform");
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"a2", "a3", "a4", "d4", "diamond", "ex74"};
  return all;
}

inline const std::vector<std::string>& definite_names() {
  static const std::vector<std::string> all = {"a2", "a3", "a4", "d4", "diamond"};
  return all;
}

inline liequad::Multibracket mb(std::initializer_list<int> one_based) {
  std::vector<liequad::Letter> v;
  for (int i : one_based) v.push_back(static_cast<liequad::Letter>(i - 1));
  return liequad::Multibracket(v);
}

inline liequad::IntVector vec(std::initializer_list<std::int64_t> x) { return liequad::IntVector(std::vector(x)); }

}  // namespace fixture

#endif  // LIEQUAD_TESTS_FIXTURES_HPP
