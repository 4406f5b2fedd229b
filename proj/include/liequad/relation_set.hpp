#ifndef LIEQUAD_RELATION_SET_HPP
#define LIEQUAD_RELATION_SET_HPP

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "liequad/multibracket.hpp"

namespace liequad {

enum class RelationTag { r, r0, r1, r2, p, j, custom };

inline std::string_view to_string(RelationTag t) {
  switch (t) {
    case RelationTag::r: return "r";
    case RelationTag::r0: return "r0";
    case RelationTag::r1: return "r1";
    case RelationTag::r2: return "r2";
    case RelationTag::p: return "p";
    case RelationTag::j: return "j";
    case RelationTag::custom: return "custom";
  }
  return "custom";
}

inline std::optional<RelationTag> parse_relation_tag(std::string_view s) {
  for (auto t : {RelationTag::r, RelationTag::r0, RelationTag::r1, RelationTag::r2, RelationTag::p,
                 RelationTag::j, RelationTag::custom})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

/// Tagged set of multibrackets, kept sorted by (length, lex) without duplicates.
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(RelationTag tag, std::vector<Multibracket> elements)
      : tag_(tag), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  RelationTag tag() const { return tag_; }
  const std::vector<Multibracket>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const Multibracket& v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
  }

  /// Same set without `v`, tagged custom.
  RelationSet without(const Multibracket& v) const {
    std::vector<Multibracket> rest;
    for (const auto& e : elements_)
      if (!(e == v)) rest.push_back(e);
    return RelationSet(RelationTag::custom, std::move(rest));
  }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  RelationTag tag_ = RelationTag::custom;
  std::vector<Multibracket> elements_;
};

/// Deduplicated union.
inline RelationSet unite(RelationTag tag, const RelationSet& a, const RelationSet& b) {
  std::vector<Multibracket> all = a.elements();
  all.insert(all.end(), b.elements().begin(), b.elements().end());
  return RelationSet(tag, std::move(all));
}

}  // namespace liequad

#endif  // LIEQUAD_RELATION_SET_HPP
