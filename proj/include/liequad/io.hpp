#ifndef LIEQUAD_IO_HPP
#define LIEQUAD_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "liequad/form.hpp"
#include "liequad/free_lie.hpp"
#include "liequad/relation_set.hpp"
#include "liequad/roots.hpp"

namespace liequad {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// .qform text format
//
//   n 4
//   a 1 2 -1                 # coefficient syntax, 1-based, i < j
//   edge 1 4 broken [mult]   # or edge syntax; mixing both is an error
// ---------------------------------------------------------------------------

namespace detail {

inline std::int64_t parse_int(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + token + "'");
  return v;
}

}  // namespace detail

inline UnitForm parse_qform(std::istream& in) {
  std::optional<std::size_t> n;
  enum class Syntax { none, coefficient, edge } syntax = Syntax::none;
  struct Raw {
    std::int64_t i, j, value;
    std::size_t line;
  };
  std::vector<Raw> raws;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ls(text);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    if (tok[0] == "n") {
      if (n) fail("variable count given twice");
      if (tok.size() != 2) fail("expected 'n <count>'");
      auto v = detail::parse_int(tok[1], line_no);
      if (v < 1 || v > static_cast<std::int64_t>(UnitForm::kMaxVariables)) fail("variable count out of range");
      n = static_cast<std::size_t>(v);
    } else if (tok[0] == "a") {
      if (!n) fail("'n' must come first");
      if (syntax == Syntax::edge) fail("coefficient and edge syntax cannot be mixed");
      syntax = Syntax::coefficient;
      if (tok.size() != 4) fail("expected 'a <i> <j> <value>'");
      raws.push_back({detail::parse_int(tok[1], line_no), detail::parse_int(tok[2], line_no),
                      detail::parse_int(tok[3], line_no), line_no});
    } else if (tok[0] == "edge") {
      if (!n) fail("'n' must come first");
      if (syntax == Syntax::coefficient) fail("coefficient and edge syntax cannot be mixed");
      syntax = Syntax::edge;
      if (tok.size() != 4 && tok.size() != 5) fail("expected 'edge <i> <j> solid|broken [multiplicity]'");
      std::int64_t mult = tok.size() == 5 ? detail::parse_int(tok[4], line_no) : 1;
      if (mult < 1) fail("edge multiplicity must be positive");
      if (tok[3] == "solid")
        mult = -mult;
      else if (tok[3] != "broken")
        fail("edge kind must be 'solid' or 'broken'");
      raws.push_back({detail::parse_int(tok[1], line_no), detail::parse_int(tok[2], line_no), mult, line_no});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (!n) throw ParseError("missing 'n <count>' line");
  std::vector<Coefficient> coeffs;
  for (const auto& r : raws) {
    auto where = "line " + std::to_string(r.line) + ": ";
    if (r.i < 1 || r.j < 1 || r.i > static_cast<std::int64_t>(*n) || r.j > static_cast<std::int64_t>(*n))
      throw ParseError(where + "index out of range");
    if (r.i == r.j) throw ParseError(where + "diagonal entries are fixed to 1");
    if (r.value == 0) continue;
    auto i = static_cast<std::size_t>(std::min(r.i, r.j) - 1);
    auto j = static_cast<std::size_t>(std::max(r.i, r.j) - 1);
    for (const auto& c : coeffs)
      if (c.i == i && c.j == j) throw ParseError(where + "pair given twice");
    coeffs.push_back({i, j, r.value});
  }
  return UnitForm(*n, coeffs);
}

inline UnitForm parse_qform(const std::string& text) {
  std::istringstream in(text);
  return parse_qform(in);
}

inline UnitForm load_qform(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open form file '" + path + "'");
  return parse_qform(in);
}

inline std::string to_qform(const UnitForm& q) {
  std::ostringstream os;
  os << "n " << q.size() << '\n';
  for (const auto& c : q.coefficients()) os << "a " << c.i + 1 << ' ' << c.j + 1 << ' ' << c.value << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Json to_json(const IntVector& x) {
  Json j = Json::array();
  for (auto v : x.entries()) j.push_back(v);
  return j;
}

inline Json to_json(const Multibracket& v) { return Json(v.one_based()); }

/// {"n": N, "coefficients": [[i, j, a_ij], ...]} with 1-based i < j, sorted.
inline Json to_json(const UnitForm& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coefficients())
    coeffs.push_back({static_cast<std::int64_t>(c.i + 1), static_cast<std::int64_t>(c.j + 1), c.value});
  return {{"n", q.size()}, {"coefficients", coeffs}};
}

inline UnitForm form_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1 || n > static_cast<std::int64_t>(UnitForm::kMaxVariables))
      throw ParseError("variable count out of range");
    std::vector<Coefficient> coeffs;
    for (const auto& c : j.at("coefficients")) {
      auto i = c.at(0).get<std::int64_t>();
      auto k = c.at(1).get<std::int64_t>();
      if (i < 1 || k < 1 || i > n || k > n || i == k) throw ParseError("bad coefficient index");
      coeffs.push_back({static_cast<std::size_t>(std::min(i, k) - 1), static_cast<std::size_t>(std::max(i, k) - 1),
                        c.at(2).get<std::int64_t>()});
    }
    return UnitForm(static_cast<std::size_t>(n), coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed form JSON: ") + e.what());
  }
}

/// {"roots": [...], "count": K, "max_height": H}, roots lexicographic.
inline Json to_json(const RootSet& roots) {
  Json list = Json::array();
  for (const auto& x : roots.roots) list.push_back(to_json(x));
  return {{"roots", list}, {"count", roots.size()}, {"max_height", roots.max_height}};
}

inline Json to_json(const WeylChain& chain) {
  Json list = Json::array();
  for (const auto& x : chain.steps) list.push_back(to_json(x));
  return list;
}

/// {"tag": "j", "elements": [[1,2,4], ...]}, canonical order.
inline Json to_json(const RelationSet& s) {
  Json list = Json::array();
  for (const auto& v : s.elements()) list.push_back(to_json(v));
  return {{"tag", std::string(to_string(s.tag()))}, {"elements", list}};
}

inline RelationSet relation_set_from_json(const Json& j, std::size_t n) {
  try {
    auto tag = parse_relation_tag(j.at("tag").get<std::string>());
    if (!tag) throw ParseError("unknown relation tag");
    std::vector<Multibracket> elements;
    for (const auto& e : j.at("elements")) elements.push_back(Multibracket::from_one_based(e.get<std::vector<std::int64_t>>(), n));
    return RelationSet(*tag, std::move(elements));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed relation set JSON: ") + e.what());
  } catch (const IndexOutOfRange& e) {
    throw ParseError(std::string("relation set does not fit the form: ") + e.what());
  }
}

/// {"dims": [{"degree": [..], "dim": d}, ...], "total": T, "nilpotent_at": h}
/// Only nonzero components are listed, by height then lexicographically.
/// `nilpotent_at` is null when vanishing was not certified.
inline Json to_json(const GradedDims& g) {
  std::vector<std::pair<IntVector, std::size_t>> nonzero;
  for (const auto& [e, d] : g.dims)
    if (d != 0) nonzero.emplace_back(e, d);
  std::sort(nonzero.begin(), nonzero.end(), [](const auto& a, const auto& b) {
    auto ha = a.first.height(), hb = b.first.height();
    return ha != hb ? ha < hb : a.first < b.first;
  });
  Json dims = Json::array();
  for (const auto& [e, d] : nonzero) dims.push_back({{"degree", to_json(e)}, {"dim", d}});
  Json out = {{"dims", dims}, {"total", g.total()}, {"max_root_height", g.max_root_height}};
  out["nilpotent_at"] = g.nilpotency_certified_at ? Json(*g.nilpotency_certified_at) : Json(nullptr);
  return out;
}

inline std::vector<std::int64_t> parse_index_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    auto b = token.find_first_not_of(" \t[]");
    auto e = token.find_last_not_of(" \t[]");
    if (b == std::string::npos) throw ParseError("empty index in '" + s + "'");
    out.push_back(detail::parse_int(token.substr(b, e - b + 1), 1));
  }
  if (out.empty()) throw ParseError("empty index list");
  return out;
}

}  // namespace liequad

#endif  // LIEQUAD_IO_HPP
