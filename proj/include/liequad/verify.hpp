#ifndef LIEQUAD_VERIFY_HPP
#define LIEQUAD_VERIFY_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liequad/form.hpp"
#include "liequad/free_lie.hpp"
#include "liequad/io.hpp"
#include "liequad/positivity.hpp"
#include "liequad/relations.hpp"
#include "liequad/roots.hpp"

namespace liequad {

enum class Verdict { pass, fail, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "fail";
}

/// Outcome of one structural check on one form. A fail carries a witness in
/// `details`; not_applicable names the violated hypothesis.
struct TheoremReport {
  std::string theorem;
  UnitForm form;
  Verdict verdict = Verdict::fail;
  Json details = Json::object();
};

inline Json to_json(const TheoremReport& r) {
  return {{"theorem", r.theorem}, {"form", to_json(r.form)}, {"verdict", std::string(to_string(r.verdict))},
          {"details", r.details}};
}

/// Lazily computed data about one form, shared between checks.
class FormContext {
 public:
  struct Options {
    std::int64_t bound = kDefaultBoxBound;
    std::size_t root_cap = kDefaultRootCap;
    std::size_t sequence_cap = kDefaultSequenceCap;
    unsigned threads = 1;
  };

  explicit FormContext(UnitForm form) : FormContext(std::move(form), Options{}) {}
  FormContext(UnitForm form, Options options) : form_(std::move(form)), options_(options) {}

  const UnitForm& form() const { return form_; }
  const Options& options() const { return options_; }

  bool positive_definite() {
    if (!definite_) definite_ = is_positive_definite(form_);
    return *definite_;
  }

  const WeakPositivity& weak_positivity() {
    if (!weak_) weak_ = is_weakly_positive(form_, options_.bound, options_.root_cap);
    return *weak_;
  }

  bool weakly_positive() { return weak_positivity().status == WeakPositivity::Status::WeaklyPositive; }

  const RootSet& roots() {
    if (!roots_) roots_ = positive_roots(form_, options_.root_cap);
    return *roots_;
  }

  const RelationSet& relations(RelationTag tag) {
    auto it = relations_.find(tag);
    if (it == relations_.end()) it = relations_.emplace(tag, generate_relations(form_, tag, options_.sequence_cap)).first;
    return it->second;
  }

  QuotientEngine& engine(RelationTag tag) {
    auto it = engines_.find(tag);
    if (it == engines_.end())
      it = engines_.emplace(tag, std::make_unique<QuotientEngine>(form_, relations(tag))).first;
    return *it->second;
  }

  const GradedDims& dims(RelationTag tag) {
    auto it = dims_.find(tag);
    if (it == dims_.end())
      it = dims_.emplace(tag, lie_algebra(engine(tag), roots().max_height, options_.threads)).first;
    return it->second;
  }

 private:
  UnitForm form_;
  Options options_;
  std::optional<bool> definite_;
  std::optional<WeakPositivity> weak_;
  std::optional<RootSet> roots_;
  std::map<RelationTag, RelationSet> relations_;
  std::map<RelationTag, std::unique_ptr<QuotientEngine>> engines_;
  std::map<RelationTag, GradedDims> dims_;
};

namespace detail {

inline TheoremReport not_applicable(std::string id, const UnitForm& q, std::string hypothesis) {
  return {std::move(id), q, Verdict::not_applicable, {{"hypothesis", std::move(hypothesis)}}};
}

inline std::optional<TheoremReport> require_weakly_positive(const std::string& id, FormContext& ctx) {
  if (ctx.weakly_positive()) return std::nullopt;
  auto r = not_applicable(id, ctx.form(), "weakly positive");
  r.details["weak_positivity"] = std::string(to_string(ctx.weak_positivity().status));
  if (ctx.weak_positivity().witness) r.details["witness"] = to_json(*ctx.weak_positivity().witness);
  return r;
}

}  // namespace detail

/// Components of L(q,r) vanish off the positive roots and are at most
/// one-dimensional on them, up to height H+1.
inline TheoremReport check_grading(FormContext& ctx) {
  const std::string id = "root_grading";
  if (auto na = detail::require_weakly_positive(id, ctx)) return *na;
  const auto& roots = ctx.roots();
  const auto& g = ctx.dims(RelationTag::r);
  Json violations = Json::array();
  std::size_t root_degrees = 0;
  for (const auto& [e, d] : g.dims) {
    const bool root = roots.contains(e);
    root_degrees += root;
    if ((!root && d != 0) || (root && d > 1))
      violations.push_back({{"degree", to_json(e)}, {"dim", d}, {"is_root", root}});
  }
  TheoremReport r{id, ctx.form(), violations.empty() ? Verdict::pass : Verdict::fail, {}};
  r.details = {{"degrees_checked", g.dims.size()}, {"root_degrees", root_degrees}, {"violations", violations}};
  return r;
}

/// L(q,r) vanishes in height H+1 and dim L(q,r) <= |R+|.
inline TheoremReport check_nilpotency(FormContext& ctx) {
  const std::string id = "nilpotency";
  if (auto na = detail::require_weakly_positive(id, ctx)) return *na;
  const auto& g = ctx.dims(RelationTag::r);
  const auto roots = ctx.roots().size();
  const bool ok = g.nilpotency_certified_at.has_value() && g.total() <= roots;
  TheoremReport r{id, ctx.form(), ok ? Verdict::pass : Verdict::fail, {}};
  r.details = {{"lie_dimension", g.total()},
               {"positive_roots", roots},
               {"checked_through_height", g.max_root_height + 1},
               {"nilpotent_at", g.nilpotency_certified_at ? Json(*g.nilpotency_certified_at) : Json(nullptr)}};
  if (!ok) {
    Json top = Json::array();
    for (const auto& [e, d] : g.dims)
      if (e.height() == g.max_root_height + 1 && d != 0) top.push_back({{"degree", to_json(e)}, {"dim", d}});
    r.details["nonzero_top_components"] = top;
  }
  return r;
}

/// dim L(q,r) = |R+|. Only meaningful for Tits forms of representation-directed
/// algebras, which cannot be checked here; the caller asserts it.
inline TheoremReport check_dim_identity(FormContext& ctx) {
  const std::string id = "dim_identity";
  if (auto na = detail::require_weakly_positive(id, ctx)) return *na;
  const auto& g = ctx.dims(RelationTag::r);
  const auto roots = ctx.roots().size();
  const bool ok = g.nilpotency_certified_at.has_value() && g.total() == roots;
  TheoremReport r{id, ctx.form(), ok ? Verdict::pass : Verdict::fail, {}};
  r.details = {{"lie_dimension", g.total()},
               {"positive_roots", roots},
               {"hypothesis_asserted_by_caller", "Tits form of a representation-directed algebra"}};
  return r;
}

/// (S1) = (S2): equal quotient dimensions in every degree of height <= H+1 and
/// every generator of each set lies in the other's ideal.
///
/// With `require_definite` the check is not_applicable on forms that are not
/// positive definite.
inline TheoremReport check_ideal_equality(FormContext& ctx, RelationTag a, RelationTag b,
                                          bool require_definite = false) {
  const std::string id = "ideal_equality_" + std::string(to_string(a)) + "_" + std::string(to_string(b));
  if (require_definite && !ctx.positive_definite()) return detail::not_applicable(id, ctx.form(), "positive definite");
  if (auto na = detail::require_weakly_positive(id, ctx)) return *na;

  const auto& da = ctx.dims(a);
  const auto& db = ctx.dims(b);
  Json mismatches = Json::array();
  for (const auto& [e, d] : da.dims)
    if (db.dim(e) != d) mismatches.push_back({{"degree", to_json(e)}, {"dim_" + std::string(to_string(a)), d},
                                              {"dim_" + std::string(to_string(b)), db.dim(e)}});

  auto outside = [&](RelationTag from, RelationTag into) {
    Json list = Json::array();
    auto& engine = ctx.engine(into);
    for (const auto& s : ctx.relations(from).elements())
      if (!engine.contains(s)) list.push_back(to_json(s));
    return list;
  };
  Json a_outside = outside(a, b);
  Json b_outside = outside(b, a);

  const bool ok = mismatches.empty() && a_outside.empty() && b_outside.empty();
  TheoremReport r{id, ctx.form(), ok ? Verdict::pass : Verdict::fail, {}};
  r.details = {{"positive_definite", ctx.positive_definite()},
               {"checked_through_height", da.max_root_height + 1},
               {"dimension_mismatches", mismatches},
               {"generators_of_" + std::string(to_string(a)) + "_outside_" + std::string(to_string(b)), a_outside},
               {"generators_of_" + std::string(to_string(b)) + "_outside_" + std::string(to_string(a)), b_outside},
               {"size_" + std::string(to_string(a)), ctx.relations(a).size()},
               {"size_" + std::string(to_string(b)), ctx.relations(b).size()}};
  return r;
}

/// Removing any single element of S strictly increases the total dimension of
/// the quotient (through height H+1).
inline TheoremReport check_minimality(FormContext& ctx, const RelationSet& set) {
  const std::string id = "minimality_" + std::string(to_string(set.tag()));
  if (auto na = detail::require_weakly_positive(id, ctx)) return *na;
  const auto height = ctx.roots().max_height;
  QuotientEngine full_engine(ctx.form(), set);
  const auto full = lie_algebra(full_engine, height, ctx.options().threads).total();
  Json redundant = Json::array();
  Json growth = Json::array();
  for (const auto& s : set.elements()) {
    QuotientEngine engine(ctx.form(), set.without(s));
    const auto reduced = lie_algebra(engine, height, ctx.options().threads).total();
    growth.push_back({{"element", to_json(s)}, {"total_without", reduced}});
    if (reduced <= full) redundant.push_back(to_json(s));
  }
  TheoremReport r{id, ctx.form(), redundant.empty() ? Verdict::pass : Verdict::fail, {}};
  r.details = {{"total", full}, {"removals", growth}, {"redundant", redundant}};
  return r;
}

inline TheoremReport check_minimality(FormContext& ctx, RelationTag tag) {
  return check_minimality(ctx, ctx.relations(tag));
}

/// Hand-transcribed reference lists of r and j for one form, plus notes that
/// explain every known difference between the printed r list and generation
/// (see data/reference/diamond_relations.txt).
struct ReferenceLists {
  std::size_t root_count = 0;
  std::vector<Multibracket> j;
  std::vector<Multibracket> r;
  /// Generated elements the printed list leaves out, with the reason.
  std::map<Multibracket, std::string> omitted_r;
};

inline ReferenceLists load_reference(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open reference file '" + path + "'");
  ReferenceLists ref;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string note;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      note = line.substr(hash + 1);
      line.erase(hash);
      if (auto b = note.find_first_not_of(' '); b != std::string::npos) note = note.substr(b);
    }
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (kind == "roots") {
      if (!(ls >> ref.root_count)) throw ParseError(where + "expected 'roots <count>'");
      continue;
    }
    std::string a, b;
    ls >> a;
    if (kind == "omitted") {
      ls >> b;
      if (a != "r") throw ParseError(where + "notes are only kept for r");
      if (note.empty()) throw ParseError(where + "an omission needs an explanation after '#'");
      ref.omitted_r.emplace(Multibracket::from_one_based(parse_index_list(b), n), note);
    } else if (kind == "j") {
      ref.j.push_back(Multibracket::from_one_based(parse_index_list(a), n));
    } else if (kind == "r") {
      ref.r.push_back(Multibracket::from_one_based(parse_index_list(a), n));
    } else {
      throw ParseError(where + "unknown entry '" + kind + "'");
    }
  }
  return ref;
}

namespace detail {

// Itemized comparison; an element generated but not listed passes only when an
// omission note covers it.
inline Json compare_lists(const RelationSet& generated, const std::vector<Multibracket>& listed,
                          const std::map<Multibracket, std::string>& notes, bool& ok) {
  std::set<Multibracket> ref(listed.begin(), listed.end());
  std::set<Multibracket> gen(generated.elements().begin(), generated.elements().end());
  Json only_generated = Json::array();
  Json only_reference = Json::array();
  Json explained = Json::array();
  Json unexplained = Json::array();
  for (const auto& v : gen) {
    if (ref.contains(v)) continue;
    only_generated.push_back(to_json(v));
    if (auto it = notes.find(v); it != notes.end())
      explained.push_back({{"element", to_json(v)}, {"note", it->second}});
    else
      unexplained.push_back(to_json(v));
  }
  for (const auto& v : ref)
    if (!gen.contains(v)) {
      only_reference.push_back(to_json(v));
      unexplained.push_back(to_json(v));
    }
  ok = unexplained.empty();
  return {{"generated_count", gen.size()},
          {"reference_count", ref.size()},
          {"only_generated", only_generated},
          {"only_reference", only_reference},
          {"explained", explained},
          {"unexplained", unexplained},
          {"empty_diff", only_generated.empty() && only_reference.empty()}};
}

}  // namespace detail

/// Compares generated j and r with the reference lists of the diamond form.
inline TheoremReport check_diamond_reference(FormContext& ctx, const ReferenceLists& ref) {
  const std::string id = "diamond_reference";
  TheoremReport report{id, ctx.form(), Verdict::fail, {}};
  std::size_t roots = 0;
  try {
    roots = ctx.roots().size();
  } catch (const RootBudgetExceeded& e) {
    report.details = {{"reason", e.what()}};
    return report;
  }
  if (roots != ref.root_count) {
    report.details = {{"reason", "positive root count differs from the reference form"},
                      {"positive_roots", roots},
                      {"reference_positive_roots", ref.root_count}};
    return report;
  }
  bool j_ok = false;
  bool r_ok = false;
  report.details["j"] = detail::compare_lists(ctx.relations(RelationTag::j), ref.j, {}, j_ok);
  report.details["r"] = detail::compare_lists(ctx.relations(RelationTag::r), ref.r, ref.omitted_r, r_ok);
  report.verdict = j_ok && r_ok ? Verdict::pass : Verdict::fail;
  return report;
}

/// Names accepted by `run_check`.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "root_grading",       "nilpotency",         "dim_identity", "ideal_equality_p_r",
      "ideal_equality_j_p", "ideal_equality_j_r", "minimality_j", "diamond_reference"};
  return names;
}

inline std::string data_dir() {
  if (const char* env = std::getenv("LIEQUAD_DATA")) return env;
#ifdef LIEQUAD_DATA_DIR
  return LIEQUAD_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string diamond_form_path(const std::string& dir = data_dir()) { return dir + "/forms/diamond.qform"; }
inline std::string diamond_reference_path(const std::string& dir = data_dir()) {
  return dir + "/reference/diamond_relations.txt";
}

/// Runs one named check. The two first-step/second-step ideal equalities and
/// minimality require a positive definite form; j = r is run on any weakly
/// positive form, where it may legitimately fail.
inline TheoremReport run_check(FormContext& ctx, const std::string& name, const std::string& dir = data_dir()) {
  if (name == "root_grading") return check_grading(ctx);
  if (name == "nilpotency") return check_nilpotency(ctx);
  if (name == "dim_identity") return check_dim_identity(ctx);
  if (name == "ideal_equality_p_r") return check_ideal_equality(ctx, RelationTag::p, RelationTag::r, true);
  if (name == "ideal_equality_j_p") return check_ideal_equality(ctx, RelationTag::j, RelationTag::p, true);
  if (name == "ideal_equality_j_r") return check_ideal_equality(ctx, RelationTag::j, RelationTag::r, false);
  if (name == "minimality_j") {
    if (!ctx.positive_definite()) return detail::not_applicable(name, ctx.form(), "positive definite");
    return check_minimality(ctx, RelationTag::j);
  }
  if (name == "diamond_reference") {
    if (load_qform(diamond_form_path(dir)) != ctx.form())
      return detail::not_applicable(name, ctx.form(), "form equals the bundled diamond form");
    return check_diamond_reference(ctx, load_reference(diamond_reference_path(dir), ctx.form().size()));
  }
  throw Error("unknown check '" + name + "'");
}

/// The checks selected by "all": every generic check, plus the reference
/// comparison when the form is the bundled diamond form.
inline std::vector<std::string> all_checks_for(const UnitForm& q, const std::string& dir = data_dir()) {
  std::vector<std::string> out(check_names().begin(), check_names().end() - 1);
  if (std::filesystem::exists(diamond_form_path(dir)) && load_qform(diamond_form_path(dir)) == q)
    out.push_back("diamond_reference");
  return out;
}

}  // namespace liequad

#endif  // LIEQUAD_VERIFY_HPP
