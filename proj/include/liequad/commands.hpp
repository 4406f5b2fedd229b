#ifndef LIEQUAD_COMMANDS_HPP
#define LIEQUAD_COMMANDS_HPP

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liequad/free_lie.hpp"
#include "liequad/io.hpp"
#include "liequad/positivity.hpp"
#include "liequad/relations.hpp"
#include "liequad/roots.hpp"
#include "liequad/verify.hpp"

namespace liequad {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitBudget = 2,
  kExitUsage = 64,
};

/// 64-bit FNV-1a, used to key cache entries on content.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// One JSON file per (form, operation, parameters) under a directory.
/// Entries are written to a temporary file and renamed into place while a
/// per-entry lock file is held; a held lock makes the writer skip the store.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::string key(const UnitForm& q, std::string_view operation, const Json& params) {
    const std::string material = to_json(q).dump() + "|" + std::string(operation) + "|" + params.dump();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(material)));
    return std::string(operation) + "-" + buf;
  }

  std::optional<Json> load(const std::string& key) const {
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    try {
      return Json::parse(in);
    } catch (const Json::parse_error&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const Json& value) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto lock = dir_ / (key + ".lock");
    std::FILE* f = std::fopen(lock.c_str(), "wx");
    if (!f) return;
    std::fclose(f);
    const auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp);
      out << value.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
    std::filesystem::remove(lock, ec);
  }

 private:
  std::filesystem::path dir_;
};

struct CommandOptions {
  std::int64_t bound = kDefaultBoxBound;
  std::size_t root_cap = kDefaultRootCap;
  std::size_t sequence_cap = kDefaultSequenceCap;
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

namespace detail {

template <class F>
Json cached(const CommandOptions& opt, const UnitForm& q, std::string_view op, const Json& params, F&& compute) {
  if (!opt.cache_dir) return compute();
  ResultCache cache(*opt.cache_dir);
  const auto key = ResultCache::key(q, op, params);
  if (auto hit = cache.load(key)) return *hit;
  Json value = compute();
  cache.store(key, value);
  return value;
}

inline Json edge_list(const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& edges) {
  Json out = Json::array();
  for (const auto& [e, m] : edges)
    out.push_back({static_cast<std::int64_t>(e.first + 1), static_cast<std::int64_t>(e.second + 1), m});
  return out;
}

}  // namespace detail

inline Json cmd_info(const UnitForm& q, const CommandOptions& opt = {}) {
  const auto weak = is_weakly_positive(q, opt.bound, opt.root_cap);
  const auto b = bigraph(q);
  Json out = {{"form", to_json(q)},
              {"n", q.size()},
              {"strict_unit", q.strict_unit()},
              {"connected", is_connected(q)},
              {"positive_definite", is_positive_definite(q)},
              {"weak_positivity", std::string(to_string(weak.status))},
              {"solid_edges", detail::edge_list(b.solid_edges)},
              {"broken_edges", detail::edge_list(b.broken_edges)}};
  out["witness"] = weak.witness ? to_json(*weak.witness) : Json(nullptr);
  return out;
}

inline Json cmd_roots(const UnitForm& q, bool chains, const CommandOptions& opt = {}) {
  const Json params = {{"chains", chains}, {"cap", opt.root_cap}};
  return detail::cached(opt, q, "roots", params, [&] {
    const auto roots = positive_roots(q, opt.root_cap);
    Json out = to_json(roots);
    if (chains) {
      Json list = Json::array();
      for (const auto& x : roots.roots) list.push_back(to_json(weyl_chain(q, x)));
      out["chains"] = list;
    }
    return out;
  });
}

inline Json cmd_relations(const UnitForm& q, RelationTag tag, const CommandOptions& opt = {}) {
  const Json params = {{"set", std::string(to_string(tag))}, {"sequence_cap", opt.sequence_cap}};
  return detail::cached(opt, q, "relations", params, [&] {
    Json out = to_json(generate_relations(q, tag, opt.sequence_cap));
    out["count"] = out["elements"].size();
    return out;
  });
}

inline Json cmd_dims(const UnitForm& q, const RelationSet& set, const CommandOptions& opt = {}) {
  const Json params = {{"relations", to_json(set)}, {"cap", opt.root_cap}};
  return detail::cached(opt, q, "dims", params, [&] {
    Json out = to_json(lie_algebra(q, set, opt.threads, opt.root_cap));
    out["tag"] = std::string(to_string(set.tag()));
    return out;
  });
}

inline Json cmd_member(const UnitForm& q, const RelationSet& set, const Multibracket& v) {
  return {{"tag", std::string(to_string(set.tag()))},
          {"element", to_json(v)},
          {"member", ideal_contains(q, set, v)}};
}

/// Checks whose failure on a given form is expected, e.g. the j = r equality
/// on a form that is not positive definite.
inline std::set<std::string> load_expectations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open expectation file '" + path.string() + "'");
  try {
    const auto j = Json::parse(in);
    auto list = j.at("expected_failures").get<std::vector<std::string>>();
    return {list.begin(), list.end()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expectation file: ") + e.what());
  }
}

struct VerifyOutcome {
  Json report;
  int exit_code = kExitOk;
};

inline VerifyOutcome cmd_verify(const UnitForm& q, std::vector<std::string> checks,
                                const std::set<std::string>& expected_failures, const CommandOptions& opt = {},
                                const std::string& data = data_dir()) {
  if (checks.empty() || (checks.size() == 1 && checks.front() == "all")) checks = all_checks_for(q, data);
  for (const auto& c : checks)
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw ParseError("unknown check '" + c + "'");

  FormContext ctx(q, {opt.bound, opt.root_cap, opt.sequence_cap, opt.threads});
  Json reports = Json::array();
  Json unexpected = Json::array();
  Json expected = Json::array();
  for (const auto& name : checks) {
    const auto r = run_check(ctx, name, data);
    reports.push_back(to_json(r));
    if (r.verdict == Verdict::fail) (expected_failures.contains(name) ? expected : unexpected).push_back(name);
  }
  VerifyOutcome out;
  out.report = {{"form", to_json(q)},
                {"reports", reports},
                {"expected_failures", expected},
                {"unexpected_failures", unexpected},
                {"ok", unexpected.empty()}};
  out.exit_code = unexpected.empty() ? kExitOk : kExitFailure;
  return out;
}

}  // namespace liequad

#endif  // LIEQUAD_COMMANDS_HPP
