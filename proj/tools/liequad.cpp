#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liequad/liequad.hpp"

namespace fs = std::filesystem;
using namespace liequad;

namespace {

struct Input {
  UnitForm form;
  std::optional<fs::path> path;
};

// A path to a .qform / .json file, or an inline form with ';' as line break.
Input read_input(const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    if (fs::path(arg).extension() == ".json") {
      std::ifstream in(arg);
      try {
        return {form_from_json(Json::parse(in)), fs::path(arg)};
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed form JSON: ") + e.what());
      }
    }
    return {load_qform(arg), fs::path(arg)};
  }
  if (arg.find("n ") == std::string::npos && arg.find(';') == std::string::npos)
    throw ParseError("no such form file '" + arg + "'");
  std::string text = arg;
  std::replace(text.begin(), text.end(), ';', '\n');
  return {parse_qform(text), std::nullopt};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].dump();
  return s + ")";
}

std::string seq_text(const Json& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].dump();
  return s + "]";
}

void print_info(const Json& r) {
  std::cout << "n: " << r["n"] << '\n'
            << "strict unit: " << yes_no(r["strict_unit"]) << '\n'
            << "positive definite: " << yes_no(r["positive_definite"])
            << "; weakly positive: "
            << (r["weak_positivity"] == "weakly_positive"       ? "yes"
                : r["weak_positivity"] == "not_weakly_positive" ? "no"
                                                                : "inconclusive")
            << "; connected: " << yes_no(r["connected"]) << '\n';
  if (!r["witness"].is_null()) std::cout << "witness: " << vec_text(r["witness"]) << '\n';
  for (const char* kind : {"solid_edges", "broken_edges"})
    for (const auto& e : r[kind])
      std::cout << (kind[0] == 's' ? "solid " : "broken ") << e[0] << '-' << e[1]
                << (e[2] != 1 ? " x" + e[2].dump() : "") << '\n';
}

void print_dot(const Json& r) {
  std::cout << "graph B {\n";
  for (std::size_t i = 1; i <= r["n"].get<std::size_t>(); ++i) std::cout << "  " << i << ";\n";
  for (const auto& e : r["solid_edges"])
    std::cout << "  " << e[0] << " -- " << e[1] << " [label=" << e[2] << "];\n";
  for (const auto& e : r["broken_edges"])
    std::cout << "  " << e[0] << " -- " << e[1] << " [style=dashed, label=" << e[2] << "];\n";
  std::cout << "}\n";
}

void print_roots(const Json& r) {
  std::cout << r["count"] << " positive roots, max height " << r["max_height"] << '\n';
  for (std::size_t k = 0; k < r["roots"].size(); ++k) {
    std::cout << vec_text(r["roots"][k]);
    if (r.contains("chains")) {
      std::cout << "  chain:";
      for (const auto& s : r["chains"][k]) std::cout << ' ' << vec_text(s);
    }
    std::cout << '\n';
  }
}

void print_relations(const Json& r) {
  std::cout << r["tag"].get<std::string>() << ": " << r["count"] << " elements\n";
  for (const auto& e : r["elements"]) std::cout << seq_text(e) << '\n';
}

void print_dims(const Json& r) {
  std::cout << "L(q," << r["tag"].get<std::string>() << "): total dimension " << r["total"] << '\n';
  for (const auto& d : r["dims"]) std::cout << vec_text(d["degree"]) << "  " << d["dim"] << '\n';
  std::cout << "nilpotency certified at height: "
            << (r["nilpotent_at"].is_null() ? std::string("no") : r["nilpotent_at"].dump()) << '\n';
}

void print_verify(const Json& r, const std::set<std::string>& expected) {
  for (const auto& rep : r["reports"]) {
    const auto name = rep["theorem"].get<std::string>();
    const auto verdict = rep["verdict"].get<std::string>();
    std::cout << name << ": " << verdict;
    if (verdict == "fail" && expected.contains(name)) std::cout << " (expected for this form)";
    std::cout << '\n';
    if (verdict == "fail") std::cout << "  " << rep["details"].dump() << '\n';
  }
}

RelationSet load_relation_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open relation file '" + path + "'");
  try {
    return relation_set_from_json(Json::parse(in), n);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed relation set JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive roots, relation sets and graded Lie algebras of unit integral quadratic forms"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  CommandOptions opt;
  std::string cache;
  if (const char* env = std::getenv("LIEQUAD_CACHE")) cache = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("form", input, "form file (.qform or .json) or inline form, ';' separating lines")->required();
    sub->add_flag("--json", json, "emit JSON");
    sub->add_option("--cache", cache, "cache directory (default $LIEQUAD_CACHE)");
    sub->add_option("--bound", opt.bound, "box bound for the weak positivity search")->check(CLI::Range(1, 1000));
    sub->add_option("--cap", opt.root_cap, "positive root budget");
    sub->add_option("--seq-cap", opt.sequence_cap, "root sequence budget");
    sub->add_option("--threads", opt.threads, "worker threads for ideal components")->check(CLI::Range(1u, 256u));
  };

  auto* info = app.add_subcommand("info", "classify the form and summarize its bigraph");
  common(info);
  bool dot = false;
  info->add_flag("--dot", dot, "print the bigraph in DOT format");

  auto* roots = app.add_subcommand("roots", "list positive roots");
  common(roots);
  bool chains = false;
  roots->add_flag("--chains", chains, "attach a Weyl chain to each root");

  std::string set_name = "r";
  auto* relations = app.add_subcommand("relations", "generate a relation set");
  common(relations);
  relations->add_option("--set", set_name, "r|r0|r1|r2|p|j");

  auto* dims = app.add_subcommand("dims", "graded dimensions of L(q,S)");
  common(dims);
  std::string relation_file;
  dims->add_option("--set", set_name, "r|r0|r1|r2|p|j");
  dims->add_option("--relations", relation_file, "custom relation set JSON, overrides --set");

  auto* member = app.add_subcommand("member", "test membership of a multibracket in the ideal (S)");
  common(member);
  std::string element;
  member->add_option("--set", set_name, "r|r0|r1|r2|p|j");
  member->add_option("--relations", relation_file, "custom relation set JSON, overrides --set");
  member->add_option("--element", element, "index sequence, e.g. 4,3,2,1")->required();

  auto* verify = app.add_subcommand("verify", "run structural checks");
  common(verify);
  std::vector<std::string> checks{"all"};
  std::string expect_file;
  verify->add_option("--checks", checks, "'all' or check names")->delimiter(',');
  verify->add_option("--expect", expect_file, "expectation file (default <form>.expect.json if present)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!cache.empty()) opt.cache_dir = cache;

  try {
    const auto in = read_input(input);
    const auto& q = in.form;
    auto tag_or_throw = [&] {
      auto tag = parse_relation_tag(set_name);
      if (!tag || *tag == RelationTag::custom) throw ParseError("unknown relation set '" + set_name + "'");
      return *tag;
    };
    auto relation_set = [&] {
      if (!relation_file.empty()) return load_relation_file(relation_file, q.size());
      return generate_relations(q, tag_or_throw(), opt.sequence_cap);
    };
    auto emit = [&](const Json& r, auto&& text) {
      if (json)
        std::cout << r.dump(2) << '\n';
      else
        text(r);
    };

    if (*info) {
      const auto r = cmd_info(q, opt);
      if (dot)
        print_dot(r);
      else
        emit(r, print_info);
      return kExitOk;
    }
    if (*roots) {
      emit(cmd_roots(q, chains, opt), print_roots);
      return kExitOk;
    }
    if (*relations) {
      const auto tag = tag_or_throw();
      if (!q.strict_unit() && (tag == RelationTag::r1 || tag == RelationTag::r2 || tag == RelationTag::j))
        std::cerr << "warning: form has coefficients outside {-1,0,1}\n";
      emit(cmd_relations(q, tag, opt), print_relations);
      return kExitOk;
    }
    if (*dims) {
      emit(cmd_dims(q, relation_set(), opt), print_dims);
      return kExitOk;
    }
    if (*member) {
      const auto v = Multibracket::from_one_based(parse_index_list(element), q.size());
      const auto r = cmd_member(q, relation_set(), v);
      emit(r, [](const Json& x) { std::cout << (x["member"].get<bool>() ? "true" : "false") << '\n'; });
      return r["member"].get<bool>() ? kExitOk : kExitFailure;
    }
    if (*verify) {
      std::set<std::string> expected;
      if (!expect_file.empty()) {
        expected = load_expectations(expect_file);
      } else if (in.path) {
        auto guess = *in.path;
        guess.replace_extension(".expect.json");
        if (fs::is_regular_file(guess)) expected = load_expectations(guess);
      }
      const auto out = cmd_verify(q, checks, expected, opt);
      emit(out.report, [&](const Json& r) { print_verify(r, expected); });
      return out.exit_code;
    }
  } catch (const RootBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const SequenceBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
