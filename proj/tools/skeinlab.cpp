// Command-line front end for skeinlab.

#include "skeinlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace skeinlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// JSON-lines reduction cache keyed by canonical diagram strings.
class CacheFile {
 public:
  explicit CacheFile(std::string path) : path_(std::move(path)) {}

  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line)) return;
    try {
      auto header = nlohmann::json::parse(line);
      if (header.value("fingerprint", "") != BoundaryCoefficients::fingerprint() ||
          header.value("format", "") != "skeinlab-cache-v1") {
        std::cerr << "cache: fingerprint mismatch, ignoring " << path_ << "\n";
        return;
      }
      std::vector<std::pair<std::string, SkeinElement>> entries;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        entries.emplace_back(j.at("k").get<std::string>(), parse_skein(j.at("v").get<std::string>()));
      }
      for (auto& [k, v] : entries) ReduceCache::global().put(k, v);
    } catch (const std::exception& e) {
      std::cerr << "cache: unreadable file " << path_ << " (" << e.what() << "), ignoring\n";
    }
  }

  void save() const {
    std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) {
        std::cerr << "cache: cannot write " << tmp << "\n";
        return;
      }
      out << nlohmann::json{{"format", "skeinlab-cache-v1"}, {"fingerprint", BoundaryCoefficients::fingerprint()}}.dump()
          << "\n";
      for (const auto& [k, v] : ReduceCache::global().snapshot())
        out << nlohmann::json{{"k", k}, {"v", to_string(v)}}.dump() << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) std::cerr << "cache: cannot replace " << path_ << ": " << ec.message() << "\n";
  }

 private:
  std::string path_;
};

SkeinElement expr(const std::string& text) { return parse_skein(text); }

int print(const std::string& s) {
  std::cout << s << "\n";
  return kExitPass;
}

// A random specialization point p/q with 2 <= p, q <= 30, p != q.
Rational random_specialization(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(2, 30);
  for (;;) {
    Rational r(dist(rng), dist(rng));
    r.canonicalize();
    if (r != 1) return r;
  }
}

Rational parse_spec(const std::string& text) {
  HalfLaurent v = parse_scalar(text);
  if (v.max_exponent() != 0 || v.min_exponent() != 0) throw std::invalid_argument("--spec must be a rational number");
  Rational r = v.coefficient(0);
  validate_specialization(r);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinlab: stated skein algebras of the bigon and O_{q^2}(SL_2)"};
  app.require_subcommand(1);
  std::string cache_path;
  bool no_cache = false;
  app.add_option("--cache", cache_path, "reduction cache file (default: $SKEINLAB_CACHE)");
  app.add_flag("--no-cache", no_cache, "disable the in-memory and on-disk reduction cache");

  std::function<int()> action;

  std::string diagram_text;
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a stated diagram to the basis");
  reduce_cmd->add_option("diagram", diagram_text, "e.g. \"tangle(0){cup0;cap0}\"")->required();
  reduce_cmd->callback([&] { action = [&] { return print(to_string(reduce(parse_diagram(diagram_text)))); }; });

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a closed diagram");
  bracket_cmd->add_option("diagram", diagram_text, "closed diagram, e.g. \"tangle(0){cup0;x0;cap0}\"")->required();
  bracket_cmd->callback([&] {
    action = [&] {
      StatedWord d = parse_diagram(diagram_text);
      return print(bracket(d.word).to_string());
    };
  });

  std::vector<std::string> exprs;
  bool inverse = false;
  std::string edge = "east";
  auto unary = [&](const std::string& name, const std::string& help, std::function<std::string(const SkeinElement&)> f) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("expr", exprs, "element expression")->required()->expected(1);
    cmd->callback([&, f] { action = [&, f] { return print(f(expr(exprs.at(0)))); }; });
    return cmd;
  };

  auto* mul_cmd = app.add_subcommand("mul", "product of elements (left to right)");
  mul_cmd->add_option("exprs", exprs, "element expressions")->required()->expected(1, -1);
  mul_cmd->callback([&] {
    action = [&] {
      SkeinElement acc = unit_element();
      for (const auto& e : exprs) acc = mul(acc, expr(e));
      return print(to_string(acc));
    };
  });
  unary("comul", "coproduct", [](const SkeinElement& x) { return to_string(comul(x)); });
  unary("counit", "counit", [](const SkeinElement& x) { return counit(x).to_string(); });
  auto* antipode_cmd = unary("antipode", "antipode", [&](const SkeinElement& x) {
    return to_string(inverse ? antipode_inverse(x) : antipode(x));
  });
  antipode_cmd->add_flag("--inverse", inverse, "apply the inverse antipode");
  unary("rot", "rotation automorphism rot_*", [](const SkeinElement& x) { return to_string(rot_star(x)); });
  auto* inv_cmd = unary("inv", "edge inversion inv_e", [&](const SkeinElement& x) {
    return to_string(inv_edge(x, edge == "west" ? BigonSkein::Edge::West : BigonSkein::Edge::East, inverse));
  });
  inv_cmd->add_option("--edge", edge, "east or west")->check(CLI::IsMember({"east", "west"}));
  inv_cmd->add_flag("--inverse", inverse, "apply the inverse map");
  unary("ht", "half-twist coaction (Id (x) t) o comul", [](const SkeinElement& x) { return to_string(ht_coaction(x)); });

  std::string hopf_text;
  auto* pbw_cmd = app.add_subcommand("pbw", "normal form of an expression in a, b, c, d");
  pbw_cmd->add_option("expr", hopf_text, "e.g. \"a*d - q^-2*b*c\"")->required();
  pbw_cmd->callback([&] { action = [&] { return print(to_string(parse_hopf(hopf_text))); }; });

  std::string functional;
  auto* fn_cmd = app.add_subcommand("functional", "evaluate R, theta, t or tinv");
  fn_cmd->add_option("name", functional, "R, theta, t or tinv")->required()->check(CLI::IsMember({"R", "theta", "t", "tinv"}));
  fn_cmd->add_option("exprs", exprs, "one element, or two for R")->required()->expected(1, 2);
  fn_cmd->callback([&] {
    action = [&]() -> int {
      size_t want = functional == "R" ? 2 : 1;
      if (exprs.size() != want) {
        std::cerr << "functional " << functional << " takes " << want << " element(s)\n";
        return kExitUsage;
      }
      if (functional == "R") return print(r_form(expr(exprs[0]), expr(exprs[1])).to_string());
      SkeinElement x = expr(exprs[0]);
      if (functional == "theta") return print(theta_form(x).to_string());
      if (functional == "t") return print(t_form(x).to_string());
      return print(t_inv_form(x).to_string());
    };
  });

  int max_points = 6;
  std::vector<std::string> spec_texts;
  auto* st_cmd = app.add_subcommand("st", "St map summary over all matchings");
  st_cmd->add_option("--max-points", max_points, "largest total number of boundary points")->check(CLI::Range(0, 10));
  st_cmd->add_option("--spec", spec_texts, "specialization point(s) for ranks");
  st_cmd->callback([&] {
    action = [&] {
      SuiteParams p;
      if (!spec_texts.empty()) {
        p.specializations.clear();
        for (const auto& s : spec_texts) p.specializations.push_back(parse_spec(s));
      }
      bool ok = true;
      std::cout << "n_west n_east matchings catalan peter_weyl rank natural intertwiner\n";
      for (int t = 0; t <= max_points; t += 2)
        for (int w = 0; w <= t; ++w) {
          int e = t - w;
          auto ms = enumerate_matchings(w, e);
          bool nat = true, inter = true;
          for (const auto& m : ms) {
            for (const auto& ins : insertions_for(m)) nat = nat && check_st_naturality(m, ins).ok;
            inter = inter && check_st_intertwiner(m).ok;
          }
          std::string ranks;
          StRank last;
          for (const auto& s0 : p.specializations) {
            last = st_rank(w, e, s0);
            ranks += (ranks.empty() ? "" : ",") + std::to_string(last.rank);
            ok = ok && last.rank == last.catalan && last.catalan == last.peter_weyl;
          }
          ok = ok && nat && inter;
          std::cout << w << " " << e << " " << ms.size() << " " << catalan(t / 2) << " " << last.peter_weyl << " "
                    << ranks << " " << (nat ? "yes" : "no") << " " << (inter ? "yes" : "no") << "\n";
        }
      return ok ? kExitPass : kExitFail;
    };
  });

  std::string suite;
  int max_degree = 2;
  bool json = false;
  std::optional<uint64_t> seed;
  unsigned jobs = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suites_help;
  for (const auto& s : suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + s;
  verify_cmd->add_option("suite", suite, "one of: " + suites_help)->required();
  verify_cmd->add_option("--max-degree", max_degree, "strand/PBW degree bound")->check(CLI::Range(0, 6));
  verify_cmd->add_option("--spec", spec_texts, "specialization point s0 (repeatable)");
  verify_cmd->add_flag("--json", json, "emit a JSON report");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks and an extra random specialization");
  verify_cmd->add_option("--jobs", jobs, "worker threads (0: all cores)");
  verify_cmd->callback([&] {
    action = [&] {
      SuiteParams p;
      p.max_degree = max_degree;
      p.seed = seed;
      p.jobs = jobs;
      if (!spec_texts.empty()) {
        p.specializations.clear();
        for (const auto& s : spec_texts) p.specializations.push_back(parse_spec(s));
      }
      if (seed) p.specializations.push_back(random_specialization(*seed));
      Report r = run_suite(suite, p);
      if (json) {
        std::cout << r.to_json().dump(2) << "\n";
      } else {
        std::cout << r.to_text();
      }
      return r.ok() ? kExitPass : kExitFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (no_cache) ReduceCache::global().set_enabled(false);
  if (cache_path.empty() && !no_cache) {
    if (const char* env = std::getenv("SKEINLAB_CACHE")) cache_path = env;
  }
  std::optional<CacheFile> cache;
  if (!cache_path.empty() && !no_cache) {
    cache.emplace(cache_path);
    cache->load();
  }

  int code;
  try {
    code = action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cache) cache->save();
  return code;
}
