// Acceptance run: one PASS/FAIL line per criterion, with pinned tolerances and time limits.

#include "oracle.hpp"
#include "random.hpp"
#include "schema.hpp"
#include "skeinlab/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace skeinlab;

namespace {

// Wall-clock limits in seconds, per criterion.
constexpr double kLimitEngine = 10;
constexpr double kLimitHopf = 60;
constexpr double kLimitSt = 120;
constexpr double kLimitExcision = 180;
constexpr double kLimitCli = 300;
// Every algebraic comparison is exact: the difference must be the zero polynomial.
constexpr int kRandomWords = 200;
constexpr int kRoundTrips = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

Outcome suite(const std::string& name, int max_degree) {
  SuiteParams p;
  p.max_degree = max_degree;
  Report r = run_suite(name, p);
  for (const auto& c : r.cases)
    if (!c.pass) return fail(c.name + (c.witness.empty() ? "" : ": " + c.witness));
  return {true, std::to_string(r.cases.size()) + " cases"};
}

Outcome all_of(std::initializer_list<std::function<Outcome()>> parts) {
  std::string detail;
  for (const auto& f : parts) {
    Outcome o = f();
    if (!o.ok) return o;
    detail += (detail.empty() ? "" : "; ") + o.detail;
  }
  return {true, detail};
}

Outcome check(bool ok, const std::string& what) { return ok ? Outcome{true, what} : fail(what); }

bool same_on_all_states(const SliceWord& x, const SliceWord& y) {
  for (const auto& w : all_states(x.west_arity))
    for (const auto& e : all_states(x.east_arity()))
      if (!(reduce(StatedWord(x, w, e)) == reduce(StatedWord(y, w, e)))) return false;
  return true;
}

Outcome criterion_engine() {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < kRandomWords; ++i) {
    SliceWord w = oracle::random_word(rng, 3, 6);
    StatedWord d(w, oracle::random_states(rng, w.west_arity), oracle::random_states(rng, w.east_arity()));
    if (!(reduce(d) == oracle::brute_force(d))) return fail("oracle mismatch on " + d.to_string());
  }
  auto x = [](bool over, int i) { return over ? Cross(i) : CrossUnder(i); };
  for (bool e : {false, true}) {
    if (!same_on_all_states(SliceWord(3, {x(e, 0), x(e, 1), x(e, 0)}), SliceWord(3, {x(e, 1), x(e, 0), x(e, 1)})))
      return fail("R3 braid relation");
    for (bool h : {false, true})
      if (!same_on_all_states(SliceWord(3, {x(e, 0), x(h, 1), x(!e, 0)}), SliceWord(3, {x(!e, 1), x(h, 0), x(e, 1)})))
        return fail("R3 mixed relation");
    for (int i : {0, 1})
      if (!same_on_all_states(SliceWord(3, {x(e, i), x(!e, i)}), SliceWord(3, {}))) return fail("R2");
  }
  SliceWord kink(1, {Cup(1), Cross(0), Cap(1)});
  for (const auto& w : all_states(1))
    for (const auto& e : all_states(1))
      if (!(reduce(StatedWord(kink, w, e)) == -q_pow(3) * reduce(parallel_word(w, e)))) return fail("kink factor");
  return {true, std::to_string(kRandomWords) + " random words, R2/R3, kink -q^3"};
}

Outcome criterion_coquasi() {
  const SkeinElement g[4] = {gen_a(), gen_b(), gen_c(), gen_d()};
  const HalfLaurent q = q_pow(1), qi = q_pow(-1), z;
  const HalfLaurent table[4][4] = {{q, z, z, qi}, {z, z, q - q_pow(-3), z}, {z, z, z, z}, {qi, z, z, q}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(r_form(g[i], g[j]) == table[i][j])) return fail("R generator table");
  if (!(theta_form(g[0]) == -q_pow(3) && theta_form(g[3]) == -q_pow(3) && theta_form(g[1]).is_zero() &&
        theta_form(g[2]).is_zero()))
    return fail("theta generator values");
  if (!(algebraic_braiding(standard_V(), standard_V()) == rt_crossing(true))) return fail("braiding on V (x) V");
  return suite("coquasi", 2);
}

// Runs a command, captures stdout, returns the exit status.
int run_command(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli() {
  std::mt19937_64 rng(500);
  for (int i = 0; i < kRoundTrips; ++i) {
    switch (i % 3) {
      case 0: {
        SkeinElement x = gen::element(rng, 3, 4);
        if (!(parse_skein(to_string(x)) == x)) return fail("skein round trip: " + to_string(x));
        break;
      }
      case 1: {
        HopfElement x = gen::hopf(rng, 3, 4);
        if (!(parse_hopf(to_string(x)) == x)) return fail("hopf round trip: " + to_string(x));
        break;
      }
      default: {
        HalfLaurent x = gen::scalar(rng, 5);
        if (!(parse_scalar(x.to_string()) == x)) return fail("scalar round trip: " + x.to_string());
        SliceWord w = oracle::random_word(rng, 3, 6);
        StatedWord d(w, oracle::random_states(rng, w.west_arity), oracle::random_states(rng, w.east_arity()));
        if (!(parse_diagram(d.to_string()) == d)) return fail("diagram round trip: " + d.to_string());
      }
    }
  }
  std::string out;
  const std::string cli = SKEINLAB_CLI_PATH;
  if (run_command(cli + " --no-cache reduce 'tangle(1){x0}' 2>/dev/null", out) != 2) return fail("bad diagram exit code");
  if (run_command(cli + " --no-cache mul 'a*' 2>/dev/null", out) != 2) return fail("parse error exit code");
  if (run_command(cli + " verify nosuch 2>/dev/null", out) != 2) return fail("unknown suite exit code");
  auto start = std::chrono::steady_clock::now();
  int code = run_command(cli + " --no-cache verify all --max-degree 3 --json", out);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) return fail("verify all exited " + std::to_string(code));
  if (secs >= kLimitCli) return fail("verify all took " + std::to_string(secs) + " s");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(out);
  } catch (const std::exception& e) {
    return fail(std::string("report is not JSON: ") + e.what());
  }
  std::string err = schema::validate(j, schema::load(SKEINLAB_SCHEMA_PATH));
  if (!err.empty()) return fail("schema: " + err);
  if (j["status"] != "pass") return fail("report status " + j["status"].dump());
  char buf[64];
  std::snprintf(buf, sizeof buf, "verify all in %.1f s", secs);
  return {true, std::to_string(kRoundTrips) + " round trips; " + buf + "; schema valid"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds; 0 means no limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "Kauffman engine vs brute-force oracle", kLimitEngine, criterion_engine},
      {2, "Hopf axioms on <= 3 strands", kLimitHopf, [] { return suite("hopf", 3); }},
      {3, "transport isomorphism on PBW degree <= 3", 0, [] { return suite("iso", 3); }},
      {4, "coquasitriangular and coribbon structure", 0, criterion_coquasi},
      {5, "half-ribbon axioms on <= 3 strands", 0, [] { return suite("halfribbon", 3); }},
      {6, "left/right bridge on <= 3 strands", 0, [] { return suite("leftright", 3); }},
      {7, "braided-opposite product on <= 2 strands", 0, [] { return suite("braidop", 2); }},
      {8, "St suite, total points <= 6", kLimitSt, [] { return suite("st", 3); }},
      {9, "excision suite, degree <= 3", kLimitExcision,
       [] {
         return all_of({[] { return suite("excision", 3); },
                        [] { return check(default_specializations().size() >= 2, "two specializations"); }});
       }},
      {10, "comodule suite", 0, [] { return suite("comodule", 3); }},
      {11, "CLI round trips, schema, verify all", kLimitCli, criterion_cli},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit > 0 && secs >= c.limit) o = fail("time limit " + std::to_string(c.limit) + " s exceeded");
    all_ok = all_ok && o.ok;
    std::printf("criterion %2d: %s  %s (%.2f s) %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
