// Acceptance run: one PASS/FAIL line per criterion. With a path to the
// dynrefl binary as the first argument, the timing criterion spawns it;
// otherwise the CLI runs in-process.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dynrefl/cli.hpp"
#include "dynrefl/correspondence.hpp"
#include "dynrefl/fixtures.hpp"
#include "dynrefl/workbench.hpp"

using namespace dynrefl;

namespace {

std::string g_binary;
int g_failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

struct Run {
  int code;
  std::string out;
  double ms;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto t0 = std::chrono::steady_clock::now();
  int code = run_cli(args, out, err);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {code, out.str(), ms};
}

// Wall time of a separate process, output discarded.
Run spawn(const std::vector<std::string>& args) {
  std::string cmd = "\"" + g_binary + "\"";
  for (const auto& a : args) cmd += " \"" + a + "\"";
  cmd += " > /dev/null 2>&1";
  auto t0 = std::chrono::steady_clock::now();
  int status = std::system(cmd.c_str());
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  int code = status == -1 ? -1 : WEXITSTATUS(status);
  return {code, "", ms};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("dynrefl_acceptance_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::string failed_ids(const std::vector<CheckResult>& rs) {
  std::string s;
  for (const auto& r : rs)
    if (!r.passed) s += (s.empty() ? "" : ",") + r.check;
  return s;
}

void criterion_1() {
  auto r = cli({"--json", "reproduce", "example-8.9"});
  auto j = json::parse(r.out);
  bool k1 = false, k3 = false;
  for (const auto& it : j["items"]) {
    if (it["item"] == "k(l1)(l2,x2)") k1 = it["got"] == "(l2,x2)";
    if (it["item"] == "k(l3)(l2,x2)") k3 = it["got"] == "(l5,x1)";
  }
  report(1, r.code == 0 && k1 && k3, "reproduce example-8.9",
         std::string("k(l1)(l2,x2)=(l2,x2) ") + (k1 ? "ok" : "wrong") +
             ", k(l3)(l2,x2)=(l5,x1) " + (k3 ? "ok" : "wrong"));
}

void criterion_2() {
  auto r = cli({"--json", "reproduce", "example-5.3"});
  auto j = json::parse(r.out);
  int matched = 0, dots = 0;
  for (const auto& it : j["items"]) {
    matched += it["match"].get<bool>();
    dots += it["item"].get<std::string>().rfind("dot ", 0) == 0 && it["match"].get<bool>();
  }
  report(2, r.code == 0 && dots == 18 && matched == int(j["items"].size()),
         "reproduce example-5.3",
         std::to_string(matched) + "/" + std::to_string(j["items"].size()) +
             " values match, X-action entries " + std::to_string(dots) + "/18");
}

void criterion_3() {
  auto B = fixtures::ex53();
  auto t0 = std::chrono::steady_clock::now();
  auto r = check_braid_relation(build_sigma(B).sigma);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report(3, r.passed && r.tuples == 1296 && ms < 1000.0, "braid relation on ex53",
         std::to_string(r.tuples) + " tuples, " + (r.passed ? "0" : "some") + " violations, " +
             std::to_string(ms) + " ms");
}

void criterion_4() {
  auto B = fixtures::ex53();
  auto rs = check_braided_monoid(build_monoid(B), build_sigma(B).sigma);
  report(4, all_passed(rs), "braided-monoid suite on ex53",
         std::to_string(rs.size()) + " checks" +
             (all_passed(rs) ? "" : ", failing: " + failed_ids(rs)));
}

void criterion_5() {
  struct Case {
    std::string name;
    ModuleSetting S;
    HomFamily F;
  };
  auto B53 = fixtures::ex53();
  auto Z = fixtures::zn3();
  auto ex = fixtures::ex89();
  std::vector<Case> cases;
  cases.push_back({"trivial/ex53 left-regular", make_setting(B53, left_regular(build_monoid(B53))),
                   family_trivial(B53.P->G(), 6)});
  {
    auto S = make_setting(Z, one_point(Z, 0));
    cases.push_back({"identity/Z3 one-point", S, family_identity(Z.P->G(), 1)});
  }
  {
    auto S = make_setting(Z, left_regular(build_monoid(Z)));
    cases.push_back({"inverse/Z3 left-regular", S, family_inverse(Z.P->G(), 3)});
  }
  cases.push_back({"inner/EX89", ex.setting, ex.family});

  bool ok = true;
  std::string detail;
  std::uint64_t re_tuples_ex89 = 0;
  for (const auto& c : cases) {
    auto k = k_from_family(c.S, c.F);
    auto ids = check_left_module_ids(c.S.monoid, c.S.module);
    for (auto& i : action_identities(c.S, my_from_family(c.S, c.F))) ids.push_back(std::move(i));
    for (auto& i : boundary_identities(c.S, k)) ids.push_back(std::move(i));
    ids.push_back(reflection_equation(c.S, k));
    auto rs = run_all(ids);
    if (c.name == "inner/EX89")
      for (const auto& r : rs)
        if (r.check == "reflection-equation") re_tuples_ex89 = r.tuples;
    bool pass = all_passed(rs);
    ok = ok && pass;
    detail += (detail.empty() ? "" : "; ") + c.name + ": " + std::to_string(rs.size()) +
              " checks " + (pass ? "pass" : "fail " + failed_ids(rs));
  }
  ok = ok && re_tuples_ex89 == 648;
  report(5, ok, "family builders: module, action, boundary and reflection checks",
         detail + "; RE on EX89 " + std::to_string(re_tuples_ex89) + " tuples");
}

bool round_trip(const ModuleSetting& S, const HomFamily& F) {
  Layer l = F;
  for (int i = 0; i < 5; ++i) l = correspondence_step(S, l, Direction::TowardAction);
  Layer top = l;
  for (int i = 0; i < 5; ++i) l = correspondence_step(S, l, Direction::TowardFamily);
  if (!(std::get<HomFamily>(l) == F)) return false;
  // And from the action end: m_Y -> family -> m_Y.
  for (int i = 0; i < 5; ++i) l = correspondence_step(S, l, Direction::TowardAction);
  return std::get<ModuleAction>(l).mY == std::get<ModuleAction>(top).mY &&
         std::get<ModuleAction>(top).mY == my_from_family(S, F);
}

void criterion_6() {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  bool fixture_ok = round_trip(S, ex.family);
  auto ends = enumerate_endomorphisms(S.base().P->G());
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::uint64_t> pick(0, 999);
  int ok = 0;
  const int total = 25;
  for (int t = 0; t < total; ++t) ok += round_trip(S, family_at(ends, 3, pick(rng)));
  report(6, fixture_ok && ok == total, "correspondence round trips",
         std::string("EX89 ") + (fixture_ok ? "ok" : "broken") + ", random families " +
             std::to_string(ok) + "/" + std::to_string(total) + " (seed 20261016)");
}

void criterion_7() {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  bool eq = k_from_my(S, my_from_family(S, ex.family)) == k_from_family(S, ex.family);
  report(7, eq, "k from m_Y equals k from the family on EX89", "");
}

void criterion_8() {
  auto t1 = analyze_brace(fixtures::ex53());
  bool table1 = !t1.is_group && t1.associativity_witness.has_value();
  auto z = analyze_brace(fixtures::zn3());
  bool zbrace = z.is_brace && z.sigma_constant && z.closed_form_matches.value_or(false);
  auto zwb = build_workbench(load_document("@zn3"));
  bool flip = true;
  for (Index l = 0; l < 3; ++l)
    for (Index a = 0; a < 3; ++a)
      for (Index b = 0; b < 3; ++b)
        flip = flip && zwb.setting.sigma.sigma(l, a * 3 + b) == b * 3 + a;
  auto Z = fixtures::zn3();
  auto S1 = make_setting(Z, one_point(Z, 0));
  bool kid = k_from_family(S1, family_identity(Z.P->G(), 1)) == identity(S1.Y);
  auto Finv = family_inverse(Z.P->G(), 1);
  auto kinv = k_from_family(S1, Finv);
  auto kc = check_k_constant(S1, kinv, Finv);
  bool inv_ok = kc.constant && kc.condition && kc.closed_form_matches.value_or(false);
  std::string w;
  if (t1.associativity_witness)
    for (Index i : *t1.associativity_witness)
      w += (w.empty() ? "" : ",") + fixtures::ex53().H->label(i);
  report(8, table1 && zbrace && flip && kid && inv_ok, "brace analysis",
         "ex53 L " + std::string(t1.is_group ? "a group" : "NotAGroup") + " witness (" + w +
             "); Z3 brace " + (zbrace ? "yes" : "no") + ", flip " + (flip ? "yes" : "no") +
             ", identity family k=id " + (kid ? "yes" : "no") +
             ", inverse family k constant and closed form " + (inv_ok ? "yes" : "no"));
}

void criterion_9() {
  auto ex = fixtures::ex89();
  auto rs = run_all(quiver_identities(ex.setting, k_from_family(ex.setting, ex.family)));
  std::uint64_t tuples = 0;
  for (const auto& r : rs) tuples += r.tuples;
  report(9, all_passed(rs), "quiver suite on EX89",
         std::to_string(rs.size()) + " checks, " + std::to_string(tuples) + " tuples" +
             (all_passed(rs) ? "" : ", failing: " + failed_ids(rs)));
}

// Corrupt one entry of `target`, verify, and replay the first witness.
bool negative_control(const std::string& target, std::string& detail) {
  auto wb = build_workbench(load_document("@ex89"));
  const auto& H = *wb.base.H;
  const SetHMorphism& f = target == "sigma" ? wb.setting.sigma.sigma
                          : target == "k"   ? wb.k
                                            : wb.setting.module.action;
  const Index l = 2, x = 7;
  const Index y = (f(l, x) + 1) % f.target()->size();
  auto split = [](const SetHObject& o, Index v) {
    json parts = json::array();
    auto cs = o.components(v);
    for (std::size_t i = 0; i < cs.size(); ++i)
      parts.push_back(o.factors()[i]->carrier.label(cs[i]));
    return parts;
  };
  json out = split(*f.target(), y);
  auto doc = load_document("@ex89");
  doc["overrides"] = json::array({{{"target", target},
                                   {"lambda", H.label(l)},
                                   {"input", split(*f.source(), x)},
                                   {"output", out.size() == 1 ? out[0] : out}}});
  auto path = temp_file(target + ".json", doc.dump());
  auto r = cli({"--json", "verify", path, "--check", "all"});
  if (r.code != kCounterexample) {
    detail += target + ": exit " + std::to_string(r.code) + "; ";
    return false;
  }
  json witness;
  const auto report_json = json::parse(r.out);
  for (const auto& g : report_json["groups"])
    for (const auto& c : g["checks"])
      if (!c["passed"].get<bool>() && witness.is_null()) witness = c["witness"];
  auto wpath = temp_file(target + "_witness.json", witness.dump());
  bool replays = cli({"verify", path, "--replay", wpath}).code == kCounterexample;
  bool clean = cli({"verify", "@ex89", "--replay", wpath}).code == kPass;
  detail += target + ": exit 1, " + witness["check"].get<std::string>() +
            (replays ? " replays" : " does not replay") +
            (clean ? ", holds on the clean fixture" : ", also fails on the clean fixture") + "; ";
  return replays && clean;
}

void criterion_10() {
  std::string detail;
  bool ok = true;
  for (const char* t : {"sigma", "k", "mX"}) ok = negative_control(t, detail) && ok;
  report(10, ok, "single-entry corruptions are caught", detail.substr(0, detail.size() - 2));
}

void criterion_11() {
  auto run = [](const std::vector<std::string>& args) {
    return g_binary.empty() ? cli(args) : spawn(args);
  };
  auto v = run({"--workers", "1", "verify", "@ex89", "--check", "all"});
  auto e = run({"--workers", "1", "enumerate", "@ex89", "--families", "--limit", "100"});
  bool ok = v.code == 0 && v.ms < 2000.0 && e.code == 0 && e.ms < 10000.0;
  std::ostringstream d;
  d << "verify all " << v.ms << " ms (exit " << v.code << "), enumerate 100 " << e.ms
    << " ms (exit " << e.code << ")" << (g_binary.empty() ? ", in-process" : ", as a process");
  report(11, ok, "performance, single worker", d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  std::vector<void (*)()> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                   criterion_5, criterion_6, criterion_7, criterion_8,
                                   criterion_9, criterion_10, criterion_11};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& ex) {
      report(static_cast<int>(i + 1), false, "threw", ex.what());
    }
  }
  std::cout << (g_failures == 0 ? "all criteria pass" : std::to_string(g_failures) + " failing")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
