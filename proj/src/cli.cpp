#include "dynrefl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dynrefl/fixtures.hpp"
#include "dynrefl/workbench.hpp"

namespace dynrefl {

namespace {

struct Globals {
  unsigned workers = 0;
  std::uint64_t seed = 1;
  bool json_out = false;
  bool timing = false;
};

json error_json(const Error& e) {
  return {{"error", e.kind()}, {"message", e.what()}, {"witness", e.witness()}};
}

std::vector<std::string> split_checks(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.size() == 1 && out[0] == "all") return check_groups();
  for (const auto& c : out)
    if (std::find(check_groups().begin(), check_groups().end(), c) == check_groups().end())
      throw Error("UnknownCheck", "unknown check '" + c + "'", {c});
  return out;
}

json result_json(const CheckResult& r, bool timing) {
  json j{{"check", r.check}, {"passed", r.passed}, {"tuples", r.tuples}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& file, const std::string& checks,
               const std::string& replay_path, std::ostream& out) {
  auto wb = build_workbench(load_document(file));

  if (!replay_path.empty()) {
    std::ifstream in(replay_path);
    if (!in) throw Error("IOError", "cannot open '" + replay_path + "'");
    json w;
    try {
      w = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error("ParseError", e.what());
    }
    std::vector<json> ws = w.is_array() ? w.get<std::vector<json>>() : std::vector<json>{w};
    bool any = false;
    json rep = json::array();
    for (const auto& one : ws) {
      bool fails = replay_witness(wb, one);
      any = any || fails;
      rep.push_back({{"check", one.at("check")}, {"reproduced", fails}});
      if (!g.json_out)
        out << (fails ? "REPRODUCED " : "NOT-REPRODUCED ") << one.dump() << "\n";
    }
    if (g.json_out) out << json{{"replay", rep}}.dump(2) << "\n";
    return any ? kCounterexample : kPass;
  }

  // --check wins; otherwise the document's own list; otherwise everything.
  std::string spec = checks;
  if (spec.empty())
    for (const auto& c : wb.checks) spec += (spec.empty() ? "" : ",") + c;
  auto groups = split_checks(spec.empty() ? "all" : spec);

  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  json report{{"file", file}, {"groups", json::array()}};
  std::vector<Witness> witnesses;
  for (const auto& grp : groups) {
    auto r = run_group(wb, grp);
    json gj{{"group", grp}, {"checks", json::array()}, {"info", r.info}};
    for (const auto& c : r.results) {
      ok = ok && c.passed;
      gj["checks"].push_back(result_json(c, g.timing));
      if (c.witness) witnesses.push_back(*c.witness);
      if (!g.json_out) {
        out << (c.passed ? "PASS " : "FAIL ") << grp << "/" << c.check << " (" << c.tuples
            << " tuples";
        if (g.timing) out << ", " << c.wall_ms << " ms";
        out << ")\n";
      }
    }
    if (!g.json_out && !r.info.empty())
      for (auto it = r.info.begin(); it != r.info.end(); ++it)
        out << "  info " << grp << "." << it.key() << " = " << it.value().dump() << "\n";
    report["groups"].push_back(gj);
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["passed"] = ok;
  if (g.timing) report["wall_ms"] = ms;
  if (g.json_out) {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& w : witnesses) out << "witness " << witness_json(w).dump() << "\n";
    out << (ok ? "all checks passed" : "counterexample found");
    if (g.timing) out << " in " << ms << " ms";
    out << "\n";
  }
  return ok ? kPass : kCounterexample;
}

// ---- build ----------------------------------------------------------------

int cmd_build(const std::string& file, const std::string& what, const std::string& path,
              std::ostream& out) {
  auto wb = build_workbench(load_document(file));
  std::ostringstream os;
  if (what == "sigma") dump_sigma(os, wb);
  else if (what == "k") dump_k(os, wb);
  else if (what == "lifts") dump_lifts(os, wb);
  else if (what == "quiver") dump_quiver(os, wb);
  if (path.empty()) {
    out << os.str();
  } else {
    std::ofstream f(path);
    if (!f) throw Error("IOError", "cannot write '" + path + "'");
    f << os.str();
  }
  return kPass;
}

// ---- enumerate ------------------------------------------------------------

std::string family_label(const FiniteGroup& G, const HomFamily& F) {
  std::string s = "[";
  for (std::size_t x = 0; x < F.maps.size(); ++x) {
    if (x) s += "; ";
    for (std::size_t a = 0; a < F.maps[x].map.size(); ++a)
      s += (a ? " " : "") + G.carrier().label(F.maps[x].map[a]);
  }
  return s + "]";
}

int cmd_enumerate(const Globals& g, const std::string& file, std::uint64_t limit,
                  std::uint64_t cap, std::uint64_t sample, std::ostream& out,
                  std::ostream& err) {
  auto wb = build_workbench(load_document(file));
  const auto& S = wb.setting;
  const auto& G = S.base().P->G();
  auto ends = enumerate_endomorphisms(G, 64);
  const std::size_t nx = S.x_size();

  // |End(G)|^|X|, saturating at cap + 1.
  std::uint64_t total = 1;
  bool over = false;
  for (std::size_t i = 0; i < nx && !over; ++i) {
    total *= ends.size();
    if (total > cap) over = true;
  }
  std::uint64_t count = over ? cap : total;
  if (limit) count = std::min(count, limit);

  std::vector<std::uint64_t> indices;
  if (sample) {
    // Distinct random positions, listed in increasing order.
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < std::min<std::uint64_t>(sample, count)) chosen.insert(pick(rng));
    indices.assign(chosen.begin(), chosen.end());
  } else {
    for (std::uint64_t i = 0; i < count; ++i) indices.push_back(i);
  }

  std::uint64_t passed = 0, constant = 0;
  json fams = json::array();
  for (auto i : indices) {
    auto F = family_at(ends, nx, i);
    auto k = k_from_family(S, F);
    auto r = run_check(reflection_equation(S, k));
    bool lc = lambda_constant(k);
    passed += r.passed;
    constant += lc;
    json j{{"index", i}, {"family", family_label(G, F)}, {"reflection", r.passed},
           {"k_lambda_constant", lc}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    if (g.json_out)
      fams.push_back(j);
    else
      out << "family " << i << " " << family_label(G, F) << " RE "
          << (r.passed ? "pass" : "FAIL") << " k-constant " << (lc ? "yes" : "no") << "\n";
  }
  json summary{{"endomorphisms", ends.size()},
               {"families_total", over ? json("> " + std::to_string(cap)) : json(total)},
               {"checked", indices.size()},
               {"reflection_pass", passed},
               {"k_lambda_constant", constant},
               {"cap_exceeded", over}};
  if (g.json_out)
    out << json{{"families", fams}, {"summary", summary}}.dump(2) << "\n";
  else
    out << "summary: " << indices.size() << " families, " << passed << " pass RE, " << constant
        << " with lambda-constant k\n";
  if (over)
    err << error_json(Error("CapExceeded", "more than " + std::to_string(cap) +
                                               " families; results are partial"))
               .dump()
        << "\n";
  return passed == indices.size() ? kPass : kCounterexample;
}

// ---- reproduce ------------------------------------------------------------

struct Tally {
  bool json_out;
  std::ostream& out;
  json items = json::array();
  bool ok = true;

  void expect(const std::string& what, const std::string& got, const std::string& want) {
    bool match = got == want;
    ok = ok && match;
    items.push_back({{"item", what}, {"got", got}, {"expected", want}, {"match", match}});
    if (!json_out)
      out << (match ? "ok       " : "MISMATCH ") << what << ": " << got
          << (match ? "" : " (expected " + want + ")") << "\n";
  }
  void expect_differs(const std::string& what, const std::string& a, const std::string& b) {
    bool match = a != b;
    ok = ok && match;
    items.push_back({{"item", what}, {"got", a + " vs " + b}, {"expected", "distinct"},
                     {"match", match}});
    if (!json_out)
      out << (match ? "ok       " : "MISMATCH ") << what << ": " << a << " != " << b << "\n";
  }
  int finish(const std::string& name) {
    if (json_out)
      out << json{{"reproduce", name}, {"items", items}, {"passed", ok}}.dump(2) << "\n";
    else
      out << name << (ok ? ": all values match" : ": mismatches found") << "\n";
    return ok ? kPass : kCounterexample;
  }
};

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// Expected λ ·_X x on ex89 for λ = e, l1..l5 and x = x1, x2, x3.
const char* const kExpectedDot[6][3] = {
    {"l2", "l4", "l3"}, {"l4", "l2", "l3"}, {"l3", "l4", "l2"},
    {"l2", "l3", "l4"}, {"l4", "l3", "l2"}, {"l3", "l2", "l4"},
};

void expected_dot(Tally& t, const Workbench& wb) {
  const auto& X = *wb.setting.module.X;
  const auto& H = *wb.base.H;
  for (Index l = 0; l < 6; ++l)
    for (Index x = 0; x < 3; ++x)
      t.expect("dot " + H.label(l) + "." + X.factors()[0]->carrier.label(x),
               H.label(X.act(l, x)), kExpectedDot[l][x]);
}

int reproduce_53(const Globals& g, std::ostream& out) {
  Tally t{g.json_out, out};
  auto wb = build_workbench(load_document("@ex53"));
  const auto& P = *wb.base.P;
  const auto& H = *wb.base.H;
  auto at = [&](const char* s) { return H.index_of(s); };
  auto lab = [&](Index i) { return H.label(i); };
  t.expect("l2*l3", lab(P.mul(at("l2"), at("l3"))), "l1");
  t.expect("l3*l2", lab(P.mul(at("l3"), at("l2"))), "e");
  auto left = P.mul(P.mul(at("l1"), at("l2")), at("l3"));
  auto right = P.mul(at("l1"), P.mul(at("l2"), at("l3")));
  t.expect("(l1*l2)*l3", lab(left), "l2");
  t.expect("l1*(l2*l3)", lab(right), "l5");
  t.expect_differs("non-associativity", lab(left), lab(right));
  auto ex89 = build_workbench(load_document("@ex89"));
  expected_dot(t, ex89);
  return t.finish("example-5.3");
}

int reproduce_89(const Globals& g, std::ostream& out) {
  Tally t{g.json_out, out};
  auto wb = build_workbench(load_document("@ex89"));
  const auto& H = *wb.base.H;
  const auto& Y = *wb.k.source();
  auto k_at = [&](const char* l, const char* a, const char* x) {
    Index in = Y.flatten({H.index_of(a), Y.factors()[1]->carrier.index_of(x)});
    return Y.label(wb.k(H.index_of(l), in));
  };
  t.expect("k(l1)(l2,x2)", k_at("l1", "l2", "x2"), "(l2,x2)");
  t.expect("k(l3)(l2,x2)", k_at("l3", "l2", "x2"), "(l5,x1)");
  expected_dot(t, wb);
  return t.finish("example-8.9");
}

int reproduce_zn(const Globals& g, std::ostream& out) {
  Tally t{g.json_out, out};
  auto wb = build_workbench(load_document("@zn3"));
  const auto& sigma = wb.setting.sigma.sigma;
  const auto& LL = *sigma.source();
  const auto& H = *wb.base.H;
  const Index n = static_cast<Index>(wb.base.n());
  for (Index l = 0; l < n; ++l)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        t.expect("sigma(" + H.label(l) + ")" + LL.label(a * n + b), LL.label(sigma(l, a * n + b)),
                 pair_label(H.label(b), H.label(a)));
  const auto& Y = *wb.k.source();
  for (Index l = 0; l < n; ++l)
    for (Index y = 0; y < Y.size(); ++y)
      t.expect("k(" + H.label(l) + ")" + Y.label(y), Y.label(wb.k(l, y)), Y.label(y));
  return t.finish("zn-flip");
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& file, std::ostream& out) {
  auto wb = build_workbench(load_document(file));
  json j{{"valid", true},
         {"L", wb.base.n()},
         {"X", wb.setting.x_size()},
         {"module", wb.setting.module.kind},
         {"family", wb.family_kind}};
  if (g.json_out)
    out << j.dump(2) << "\n";
  else
    out << "valid: |L| = " << wb.base.n() << ", |X| = " << wb.setting.x_size()
        << ", module " << wb.setting.module.kind << ", family " << wb.family_kind << "\n";
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamical Yang-Baxter and reflection maps over finite left quasigroups",
               "dynrefl"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (default: DYNREFL_WORKERS or all cores)");
  app.add_option("--seed", g.seed, "Seed for sampled enumeration");
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_flag("--timing", g.timing, "Report wall times");

  std::string file, what, out_path, checks, replay_path, name;
  std::uint64_t limit = 0, cap = 1000000, sample = 0;
  bool families = false;

  auto* validate = app.add_subcommand("validate", "Validate an input document");
  validate->add_option("file", file, "Document path or @ex53/@ex89/@zn3")->required();

  auto* build = app.add_subcommand("build", "Dump sigma, k, lifts or quiver tables");
  build->add_option("file", file)->required();
  build->add_option("--what", what)->required()->check(
      CLI::IsMember({"sigma", "k", "lifts", "quiver"}));
  build->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("file", file)->required();
  verify->add_option("--check", checks, "Comma-separated check groups, or all");
  verify->add_option("--replay", replay_path, "Replay a witness JSON file");

  auto* enumerate = app.add_subcommand("enumerate", "Sweep hom families");
  enumerate->add_option("file", file)->required();
  enumerate->add_flag("--families", families, "Enumerate End(G)^X")->required();
  enumerate->add_option("--limit", limit, "Stop after N families");
  enumerate->add_option("--cap", cap, "Refuse to go beyond N families");
  enumerate->add_option("--sample", sample, "Check N random families (uses --seed)");

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the worked examples");
  reproduce->add_option("name", name)->required()->check(
      CLI::IsMember({"example-5.3", "example-8.9", "zn-flip"}));

  for (auto* sub : {validate, build, verify, enumerate, reproduce}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  if (g.workers) set_workers(g.workers);

  try {
    if (*validate) return cmd_validate(g, file, out);
    if (*build) return cmd_build(file, what, out_path, out);
    if (*verify) return cmd_verify(g, file, checks, replay_path, out);
    if (*enumerate) return cmd_enumerate(g, file, limit, cap, sample, out, err);
    if (name == "example-5.3") return reproduce_53(g, out);
    if (name == "example-8.9") return reproduce_89(g, out);
    return reproduce_zn(g, out);
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << error_json(Error("SchemaError", e.what())).dump() << "\n";
    return kInputError;
  }
}

}  // namespace dynrefl
