#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

#include "dynrefl/cli.hpp"
#include "dynrefl/fixtures.hpp"
#include "dynrefl/workbench.hpp"

using namespace dynrefl;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& doc) {
  auto p = std::filesystem::temp_directory_path() / ("dynrefl_test_" + name + ".json");
  std::ofstream(p) << doc.dump();
  return p.string();
}

json ex89_with(const json& override) {
  auto d = load_document("@ex89");
  d["overrides"] = json::array({override});
  return d;
}

}  // namespace

TEST_CASE("compiled documents match the compiled fixtures") {
  auto wb53 = build_workbench(load_document("@ex53"));
  auto f53 = fixtures::ex53();
  CHECK(wb53.base.P->L().table() == f53.P->L().table());
  CHECK(wb53.base.P->pi_table() == f53.P->pi_table());

  auto wb89 = build_workbench(load_document("@ex89"));
  auto f89 = fixtures::ex89();
  CHECK(wb89.setting.module.action.table() == f89.setting.module.action.table());
  CHECK(wb89.family == f89.family);
  const auto& X = *wb89.setting.module.X;
  for (Index l = 0; l < 6; ++l)
    for (Index x = 0; x < 3; ++x) CHECK(X.act(l, x) == f89.expected_dot[l * 3 + x]);

  auto wbz = build_workbench(load_document("@zn3"));
  CHECK(wbz.base.P->L().table() == fixtures::zn3().P->L().table());
  CHECK(wbz.family_kind == "identity");
}

TEST_CASE("validate") {
  CHECK(cli({"validate", "@ex89"}).code == kPass);
  auto d = load_document("@ex53");
  d["quasigroup"]["table"][1] = {"l1", "l1", "l3", "l4", "l2", "e"};
  auto r = cli({"validate", write_temp("latin", d)});
  CHECK(r.code == kInputError);
  auto j = json::parse(r.err);
  CHECK(j["error"] == "RowNotPermutation");

  auto small = load_document("@ex53");
  small["group"] = {{"cyclic", 5}};
  CHECK(cli({"validate", write_temp("size", small)}).code == kInputError);

  auto bad_label = load_document("@zn3");
  bad_label["pi"]["1"] = "7";
  r = cli({"validate", write_temp("label", bad_label)});
  CHECK(r.code == kInputError);
  CHECK(json::parse(r.err)["error"] == "UnknownLabel");

  CHECK(cli({"validate", "/nonexistent/doc.json"}).code == kInputError);
  CHECK(cli({"frobnicate"}).code == kInputError);
}

TEST_CASE("reproduce") {
  for (const char* name : {"example-5.3", "example-8.9", "zn-flip"}) {
    auto r = cli({"reproduce", name});
    INFO(r.out);
    CHECK(r.code == kPass);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
  }
  auto r = cli({"--json", "reproduce", "example-8.9"});
  auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["items"][0]["item"] == "k(l1)(l2,x2)");
  CHECK(j["items"][0]["got"] == "(l2,x2)");
}

TEST_CASE("build dumps") {
  auto r = cli({"build", "@ex53", "--what", "sigma"});
  CHECK(r.code == kPass);
  std::istringstream in(r.out);
  auto d = read_table_dump(in);
  auto& block = d.at("sigma").at("e");
  CHECK(std::find(block.begin(), block.end(), std::pair<std::string, std::string>{
                                                  "(l1,l2)", "(l5,l5)"}) != block.end());

  r = cli({"build", "@ex89", "--what", "k"});
  std::istringstream ink(r.out);
  auto dk = read_table_dump(ink);
  auto& kb = dk.at("k").at("l1");
  CHECK(std::find(kb.begin(), kb.end(),
                  std::pair<std::string, std::string>{"(l2,x2)", "(l2,x2)"}) != kb.end());

  r = cli({"build", "@zn3", "--what", "sigma"});
  std::istringstream inz(r.out);
  auto dz = read_table_dump(inz);
  for (const auto& [lambda, rows] : dz.at("sigma"))
    for (const auto& [a, b] : rows) CHECK(b == "(" + a.substr(3, 1) + "," + a.substr(1, 1) + ")");

  CHECK(cli({"build", "@ex89", "--what", "lifts"}).code == kPass);
  CHECK(cli({"build", "@ex89", "--what", "quiver"}).code == kPass);
  CHECK(cli({"build", "@ex89", "--what", "nonsense"}).code == kInputError);
}

TEST_CASE("dump round trip equals the in-memory tables") {
  for (const char* doc : {"@ex53", "@ex89", "@zn3"}) {
    auto wb = build_workbench(load_document(doc));
    std::ostringstream os;
    dump_sigma(os, wb);
    dump_k(os, wb);
    std::istringstream is(os.str());
    auto d = read_table_dump(is);
    for (const auto& [section, f] :
         {std::pair{std::string("sigma"), wb.setting.sigma.sigma}, std::pair{std::string("k"), wb.k}}) {
      const auto& H = *wb.base.H;
      REQUIRE(d.at(section).size() == H.size());
      for (Index l = 0; l < H.size(); ++l) {
        const auto& rows = d.at(section).at(H.label(l));
        REQUIRE(rows.size() == f.source()->size());
        for (Index x = 0; x < rows.size(); ++x) {
          CHECK(rows[x].first == f.source()->label(x));
          CHECK(rows[x].second == f.target()->label(f(l, x)));
        }
      }
    }
  }
}

TEST_CASE("verify exit codes and witnesses") {
  CHECK(cli({"verify", "@ex89", "--check", "all"}).code == kPass);
  CHECK(cli({"verify", "@ex53", "--check", "braid,monoid"}).code == kPass);
  CHECK(cli({"verify", "@ex89", "--check", "nope"}).code == kInputError);

  auto bad = write_temp("badk", ex89_with({{"target", "k"}, {"lambda", "l1"},
                                           {"input", {"l2", "x2"}}, {"output", {"l3", "x2"}}}));
  auto r = cli({"--json", "verify", bad, "--check", "all"});
  CHECK(r.code == kCounterexample);
  auto rep = json::parse(r.out);
  json witness;
  for (const auto& g : rep["groups"])
    for (const auto& c : g["checks"])
      if (!c["passed"] && witness.is_null()) witness = c["witness"];
  REQUIRE_FALSE(witness.is_null());
  for (const char* key : {"check", "lambda", "inputs", "lhs", "rhs"}) CHECK(witness.contains(key));
  auto wpath = write_temp("witness", witness);
  CHECK(cli({"verify", bad, "--replay", wpath}).code == kCounterexample);
  CHECK(cli({"verify", "@ex89", "--replay", wpath}).code == kPass);
}

TEST_CASE("reports do not depend on the worker count") {
  auto bad = write_temp("bads", ex89_with({{"target", "sigma"}, {"lambda", "l2"},
                                           {"input", {"l1", "l3"}}, {"output", {"e", "e"}}}));
  auto one = cli({"--workers", "1", "--json", "verify", bad});
  auto many = cli({"--workers", "6", "--json", "verify", bad});
  CHECK(one.code == kCounterexample);
  CHECK(one.out == many.out);
}

TEST_CASE("brace report on Z/3") {
  auto r = cli({"--json", "verify", "@zn3", "--check", "brace"});
  CHECK(r.code == kPass);
  auto info = json::parse(r.out)["groups"][0]["info"];
  CHECK(info["skew_brace"] == true);
  CHECK(info["sigma_lambda_constant"] == true);
  CHECK(info["sigma_is_flip"] == true);
}

TEST_CASE("enumerate") {
  auto r = cli({"--json", "enumerate", "@zn3", "--families"});
  CHECK(r.code == kPass);
  auto j = json::parse(r.out);
  CHECK(j["summary"]["checked"] == 3);
  CHECK(j["summary"]["reflection_pass"] == 3);

  r = cli({"--json", "enumerate", "@ex89", "--families", "--limit", "100"});
  CHECK(r.code == kPass);
  j = json::parse(r.out);
  CHECK(j["summary"]["checked"] == 100);
  CHECK(j["summary"]["reflection_pass"] == 100);
  CHECK(j["summary"]["families_total"] == 1000);

  r = cli({"--json", "enumerate", "@ex89", "--families", "--cap", "50"});
  j = json::parse(r.out);
  CHECK(j["summary"]["cap_exceeded"] == true);
  CHECK(j["summary"]["checked"] == 50);
  CHECK(json::parse(r.err)["error"] == "CapExceeded");

  auto a = cli({"--seed", "5", "--json", "enumerate", "@ex89", "--families", "--sample", "10"});
  auto b = cli({"--seed", "5", "--json", "enumerate", "@ex89", "--families", "--sample", "10"});
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["summary"]["checked"] == 10);
}

TEST_CASE("document variants") {
  auto d = load_document("@zn3");
  d["module"] = {{"kind", "map-ll"}, {"g", {{"constant", "1"}}}};
  d["family"] = {{"kind", "inverse"}};
  d["checks"] = {"module", "boundary", "reflection"};
  CHECK(cli({"verify", write_temp("mapll", d)}).code == kPass);

  auto e = load_document("@zn3");
  e["group"] = {{"labels", {"a", "b", "c"}},
                {"table", {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}}};
  e["pi"] = {"a", "b", "c"};
  e["family"] = {{"kind", "explicit"}, {"maps", {{"x", {{"a", "a"}, {"b", "c"}, {"c", "b"}}}}}};
  auto wb = build_workbench(e);
  CHECK(wb.family.maps[0].map == std::vector<Index>{0, 2, 1});
  CHECK(cli({"verify", write_temp("explicit", e)}).code == kPass);

  auto p = load_document("@ex53");
  p["group"] = {{"product", {{{"cyclic", 2}}, {{"cyclic", 3}}}}};
  p["pi"] = {"(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)"};
  CHECK(cli({"verify", write_temp("product", p), "--check", "braid,monoid,reflection"}).code ==
        kPass);

  auto inner = load_document("@ex89");
  inner["family"]["g"] = {{"default", "(12)"}};
  auto S3 = symmetric_group(3);
  Index t = S3.resolve("(12)");
  CHECK(build_workbench(inner).family == family_inner(S3, {t, t, t}));
}

TEST_CASE("every single-entry corruption is a counterexample, never an input error") {
  auto wb = build_workbench(load_document("@ex89"));
  const auto& H = *wb.base.H;
  auto labels_of = [](const SetHObject& o, Index v) {
    json parts = json::array();
    auto cs = o.components(v);
    for (std::size_t i = 0; i < cs.size(); ++i)
      parts.push_back(o.factors()[i]->carrier.label(cs[i]));
    return parts.size() == 1 ? parts[0] : parts;
  };
  std::mt19937_64 rng(404);
  for (const char* target : {"sigma", "k", "mX"}) {
    const SetHMorphism& f = std::string(target) == "sigma" ? wb.setting.sigma.sigma
                            : std::string(target) == "k"   ? wb.k
                                                           : wb.setting.module.action;
    for (int t = 0; t < 6; ++t) {
      Index l = rng() % H.size(), x = rng() % f.source()->size();
      Index y = (f(l, x) + 1 + rng() % (f.target()->size() - 1)) % f.target()->size();
      auto doc = ex89_with({{"target", target},
                            {"lambda", H.label(l)},
                            {"input", labels_of(*f.source(), x)},
                            {"output", labels_of(*f.target(), y)}});
      auto r = cli({"verify", write_temp("corrupt", doc)});
      INFO(target << " " << doc["overrides"].dump() << " " << r.err);
      CHECK(r.code == kCounterexample);
    }
  }
}
