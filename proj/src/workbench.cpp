#include "dynrefl/workbench.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dynrefl {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error("SchemaError", msg); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const std::string& what) {
  if (!j.is_string()) schema(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> str_list(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(str(v, what + " entry"));
  return out;
}

Index lookup(const Carrier& c, const std::string& label) { return c.index_of(label); }

GroupSpec parse_group_spec(const json& j) {
  if (!j.is_object()) schema("group must be an object");
  if (j.contains("symmetric")) return {SymmetricGroup{j["symmetric"].get<unsigned>()}};
  if (j.contains("cyclic")) return {CyclicGroup{j["cyclic"].get<unsigned>()}};
  if (j.contains("product")) {
    const auto& p = j["product"];
    if (!p.is_array() || p.size() != 2) schema("product needs exactly two factors");
    return {ProductGroup{std::make_shared<GroupSpec>(parse_group_spec(p[0])),
                         std::make_shared<GroupSpec>(parse_group_spec(p[1]))}};
  }
  if (j.contains("labels") && j.contains("table")) {
    auto labels = str_list(j["labels"], "group labels");
    Carrier c(labels);
    std::vector<Index> table;
    const auto& t = j["table"];
    if (!t.is_array() || t.size() != labels.size()) schema("group table has wrong row count");
    for (const auto& row : t) {
      auto r = str_list(row, "group table row");
      if (r.size() != labels.size()) schema("group table has wrong column count");
      for (const auto& v : r) table.push_back(lookup(c, v));
    }
    return {ExplicitGroup{labels, table}};
  }
  schema("group must give symmetric, cyclic, product, or labels and table");
}

LeftQuasigroup parse_quasigroup(const json& j) {
  auto labels = str_list(need(j, "labels"), "quasigroup labels");
  Carrier c(labels);
  const auto& t = need(j, "table");
  if (!t.is_array() || t.size() != labels.size())
    throw Error("SizeMismatch", "quasigroup table must have one row per label");
  std::vector<Index> table;
  for (const auto& row : t) {
    auto r = str_list(row, "quasigroup row");
    if (r.size() != labels.size())
      throw Error("SizeMismatch", "quasigroup table must be square");
    for (const auto& v : r) table.push_back(lookup(c, v));
  }
  Index unit = lookup(c, str(need(j, "unit"), "unit"));
  return LeftQuasigroup::validate(labels, table, unit);
}

std::vector<Index> parse_pi(const json& j, const LeftQuasigroup& L, const FiniteGroup& G) {
  std::vector<Index> pi(L.size(), 0);
  if (j.is_object()) {
    if (j.size() != L.size()) throw Error("SizeMismatch", "pi must map every element of L");
    std::vector<bool> seen(L.size(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
      Index a = lookup(L.carrier(), it.key());
      seen[a] = true;
      pi[a] = G.resolve(str(it.value(), "pi value"));
    }
  } else if (j.is_array()) {
    if (j.size() != L.size()) throw Error("SizeMismatch", "pi must map every element of L");
    for (Index a = 0; a < L.size(); ++a) pi[a] = G.resolve(str(j[a], "pi value"));
  } else {
    schema("pi must be an object or an array");
  }
  return pi;
}

LeftModule parse_module(const json& j, const Base& B) {
  const std::string kind = j.is_null() ? "left-regular" : str(need(j, "kind"), "module kind");
  const auto& H = *B.H;
  if (kind == "left-regular") return left_regular(build_monoid(B));
  if (kind == "one-point") return one_point(B, lookup(H, str(need(j, "lambda1"), "lambda1")));
  if (kind == "map-ll") {
    MapSelector g;
    const auto& gj = need(j, "g");
    if (gj.contains("constant")) {
      g.kind = MapSelector::Kind::Constant;
      g.value = lookup(H, str(gj["constant"], "g.constant"));
    } else if (gj.contains("evaluate")) {
      g.kind = MapSelector::Kind::Evaluate;
      g.value = lookup(H, str(gj["evaluate"], "g.evaluate"));
    } else if (gj.contains("table")) {
      g.kind = MapSelector::Kind::Table;
      for (const auto& v : str_list(gj["table"], "g.table")) g.table.push_back(lookup(H, v));
    } else {
      schema("map-ll g must be constant, evaluate or table");
    }
    std::size_t cap = j.value("cap", std::size_t{5});
    return map_ll(B, g, cap);
  }
  if (kind == "action") {
    auto xs = str_list(need(j, "X"), "X");
    Carrier X(xs);
    const auto& t = need(j, "table");
    if (!t.is_array() || t.size() != B.n())
      throw Error("SizeMismatch", "action table needs one row per element of L");
    std::vector<Index> act;
    for (const auto& row : t) {
      auto r = str_list(row, "action row");
      if (r.size() != xs.size()) throw Error("SizeMismatch", "action row has wrong length");
      for (const auto& v : r) act.push_back(lookup(X, v));
    }
    const auto& fj = need(j, "f");
    std::vector<Index> f(xs.size(), 0);
    if (!fj.is_object() || fj.size() != xs.size())
      throw Error("SizeMismatch", "f must map every element of X");
    for (auto it = fj.begin(); it != fj.end(); ++it)
      f[lookup(X, it.key())] = lookup(H, str(it.value(), "f value"));
    return from_action(B, X, act, f);
  }
  schema("unknown module kind '" + kind + "'");
}

HomFamily parse_family(const json& j, const ModuleSetting& S, std::string& kind) {
  const auto& G = S.base().P->G();
  const auto& X = S.module.X->factors()[0]->carrier;
  kind = j.is_null() ? "trivial" : str(need(j, "kind"), "family kind");
  if (kind == "trivial") return family_trivial(G, X.size());
  if (kind == "identity") return family_identity(G, X.size());
  if (kind == "inverse") return family_inverse(G, X.size());
  if (kind == "inner") {
    const auto& gj = need(j, "g");
    if (!gj.is_object()) schema("inner g must be an object");
    std::optional<Index> fallback;
    if (gj.contains("default")) fallback = G.resolve(str(gj["default"], "g.default"));
    std::vector<Index> g;
    for (Index x = 0; x < X.size(); ++x) {
      if (gj.contains(X.label(x)))
        g.push_back(G.resolve(str(gj[X.label(x)], "g value")));
      else if (fallback)
        g.push_back(*fallback);
      else
        throw Error("UnknownLabel", "inner family has no element for '" + X.label(x) + "'",
                    {X.label(x)});
    }
    return family_inner(G, g);
  }
  if (kind == "explicit") {
    const auto& mj = need(j, "maps");
    std::vector<GroupEndomorphism> maps;
    for (Index x = 0; x < X.size(); ++x) {
      const auto& m = need(mj, X.label(x).c_str());
      GroupEndomorphism f{std::vector<Index>(G.size(), 0)};
      if (!m.is_object() || m.size() != G.size())
        throw Error("SizeMismatch", "explicit map for '" + X.label(x) + "' is not total");
      for (auto it = m.begin(); it != m.end(); ++it)
        f.map[G.resolve(it.key())] = G.resolve(str(it.value(), "map value"));
      maps.push_back(std::move(f));
    }
    return family_explicit(G, X, std::move(maps));
  }
  schema("unknown family kind '" + kind + "'");
}

std::vector<Index> labels_to_parts(const SetHObject& obj, const json& j) {
  auto labels = j.is_array() ? str_list(j, "override tuple")
                             : std::vector<std::string>{str(j, "override value")};
  if (labels.size() != obj.factors().size())
    throw Error("SizeMismatch", "override tuple has the wrong arity");
  std::vector<Index> parts;
  for (std::size_t k = 0; k < labels.size(); ++k)
    parts.push_back(lookup(obj.factors()[k]->carrier, labels[k]));
  return parts;
}

SetHMorphism apply_override(const SetHMorphism& f, const json& o) {
  Index l = lookup(*f.source()->H(), str(need(o, "lambda"), "override lambda"));
  Index x = f.source()->flatten(labels_to_parts(*f.source(), need(o, "input")));
  Index y = f.target()->flatten(labels_to_parts(*f.target(), need(o, "output")));
  return f.with_entry(l, x, y);
}

}  // namespace

json load_document(const std::string& path) {
  if (!path.empty() && path[0] == '@') {
    auto text = builtin_document(path.substr(1));
    if (!text) throw Error("UnknownFixture", "no built-in document '" + path + "'");
    return json::parse(*text);
  }
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
}

Workbench build_workbench(const json& doc) {
  try {
    if (!doc.is_object()) schema("document must be a JSON object");
    auto L = parse_quasigroup(need(doc, "quasigroup"));
    auto G = build_named_group(parse_group_spec(need(doc, "group")));
    auto pi = parse_pi(need(doc, "pi"), L, G);
    auto B = make_base(PairedStructure::validate(std::move(L), std::move(G), std::move(pi)));
    auto mod = parse_module(doc.contains("module") ? doc["module"] : json(), B);

    std::vector<json> overrides;
    if (doc.contains("overrides"))
      for (const auto& o : doc["overrides"]) overrides.push_back(o);
    for (const auto& o : overrides)
      if (str(need(o, "target"), "override target") == "mX")
        mod.action = apply_override(mod.action, o);

    auto S = make_setting(B, std::move(mod));
    for (const auto& o : overrides)
      if (o["target"] == "sigma") S.sigma.sigma = apply_override(S.sigma.sigma, o);

    std::string kind;
    auto F = parse_family(doc.contains("family") ? doc["family"] : json(), S, kind);
    auto k = k_from_family(S, F);
    for (const auto& o : overrides) {
      auto t = o["target"].get<std::string>();
      if (t == "k") k = apply_override(k, o);
      else if (t != "sigma" && t != "mX") schema("override target must be sigma, k or mX");
    }
    std::vector<std::string> checks;
    if (doc.contains("checks")) checks = str_list(doc["checks"], "checks");
    return {B, std::move(S), std::move(F), kind, std::move(k), std::move(checks)};
  } catch (const json::exception& e) {
    throw Error("SchemaError", e.what());
  }
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g{"braid",      "monoid", "module", "boundary",
                                          "reflection", "brace",  "quiver"};
  return g;
}

namespace {

/// A check with no quantified variables; `note` explains a failure.
Identity nullary(const std::string& id, bool ok, const std::string& note) {
  Identity I;
  I.id = id;
  I.lambda_first = false;
  I.holds = [ok](const Index*) { return ok; };
  I.sides = [note](const Index*) { return std::pair{note, std::string("holds")}; };
  return I;
}

std::vector<Identity> roundtrip_identities(const Workbench& wb) {
  const auto& S = wb.setting;
  std::vector<Identity> out;
  auto direct = my_from_family(S, wb.family);
  try {
    Layer l = wb.family;
    for (int i = 0; i < 5; ++i) l = correspondence_step(S, l, Direction::TowardAction);
    const auto& mY = std::get<ModuleAction>(l).mY;
    out.push_back(nullary("roundtrip-chain-matches-direct", mY == direct,
                          "m_Y through the chain differs from the direct formula"));
    for (int i = 0; i < 5; ++i) l = correspondence_step(S, l, Direction::TowardFamily);
    out.push_back(nullary("roundtrip-family", std::get<HomFamily>(l) == wb.family,
                          "family -> m_Y -> family is not the identity"));
    // Starting from the other end and from the middle layers.
    Layer t = ThetaAction{theta_of(S, direct)};
    auto br = std::get<BracketTable>(correspondence_step(S, t, Direction::TowardFamily));
    auto th = std::get<ThetaAction>(correspondence_step(S, br, Direction::TowardAction));
    out.push_back(nullary("roundtrip-theta", th.theta == theta_of(S, direct),
                          "theta -> bracket -> theta is not the identity"));
    auto beta = beta_from_bracket(S, br);
    auto back = std::get<BetaTable>(correspondence_step(
        S, correspondence_step(S, beta, Direction::TowardAction), Direction::TowardFamily));
    out.push_back(nullary("roundtrip-beta", back == beta,
                          "beta -> bracket -> beta is not the identity"));
    auto pi = pi_from_family(S, wb.family);
    auto piback = std::get<PiTable>(correspondence_step(
        S, correspondence_step(S, pi, Direction::TowardAction), Direction::TowardFamily));
    out.push_back(nullary("roundtrip-Pi", piback == pi, "Pi -> beta -> Pi is not the identity"));
  } catch (const Error& e) {
    out.push_back(nullary("roundtrip-chain", false, e.what()));
  }
  return out;
}

}  // namespace

std::vector<Identity> group_identities(const Workbench& wb, const std::string& group) {
  const auto& S = wb.setting;
  const auto& sigma = S.sigma.sigma;
  std::vector<Identity> out;
  auto add = [&](std::vector<Identity> ids) {
    for (auto& i : ids) out.push_back(std::move(i));
  };
  if (group == "braid") {
    out.push_back(braid_relation(sigma));
  } else if (group == "monoid") {
    add(braided_monoid_identities(S.monoid, sigma));
    add(twisted_monoid_identities(twisted_monoid(S)));
  } else if (group == "module") {
    add(check_left_module_ids(S.monoid, S.module));
    add(module_identities("mY-triv-", S.monoid, lift_trivial(S)));
    add(module_identities("mY-sigma-", S.monoid, lift_sigma(S)));
    add(family_identities(S, wb.family));
    auto mY = my_from_family(S, wb.family);
    add(action_identities(S, mY));
    add(theta_identities(S, theta_of(S, mY)));
    add(roundtrip_identities(wb));
  } else if (group == "boundary") {
    add(boundary_identities(S, wb.k));
    out.push_back(nullary("k-from-mY", k_from_my(S, my_from_family(S, wb.family)) == wb.k,
                          "k from m_Y differs from k from the family"));
  } else if (group == "reflection") {
    out.push_back(reflection_equation(S, wb.k));
  } else if (group == "brace") {
    auto br = analyze_brace(wb.base);
    out.push_back(nullary("brace-equivalence", br.equivalence_holds,
                          "sigma constancy and the brace condition disagree"));
    if (br.closed_form_matches)
      out.push_back(nullary("brace-closed-form", *br.closed_form_matches,
                            "closed-form sigma differs from the built sigma"));
    if (br.is_brace && lambda_constant(S.module.action)) {
      auto kc = check_k_constant(S, wb.k, wb.family);
      out.push_back(nullary("k-constancy-equivalence", kc.equivalent,
                            "k constancy and its criterion disagree"));
      if (kc.closed_form_matches)
        out.push_back(nullary("k-closed-form", *kc.closed_form_matches,
                              "closed-form k differs from the built k"));
    }
  } else if (group == "quiver") {
    add(quiver_identities(S, wb.k));
  } else {
    throw Error("UnknownCheck", "unknown check '" + group + "'", {group});
  }
  return out;
}

GroupReport run_group(const Workbench& wb, const std::string& group) {
  GroupReport r;
  r.group = group;
  r.results = run_all(group_identities(wb, group));
  r.info = json::object();
  const auto& H = *wb.base.H;
  if (group == "brace") {
    auto br = analyze_brace(wb.base);
    r.info["quasigroup_is_group"] = br.is_group;
    if (br.associativity_witness) {
      auto [a, b, c] = *br.associativity_witness;
      r.info["associativity_witness"] = {H.label(a), H.label(b), H.label(c)};
    }
    r.info["pi_preserves_unit"] = br.pi_unit;
    r.info["brace_condition"] = br.condition;
    if (br.condition_witness) {
      auto [a, b, c] = *br.condition_witness;
      r.info["brace_condition_witness"] = {H.label(a), H.label(b), H.label(c)};
    }
    r.info["skew_brace"] = br.is_brace;
    r.info["sigma_lambda_constant"] = br.sigma_constant;
    r.info["k_lambda_constant"] = lambda_constant(wb.k);
    bool flip = true;
    const Index n = static_cast<Index>(wb.base.n());
    for (Index l = 0; l < n; ++l)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          flip = flip && wb.setting.sigma.sigma(l, a * n + b) == b * n + a;
    r.info["sigma_is_flip"] = flip;
    if (!br.is_brace)
      r.info["k_constancy_criterion"] = "not applicable: not a skew brace";
    else if (!lambda_constant(wb.setting.module.action))
      r.info["k_constancy_criterion"] = "not applicable: m_X depends on lambda";
    else
      r.info["k_constancy_criterion"] = check_k_constant(wb.setting, wb.k, wb.family).condition;
  } else if (group == "module") {
    auto t = lift_trivial(wb.setting);
    r.info["triv_triv_braid_commute"] =
        run_check(braid_commute("triv-triv", t, t, wb.setting.sigma.sigma)).passed;
  }
  return r;
}

json witness_json(const Witness& w) {
  json j;
  j["check"] = w.check;
  j["lambda"] = w.lambda ? json(*w.lambda) : json(nullptr);
  j["inputs"] = w.inputs;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

bool replay_witness(const Workbench& wb, const json& w) {
  const auto check = w.at("check").get<std::string>();
  Witness wt;
  wt.check = check;
  if (w.contains("lambda") && !w["lambda"].is_null()) wt.lambda = w["lambda"].get<std::string>();
  wt.inputs = w.value("inputs", std::vector<std::string>{});
  for (const auto& g : check_groups())
    for (const auto& id : group_identities(wb, g))
      if (id.id == check) return replay(id, wt);
  throw Error("UnknownCheck", "no check named '" + check + "'", {check});
}

namespace {

void dump_endo(std::ostream& os, const std::string& section, const SetHMorphism& f) {
  os << "# " << section << "\n";
  const auto& H = *f.source()->H();
  for (Index l = 0; l < f.source()->h_size(); ++l) {
    os << "lambda " << H.label(l) << "\n";
    for (Index x = 0; x < f.source()->size(); ++x)
      os << f.source()->label(x) << " -> " << f.target()->label(f(l, x)) << "\n";
  }
}

void dump_quiver_map(std::ostream& os, const std::string& section, const QuiverMorphism& f) {
  os << "# " << section << "\n";
  const auto& H = *f.source->H;
  for (Index l = 0; l < H.size(); ++l) {
    os << "lambda " << H.label(l) << "\n";
    for (Index a = 0; a < f.source->size(); ++a)
      if (f.source->src[a] == l)
        os << f.source->labels[a] << " -> " << f.target->labels[f(a)] << "\n";
  }
}

}  // namespace

void dump_sigma(std::ostream& os, const Workbench& wb) {
  dump_endo(os, "sigma", wb.setting.sigma.sigma);
}

void dump_k(std::ostream& os, const Workbench& wb) { dump_endo(os, "k", wb.k); }

void dump_lifts(std::ostream& os, const Workbench& wb) {
  dump_endo(os, "mY-triv", lift_trivial(wb.setting));
  dump_endo(os, "mY-sigma", lift_sigma(wb.setting));
}

void dump_quiver(std::ostream& os, const Workbench& wb) {
  auto q = lift_setting(wb.setting, wb.k);
  dump_quiver_map(os, "quiver-sigma", q.sigma);
  dump_quiver_map(os, "quiver-k", q.k);
}

TableDump read_table_dump(std::istream& is) {
  TableDump d;
  std::string line, section, lambda;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      section = line.substr(2);
      d[section];
    } else if (line.rfind("lambda ", 0) == 0) {
      lambda = line.substr(7);
      d[section][lambda];
    } else {
      auto arrow = line.find(" -> ");
      if (arrow == std::string::npos) throw Error("ParseError", "bad dump line: " + line);
      d[section][lambda].emplace_back(line.substr(0, arrow), line.substr(arrow + 4));
    }
  }
  return d;
}

}  // namespace dynrefl
