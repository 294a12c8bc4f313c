#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json.hpp"
#include "logdiv/arrange.hpp"
#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"
#include "logdiv/jacmod.hpp"
#include "logdiv/liouville_check.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/resolve.hpp"

using json = nlohmann::json;
using namespace logdiv;

namespace {

constexpr int kExitOk = 0, kExitInput = 1, kExitHypothesis = 2, kExitBudget = 3, kExitMismatch = 4;

struct Config {
  std::string input;
  std::string poly, vars, weights, order = "", forms, arrangement;
  long max_degree = -1, max_pairs = -1;
  double seconds = 1800;
  std::string format = "json";
  bool no_cache = false, verify_cache = false;
  int form_degree = 1;
  std::string omega_kind = "log";
  std::string point;
  std::string zeta_model = "minimal";
  long max_a = -1, max_b = 3;
  int rounds = 4;
  long max_elements = 5000;
  bool seed_all = false;
  std::string example;

  Budget budget() const { return {max_degree, max_pairs, seconds}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

OrderKind order_kind(const std::string& s) {
  if (s.empty() || s == "grevlex") return OrderKind::GRevLex;
  if (s == "lex") return OrderKind::Lex;
  if (s == "wgrevlex" || s == "weighted-grevlex") return OrderKind::WeightedGRevLex;
  throw InputError("unknown monomial order '" + s + "'");
}

RingPtr make_ring(const std::vector<std::string>& names, const std::string& weights, const std::string& order) {
  if (names.empty()) throw InputError("no variables given");
  std::vector<int> w;
  for (const auto& t : split_list(weights)) {
    try {
      w.push_back(std::stoi(t));
    } catch (const std::exception&) {
      throw InputError("bad weight '" + t + "'");
    }
  }
  if (!w.empty() && w.size() != names.size()) throw InputError("weight count does not match variable count");
  for (int x : w)
    if (x <= 0) throw InputError("weights must be positive");
  return PolyRing::make(names, w, order_kind(order));
}

Arrangement load_arrangement(const Config& c) {
  if (!c.forms.empty()) {
    auto names = split_list(c.vars);
    RingPtr r = make_ring(names.empty() ? std::vector<std::string>{"x", "y", "z"} : names, "", "");
    std::vector<Polynomial> forms;
    std::vector<int> mult;
    std::stringstream ss(c.forms);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int m = 1;
      if (auto k = item.find(':'); k != std::string::npos) {
        try {
          m = std::stoi(item.substr(k + 1));
        } catch (const std::exception&) {
          throw InputError("bad multiplicity in '" + item + "'");
        }
        item = item.substr(0, k);
      }
      forms.push_back(parse_polynomial(item, r));
      mult.push_back(m);
    }
    return arrangement_from_forms(forms, mult);
  }
  std::string path = c.arrangement.empty() ? c.input : c.arrangement;
  if (path.empty()) throw InputError("no arrangement given (file argument or --forms)");
  return parse_arrangement(read_file(path));
}

/// Polynomial file: "vars x y z", optional "weights ..." and "order ...",
/// the remaining non-comment lines form the polynomial.
Polynomial load_polynomial(const Config& c) {
  if (!c.arrangement.empty()) {
    Arrangement a = parse_arrangement(read_file(c.arrangement));
    std::vector<std::string> names = a.default_ring()->names();
    if (!c.vars.empty()) names = split_list(c.vars);
    return a.polynomial(make_ring(names, c.weights, c.order));
  }
  std::string vars = c.vars, weights = c.weights, order = c.order, text = c.poly;
  if (text.empty()) {
    if (c.input.empty()) throw InputError("no polynomial given (file argument or --poly)");
    std::istringstream in(read_file(c.input));
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      std::string rest;
      std::getline(ls, rest);
      if (head == "vars") {
        if (vars.empty()) vars = rest;
      } else if (head == "weights") {
        if (weights.empty()) weights = rest;
      } else if (head == "order") {
        if (order.empty()) order = split_list(rest).empty() ? "" : split_list(rest)[0];
      } else {
        text += line + " ";
      }
    }
  }
  if (vars.empty()) throw InputError("no variables declared (use 'vars' in the file or --vars)");
  return parse_polynomial(text, make_ring(split_list(vars), weights, order));
}

std::vector<std::string> element_strings(const std::vector<ModuleElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

json derivations_json(const LogDerModule& m) {
  json gens = json::array(), degs = json::array();
  for (const auto& d : m.generators) {
    gens.push_back(d.to_string());
    auto deg = d.degree();
    degs.push_back(deg ? json(*deg) : json(nullptr));
  }
  return {{"f", m.f.to_string()}, {"count", m.generators.size()}, {"generators", gens}, {"degrees", degs}};
}

json module_json(const Submodule& m, const Budget& b) {
  Submodule g = groebner(m, b);
  ResolutionOptions opt;
  opt.budget = b;
  auto res = free_resolution(g, Resolved::Submodule, opt);
  json out = json::parse(betti_json(res));
  out["ranks"] = betti_ranks(res);
  out["generators"] = element_strings(g.has_min_generators() ? g.min_generators() : g.generators());
  return out;
}

json liouville_json(const LiouvilleIdeal& l, const Budget& b) {
  json gens = json::array(), bideg = json::array();
  for (const auto& p : l.ideal.generator_polys()) gens.push_back(p.to_string());
  for (const auto& [x, y] : l.bidegrees) bideg.push_back({x, y});
  return {{"ring", l.ring->names()}, {"generators", gens}, {"bidegrees", bideg},
          {"dimension", krull_dimension(l.ideal, b)}, {"tilde", l.tilde}};
}

struct Outcome {
  json result;
  int exit = kExitOk;
};

// ---- reproduce ----

struct Check {
  std::string name;
  json expected, actual;
};

json checks_json(const std::vector<Check>& checks, bool& ok) {
  json out = json::array();
  ok = true;
  for (const auto& c : checks) {
    bool pass = c.expected == c.actual;
    ok = ok && pass;
    out.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", pass}});
  }
  return out;
}

Outcome reproduce(const std::string& id, const Budget& b) {
  std::vector<Check> checks;
  json info = json::object();
  auto xyz = PolyRing::standard({"x", "y", "z"});
  if (id == "saito") {
    auto f = parse_polynomial("x*y*(x+y)*(x+z*y)", xyz);
    auto c = holonomicity(f, b);
    checks.push_back({"holonomic verdict", "fails", to_string(c.verdict)});
    checks.push_back({"failing rank k", 0, c.witness.value("failing_k", json())});
    checks.push_back({"failing locus dimension", 1, c.witness.value("failing_dimension", json())});
    info["certificate"] = c.to_json();
  } else if (id == "bracelet") {
    auto r = PolyRing::standard({"x0", "x1", "x2", "x3"});
    auto f = parse_polynomial("x1*x2*x3*(x1+x0)*(x2+x0)*(x3+x0)*(x1+x2+x0)*(x1+x3+x0)*(x2+x3+x0)", r);
    auto d = der_log0(f, b);
    bool cubic = true;
    for (const auto& g : d.generators)
      for (const auto& a : g.coeffs) cubic = cubic && (a.is_zero() || a.weighted_degree() == 3);
    checks.push_back({"logder0 minimal generators", 4, d.generators.size()});
    checks.push_back({"all coefficients cubic", true, cubic});
    auto t = tameness(f, b);
    checks.push_back({"tame verdict", "fails", to_string(t.verdict)});
    checks.push_back({"pdim Omega^1(log f)", 2, t.witness.value("offending_pdim", json())});
    ResolutionOptions opt;
    opt.budget = b;
    auto res = free_resolution(omega_log_e(f, 1, b), Resolved::Submodule, opt);
    checks.push_back({"resolution ranks of E-contractions of Omega^2(log_0 f)", json({6, 4, 1}), betti_ranks(res)});
    info["omega1_log0_ranks"] = betti_ranks(free_resolution(omega_log0(f, 1, b), Resolved::Submodule, opt));
    auto l = liouville_ideal(f, b);
    std::vector<Polynomial> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(Polynomial::variable(l.ring, i));
    checks.push_back({"dim L_f + (x)", 4, krull_dimension(ideal_sum(l.ideal, xs), b)});
    info["logder0"] = derivations_json(d);
  } else if (id == "ziegler-degenerate" || id == "ziegler-generic") {
    bool deg = id == "ziegler-degenerate";
    auto a = deg ? ziegler_degenerate() : ziegler_generic();
    auto f = a.polynomial(xyz);
    auto rep = milnor_window_report(f, b);
    checks.push_back({"series", deg ? "T^8+4T^9+6T^10+6T^11+4T^12+T^13" : "4T^9+6T^10+6T^11+4T^12",
                      rep.series.to_string()});
    json d8;
    for (const auto& [k, dg, dim] : rep.window)
      if (dg == 8) d8 = to_string(dim);
    checks.push_back({"degree-8 window entry", deg ? "1" : "0", d8});
    auto p6 = ziegler_points(a)[5];
    Polynomial q = ziegler_quadric(xyz);
    checks.push_back({"P6 on q", deg, q.evaluate(p6).is_zero()});
    info["window"] = rep.to_json();
    json forms = json::array();
    for (int i = 0; i < a.size(); ++i) forms.push_back(a.linear_form(i, xyz).to_string());
    info["forms"] = forms;
  } else if (id == "nc-monomial") {
    auto f = parse_polynomial("x^2*y^3*z", xyz);
    auto d = der_log0(f, b);
    auto fm = d.module.module();
    auto P = [&](const char* s) { return parse_polynomial(s, xyz); };
    Submodule formula(fm, {ModuleElement(fm, {P("3*x"), P("-2*y"), P("0")}), ModuleElement(fm, {P("x"), P("0"), P("-2*z")})});
    checks.push_back({"logder0 equals the normal crossing formula", true, same_submodule(d.module, formula)});
    auto cm = liouville_dimension_cm(f, b);
    checks.push_back({"dim L_f", 4, cm.witness.value("dimension", json())});
    checks.push_back({"CM verdict", "holds", to_string(cm.verdict)});
    checks.push_back({"ann-order-one", "holds", to_string(order_one_generation_certificate(f, b).verdict)});
    info["logder0"] = derivations_json(d);
  } else if (id == "lfrad-c5") {
    auto r = PolyRing::standard({"x", "y", "z", "a", "b"});
    auto f = parse_polynomial("x*y*z*(x+y+z)*(x+a*y+b*z)", r);
    auto cm = liouville_dimension_cm(f, b);
    auto tc = liouville_dimension_cm(tilde_liouville(f, b), b);
    checks.push_back({"dim L_f", 7, cm.witness.value("dimension", json())});
    checks.push_back({"dim tilde L_f", 7, tc.witness.value("dimension", json())});
    checks.push_back({"CM verdict", "fails", to_string(cm.verdict)});
    info["certificate"] = cm.to_json();
  } else {
    throw InputError("unknown example '" + id +
                     "' (saito, bracelet, ziegler-degenerate, ziegler-generic, nc-monomial, lfrad-c5)");
  }
  bool ok = true;
  json res = {{"example", id}, {"checks", checks_json(checks, ok)}, {"all_ok", ok}, {"details", info}};
  if (!ok) std::cerr << "reproduce " << id << ": MISMATCH\n";
  return {res, ok ? kExitOk : kExitMismatch};
}

// ---- dispatch ----

bool is_arrangement_command(const std::string& cmd) {
  return cmd == "lattice" || cmd == "syzygetic" || cmd == "decompose" || cmd == "nd-check" || cmd == "nd-candidates" ||
         cmd == "zeta" || cmd == "zeta-poles";
}

Outcome run(const std::string& cmd, const Config& c) {
  Budget b = c.budget();
  if (cmd == "reproduce") return reproduce(c.example, b);
  if (is_arrangement_command(cmd)) {
    Arrangement a = load_arrangement(c);
    for (const auto& w : a.warnings()) std::cerr << "warning: " << w << "\n";
    if (cmd == "lattice") return {intersection_lattice(a).to_json()};
    if (cmd == "syzygetic") {
      SyzygeticOptions o{c.rounds, c.max_elements, !c.seed_all};
      return {syzygetic_lattice(a, o).to_json()};
    }
    if (cmd == "decompose") return {is_indecomposable(a).to_json()};
    if (cmd == "nd-check") {
      auto cert = nd_check(a);
      return {cert.to_json(), cert.witness.value("applicable", true) ? kExitOk : kExitHypothesis};
    }
    if (cmd == "nd-candidates") return {to_json(nd_candidates(a))};
    if (cmd == "zeta") {
      ZetaModel m = c.zeta_model == "blowup" ? ZetaModel::BlowUpOrigin : ZetaModel::Minimal;
      if (c.zeta_model != "blowup" && c.zeta_model != "minimal") throw InputError("unknown zeta model");
      return {zeta_topological(a, m).to_json()};
    }
    auto rep = zeta_pole_analysis(a);
    if (!rep.all_matched) std::cerr << "warning: zeta pole without a matching n/d candidate\n";
    return {rep.to_json()};
  }

  Polynomial f = load_polynomial(c);
  if (cmd == "logder0") return {derivations_json(der_log0(f, b))};
  if (cmd == "logder") return {derivations_json(der_log(f, b))};
  if (cmd == "omega") {
    Submodule m;
    if (c.omega_kind == "log") m = omega_log(f, c.form_degree, b);
    else if (c.omega_kind == "log0") m = omega_log0(f, c.form_degree, b);
    else if (c.omega_kind == "e") m = omega_log_e(f, c.form_degree, b);
    else throw InputError("unknown form module '" + c.omega_kind + "' (log, log0, e)");
    json out = module_json(m, b);
    out["i"] = c.form_degree;
    out["kind"] = c.omega_kind;
    return {out};
  }
  if (cmd == "tame") return {tameness(f, b).to_json()};
  if (cmd == "free") return {freeness(f, b).to_json()};
  if (cmd == "holonomic") return {holonomicity(f, b).to_json()};
  if (cmd == "ann-order-one") return {order_one_generation_certificate(f, b).to_json()};
  if (cmd == "liouville-cm") return {liouville_dimension_cm(f, b).to_json()};
  if (cmd == "liouville") return {liouville_json(liouville_ideal(f, b), b)};
  if (cmd == "tilde-liouville") {
    auto l = tilde_liouville(f, b);
    json out = liouville_json(l, b);
    out["certificate"] = liouville_dimension_cm(l, b).to_json();
    return {out};
  }
  if (cmd == "euler-locus") {
    Submodule loc = groebner(euler_locus(f, b), b);
    json gens = json::array();
    for (const auto& p : loc.gb_polys()) gens.push_back(p.to_string());
    bool unit = groebner(ideal_sum(loc, {f}), b).is_unit();
    return {{{"ideal", gens}, {"euler_homogeneous_along_divisor", unit}}};
  }
  if (cmd == "strong-euler") {
    std::vector<Rational> p;
    for (const auto& t : split_list(c.point)) {
      try {
        p.push_back(Rational::parse(t));
      } catch (const std::exception&) {
        throw InputError("bad point coordinate '" + t + "'");
      }
    }
    if (static_cast<int>(p.size()) != f.ring()->nvars()) throw InputError("point has the wrong number of coordinates");
    return {strong_euler_at(f, p, b).to_json()};
  }
  if (cmd == "jacmod") {
    auto m = jacobian_module(f, b);
    return {{{"series", m.series.to_string()}, {"terms", series_json(m.series)}}};
  }
  if (cmd == "milnor-window") return {milnor_window_report(f, b).to_json()};
  if (cmd == "lc-check") return {lc_cohomology(f, {c.max_a, c.max_b}, b).to_json()};
  throw InputError("unknown command " + cmd);
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::string out;
  for (const auto& [k, v] : report.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items())
        out += k + "." + k2 + ": " + (v2.is_string() ? v2.get<std::string>() : v2.dump()) + "\n";
    } else {
      out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  return out;
}

json error_body(const std::string& kind, const std::string& msg, const std::string& cmd) {
  return {{"command", cmd}, {"status", "error"}, {"error", {{"kind", kind}, {"message", msg}}}};
}

json make_report(const std::string& cmd, const Outcome& out, const Budget& b) {
  static const char* names[] = {"ok", "error", "hypothesis", "budget", "mismatch"};
  return {{"command", cmd}, {"result", out.result}, {"budget", budget_json(b)}, {"status", names[out.exit]}};
}

std::string cache_key(const std::string& cmd, const Config& c) {
  json input;
  if (cmd == "reproduce") {
    input = c.example;
  } else if (is_arrangement_command(cmd)) {
    Arrangement a = load_arrangement(c);
    json hs = json::array();
    for (const auto& h : a.hyperplanes()) {
      json row = json::array();
      for (const auto& x : h.normal) row.push_back(x.to_string());
      hs.push_back({row, h.multiplicity});
    }
    input = {{"n", a.dim()}, {"hyperplanes", hs}};
  } else {
    Polynomial f = load_polynomial(c);
    input = {{"ring", f.ring()->signature()}, {"f", f.to_string()}};
  }
  json opts = {{"i", c.form_degree}, {"kind", c.omega_kind}, {"point", c.point}, {"model", c.zeta_model},
               {"max_a", c.max_a}, {"max_b", c.max_b}, {"rounds", c.rounds}, {"max_elements", c.max_elements},
               {"seed_all", c.seed_all}, {"budget", budget_json(c.budget())}};
  return json({{"v", 1}, {"cmd", cmd}, {"input", input}, {"opts", opts}}).dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logdiv: logarithmic derivations, Liouville ideals, Jacobian modules and arrangements"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s, bool poly, bool arr) {
    s->add_option("input", c.input, poly ? "polynomial file" : "arrangement file");
    if (poly) {
      s->add_option("--poly", c.poly, "polynomial text");
      s->add_option("--weights", c.weights, "variable weights, comma separated");
      s->add_option("--order", c.order, "grevlex | lex | wgrevlex");
      s->add_option("--arrangement", c.arrangement, "use the defining polynomial of an arrangement file");
    }
    if (arr) s->add_option("--forms", c.forms, "linear forms 'x,y,x+y' with optional ':m' multiplicities");
    s->add_option("--vars", c.vars, "variable names, comma separated");
  };
  auto global = [&](CLI::App* s) {
    s->add_option("--max-degree", c.max_degree, "Groebner degree bound")->check(CLI::PositiveNumber);
    s->add_option("--max-pairs", c.max_pairs, "Groebner pair bound")->check(CLI::PositiveNumber);
    s->add_option("--seconds", c.seconds, "wall-clock budget")->check(CLI::PositiveNumber);
    s->add_option("--format", c.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    s->add_flag("--no-cache", c.no_cache, "bypass the result cache");
    s->add_flag("--verify-cache", c.verify_cache, "recompute and compare against the cached report");
  };

  const std::vector<std::pair<std::string, std::string>> poly_cmds = {
      {"logder", "generators of Der(-log f)"},
      {"logder0", "generators of Der(-log_0 f), the annihilating derivations"},
      {"omega", "logarithmic forms (numerators), generators and Betti table"},
      {"tame", "tameness certificate"},
      {"free", "freeness certificate"},
      {"euler-locus", "Jac(f) : f"},
      {"strong-euler", "strong Euler homogeneity at a point"},
      {"holonomic", "Saito holonomicity certificate"},
      {"liouville", "the Liouville ideal"},
      {"liouville-cm", "dimension and Cohen-Macaulayness of the Liouville ideal"},
      {"tilde-liouville", "Liouville ideal plus the Euler symbol"},
      {"ann-order-one", "hypotheses for annihilator generation in order one"},
      {"jacmod", "Hilbert series of H^0_m(R/Jac f)"},
      {"milnor-window", "Jacobian module window report"},
      {"lc-check", "Liouville complex cohomology on a bigraded window"}};
  const std::vector<std::pair<std::string, std::string>> arr_cmds = {
      {"lattice", "intersection lattice with Moebius values"},
      {"syzygetic", "syzygetic intersection lattice"},
      {"decompose", "decomposability certificate"},
      {"nd-check", "n/d containment check"},
      {"nd-candidates", "-r_W/N_W over indecomposable flats"},
      {"zeta", "topological zeta function (rank <= 3)"},
      {"zeta-poles", "zeta poles matched against n/d candidates"}};

  std::vector<CLI::App*> subs;
  for (const auto& [name, desc] : poly_cmds) {
    auto* s = app.add_subcommand(name, desc);
    common(s, true, false);
    global(s);
    subs.push_back(s);
    if (name == "omega") {
      s->add_option("--i", c.form_degree, "form degree")->check(CLI::NonNegativeNumber);
      s->add_option("--kind", c.omega_kind, "log | log0 | e");
    }
    if (name == "strong-euler") s->add_option("--point", c.point, "point, comma separated")->required();
    if (name == "lc-check") {
      s->add_option("--max-a", c.max_a, "largest a (default 2d+n)");
      s->add_option("--max-b", c.max_b, "largest y-degree")->check(CLI::NonNegativeNumber);
    }
  }
  for (const auto& [name, desc] : arr_cmds) {
    auto* s = app.add_subcommand(name, desc);
    common(s, false, true);
    global(s);
    subs.push_back(s);
    if (name == "zeta") s->add_option("--model", c.zeta_model, "minimal | blowup");
    if (name == "syzygetic") {
      s->add_option("--rounds", c.rounds, "closure rounds")->check(CLI::PositiveNumber);
      s->add_option("--max-elements", c.max_elements, "element cap per level")->check(CLI::PositiveNumber);
      s->add_flag("--seed-all", c.seed_all, "seed with the whole lattice");
    }
  }
  auto* rep = app.add_subcommand("reproduce", "re-run a worked example and compare");
  rep->add_option("example", c.example,
                  "saito | bracelet | ziegler-degenerate | ziegler-generic | nc-monomial | lfrad-c5")
      ->required();
  global(rep);
  subs.push_back(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  std::string cmd = app.get_subcommands().front()->get_name();

  auto emit = [&](const json& body, int code) {
    std::cout << render(body, c.format);
    return code;
  };
  try {
    std::string key = cache_key(cmd, c);
    cli::ReportCache cache(cli::ReportCache::default_dir());
    if (!c.no_cache) {
      std::string warning;
      auto hit = cache.lookup(key, &warning);
      if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
      if (hit && !c.verify_cache) {
        json stored = json::parse(*hit, nullptr, false);
        if (!stored.is_discarded() && stored.contains("report") && stored.contains("exit")) {
          std::cerr << "cache: hit\n";
          return emit(stored["report"], stored["exit"].get<int>());
        }
        std::cerr << "warning: unreadable cache entry; recomputing\n";
      }
      Outcome out = run(cmd, c);
      json report = make_report(cmd, out, c.budget());
      json stored = {{"report", report}, {"exit", out.exit}};
      if (hit && c.verify_cache) {
        json old = json::parse(*hit, nullptr, false);
        if (old.is_discarded() || old.dump() != stored.dump()) {
          std::cerr << "cache: MISMATCH against recomputation; entry replaced\n";
          cache.store(key, stored.dump());
          return emit(error_body("cache", "cached report differs from recomputation", cmd), kExitMismatch);
        }
        std::cerr << "cache: verified\n";
      } else {
        cache.store(key, stored.dump());
        std::cerr << "cache: miss\n";
      }
      return emit(report, out.exit);
    }
    Outcome out = run(cmd, c);
    return emit(make_report(cmd, out, c.budget()), out.exit);
  } catch (const ParseError& e) {
    return emit(error_body("parse", e.what(), cmd), kExitInput);
  } catch (const InputError& e) {
    return emit(error_body("input", e.what(), cmd), kExitInput);
  } catch (const HypothesisError& e) {
    return emit(error_body("hypothesis", e.what(), cmd), kExitHypothesis);
  } catch (const BudgetExhausted& e) {
    return emit(error_body("budget", e.what(), cmd), kExitBudget);
  }
}
