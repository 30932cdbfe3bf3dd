#include "cli.hpp"

#include "qvt/bilform.hpp"
#include "qvt/canbasis.hpp"
#include "qvt/deform.hpp"
#include "qvt/hwmod.hpp"
#include "qvt/parse.hpp"
#include "qvt/series.hpp"
#include "qvt/serre.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>

namespace qvt::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string omega_path;
  std::string elements_path;
  std::string direction = "to-f";
  std::vector<int> deg;
  std::vector<int> lambda;
  std::vector<std::string> eps;
  int max_tr = 4;
  int series_order = 20;
  int depth = 8;
};

// What a command hands back: the result object and whether every check held.
struct Outcome {
  json result;
  bool ok = true;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(letters(w));
  return out;
}

json label_json(const CBLabel& l) { return {{"side", l.side}, {"a", l.a}, {"b", l.b}, {"c", l.c}, {"name", l.str()}}; }

json coords_json(const std::vector<RatFunc>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

class Job {
 public:
  explicit Job(const Options& o) : o_(o) {}

  const Matrix& omega() {
    if (!omega_read_) {
      if (o_.omega_path.empty()) throw UsageError("--omega is required");
      matrix_ = omega_from_json(read_json(o_.omega_path));
      omega_read_ = true;
    }
    return matrix_;
  }

  const Cartan& cartan() {
    if (!cartan_) {
      auto v = CartanData::violations(omega());
      if (!v.empty()) throw UsageError(InvalidOmega(v).what());
      cartan_ = make_cartan(omega());
    }
    return cartan_;
  }

  Degree degree() {
    if (o_.deg.empty()) throw UsageError("--deg is required");
    if (o_.deg.size() != static_cast<std::size_t>(cartan()->rank()))
      throw UsageError("--deg needs one entry per vertex");
    for (int x : o_.deg)
      if (x < 0) throw UsageError("--deg entries must be nonnegative");
    return o_.deg;
  }

  std::vector<FreeElem> elements() {
    if (o_.elements_path.empty()) throw UsageError("--elements is required");
    auto j = read_json(o_.elements_path);
    return elements_from_json(cartan(), j);
  }

  // --elements when given, otherwise every word of trace at most --max-tr.
  std::vector<FreeElem> elements_or_words() {
    if (!o_.elements_path.empty()) return elements();
    std::vector<FreeElem> out;
    for (const auto& nu : degrees_up_to_trace(cartan()->rank(), max_tr()))
      for (const auto& w : words_of_degree(nu)) out.push_back(FreeElem::word(cartan(), w));
    return out;
  }

  int max_tr() const {
    if (o_.max_tr < 0) throw UsageError("--max-tr must be nonnegative");
    return o_.max_tr;
  }

  void require_a2() {
    if (!is_a2(*cartan())) throw UsageError("this command needs Omega = [[1,-1],[0,1]]");
  }

  const Options& opts() const { return o_; }

 private:
  const Options& o_;
  bool omega_read_ = false;
  Matrix matrix_;
  Cartan cartan_;
};

Outcome validate_omega(Job& job) {
  auto v = CartanData::violations(job.omega());
  return {{{"valid", v.empty()}, {"violations", v}}, v.empty()};
}

Outcome dim(Job& job) {
  const Degree nu = job.degree();
  const auto r = rank_and_radical(gram(job.cartan(), nu));
  return {{{"degree", nu}, {"dim_free", words_of_degree(nu).size()}, {"dim_f", r.rank}}, true};
}

Outcome gram_cmd(Job& job) {
  const Degree nu = job.degree();
  const GramBlock g = gram(job.cartan(), nu);
  json m = json::array();
  for (std::size_t a = 0; a < g.words.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.words.size(); ++b) row.push_back(g.entry(a, b).str());
    m.push_back(row);
  }
  return {{{"degree", nu}, {"words", words_json(g.words)}, {"matrix", m}}, true};
}

Outcome serre_check(Job& job) {
  const Cartan& c = job.cartan();
  json verdicts = json::array();
  bool ok = true;
  for (int i = 0; i < c->rank(); ++i)
    for (int j = 0; j < c->rank(); ++j) {
      if (i == j) continue;
      const SerreElem s = serre_elem(c, i, j);
      for (int k = 0; k < c->rank(); ++k) {
        const bool r = deriv_r(k, s.element).is_zero();
        const bool l = deriv_l(k, s.element).is_zero();
        ok = ok && r && l;
        verdicts.push_back({{"i", i}, {"j", j}, {"k", k}, {"right", r}, {"left", l}});
      }
    }
  return {{{"verdicts", verdicts}, {"all", ok}}, ok};
}

Outcome elementwise(Job& job, const std::function<bool(const FreeElem&)>& check) {
  const auto xs = job.elements_or_words();
  json failures = json::array();
  for (const auto& x : xs)
    if (!check(x)) failures.push_back(element_to_json(x));
  const bool ok = failures.empty();
  return {{{"checked", xs.size()}, {"failures", failures}, {"all", ok}}, ok};
}

json report_json(const CBReport& r) {
  return {{"integral", r.integral},         {"bar_invariant", r.bar_invariant},
          {"norm_ok", r.norm_ok},           {"t_free_norm", r.t_free_norm},
          {"norm", r.norm.str()},           {"mirror_norm_ok", r.mirror_norm_ok},
          {"all", r.all()}};
}

// NotRegular becomes a failed report.
json verify_json(const FreeElem& x, int order, bool& ok) {
  try {
    const CBReport r = cb_verify(x, order);
    ok = ok && r.all();
    return report_json(r);
  } catch (const NotRegular& e) {
    ok = false;
    return {{"error", e.what()}, {"all", false}};
  }
}

Outcome canbasis_a2(Job& job) {
  job.require_a2();
  const Cartan& c = job.cartan();
  const int order = job.opts().series_order;
  json degrees = json::array();
  bool ok = true;
  for (const auto& nu : degrees_up_to_trace(c->rank(), job.max_tr())) {
    const auto fam = a2_basis(c, nu);
    const std::size_t gr = rank_and_radical(gram(c, nu)).rank;
    json elems = json::array();
    for (const auto& b : fam) {
      json e = {{"label", label_json(b.label)}, {"element", element_to_json(b.element)}};
      e["cb_verify"] = verify_json(b.element, order, ok);
      elems.push_back(e);
    }
    const bool near = near_orthonormality(fam, order);
    const bool near_mirror = near_orthonormality_mirror(fam, order);
    ok = ok && near && fam.size() == gr;
    degrees.push_back({{"degree", nu},
                       {"cardinality", fam.size()},
                       {"gram_rank", gr},
                       {"near_orthonormal", near},
                       {"near_orthonormal_mirror", near_mirror},
                       {"elements", elems}});
  }
  return {{{"degrees", degrees}, {"all", ok}}, ok};
}

Outcome cb_verify_cmd(Job& job) {
  json reports = json::array();
  bool ok = true;
  for (const auto& x : job.elements()) {
    if (!x.is_homogeneous() || x.is_zero()) throw UsageError("cb-verify needs nonzero homogeneous elements");
    reports.push_back({{"element", element_to_json(x)}, {"cb_verify", verify_json(x, job.opts().series_order, ok)}});
  }
  return {{{"reports", reports}, {"all", ok}}, ok};
}

Outcome positivity(Job& job) {
  job.require_a2();
  const Cartan& c = job.cartan();
  std::vector<CBCandidate> all;
  for (const auto& nu : degrees_up_to_trace(c->rank(), job.max_tr()))
    for (auto& b : a2_basis(c, nu)) all.push_back(b);
  bool ok = true;
  json products = json::array();
  for (const auto& b : all)
    for (const auto& bp : all) {
      const Degree d = b.element.degree(), dp = bp.element.degree();
      if (trace(d) + trace(dp) > job.max_tr()) continue;
      const int te = c->bracket(d, dp);
      json terms = json::array();
      for (const auto& t : structure_constants(b, bp)) {
        const bool pos = positive_in_v(t.coeff, te);
        ok = ok && pos;
        terms.push_back({{"basis", t.basis.label.str()}, {"coeff", t.coeff.str()}, {"positive", pos}});
      }
      products.push_back({{"left", b.label.str()}, {"right", bp.label.str()}, {"t_exponent", te}, {"terms", terms}});
    }
  json coproducts = json::array();
  for (const auto& b : all) {
    json terms = json::array();
    for (const auto& t : coproduct_constants(b)) {
      const int te = -c->bracket(t.left.element.degree(), t.right.element.degree());
      const bool pos = positive_in_v(t.coeff, te);
      ok = ok && pos;
      terms.push_back({{"left", t.left.label.str()},
                       {"right", t.right.label.str()},
                       {"coeff", t.coeff.str()},
                       {"t_exponent", te},
                       {"positive", pos}});
    }
    coproducts.push_back({{"element", b.label.str()}, {"terms", terms}});
  }
  return {{{"products", products}, {"coproducts", coproducts}, {"all", ok}}, ok};
}

Outcome specialize(Job& job) {
  json out = json::array();
  for (const auto& x : job.elements()) {
    try {
      out.push_back(element_to_json(specialize_t1(x)));
    } catch (const std::domain_error& e) {
      return {{{"error", e.what()}, {"element", element_to_json(x)}}, false};
    }
  }
  return {{{"elements", out}}, true};
}

Outcome twist_cmd(Job& job) {
  const std::string& d = job.opts().direction;
  if (d != "to-f" && d != "from-f") throw UsageError("--direction must be to-f or from-f");
  const TwistDirection dir = d == "to-f" ? TwistDirection::ToF : TwistDirection::FromF;
  json out = json::array();
  for (const auto& x : job.elements()) out.push_back(element_to_json(cocycle_twist(x, dir)));
  return {{{"direction", d}, {"elements", out}}, true};
}

Outcome forms_agree(Job& job) {
  const auto xs = job.elements();
  json pairs = json::array();
  bool ok = true;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a; b < xs.size(); ++b) {
      bool agree = false;
      try {
        agree = forms_agree_check(xs[a], xs[b]);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      ok = ok && agree;
      pairs.push_back({{"x", a}, {"y", b}, {"agree", agree}});
    }
  return {{{"pairs", pairs}, {"all", ok}}, ok};
}

Outcome module_cmd(Job& job) {
  const Options& o = job.opts();
  const Cartan& c = job.cartan();
  std::vector<RatFunc> eps;
  for (const auto& s : o.eps) eps.push_back(parse_coeff(s));
  HWData h;
  try {
    h = HWData::make(c, o.lambda, eps, o.depth);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Module m(h);
  const auto dims = m.dimensions();
  const int n = c->rank();
  json weights = json::array();
  int top = 0;
  for (const auto& [mu, d] : dims) {
    top = std::max(top, trace(mu));
    const WeightSpace& ws = m.weight_space(mu);
    json k, kp, es = json::array(), fs = json::array();
    for (int i = 0; i < n; ++i) {
      k.push_back(k_scalar(h, i, mu, false).str());
      kp.push_back(k_scalar(h, i, mu, true).str());
    }
    for (int i = 0; i < n; ++i) {
      json e_cols = json::array(), f_cols = json::array();
      for (const auto& x : ws.basis()) {
        const ModuleVector ex = act_E(h, i, x);
        e_cols.push_back(x.depth[static_cast<std::size_t>(i)] == 0 ? json::array() : coords_json(m.coords(ex)));
        if (trace(mu) < o.depth) f_cols.push_back(coords_json(m.coords(act_F(h, i, x))));
      }
      es.push_back({{"i", i}, {"columns", e_cols}});
      if (trace(mu) < o.depth) fs.push_back({{"i", i}, {"columns", f_cols}});
    }
    weights.push_back({{"depth", mu},
                       {"dim", d},
                       {"basis", words_json(ws.basis_words())},
                       {"K", k},
                       {"K_prime", kp},
                       {"E", es},
                       {"F", fs}});
  }
  std::size_t total = 0;
  for (const auto& [mu, d] : dims) total += d;
  return {{{"lambda", h.lambda},
           {"eps", coords_json(h.eps)},
           {"depth", o.depth},
           {"truncated", top == o.depth},
           {"total_dimension", total},
           {"weights", weights}},
          true};
}

}  // namespace

json element_to_json(const FreeElem& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"word", letters(w)}, {"coeff", c.str()}});
  return {{"terms", terms}};
}

FreeElem element_from_json(const Cartan& c, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw UsageError("element JSON needs a \"terms\" array");
  FreeElem x(c);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("word") || !t["word"].is_array())
      throw UsageError("each term needs a \"word\" array");
    std::vector<int> ls;
    for (const auto& l : t["word"]) {
      if (!l.is_number_integer()) throw UsageError("word letters must be integers");
      const int i = l.get<int>();
      if (i < 0 || i >= c->rank()) throw UsageError("letter " + std::to_string(i) + " out of range");
      ls.push_back(i);
    }
    RatFunc coeff(1);
    if (t.contains("coeff")) {
      if (!t["coeff"].is_string()) throw UsageError("coeff must be a string");
      try {
        coeff = parse_coeff(t["coeff"].get<std::string>());
      } catch (const std::exception& e) {
        throw UsageError(std::string("coefficient: ") + e.what());
      }
    }
    x.add(make_word(ls), coeff);
  }
  return x;
}

std::vector<FreeElem> elements_from_json(const Cartan& c, const json& j) {
  if (j.is_object() && j.contains("elements")) return elements_from_json(c, j["elements"]);
  if (j.is_array()) {
    std::vector<FreeElem> out;
    for (const auto& e : j) out.push_back(element_from_json(c, e));
    return out;
  }
  return {element_from_json(c, j)};
}

Matrix omega_from_json(const json& j) {
  if (!j.is_object() || !j.contains("omega") || !j["omega"].is_array())
    throw UsageError("omega JSON needs an \"omega\" array");
  Matrix m;
  for (const auto& row : j["omega"]) {
    if (!row.is_array()) throw UsageError("omega rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw UsageError("omega entries must be integers");
      r.push_back(x.get<int>());
    }
    m.push_back(r);
  }
  return m;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-parameter quantum algebra computations", "qvt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  using Handler = Outcome (*)(Job&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](const char* name, const char* desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("--omega", o.omega_path, "Omega JSON file")->required();
    handlers.emplace_back(s, h);
    return s;
  };
  auto deg = [&](CLI::App* s) { s->add_option("--deg", o.deg, "degree, comma separated")->delimiter(',')->required(); };
  auto max_tr = [&](CLI::App* s, int def) {
    o.max_tr = def;
    s->add_option("--max-tr", o.max_tr, "trace bound");
  };
  auto elements = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--elements", o.elements_path, "elements JSON file");
    if (required) opt->required();
  };
  auto series = [&](CLI::App* s) { s->add_option("--series-order", o.series_order, "v^-1 expansion order"); };

  sub("validate-omega", "check the admissibility conditions", validate_omega);
  deg(sub("dim", "dimensions of 'f_nu and f_nu", dim));
  deg(sub("gram", "Gram matrix at a degree", gram_cmd));
  sub("serre-check", "derivations of the Serre elements", serre_check);
  {
    auto* s = sub("coassoc-check", "coassociativity of r",
                  [](Job& j) { return elementwise(j, [](const FreeElem& x) { return coassoc_check(x); }); });
    elements(s, false);
    max_tr(s, 4);
  }
  {
    auto* s = sub("bar-check", "bar-coproduct identity",
                  [](Job& j) { return elementwise(j, [](const FreeElem& x) { return bar_coproduct_check(x); }); });
    elements(s, false);
    max_tr(s, 4);
  }
  {
    auto* s = sub("canbasis-a2", "list and verify the A2 family", canbasis_a2);
    max_tr(s, 4);
    series(s);
  }
  {
    auto* s = sub("cb-verify", "verify candidate elements", cb_verify_cmd);
    elements(s, true);
    series(s);
  }
  max_tr(sub("positivity", "structure and coproduct constants", positivity), 4);
  elements(sub("specialize", "substitute t = 1", specialize), true);
  {
    auto* s = sub("twist", "cocycle twist", twist_cmd);
    elements(s, true);
    s->add_option("--direction", o.direction, "to-f or from-f");
  }
  elements(sub("forms-agree", "compare the two forms", forms_agree), true);
  {
    auto* s = sub("module", "highest-weight module tables", module_cmd);
    s->add_option("--lambda", o.lambda, "highest weight")->delimiter(',')->required();
    s->add_option("--eps", o.eps, "eps_i coefficients")->delimiter(',');
    s->add_option("--depth", o.depth, "depth bound");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? 0 : 2;
  }

  for (const auto& [s, h] : handlers) {
    if (!s->parsed()) continue;
    Job job(o);
    try {
      Outcome res = h(job);
      json report = {{"command", s->get_name()}, {"omega", job.omega()}, {"result", res.result}, {"version", kVersion}};
      out << report.dump(2) << '\n';
      return res.ok ? 0 : 1;
    } catch (const std::exception& e) {
      err << "qvt " << s->get_name() << ": " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}

}  // namespace qvt::cli
