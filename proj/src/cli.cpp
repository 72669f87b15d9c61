#include "gpi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <regex>

#include "gpi/error.hpp"
#include "gpi/expr.hpp"
#include "gpi/identity.hpp"
#include "gpi/io.hpp"
#include "gpi/numtheory.hpp"
#include "gpi/solver.hpp"

namespace gpi::cli {

namespace {

using io::Json;

struct Options {
  std::string algebra;
  double budget = kDefaultBudget;
  std::uint64_t seed = 0;
  bool sampled = false;
  std::uint64_t trials = kDefaultTrials;

  std::string expr;
  std::optional<std::size_t> vars;
  std::string at;
  std::size_t t = 1;
  std::size_t degree = 0;

  std::string kind;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t k = 1;
  std::string modulus;
  std::string centralizer;
  std::string element;
  std::optional<std::uint64_t> exponent;

  std::string templ;
  std::string maps;
  std::string contains;
  std::string G;
  std::string H;
  std::string w;
  std::string map;
  std::size_t max_terms = 0;

  std::uint64_t bk = 0;
  std::uint64_t bt = 0;
  unsigned l = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& part : out) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    part = b == std::string::npos ? "" : part.substr(b, e - b + 1);
  }
  return out;
}

Json degree_json(const Degree& d) {
  if (d.is_minus_infinity()) return "-inf";
  return d.value();
}

Json poly_summary(const GenPoly& g) {
  Json j;
  j["text"] = format_poly(g);
  j["degree"] = degree_json(g.degree());
  j["size"] = g.size();
  j["poly"] = io::poly_to_json(g);
  return j;
}

AdditiveMap transpose_map(const Algebra& A) {
  static const std::regex unit_re("e([0-9])([0-9])(t[0-9]*)?|e([0-9]+)_([0-9]+)(t[0-9]*)?");
  FpMatrix M(A.dim(), A.dim(), A.prime());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    std::smatch m;
    const std::string& label = A.basis_labels()[i];
    if (!std::regex_match(label, m, unit_re)) {
      throw InputError("transpose needs matrix-unit basis labels, found '" + label + "'");
    }
    const std::string swapped = m[1].matched ? "e" + m[2].str() + m[1].str() + m[3].str()
                                             : "e" + m[5].str() + "_" + m[4].str() + m[6].str();
    const auto j = A.basis_index(swapped);
    if (!j) throw InputError("transpose: no basis label '" + swapped + "'");
    M.at(*j, i) = 1;
  }
  return {A, std::move(M)};
}

}  // namespace

std::vector<AdditiveMap> parse_maps(const std::string& spec, const Algebra& A) {
  static const std::regex frob_re("frob(?:\\[([0-9]+)\\])?");
  std::vector<AdditiveMap> out;
  for (const auto& item : split_top_level(spec, ',')) {
    std::smatch m;
    if (item == "id") {
      out.push_back(AdditiveMap::identity(A));
    } else if (item == "zero" || item == "0") {
      out.push_back(AdditiveMap::zero(A));
    } else if (item == "transpose") {
      out.push_back(transpose_map(A));
    } else if (std::regex_match(item, m, frob_re)) {
      out.push_back(AdditiveMap::frobenius(A, m[1].matched ? static_cast<unsigned>(std::stoul(m[1])) : 1));
    } else if (item.rfind("lmul:", 0) == 0) {
      out.push_back(AdditiveMap::left_mul(parse_element(item.substr(5), A)));
    } else if (item.rfind("rmul:", 0) == 0) {
      out.push_back(AdditiveMap::right_mul(parse_element(item.substr(5), A)));
    } else if (item.rfind("[[", 0) == 0) {
      Json j;
      try {
        j = Json::parse(item);
      } catch (const nlohmann::json::parse_error&) {
        throw InputError("malformed matrix map '" + item + "'");
      }
      out.push_back(io::map_from_json(A, j));
    } else {
      throw InputError("unknown map spec '" + item + "' (expected id, zero, frob[j], lmul:<a>, rmul:<b>, transpose or [[...]])");
    }
  }
  return out;
}

namespace {

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  CheckOptions check_options() const {
    CheckOptions c;
    c.sampled = o_.sampled;
    c.seed = o_.seed;
    c.trials = o_.trials;
    c.budget = o_.budget;
    return c;
  }

  AlgebraPtr algebra() {
    if (!algebra_) {
      if (o_.algebra.empty()) throw InputError("--algebra is required");
      algebra_ = io::load_algebra(o_.algebra);
    }
    return algebra_;
  }

  ContextPtr context() {
    if (!ctx_) ctx_ = PolyContext::make(algebra(), o_.budget);
    return ctx_;
  }

  GenPoly poly(const std::string& text, std::optional<std::size_t> vars = std::nullopt) {
    if (text.empty()) throw InputError("an expression is required");
    const ExprAst ast = parse_ast(text);
    const std::size_t m = vars ? *vars : std::max<std::size_t>(1, variables_used(ast));
    return lower(ast, context(), m);
  }

  std::vector<Element> elements(const std::string& text) {
    std::vector<Element> xs;
    if (text.empty()) return xs;
    for (const auto& part : split_top_level(text, ';')) xs.push_back(parse_element(part, *algebra()));
    return xs;
  }

  int algebra_cmd() {
    AlgebraPtr A;
    if (!o_.kind.empty()) {
      StandardParams params;
      params.n = o_.n;
      params.p = o_.p;
      params.k = o_.k;
      if (!o_.modulus.empty()) {
        std::vector<std::int64_t> mod;
        for (const auto& c : split_top_level(o_.modulus, ',')) mod.push_back(std::stoll(c));
        params.modulus = mod;
      }
      if (o_.kind == "field") {
        A = standard_algebra(StandardKind::kField, params);
      } else if (o_.kind == "matrix") {
        A = standard_algebra(StandardKind::kMatrix, params);
      } else {
        throw InputError("--kind must be field or matrix");
      }
      algebra_ = A;
    } else {
      A = algebra();
    }
    Json j = io::descriptor_to_json(*A);
    j["commutative"] = A->is_commutative();
    const auto center = A->center();
    j["center_dim"] = center.size();
    const auto card = A->cardinality();
    if (card && static_cast<double>(*card) <= o_.budget) {
      j["units"] = A->units(o_.budget).size();
    } else {
      j["units"] = nullptr;
    }
    if (!o_.centralizer.empty()) {
      const auto S = elements(o_.centralizer);
      Json basis = Json::array();
      for (const auto& b : A->centralizer(S)) basis.push_back(format_element(b));
      j["centralizer"] = basis;
    }
    if (!o_.element.empty()) {
      const Element a = parse_element(o_.element, *A);
      Json e;
      e["value"] = format_element(a);
      const auto inv = A->inv(a);
      e["inverse"] = inv ? Json(format_element(*inv)) : Json(nullptr);
      if (o_.exponent) e["power"] = format_element(A->pow(a, *o_.exponent));
      j["element"] = e;
    }
    emit(j);
    return kExitOk;
  }

  int eval_cmd() {
    const GenPoly g = poly(o_.expr, o_.vars);
    const auto xs = elements(o_.at);
    if (xs.size() != g.num_vars()) {
      throw InputError("expression has " + std::to_string(g.num_vars()) + " variables but --at gives " +
                       std::to_string(xs.size()) + " values");
    }
    const Element v = g.eval(xs);
    Json j;
    j["value"] = format_element(v);
    j["coords"] = io::element_to_json(v);
    emit(j);
    return kExitOk;
  }

  int linearize_cmd() {
    const GenPoly g = poly(o_.expr, o_.vars);
    emit(poly_summary(linearize(g, o_.t)));
    return kExitOk;
  }

  int homog_cmd() {
    const GenPoly g = poly(o_.expr, o_.vars);
    emit(poly_summary(g.homogeneous_part(o_.degree)));
    return kExitOk;
  }

  int zero_cmd() {
    const GenPoly g = poly(o_.expr, o_.vars);
    Json j;
    j["zero"] = g.is_zero();
    j["degree"] = degree_json(g.degree());
    j["text"] = format_poly(g);
    if (g.num_vars() == 1) {
      const auto form = additive_form_test(g);
      j["additive"] = form.additive;
      if (form.additive) {
        Json pairs = Json::array();
        for (const auto& [a, b] : form.pairs) pairs.push_back(Json::array({format_element(a), format_element(b)}));
        j["pairs"] = pairs;
      } else if (form.obstruction == AdditiveObstruction::kConstantTerm) {
        j["obstruction"] = "constant term " + format_element(*form.constant_term);
      } else {
        j["obstruction"] = "degree " + std::to_string(*form.degree);
      }
    }
    emit(j);
    return kExitOk;
  }

  int check_gpi_cmd() {
    const GenPoly g = poly(o_.expr, o_.vars);
    const Verdict v = is_gpi(g, check_options());
    Json j = io::verdict_to_json(v);
    j["expr"] = format_poly(g);
    emit(j);
    return v.holds ? kExitOk : kExitViolated;
  }

  int check_hua_cmd() {
    const auto r = check_hua(*algebra(), o_.budget);
    Json j = io::verdict_to_json(r.verdict);
    j["unit_pairs"] = r.unit_pairs;
    j["admissible"] = r.admissible;
    emit(j);
    return r.verdict.holds ? kExitOk : kExitViolated;
  }

  std::vector<AdditiveMap> maps(const std::string& spec, std::size_t expected) {
    if (spec.empty()) throw InputError("--maps is required");
    auto fs = parse_maps(spec, *algebra());
    if (fs.size() != expected) {
      throw InputError("expected " + std::to_string(expected) + " maps, got " + std::to_string(fs.size()));
    }
    return fs;
  }

  IdentityTemplate identity_template() {
    if (o_.templ == "power") return IdentityTemplate::power(context(), o_.n);
    if (o_.templ == "gx") return IdentityTemplate::gx(poly(o_.G, 1), poly(o_.H.empty() ? "0" : o_.H, 1));
    if (o_.templ.empty()) throw InputError("--template is required");
    return io::template_from_json(context(), io::read_file(o_.templ));
  }

  int check_fi_cmd() {
    if (o_.templ == "w") {
      const auto fg = maps(o_.maps, 2);
      const auto r = check_w_identity(fg[0], fg[1], poly(o_.w, 1), check_options());
      Json j;
      j["hypothesis"] = io::verdict_to_json(r.hypothesis);
      j["conclusion"] = io::verdict_to_json(r.conclusion);
      emit(j);
      return r.hypothesis.holds && r.conclusion.holds ? kExitOk : kExitViolated;
    }
    Verdict v;
    if (o_.templ == "power") {
      const auto fg = maps(o_.maps, 2);
      v = fi_residual(fg[0], fg[1], o_.n, check_options());
    } else if (o_.templ == "gx") {
      const auto f = maps(o_.maps, 1);
      v = check_gfi({{poly(o_.G, 1), f[0]}}, poly(o_.H.empty() ? "0" : o_.H, 1), check_options());
    } else {
      const auto t = identity_template();
      v = check_template(t, maps(o_.maps, t.unknowns()), o_.budget);
    }
    emit(io::verdict_to_json(v));
    return v.holds ? kExitOk : kExitViolated;
  }

  int solve_fi_cmd() {
    const auto t = identity_template();
    const auto s = solve(t, o_.budget);
    Json j = io::solution_to_json(s);
    const std::size_t d = algebra()->dim();
    j["rows"] = t.domain_elements(o_.budget).size() * d;
    j["cols"] = t.unknowns() * d * d;
    int code = kExitOk;
    if (!o_.contains.empty()) {
      const bool in = s.contains(maps(o_.contains, t.unknowns()));
      j["contains"] = in;
      if (!in) code = kExitViolated;
    } else {
      j["contains"] = nullptr;
    }
    emit(j);
    return code;
  }

  int decompose_cmd() {
    const auto T = maps(o_.map, 1);
    const auto r = elementary_decomposition(T[0], o_.max_terms);
    Json j;
    j["success"] = r.success;
    Json terms = Json::array();
    for (const auto& [a, b] : r.terms) {
      Json t;
      t["a"] = format_element(a);
      t["b"] = format_element(b);
      terms.push_back(t);
    }
    j["terms"] = terms;
    j["count"] = r.terms.size();
    if (!r.success) j["failure"] = r.failure;
    emit(j);
    return r.success ? kExitOk : kExitViolated;
  }

  int binom_cmd() {
    Json j;
    j["k"] = o_.bk;
    j["t"] = o_.bt;
    j["p"] = o_.p;
    j["value"] = binom_mod_p(o_.bk, o_.bt, static_cast<std::uint64_t>(o_.p));
    emit(j);
    return kExitOk;
  }

  int binomial_witness_cmd() {
    const auto r = binomial_witness(o_.bk, static_cast<std::uint64_t>(o_.p));
    Json j;
    j["k"] = o_.bk;
    j["p"] = o_.p;
    j["m"] = r.m;
    j["residue"] = r.residue;
    emit(j);
    return kExitOk;
  }

  int poly_p_cmd() {
    const auto P = poly_P(static_cast<std::uint64_t>(o_.n), static_cast<std::uint64_t>(o_.p));
    Json j;
    j["n"] = o_.n;
    j["p"] = o_.p;
    j["zero"] = P.is_zero();
    j["degree"] = P.degree();
    Json coeffs = Json::array();
    for (auto e : P.support()) coeffs.push_back(Json{{"exp", e}, {"coeff", P.coefficient(e)}});
    j["coefficients"] = coeffs;
    emit(j);
    return kExitOk;
  }

  int poly_q_cmd() {
    const auto Q = poly_Q(static_cast<std::uint64_t>(o_.p), o_.l, o_.m, context(), std::nullopt, o_.budget);
    Json j;
    j["degree"] = degree_json(Q.degree());
    j["size"] = Q.size();
    if (!o_.at.empty()) {
      const auto xs = elements(o_.at);
      if (xs.size() != 2) throw InputError("--at needs two elements for Q");
      j["value"] = format_element(Q.eval(xs));
    }
    emit(j);
    return kExitOk;
  }

  int classify_cmd() {
    const auto c = classify_case(static_cast<std::uint64_t>(o_.n), static_cast<std::uint64_t>(o_.p));
    Json j;
    j["case"] = to_string(c.kind);
    j["l"] = c.l;
    if (c.kind == ExponentCase::kII) j["m"] = c.m;
    j["k"] = c.k;
    emit(j);
    return kExitOk;
  }

  int p_nonroot_cmd() {
    const auto r = find_P_nonroot(static_cast<std::uint64_t>(o_.n), static_cast<std::uint64_t>(o_.p), o_.q);
    Json j;
    j["found"] = r.nonroot.has_value();
    j["field"] = r.field->name();
    if (r.nonroot) {
      j["element"] = format_element(*r.nonroot);
      j["coords"] = io::element_to_json(*r.nonroot);
      j["value"] = format_element(eval_P(static_cast<std::uint64_t>(o_.n), *r.nonroot));
    } else {
      j["element"] = nullptr;
    }
    j["scanned"] = r.scanned;
    emit(j);
    return kExitOk;
  }

  int scaling_cmd() {
    const auto r = scaling_filter(static_cast<std::uint64_t>(o_.p), o_.n);
    Json j;
    j["result"] = r.forces_zero ? "forces_zero" : "inconclusive";
    if (r.forces_zero) {
      j["k"] = r.k;
      j["value"] = r.value;
    }
    emit(j);
    return kExitOk;
  }

  int units_cmd() {
    const auto A = algebra();
    const auto r = units_additively_generate(*A, o_.budget);
    Json j;
    j["generates"] = r.generates;
    j["rank"] = r.rank;
    j["dim"] = A->dim();
    j["units"] = r.units;
    emit(j);
    return kExitOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  AlgebraPtr algebra_;
  ContextPtr ctx_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Generalized polynomial identities over finite algebras", "gpi");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Enumeration budget (elements)");
  };
  auto add_algebra = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--algebra", o.algebra, "Algebra descriptor JSON (or builtin name such as m2f3.json)");
    if (required) opt->required();
    add_common(sub);
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_flag("--sampled", o.sampled, "Random instead of exhaustive substitution");
    sub->add_option("--seed", o.seed, "Seed for sampled mode");
    sub->add_option("--trials", o.trials, "Number of random assignments");
  };
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "Generalized polynomial")->required();
    sub->add_option("--vars", o.vars, "Number of variables (default: highest used)");
  };

  std::map<CLI::App*, std::function<int(Runner&)>> handlers;

  auto* c_alg = app.add_subcommand("algebra", "Build and inspect an algebra");
  add_algebra(c_alg, false);
  c_alg->add_option("--kind", o.kind, "field | matrix");
  c_alg->add_option("--n", o.n, "Matrix size");
  c_alg->add_option("--p", o.p, "Characteristic");
  c_alg->add_option("--k", o.k, "Extension degree");
  c_alg->add_option("--modulus", o.modulus, "Comma-separated modulus coefficients, constant term first");
  c_alg->add_option("--centralizer", o.centralizer, "Semicolon-separated elements");
  c_alg->add_option("--element", o.element, "Element to invert");
  c_alg->add_option("--exp", o.exponent, "Power of --element");
  handlers[c_alg] = [](Runner& r) { return r.algebra_cmd(); };

  auto* c_eval = app.add_subcommand("eval", "Evaluate a polynomial");
  add_algebra(c_eval);
  add_expr(c_eval);
  c_eval->add_option("--at", o.at, "Semicolon-separated assignment")->required();
  handlers[c_eval] = [](Runner& r) { return r.eval_cmd(); };

  auto* c_lin = app.add_subcommand("linearize", "Linearization F^(t)");
  add_algebra(c_lin);
  add_expr(c_lin);
  c_lin->add_option("--t", o.t, "Order")->required();
  handlers[c_lin] = [](Runner& r) { return r.linearize_cmd(); };

  auto* c_hom = app.add_subcommand("homog", "Homogeneous part of one degree");
  add_algebra(c_hom);
  add_expr(c_hom);
  c_hom->add_option("--degree", o.degree, "Degree")->required();
  handlers[c_hom] = [](Runner& r) { return r.homog_cmd(); };

  auto* c_zero = app.add_subcommand("is-zero-formal", "Zero test in the free product");
  add_algebra(c_zero);
  add_expr(c_zero);
  handlers[c_zero] = [](Runner& r) { return r.zero_cmd(); };

  auto* c_gpi = app.add_subcommand("check-gpi", "Check a polynomial identity");
  add_algebra(c_gpi);
  add_expr(c_gpi);
  add_sampling(c_gpi);
  handlers[c_gpi] = [](Runner& r) { return r.check_gpi_cmd(); };

  auto* c_hua = app.add_subcommand("check-hua", "Verify Hua's identity on admissible unit pairs");
  add_algebra(c_hua);
  handlers[c_hua] = [](Runner& r) { return r.check_hua_cmd(); };

  auto add_template = [&](CLI::App* sub) {
    sub->add_option("--template", o.templ, "power | gx | template JSON file")->required();
    sub->add_option("--n", o.n, "Exponent for the power template");
    sub->add_option("--G", o.G, "G(X) for the gx template");
    sub->add_option("--H", o.H, "H(X) for the gx template");
  };

  auto* c_fi = app.add_subcommand("check-fi", "Check concrete maps against a functional identity");
  add_algebra(c_fi);
  add_template(c_fi);
  add_sampling(c_fi);
  c_fi->add_option("--maps", o.maps, "Comma-separated map specs")->required();
  c_fi->add_option("--w", o.w, "w(X) for the w template");
  handlers[c_fi] = [](Runner& r) { return r.check_fi_cmd(); };

  auto* c_solve = app.add_subcommand("solve-fi", "Solve a functional identity");
  add_algebra(c_solve);
  add_template(c_solve);
  c_solve->add_option("--contains", o.contains, "Map tuple to test for membership");
  handlers[c_solve] = [](Runner& r) { return r.solve_fi_cmd(); };

  auto* c_dec = app.add_subcommand("decompose", "Write a linear map as x -> sum a_i x b_i");
  add_algebra(c_dec);
  c_dec->add_option("--map", o.map, "Map spec")->required();
  c_dec->add_option("--max-terms", o.max_terms, "Term limit (default d^2)");
  handlers[c_dec] = [](Runner& r) { return r.decompose_cmd(); };

  auto* c_binom = app.add_subcommand("binom", "C(k, t) mod p");
  c_binom->add_option("--k", o.bk)->required();
  c_binom->add_option("--t", o.bt)->required();
  c_binom->add_option("--p", o.p)->required();
  handlers[c_binom] = [](Runner& r) { return r.binom_cmd(); };

  auto* c_l3 = app.add_subcommand("lemma3", "m with p^m || k-1 and C(k, p^m + 1) mod p");
  c_l3->add_option("--k", o.bk)->required();
  c_l3->add_option("--p", o.p)->required();
  handlers[c_l3] = [](Runner& r) { return r.binomial_witness_cmd(); };

  auto* c_pp = app.add_subcommand("poly-p", "(1+X)^n + (1-X)^n - 2X^n - 2 over F_p");
  c_pp->add_option("--n", o.n)->required();
  c_pp->add_option("--p", o.p)->required();
  handlers[c_pp] = [](Runner& r) { return r.poly_p_cmd(); };

  auto* c_pq = app.add_subcommand("poly-q", "Frobenius-difference polynomial Q(X, Y)");
  add_algebra(c_pq);
  c_pq->add_option("--p", o.p)->required();
  c_pq->add_option("--l", o.l)->required();
  c_pq->add_option("--m", o.m)->required();
  c_pq->add_option("--at", o.at, "Two semicolon-separated elements");
  handlers[c_pq] = [](Runner& r) { return r.poly_q_cmd(); };

  auto* c_cls = app.add_subcommand("classify", "Case I / II parameters of an exponent");
  c_cls->add_option("--n", o.n)->required();
  c_cls->add_option("--p", o.p)->required();
  handlers[c_cls] = [](Runner& r) { return r.classify_cmd(); };

  auto* c_nr = app.add_subcommand("p-nonroot", "First element of GF(q) where P does not vanish");
  c_nr->add_option("--n", o.n)->required();
  c_nr->add_option("--p", o.p)->required();
  c_nr->add_option("--q", o.q)->required();
  handlers[c_nr] = [](Runner& r) { return r.p_nonroot_cmd(); };

  auto* c_sf = app.add_subcommand("scaling-filter", "Whether scaling forces f(x) = x^n g(x^-1) to vanish");
  c_sf->add_option("--p", o.p)->required();
  c_sf->add_option("--n", o.n)->required();
  handlers[c_sf] = [](Runner& r) { return r.scaling_cmd(); };

  auto* c_units = app.add_subcommand("units-generate", "Whether units additively generate the algebra");
  add_algebra(c_units);
  handlers[c_units] = [](Runner& r) { return r.units_cmd(); };

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  Runner runner(o, out);
  try {
    for (auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(runner);
  } catch (const Error& e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "gpi: error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "gpi: error: invalid number\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "gpi: error: number out of range\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gpi::cli
