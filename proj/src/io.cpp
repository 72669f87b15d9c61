#include "gpi/io.hpp"

#include <fstream>
#include <regex>

#include "gpi/error.hpp"
#include "gpi/expr.hpp"

namespace gpi::io {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::pair<std::int64_t, std::int64_t> prime_power(std::int64_t q) {
  for (std::int64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::int64_t k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) break;
    return {p, k};
  }
  throw InputError("field size " + std::to_string(q) + " is not a prime power");
}

}  // namespace

AlgebraDescriptor descriptor_from_json(const Json& j) {
  AlgebraDescriptor d;
  d.p = get_field<std::int64_t>(j, "p");
  d.basis = get_field<std::vector<std::string>>(j, "basis");
  d.mul_table = get_field<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "mul_table");
  d.one = get_field<std::vector<std::int64_t>>(j, "one");
  const auto dim = get_field<std::int64_t>(j, "dim");
  if (dim < 1 || static_cast<std::size_t>(dim) != d.basis.size()) {
    throw InputError("dim " + std::to_string(dim) + " does not match the " + std::to_string(d.basis.size()) +
                     " basis labels");
  }
  d.name = j.contains("name") ? get_field<std::string>(j, "name") : "A";
  return d;
}

Json descriptor_to_json(const Algebra& A) {
  const auto& d = A.descriptor();
  Json j;
  j["name"] = A.name();
  j["p"] = A.prime();
  j["dim"] = A.dim();
  j["basis"] = A.basis_labels();
  j["mul_table"] = d.mul_table;
  j["one"] = d.one;
  return j;
}

AlgebraPtr builtin_algebra(const std::string& name) {
  static const std::regex field_re("gf([0-9]+)");
  static const std::regex matrix_re("m([0-9]+)(?:g?f)([0-9]+)");
  static const std::regex product_re("f([0-9]+)((?:xf[0-9]+)+)");
  std::smatch m;
  if (std::regex_match(name, m, field_re)) {
    const auto [p, k] = prime_power(std::stoll(m[1]));
    return field_algebra(p, k);
  }
  if (std::regex_match(name, m, matrix_re)) {
    const auto [p, k] = prime_power(std::stoll(m[2]));
    return matrix_algebra(std::stoll(m[1]), p, k);
  }
  if (std::regex_match(name, m, product_re)) {
    const std::int64_t p = std::stoll(m[1]);
    const std::string rest = m[2];
    std::size_t copies = 1;
    static const std::regex factor_re("xf([0-9]+)");
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), factor_re); it != std::sregex_iterator(); ++it) {
      if (std::stoll((*it)[1]) != p) throw InputError("product factors must share one prime");
      ++copies;
    }
    return product_of_prime_fields(p, copies);
  }
  throw InputError("unknown builtin algebra '" + name + "' (expected gf<q>, m<n>f<q> or f<p>xf<p>...)");
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    const auto stem = path.stem().string();
    try {
      return builtin_algebra(stem);
    } catch (const InputError&) {
      throw InputError("cannot open " + path.string() + " and '" + stem + "' is not a builtin algebra");
    }
  }
  return Algebra::build(descriptor_from_json(read_file(path)));
}

Json element_to_json(const Element& a) {
  Json j = Json::array();
  for (Residue c : a.coords()) j.push_back(c);
  return j;
}

Element element_from_json(const Algebra& A, const Json& j) {
  try {
    return A.element_from_ints(j.get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception&) {
    throw InputError("element must be an array of integers");
  }
}

Json poly_to_json(const GenPoly& g) {
  Json j;
  j["algebra"] = g.algebra().name();
  j["vars"] = g.num_vars();
  Json terms = Json::array();
  for (const auto& mono : g.terms()) {
    Json t;
    Json coeffs = Json::array();
    for (const auto& c : mono.coeffs) coeffs.push_back(element_to_json(c));
    t["coeffs"] = coeffs;
    t["vars"] = mono.vars;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

GenPoly poly_from_json(const ContextPtr& ctx, const Json& j) {
  const auto m = get_field<std::size_t>(j, "vars");
  if (j.contains("algebra") && get_field<std::string>(j, "algebra") != ctx->algebra().name()) {
    throw InputError("polynomial refers to algebra '" + j.at("algebra").get<std::string>() + "', expected '" +
                     ctx->algebra().name() + "'");
  }
  const Algebra& A = ctx->algebra();
  std::vector<GenMonomial> terms;
  for (const auto& t : get_field<Json>(j, "terms")) {
    GenMonomial mono;
    for (const auto& c : get_field<Json>(t, "coeffs")) mono.coeffs.push_back(element_from_json(A, c));
    mono.vars = get_field<std::vector<std::size_t>>(t, "vars");
    if (mono.coeffs.size() != mono.vars.size() + 1) throw InputError("each term needs one more coefficient than variables");
    for (auto v : mono.vars)
      if (v >= m) throw InputError("variable index " + std::to_string(v) + " out of range");
    terms.push_back(std::move(mono));
  }
  return GenPoly::from_terms(ctx, m, terms);
}

Json map_to_json(const AdditiveMap& f) {
  Json rows = Json::array();
  const auto& M = f.matrix();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(i, c));
    rows.push_back(row);
  }
  return rows;
}

AdditiveMap map_from_json(const Algebra& A, const Json& j) {
  const Json& rows = j.is_object() ? j.at("matrix") : j;
  std::vector<std::vector<std::int64_t>> v;
  try {
    v = rows.get<std::vector<std::vector<std::int64_t>>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("map matrix must be an array of integer rows");
  }
  FpMatrix M(A.dim(), A.dim(), A.prime());
  if (v.size() != A.dim()) throw InputError("map matrix must have " + std::to_string(A.dim()) + " rows");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].size() != A.dim()) throw InputError("map matrix must have " + std::to_string(A.dim()) + " columns");
    for (std::size_t c = 0; c < v[i].size(); ++c) M.at(i, c) = reduce(v[i][c], A.prime());
  }
  return {A, std::move(M)};
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.holds) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::array();
    for (const auto& x : v.witness) w.push_back(element_to_json(x));
    j["witness"] = w;
  }
  j["checked"] = v.checked;
  j["mode"] = v.mode();
  if (v.sampled) {
    j["seed"] = v.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

Json solution_to_json(const SolutionSpace& s) {
  Json j;
  j["consistent"] = s.consistent;
  j["unknowns"] = s.unknowns;
  j["dimension"] = s.dimension();
  Json basis = Json::array();
  for (const auto& tuple : s.basis) {
    Json t = Json::array();
    for (const auto& f : tuple) t.push_back(map_to_json(f));
    basis.push_back(t);
  }
  j["basis"] = basis;
  if (s.particular) {
    Json t = Json::array();
    for (const auto& f : *s.particular) t.push_back(map_to_json(f));
    j["particular"] = t;
  } else {
    j["particular"] = nullptr;
  }
  return j;
}

IdentityTemplate template_from_json(const ContextPtr& ctx, const Json& j) {
  std::vector<IdentityTemplate::TextTerm> terms;
  for (const auto& t : get_field<Json>(j, "terms")) {
    IdentityTemplate::TextTerm term;
    term.L = t.contains("L") ? get_field<std::string>(t, "L") : "1";
    term.R = t.contains("R") ? get_field<std::string>(t, "R") : "1";
    term.slot = get_field<std::size_t>(t, "slot");
    term.arg = t.contains("arg") ? get_field<std::string>(t, "arg") : "x";
    terms.push_back(std::move(term));
  }
  const std::string rhs = j.contains("rhs") ? get_field<std::string>(j, "rhs") : "0";
  return IdentityTemplate::parse(ctx, get_field<std::size_t>(j, "unknowns"), get_field<std::string>(j, "domain"),
                                 terms, rhs);
}

}  // namespace gpi::io
