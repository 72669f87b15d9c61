#pragma once

// JSON forms of descriptors, polynomials, maps, verdicts, solution spaces and templates.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gpi/identity.hpp"
#include "gpi/solver.hpp"

namespace gpi::io {

using Json = nlohmann::ordered_json;

AlgebraDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const Algebra& A);

/// Builtin algebras by short name: gf<q>, m<n>f<q>, f<p>xf<p>... (componentwise product).
AlgebraPtr builtin_algebra(const std::string& name);

/// Reads a descriptor file. A missing file whose stem is a builtin name yields that builtin.
AlgebraPtr load_algebra(const std::filesystem::path& path);

Json element_to_json(const Element& a);
Element element_from_json(const Algebra& A, const Json& j);

/// {"algebra": name, "vars": m, "terms": [{"coeffs": [[int]], "vars": [int]}]} with 0-based variables.
Json poly_to_json(const GenPoly& g);
GenPoly poly_from_json(const ContextPtr& ctx, const Json& j);

Json map_to_json(const AdditiveMap& f);
AdditiveMap map_from_json(const Algebra& A, const Json& j);

Json verdict_to_json(const Verdict& v);
Json solution_to_json(const SolutionSpace& s);

/// {"unknowns", "domain", "terms": [{"L", "slot", "arg", "R"}], "rhs"}
IdentityTemplate template_from_json(const ContextPtr& ctx, const Json& j);

Json read_file(const std::filesystem::path& path);

}  // namespace gpi::io
