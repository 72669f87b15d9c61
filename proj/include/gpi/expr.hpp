#pragma once

// Concrete syntax for generalized polynomials.
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := var | coeff | int | "(" expr ")"
//   var    := "X" nat? | "Y" | "Z" | "x" | "xinv"      (Y = X2, Z = X3)
//   coeff  := basis-name | "[" int ("," int)* "]"
//
// Juxtaposition is not multiplication. Integers denote n * 1 reduced mod p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpi/ncpoly.hpp"

namespace gpi {

/// Generic polynomials use X = X1, Y = X2, Z = X3, X4, ...; solver templates use x (index 0) and xinv (index 1).
enum class VariableNaming { kGeneric, kTemplate };

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

struct ExprAst {
  enum class Kind { kSum, kProduct, kPower, kVariable, kCoefficient, kInteger };

  Kind kind = Kind::kInteger;
  std::vector<ExprAst> children;
  SourceSpan span;

  std::vector<int> signs;              // kSum: +1 / -1 per child
  std::uint64_t exponent = 0;          // kPower
  std::size_t variable = 0;            // kVariable (0-based)
  std::string name;                    // kCoefficient given by basis name
  std::vector<std::int64_t> coords;    // kCoefficient given as a bracketed vector
  std::int64_t integer = 0;            // kInteger
};

ExprAst parse_ast(std::string_view text, VariableNaming naming = VariableNaming::kGeneric);

/// Highest variable index used plus one (0 for a constant expression).
std::size_t variables_used(const ExprAst& ast);

GenPoly lower(const ExprAst& ast, const ContextPtr& ctx, std::size_t num_vars);

/// Parses and canonicalizes. Throws ParseError or InputError (unknown basis name, variable out of range).
GenPoly parse_expr(std::string_view text, const ContextPtr& ctx, std::size_t num_vars,
                   VariableNaming naming = VariableNaming::kGeneric);

/// Evaluates a variable-free expression directly in A (no center-field requirement).
Element parse_element(std::string_view text, const Algebra& A);

/// Element as an expression atom: a basis label, a parenthesized combination, or a coordinate vector.
std::string format_element(const Element& a);

/// Text that parses back to the same normal form.
std::string format_poly(const GenPoly& g, VariableNaming naming = VariableNaming::kGeneric);

std::string variable_name(std::size_t index, std::size_t num_vars, VariableNaming naming);

/// True if the name would be read as a variable rather than a basis element.
bool is_reserved_name(std::string_view name);

}  // namespace gpi
