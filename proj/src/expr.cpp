#include "gpi/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

#include "gpi/error.hpp"

namespace gpi {

namespace {

enum class Tok { kIdent, kNumber, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kLBracket, kRBracket, kComma, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      SourceSpan span{line_, column_, 0};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", span});
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) advance();
        span.length = pos_ - start;
        out.push_back({Tok::kIdent, std::string(text_.substr(start, pos_ - start)), span});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        span.length = pos_ - start;
        out.push_back({Tok::kNumber, std::string(text_.substr(start, pos_ - start)), span});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::kPlus; break;
        case '-': kind = Tok::kMinus; break;
        case '*': kind = Tok::kStar; break;
        case '^': kind = Tok::kCaret; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case '[': kind = Tok::kLBracket; break;
        case ']': kind = Tok::kRBracket; break;
        case ',': kind = Tok::kComma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
      }
      span.length = 1;
      out.push_back({kind, std::string(1, c), span});
      advance();
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::optional<std::size_t> generic_variable(std::string_view name) {
  if (name == "Y") return 1;
  if (name == "Z") return 2;
  if (name.empty() || name[0] != 'X') return std::nullopt;
  if (name.size() == 1) return 0;
  std::size_t idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
    if (idx > 65535) return std::nullopt;
  }
  if (idx == 0) return std::nullopt;
  return idx - 1;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, VariableNaming naming) : tokens_(std::move(tokens)), naming_(naming) {}

  ExprAst parse() {
    ExprAst e = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(msg, t.span.line, t.span.column);
  }

  ExprAst expr() {
    ExprAst sum;
    sum.kind = ExprAst::Kind::kSum;
    sum.span = peek().span;
    int sign = 1;
    if (peek().kind == Tok::kMinus) {
      take();
      sign = -1;
    }
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      sign = take().kind == Tok::kPlus ? 1 : -1;
      sum.children.push_back(term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  ExprAst term() {
    ExprAst prod;
    prod.kind = ExprAst::Kind::kProduct;
    prod.span = peek().span;
    prod.children.push_back(factor());
    while (peek().kind == Tok::kStar) {
      take();
      prod.children.push_back(factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    if (peek().kind == Tok::kIdent || peek().kind == Tok::kNumber || peek().kind == Tok::kLParen ||
        peek().kind == Tok::kLBracket) {
      fail("expected '*' between factors (juxtaposition is not multiplication)");
    }
    return prod;
  }

  ExprAst factor() {
    ExprAst base = atom();
    if (peek().kind == Tok::kIdent || peek().kind == Tok::kNumber || peek().kind == Tok::kLParen ||
        peek().kind == Tok::kLBracket) {
      fail("expected '*' between factors (juxtaposition is not multiplication)");
    }
    if (peek().kind != Tok::kCaret) return base;
    const Token& caret = take();
    if (peek().kind != Tok::kNumber) fail("expected a non-negative integer exponent after '^'", &caret);
    ExprAst pw;
    pw.kind = ExprAst::Kind::kPower;
    pw.span = base.span;
    pw.exponent = parse_nat(take());
    pw.children.push_back(std::move(base));
    return pw;
  }

  std::uint64_t parse_nat(const Token& t) {
    std::uint64_t v = 0;
    for (char c : t.text) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("integer literal too large", &t);
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  }

  std::int64_t parse_int(const Token& t) {
    const auto v = parse_nat(t);
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail("integer literal too large", &t);
    return static_cast<std::int64_t>(v);
  }

  ExprAst atom() {
    const Token& t = take();
    ExprAst node;
    node.span = t.span;
    switch (t.kind) {
      case Tok::kNumber:
        node.kind = ExprAst::Kind::kInteger;
        node.integer = parse_int(t);
        return node;
      case Tok::kLParen: {
        ExprAst inner = expr();
        if (peek().kind != Tok::kRParen) fail("expected ')'");
        take();
        return inner;
      }
      case Tok::kLBracket: {
        node.kind = ExprAst::Kind::kCoefficient;
        while (true) {
          bool negative = false;
          if (peek().kind == Tok::kMinus) {
            take();
            negative = true;
          }
          if (peek().kind != Tok::kNumber) fail("expected an integer coordinate");
          const auto v = parse_int(take());
          node.coords.push_back(negative ? -v : v);
          if (peek().kind == Tok::kComma) {
            take();
            continue;
          }
          if (peek().kind != Tok::kRBracket) fail("expected ',' or ']'");
          take();
          break;
        }
        return node;
      }
      case Tok::kIdent:
        return identifier(t);
      default:
        fail("unexpected " + describe(t), &t);
    }
  }

  ExprAst identifier(const Token& t) {
    ExprAst node;
    node.span = t.span;
    if (naming_ == VariableNaming::kGeneric) {
      if (auto v = generic_variable(t.text)) {
        node.kind = ExprAst::Kind::kVariable;
        node.variable = *v;
        return node;
      }
      if (t.text == "x" || t.text == "xinv") fail("variable '" + t.text + "' is reserved for solver templates", &t);
    } else {
      if (t.text == "x" || t.text == "xinv") {
        node.kind = ExprAst::Kind::kVariable;
        node.variable = t.text == "x" ? 0 : 1;
        return node;
      }
      if (generic_variable(t.text)) fail("templates use the variables x and xinv, not '" + t.text + "'", &t);
    }
    node.kind = ExprAst::Kind::kCoefficient;
    node.name = t.text;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VariableNaming naming_;
};

void collect_max_var(const ExprAst& ast, std::size_t& m) {
  if (ast.kind == ExprAst::Kind::kVariable) m = std::max(m, ast.variable + 1);
  for (const auto& c : ast.children) collect_max_var(c, m);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// A label can be printed verbatim if it parses back to its own basis element.
bool printable_label(const Algebra& A, std::size_t i) {
  const auto& label = A.basis_labels()[i];
  if (is_identifier(label)) return !is_reserved_name(label);
  if (is_number(label) && label.size() < 10) return A.basis(i) == A.scalar(std::stoll(label));
  return false;
}

// c with a = c * 1, if a is a scalar.
std::optional<Residue> scalar_value(const Element& a) {
  const Algebra& A = a.algebra();
  const Element& one = A.one();
  std::size_t i = 0;
  while (one[i] == 0) ++i;
  const Residue c = mul_mod(a[i], inv_mod(one[i], A.prime()), A.prime());
  if (a != A.scalar(c)) return std::nullopt;
  return c;
}

}  // namespace

bool is_reserved_name(std::string_view name) {
  return name == "x" || name == "xinv" || generic_variable(name).has_value();
}

ExprAst parse_ast(std::string_view text, VariableNaming naming) {
  Parser parser(Lexer(text).run(), naming);
  return parser.parse();
}

std::size_t variables_used(const ExprAst& ast) {
  std::size_t m = 0;
  collect_max_var(ast, m);
  return m;
}

GenPoly lower(const ExprAst& ast, const ContextPtr& ctx, std::size_t num_vars) {
  const Algebra& A = ctx->algebra();
  switch (ast.kind) {
    case ExprAst::Kind::kSum: {
      GenPoly out(ctx, num_vars);
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        auto child = lower(ast.children[i], ctx, num_vars);
        out = ast.signs[i] > 0 ? out + child : out - child;
      }
      return out;
    }
    case ExprAst::Kind::kProduct: {
      GenPoly out = lower(ast.children[0], ctx, num_vars);
      for (std::size_t i = 1; i < ast.children.size(); ++i) out = out * lower(ast.children[i], ctx, num_vars);
      return out;
    }
    case ExprAst::Kind::kPower:
      return lower(ast.children[0], ctx, num_vars).pow(ast.exponent);
    case ExprAst::Kind::kVariable:
      if (ast.variable >= num_vars) {
        throw ParseError("variable index " + std::to_string(ast.variable + 1) + " exceeds the " +
                             std::to_string(num_vars) + " available variables",
                         ast.span.line, ast.span.column);
      }
      return GenPoly::variable(ctx, num_vars, ast.variable);
    case ExprAst::Kind::kInteger:
      return GenPoly::integer(ctx, num_vars, ast.integer);
    case ExprAst::Kind::kCoefficient: {
      if (!ast.name.empty()) {
        auto idx = A.basis_index(ast.name);
        if (!idx) {
          throw ParseError("unknown basis name '" + ast.name + "' in " + A.name(), ast.span.line, ast.span.column);
        }
        return GenPoly::constant(ctx, num_vars, A.basis(*idx));
      }
      if (ast.coords.size() != A.dim()) {
        throw ParseError("coordinate vector has " + std::to_string(ast.coords.size()) + " entries, expected " +
                             std::to_string(A.dim()),
                         ast.span.line, ast.span.column);
      }
      return GenPoly::constant(ctx, num_vars, A.element_from_ints(ast.coords));
    }
  }
  throw Error("unreachable expression kind");
}

GenPoly parse_expr(std::string_view text, const ContextPtr& ctx, std::size_t num_vars, VariableNaming naming) {
  return lower(parse_ast(text, naming), ctx, num_vars);
}

namespace {

Element eval_constant(const ExprAst& ast, const Algebra& A) {
  switch (ast.kind) {
    case ExprAst::Kind::kSum: {
      Element out = A.zero();
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        const Element c = eval_constant(ast.children[i], A);
        out = ast.signs[i] > 0 ? out + c : out - c;
      }
      return out;
    }
    case ExprAst::Kind::kProduct: {
      Element out = eval_constant(ast.children[0], A);
      for (std::size_t i = 1; i < ast.children.size(); ++i) out = out * eval_constant(ast.children[i], A);
      return out;
    }
    case ExprAst::Kind::kPower:
      return A.pow(eval_constant(ast.children[0], A), ast.exponent);
    case ExprAst::Kind::kVariable:
      throw ParseError("an element cannot contain variables", ast.span.line, ast.span.column);
    case ExprAst::Kind::kInteger:
      return A.scalar(ast.integer);
    case ExprAst::Kind::kCoefficient:
      if (!ast.name.empty()) {
        auto idx = A.basis_index(ast.name);
        if (!idx) {
          throw ParseError("unknown basis name '" + ast.name + "' in " + A.name(), ast.span.line, ast.span.column);
        }
        return A.basis(*idx);
      }
      if (ast.coords.size() != A.dim()) {
        throw ParseError("coordinate vector has " + std::to_string(ast.coords.size()) + " entries, expected " +
                             std::to_string(A.dim()),
                         ast.span.line, ast.span.column);
      }
      return A.element_from_ints(ast.coords);
  }
  throw Error("unreachable expression kind");
}

}  // namespace

Element parse_element(std::string_view text, const Algebra& A) { return eval_constant(parse_ast(text), A); }

std::string variable_name(std::size_t index, std::size_t num_vars, VariableNaming naming) {
  if (naming == VariableNaming::kTemplate) return index == 0 ? "x" : "xinv";
  if (num_vars <= 3 && index < 3) return std::string(1, "XYZ"[index]);
  return "X" + std::to_string(index + 1);
}

std::string format_element(const Element& a) {
  const Algebra& A = a.algebra();
  bool labels_ok = true;
  for (std::size_t i = 0; i < A.dim() && labels_ok; ++i)
    if (a[i] != 0) labels_ok = printable_label(A, i);
  if (a.is_zero()) return "0";
  if (auto c = scalar_value(a)) return std::to_string(*c);
  std::ostringstream os;
  if (!labels_ok) {
    os << "[";
    for (std::size_t i = 0; i < A.dim(); ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
  }
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < A.dim(); ++i) nonzero += a[i] != 0;
  if (nonzero > 1) os << "(";
  bool first = true;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i] != 1) os << a[i] << "*";
    os << A.basis_labels()[i];
  }
  if (nonzero > 1) os << ")";
  return os.str();
}

std::string format_poly(const GenPoly& g, VariableNaming naming) {
  if (g.is_zero()) return "0";
  const Element& one = g.algebra().one();
  std::ostringstream os;
  bool first_term = true;
  for (const auto& mono : g.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < mono.coeffs.size(); ++i) {
      if (mono.coeffs[i] != one) factors.push_back(format_element(mono.coeffs[i]));
      if (i < mono.vars.size()) factors.push_back(variable_name(mono.vars[i], g.num_vars(), naming));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace gpi
