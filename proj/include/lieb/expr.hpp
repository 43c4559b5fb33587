// Symbolic expressions over coordinates (x1,x2,x3), the algebra parameter,
// and elementary functions (exp, trig, hyperbolic). Used for invariant
// vector fields, Poisson bracket entries, and group-coordinate formulas.
// Expressions are immutable shared trees; `simplify` produces a canonical
// ordering with folded constants so equal-looking output is deterministic.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieb/scalar.hpp"

namespace lieb {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Num, Sym, Add, Mul, Pow, Fun };
  Kind kind;
  Rat num;                // Kind::Num
  std::string name;       // Kind::Sym (variable) or Kind::Fun (function name)
  std::vector<Expr> ch;   // Add/Mul children, Pow base, Fun argument
  long long expo = 0;     // Kind::Pow integer exponent
};

Expr enumber(const Rat& v);
Expr enumber(long long v);
Expr esym(const std::string& name);
Expr eadd(std::vector<Expr> ch);
Expr emul(std::vector<Expr> ch);
Expr epow(Expr base, long long e);
Expr efun(const std::string& name, Expr arg);  // exp sin cos tan sinh cosh tanh

Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(const Expr& x, const Expr& y);
Expr operator/(const Expr& x, const Expr& y);  // x * y^-1
Expr operator-(const Expr& x);

// Canonical form: flattened sums/products, folded numeric constants,
// combined like terms and powers, merged exponentials, functions folded at
// zero arguments. Deterministic child ordering.
Expr simplify(const Expr& e);

// Total order on canonical trees (used for the deterministic ordering and
// for structural equality: cmp == 0).
int expr_cmp(const Expr& x, const Expr& y);

bool is_zero(const Expr& e);   // after simplify: the literal 0
bool is_const(const Expr& e);  // no symbols anywhere

Expr diff(const Expr& e, const std::string& var);

// Simultaneous replacement of symbols by expressions, then canonicalization.
// Symbols absent from the map stay untouched.
Expr subst(const Expr& e, const std::map<std::string, Expr>& at);

// Exact evaluation with rational arithmetic. Returns nullopt when a value
// would be irrational (function of a nonzero argument), when a symbol is
// missing from the assignment, or on division by zero.
std::optional<Rat> eval_exact(const Expr& e, const std::map<std::string, Rat>& at);

// Floating evaluation; throws std::invalid_argument on a missing symbol.
double eval_double(const Expr& e, const std::map<std::string, double>& at);

// Embeds a rational function of the algebra parameter.
Expr scalar_to_expr(const Scalar& s);

Expr parse_expr(const std::string& text);
std::string expr_str(const Expr& e);
std::string expr_latex(const Expr& e);

// 3x3 matrices of expressions: frames of invariant vector fields and
// Poisson structure matrices.
struct ExprMat3 {
  std::array<std::array<Expr, 3>, 3> m;
  ExprMat3();
  std::array<Expr, 3>& operator[](int i) { return m[i]; }
  const std::array<Expr, 3>& operator[](int i) const { return m[i]; }
  static ExprMat3 identity();
  ExprMat3 transpose() const;
  ExprMat3 simplified() const;
  friend ExprMat3 operator*(const ExprMat3& x, const ExprMat3& y);
  friend ExprMat3 operator+(const ExprMat3& x, const ExprMat3& y);
  friend ExprMat3 operator-(const ExprMat3& x, const ExprMat3& y);
};

// Determinant and adjugate-based inverse (entries are expressions; the
// inverse divides by the determinant symbolically).
Expr expr_det(const ExprMat3& m);
ExprMat3 expr_inverse(const ExprMat3& m);

}  // namespace lieb
