#include "lieb/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lieb {

namespace {

Expr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

int kind_rank(ExprNode::Kind k) {
  switch (k) {
    case ExprNode::Kind::Num: return 0;
    case ExprNode::Kind::Sym: return 1;
    case ExprNode::Kind::Fun: return 2;
    case ExprNode::Kind::Pow: return 3;
    case ExprNode::Kind::Mul: return 4;
    case ExprNode::Kind::Add: return 5;
  }
  return 6;
}

Rat rat_ipow(const Rat& b, long long e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    return Rat(1) / rat_ipow(b, -e);
  }
  Rat acc(1), base = b;
  long long n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool is_num(const Expr& e, const Rat& v) {
  return e->kind == ExprNode::Kind::Num && e->num == v;
}

// Splits an additive term into (rational coefficient, symbolic key).
// The key of a plain number is the literal 1 so all constants merge.
std::pair<Rat, Expr> term_split(const Expr& e);
// Splits a multiplicative factor into (base, integer exponent).
std::pair<Expr, long long> factor_split(const Expr& e);

}  // namespace

Expr enumber(const Rat& v) {
  ExprNode n;
  n.kind = ExprNode::Kind::Num;
  n.num = v;
  return make(std::move(n));
}

Expr enumber(long long v) { return enumber(Rat(v)); }

Expr esym(const std::string& name) {
  ExprNode n;
  n.kind = ExprNode::Kind::Sym;
  n.name = name;
  return make(std::move(n));
}

Expr eadd(std::vector<Expr> ch) {
  ExprNode n;
  n.kind = ExprNode::Kind::Add;
  n.ch = std::move(ch);
  return make(std::move(n));
}

Expr emul(std::vector<Expr> ch) {
  ExprNode n;
  n.kind = ExprNode::Kind::Mul;
  n.ch = std::move(ch);
  return make(std::move(n));
}

Expr epow(Expr base, long long e) {
  ExprNode n;
  n.kind = ExprNode::Kind::Pow;
  n.ch.push_back(std::move(base));
  n.expo = e;
  return make(std::move(n));
}

Expr efun(const std::string& name, Expr arg) {
  ExprNode n;
  n.kind = ExprNode::Kind::Fun;
  n.name = name;
  n.ch.push_back(std::move(arg));
  return make(std::move(n));
}

Expr operator+(const Expr& x, const Expr& y) { return simplify(eadd({x, y})); }
Expr operator-(const Expr& x, const Expr& y) {
  return simplify(eadd({x, emul({enumber(-1), y})}));
}
Expr operator*(const Expr& x, const Expr& y) { return simplify(emul({x, y})); }
Expr operator/(const Expr& x, const Expr& y) {
  return simplify(emul({x, epow(y, -1)}));
}
Expr operator-(const Expr& x) { return simplify(emul({enumber(-1), x})); }

int expr_cmp(const Expr& x, const Expr& y) {
  int rx = kind_rank(x->kind), ry = kind_rank(y->kind);
  if (rx != ry) return rx < ry ? -1 : 1;
  switch (x->kind) {
    case ExprNode::Kind::Num:
      if (x->num == y->num) return 0;
      return x->num < y->num ? -1 : 1;
    case ExprNode::Kind::Sym:
      return x->name.compare(y->name) < 0 ? -1 : (x->name == y->name ? 0 : 1);
    case ExprNode::Kind::Fun: {
      int c = x->name.compare(y->name);
      if (c != 0) return c < 0 ? -1 : 1;
      return expr_cmp(x->ch[0], y->ch[0]);
    }
    case ExprNode::Kind::Pow: {
      int c = expr_cmp(x->ch[0], y->ch[0]);
      if (c != 0) return c;
      if (x->expo == y->expo) return 0;
      return x->expo < y->expo ? -1 : 1;
    }
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Add: {
      size_t n = std::min(x->ch.size(), y->ch.size());
      for (size_t i = 0; i < n; ++i) {
        int c = expr_cmp(x->ch[i], y->ch[i]);
        if (c != 0) return c;
      }
      if (x->ch.size() == y->ch.size()) return 0;
      return x->ch.size() < y->ch.size() ? -1 : 1;
    }
  }
  return 0;
}

bool is_zero(const Expr& e) { return is_num(e, Rat(0)); }

bool is_const(const Expr& e) {
  if (e->kind == ExprNode::Kind::Sym) return false;
  for (const auto& c : e->ch)
    if (!is_const(c)) return false;
  return true;
}

namespace {

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return expr_cmp(a, b) < 0; }
};

std::pair<Rat, Expr> term_split(const Expr& e) {
  if (e->kind == ExprNode::Kind::Num) return {e->num, enumber(1)};
  if (e->kind == ExprNode::Kind::Mul && !e->ch.empty() &&
      e->ch[0]->kind == ExprNode::Kind::Num) {
    Rat c = e->ch[0]->num;
    if (e->ch.size() == 2) return {c, e->ch[1]};
    std::vector<Expr> rest(e->ch.begin() + 1, e->ch.end());
    return {c, emul(std::move(rest))};
  }
  return {Rat(1), e};
}

std::pair<Expr, long long> factor_split(const Expr& e) {
  if (e->kind == ExprNode::Kind::Pow) return {e->ch[0], e->expo};
  return {e, 1};
}

Expr rebuild_term(const Rat& coeff, const Expr& key) {
  if (coeff == 0) return enumber(0);
  if (is_num(key, Rat(1))) return enumber(coeff);
  if (coeff == 1) return key;
  std::vector<Expr> ch;
  ch.push_back(enumber(coeff));
  if (key->kind == ExprNode::Kind::Mul)
    ch.insert(ch.end(), key->ch.begin(), key->ch.end());
  else
    ch.push_back(key);
  return emul(std::move(ch));
}

Expr fold_fun(const std::string& name, const Expr& arg) {
  if (is_num(arg, Rat(0))) {
    if (name == "exp" || name == "cos" || name == "cosh") return enumber(1);
    if (name == "sin" || name == "tan" || name == "sinh" || name == "tanh")
      return enumber(0);
  }
  return efun(name, arg);
}

Expr simplify_impl(const Expr& e);

Expr simplify_add(const std::vector<Expr>& raw) {
  std::vector<Expr> flat;
  for (const auto& c0 : raw) {
    Expr c = simplify_impl(c0);
    if (c->kind == ExprNode::Kind::Add)
      flat.insert(flat.end(), c->ch.begin(), c->ch.end());
    else if (!is_zero(c))
      flat.push_back(c);
  }
  std::map<Expr, Rat, ExprLess> terms;
  for (const auto& t : flat) {
    auto [c, key] = term_split(t);
    terms[key] += c;
  }
  std::vector<Expr> out;
  Rat constant(0);
  for (const auto& [key, c] : terms) {
    if (c == 0) continue;
    if (is_num(key, Rat(1))) {
      constant += c;
      continue;
    }
    out.push_back(rebuild_term(c, key));
  }
  if (constant != 0) out.insert(out.begin(), enumber(constant));
  if (out.empty()) return enumber(0);
  if (out.size() == 1) return out[0];
  return eadd(std::move(out));
}

Expr simplify_mul(const std::vector<Expr>& raw) {
  std::vector<Expr> flat;
  for (const auto& c0 : raw) {
    Expr c = simplify_impl(c0);
    if (c->kind == ExprNode::Kind::Mul)
      flat.insert(flat.end(), c->ch.begin(), c->ch.end());
    else
      flat.push_back(c);
  }
  Rat coeff(1);
  std::map<Expr, long long, ExprLess> powers;
  std::vector<Expr> exp_args;  // arguments of exponential factors, pre-scaled
  for (const auto& f : flat) {
    if (f->kind == ExprNode::Kind::Num) {
      coeff *= f->num;
      if (coeff == 0) return enumber(0);
      continue;
    }
    auto [base, k] = factor_split(f);
    if (base->kind == ExprNode::Kind::Fun && base->name == "exp") {
      exp_args.push_back(k == 1 ? base->ch[0]
                                : emul({enumber(Rat(k)), base->ch[0]}));
      continue;
    }
    powers[base] += k;
  }
  if (!exp_args.empty()) {
    Expr merged = simplify_add(exp_args);
    if (!is_zero(merged)) powers[fold_fun("exp", merged)] += 1;
  }
  // Positive powers of sums are distributed so the result is a flat sum of
  // monomial-like products — the normal form that makes structural equality
  // decide algebraic equality for this expression class.
  std::vector<Expr> factors;
  std::vector<std::pair<Expr, long long>> sums;
  for (const auto& [base, k] : powers) {
    if (k == 0) continue;
    if (base->kind == ExprNode::Kind::Num) {
      coeff *= rat_ipow(base->num, k);
      continue;
    }
    if (base->kind == ExprNode::Kind::Add && k > 0 && k <= 8)
      sums.push_back({base, k});
    else
      factors.push_back(k == 1 ? base : epow(base, k));
  }
  if (coeff == 0) return enumber(0);
  if (sums.empty()) {
    if (factors.empty()) return enumber(coeff);
    if (coeff == 1 && factors.size() == 1) return factors[0];
    std::vector<Expr> out;
    if (coeff != 1) out.push_back(enumber(coeff));
    out.insert(out.end(), factors.begin(), factors.end());
    if (out.size() == 1) return out[0];
    return emul(std::move(out));
  }
  std::vector<Expr> cur;
  {
    std::vector<Expr> seed;
    if (coeff != 1) seed.push_back(enumber(coeff));
    seed.insert(seed.end(), factors.begin(), factors.end());
    if (seed.empty())
      cur.push_back(enumber(1));
    else if (seed.size() == 1)
      cur.push_back(seed[0]);
    else
      cur.push_back(emul(std::move(seed)));
  }
  for (const auto& [sum, k] : sums) {
    for (long long rep = 0; rep < k; ++rep) {
      std::vector<Expr> next;
      next.reserve(cur.size() * sum->ch.size());
      for (const auto& t : cur)
        for (const auto& term : sum->ch) next.push_back(emul({t, term}));
      cur = std::move(next);
    }
  }
  return simplify_add(cur);
}

Expr simplify_pow(const Expr& base0, long long expo) {
  Expr base = simplify_impl(base0);
  if (expo == 0) return enumber(1);
  if (expo == 1) return base;
  if (base->kind == ExprNode::Kind::Num) {
    if (base->num == 0 && expo < 0) return epow(base, expo);  // undefined; kept
    return enumber(rat_ipow(base->num, expo));
  }
  if (base->kind == ExprNode::Kind::Pow)
    return simplify_pow(base->ch[0], base->expo * expo);
  if (base->kind == ExprNode::Kind::Mul) {
    std::vector<Expr> ch;
    for (const auto& f : base->ch) ch.push_back(epow(f, expo));
    return simplify_mul(ch);
  }
  if (base->kind == ExprNode::Kind::Add && expo > 1 && expo <= 8) {
    std::vector<Expr> copies(static_cast<size_t>(expo), base);
    return simplify_mul(copies);
  }
  if (base->kind == ExprNode::Kind::Fun && base->name == "exp")
    return fold_fun("exp", simplify_mul({enumber(Rat(expo)), base->ch[0]}));
  return epow(base, expo);
}

Expr simplify_impl(const Expr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Num:
    case ExprNode::Kind::Sym:
      return e;
    case ExprNode::Kind::Add:
      return simplify_add(e->ch);
    case ExprNode::Kind::Mul:
      return simplify_mul(e->ch);
    case ExprNode::Kind::Pow:
      return simplify_pow(e->ch[0], e->expo);
    case ExprNode::Kind::Fun:
      return fold_fun(e->name, simplify_impl(e->ch[0]));
  }
  return e;
}

}  // namespace

Expr simplify(const Expr& e) { return simplify_impl(e); }

Expr diff(const Expr& e, const std::string& var) {
  switch (e->kind) {
    case ExprNode::Kind::Num:
      return enumber(0);
    case ExprNode::Kind::Sym:
      return enumber(e->name == var ? 1 : 0);
    case ExprNode::Kind::Add: {
      std::vector<Expr> ch;
      for (const auto& c : e->ch) ch.push_back(diff(c, var));
      return simplify(eadd(std::move(ch)));
    }
    case ExprNode::Kind::Mul: {
      std::vector<Expr> terms;
      for (size_t i = 0; i < e->ch.size(); ++i) {
        std::vector<Expr> fac = e->ch;
        fac[i] = diff(e->ch[i], var);
        terms.push_back(emul(std::move(fac)));
      }
      return simplify(eadd(std::move(terms)));
    }
    case ExprNode::Kind::Pow: {
      // d(u^n) = n u^(n-1) u'
      Expr u = e->ch[0];
      return simplify(emul(
          {enumber(Rat(e->expo)), epow(u, e->expo - 1), diff(u, var)}));
    }
    case ExprNode::Kind::Fun: {
      Expr u = e->ch[0];
      Expr du = diff(u, var);
      Expr outer;
      if (e->name == "exp")
        outer = efun("exp", u);
      else if (e->name == "sin")
        outer = efun("cos", u);
      else if (e->name == "cos")
        outer = emul({enumber(-1), efun("sin", u)});
      else if (e->name == "tan")
        outer = eadd({enumber(1), epow(efun("tan", u), 2)});
      else if (e->name == "sinh")
        outer = efun("cosh", u);
      else if (e->name == "cosh")
        outer = efun("sinh", u);
      else if (e->name == "tanh")
        outer = eadd({enumber(1), emul({enumber(-1), epow(efun("tanh", u), 2)})});
      else
        throw std::invalid_argument("diff: unknown function " + e->name);
      return simplify(emul({outer, du}));
    }
  }
  return enumber(0);
}

Expr subst(const Expr& e, const std::map<std::string, Expr>& at) {
  switch (e->kind) {
    case ExprNode::Kind::Num:
      return e;
    case ExprNode::Kind::Sym: {
      auto it = at.find(e->name);
      return it == at.end() ? e : it->second;
    }
    case ExprNode::Kind::Add: {
      std::vector<Expr> ch;
      for (const auto& c : e->ch) ch.push_back(subst(c, at));
      return simplify(eadd(std::move(ch)));
    }
    case ExprNode::Kind::Mul: {
      std::vector<Expr> ch;
      for (const auto& c : e->ch) ch.push_back(subst(c, at));
      return simplify(emul(std::move(ch)));
    }
    case ExprNode::Kind::Pow:
      return simplify(epow(subst(e->ch[0], at), e->expo));
    case ExprNode::Kind::Fun:
      return simplify(efun(e->name, subst(e->ch[0], at)));
  }
  return e;
}

std::optional<Rat> eval_exact(const Expr& e, const std::map<std::string, Rat>& at) {
  switch (e->kind) {
    case ExprNode::Kind::Num:
      return e->num;
    case ExprNode::Kind::Sym: {
      auto it = at.find(e->name);
      if (it == at.end()) return std::nullopt;
      return it->second;
    }
    case ExprNode::Kind::Add: {
      Rat acc(0);
      for (const auto& c : e->ch) {
        auto v = eval_exact(c, at);
        if (!v) return std::nullopt;
        acc += *v;
      }
      return acc;
    }
    case ExprNode::Kind::Mul: {
      Rat acc(1);
      for (const auto& c : e->ch) {
        auto v = eval_exact(c, at);
        if (!v) return std::nullopt;
        acc *= *v;
      }
      return acc;
    }
    case ExprNode::Kind::Pow: {
      auto v = eval_exact(e->ch[0], at);
      if (!v) return std::nullopt;
      if (*v == 0 && e->expo < 0) return std::nullopt;
      return rat_ipow(*v, e->expo);
    }
    case ExprNode::Kind::Fun: {
      auto v = eval_exact(e->ch[0], at);
      if (!v || *v != 0) return std::nullopt;
      if (e->name == "exp" || e->name == "cos" || e->name == "cosh") return Rat(1);
      return Rat(0);
    }
  }
  return std::nullopt;
}

double eval_double(const Expr& e, const std::map<std::string, double>& at) {
  switch (e->kind) {
    case ExprNode::Kind::Num:
      return rat_double(e->num);
    case ExprNode::Kind::Sym: {
      auto it = at.find(e->name);
      if (it == at.end())
        throw std::invalid_argument("eval_double: unassigned symbol " + e->name);
      return it->second;
    }
    case ExprNode::Kind::Add: {
      double acc = 0;
      for (const auto& c : e->ch) acc += eval_double(c, at);
      return acc;
    }
    case ExprNode::Kind::Mul: {
      double acc = 1;
      for (const auto& c : e->ch) acc *= eval_double(c, at);
      return acc;
    }
    case ExprNode::Kind::Pow:
      return std::pow(eval_double(e->ch[0], at), static_cast<double>(e->expo));
    case ExprNode::Kind::Fun: {
      double v = eval_double(e->ch[0], at);
      if (e->name == "exp") return std::exp(v);
      if (e->name == "sin") return std::sin(v);
      if (e->name == "cos") return std::cos(v);
      if (e->name == "tan") return std::tan(v);
      if (e->name == "sinh") return std::sinh(v);
      if (e->name == "cosh") return std::cosh(v);
      if (e->name == "tanh") return std::tanh(v);
      throw std::invalid_argument("eval_double: unknown function " + e->name);
    }
  }
  throw std::logic_error("eval_double: bad node");
}

Expr scalar_to_expr(const Scalar& s) {
  auto poly_to_expr = [&](const Poly& p) -> Expr {
    if (p.is_zero()) return enumber(0);
    std::vector<Expr> terms;
    for (size_t k = 0; k < p.c.size(); ++k) {
      if (p.c[k] == 0) continue;
      if (k == 0)
        terms.push_back(enumber(p.c[k]));
      else
        terms.push_back(
            emul({enumber(p.c[k]), epow(esym(s.param), static_cast<long long>(k))}));
    }
    return simplify(eadd(std::move(terms)));
  };
  Expr n = poly_to_expr(s.num);
  if (s.den.is_const()) {
    Rat d = s.den.cval();
    if (d == 1) return n;
    return simplify(emul({enumber(Rat(1) / d), n}));
  }
  return simplify(emul({n, epow(poly_to_expr(s.den), -1)}));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ExprParser {
  const std::string& text;
  size_t pos = 0;

  explicit ExprParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos) + ": " + what + " in \"" +
                                text + "\"");
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Rat integer() {
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return Rat(Int(text.substr(start, pos - start)));
  }

  long long exponent() {
    skip();
    bool neg = eat('-');
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer exponent");
    long long v = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
    return neg ? -v : v;
  }

  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  Expr atom() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return enumber(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id = ident();
      static const char* funs[] = {"exp", "sin", "cos", "tan", "sinh", "cosh", "tanh"};
      bool is_fun = false;
      for (const char* f : funs)
        if (id == f) is_fun = true;
      if (is_fun) {
        expect('(');
        Expr arg = sum();
        expect(')');
        return efun(id, arg);
      }
      return esym(id);
    }
    fail("unexpected character");
  }

  Expr postfix() {
    Expr e = atom();
    while (eat('^')) e = epow(e, exponent());
    return e;
  }

  Expr unary() {
    if (eat('-')) return emul({enumber(-1), unary()});
    return postfix();
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) {
        e = emul({e, unary()});
      } else if (eat('/')) {
        e = emul({e, epow(unary(), -1)});
      } else {
        return e;
      }
    }
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) {
        e = eadd({e, product()});
      } else if (eat('-')) {
        e = eadd({e, emul({enumber(-1), product()})});
      } else {
        return e;
      }
    }
  }
};

}  // namespace

Expr parse_expr(const std::string& text) {
  ExprParser p(text);
  Expr e = p.sum();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return simplify(e);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print(const Expr& e, int parent_prec, bool latex);

// A product is printed as [-]num/den with symbolic factors distributed by
// exponent sign. `parent_prec` 0 = sum position, 2 = product position,
// 3 = power-base position.
std::string print_mul(const Rat& coeff, const std::vector<std::pair<Expr, long long>>& factors,
                      int parent_prec, bool latex) {
  Rat c = coeff;
  bool neg = c < 0;
  if (neg) c = -c;
  std::vector<std::string> nums, dens;
  Int cn = numerator(c);
  Int cd = denominator(c);
  for (const auto& [base, k] : factors) {
    long long a = k > 0 ? k : -k;
    std::string b = print(base, 3, latex);
    std::string piece =
        a == 1 ? b : (latex ? b + "^{" + std::to_string(a) + "}"
                            : b + "^" + std::to_string(a));
    (k > 0 ? nums : dens).push_back(piece);
  }
  std::string sep = latex ? " " : "*";
  auto join = [&](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += sep;
      s += v[i];
    }
    return s;
  };
  std::string top = join(nums);
  if (cn != 1 || top.empty()) {
    std::string cs = cn.str();
    top = top.empty() ? cs : cs + sep + top;
  }
  std::string bottom = join(dens);
  if (cd != 1) {
    std::string cs = cd.str();
    bottom = bottom.empty() ? cs : cs + sep + bottom;
  }
  std::string body;
  if (bottom.empty()) {
    body = top;
  } else if (latex) {
    body = "\\frac{" + top + "}{" + bottom + "}";
  } else {
    bool den_composite = dens.size() + (cd != 1 ? 1 : 0) > 1;
    body = top + "/" + (den_composite ? "(" + bottom + ")" : bottom);
  }
  std::string out = (neg ? "-" : "") + body;
  if (parent_prec >= 3 || (neg && parent_prec >= 2)) out = "(" + out + ")";
  return out;
}

std::string print(const Expr& e, int parent_prec, bool latex) {
  switch (e->kind) {
    case ExprNode::Kind::Num: {
      Rat v = e->num;
      return print_mul(v, {}, parent_prec, latex);
    }
    case ExprNode::Kind::Sym: {
      if (!latex) return e->name;
      // x1 -> x_{1}
      size_t d = e->name.find_first_of("0123456789");
      if (d != std::string::npos && d > 0)
        return e->name.substr(0, d) + "_{" + e->name.substr(d) + "}";
      return e->name;
    }
    case ExprNode::Kind::Fun: {
      std::string arg = print(e->ch[0], 0, latex);
      if (!latex) return e->name + "(" + arg + ")";
      if (e->name == "exp") return "e^{" + arg + "}";
      return "\\" + e->name + "\\left(" + arg + "\\right)";
    }
    case ExprNode::Kind::Pow:
      return print_mul(Rat(1), {{e->ch[0], e->expo}}, parent_prec, latex);
    case ExprNode::Kind::Mul: {
      Rat coeff(1);
      std::vector<std::pair<Expr, long long>> factors;
      for (const auto& f : e->ch) {
        if (f->kind == ExprNode::Kind::Num) {
          coeff *= f->num;
        } else if (f->kind == ExprNode::Kind::Pow) {
          factors.push_back({f->ch[0], f->expo});
        } else {
          factors.push_back({f, 1});
        }
      }
      return print_mul(coeff, factors, parent_prec, latex);
    }
    case ExprNode::Kind::Add: {
      std::string s;
      for (size_t i = 0; i < e->ch.size(); ++i) {
        std::string piece = print(e->ch[i], 0, latex);
        if (i == 0) {
          s = piece;
        } else if (!piece.empty() && piece[0] == '-') {
          s += " - " + piece.substr(1);
        } else {
          s += " + " + piece;
        }
      }
      if (parent_prec >= 2) s = latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace

std::string expr_str(const Expr& e) { return print(simplify(e), 0, false); }
std::string expr_latex(const Expr& e) { return print(simplify(e), 0, true); }

// ---------------------------------------------------------------------------
// Matrices

ExprMat3::ExprMat3() {
  for (auto& row : m)
    for (auto& x : row) x = enumber(0);
}

ExprMat3 ExprMat3::identity() {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i) r[i][i] = enumber(1);
  return r;
}

ExprMat3 ExprMat3::transpose() const {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

ExprMat3 ExprMat3::simplified() const {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = simplify(m[i][j]);
  return r;
}

ExprMat3 operator*(const ExprMat3& x, const ExprMat3& y) {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<Expr> terms;
      for (int k = 0; k < 3; ++k) terms.push_back(emul({x[i][k], y[k][j]}));
      r[i][j] = simplify(eadd(std::move(terms)));
    }
  return r;
}

ExprMat3 operator+(const ExprMat3& x, const ExprMat3& y) {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = simplify(eadd({x[i][j], y[i][j]}));
  return r;
}

ExprMat3 operator-(const ExprMat3& x, const ExprMat3& y) {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = simplify(eadd({x[i][j], emul({enumber(-1), y[i][j]})}));
  return r;
}

Expr expr_det(const ExprMat3& a) {
  std::vector<Expr> terms;
  terms.push_back(emul({a[0][0], a[1][1], a[2][2]}));
  terms.push_back(emul({enumber(-1), a[0][0], a[1][2], a[2][1]}));
  terms.push_back(emul({enumber(-1), a[0][1], a[1][0], a[2][2]}));
  terms.push_back(emul({a[0][1], a[1][2], a[2][0]}));
  terms.push_back(emul({a[0][2], a[1][0], a[2][1]}));
  terms.push_back(emul({enumber(-1), a[0][2], a[1][1], a[2][0]}));
  return simplify(eadd(std::move(terms)));
}

ExprMat3 expr_inverse(const ExprMat3& a) {
  Expr det = expr_det(a);
  if (is_zero(det)) throw std::domain_error("expr_inverse: zero determinant");
  Expr inv_det = simplify(epow(det, -1));
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // adjugate: cofactor of (j,i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      Expr cof = simplify(eadd(
          {emul({a[r0][c0], a[r1][c1]}),
           emul({enumber(-1), a[r0][c1], a[r1][c0]})}));
      r[i][j] = simplify(emul({cof, inv_det}));
    }
  return r;
}

}  // namespace lieb
