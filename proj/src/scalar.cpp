#include "lieb/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lieb {

static std::string unify_param(const std::string& x, const std::string& y) {
  if (x.empty()) return y;
  if (y.empty() || x == y) return x;
  throw std::logic_error("scalar parameter clash: '" + x + "' vs '" + y + "'");
}

void Scalar::normalize() {
  if (den.is_zero()) throw std::domain_error("scalar with zero denominator");
  if (num.is_zero()) {
    den = Poly(Rat(1));
  } else {
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0 || g.cval() != 1) {
      num = poly_divmod(num, g).first;
      den = poly_divmod(den, g).first;
    }
    Rat l = den.lead();
    if (l != 1) {
      for (auto& c : num.c) c /= l;
      for (auto& c : den.c) c /= l;
    }
  }
  if (num.is_const() && den.is_const()) param.clear();
}

Rat Scalar::cval() const {
  if (!is_const()) throw std::logic_error("scalar depends on parameter '" + param + "'");
  return num.cval() / den.cval();
}

Rat Scalar::eval(const Rat& t) const {
  Rat d = den.eval(t);
  if (d == 0)
    throw std::domain_error("scalar denominator vanishes at " + param + " = " + rat_str(t));
  return num.eval(t) / d;
}

double Scalar::eval_double(double t) const {
  double n = 0, d = 0, p = 1;
  for (const auto& c : num.c) n += rat_double(c) * p, p *= t;
  p = 1;
  for (const auto& c : den.c) d += rat_double(c) * p, p *= t;
  return n / d;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return Scalar(x.num * y.den + y.num * x.den, x.den * y.den, unify_param(x.param, y.param));
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return Scalar(x.num * y.den - y.num * x.den, x.den * y.den, unify_param(x.param, y.param));
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return Scalar(x.num * y.num, x.den * y.den, unify_param(x.param, y.param));
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw std::domain_error("scalar division by zero");
  return Scalar(x.num * y.den, x.den * y.num, unify_param(x.param, y.param));
}
Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num = -r.num;
  return r;
}
bool Scalar::operator==(const Scalar& o) const {
  return num == o.num && den == o.den;  // canonical form makes this sound
}

std::optional<Scalar> scalar_sqrt(const Scalar& s) {
  auto sn = poly_sqrt(s.num);
  auto sd = poly_sqrt(s.den);
  if (!sn || !sd) return std::nullopt;
  return Scalar(*sn, *sd, s.param);
}

static std::string poly_str(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.deg(); k >= 0; --k) {
    Rat c = p.c[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    Rat ac = c < 0 ? Rat(-c) : c;
    bool unit = (ac == 1) && k > 0;
    if (!unit) out << rat_str(ac);
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

std::string Scalar::str() const {
  std::string var = param.empty() ? "t" : param;
  std::string n = poly_str(num, var);
  if (den.is_const() && den.cval() == 1) return n;
  std::string d = poly_str(den, var);
  bool np = num.deg() > 0 && (num.c.size() > 1 || false);
  // Parenthesize composite numerators/denominators for unambiguous re-parse.
  auto wrap = [](const std::string& s, bool always) {
    if (!always && s.find_first_of("+- ") == std::string::npos) return s;
    return "(" + s + ")";
  };
  (void)np;
  return wrap(n, false) + "/" + wrap(d, false);
}

// ---- parser -------------------------------------------------------------

namespace {
struct SParser {
  const std::string& s;
  size_t i = 0;
  explicit SParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace<char>(s[i], std::locale::classic())) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("scalar parse error at offset " + std::to_string(i) + " in '" + s +
                                "': " + why);
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip();
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }
  Scalar factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar base = atom();
    skip();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (j == i) fail("integer exponent expected");
      int e = std::stoi(s.substr(j, i - j));
      Scalar r(Rat(1));
      for (int k = 0; k < e; ++k) r = r * base;
      if (neg) r = Scalar(Rat(1)) / r;
      return r;
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '(') {
      ++i;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return Scalar(Rat(Int(s.substr(j, i - j))));
    }
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      size_t j = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      return Scalar::sym(s.substr(j, i - j));
    }
    fail(std::string("unexpected character '") + s[i] + "'");
  }
};
}  // namespace

Scalar scalar_parse(const std::string& text) {
  SParser p(text);
  Scalar v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace lieb
