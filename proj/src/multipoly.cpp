#include "lieb/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace lieb {

namespace {

void add_term(std::map<Mono, Scalar>& acc, const Mono& m, const Scalar& c) {
  auto it = acc.find(m);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) acc.erase(it);
}

Mono mono_mul(const Mono& x, const Mono& y) {
  Mono r = x;
  for (const auto& [v, e] : y) r[v] += e;
  return r;
}

}  // namespace

Scalar MPoly::constant() const {
  auto it = terms.find(Mono{});
  return it == terms.end() ? Scalar(0) : it->second;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(const std::string& v) const {
  int d = 0;
  for (const auto& [m, c] : terms) {
    auto it = m.find(v);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

std::set<std::string> MPoly::vars() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms)
    for (const auto& [v, e] : m) s.insert(v);
  return s;
}

std::map<int, MPoly> MPoly::as_univariate(const std::string& v) const {
  std::map<int, MPoly> out;
  for (const auto& [m, c] : terms) {
    Mono rest = m;
    int k = 0;
    auto it = rest.find(v);
    if (it != rest.end()) {
      k = it->second;
      rest.erase(it);
    }
    add_term(out[k].terms, rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

MPoly MPoly::subst(const std::string& v, const MPoly& value) const {
  MPoly out;
  for (const auto& [m, c] : terms) {
    Mono rest = m;
    int k = 0;
    auto it = rest.find(v);
    if (it != rest.end()) {
      k = it->second;
      rest.erase(it);
    }
    MPoly piece;
    piece.terms[rest] = c;
    for (int p = 0; p < k; ++p) piece = piece * value;
    out = out + piece;
  }
  return out;
}

MPoly MPoly::subst_all(const std::map<std::string, Scalar>& assignment) const {
  MPoly out = *this;
  for (const auto& [v, s] : assignment) out = out.subst(v, MPoly(s));
  return out;
}

MPoly operator+(const MPoly& x, const MPoly& y) {
  MPoly r = x;
  for (const auto& [m, c] : y.terms) add_term(r.terms, m, c);
  return r;
}

MPoly operator-(const MPoly& x, const MPoly& y) { return x + (-y); }

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly r;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) add_term(r.terms, mono_mul(mx, my), cx * cy);
  return r;
}

MPoly operator*(const Scalar& s, const MPoly& y) { return MPoly(s) * y; }

std::string MPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string cs = c.str();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
        cs.find('+') == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    std::string ms;
    for (const auto& [v, e] : m) {
      if (!ms.empty()) ms += "*";
      ms += v;
      if (e > 1) ms += "^" + std::to_string(e);
    }
    bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string piece;
    if (ms.empty())
      piece = wrap ? "(" + cs + ")" : cs;
    else if (cs == "1")
      piece = ms;
    else
      piece = (wrap ? "(" + cs + ")" : cs) + "*" + ms;
    if (first) {
      os << (neg ? "-" : "") << piece;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << piece;
    }
  }
  return os.str();
}

bool MMat3::is_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) return false;
  return true;
}

MMat3 MMat3::transpose() const {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

MMat3 MMat3::skew_part() const {
  MMat3 r;
  Scalar half(rat(1, 2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = half * (m[i][j] - m[j][i]);
  return r;
}

MMat3 MMat3::sym_part() const {
  MMat3 r;
  Scalar half(rat(1, 2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = half * (m[i][j] + m[j][i]);
  return r;
}

Mat3 MMat3::eval(const std::map<std::string, Scalar>& assignment) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPoly p = m[i][j].subst_all(assignment);
      if (!p.is_const())
        throw std::logic_error("free constants remain after evaluation: " + p.str());
      r[i][j] = p.constant();
    }
  return r;
}

MMat3 operator+(const MMat3& a, const MMat3& b) {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

MMat3 operator-(const MMat3& a, const MMat3& b) {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

MMat3 operator*(const MMat3& a, const MMat3& b) {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPoly s;
      for (int k = 0; k < 3; ++k) s = s + a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

MMat3 operator*(const MPoly& s, const MMat3& a) {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

MPoly mdet(const MMat3& a) {
  MPoly d;
  d = d + a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]);
  d = d - a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]);
  d = d + a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
  return d;
}

std::string MMat3::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[";
    for (int j = 0; j < 3; ++j) os << m[i][j].str() << (j < 2 ? ", " : "");
    os << "]" << (i < 2 ? ", " : "");
  }
  os << "]";
  return os.str();
}

MMat3 to_mmat(const Mat3& a) {
  MMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = MPoly(a[i][j]);
  return r;
}

bool MTensor333::is_zero() const {
  for (const auto& a : t)
    for (const auto& b : a)
      for (const auto& c : b)
        if (!c.is_zero()) return false;
  return true;
}

namespace {

// One elimination round; returns true when it made progress.
bool eliminate_linear(std::vector<MPoly>& eqs, std::map<std::string, MPoly>& chain,
                      std::string& note, bool allow_param_coeff) {
  for (const auto& eq : eqs) {
    for (const auto& v : eq.vars()) {
      if (eq.degree_in(v) != 1) continue;
      auto uni = eq.as_univariate(v);
      const MPoly& A = uni[1];
      if (!A.is_const()) continue;
      Scalar a0 = A.constant();
      if (a0.is_zero()) continue;
      if (!a0.is_const() && !allow_param_coeff) continue;
      if (!a0.is_const()) {
        auto bad = poly_rational_roots(a0.num);
        for (const auto& r : bad)
          note += (note.empty() ? "" : "; ") + std::string("division by ") + a0.str() +
                  " assumes " + a0.param + " != " + rat_str(r);
      }
      MPoly B = uni.count(0) ? uni[0] : MPoly();
      MPoly value = (Scalar(-1) / a0) * B;
      for (auto& [w, val] : chain) val = val.subst(v, value);
      chain[v] = value;
      for (auto& e : eqs) e = e.subst(v, value);
      return true;
    }
  }
  return false;
}

MSolveResult msolve_impl(std::vector<MPoly> eqs, int depth) {
  MSolveResult res;
  std::map<std::string, MPoly> chain;  // eliminated var -> expression in later vars
  std::set<std::string> all_vars;
  for (const auto& e : eqs)
    for (const auto& v : e.vars()) all_vars.insert(v);

  auto finalize_solved = [&](std::map<std::string, Scalar> base) -> MSolveResult {
    // Materialize a concrete witness: unresolved variables default to zero,
    // then the elimination chain is evaluated bottom-up.
    MSolveResult out;
    out.status = MSolveResult::Status::Solved;
    out.note = res.note;
    for (const auto& v : all_vars)
      if (!base.count(v) && !chain.count(v)) base[v] = Scalar(0);
    // chain entries may reference base vars and later chain vars; iterate
    // until all resolve (the chain is triangular by construction).
    std::map<std::string, MPoly> pending = chain;
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        MPoly val = it->second.subst_all(base);
        if (val.is_const()) {
          base[it->first] = val.constant();
          it = pending.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (!progress) throw std::logic_error("non-triangular elimination chain");
    }
    out.witness = base;
    return out;
  };

  while (true) {
    // Drop zero equations; detect contradictions.
    std::vector<MPoly> live;
    for (auto& e : eqs)
      if (!e.is_zero()) live.push_back(e);
    eqs = live;
    if (eqs.empty()) return finalize_solved({});
    bool contradiction = false;
    for (const auto& e : eqs)
      if (e.is_const()) {
        res.status = MSolveResult::Status::NoSolution;
        res.note += (res.note.empty() ? "" : "; ");
        res.note += "residual constant " + e.constant().str() + " != 0";
        contradiction = true;
      }
    if (contradiction) return res;

    if (eliminate_linear(eqs, chain, res.note, false)) continue;
    if (eliminate_linear(eqs, chain, res.note, true)) continue;

    // Univariate polynomial equation in one variable: try exact roots.
    const MPoly* uni_eq = nullptr;
    std::string uv;
    for (const auto& e : eqs) {
      auto vs = e.vars();
      if (vs.size() == 1 && e.degree_in(*vs.begin()) == 2) {
        uni_eq = &e;
        uv = *vs.begin();
        break;
      }
    }
    if (uni_eq && depth > 0) {
      auto layers = uni_eq->as_univariate(uv);
      Scalar a2 = layers.count(2) ? layers[2].constant() : Scalar(0);
      Scalar a1 = layers.count(1) ? layers[1].constant() : Scalar(0);
      Scalar a0 = layers.count(0) ? layers[0].constant() : Scalar(0);
      Scalar disc = a1 * a1 - Scalar(4) * a2 * a0;
      std::vector<Scalar> roots;
      if (disc.is_zero()) {
        roots.push_back(-a1 / (Scalar(2) * a2));
      } else if (auto sq = scalar_sqrt(disc)) {
        roots.push_back((-a1 + *sq) / (Scalar(2) * a2));
        roots.push_back((-a1 - *sq) / (Scalar(2) * a2));
      } else if (auto nsq = scalar_sqrt(-disc)) {
        res.status = MSolveResult::Status::NoSolution;
        res.note += (res.note.empty() ? "" : "; ");
        res.note += "equation " + uni_eq->str() + " = 0 has discriminant -(" + nsq->str() +
                    ")^2 < 0: no real root (vanishes only where " + nsq->str() + " = 0)";
        return res;
      } else if (disc.is_const() && disc.cval() < 0) {
        res.status = MSolveResult::Status::NoSolution;
        res.note += (res.note.empty() ? "" : "; ");
        res.note += "equation " + uni_eq->str() + " = 0 has negative discriminant " + disc.str();
        return res;
      }
      if (!roots.empty()) {
        std::string branch_notes;
        for (const auto& root : roots) {
          std::vector<MPoly> next = eqs;
          for (auto& e : next) e = e.subst(uv, MPoly(root));
          MSolveResult sub = msolve_impl(next, depth - 1);
          if (sub.status == MSolveResult::Status::Solved) {
            sub.witness[uv] = root;
            // Re-run finalization through our chain with the sub-witness.
            auto out = finalize_solved(sub.witness);
            out.note = res.note.empty() ? sub.note : res.note +
                       (sub.note.empty() ? "" : "; " + sub.note);
            return out;
          }
          branch_notes += (branch_notes.empty() ? "" : "; ") + sub.note;
          if (sub.status == MSolveResult::Status::Undetermined) {
            res.status = MSolveResult::Status::Undetermined;
            for (const auto& e : eqs) res.residual.push_back(e.str());
            res.note += (res.note.empty() ? "" : "; ") + branch_notes;
            return res;
          }
        }
        // Every root branch ended in NoSolution.
        res.status = MSolveResult::Status::NoSolution;
        res.note += (res.note.empty() ? "" : "; ") + branch_notes;
        return res;
      }
      // Irrational roots: fall through to the heuristic split below.
    }

    // Heuristic: ground the lexicographically first variable at 0. Only a
    // Solved outcome is trusted from this branch.
    if (depth > 0) {
      std::set<std::string> vs;
      for (const auto& e : eqs)
        for (const auto& v : e.vars()) vs.insert(v);
      if (!vs.empty()) {
        std::string v = *vs.begin();
        std::vector<MPoly> next = eqs;
        for (auto& e : next) e = e.subst(v, MPoly(Scalar(0)));
        MSolveResult sub = msolve_impl(next, depth - 1);
        if (sub.status == MSolveResult::Status::Solved) {
          sub.witness[v] = Scalar(0);
          auto out = finalize_solved(sub.witness);
          out.note = res.note.empty() ? sub.note
                                      : res.note + (sub.note.empty() ? "" : "; " + sub.note);
          return out;
        }
      }
    }

    res.status = MSolveResult::Status::Undetermined;
    for (const auto& e : eqs) res.residual.push_back(e.str());
    return res;
  }
}

}  // namespace

MSolveResult msolve(std::vector<MPoly> eqs, int depth) {
  MSolveResult r = msolve_impl(eqs, depth);
  if (r.status == MSolveResult::Status::Solved) {
    for (const auto& e : eqs) {
      MPoly v = e.subst_all(r.witness);
      if (!v.is_zero())
        throw std::logic_error("msolve produced a non-solution for " + e.str() + " -> " + v.str());
    }
  }
  return r;
}

}  // namespace lieb
