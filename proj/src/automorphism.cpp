#include "lieb/automorphism.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lieb/data_path.hpp"
#include "lieb/expr.hpp"

namespace lieb {

namespace {

// Convert a parsed polynomial expression to an MPoly: names listed in
// `params` become solver variables, any other name is treated as an exact
// scalar-field parameter (e.g. the algebra parameter "a").
MPoly expr_to_mpoly(const Expr& e, const std::vector<std::string>& params) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Num:
      return MPoly(Scalar(e->num));
    case K::Sym: {
      for (const auto& p : params)
        if (p == e->name) return MPoly::var(e->name);
      return MPoly(Scalar::sym(e->name));
    }
    case K::Add: {
      MPoly s;
      for (const auto& c : e->ch) s = s + expr_to_mpoly(c, params);
      return s;
    }
    case K::Mul: {
      MPoly s(1);
      for (const auto& c : e->ch) s = s * expr_to_mpoly(c, params);
      return s;
    }
    case K::Pow: {
      if (e->expo < 1)
        throw std::runtime_error("template entries must be polynomial: " +
                                 expr_str(e));
      MPoly b = expr_to_mpoly(e->ch[0], params), s = b;
      for (long long k = 1; k < e->expo; ++k) s = s * b;
      return s;
    }
    case K::Fun:
      throw std::runtime_error("template entries must be polynomial: " +
                               expr_str(e));
  }
  throw std::runtime_error("unreachable template entry kind");
}

MPoly parse_template_poly(const std::string& text,
                          const std::vector<std::string>& params) {
  return expr_to_mpoly(parse_expr(text), params);
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool same_tensor(const LieAlgebra& x, const LieAlgebra& y) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!(x.f(i, j, k) == y.f(i, j, k))) return false;
  return true;
}

std::array<MMat3, 3> lift(const std::array<Mat3, 3>& ms) {
  return {to_mmat(ms[0]), to_mmat(ms[1]), to_mmat(ms[2])};
}

MMat3 var_matrix(const std::string& stem) {
  MMat3 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      o[i][j] =
          MPoly::var(stem + std::to_string(i + 1) + std::to_string(j + 1));
  return o;
}

void push_entries(std::vector<MPoly>& eqs, const MMat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) eqs.push_back(m[i][j]);
}

// Bracket-preservation equations for a matrix family O (numerator form with
// scalar denominator cleared): for each i,
//   sum_k N[i][k] (N X_k) - den (X_i N) = 0.
std::vector<MPoly> bracket_equations(const LieAlgebra& g, const MMat3& n,
                                     const MPoly& den) {
  auto xm = lift(adjoint_matrices(g));
  std::vector<MPoly> eqs;
  for (int i = 0; i < 3; ++i) {
    MMat3 lhs;
    for (int k = 0; k < 3; ++k) lhs = lhs + n[i][k] * (n * xm[k]);
    push_entries(eqs, lhs - den * (xm[i] * n));
  }
  return eqs;
}

// Pairing-form equations for the same family: for each i,
//   den * sum_j N[j][i] Y^j - N Y^i N^T = 0.
std::vector<MPoly> pairing_equations(const LieAlgebra& g, const MMat3& n,
                                     const MPoly& den) {
  auto ym = lift(y_matrices(g));
  std::vector<MPoly> eqs;
  for (int i = 0; i < 3; ++i) {
    MMat3 lhs;
    for (int j = 0; j < 3; ++j) lhs = lhs + n[j][i] * ym[j];
    push_entries(eqs, den * lhs - n * (ym[i] * n.transpose()));
  }
  return eqs;
}

// Dual-transport equations for an automorphism family O of g relating the
// dual tensors ft -> ftp: for each j,
//   sum_i N[j][i] Yt'_i * den - N^T Yt_j N = 0   (O = N / den).
std::vector<MPoly> transport_equations(const LieAlgebra& ft,
                                       const LieAlgebra& ftp, const MMat3& n,
                                       const MPoly& den) {
  auto yt = lift(y_matrices(ft));
  auto ytp = lift(y_matrices(ftp));
  std::vector<MPoly> eqs;
  for (int j = 0; j < 3; ++j) {
    MMat3 lhs;
    for (int i = 0; i < 3; ++i) lhs = lhs + n[j][i] * ytp[i];
    push_entries(eqs, den * lhs - n.transpose() * (yt[j] * n));
  }
  return eqs;
}

// Complete a solver witness to a full parameter assignment; absent
// variables are free, so ground them at the given default.
std::map<std::string, Scalar> complete_assignment(
    const std::vector<std::string>& params,
    const std::map<std::string, Scalar>& witness, int fallback) {
  std::map<std::string, Scalar> full;
  for (const auto& p : params) {
    auto it = witness.find(p);
    full[p] = it != witness.end() ? it->second : Scalar(fallback);
  }
  return full;
}

}  // namespace

Mat3 MatrixTemplate::eval(const std::map<std::string, Scalar>& assign) const {
  MPoly d = denom.subst_all(assign);
  if (!d.is_const())
    throw std::invalid_argument("template evaluation needs all parameters");
  Scalar dv = d.constant();
  if (dv.is_zero())
    throw std::invalid_argument("template denominator vanishes at assignment");
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPoly p = numer[i][j].subst_all(assign);
      if (!p.is_const())
        throw std::invalid_argument("template evaluation needs all parameters");
      r[i][j] = p.constant() / dv;
    }
  return r;
}

bool MatrixTemplate::admissible(
    const std::map<std::string, Scalar>& assign) const {
  auto nonzero_at = [&](const MPoly& p) {
    MPoly v = p.subst_all(assign);
    if (!v.is_const())
      throw std::invalid_argument("template evaluation needs all parameters");
    return !v.constant().is_zero();
  };
  if (!nonzero_at(denom)) return false;
  for (const auto& r : require_nonzero)
    if (!nonzero_at(r)) return false;
  return true;
}

std::vector<MatrixTemplate> load_templates(const std::string& path,
                                           const std::string& algebra) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open template data: " + path);
  std::vector<MatrixTemplate> out;
  MatrixTemplate cur;
  bool open = false;
  int row = 0;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = strip(rest);
    if (key == "template") {
      if (open) fail("nested template");
      std::istringstream hs(rest);
      cur = MatrixTemplate{};
      if (!(hs >> cur.algebra >> cur.label)) fail("template needs name+label");
      open = true;
      row = 0;
    } else if (!open) {
      fail("directive outside template: " + key);
    } else if (key == "params") {
      std::istringstream ps(rest);
      std::string p;
      while (ps >> p) cur.params.push_back(p);
    } else if (key == "row") {
      if (row >= 3) fail("more than three rows");
      std::istringstream rs(rest);
      std::string cell;
      int col = 0;
      while (std::getline(rs, cell, ';')) {
        if (col >= 3) fail("more than three row entries");
        cur.numer[row][col++] = parse_template_poly(strip(cell), cur.params);
      }
      if (col != 3) fail("row needs three ';'-separated entries");
      ++row;
    } else if (key == "denom") {
      cur.denom = parse_template_poly(rest, cur.params);
    } else if (key == "require") {
      if (rest == "det")
        cur.require_nonzero.push_back(mdet(cur.numer));
      else
        cur.require_nonzero.push_back(parse_template_poly(rest, cur.params));
    } else if (key == "expect") {
      if (rest == "pass")
        cur.expect_identity = true;
      else if (rest == "fail")
        cur.expect_identity = false;
      else
        fail("expect must be pass|fail");
    } else if (key == "note") {
      cur.note += (cur.note.empty() ? "" : " ") + rest;
    } else if (key == "end") {
      if (row != 3) fail("template has " + std::to_string(row) + " rows");
      if (algebra.empty() || cur.algebra == algebra) out.push_back(cur);
      open = false;
    } else {
      fail("unknown directive: " + key);
    }
  }
  if (open) fail("unterminated template");
  return out;
}

std::vector<MatrixTemplate> automorphism_templates(const LieAlgebra& g) {
  std::string name = g.name.substr(0, g.name.find('('));
  return load_templates(data_file("templates_aut.txt"), name);
}

bool is_automorphism(const LieAlgebra& g, const Mat3& O) {
  if (O.det().is_zero())
    throw std::invalid_argument("is_automorphism: singular matrix");
  auto x = adjoint_matrices(g);
  auto y = y_matrices(g);
  bool adjoint_form = true, pairing_form = true;
  for (int i = 0; i < 3 && adjoint_form; ++i) {
    Mat3 lhs = Mat3::zero();
    for (int k = 0; k < 3; ++k) lhs = lhs + O[i][k] * (O * x[k]);
    adjoint_form = lhs == x[i] * O;
  }
  for (int i = 0; i < 3 && pairing_form; ++i) {
    Mat3 lhs = Mat3::zero();
    for (int j = 0; j < 3; ++j) lhs = lhs + O[j][i] * y[j];
    pairing_form = lhs == O * y[i] * O.transpose();
  }
  if (adjoint_form != pairing_form)
    throw std::logic_error(
        "bracket-preservation matrix forms disagree on an invertible matrix");
  return adjoint_form;
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const Mat3& alpha) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        Scalar lhs{0}, rhs{0};
        for (int k = 0; k < 3; ++k) {
          for (int l = 0; l < 3; ++l)
            lhs = lhs + alpha[i][k] * alpha[j][l] * to.f(k, l, m);
          rhs = rhs + from.f(i, j, k) * alpha[k][m];
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const MMat3& alpha) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        MPoly lhs, rhs;
        for (int k = 0; k < 3; ++k) {
          for (int l = 0; l < 3; ++l)
            lhs = lhs + to.f(k, l, m) * (alpha[i][k] * alpha[j][l]);
          rhs = rhs + from.f(i, j, k) * alpha[k][m];
        }
        if (!(lhs - rhs).is_zero()) return false;
      }
  return true;
}

TemplateVerdict verify_template(const LieAlgebra& g, const MatrixTemplate& t,
                                int max_samples) {
  TemplateVerdict v;
  std::ostringstream detail;

  bool bracket_ok = true;
  for (const auto& e : bracket_equations(g, t.numer, t.denom))
    if (!e.is_zero()) {
      bracket_ok = false;
      break;
    }
  bool pairing_ok = true;
  for (const auto& e : pairing_equations(g, t.numer, t.denom))
    if (!e.is_zero()) {
      pairing_ok = false;
      break;
    }
  bool det_ok = !mdet(t.numer).is_zero();
  v.identity_holds = bracket_ok && pairing_ok && det_ok;
  if (!det_ok) detail << "numerator determinant vanishes identically; ";
  if (bracket_ok != pairing_ok)
    detail << "bracket and pairing forms disagree symbolically; ";
  else if (!bracket_ok)
    detail << "bracket identity fails identically in the parameters; ";

  std::mt19937 rng(20250815u);
  std::uniform_int_distribution<int> pick(-3, 3);
  v.samples_pass = true;
  int draws = 0;
  while (v.samples_checked < max_samples && draws < 60 * max_samples) {
    ++draws;
    std::map<std::string, Scalar> assign;
    for (const auto& p : t.params) assign[p] = Scalar(pick(rng));
    if (!t.admissible(assign)) continue;
    Mat3 O = t.eval(assign);
    ++v.samples_checked;
    bool ok = false;
    if (!O.det().is_zero()) ok = is_automorphism(g, O);
    if (!ok) {
      v.samples_pass = false;
      if (!v.counterexample) {
        v.counterexample = O;
        detail << "admissible counterexample at sample "
               << v.samples_checked << "; ";
      }
    }
  }
  if (v.samples_checked == 0 && !t.params.empty()) {
    v.samples_pass = false;
    detail << "no admissible samples found; ";
  }
  v.detail = detail.str();
  return v;
}

LieAlgebra transport_dual(const LieAlgebra& g, const LieAlgebra& ft,
                          const Mat3& O) {
  if (!is_automorphism(g, O))
    throw std::invalid_argument("transport_dual: not an automorphism");
  auto yt = y_matrices(ft);
  Mat3 oi = O.inverse();
  std::array<Mat3, 3> ytp;
  for (int i = 0; i < 3; ++i) {
    ytp[i] = Mat3::zero();
    for (int j = 0; j < 3; ++j)
      ytp[i] = ytp[i] + oi[i][j] * (O.transpose() * yt[j] * O);
  }
  LieAlgebra out = ft;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.f(j, k, i) = Scalar{0} - ytp[i][j][k];
  return out;
}

IsoVerdict bialgebra_iso(const LieAlgebra& g, const LieAlgebra& ft,
                         const LieAlgebra& ftp,
                         const std::vector<MatrixTemplate>& templates) {
  IsoVerdict v;
  if (same_tensor(ft, ftp)) {
    v.kind = IsoVerdict::Kind::Isomorphic;
    v.witness = Mat3::identity();
    v.detail = "identical dual tensors (identity witness)";
    return v;
  }

  auto verified = [&](const Mat3& O) {
    return !O.det().is_zero() && is_automorphism(g, O) &&
           same_tensor(transport_dual(g, ft, O), ftp);
  };

  // Full-space solve: bracket preservation + Killing-form preservation
  // (implied by it, but it grounds the solver) + dual transport +, when the
  // Killing form is degenerate, explicit invertibility.
  std::ostringstream notes;
  {
    MMat3 o = var_matrix("o");
    MPoly one(1);
    std::vector<MPoly> eqs = bracket_equations(g, o, one);
    Mat3 kappa = killing_form(g);
    MMat3 km = to_mmat(kappa);
    MMat3 kdiff = o * (km * o.transpose()) - km;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        if (!kdiff[i][j].is_zero()) eqs.push_back(kdiff[i][j]);
    auto te = transport_equations(ft, ftp, o, one);
    eqs.insert(eqs.end(), te.begin(), te.end());
    if (kappa.det().is_zero())
      eqs.push_back(mdet(o) * MPoly::var("u") - MPoly(1));
    MSolveResult res = msolve(eqs);
    if (res.status == MSolveResult::Status::NoSolution) {
      v.kind = IsoVerdict::Kind::NotIsomorphic;
      v.detail = "transport equations are inconsistent over all bracket- and "
                 "Killing-preserving matrices" +
                 (res.note.empty() ? "" : " (" + res.note + ")");
      return v;
    }
    if (res.status == MSolveResult::Status::Solved) {
      std::vector<std::string> names;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          names.push_back("o" + std::to_string(i + 1) + std::to_string(j + 1));
      for (int fallback : {0, 1, 2}) {
        auto full = complete_assignment(names, res.witness, fallback);
        Mat3 O;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            O[i][j] = full.at("o" + std::to_string(i + 1) +
                              std::to_string(j + 1));
        if (verified(O)) {
          v.kind = IsoVerdict::Kind::Isomorphic;
          v.witness = O;
          v.detail = "witness from the full-space solve";
          return v;
        }
      }
      notes << "full-space solve produced a witness that failed "
               "re-verification after grounding free variables; ";
    } else {
      notes << "full-space solve undetermined; ";
    }
  }

  // Template solves: find witnesses over verified polynomial families.
  for (const auto& t : templates) {
    if (!t.expect_identity) continue;
    if (t.denom.is_const()) {
      std::vector<MPoly> eqs =
          transport_equations(ft, ftp, t.numer, t.denom);
      int aux = 0;
      for (const auto& r : t.require_nonzero)
        eqs.push_back(r * MPoly::var("w" + std::to_string(++aux)) - MPoly(1));
      MSolveResult res = msolve(eqs);
      if (res.status == MSolveResult::Status::Solved) {
        for (int fallback : {0, 1, 2}) {
          auto full = complete_assignment(t.params, res.witness, fallback);
          if (!t.admissible(full)) continue;
          Mat3 O = t.eval(full);
          if (verified(O)) {
            v.kind = IsoVerdict::Kind::Isomorphic;
            v.witness = O;
            v.detail = "witness over template " + t.label;
            return v;
          }
        }
        notes << "template " << t.label
              << " solve witness failed re-verification; ";
      } else if (res.status == MSolveResult::Status::NoSolution) {
        notes << "no solution over template " << t.label << "; ";
      } else {
        notes << "template " << t.label << " solve undetermined; ";
      }
    } else {
      notes << "template " << t.label << " solved by sampling only "
            << "(rational chart); ";
    }
    // Deterministic witness sampling over the family: exhaustive on a small
    // grid for few parameters, seeded-random otherwise.
    static const Scalar grid[] = {
        Scalar(0),  Scalar(1),  Scalar(-1), Scalar(2),
        Scalar(-2), Scalar(3),  Scalar(-3), Scalar(1) / Scalar(2),
        Scalar(-1) / Scalar(2), Scalar(1) / Scalar(3),
        Scalar(-1) / Scalar(3)};
    constexpr int kGrid = 11;
    const std::size_t np = t.params.size();
    auto try_assignment = [&](const std::map<std::string, Scalar>& full) {
      if (!t.admissible(full)) return false;
      Mat3 O = t.eval(full);
      if (O.det().is_zero() || !verified(O)) return false;
      v.kind = IsoVerdict::Kind::Isomorphic;
      v.witness = O;
      v.detail = "sampled witness over template " + t.label;
      return true;
    };
    bool found = false;
    if (np <= 3) {
      std::vector<int> idx(np, 0);
      while (true) {
        std::map<std::string, Scalar> full;
        for (std::size_t p = 0; p < np; ++p) full[t.params[p]] = grid[idx[p]];
        if (try_assignment(full)) { found = true; break; }
        std::size_t p = 0;
        while (p < np && ++idx[p] == kGrid) idx[p++] = 0;
        if (p == np) break;
      }
    } else {
      std::mt19937 rng(911u);
      std::uniform_int_distribution<int> pick(0, kGrid - 1);
      for (int draw = 0; draw < 500 && !found; ++draw) {
        std::map<std::string, Scalar> full;
        for (const auto& p : t.params) full[p] = grid[pick(rng)];
        found = try_assignment(full);
      }
    }
    if (found) return v;
    notes << "no sampled witness over template " << t.label << "; ";
  }

  v.kind = IsoVerdict::Kind::Undetermined;
  v.detail = notes.str();
  return v;
}

CoboundaryIsoReport coboundary_iso(const LieAlgebra& from, const Mat3& r_from,
                                   const LieAlgebra& to, const Mat3& r_to,
                                   const Mat3& alpha, bool strict) {
  CoboundaryIsoReport rep;
  rep.invertible = !alpha.det().is_zero();
  rep.homomorphism =
      rep.invertible && is_homomorphism(from, to, alpha);
  if (strict && !(rep.homomorphism && rep.invertible))
    throw std::invalid_argument(
        "coboundary_iso: alpha is not an invertible homomorphism");

  rep.defect = alpha.transpose() * r_from * alpha - r_to;
  Scalar half = Scalar(1) / Scalar(2);
  Mat3 skew = half * (rep.defect - rep.defect.transpose());
  Mat3 sym = half * (rep.defect + rep.defect.transpose());
  auto x = adjoint_matrices(to);
  rep.transport_ok = true;
  for (int i = 0; i < 3; ++i) {
    Mat3 c = x[i].transpose() * rep.defect + rep.defect * x[i];
    if (c.is_zero()) continue;
    rep.transport_ok = false;
    Mat3 m = x[i].transpose() * skew;
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k)
        if (!(m[j][k] == m[k][j])) {
          std::ostringstream os;
          os << "adjoint " << i + 1 << ": entry (" << j + 1 << "," << k + 1
             << ") = " << m[j][k].str() << " vs (" << k + 1 << "," << j + 1
             << ") = " << m[k][j].str();
          rep.failures.push_back(os.str());
        }
    Mat3 s = x[i].transpose() * sym + sym * x[i];
    if (!s.is_zero()) {
      std::ostringstream os;
      os << "adjoint " << i + 1 << ": symmetric part not invariant";
      rep.failures.push_back(os.str());
    }
  }
  return rep;
}

MSolveResult solve_dual_transport(const LieAlgebra& ft,
                                  const LieAlgebra& ftp) {
  MMat3 a = var_matrix("a");
  auto yt = lift(y_matrices(ft));
  auto ytp = lift(y_matrices(ftp));
  std::vector<MPoly> eqs;
  for (int j = 0; j < 3; ++j) {
    MMat3 rhs;
    for (int i = 0; i < 3; ++i) rhs = rhs + a[i][j] * ytp[i];
    push_entries(eqs, a * (yt[j] * a.transpose()) - rhs);
  }
  eqs.push_back(mdet(a) * MPoly::var("u") - MPoly(1));
  return msolve(eqs);
}

bool dual_transport_holds(const LieAlgebra& ft, const LieAlgebra& ftp,
                          const MMat3& a) {
  auto yt = lift(y_matrices(ft));
  auto ytp = lift(y_matrices(ftp));
  for (int j = 0; j < 3; ++j) {
    MMat3 rhs;
    for (int i = 0; i < 3; ++i) rhs = rhs + a[i][j] * ytp[i];
    MMat3 diff = a * (yt[j] * a.transpose()) - rhs;
    if (!diff.is_zero()) return false;
  }
  return true;
}

bool dual_transport_holds(const LieAlgebra& ft, const LieAlgebra& ftp,
                          const Mat3& a) {
  return dual_transport_holds(ft, ftp, to_mmat(a));
}

}  // namespace lieb
