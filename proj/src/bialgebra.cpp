#include "lieb/bialgebra.hpp"

#include <sstream>

namespace lieb {

Bialgebra dual(const Bialgebra& b) {
  Bialgebra d;
  d.g = b.g_dual;
  d.g_dual = b.g;
  d.domain = b.domain;
  // "(A,B)" -> "(B,A)"; anything else gets a star.
  const std::string& n = b.name;
  auto comma = n.find(',');
  if (!n.empty() && n.front() == '(' && n.back() == ')' && comma != std::string::npos)
    d.name = "(" + n.substr(comma + 1, n.size() - comma - 2) + "," + n.substr(1, comma - 1) + ")";
  else
    d.name = n + "*";
  return d;
}

std::vector<std::array<int, 4>> cocycle_check(const Bialgebra& b) {
  std::vector<std::array<int, 4>> bad;
  const auto& f = b.g.f;
  const auto& fd = b.g_dual.f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Scalar lhs(0), rhs(0);
          for (int m = 0; m < 3; ++m) {
            lhs = lhs + f(m, k, i) * fd(j, m, l) - f(m, l, i) * fd(j, m, k) -
                  f(m, k, j) * fd(i, m, l) + f(m, l, j) * fd(i, m, k);
            rhs = rhs + f(k, l, m) * fd(i, j, m);
          }
          if (!(lhs == rhs)) bad.push_back({i + 1, j + 1, k + 1, l + 1});
        }
  return bad;
}

Mat3 cocommutator(const Bialgebra& b, int i) {
  Mat3 d = Mat3::zero();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) d[j][k] = b.g_dual.f(j, k, i);
  return d;
}

namespace {

// Jacobi residues of an n-dim structure tensor; reports as strings.
void jacobi_nd(const std::vector<std::vector<std::vector<Scalar>>>& F,
               std::vector<std::string>* out, const std::string& label) {
  int n = int(F.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar s(0);
          for (int m = 0; m < n; ++m)
            s = s + F[i][j][m] * F[m][k][l] + F[j][k][m] * F[m][i][l] + F[k][i][m] * F[m][j][l];
          if (!s.is_zero() && out) {
            std::ostringstream os;
            os << label << ": Jacobi fails on (" << i + 1 << "," << j + 1 << "," << k + 1
               << ") along " << l + 1 << ": " << s.str();
            out->push_back(os.str());
          }
        }
}

}  // namespace

DoubleAlgebra build_double(const Bialgebra& b, std::vector<std::string>* violations) {
  DoubleAlgebra D;
  D.F.assign(6, std::vector<std::vector<Scalar>>(6, std::vector<Scalar>(6, Scalar(0))));
  D.pairing.assign(6, std::vector<Scalar>(6, Scalar(0)));
  const auto& f = b.g.f;
  const auto& fd = b.g_dual.f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        D.F[i][j][k] = f(i, j, k);
        D.F[3 + i][3 + j][3 + k] = fd(i, j, k);
        // [X_i, X~^j] = f~^{jk}_i X_k + f_{ki}^j X~^k
        D.F[i][3 + j][k] = fd(j, k, i);
        D.F[i][3 + j][3 + k] = f(k, i, j);
        D.F[3 + j][i][k] = -fd(j, k, i);
        D.F[3 + j][i][3 + k] = -f(k, i, j);
      }
  for (int i = 0; i < 3; ++i) {
    D.pairing[i][3 + i] = Scalar(1);
    D.pairing[3 + i][i] = Scalar(1);
  }
  if (violations) {
    jacobi_nd(D.F, violations, "double(" + b.name + ")");
    // Ad-invariance of the pairing: <[z,x],y> + <x,[z,y]> = 0.
    for (int z = 0; z < 6; ++z)
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
          Scalar s(0);
          for (int m = 0; m < 6; ++m)
            s = s + D.F[z][x][m] * D.pairing[m][y] + D.F[z][y][m] * D.pairing[x][m];
          if (!s.is_zero()) {
            std::ostringstream os;
            os << "double(" << b.name << "): pairing not ad-invariant at (z,x,y)=(" << z + 1
               << "," << x + 1 << "," << y + 1 << ")";
            violations->push_back(os.str());
          }
        }
  }
  return D;
}

LieAlgebra dual_from_r(const LieAlgebra& g, const Mat3& r) {
  LieAlgebra d;
  d.name = "dual_from_r(" + g.name + ")";
  d.domain = g.domain;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) {
        Scalar s(0);
        for (int l = 0; l < 3; ++l) s = s + g.f(i, l, j) * r[l][k] + g.f(i, l, k) * r[j][l];
        d.f(j, k, i) = s;
      }
  return d;
}

std::vector<std::string> bialgebra_violations(const Bialgebra& b) {
  std::vector<std::string> out;
  for (const auto& v : jacobi_check(b.g)) out.push_back(b.name + " primal: " + v);
  for (const auto& v : jacobi_check(b.g_dual)) out.push_back(b.name + " dual: " + v);
  for (const auto& q : cocycle_check(b)) {
    std::ostringstream os;
    os << b.name << ": cocycle condition fails at (i,j,k,l)=(" << q[0] << "," << q[1] << ","
       << q[2] << "," << q[3] << ")";
    out.push_back(os.str());
  }
  build_double(b, &out);
  return out;
}

}  // namespace lieb
