#include "lieb/exp_adjoint.hpp"

#include <stdexcept>

namespace lieb {

namespace {

// exp(c*x) as an expression, for an exact coefficient c.
Expr exp_of(const Scalar& c, const std::string& var) {
  return simplify(efun("exp", emul({scalar_to_expr(c), esym(var)})));
}

ExprMat3 scale(const Expr& c, const ExprMat3& A) {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = simplify(emul({c, A[i][j]}));
  return r;
}

}  // namespace

ExprMat3 mat_to_exprmat(const Mat3& M) {
  ExprMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = scalar_to_expr(M[i][j]);
  return r;
}

SpectrumCase spectrum_case(const Mat3& M) {
  if (!M.det().is_zero())
    throw std::domain_error(
        "unsupported spectrum: matrix is nonsingular (expected an adjoint "
        "matrix with characteristic root 0)");
  Scalar p = M.trace();
  Scalar q = M.minor2_sum();
  if (q.is_zero()) return p.is_zero() ? SpectrumCase::Nilpotent : SpectrumCase::ZeroZeroP;
  Scalar disc = p * p - Scalar(4) * q;
  if (disc.is_zero()) return SpectrumCase::DoubleRoot;
  if (scalar_sqrt(disc)) return SpectrumCase::RealDistinct;
  if (scalar_sqrt(-disc)) return SpectrumCase::ComplexPair;
  throw std::domain_error(
      "unsupported spectrum: discriminant " + disc.str() +
      " is neither a perfect square nor the negative of one in the scalar field");
}

ExprMat3 exp_adjoint(const Mat3& M, const std::string& var) {
  const SpectrumCase sc = spectrum_case(M);
  const Scalar p = M.trace();
  const Scalar q = M.minor2_sum();
  const Mat3 I = Mat3::identity();
  const Mat3 M2 = M * M;
  const Expr x = esym(var);
  const ExprMat3 eI = mat_to_exprmat(I);
  const ExprMat3 eM = mat_to_exprmat(M);
  const ExprMat3 eM2 = mat_to_exprmat(M2);

  switch (sc) {
    case SpectrumCase::Nilpotent: {
      // M^3 = 0: the series terminates.
      return (eI + scale(x, eM) +
              scale(simplify(emul({enumber(rat(1, 2)), epow(x, 2)})), eM2))
          .simplified();
    }
    case SpectrumCase::ZeroZeroP: {
      // M^n = p^{n-2} M^2 for n >= 2, so
      // exp(xM) = I + xM + (e^{px} - 1 - px)/p^2 * M^2.
      Expr epx = exp_of(p, var);
      Expr pe = scalar_to_expr(p);
      Expr c2 = simplify(emul(
          {epow(pe, -2),
           eadd({epx, enumber(-1), emul({enumber(-1), pe, x})})}));
      return (eI + scale(x, eM) + scale(c2, eM2)).simplified();
    }
    case SpectrumCase::DoubleRoot: {
      // Eigenvalues {0, l, l} with l = p/2. Putzer's algorithm with the
      // ordering (0, l, l):
      //   exp(xM) = I + r2 M + r3 M(M - lI),
      //   r2 = (e^{lx} - 1)/l,  r3 = x e^{lx}/l - (e^{lx} - 1)/l^2.
      Scalar l = p / Scalar(2);
      Expr le = scalar_to_expr(l);
      Expr elx = exp_of(l, var);
      Expr r2 = simplify(emul({epow(le, -1), eadd({elx, enumber(-1)})}));
      Expr r3 = simplify(eadd(
          {emul({x, elx, epow(le, -1)}),
           emul({enumber(-1), epow(le, -2), eadd({elx, enumber(-1)})})}));
      Mat3 MMl = M * (M - l * I);
      return (eI + scale(r2, eM) + scale(r3, mat_to_exprmat(MMl))).simplified();
    }
    case SpectrumCase::RealDistinct: {
      // Eigenvalues {0, l1, l2}, l1 != l2, both nonzero (q != 0). Lagrange
      // interpolation on the spectrum:
      //   P0 = (M - l1)(M - l2)/(l1 l2),  Pi = projector onto ker(M - li).
      Scalar s = *scalar_sqrt(p * p - Scalar(4) * q);
      Scalar l1 = (p - s) / Scalar(2);
      Scalar l2 = (p + s) / Scalar(2);
      Mat3 P0 = (Scalar(1) / q) * (M2 - p * M + q * I);
      Mat3 P1 = (Scalar(1) / (l1 * (l1 - l2))) * (M * (M - l2 * I));
      Mat3 P2 = (Scalar(1) / (l2 * (l2 - l1))) * (M * (M - l1 * I));
      return (mat_to_exprmat(P0) + scale(exp_of(l1, var), mat_to_exprmat(P1)) +
              scale(exp_of(l2, var), mat_to_exprmat(P2)))
          .simplified();
    }
    case SpectrumCase::ComplexPair: {
      // Eigenvalues {0, alpha +- i beta} with alpha = p/2, beta = s/2 where
      // disc = -s^2. On the invariant complement of ker M:
      //   exp(xM) = P0 + e^{alpha x}(cos(beta x) C + sin(beta x) D),
      //   P0 = (M^2 - pM + qI)/q,  C = I - P0,  D = (M - alpha C)/beta.
      Scalar s = *scalar_sqrt(Scalar(4) * q - p * p);
      Scalar alpha = p / Scalar(2);
      Scalar beta = s / Scalar(2);
      Mat3 P0 = (Scalar(1) / q) * (M2 - p * M + q * I);
      Mat3 C = I - P0;
      Mat3 D = (Scalar(1) / beta) * (M - alpha * C);
      Expr eax = exp_of(alpha, var);
      Expr bx = simplify(emul({scalar_to_expr(beta), x}));
      Expr cosb = simplify(efun("cos", bx));
      Expr sinb = simplify(efun("sin", bx));
      return (mat_to_exprmat(P0) +
              scale(simplify(emul({eax, cosb})), mat_to_exprmat(C)) +
              scale(simplify(emul({eax, sinb})), mat_to_exprmat(D)))
          .simplified();
    }
  }
  throw std::logic_error("exp_adjoint: unreachable");
}

}  // namespace lieb
