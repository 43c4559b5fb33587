// The classified catalog of three-dimensional real Lie bialgebras: named
// basis realizations of the Bianchi types as they appear in the dual
// positions of the classification tables, the catalog entries themselves
// (primal/dual pair, r-matrix families, coboundary verdicts), and helpers
// to instantiate parameter-carrying algebras at rational values.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieb/bialgebra.hpp"
#include "lieb/lie_algebra.hpp"

namespace lieb {

// A Lie algebra by catalog name. Plain Bianchi names (I, II, ..., IX,
// VIa, VIIa; 0 and o interchangeable) give the standard basis via
// bianchi(). Decorated names are the specific basis realizations used in
// the dual positions of the tables, built from the standard bases by
// explicit structure tensors:
//   II.i      [X2,X3] = X1                     (Heisenberg)
//   V.i       [X1,X2] = -X2, [X3,X1] = X3      (= standard V)
//   V.ii      [X1,X2] = X2 - X1, [X1,X3] = X3, [X2,X3] = X3
//   III.ii    [X2,X3] = X2 + X3
//   III.iii   [X1,X2] = X1, [X1,X3] = X1
//   IV.ii     [X1,X2] = X2 + X3 - X1, [X1,X3] = X3, [X2,X3] = X3
//   VI1a.ii   [X1,X2] = X1, [X1,X3] = -X1, [X2,X3] = A(X2 + X3)
//   VI1a.iii  [X1,X2] = X1, [X1,X3] = X1, [X2,X3] = (X3 - X2)/A
// with A = (a+1)/(a-1); the VI1a.* realizations carry the symbolic
// parameter a of the VIa partner they pair with (they realize the type
// VI with parameter 1/a). Scaled duals from one-parameter families are
// written "V|b" ([X1,X2] = -b X2, [X3,X1] = b X3) and "V.i|b", "V.ii|b"
// analogously. Unknown names throw std::invalid_argument.
LieAlgebra model_algebra(const std::string& name);

// A copy of g with every structure constant evaluated at parameter value
// v (no-op for constant tensors). The domain is checked and dropped.
LieAlgebra at_param(const LieAlgebra& g, const Rat& v);

}  // namespace lieb
