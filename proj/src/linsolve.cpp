#include "lieb/linsolve.hpp"

#include <algorithm>
#include <sstream>

namespace lieb {

static void note_exceptional(std::vector<Rat>& out, const Scalar& s) {
  // Parameter values where this (generically nonzero) scalar vanishes.
  for (const Rat& r : poly_rational_roots(s.num)) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
}

LinSolution solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b) {
  LinSolution res;
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(cols, -1);
  size_t rank = 0;

  for (size_t col = 0; col < cols && rank < rows; ++col) {
    // Prefer a pivot that is a nonzero constant so the elimination stays
    // valid for every parameter value; otherwise take any nonzero entry and
    // record where it degenerates.
    size_t choice = rows;
    for (size_t r = rank; r < rows; ++r) {
      if (A[r][col].is_zero()) continue;
      if (A[r][col].is_const()) {
        choice = r;
        break;
      }
      if (choice == rows) choice = r;
    }
    if (choice == rows) continue;
    std::swap(A[rank], A[choice]);
    std::swap(b[rank], b[choice]);
    if (!A[rank][col].is_const()) note_exceptional(res.exceptional, A[rank][col]);

    Scalar inv = Scalar(1) / A[rank][col];
    for (size_t c = col; c < cols; ++c) A[rank][c] = inv * A[rank][c];
    b[rank] = inv * b[rank];
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][col].is_zero()) continue;
      Scalar f = A[r][col];
      for (size_t c = col; c < cols; ++c) A[r][c] = A[r][c] - f * A[rank][c];
      b[r] = b[r] - f * b[rank];
    }
    pivot_row_of_col[col] = int(rank);
    pivot_col_of_row.push_back(int(col));
    ++rank;
  }

  for (size_t r = rank; r < rows; ++r) {
    if (!b[r].is_zero()) {
      res.consistent = false;
      std::ostringstream note;
      note << "row reduces to 0 = " << b[r].str();
      auto roots = poly_rational_roots(b[r].num);
      if (!roots.empty()) {
        note << " (vanishes at";
        for (const Rat& v : roots) {
          note << " " << rat_str(v);
          if (std::find(res.exceptional.begin(), res.exceptional.end(), v) ==
              res.exceptional.end())
            res.exceptional.push_back(v);
        }
        note << ")";
      } else {
        note << " (no rational parameter value rescues it)";
      }
      res.note = note.str();
      return res;
    }
  }

  res.consistent = true;
  res.particular.assign(cols, Scalar(0));
  for (size_t col = 0; col < cols; ++col) {
    int pr = pivot_row_of_col[col];
    if (pr >= 0) res.particular[col] = b[pr];
  }
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;  // bound variable
    std::vector<Scalar> v(cols, Scalar(0));
    v[col] = Scalar(1);
    for (size_t c = 0; c < cols; ++c) {
      int pr = pivot_row_of_col[c];
      if (pr >= 0) v[c] = -A[pr][col];
    }
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis) {
  if (v.empty()) return true;
  const size_t n = v.size();
  std::vector<std::vector<Scalar>> A(n, std::vector<Scalar>(basis.size(), Scalar(0)));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) A[i][j] = basis[j][i];
  return solve_linear(std::move(A), v).consistent;
}

bool in_affine_span(const std::vector<Scalar>& v, const std::vector<Scalar>& offset,
                    const std::vector<std::vector<Scalar>>& basis) {
  std::vector<Scalar> d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = v[i] - offset[i];
  return in_span(d, basis);
}

}  // namespace lieb
