// Small dense exact matrices/vectors over the Scalar field.
#pragma once

#include <array>
#include <vector>

#include "lieb/scalar.hpp"

namespace lieb {

using Vec3 = std::array<Scalar, 3>;

struct Mat3 {
  std::array<std::array<Scalar, 3>, 3> m{};

  static Mat3 zero() { return Mat3{}; }
  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = Scalar(1);
    return r;
  }
  std::array<Scalar, 3>& operator[](int i) { return m[i]; }
  const std::array<Scalar, 3>& operator[](int i) const { return m[i]; }

  bool is_zero() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!m[i][j].is_zero()) return false;
    return true;
  }
  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Scalar acc;
        for (int k = 0; k < 3; ++k) acc = acc + a.m[i][k] * b.m[k][j];
        r.m[i][j] = acc;
      }
    return r;
  }
  friend Mat3 operator*(const Scalar& s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
  }
  Mat3 operator-() const { return Scalar(-1) * (*this); }
  bool operator==(const Mat3& o) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(m[i][j] == o.m[i][j])) return false;
    return true;
  }

  Scalar trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  Scalar det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  // Sum of principal 2x2 minors (second characteristic coefficient).
  Scalar minor2_sum() const {
    auto mnr = [&](int i, int j, int k, int l) { return m[i][k] * m[j][l] - m[i][l] * m[j][k]; };
    return mnr(1, 2, 1, 2) + mnr(0, 2, 0, 2) + mnr(0, 1, 0, 1);
  }
  Mat3 adjugate() const {
    Mat3 r;
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[j][i] = cof(i, j);
    return r;
  }
  Mat3 inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw std::domain_error("singular 3x3 matrix");
    return (Scalar(1) / d) * adjugate();
  }
};

inline Vec3 mat_vec(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) {
    Scalar acc;
    for (int k = 0; k < 3; ++k) acc = acc + a.m[i][k] * v[k];
    r[i] = acc;
  }
  return r;
}

// Rank-3 tensor with Scalar entries; index meaning is owner-defined.
struct Tensor333 {
  std::array<std::array<std::array<Scalar, 3>, 3>, 3> t{};
  Scalar& operator()(int i, int j, int k) { return t[i][j][k]; }
  const Scalar& operator()(int i, int j, int k) const { return t[i][j][k]; }
  bool is_zero() const {
    for (const auto& a : t)
      for (const auto& b : a)
        for (const auto& c : b)
          if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const Tensor333& o) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (!(t[i][j][k] == o.t[i][j][k])) return false;
    return true;
  }
};

}  // namespace lieb
