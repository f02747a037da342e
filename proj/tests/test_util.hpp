#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "loccstar/local_algebra.hpp"

namespace testutil {

using loccstar::CMatrix;
using loccstar::Complex;

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int d = static_cast<int>(rows.size());
  Eigen::MatrixXcd m(d, d);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& z : row) m(i, j++) = z;
    ++i;
  }
  return CMatrix(std::move(m));
}

inline CMatrix diag(std::initializer_list<Complex> entries) {
  const int d = static_cast<int>(entries.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  int i = 0;
  for (const auto& z : entries) m(i, i) = z, ++i;
  return CMatrix(std::move(m));
}

}  // namespace testutil
