// Test-side helpers: seeded generators and dense reference elimination.
#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hopfcyc/linalg.hpp"

namespace testing_support {

using hopfcyc::Field;
using hopfcyc::Scalar;
using hopfcyc::SparseMatrix;
using hopfcyc::SparseVec;

inline std::uint64_t seed() {
  if (const char* s = std::getenv("HOPFCYC_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t s = seed()) : rng(s) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }
  bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

  Scalar scalar(const Field& f) {
    switch (f.kind) {
      case hopfcyc::FieldKind::Rational: {
        long long d = integer(1, 6);
        return Scalar(mpq_class(static_cast<long>(integer(-9, 9)), static_cast<unsigned long>(d)));
      }
      case hopfcyc::FieldKind::Prime:
        return Scalar::from_int(f, integer(0, static_cast<long long>(f.p) - 1));
      case hopfcyc::FieldKind::RationalFunction: {
        Scalar q = Scalar::parameter();
        Scalar num = Scalar::from_int(f, integer(-3, 3)) + Scalar::from_int(f, integer(-3, 3)) * q +
                     Scalar::from_int(f, integer(-2, 2)) * q * q;
        Scalar den = Scalar::from_int(f, integer(1, 3)) + Scalar::from_int(f, integer(-2, 2)) * q;
        if (den.is_zero()) den = Scalar::one(f);
        return num / den;
      }
    }
    return Scalar();
  }

  Scalar nonzero(const Field& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  SparseMatrix matrix(int rows, int cols, const Field& f, double density) {
    std::vector<std::tuple<int, int, Scalar>> e;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (coin(density)) e.emplace_back(i, j, scalar(f));
    return SparseMatrix::from_entries(rows, cols, f, e);
  }

  /// Product of random factors so that low rank appears often.
  SparseMatrix low_rank(int rows, int cols, int r, const Field& f) {
    return matrix(rows, r, f, 0.6) * matrix(r, cols, f, 0.6);
  }
};

/// Plain Gaussian elimination on a dense copy.
inline int dense_rank(const SparseMatrix& m) {
  auto a = m.to_dense();
  int rows = m.rows(), cols = m.cols(), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    Scalar inv = a[r][c].inverse();
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] * inv;
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Homology dimension of  C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.
inline int dense_homology(int dim, const SparseMatrix* d_out, const SparseMatrix* d_in) {
  int ker = dim - (d_out ? dense_rank(*d_out) : 0);
  return ker - (d_in ? dense_rank(*d_in) : 0);
}

inline std::string data_path(const std::string& name) {
  const char* d = std::getenv("HOPFCYC_DATA");
  return std::string(d ? d : "data") + "/" + name;
}

}  // namespace testing_support
