#pragma once

#include <optional>
#include <vector>

#include "chazy/exact.hpp"

namespace chazy {

using QMatrix = std::vector<std::vector<QuadExt>>;
using QVector = std::vector<QuadExt>;

QMatrix qmat_identity(int n);
QMatrix qmat_mul(const QMatrix& A, const QMatrix& B);
QuadExt qmat_det(QMatrix A);                    // Gaussian elimination, exact
/// Characteristic polynomial coefficients c (monic): c[0] + c[1] x + ... + x^n.
QVector char_poly(const QMatrix& A);

/// Univariate polynomial p[0] + p[1] x + ... over QuadExt.
QuadExt upoly_eval(const QVector& p, const QuadExt& x);
CScalar upoly_eval_c(const std::vector<CScalar>& p, CScalar x);
QVector upoly_deflate(const QVector& p, const QuadExt& root);   // exact synthetic division
std::vector<CScalar> upoly_roots_numeric(std::vector<CScalar> p);  // Durand-Kerner

struct RootResult {
  std::vector<QuadExt> exact;     // verified exact roots (with multiplicity)
  std::vector<CScalar> numeric;   // leftovers that resisted lifting
  bool complete_exact() const { return numeric.empty(); }
};

/// Roots of an exact polynomial; tries rational / Q(sqrt d) lifts verified by
/// exact evaluation, quadratic formula on the final factor, numeric fallback.
RootResult upoly_roots(const QVector& p, long ambient_d);

/// Solve A x = b exactly. Returns particular solution and a nullspace basis;
/// nullopt when inconsistent.
struct LinSolve {
  QVector particular;
  std::vector<QVector> nullspace;
};
std::optional<LinSolve> solve_linear(QMatrix A, QVector b);

/// Nullspace basis of A (m x n), exact.
std::vector<QVector> nullspace(QMatrix A, int ncols);

}  // namespace chazy
