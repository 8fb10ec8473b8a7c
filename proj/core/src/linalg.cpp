#include "chazy/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace chazy {

QMatrix qmat_identity(int n) {
  QMatrix I(n, QVector(n, QuadExt(0)));
  for (int i = 0; i < n; ++i) I[i][i] = QuadExt(1);
  return I;
}

QMatrix qmat_mul(const QMatrix& A, const QMatrix& B) {
  int n = static_cast<int>(A.size()), m = static_cast<int>(B[0].size()), k = static_cast<int>(B.size());
  QMatrix C(n, QVector(m, QuadExt(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

QuadExt qmat_det(QMatrix A) {
  int n = static_cast<int>(A.size());
  QuadExt det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return QuadExt(0);
    if (piv != col) { std::swap(A[piv], A[col]); det = -det; }
    det *= A[col][col];
    QuadExt inv = A[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (A[r][col].is_zero()) continue;
      QuadExt f = A[r][col] * inv;
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
    }
  }
  return det;
}

QVector char_poly(const QMatrix& A) {
  // Faddeev-LeVerrier: exact over a field.
  int n = static_cast<int>(A.size());
  QMatrix M = qmat_identity(n);
  QVector c(n + 1, QuadExt(0));
  c[n] = QuadExt(1);
  QMatrix AM = A;
  for (int k = 1; k <= n; ++k) {
    AM = qmat_mul(A, M);
    QuadExt tr(0);
    for (int i = 0; i < n; ++i) tr += AM[i][i];
    QuadExt ck = -(tr / QuadExt(k));
    c[n - k] = ck;
    M = AM;
    for (int i = 0; i < n; ++i) M[i][i] += ck;
  }
  return c;
}

QuadExt upoly_eval(const QVector& p, const QuadExt& x) {
  QuadExt v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

CScalar upoly_eval_c(const std::vector<CScalar>& p, CScalar x) {
  CScalar v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

QVector upoly_deflate(const QVector& p, const QuadExt& root) {
  int n = static_cast<int>(p.size()) - 1;
  QVector q(n, QuadExt(0));
  QuadExt carry = p[n];
  for (int k = n - 1; k >= 0; --k) {
    q[k] = carry;
    carry = p[k] + carry * root;
  }
  return q;  // remainder `carry` discarded; caller verified root
}

std::vector<CScalar> upoly_roots_numeric(std::vector<CScalar> p) {
  while (!p.empty() && std::abs(p.back()) == 0.0) p.pop_back();
  int n = static_cast<int>(p.size()) - 1;
  std::vector<CScalar> roots;
  if (n <= 0) return roots;
  for (auto& c : p) c /= p[n];
  // Durand-Kerner from a scattered start
  std::vector<CScalar> z(n);
  CScalar seed(0.4, 0.9);
  CScalar acc(1, 0);
  for (int i = 0; i < n; ++i) { acc *= seed; z[i] = acc; }
  for (int it = 0; it < 600; ++it) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      CScalar num = upoly_eval_c(p, z[i]);
      CScalar den(1, 0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) < 1e-300) den = CScalar(1e-300, 0);
      CScalar step = num / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  return z;
}

namespace {

// squarefree decomposition q = s^2 * d0 for a rational q; returns (s, d0)
std::optional<std::pair<Rat, long>> squarefree_part(const Rat& q) {
  if (q == 0) return std::make_pair(Rat(0), 0L);
  Int num = q.get_num() * q.get_den();  // q = num / den^2 * ... sqrt(q) = sqrt(num*den)/den
  Int den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int s(1), rest(1);
  Int n = num;
  for (long pf = 2; pf * pf <= 1'000'000'000'000L; ++pf) {
    if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) break;
    Int pp(pf);
    if (pp * pp > n) break;
    int cnt = 0;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      ++cnt;
      if (cnt % 2 == 0) s *= pp;
    }
    if (cnt % 2 == 1) rest *= pp;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s *= r;
  } else {
    rest *= n;
  }
  if (!rest.fits_slong_p()) return std::nullopt;
  long d0 = rest.get_si();
  if (neg) d0 = -d0;
  Rat sq(s, den);
  sq.canonicalize();
  if (d0 == 1 && !neg) d0 = 1;
  return std::make_pair(sq, d0);
}

std::optional<QuadExt> quad_sqrt_any(const QuadExt& x) {
  // sqrt possibly enlarging the field when x is rational
  if (auto r = x.sqrt()) return r;
  if (!x.is_rational()) return std::nullopt;
  auto sf = squarefree_part(x.a());
  if (!sf) return std::nullopt;
  auto [s, d0] = *sf;
  if (d0 == 0) return QuadExt(0);
  if (d0 == 1) return QuadExt(s);
  return QuadExt(Rat(0), s, d0);
}

}  // namespace

namespace {

QVector up_trim(QVector p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

QVector up_rem(QVector a, const QVector& b) {
  // remainder of a by b over the coefficient field
  while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
    QuadExt f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = up_trim(std::move(a));
    if (a.size() == 1 && a[0].is_zero()) break;
  }
  return a;
}

QVector up_gcd(QVector a, QVector b) {
  a = up_trim(std::move(a));
  b = up_trim(std::move(b));
  while (!(b.size() == 1 && b[0].is_zero())) {
    QVector r = up_rem(a, b);
    a = std::move(b);
    b = up_trim(std::move(r));
  }
  // monic
  if (!a.back().is_zero()) {
    QuadExt inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

QVector up_derivative(const QVector& p) {
  if (p.size() <= 1) return {QuadExt(0)};
  QVector d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * QuadExt(static_cast<long>(k));
  return d;
}

QVector up_quot(QVector a, const QVector& b) {
  QVector q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, QuadExt(0));
  while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
    QuadExt f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = up_trim(std::move(a));
    if (a.size() == 1 && a[0].is_zero()) break;
  }
  return q;
}

}  // namespace

RootResult upoly_roots(const QVector& p0, long ambient_d) {
  RootResult out;
  QVector p = p0;
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  std::vector<long> lift_ds = {0};
  for (const auto& c : p)
    if (c.d() != 0 && std::find(lift_ds.begin(), lift_ds.end(), c.d()) == lift_ds.end())
      lift_ds.push_back(c.d());
  if (ambient_d != 0 && std::find(lift_ds.begin(), lift_ds.end(), ambient_d) == lift_ds.end())
    lift_ds.push_back(ambient_d);
  // try exact roots until degree <= 2
  auto try_root = [&](const QuadExt& cand) -> bool {
    if (upoly_eval(p, cand).is_zero()) {
      out.exact.push_back(cand);
      p = upoly_deflate(p, cand);
      return true;
    }
    return false;
  };
  while (p.size() - 1 > 2) {
    // numeric roots of the square-free part (multiple roots would otherwise
    // blunt Durand-Kerner below the lifting tolerance)
    QVector sf = p;
    QVector g = up_gcd(p, up_derivative(p));
    if (g.size() > 1) sf = up_quot(p, g);
    std::vector<CScalar> pc;
    pc.reserve(sf.size());
    for (const auto& c : sf) pc.push_back(c.to_complex());
    auto nroots = upoly_roots_numeric(pc);
    bool found = false;
    for (const auto& z : nroots) {
      for (long d : lift_ds) {
        auto lift = recognize_quadext(z, d, 64, 1e-8);
        if (!lift) continue;
        while (p.size() - 1 >= 1 && try_root(*lift)) found = true;  // full multiplicity
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  int deg = static_cast<int>(p.size()) - 1;
  if (deg == 1) {
    out.exact.push_back(-(p[0] / p[1]));
    return out;
  }
  if (deg == 2) {
    QuadExt a = p[2], b = p[1], c = p[0];
    QuadExt disc = b * b - QuadExt(4) * a * c;
    std::optional<QuadExt> sd = quad_sqrt_any(disc);
    if (sd) {
      QuadExt two_a = QuadExt(2) * a;
      out.exact.push_back((-b + *sd) / two_a);
      out.exact.push_back((-b - *sd) / two_a);
      return out;
    }
  }
  if (deg >= 1) {
    std::vector<CScalar> pc;
    pc.reserve(p.size());
    for (const auto& c : p) pc.push_back(c.to_complex());
    for (const auto& z : upoly_roots_numeric(pc)) out.numeric.push_back(z);
  }
  return out;
}

std::optional<LinSolve> solve_linear(QMatrix A, QVector b) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (!A[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);
    QuadExt inv = A[row][col].inverse();
    for (int c = col; c < n; ++c) A[row][c] *= inv;
    b[row] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      QuadExt f = A[r][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (!b[r].is_zero()) return std::nullopt;  // inconsistent
  LinSolve s;
  s.particular.assign(n, QuadExt(0));
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) s.particular[pivot_col[r]] = b[r];
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QVector v(n, QuadExt(0));
    v[c] = QuadExt(1);
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) v[pivot_col[r]] = -A[r][c];
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

std::vector<QVector> nullspace(QMatrix A, int ncols) {
  QVector b(A.size(), QuadExt(0));
  if (A.empty()) {
    std::vector<QVector> basis;
    for (int c = 0; c < ncols; ++c) {
      QVector v(ncols, QuadExt(0));
      v[c] = QuadExt(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto s = solve_linear(std::move(A), std::move(b));
  return s ? s->nullspace : std::vector<QVector>{};
}

}  // namespace chazy
