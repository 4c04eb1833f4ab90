#include "strata/simplex.hpp"

#include <algorithm>

namespace strata {

namespace {

// Dense tableau over exact rationals.  Columns: structural variables then
// one artificial per row; basis starts as the artificials.
struct Tableau {
  size_t rows = 0, structurals = 0;
  std::vector<std::vector<Rational>> a; // rows x (structurals + rows)
  std::vector<Rational> b;
  std::vector<size_t> basis;

  size_t cols() const { return structurals + rows; }

  void pivot(size_t pr, size_t pc) {
    const Rational inv = Rational(1) / a[pr][pc];
    for (auto& v : a[pr]) v *= inv;
    b[pr] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      const Rational f = a[r][pc];
      for (size_t cidx = 0; cidx < cols(); ++cidx) a[r][cidx] -= f * a[pr][cidx];
      b[r] -= f * b[pr];
    }
    basis[pr] = pc;
  }

  // Maximizes c (a full-length cost vector) with Bland's anticycling rule;
  // only columns below enter_limit may enter the basis.  Returns false when
  // the problem is unbounded.
  bool run(const std::vector<Rational>& cost, size_t enter_limit) {
    while (true) {
      std::vector<Rational> y(rows, Rational(0));
      for (size_t r = 0; r < rows; ++r) y[r] = cost[basis[r]];
      size_t enter = cols();
      for (size_t cidx = 0; cidx < enter_limit; ++cidx) {
        Rational red = cost[cidx];
        for (size_t r = 0; r < rows; ++r) red -= y[r] * a[r][cidx];
        if (red > 0) {
          enter = cidx;
          break; // Bland: first improving column
        }
      }
      if (enter == cols()) return true;
      size_t leave = rows;
      Rational best;
      for (size_t r = 0; r < rows; ++r) {
        if (a[r][enter] <= 0) continue;
        const Rational ratio = b[r] / a[r][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }

  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    // y_i = c_B B^{-1} e_i = reduced objective over the artificial column i
    std::vector<Rational> y(rows, Rational(0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t r = 0; r < rows; ++r) y[i] += cost[basis[r]] * a[r][structurals + i];
    return y;
  }
};

} // namespace

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& M,
                          const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const size_t rows = M.size(), n = c.size();
  require(b.size() == rows, errc::bad_parameters, "rhs size mismatch");
  for (const auto& row : M)
    require(row.size() == n, errc::bad_parameters, "matrix width mismatch");

  Tableau t;
  t.rows = rows;
  t.structurals = n;
  t.a.assign(rows, std::vector<Rational>(n + rows, Rational(0)));
  t.b = b;
  for (size_t r = 0; r < rows; ++r) {
    for (size_t cidx = 0; cidx < n; ++cidx) t.a[r][cidx] = M[r][cidx];
    if (t.b[r] < 0) {
      for (auto& v : t.a[r]) v = -v;
      t.b[r] = -t.b[r];
    }
    t.a[r][n + r] = 1;
    t.basis.push_back(n + r);
  }

  // Phase one: drive the artificials to zero.
  std::vector<Rational> phase1(n + rows, Rational(0));
  for (size_t r = 0; r < rows; ++r) phase1[n + r] = Rational(-1);
  require(t.run(phase1, t.cols()), errc::bad_parameters, "phase one cannot be unbounded");
  Rational infeasibility(0);
  for (size_t r = 0; r < rows; ++r)
    if (t.basis[r] >= n) infeasibility += t.b[r];
  SimplexResult out;
  if (infeasibility != 0) {
    out.feasible = false;
    out.y = t.duals(phase1);
    return out;
  }
  // Pivot leftover zero-valued artificials out of the basis when possible.
  for (size_t r = 0; r < rows; ++r) {
    if (t.basis[r] < n) continue;
    for (size_t cidx = 0; cidx < n; ++cidx)
      if (t.a[r][cidx] != 0) {
        t.pivot(r, cidx);
        break;
      }
  }

  // Artificials are barred from re-entering the basis in phase two.
  std::vector<Rational> phase2(n + rows, Rational(0));
  for (size_t cidx = 0; cidx < n; ++cidx) phase2[cidx] = c[cidx];
  require(t.run(phase2, n), errc::bad_parameters, "objective is unbounded");

  out.feasible = true;
  out.x.assign(n, Rational(0));
  for (size_t r = 0; r < rows; ++r)
    if (t.basis[r] < n) out.x[t.basis[r]] = t.b[r];
  out.objective = Rational(0);
  for (size_t cidx = 0; cidx < n; ++cidx) out.objective += c[cidx] * out.x[cidx];
  out.y = t.duals(phase2);
  return out;
}

PositiveKernelResult strictly_positive_kernel(const std::vector<std::vector<Rational>>& A) {
  require(!A.empty() || true, errc::bad_parameters, "");
  const size_t n = A.empty() ? 0 : A[0].size();
  require(n > 0, errc::bad_parameters, "no variables");
  const size_t k = A.size();

  // Variables (u_1..u_n, t); x = u + t*1; maximize t subject to
  // A(u + t 1) = 0 and sum(u) + n t = 1.
  std::vector<std::vector<Rational>> M(k + 1, std::vector<Rational>(n + 1, Rational(0)));
  std::vector<Rational> b(k + 1, Rational(0)), c(n + 1, Rational(0));
  for (size_t r = 0; r < k; ++r) {
    Rational rowsum(0);
    for (size_t e = 0; e < n; ++e) {
      M[r][e] = A[r][e];
      rowsum += A[r][e];
    }
    M[r][n] = rowsum;
  }
  for (size_t e = 0; e < n; ++e) M[k][e] = 1;
  M[k][n] = Rational(static_cast<int>(n));
  b[k] = 1;
  c[n] = 1;

  const SimplexResult lp = simplex_max(M, b, c);
  PositiveKernelResult out;
  if (lp.feasible && lp.objective > 0) {
    out.feasible = true;
    out.solution.assign(n, Rational(0));
    Rational sum(0);
    for (size_t e = 0; e < n; ++e) {
      out.solution[e] = lp.x[e] + lp.objective;
      require(out.solution[e] > 0, errc::bad_parameters, "witness is not positive");
      sum += out.solution[e];
    }
    require(sum == 1, errc::bad_parameters, "witness normalization failed");
    for (size_t r = 0; r < k; ++r) {
      Rational dot(0);
      for (size_t e = 0; e < n; ++e) dot += A[r][e] * out.solution[e];
      require(dot == 0, errc::bad_parameters, "witness fails an equation");
    }
    return out;
  }

  // Farkas side: at optimum the normalization multiplier equals the optimal
  // value 0 (or is strictly negative when even the relaxed system is empty),
  // so w = A^T y is entrywise nonnegative with positive sum; a strictly
  // positive x with A x = 0 would force 0 = y.(A x) = w.x > 0.
  out.feasible = false;
  out.certificate_y.assign(k, Rational(0));
  for (size_t r = 0; r < k; ++r) out.certificate_y[r] = lp.y[r];
  out.certificate_w.assign(n, Rational(0));
  for (size_t e = 0; e < n; ++e)
    for (size_t r = 0; r < k; ++r) out.certificate_w[e] += A[r][e] * out.certificate_y[r];
  bool nonneg = true, nonzero = false;
  for (const auto& w : out.certificate_w) {
    if (w < 0) nonneg = false;
    if (w != 0) nonzero = true;
  }
  require(nonneg && nonzero, errc::bad_parameters, "no usable infeasibility certificate");
  return out;
}

} // namespace strata
