#include "newtonlab/lp.hpp"

namespace nl {

std::optional<RVec> feasible_point(const LinearSystem& sys) {
  const std::size_t n = sys.nvars;
  const std::size_t me = sys.eq.size(), mg = sys.ge.size(), m = me + mg;
  // columns: x+ (n), x- (n), surplus (mg), artificial (m), rhs
  const std::size_t ns = 2 * n + mg, N = ns + m;
  RMat t(m, RVec(N + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const RVec& a = i < me ? sys.eq[i] : sys.ge[i - me];
    Rat b = i < me ? sys.eq_rhs[i] : sys.ge_rhs[i - me];
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a[j];
      t[i][n + j] = -a[j];
    }
    if (i >= me) t[i][2 * n + (i - me)] = -1;
    t[i][N] = b;
    if (b < 0)
      for (auto& x : t[i]) x = -x;
    t[i][ns + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = ns + i;
  auto cost = [&](std::size_t j) { return j >= ns ? 1 : 0; };

  for (;;) {
    std::size_t enter = N;
    for (std::size_t j = 0; j < N && enter == N; ++j) {
      Rat d = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i]) && t[i][j] != 0) d -= t[i][j];
      if (d < 0) enter = j;
    }
    if (enter == N) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat r = t[i][N] / t[i][enter];
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    Rat p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= N; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rat obj = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= ns) obj += t[i][N];
  if (obj != 0) return std::nullopt;
  RVec x(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t[i][N];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][N];
  }
  return x;
}

}  // namespace nl
