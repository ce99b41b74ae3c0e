#include "autocore/algebra.hpp"

namespace autocore::detail {

// Tableau phase-1 simplex for the system A v - s = 1, v, s >= 0, minimizing
// the sum of artificial variables. Bland's rule guarantees termination.
// Column layout: [v_0..v_{n-1} | s_0..s_{m-1} | a_0..a_{m-1} | rhs].
LpResult lp_cover_feasible(const RatMatrix& a) {
  const int m = a.rows(), n = a.cols();
  LpResult res;
  if (m == 0) {
    // No rows to cover: v = 1 vacuously satisfies Av >= 1.
    res.feasible = true;
    res.v.assign(n, Rat(1));
    return res;
  }

  const int n_total = n + 2 * m;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n_total + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a.at(i, j);
    t[i][n + i] = -1;          // surplus
    t[i][n + m + i] = 1;       // artificial
    t[i][n_total] = 1;         // rhs
    basis[i] = n + m + i;
  }

  // Reduced costs d_j = c_j - y^T A_j with c = 1 on artificials.
  std::vector<Rat> d(n_total);
  for (int j = 0; j < n_total; ++j) {
    Rat cj = (j >= n + m) ? Rat(1) : Rat(0);
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += t[i][j];  // c_B = 1 for all basic rows
    d[j] = cj - s;
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < n_total; ++j)
      if (d[j] < 0) { enter = j; break; }  // Bland: smallest index
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n_total] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("phase-1 simplex unbounded");  // cannot happen: objective >= 0

    Rat piv = t[leave][enter];
    for (int j = 0; j <= n_total; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= n_total; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat fd = d[enter];
    for (int j = 0; j < n_total; ++j) d[j] -= fd * t[leave][j];
    basis[leave] = enter;
  }

  Rat obj = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n + m) obj += t[i][n_total];

  if (obj == 0) {
    res.feasible = true;
    res.v.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.v[basis[i]] = t[i][n_total];
  } else {
    // Dual values off the artificial columns: y_i = 1 - d_{a_i}.
    res.y.resize(m);
    for (int i = 0; i < m; ++i) res.y[i] = Rat(1) - d[n + m + i];
  }
  return res;
}

}  // namespace autocore::detail
