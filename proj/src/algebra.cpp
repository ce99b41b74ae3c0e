#include "autocore/algebra.hpp"

#include <cmath>
#include <functional>

namespace autocore {

RatMatrix cs_matrix(const ChildSelection& cs, const ReactionNetwork& rn) {
  check_child_selection(rn, cs);
  const std::vector<int>& xs = cs.sub.entities;
  int n = int(xs.size());
  RatMatrix s = net_stoich(rn);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = s.at(xs[i], cs.kappa.at(xs[j]));
  return m;
}

RatMatrix metzler_part(const RatMatrix& m) {
  if (!m.square()) throw Error("metzler_part of non-square matrix");
  RatMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && out.at(i, j) < 0) out.at(i, j) = 0;
  return out;
}

bool is_metzler(const RatMatrix& m) {
  if (!m.square()) throw Error("is_metzler of non-square matrix");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m.at(i, j) < 0) return false;
  return true;
}

bool is_irreducible(const RatMatrix& m) {
  if (!m.square()) throw Error("is_irreducible of non-square matrix");
  int n = m.rows();
  if (n == 0) return false;
  if (n == 1) return true;
  // Strong connectivity by forward/backward reachability from vertex 0.
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == v || seen[w]) continue;
        Rat e = forward ? m.at(w, v) : m.at(v, w);  // arc v -> w iff M_{wv} != 0
        if (e != 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (char c : seen)
      if (!c) return false;
    return true;
  };
  return reach(true) && reach(false);
}

SemipositivityCertificate is_semipositive(const RatMatrix& m) {
  SemipositivityCertificate cert;
  if (m.rows() == 0 || m.cols() == 0) {
    // Degenerate shapes are not semipositive; no witness vector exists. A
    // column-free matrix with rows still admits the refutation e_1.
    cert.semipositive = false;
    if (m.rows() > 0) {
      cert.refutation.assign(m.rows(), Rat(0));
      cert.refutation[0] = 1;
    }
    return cert;
  }

  detail::LpResult lp = detail::lp_cover_feasible(m);
  if (!lp.feasible) {
    cert.semipositive = false;
    cert.refutation = std::move(lp.y);
    // Exact verification of the Farkas certificate.
    bool nonzero = false;
    for (const Rat& yi : cert.refutation) {
      if (yi < 0) throw Error("internal: negative Farkas multiplier");
      if (yi != 0) nonzero = true;
    }
    if (!nonzero) throw Error("internal: zero Farkas vector");
    for (const Rat& c : m.tmul(cert.refutation))
      if (c > 0) throw Error("internal: invalid Farkas certificate");
    return cert;
  }

  // Lift v >= 0 with Mv >= 1 to a strictly positive vector keeping Mv >> 0:
  // epsilon = (min residual) / (1 + max row abs-sum), exactly.
  std::vector<Rat> v = std::move(lp.v);
  std::vector<Rat> prod = m.mul(v);
  Rat min_res = prod[0];
  for (const Rat& p : prod) min_res = std::min(min_res, p);
  Rat max_row = 0;
  for (int i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j) s += abs(m.at(i, j));
    max_row = std::max(max_row, s);
  }
  Rat eps = min_res / (1 + max_row);
  for (Rat& vi : v) vi += eps;

  prod = m.mul(v);
  for (const Rat& p : prod)
    if (p <= 0) throw Error("internal: strictification failed");
  for (const Rat& vi : v)
    if (vi <= 0) throw Error("internal: witness not strictly positive");

  cert.semipositive = true;
  cert.witness = std::move(v);
  return cert;
}

RatMatrix reduce_columns_semipositive(const RatMatrix& m) {
  if (!is_semipositive(m).semipositive) throw Error("reduce_columns_semipositive: input not semipositive");
  RatMatrix cur = m;
  while (cur.rank() < cur.cols()) {
    bool removed = false;
    for (int j = 0; j < cur.cols(); ++j) {
      RatMatrix cand = cur.without_col(j);
      if (is_semipositive(cand).semipositive) {
        cur = std::move(cand);
        removed = true;
        break;
      }
    }
    if (!removed) throw Error("internal: no removable column despite rank deficiency");
  }
  return cur;
}

int det_sign(const RatMatrix& m) { return sgn(m.determinant()); }

std::vector<Rat> char_poly(const RatMatrix& m) { return m.char_poly(); }

double perron_root_estimate(const RatMatrix& m, const PerronOptions& opts) {
  if (!m.square() || m.rows() == 0) throw Error("perron_root_estimate: square nonempty matrix required");
  if (!is_metzler(m)) throw Error("perron_root_estimate: matrix is not Metzler");
  if (!is_irreducible(m)) throw Error("perron_root_estimate: matrix is reducible");
  int n = m.rows();

  // Shift to a primitive nonnegative matrix: Q = M + (c+1) I with
  // c = max |diagonal|. The +1 breaks periodicity of bipartite-like graphs.
  double c = 0;
  for (int i = 0; i < n; ++i) c = std::max(c, std::fabs(m.at(i, i).convert_to<double>()));
  double shift = c + 1.0;

  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = m.at(i, j).convert_to<double>() + (i == j ? shift : 0.0);

  std::vector<double> x(n, 1.0 / n);
  double lambda = 0;
  for (int it = 0; it < opts.max_iter; ++it) {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += q[i][j] * x[j];
    double norm = 0;
    for (double v : y) norm += v;
    if (norm == 0) break;
    double next = norm;  // with sum-normalized positive x, sum(Qx) estimates the root
    for (int i = 0; i < n; ++i) y[i] /= norm;
    x = y;
    if (std::fabs(next - lambda) < opts.tol) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda - shift;
}

bool perron_unstable(const RatMatrix& m, const PerronOptions& opts) {
  return perron_root_estimate(m, opts) > opts.tau;
}

}  // namespace autocore
