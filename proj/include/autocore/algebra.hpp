#pragma once

#include "autocore/network.hpp"

namespace autocore {

// Square CS matrix S[kappa]: rows follow the sorted entities of the sub-RN,
// column j is the net stoichiometry of kappa(x_j).
RatMatrix cs_matrix(const ChildSelection& cs, const ReactionNetwork& rn);

// Negative off-diagonal entries zeroed; diagonal kept.
RatMatrix metzler_part(const RatMatrix& m);
bool is_metzler(const RatMatrix& m);

// Strong connectivity of the digraph with an arc i -> j whenever i != j and
// entry (j, i) != 0 (column-to-row influence). 1x1 matrices are irreducible.
bool is_irreducible(const RatMatrix& m);

// Exactly one branch holds: a strictly positive v with Mv >> 0, or a
// nonnegative nonzero y with y^T M <= 0 (theorem of alternatives). A matrix
// with no rows carries an empty refutation.
struct SemipositivityCertificate {
  bool semipositive = false;
  std::vector<Rat> witness;     // v, when semipositive
  std::vector<Rat> refutation;  // y, otherwise
};

SemipositivityCertificate is_semipositive(const RatMatrix& m);

// Removes columns while keeping semipositivity until the column count equals
// the rank. Throws if m is not semipositive.
RatMatrix reduce_columns_semipositive(const RatMatrix& m);

int det_sign(const RatMatrix& m);
std::vector<Rat> char_poly(const RatMatrix& m);

struct PerronOptions {
  double tau = 1e-9;      // instability threshold on the estimated root
  double tol = 1e-12;     // power-iteration convergence tolerance
  int max_iter = 10000;
};

// Floating-point Perron root estimate of an irreducible Metzler matrix via
// power iteration on the shifted nonnegative matrix. Cross-check only.
double perron_root_estimate(const RatMatrix& m, const PerronOptions& opts = {});
bool perron_unstable(const RatMatrix& m, const PerronOptions& opts = {});

namespace detail {
// Phase-1 simplex with Bland's rule for {v >= 0, A v >= 1}; returns either a
// feasible v or a Farkas vector y >= 0, y != 0 with y^T A <= 0.
struct LpResult {
  bool feasible = false;
  std::vector<Rat> v;
  std::vector<Rat> y;
};
LpResult lp_cover_feasible(const RatMatrix& a);
}  // namespace detail

}  // namespace autocore
