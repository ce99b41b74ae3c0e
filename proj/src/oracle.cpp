#include "autocore/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "autocore/algebra.hpp"

namespace autocore {

namespace {

void check_oracle_bounds(const ReactionNetwork& rn, const OracleBounds& b) {
  if (rn.n_entities() > b.max_entities || rn.n_reactions() > b.max_reactions)
    throw BoundsError("oracle refuses networks beyond its bounds");
}

std::vector<int> mask_to_ids(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Literal definition check: well-formed and semipositive (by the dual route,
// keeping the oracle independent of the simplex).
bool oracle_autocatalytic(const ReactionNetwork& rn, const RatMatrix& s, const SubNetwork& sub) {
  if (sub.entities.empty() || sub.reactions.empty()) return false;
  for (int ri : sub.reactions) {
    bool has_reactant = false, has_product = false;
    for (int x : sub.entities) {
      if (rn.reactions[ri].s_minus(x) > 0) has_reactant = true;
      if (rn.reactions[ri].s_plus(x) > 0) has_product = true;
    }
    if (!has_reactant || !has_product) return false;
  }
  return dual_semipositivity(s.select(sub.entities, sub.reactions));
}

}  // namespace

std::vector<SubNetwork> brute_force_cores(const ReactionNetwork& rn, const OracleBounds& b) {
  check_oracle_bounds(rn, b);
  RatMatrix s = net_stoich(rn);
  int nx = rn.n_entities(), nr = rn.n_reactions();
  std::vector<SubNetwork> autocat;
  for (unsigned xm = 1; xm < (1u << nx); ++xm)
    for (unsigned rm = 1; rm < (1u << nr); ++rm) {
      SubNetwork sub{mask_to_ids(xm, nx), mask_to_ids(rm, nr)};
      if (oracle_autocatalytic(rn, s, sub)) autocat.push_back(sub);
    }
  std::vector<SubNetwork> minimal;
  for (const SubNetwork& a : autocat) {
    bool keep = true;
    for (const SubNetwork& o : autocat)
      if (!(o == a) && a.contains(o)) { keep = false; break; }
    if (keep) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<ChildSelection> brute_force_cs_cores(const ReactionNetwork& rn, const OracleBounds& b) {
  check_oracle_bounds(rn, b);
  RatMatrix s = net_stoich(rn);
  int nx = rn.n_entities(), nr = rn.n_reactions();

  std::vector<ChildSelection> autocat;
  for (unsigned xm = 1; xm < (1u << nx); ++xm)
    for (unsigned rm = 1; rm < (1u << nr); ++rm) {
      std::vector<int> xs = mask_to_ids(xm, nx), rs = mask_to_ids(rm, nr);
      if (xs.size() != rs.size()) continue;
      SubNetwork sub{xs, rs};
      std::vector<int> perm(rs);
      std::sort(perm.begin(), perm.end());
      do {
        ChildSelection cs;
        cs.sub = sub;
        bool valid = true;
        for (size_t i = 0; i < xs.size() && valid; ++i) {
          if (rn.reactions[perm[i]].s_minus(xs[i]) <= 0) valid = false;
          cs.kappa[xs[i]] = perm[i];
        }
        if (valid && oracle_autocatalytic(rn, s, sub)) autocat.push_back(cs);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

  std::vector<ChildSelection> minimal;
  for (const ChildSelection& a : autocat) {
    bool keep = true;
    for (const ChildSelection& o : autocat)
      if (!(o == a) && a.restricts_to(o)) { keep = false; break; }
    if (keep) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool dual_semipositivity(const RatMatrix& m) {
  // Dual variables y_1..y_rows. Constraints, each as coeffs . y <= rhs:
  //   -y_i <= 0, (M^T y)_j <= 0, -(sum y) <= -1.
  int rows = m.rows(), cols = m.cols();
  if (rows == 0) return false;  // no rows to cover: not semipositive
  if (cols == 0) return false;  // dual y = e_1 always works

  struct Ineq {
    std::vector<Rat> a;
    Rat rhs;
  };
  std::vector<Ineq> sys;
  for (int i = 0; i < rows; ++i) {
    Ineq q{std::vector<Rat>(rows), Rat(0)};
    q.a[i] = -1;
    sys.push_back(std::move(q));
  }
  for (int j = 0; j < cols; ++j) {
    Ineq q{std::vector<Rat>(rows), Rat(0)};
    for (int i = 0; i < rows; ++i) q.a[i] = m.at(i, j);
    sys.push_back(std::move(q));
  }
  {
    Ineq q{std::vector<Rat>(rows, Rat(-1)), Rat(-1)};
    sys.push_back(std::move(q));
  }

  // Fourier-Motzkin elimination of y_k, k = rows-1 .. 0.
  for (int k = rows - 1; k >= 0; --k) {
    std::vector<Ineq> pos, neg, zero;
    for (Ineq& q : sys) {
      if (q.a[k] > 0)
        pos.push_back(q);
      else if (q.a[k] < 0)
        neg.push_back(q);
      else
        zero.push_back(q);
    }
    std::vector<Ineq> next = zero;
    for (const Ineq& p : pos)
      for (const Ineq& n : neg) {
        // p.a[k] * y_k <= ...  combined with  n.a[k] * y_k <= ...
        Ineq q{std::vector<Rat>(rows), Rat(0)};
        Rat cp = p.a[k], cn = -n.a[k];
        for (int t = 0; t < rows; ++t) q.a[t] = cn * p.a[t] + cp * n.a[t];
        q.rhs = cn * p.rhs + cp * n.rhs;
        next.push_back(std::move(q));
      }
    sys = std::move(next);
  }

  for (const Ineq& q : sys)
    if (q.rhs < 0) return true;  // 0 <= negative: dual infeasible -> semipositive
  return false;
}

std::vector<Circuit> dfs_circuits(const BipartiteSubgraph& g) {
  auto adj = g.adjacency();
  std::vector<Circuit> found;
  std::vector<int> path;
  std::set<int> on_path;

  std::function<void(int, int)> extend = [&](int start, int v) {
    path.push_back(v);
    on_path.insert(v);
    auto it = adj.find(v);
    if (it != adj.end()) {
      for (int w : it->second) {
        if (w == start && path.size() >= 2) {
          Circuit c;
          size_t off = is_reaction_vert(path[0]) ? 1 : 0;
          for (size_t i = 0; i < path.size(); i += 2) {
            size_t xi = (off + i) % path.size();
            size_t ri = (off + i + 1) % path.size();
            c.steps.push_back({vert_id(path[xi]), vert_id(path[ri])});
          }
          c.canonicalize();
          found.push_back(std::move(c));
        } else if (!on_path.count(w)) {
          extend(start, w);
        }
      }
    }
    path.pop_back();
    on_path.erase(v);
  };

  for (const auto& [v, out] : adj) {
    path.clear();
    on_path.clear();
    extend(v, v);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

namespace {

// Rejection-sampled uniform draw; avoids distribution objects so that the
// byte stream is identical across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

bool draw_prob(std::mt19937_64& rng, double p) {
  return double(draw_below(rng, 1u << 30)) < p * double(1u << 30);
}

}  // namespace

ReactionNetwork random_network(const OracleBounds& b, std::uint64_t seed) {
  if (b.max_entities < 2) throw BoundsError("random_network needs at least 2 entities");
  std::mt19937_64 rng(seed);
  ReactionNetwork rn;
  int nx = 2 + int(draw_below(rng, std::uint64_t(b.max_entities - 1)));
  int nr = 1 + int(draw_below(rng, std::uint64_t(b.max_reactions)));
  for (int i = 0; i < nx; ++i) rn.entities.push_back("x" + std::to_string(i + 1));

  for (int ri = 0; ri < nr; ++ri) {
    Reaction r;
    r.name = "r" + std::to_string(ri + 1);
    int n_reac = 1 + int(draw_below(rng, std::uint64_t(std::min(2, nx - 1))));
    std::vector<int> ids(nx);
    for (int i = 0; i < nx; ++i) ids[i] = i;
    for (int i = 0; i < n_reac; ++i) {
      int j = i + int(draw_below(rng, std::uint64_t(nx - i)));
      std::swap(ids[i], ids[j]);
    }
    for (int i = 0; i < n_reac; ++i)
      r.reactants[ids[i]] = Rat(1 + int(draw_below(rng, std::uint64_t(b.max_coeff))));

    std::vector<int> rest(ids.begin() + n_reac, ids.end());
    std::sort(rest.begin(), rest.end());
    int n_prod = 1 + int(draw_below(rng, std::uint64_t(std::min(2, int(rest.size())))));
    for (int i = 0; i < n_prod; ++i) {
      int j = i + int(draw_below(rng, std::uint64_t(rest.size() - i)));
      std::swap(rest[i], rest[j]);
    }
    for (int i = 0; i < n_prod; ++i)
      r.products[rest[i]] = Rat(1 + int(draw_below(rng, std::uint64_t(b.max_coeff))));

    if (draw_prob(rng, b.catalysis_prob)) {
      // Copy one reactant into the products, creating explicit catalysis.
      auto it = r.reactants.begin();
      std::advance(it, draw_below(rng, r.reactants.size()));
      r.products[it->first] = it->second;
    }
    rn.reactions.push_back(std::move(r));
  }
  return rn;
}

}  // namespace autocore
