#include "autocore/circuits.hpp"

#include <algorithm>
#include <functional>

#include "autocore/algebra.hpp"

namespace autocore {

void Circuit::canonicalize() {
  if (steps.empty()) return;
  size_t best = 0;
  for (size_t i = 1; i < steps.size(); ++i)
    if (steps[i].first < steps[best].first) best = i;
  std::rotate(steps.begin(), steps.begin() + best, steps.end());
}

std::vector<int> Circuit::encoded_verts() const {
  std::vector<int> out;
  for (const auto& [x, r] : steps) {
    out.push_back(entity_vert(x));
    out.push_back(reaction_vert(r));
  }
  return out;
}

bool Circuit::has_vertex_entity(int x) const {
  for (const auto& s : steps)
    if (s.first == x) return true;
  return false;
}

std::set<std::pair<int, int>> Circuit::mr_edges() const {
  std::set<std::pair<int, int>> out;
  for (const auto& s : steps) out.insert(s);
  return out;
}

std::set<std::pair<int, int>> Circuit::rm_edges() const {
  std::set<std::pair<int, int>> out;
  for (size_t i = 0; i < steps.size(); ++i)
    out.insert({steps[i].second, steps[(i + 1) % steps.size()].first});
  return out;
}

std::map<int, int> Circuit::matching() const {
  std::map<int, int> m;
  for (const auto& [x, r] : steps) m[x] = r;
  return m;
}

bool Circuit::operator<(const Circuit& o) const {
  return encoded_verts() < o.encoded_verts();
}

std::vector<Circuit> elementary_circuits(const BipartiteSubgraph& g, std::optional<int> max_len) {
  if (!max_len && g.n_vertices() > 40)
    throw BoundsError("unbounded circuit enumeration refused for graphs with more than 40 vertices");
  int cap = max_len.value_or(g.n_vertices());

  auto adj = g.adjacency();
  std::vector<int> verts;
  for (const auto& [v, out] : adj) verts.push_back(v);
  std::sort(verts.begin(), verts.end());

  std::vector<Circuit> found;
  std::vector<int> path;
  std::set<int> on_path;

  // Anchored DFS: each circuit is discovered once, from its smallest
  // encoded vertex, using only vertices >= the anchor.
  std::function<void(int, int)> dfs = [&](int anchor, int v) {
    path.push_back(v);
    on_path.insert(v);
    for (int w : adj[v]) {
      if (w == anchor && path.size() >= 2) {
        Circuit c;
        size_t start = is_reaction_vert(path[0]) ? 1 : 0;  // anchor may be a reaction
        for (size_t i = 0; i < path.size(); i += 2) {
          size_t xi = (start + i) % path.size();
          size_t ri = (start + i + 1) % path.size();
          c.steps.push_back({vert_id(path[xi]), vert_id(path[ri])});
        }
        c.canonicalize();
        found.push_back(std::move(c));
      } else if (w > anchor && !on_path.count(w) && int(path.size()) < cap) {
        dfs(anchor, w);
      }
    }
    path.pop_back();
    on_path.erase(v);
  };

  for (int a : verts) {
    path.clear();
    on_path.clear();
    dfs(a, a);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::set<std::pair<int, int>> mr_chords(const Circuit& c, const KoenigGraph& k) {
  std::set<int> xs, rs;
  for (const auto& [x, r] : c.steps) {
    xs.insert(x);
    rs.insert(r);
  }
  auto on_circuit = c.mr_edges();
  std::set<std::pair<int, int>> out;
  for (const auto& e : k.mr)
    if (xs.count(e.first) && rs.count(e.second) && !on_circuit.count(e)) out.insert(e);
  return out;
}

bool is_metzler_circuit(const Circuit& c, const KoenigGraph& k) {
  return mr_chords(c, k).empty();
}

CircuitClass circuit_class(const Circuit& c, const ReactionNetwork& rn) {
  size_t n = c.steps.size();
  Rat stout = 1, stin = 1;
  for (size_t i = 0; i < n; ++i) {
    const auto& [xi, ri] = c.steps[i];
    int xnext = c.steps[(i + 1) % n].first;
    const Reaction& r = rn.reactions[ri];
    stout *= r.s_plus(xnext) - r.s_minus(xnext);
    stin *= r.s_minus(xi) - r.s_plus(xi);
  }
  CircuitKind kind = stout > stin   ? CircuitKind::Autocatalytic
                     : stout < stin ? CircuitKind::Drainable
                                    : CircuitKind::Neutral;
  return {kind, stout, stin};
}

bool is_contributing(const Circuit& c, const ChildSelection& cs, const ReactionNetwork& rn) {
  for (const auto& [x, r] : c.steps) {
    auto it = cs.kappa.find(x);
    if (it == cs.kappa.end() || it->second != r)
      throw Error("circuit does not lie in K(kappa) of the given child-selection");
  }
  if (c.length() < 4) return false;
  size_t n = c.steps.size();
  for (size_t i = 0; i < n; ++i) {
    int ri = c.steps[i].second;
    int xnext = c.steps[(i + 1) % n].first;
    const Reaction& r = rn.reactions[ri];
    if (r.s_plus(xnext) <= r.s_minus(xnext)) return false;
  }
  return true;
}

FluffleCandidate circuit_fluffle(const Circuit& c) {
  FluffleCandidate f;
  std::set<int> xs, rs;
  for (const auto& [x, r] : c.steps) {
    xs.insert(x);
    rs.insert(r);
  }
  f.graph.entities.assign(xs.begin(), xs.end());
  f.graph.reactions.assign(rs.begin(), rs.end());
  f.graph.mr = c.mr_edges();
  f.graph.rm = c.rm_edges();
  f.matching = c.matching();
  return f;
}

FluffleCandidate superpose(const std::vector<FluffleCandidate>& parts) {
  if (parts.empty()) throw Error("superpose of an empty list");
  FluffleCandidate out;
  std::set<int> xs, rs;
  for (const FluffleCandidate& p : parts) {
    for (const auto& [x, r] : p.matching) {
      auto it = out.matching.find(x);
      if (it != out.matching.end() && it->second != r)
        throw MatchingConflictError("matching conflict on entity " + std::to_string(x), x);
      out.matching[x] = r;
    }
    xs.insert(p.graph.entities.begin(), p.graph.entities.end());
    rs.insert(p.graph.reactions.begin(), p.graph.reactions.end());
    out.graph.mr.insert(p.graph.mr.begin(), p.graph.mr.end());
    out.graph.rm.insert(p.graph.rm.begin(), p.graph.rm.end());
  }
  out.graph.entities.assign(xs.begin(), xs.end());
  out.graph.reactions.assign(rs.begin(), rs.end());
  std::map<int, int> in_deg;
  for (const auto& [x, r] : out.graph.mr) in_deg[r]++;
  for (int r : out.graph.reactions)
    if (in_deg[r] > 1) throw MatchingConflictError("reaction with in-degree > 1 after superposition", -1);
  return out;
}

RatMatrix fluffle_part_matrix(const FluffleCandidate& g, const ChildSelection& cs,
                              const ReactionNetwork& rn) {
  // E1(G) must agree with the child-selection on G's entities.
  for (const auto& [x, r] : g.matching) {
    auto it = cs.kappa.find(x);
    if (it == cs.kappa.end() || it->second != r)
      throw Error("fluffle matching disagrees with the child-selection");
  }
  const std::vector<int>& xs = g.graph.entities;
  RatMatrix s = net_stoich(rn);
  int n = int(xs.size());
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Entry (i,j) of the CS matrix is realized by the RM-edge
      // (kappa(x_j), x_i); keep it only where G carries that edge.
      if (i == j || g.graph.rm.count({cs.kappa.at(xs[j]), xs[i]}))
        a.at(i, j) = s.at(xs[i], cs.kappa.at(xs[j]));
    }
  return a;
}

std::pair<long, long> unit_det_count(const FluffleCandidate& g, const ChildSelection& cs,
                                     const ReactionNetwork& rn) {
  SubNetwork span = make_sub(g.graph.entities, g.graph.reactions);
  if (!has_unit_stoichiometry(rn, span))
    throw Error("unit_det_count requires unit stoichiometry");

  RatMatrix a = fluffle_part_matrix(g, cs, rn);
  int n = a.rows();
  std::vector<int> zero_diag;
  bool all_nonzero = true;
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      zero_diag.push_back(g.graph.entities[i]);
      all_nonzero = false;
    }
  }

  auto circuits = elementary_circuits(g.graph, std::nullopt);
  std::vector<Circuit> contributing;
  for (const Circuit& c : circuits) {
    if (c.length() < 4) continue;
    bool ok = true;
    size_t m = c.steps.size();
    for (size_t i = 0; i < m && ok; ++i) {
      const Reaction& r = rn.reactions[c.steps[i].second];
      int xnext = c.steps[(i + 1) % m].first;
      if (r.s_plus(xnext) <= r.s_minus(xnext)) ok = false;
    }
    if (!ok) continue;
    for (int z : zero_diag)
      if (!c.has_vertex_entity(z)) { ok = false; break; }
    if (ok) contributing.push_back(c);
  }

  // Precondition: centralized, or at least pairwise intersecting
  // contributing circuits.
  bool centralized = fluffle_center(g.graph).has_value();
  if (!centralized) {
    for (size_t i = 0; i < contributing.size(); ++i)
      for (size_t j = i + 1; j < contributing.size(); ++j) {
        std::set<int> vi(contributing[i].encoded_verts().begin(), contributing[i].encoded_verts().end());
        bool shares = false;
        for (int v : contributing[j].encoded_verts())
          if (vi.count(v)) { shares = true; break; }
        if (!shares)
          throw Error("unit_det_count requires a centralized fluffle or pairwise intersecting circuits");
      }
  }

  long big_n = long(contributing.size());
  long n_prime = all_nonzero ? 1 : 0;
  Rat det = a.determinant();
  Rat expect = Rat(big_n - n_prime);
  if ((n % 2 == 0) ? (-det != expect) : (det != expect))
    throw Error("unit determinant identity violated: det=" + rat_str(det) + " N=" +
                std::to_string(big_n) + " N'=" + std::to_string(n_prime));
  return {big_n, n_prime};
}

}  // namespace autocore
