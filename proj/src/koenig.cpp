#include "autocore/koenig.hpp"

#include <algorithm>
#include <functional>

#include "autocore/circuits.hpp"

namespace autocore {

KoenigGraph build_koenig(const ReactionNetwork& rn) {
  KoenigGraph k;
  k.n_entities = rn.n_entities();
  k.n_reactions = rn.n_reactions();
  for (int r = 0; r < rn.n_reactions(); ++r) {
    for (const auto& [x, c] : rn.reactions[r].reactants) {
      k.mr.insert({x, r});
      k.mr_weight[{x, r}] = c;
    }
    for (const auto& [x, c] : rn.reactions[r].products) {
      k.rm.insert({r, x});
      k.rm_weight[{r, x}] = c;
    }
  }
  return k;
}

bool BipartiteSubgraph::has_entity(int x) const {
  return std::binary_search(entities.begin(), entities.end(), x);
}

bool BipartiteSubgraph::has_reaction(int r) const {
  return std::binary_search(reactions.begin(), reactions.end(), r);
}

std::map<int, std::vector<int>> BipartiteSubgraph::adjacency() const {
  std::map<int, std::vector<int>> adj;
  for (int x : entities) adj[entity_vert(x)];
  for (int r : reactions) adj[reaction_vert(r)];
  for (const auto& [x, r] : mr) adj[entity_vert(x)].push_back(reaction_vert(r));
  for (const auto& [r, x] : rm) adj[reaction_vert(r)].push_back(entity_vert(x));
  for (auto& [v, out] : adj) std::sort(out.begin(), out.end());
  return adj;
}

BipartiteSubgraph full_graph(const KoenigGraph& k) {
  std::vector<int> xs(k.n_entities), rs(k.n_reactions);
  for (int i = 0; i < k.n_entities; ++i) xs[i] = i;
  for (int i = 0; i < k.n_reactions; ++i) rs[i] = i;
  return induced_subgraph(k, xs, rs);
}

BipartiteSubgraph induced_subgraph(const KoenigGraph& k, const std::vector<int>& entities,
                                   const std::vector<int>& reactions) {
  BipartiteSubgraph g;
  g.entities = entities;
  g.reactions = reactions;
  std::sort(g.entities.begin(), g.entities.end());
  std::sort(g.reactions.begin(), g.reactions.end());
  for (const auto& e : k.mr)
    if (g.has_entity(e.first) && g.has_reaction(e.second)) g.mr.insert(e);
  for (const auto& e : k.rm)
    if (g.has_reaction(e.first) && g.has_entity(e.second)) g.rm.insert(e);
  return g;
}

BipartiteSubgraph koenig_of_cs(const ChildSelection& cs, const KoenigGraph& k) {
  BipartiteSubgraph g;
  g.entities = cs.sub.entities;
  g.reactions = cs.sub.reactions;
  for (const auto& [x, r] : cs.kappa) g.mr.insert({x, r});
  for (const auto& e : k.rm)
    if (g.has_reaction(e.first) && g.has_entity(e.second)) g.rm.insert(e);
  return g;
}

namespace {

// Tarjan over the encoded digraph.
int count_sccs(const std::map<int, std::vector<int>>& adj) {
  std::map<int, int> index, low;
  std::set<int> on_stack;
  std::vector<int> stack;
  int next = 0, sccs = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack.insert(v);
    auto it = adj.find(v);
    if (it != adj.end()) {
      for (int w : it->second) {
        if (!index.count(w)) {
          strongconnect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      ++sccs;
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        if (w == v) break;
      }
    }
  };

  for (const auto& [v, out] : adj)
    if (!index.count(v)) strongconnect(v);
  return sccs;
}

// Undirected shadow with parallel arcs collapsed.
std::map<int, std::set<int>> shadow(const BipartiteSubgraph& g) {
  std::map<int, std::set<int>> und;
  for (int x : g.entities) und[entity_vert(x)];
  for (int r : g.reactions) und[reaction_vert(r)];
  auto add = [&](int a, int b) {
    und[a].insert(b);
    und[b].insert(a);
  };
  for (const auto& [x, r] : g.mr) add(entity_vert(x), reaction_vert(r));
  for (const auto& [r, x] : g.rm) add(reaction_vert(r), entity_vert(x));
  return und;
}

bool has_articulation_point_or_disconnected(const std::map<int, std::set<int>>& und) {
  if (und.empty()) return false;
  std::map<int, int> disc, low;
  int timer = 0, roots_children = 0;
  bool found = false;
  int root = und.begin()->first;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : und.at(v)) {
      if (w == parent) continue;
      if (!disc.count(w)) {
        if (v == root) ++roots_children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (v != root && low[w] >= disc[v]) found = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(root, -1);
  if (roots_children > 1) found = true;
  if (disc.size() != und.size()) return true;  // disconnected
  return found;
}

}  // namespace

bool is_strong_block(const BipartiteSubgraph& g) {
  if (g.n_vertices() == 0) throw Error("is_strong_block on empty graph");
  if (count_sccs(g.adjacency()) != 1) return false;
  if (g.n_vertices() <= 2) return true;  // lone vertex or digon
  return !has_articulation_point_or_disconnected(shadow(g));
}

bool is_fluffle(const BipartiteSubgraph& g) {
  if (g.entities.size() != g.reactions.size() || g.entities.empty()) return false;
  std::map<int, int> out_deg, in_deg;
  for (const auto& [x, r] : g.mr) {
    out_deg[x]++;
    in_deg[r]++;
  }
  for (int x : g.entities)
    if (out_deg[x] != 1) return false;
  for (int r : g.reactions)
    if (in_deg[r] != 1) return false;
  return is_strong_block(g);
}

bool is_induced_fluffle(const BipartiteSubgraph& g, const KoenigGraph& k) {
  if (!is_fluffle(g)) return false;
  return g == induced_subgraph(k, g.entities, g.reactions);
}

bool is_weakly_induced(const BipartiteSubgraph& h, const BipartiteSubgraph& g) {
  auto sh = shadow(h), sg = shadow(g);
  for (const auto& [v, nbrs] : sh) {
    if (!sg.count(v)) throw Error("is_weakly_induced: h is not a subgraph of g");
    for (int w : sg.at(v))
      if (sh.count(w) && !nbrs.count(w)) return false;
  }
  return true;
}

std::set<std::pair<int, int>> digons(const BipartiteSubgraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& [x, r] : g.mr)
    if (g.rm.count({r, x})) out.insert({x, r});
  return out;
}

std::optional<std::vector<Ear>> ear_decomposition(const BipartiteSubgraph& g) {
  if (!is_fluffle(g)) return std::nullopt;

  auto circuits = elementary_circuits(g, std::nullopt);
  // Base circuit: canonically first.
  const Circuit& base = circuits.front();
  std::set<int> covered_verts;
  std::set<std::pair<int, int>> covered_edges;  // encoded (from, to)
  std::vector<Ear> ears;

  Ear base_ear;
  for (const auto& [x, r] : base.steps) {
    base_ear.verts.push_back(entity_vert(x));
    base_ear.verts.push_back(reaction_vert(r));
  }
  base_ear.verts.push_back(entity_vert(base.steps.front().first));
  base_ear.closed = true;
  for (size_t i = 0; i + 1 < base_ear.verts.size(); ++i)
    covered_edges.insert({base_ear.verts[i], base_ear.verts[i + 1]});
  covered_verts.insert(base_ear.verts.begin(), base_ear.verts.end());
  ears.push_back(std::move(base_ear));

  std::map<int, int> matching;  // entity vert -> reaction vert
  for (const auto& [x, r] : g.mr) matching[entity_vert(x)] = reaction_vert(r);
  auto rm_sorted = std::vector<std::pair<int, int>>(g.rm.begin(), g.rm.end());
  std::sort(rm_sorted.begin(), rm_sorted.end());

  // Each round starts a new ear at a covered reaction vertex along an
  // uncovered RM-edge, walks fresh vertices (entity steps forced by the
  // matching), and must close at a covered entity.
  while (true) {
    std::pair<int, int> start{-1, -1};
    for (const auto& [r, x] : rm_sorted) {
      if (covered_edges.count({reaction_vert(r), entity_vert(x)})) continue;
      if (covered_verts.count(reaction_vert(r))) {
        start = {reaction_vert(r), entity_vert(x)};
        break;
      }
    }
    if (start.first < 0) break;

    std::vector<int> path{start.first, start.second};
    std::set<int> on_path{start.second};
    bool done = covered_verts.count(start.second) > 0;
    std::function<bool()> extend = [&]() -> bool {
      int v = path.back();
      if (!is_reaction_vert(v)) {
        int next = matching.at(v);
        if (covered_verts.count(next)) return false;  // would revisit a reaction
        if (on_path.count(next)) return false;
        path.push_back(next);
        on_path.insert(next);
        bool ok = extend();
        if (!ok) {
          path.pop_back();
          on_path.erase(next);
        }
        return ok;
      }
      int r = vert_id(v);
      for (const auto& [rr, x] : rm_sorted) {
        if (rr != r) continue;
        int next = entity_vert(x);
        if (covered_verts.count(next)) {
          path.push_back(next);
          return true;
        }
        if (on_path.count(next)) continue;
        path.push_back(next);
        on_path.insert(next);
        if (extend()) return true;
        path.pop_back();
        on_path.erase(next);
      }
      return false;
    };
    if (!done && !extend()) throw Error("ear decomposition walk failed on a fluffle");

    Ear ear;
    ear.verts = path;
    for (size_t i = 0; i + 1 < path.size(); ++i) covered_edges.insert({path[i], path[i + 1]});
    covered_verts.insert(path.begin(), path.end());
    ears.push_back(std::move(ear));
  }
  return ears;
}

std::optional<int> fluffle_center(const BipartiteSubgraph& g) {
  if (!is_fluffle(g)) throw Error("fluffle_center requires a fluffle");
  auto circuits = elementary_circuits(g, std::nullopt);
  std::set<int> common(g.entities.begin(), g.entities.end());
  for (const Circuit& c : circuits) {
    if (c.steps.size() < 2) continue;  // digons do not constrain the center
    std::set<int> on;
    for (const auto& [x, r] : c.steps) on.insert(x);
    std::set<int> keep;
    std::set_intersection(common.begin(), common.end(), on.begin(), on.end(),
                          std::inserter(keep, keep.begin()));
    common = std::move(keep);
    if (common.empty()) return std::nullopt;
  }
  return *common.begin();
}

}  // namespace autocore
