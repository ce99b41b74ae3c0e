#pragma once

#include <map>
#include <optional>
#include <set>

#include "autocore/network.hpp"

namespace autocore {

// Bipartite vertices are encoded into a single id space for traversal:
// entity x -> 2x, reaction r -> 2r+1.
inline int entity_vert(int x) { return 2 * x; }
inline int reaction_vert(int r) { return 2 * r + 1; }
inline bool is_reaction_vert(int v) { return v & 1; }
inline int vert_id(int v) { return v >> 1; }

// Full bipartite graph of a network. MR-edges (x,r) exist iff s-_{xr} > 0,
// RM-edges (r,x) iff s+_{xr} > 0; stoichiometric coefficients are the weights.
struct KoenigGraph {
  int n_entities = 0;
  int n_reactions = 0;
  std::set<std::pair<int, int>> mr;  // (entity, reaction)
  std::set<std::pair<int, int>> rm;  // (reaction, entity)
  std::map<std::pair<int, int>, Rat> mr_weight;
  std::map<std::pair<int, int>, Rat> rm_weight;
};

KoenigGraph build_koenig(const ReactionNetwork& rn);

// A subgraph of some KoenigGraph: retained vertices plus retained edges.
struct BipartiteSubgraph {
  std::vector<int> entities;   // sorted
  std::vector<int> reactions;  // sorted
  std::set<std::pair<int, int>> mr;
  std::set<std::pair<int, int>> rm;

  bool operator==(const BipartiteSubgraph& o) const = default;
  bool has_entity(int x) const;
  bool has_reaction(int r) const;
  int n_vertices() const { return int(entities.size() + reactions.size()); }
  // Encoded adjacency for traversal, deterministic order.
  std::map<int, std::vector<int>> adjacency() const;
};

BipartiteSubgraph full_graph(const KoenigGraph& k);
BipartiteSubgraph induced_subgraph(const KoenigGraph& k, const std::vector<int>& entities,
                                   const std::vector<int>& reactions);

// K(kappa): MR-edges are exactly the matching, RM-edges all induced ones.
BipartiteSubgraph koenig_of_cs(const ChildSelection& cs, const KoenigGraph& k);

// Strongly connected and 2-connected in the undirected shadow (digon arcs
// collapse to one edge; the 2-connectivity requirement is waived for graphs
// with at most two vertices so a lone digon counts).
bool is_strong_block(const BipartiteSubgraph& g);

// Strong block with |X|=|R|, entity out-degree 1 and reaction in-degree 1.
bool is_fluffle(const BipartiteSubgraph& g);

// Fluffle whose edges are all the parent edges among its vertices.
bool is_induced_fluffle(const BipartiteSubgraph& g, const KoenigGraph& k);

// Undirected shadow of h is an induced subgraph of the shadow of g.
bool is_weakly_induced(const BipartiteSubgraph& h, const BipartiteSubgraph& g);

std::set<std::pair<int, int>> digons(const BipartiteSubgraph& g);

// One ear of an ear decomposition, as an encoded vertex walk. The first ear
// is the base circuit (closed: front() == back()); later ears run from a
// reaction vertex to an entity vertex of the earlier stages.
struct Ear {
  std::vector<int> verts;
  bool closed = false;
};

// Present iff g is a fluffle; every non-base ear then initiates at a
// reaction vertex and terminates at an entity vertex.
std::optional<std::vector<Ear>> ear_decomposition(const BipartiteSubgraph& g);

// Entity through which every elementary circuit of length >= 4 passes
// (smallest ordinal when several qualify). Requires g to be a fluffle.
std::optional<int> fluffle_center(const BipartiteSubgraph& g);

}  // namespace autocore
