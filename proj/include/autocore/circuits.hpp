#pragma once

#include <optional>

#include "autocore/koenig.hpp"

namespace autocore {

// Elementary circuit (x1, r1, x2, r2, ..., xn, rn) closing back to x1.
// Canonical form rotates the smallest entity ordinal to the front.
struct Circuit {
  std::vector<std::pair<int, int>> steps;  // (x_i, r_i)

  int length() const { return int(steps.size()) * 2; }
  void canonicalize();
  std::vector<int> encoded_verts() const;  // x1, r1, x2, ... (no closing repeat)
  bool has_vertex_entity(int x) const;
  std::set<std::pair<int, int>> mr_edges() const;                 // (x_i, r_i)
  std::set<std::pair<int, int>> rm_edges() const;                 // (r_i, x_{i+1})
  std::map<int, int> matching() const;                            // x_i -> r_i
  bool operator==(const Circuit& o) const { return steps == o.steps; }
  bool operator<(const Circuit& o) const;
};

// All elementary circuits of length (vertex count) <= max_len, each exactly
// once in canonical form, sorted. Unbounded enumeration refuses graphs with
// more than 40 vertices unless a bound is given.
std::vector<Circuit> elementary_circuits(const BipartiteSubgraph& g, std::optional<int> max_len);

// MR-edges of the host graph joining circuit vertices but absent from the
// circuit itself.
std::set<std::pair<int, int>> mr_chords(const Circuit& c, const KoenigGraph& k);

// Circuit without MR-chords. RM back-edges from catalysis are tolerated.
bool is_metzler_circuit(const Circuit& c, const KoenigGraph& k);

enum class CircuitKind { Autocatalytic, Drainable, Neutral };

struct CircuitClass {
  CircuitKind kind;
  Rat stout;  // product of net production along RM steps
  Rat stin;   // product of net consumption along MR steps
};

CircuitClass circuit_class(const Circuit& c, const ReactionNetwork& rn);

// Length >= 4 and every RM step has strictly positive net coefficient;
// such circuits correspond to contributing permutation cycles of the
// Metzler part of the CS matrix. The circuit must lie inside K(kappa).
bool is_contributing(const Circuit& c, const ChildSelection& cs, const ReactionNetwork& rn);

// A subgraph of K(kappa) together with the MR matching it carries.
struct FluffleCandidate {
  BipartiteSubgraph graph;
  std::map<int, int> matching;  // entity -> reaction
};

FluffleCandidate circuit_fluffle(const Circuit& c);

class MatchingConflictError : public Error {
public:
  MatchingConflictError(const std::string& what, int entity) : Error(what), entity(entity) {}
  int entity;
};

// Union of parts sharing one consistent matching; throws
// MatchingConflictError naming the offending entity otherwise.
FluffleCandidate superpose(const std::vector<FluffleCandidate>& parts);

// Fluffle-part matrix A(G) over X(G): CS-matrix entries on the diagonal and
// on positions realized by G's RM-edges, zero elsewhere. Rows/columns follow
// the sorted entity order of G.
RatMatrix fluffle_part_matrix(const FluffleCandidate& g, const ChildSelection& cs,
                              const ReactionNetwork& rn);

// Counts (N, N') of the unit-stoichiometry determinant identity
// (-1)^(n-1) det A(G) = N - N', where N is the number of contributing
// circuits of G covering every zero-diagonal entity and N' = 1 iff the
// diagonal of A(G) has no zero entry. Verifies the identity exactly.
std::pair<long, long> unit_det_count(const FluffleCandidate& g, const ChildSelection& cs,
                                     const ReactionNetwork& rn);

}  // namespace autocore
