#pragma once

#include <cstdint>

#include "autocore/circuits.hpp"
#include "autocore/network.hpp"

namespace autocore {

// Reference implementations, deliberately definition-literal and independent
// of the optimized search paths. Tiny bounds only.
struct OracleBounds {
  int max_entities = 5;
  int max_reactions = 5;
  int max_coeff = 3;
  int instances = 200;
  double catalysis_prob = 0.3;
  std::uint64_t seed = 1;
};

// All inclusion-minimal well-formed semipositive (X', R') pairs, by full
// subset enumeration. Refuses networks beyond the bounds.
std::vector<SubNetwork> brute_force_cores(const ReactionNetwork& rn, const OracleBounds& b = {});

// All sub-CS-minimal autocatalytic child-selections, by enumerating every
// bijection on every square subnetwork.
std::vector<ChildSelection> brute_force_cs_cores(const ReactionNetwork& rn, const OracleBounds& b = {});

// Semipositivity decided through the dual system {y >= 0, y^T M <= 0,
// sum y >= 1} by Fourier-Motzkin elimination; true iff no dual solution.
bool dual_semipositivity(const RatMatrix& m);

// Every elementary circuit by plain path extension with global deduplication.
std::vector<Circuit> dfs_circuits(const BipartiteSubgraph& g);

// Reproducible pseudo-random network: 2..max_entities entities, 1..max_reactions
// reactions with disjoint reactant/product sets, coefficients uniform on
// {1..max_coeff}; catalysis copies one reactant into the products with the
// configured probability.
ReactionNetwork random_network(const OracleBounds& b, std::uint64_t seed);

}  // namespace autocore
