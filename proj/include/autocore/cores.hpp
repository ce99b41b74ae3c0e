#pragma once

#include "autocore/algebra.hpp"
#include "autocore/circuits.hpp"

namespace autocore {

enum class CoreKind { AutocatalyticCore, ExtraCsCore };

enum class UnitClass { CircuitOnly, CircuitPlusChord, CircuitPlusEar, TypeIIIDoubleCircuit };

struct SearchBounds {
  int max_core_entities = 16;
  std::optional<int> max_circuit_len;  // vertex count cap per circuit
  int max_superposition_depth = 16;
  std::optional<int> time_budget_ms;
};

struct CoreReport {
  SubNetwork sub;
  ChildSelection cs;
  CoreKind kind = CoreKind::AutocatalyticCore;
  std::vector<Rat> witness;  // S[kappa] * witness >> 0, columns in kappa order
  RatMatrix matrix;          // the CS matrix
  std::optional<bool> hard;
  std::optional<UnitClass> unit_class;
};

struct CoreList {
  std::vector<CoreReport> items;
  bool complete = true;  // false when a search bound was hit
};

// ({x}, {r}) pairs with s+ > s- > 0, each with kappa(x) = r and witness (1).
std::vector<CoreReport> single_reaction_cores(const ReactionNetwork& rn);

// Witness iff the sub-RN is well-formed with semipositive stoichiometric
// submatrix. Witness columns follow the sorted reaction order of the sub.
std::optional<std::vector<Rat>> is_autocatalytic_sub(const ReactionNetwork& rn, const SubNetwork& sub);

// The unique child-selection of an autocatalytic core; throws if the sub-RN
// violates the unique-reactant structure (then it was not a core).
ChildSelection unique_cs_of_core(const ReactionNetwork& rn, const SubNetwork& sub);

// All autocatalytic cores within bounds: single-reaction cores, Metzler
// circuits, and induced-fluffle superpositions, filtered to inclusion-minimal
// (X', R') pairs. Sorted by (|X'|, entity names, reaction names).
CoreList enumerate_autocatalytic_cores(const ReactionNetwork& rn, const SearchBounds& b = {});

// All autocatalytic CS-cores within bounds: fluffles keyed by their MR
// matchings, filtered to sub-CS-minimal elements.
CoreList enumerate_cs_cores(const ReactionNetwork& rn, const SearchBounds& b = {});

// AutocatalyticCore iff every reaction's only reactant inside X' is its
// matched entity; ExtraCsCore otherwise. The input must be a CS-core.
CoreKind classify_cs_core(const ReactionNetwork& rn, const ChildSelection& cs);

struct MembershipReport {
  bool semipositive = false;
  bool metzler = false;
  bool irreducible = false;
  bool metzler_part_irreducible = false;
  bool cs_core = false;
  bool autocatalytic_core = false;
};

// Independently computed region flags for an arbitrary child-selection.
MembershipReport membership_report(const ReactionNetwork& rn, const ChildSelection& cs,
                                   const SearchBounds& b = {});

struct HardnessReport {
  bool hard = true;                      // no extra cores in the reversible extension
  bool drainable_criterion_hard = true;  // no drainable circuit in the core graph
  bool complete = true;
  std::vector<CoreReport> extras;  // indices refer to `extension`
  ReactionNetwork extension;
  SubNetwork extension_sub;
};

// Autocatalytic cores of (X', R' u reversed R') other than (X', R') itself.
CoreList reversible_extension_cores(const ReactionNetwork& rn, const CoreReport& core,
                                    const SearchBounds& b = {});

HardnessReport hardness(const ReactionNetwork& rn, const CoreReport& core, const SearchBounds& b = {});
bool is_hard(const ReactionNetwork& rn, const CoreReport& core, const SearchBounds& b = {});

struct MasEntry {
  std::vector<int> reactions;  // R'
  std::vector<int> entities;   // X(R')
};

struct MasResult {
  std::vector<MasEntry> items;
  bool complete = true;
};

// Reaction sets minimal w.r.t. supporting an autocatalytic sub-RN, each
// reported with all participating entities X(R').
MasResult enumerate_mas(const ReactionNetwork& rn, const SearchBounds& b = {});

// Structure of a minimal spanning-fluffle witness for a unit-stoichiometry
// core: a single circuit, circuit plus one RM-chord, circuit plus an ear with
// interior vertices, or the two-circuit pattern sharing one matching edge.
UnitClass unit_stoich_classify(const ReactionNetwork& rn, const CoreReport& core);

struct DichotomyEvidence {
  std::vector<Circuit> circuits;  // one covering circuit, or two overlapping
};

// For unit-stoichiometry cores: one contributing circuit through every
// zero-diagonal entity, or two overlapping contributing circuits when the
// diagonal has no zeros.
DichotomyEvidence contributing_dichotomy_check(const ReactionNetwork& rn, const CoreReport& core);

// Drainable-circuit criterion used to cross-check hardness.
bool core_has_drainable_circuit(const ReactionNetwork& rn, const CoreReport& core);

// Structural invariants every autocatalytic core must satisfy (unique CS,
// Metzler with non-positive diagonal for size >= 2, irreducibility,
// determinant sign, characteristic-polynomial signs, induced fluffle,
// entity autonomy, verified witness). Returns violation descriptions.
std::vector<std::string> core_structural_issues(const ReactionNetwork& rn, const CoreReport& core);

std::string core_kind_str(CoreKind k);
std::string unit_class_str(UnitClass u);

}  // namespace autocore
