#include "autocore/cores.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace autocore {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  bool expired() const { return at && Clock::now() > *at; }
};

Deadline make_deadline(const SearchBounds& b) {
  Deadline d;
  if (b.time_budget_ms) d.at = Clock::now() + std::chrono::milliseconds(*b.time_budget_ms);
  return d;
}

ChildSelection cs_from_matching(const std::map<int, int>& matching) {
  ChildSelection cs;
  std::vector<int> xs, rs;
  for (const auto& [x, r] : matching) {
    xs.push_back(x);
    rs.push_back(r);
  }
  cs.sub = make_sub(xs, rs);
  cs.kappa = matching;
  return cs;
}

// Fluffle-state search: unions of elementary circuits with one consistent MR
// matching, grown by vertex-adding overlaps. Visits every fluffle subgraph of
// the Koenig graph within bounds, keyed by matching.
struct StateSearch {
  const ReactionNetwork& rn;
  const KoenigGraph& k;
  const SearchBounds& bounds;
  bool metzler_only;
  bool complete = true;
  std::map<std::map<int, int>, int> seen;  // matching -> depth
  std::vector<std::map<int, int>> states;

  void run() {
    BipartiteSubgraph full = full_graph(k);
    std::optional<int> cap = bounds.max_circuit_len;
    std::vector<Circuit> pool = elementary_circuits(full, cap);
    if (cap && *cap < full.n_vertices()) complete = false;
    if (metzler_only) {
      std::vector<Circuit> keep;
      for (const Circuit& c : pool)
        if (is_metzler_circuit(c, k)) keep.push_back(c);
      pool = std::move(keep);
    }

    Deadline deadline = make_deadline(bounds);
    std::deque<std::map<int, int>> queue;
    auto push = [&](std::map<int, int> matching, int depth) {
      if (int(matching.size()) > bounds.max_core_entities) {
        complete = false;
        return;
      }
      if (depth > bounds.max_superposition_depth) {
        complete = false;
        return;
      }
      auto it = seen.find(matching);
      if (it != seen.end()) return;
      seen[matching] = depth;
      states.push_back(matching);
      queue.push_back(std::move(matching));
    };

    for (const Circuit& c : pool) push(c.matching(), 1);

    while (!queue.empty()) {
      if (deadline.expired()) {
        complete = false;
        break;
      }
      std::map<int, int> cur = queue.front();
      queue.pop_front();
      int depth = seen[cur];
      for (const Circuit& c : pool) {
        bool consistent = true, shares = false, grows = false;
        for (const auto& [x, r] : c.matching()) {
          auto it = cur.find(x);
          if (it == cur.end())
            grows = true;
          else if (it->second != r) {
            consistent = false;
            break;
          } else {
            shares = true;
          }
        }
        if (!consistent || !shares || !grows) continue;
        std::map<int, int> next = cur;
        for (const auto& [x, r] : c.matching()) next[x] = r;
        push(std::move(next), depth + 1);
      }
    }
  }
};

bool matching_has_mr_chord(const std::map<int, int>& matching, const KoenigGraph& k) {
  std::set<int> xs, rs;
  for (const auto& [x, r] : matching) {
    xs.insert(x);
    rs.insert(r);
  }
  for (const auto& [x, r] : k.mr) {
    if (!xs.count(x) || !rs.count(r)) continue;
    auto it = matching.find(x);
    if (it == matching.end() || it->second != r) return true;
  }
  return false;
}

std::vector<std::string> sorted_names(const ReactionNetwork& rn, const std::vector<int>& ents) {
  return entity_names(rn, ents);
}

void sort_reports(const ReactionNetwork& rn, std::vector<CoreReport>& reports) {
  std::sort(reports.begin(), reports.end(), [&](const CoreReport& a, const CoreReport& b) {
    if (a.sub.entities.size() != b.sub.entities.size())
      return a.sub.entities.size() < b.sub.entities.size();
    auto an = sorted_names(rn, a.sub.entities), bn = sorted_names(rn, b.sub.entities);
    if (an != bn) return an < bn;
    auto ar = reaction_names(rn, a.sub.reactions), br = reaction_names(rn, b.sub.reactions);
    if (ar != br) return ar < br;
    return a.cs < b.cs;
  });
}

CoreReport make_report(const ReactionNetwork& rn, const ChildSelection& cs,
                       std::vector<Rat> witness, CoreKind kind) {
  CoreReport rep;
  rep.sub = cs.sub;
  rep.cs = cs;
  rep.kind = kind;
  rep.matrix = cs_matrix(cs, rn);
  rep.witness = std::move(witness);
  return rep;
}

}  // namespace

std::vector<CoreReport> single_reaction_cores(const ReactionNetwork& rn) {
  std::vector<CoreReport> out;
  for (int ri = 0; ri < rn.n_reactions(); ++ri) {
    const Reaction& r = rn.reactions[ri];
    for (const auto& [x, sm] : r.reactants) {
      if (r.s_plus(x) > sm) {
        ChildSelection cs;
        cs.sub = make_sub({x}, {ri});
        cs.kappa[x] = ri;
        out.push_back(make_report(rn, cs, {Rat(1)}, CoreKind::AutocatalyticCore));
      }
    }
  }
  sort_reports(rn, out);
  return out;
}

std::optional<std::vector<Rat>> is_autocatalytic_sub(const ReactionNetwork& rn, const SubNetwork& sub) {
  check_sub(rn, sub);
  if (!is_well_formed(rn, sub)) return std::nullopt;
  SemipositivityCertificate cert = is_semipositive(submatrix(net_stoich(rn), sub));
  if (!cert.semipositive) return std::nullopt;
  return cert.witness;
}

ChildSelection unique_cs_of_core(const ReactionNetwork& rn, const SubNetwork& sub) {
  check_sub(rn, sub);
  if (sub.entities.size() != sub.reactions.size())
    throw Error("unique_cs_of_core: sub-RN is not square");
  ChildSelection cs;
  cs.sub = sub;
  for (int ri : sub.reactions) {
    std::vector<int> reactants;
    for (int x : sub.entities)
      if (rn.reactions[ri].s_minus(x) > 0) reactants.push_back(x);
    if (reactants.size() != 1)
      throw Error("unique_cs_of_core: reaction '" + rn.reactions[ri].name + "' has " +
                  std::to_string(reactants.size()) + " reactants in X'; input is not a core");
    if (cs.kappa.count(reactants[0]))
      throw Error("unique_cs_of_core: entity consumed by two reactions; input is not a core");
    cs.kappa[reactants[0]] = ri;
  }
  if (cs.kappa.size() != sub.entities.size())
    throw Error("unique_cs_of_core: some entity is not a reactant; input is not a core");
  return cs;
}

CoreList enumerate_autocatalytic_cores(const ReactionNetwork& rn, const SearchBounds& b) {
  KoenigGraph k = build_koenig(rn);
  StateSearch search{rn, k, b, /*metzler_only=*/true};
  search.run();

  std::map<SubNetwork, CoreReport> candidates;
  for (const CoreReport& rep : single_reaction_cores(rn)) candidates.emplace(rep.sub, rep);

  for (const std::map<int, int>& matching : search.states) {
    if (matching_has_mr_chord(matching, k)) continue;  // not an induced fluffle, nor any superstate
    ChildSelection cs = cs_from_matching(matching);
    if (candidates.count(cs.sub)) continue;
    RatMatrix m = cs_matrix(cs, rn);
    // Weakly induced circuits carry exactly one off-diagonal cycle in S[kappa];
    // the determinant sign then decides autocatalyticity before any LP.
    if (matching.size() >= 2 && search.seen[matching] == 1) {
      int n = m.rows();
      std::vector<int> nxt(n, -1);
      bool cyclic = true;
      for (int j = 0; j < n && cyclic; ++j) {
        int cnt = 0;
        for (int i = 0; i < n; ++i) {
          if (i == j || m.at(i, j) == 0) continue;
          nxt[j] = i;
          ++cnt;
        }
        cyclic = (cnt == 1);
      }
      if (cyclic) {
        int v = 0, steps = 0;
        do {
          v = nxt[v];
          ++steps;
        } while (v != 0 && steps <= n);
        cyclic = (steps == n);
      }
      if (cyclic) {
        int ds = det_sign(m);
        if (((n % 2 == 1) ? ds : -ds) <= 0) continue;
      }
    }
    SemipositivityCertificate cert = is_semipositive(m);
    if (!cert.semipositive) continue;
    candidates.emplace(cs.sub, make_report(rn, cs, cert.witness, CoreKind::AutocatalyticCore));
  }

  CoreList out;
  out.complete = search.complete;
  for (const auto& [sub, rep] : candidates) {
    bool minimal = true;
    for (const auto& [other, orep] : candidates) {
      if (other == sub) continue;
      if (sub.contains(other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.items.push_back(rep);
  }
  sort_reports(rn, out.items);
  return out;
}

CoreList enumerate_cs_cores(const ReactionNetwork& rn, const SearchBounds& b) {
  KoenigGraph k = build_koenig(rn);
  StateSearch search{rn, k, b, /*metzler_only=*/false};
  search.run();

  std::map<std::map<int, int>, CoreReport> candidates;
  for (const std::map<int, int>& matching : search.states) {
    ChildSelection cs = cs_from_matching(matching);
    RatMatrix m = cs_matrix(cs, rn);
    SemipositivityCertificate cert = is_semipositive(m);
    if (!cert.semipositive) continue;
    candidates.emplace(matching, make_report(rn, cs, cert.witness, CoreKind::AutocatalyticCore));
  }

  CoreList out;
  out.complete = search.complete;
  for (auto& [matching, rep] : candidates) {
    bool minimal = true;
    for (const auto& [other, orep] : candidates) {
      if (other == matching || other.size() >= matching.size()) continue;
      if (rep.cs.restricts_to(orep.cs)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    rep.kind = classify_cs_core(rn, rep.cs);
    out.items.push_back(rep);
  }
  sort_reports(rn, out.items);
  return out;
}

CoreKind classify_cs_core(const ReactionNetwork& rn, const ChildSelection& cs) {
  check_child_selection(rn, cs);
  for (int ri : cs.sub.reactions) {
    for (int x : cs.sub.entities) {
      if (rn.reactions[ri].s_minus(x) <= 0) continue;
      if (cs.kappa.at(x) != ri) return CoreKind::ExtraCsCore;
    }
  }
  return CoreKind::AutocatalyticCore;
}

MembershipReport membership_report(const ReactionNetwork& rn, const ChildSelection& cs,
                                   const SearchBounds& b) {
  check_child_selection(rn, cs);
  MembershipReport rep;
  RatMatrix m = cs_matrix(cs, rn);
  rep.semipositive = is_semipositive(m).semipositive;
  rep.metzler = is_metzler(m);
  rep.irreducible = is_irreducible(m);
  rep.metzler_part_irreducible = is_irreducible(metzler_part(m));

  bool autocat = rep.semipositive && is_well_formed(rn, cs.sub);
  if (autocat) {
    int n = int(cs.sub.entities.size());
    if (n > 20) throw BoundsError("membership_report: sub-CS scan refused beyond 20 entities");
    bool has_aut_sub = false;
    for (unsigned mask = 1; mask + 1 < (1u << n) && !has_aut_sub; ++mask) {
      ChildSelection sub_cs;
      std::vector<int> xs, rs;
      for (int i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        int x = cs.sub.entities[i];
        xs.push_back(x);
        rs.push_back(cs.kappa.at(x));
        sub_cs.kappa[x] = cs.kappa.at(x);
      }
      sub_cs.sub = make_sub(xs, rs);
      if (!is_well_formed(rn, sub_cs.sub)) continue;
      RatMatrix sm = cs_matrix(sub_cs, rn);
      bool row_ok = true;
      for (int i = 0; i < sm.rows() && row_ok; ++i) {
        bool pos = false;
        for (int j = 0; j < sm.cols(); ++j)
          if (sm.at(i, j) > 0) pos = true;
        row_ok = pos;
      }
      if (!row_ok) continue;  // a row without positive entry can never be covered
      if (is_semipositive(sm).semipositive) has_aut_sub = true;
    }
    rep.cs_core = !has_aut_sub;
  }

  if (autocat) {
    ReactionNetwork restricted = restrict_network(rn, cs.sub);
    CoreList cores = enumerate_autocatalytic_cores(restricted, b);
    rep.autocatalytic_core =
        cores.items.size() == 1 &&
        cores.items[0].sub == full_sub(restricted);
  }
  return rep;
}

CoreList reversible_extension_cores(const ReactionNetwork& rn, const CoreReport& core,
                                    const SearchBounds& b) {
  auto [ext, ext_sub] = reversible_extension(rn, core.sub);
  ReactionNetwork restricted = restrict_network(ext, ext_sub);
  CoreList inner = enumerate_autocatalytic_cores(restricted, b);

  int m = int(core.sub.reactions.size());
  CoreList out;
  out.complete = inner.complete;
  for (CoreReport& rep : inner.items) {
    std::vector<int> original_rxns(m);
    for (int i = 0; i < m; ++i) original_rxns[i] = i;
    if (rep.sub.reactions == original_rxns &&
        int(rep.sub.entities.size()) == int(core.sub.entities.size()))
      continue;  // the input core itself
    out.items.push_back(std::move(rep));
  }
  return out;
}

bool core_has_drainable_circuit(const ReactionNetwork& rn, const CoreReport& core) {
  KoenigGraph k = build_koenig(rn);
  BipartiteSubgraph g = koenig_of_cs(core.cs, k);
  for (const Circuit& c : elementary_circuits(g, std::nullopt))
    if (circuit_class(c, rn).kind == CircuitKind::Drainable) return true;
  return false;
}

HardnessReport hardness(const ReactionNetwork& rn, const CoreReport& core, const SearchBounds& b) {
  HardnessReport rep;
  auto [ext, ext_sub] = reversible_extension(rn, core.sub);
  rep.extension = ext;
  rep.extension_sub = ext_sub;
  CoreList extras = reversible_extension_cores(rn, core, b);
  rep.extras = extras.items;
  rep.complete = extras.complete;
  rep.hard = rep.extras.empty();
  rep.drainable_criterion_hard = !core_has_drainable_circuit(rn, core);
  return rep;
}

bool is_hard(const ReactionNetwork& rn, const CoreReport& core, const SearchBounds& b) {
  return hardness(rn, core, b).hard;
}

MasResult enumerate_mas(const ReactionNetwork& rn, const SearchBounds& b) {
  CoreList cores = enumerate_autocatalytic_cores(rn, b);
  MasResult out;
  out.complete = cores.complete;
  std::set<std::vector<int>> reaction_sets;
  for (const CoreReport& rep : cores.items) reaction_sets.insert(rep.sub.reactions);
  for (const std::vector<int>& rs : reaction_sets) {
    bool minimal = true;
    for (const std::vector<int>& other : reaction_sets) {
      if (other == rs) continue;
      if (std::includes(rs.begin(), rs.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.items.push_back({rs, participating_entities(rn, rs)});
  }
  std::sort(out.items.begin(), out.items.end(), [](const MasEntry& a, const MasEntry& b2) {
    return a.reactions < b2.reactions;
  });
  return out;
}

namespace {

// D = edges of c2 missing from c1, expected to be a single ear: a path from a
// reaction vertex of c1 through fresh vertices to an entity vertex of c1.
struct EarShape {
  bool ok = false;
  int start_reaction = -1;
  int end_entity = -1;
  int interior = 0;
};

EarShape ear_shape(const Circuit& c1, const Circuit& c2) {
  EarShape shape;
  std::set<std::pair<int, int>> e1;
  auto add_edges = [](const Circuit& c, std::set<std::pair<int, int>>& out) {
    auto verts = c.encoded_verts();
    size_t n = verts.size();
    for (size_t i = 0; i < n; ++i) out.insert({verts[i], verts[(i + 1) % n]});
  };
  add_edges(c1, e1);
  std::set<std::pair<int, int>> d;
  {
    std::set<std::pair<int, int>> e2;
    add_edges(c2, e2);
    for (const auto& e : e2)
      if (!e1.count(e)) d.insert(e);
  }
  if (d.empty()) return shape;

  std::set<int> v1(c1.encoded_verts().begin(), c1.encoded_verts().end());
  std::map<int, int> out_deg, in_deg;
  std::map<int, int> next;
  for (const auto& [a, bb] : d) {
    if (++out_deg[a] > 1) return shape;
    if (++in_deg[bb] > 1) return shape;
    next[a] = bb;
  }
  int start = -1, end = -1;
  std::set<int> dverts;
  for (const auto& [a, bb] : d) {
    dverts.insert(a);
    dverts.insert(bb);
  }
  for (int v : dverts) {
    if (out_deg[v] == 1 && in_deg[v] == 0) {
      if (start != -1) return shape;
      start = v;
    }
    if (in_deg[v] == 1 && out_deg[v] == 0) {
      if (end != -1) return shape;
      end = v;
    }
  }
  if (start < 0 || end < 0) return shape;
  if (!is_reaction_vert(start) || is_reaction_vert(end)) return shape;
  if (!v1.count(start) || !v1.count(end)) return shape;

  // Walk and verify a single simple path with fresh interior.
  int v = start;
  size_t edges_walked = 0;
  int interior = 0;
  while (v != end) {
    auto it = next.find(v);
    if (it == next.end()) return shape;
    v = it->second;
    ++edges_walked;
    if (v != end) {
      if (v1.count(v)) return shape;  // interior must be fresh
      ++interior;
    }
  }
  if (edges_walked != d.size()) return shape;
  shape.ok = true;
  shape.start_reaction = vert_id(start);
  shape.end_entity = vert_id(end);
  shape.interior = interior;
  return shape;
}

}  // namespace

UnitClass unit_stoich_classify(const ReactionNetwork& rn, const CoreReport& core) {
  if (!has_unit_stoichiometry(rn, core.sub))
    throw Error("unit_stoich_classify requires unit stoichiometry");
  KoenigGraph k = build_koenig(rn);
  BipartiteSubgraph g = koenig_of_cs(core.cs, k);
  std::vector<Circuit> circuits = elementary_circuits(g, std::nullopt);

  auto spanning = [&](const Circuit& c) {
    std::set<int> xs, rs;
    for (const auto& [x, r] : c.steps) {
      xs.insert(x);
      rs.insert(r);
    }
    return int(xs.size()) == int(core.sub.entities.size()) &&
           int(rs.size()) == int(core.sub.reactions.size());
  };
  auto part_semipositive = [&](const FluffleCandidate& f) {
    return is_semipositive(fluffle_part_matrix(f, core.cs, rn)).semipositive;
  };

  for (const Circuit& c : circuits)
    if (spanning(c) && part_semipositive(circuit_fluffle(c))) return UnitClass::CircuitOnly;

  for (const Circuit& c : circuits) {
    if (!spanning(c)) continue;
    FluffleCandidate base = circuit_fluffle(c);
    for (const auto& e : g.rm) {
      if (base.graph.rm.count(e)) continue;
      FluffleCandidate f = base;
      f.graph.rm.insert(e);
      if (part_semipositive(f)) return UnitClass::CircuitPlusChord;
    }
  }

  // Circuit plus one interior ear; the ear closing onto its own start's
  // matched entity forms the two-circuit pattern instead.
  bool type3_found = false;
  for (const Circuit& c1 : circuits) {
    for (const Circuit& c2 : circuits) {
      if (c1 == c2) continue;
      FluffleCandidate u = superpose({circuit_fluffle(c1), circuit_fluffle(c2)});
      if (int(u.graph.entities.size()) != int(core.sub.entities.size()) ||
          int(u.graph.reactions.size()) != int(core.sub.reactions.size()))
        continue;
      EarShape shape = ear_shape(c1, c2);
      if (!shape.ok || shape.interior == 0) continue;
      if (!part_semipositive(u)) continue;
      if (core.cs.kappa.at(shape.end_entity) != shape.start_reaction)
        return UnitClass::CircuitPlusEar;
      type3_found = true;
    }
  }
  if (type3_found) return UnitClass::TypeIIIDoubleCircuit;
  throw Error("no spanning fluffle pattern found for a unit-stoichiometry core");
}

DichotomyEvidence contributing_dichotomy_check(const ReactionNetwork& rn, const CoreReport& core) {
  if (!has_unit_stoichiometry(rn, core.sub))
    throw Error("contributing_dichotomy_check requires unit stoichiometry");
  KoenigGraph k = build_koenig(rn);
  BipartiteSubgraph g = koenig_of_cs(core.cs, k);
  std::vector<Circuit> circuits = elementary_circuits(g, std::nullopt);

  RatMatrix m = core.matrix;
  std::vector<int> zero_diag;
  for (int i = 0; i < m.rows(); ++i)
    if (m.at(i, i) == 0) zero_diag.push_back(core.sub.entities[i]);

  std::vector<Circuit> contributing;
  for (const Circuit& c : circuits)
    if (is_contributing(c, core.cs, rn)) contributing.push_back(c);

  if (!zero_diag.empty()) {
    for (const Circuit& c : contributing) {
      bool covers = true;
      for (int z : zero_diag)
        if (!c.has_vertex_entity(z)) { covers = false; break; }
      if (covers) return {{c}};
    }
    throw Error("dichotomy violated: no contributing circuit covers the zero-diagonal entities");
  }
  for (size_t i = 0; i < contributing.size(); ++i)
    for (size_t j = i + 1; j < contributing.size(); ++j) {
      auto vi = contributing[i].encoded_verts();
      std::set<int> si(vi.begin(), vi.end());
      for (int v : contributing[j].encoded_verts())
        if (si.count(v)) return {{contributing[i], contributing[j]}};
    }
  throw Error("dichotomy violated: no two overlapping contributing circuits");
}

std::vector<std::string> core_structural_issues(const ReactionNetwork& rn, const CoreReport& core) {
  std::vector<std::string> issues;
  auto flag = [&](bool ok, const std::string& what) {
    if (!ok) issues.push_back(what);
  };
  const SubNetwork& sub = core.sub;
  int n = int(sub.entities.size());
  flag(sub.entities.size() == sub.reactions.size(), "sub-RN not square");

  RatMatrix s = net_stoich(rn);
  RatMatrix m = core.matrix;

  // Witness soundness against the CS matrix.
  flag(int(core.witness.size()) == n, "witness dimension mismatch");
  if (int(core.witness.size()) == n) {
    bool pos = true;
    for (const Rat& w : core.witness) pos = pos && w > 0;
    flag(pos, "witness not strictly positive");
    for (const Rat& p : m.mul(core.witness))
      if (p <= 0) {
        issues.push_back("witness product not strictly positive");
        break;
      }
  }

  // Unique child-selection.
  try {
    ChildSelection cs = unique_cs_of_core(rn, sub);
    flag(cs.kappa == core.cs.kappa, "recovered child-selection differs");
  } catch (const Error& e) {
    issues.push_back(std::string("unique CS: ") + e.what());
  }

  if (n >= 2) {
    flag(is_metzler(m), "CS matrix not Metzler");
    for (int i = 0; i < n; ++i)
      flag(m.at(i, i) <= 0, "positive diagonal entry in a core of size >= 2");
    // Row conditions: net production somewhere, net-nonpositive consumption
    // somewhere, and a reaction with this entity as sole reactant.
    for (int i = 0; i < n; ++i) {
      int x = sub.entities[i];
      bool prod = false, cons = false, sole = false;
      for (int ri : sub.reactions) {
        const Reaction& r = rn.reactions[ri];
        if (r.s_plus(x) - r.s_minus(x) > 0) prod = true;
        if (r.s_minus(x) > 0 && r.s_plus(x) - r.s_minus(x) <= 0) cons = true;
        bool only = r.s_minus(x) > 0;
        for (int y : sub.entities)
          if (y != x && r.s_minus(y) > 0) only = false;
        if (only) sole = true;
      }
      flag(prod, "entity without net-producing reaction");
      flag(cons, "entity without net-consuming reactant reaction");
      flag(sole, "entity never a sole reactant");
    }
  }

  flag(is_irreducible(m), "CS matrix reducible");
  int ds = det_sign(m);
  flag(ds == ((n % 2 == 1) ? 1 : -1), "determinant sign differs from (-1)^(k-1)");

  std::vector<Rat> poly = char_poly(m);
  for (int i = 0; i < n; ++i)
    flag(poly[i] >= 0, "unexpected negative interior characteristic coefficient");
  flag(poly[n] < 0, "constant characteristic coefficient not negative");

  // Every column has a positive entry.
  RatMatrix restricted = submatrix(s, sub);
  for (int j = 0; j < restricted.cols(); ++j) {
    bool pos = false;
    for (int i = 0; i < restricted.rows(); ++i)
      if (restricted.at(i, j) > 0) pos = true;
    flag(pos, "column without positive entry");
  }

  // K(kappa) is the induced subgraph and a fluffle.
  KoenigGraph k = build_koenig(rn);
  BipartiteSubgraph g = koenig_of_cs(core.cs, k);
  flag(g == induced_subgraph(k, sub.entities, sub.reactions), "K(kappa) not induced");
  flag(is_fluffle(g), "K(kappa) not a fluffle");

  // No reaction together with its inverse.
  for (size_t i = 0; i < sub.reactions.size(); ++i)
    for (size_t j = i + 1; j < sub.reactions.size(); ++j) {
      const Reaction& a = rn.reactions[sub.reactions[i]];
      const Reaction& b = rn.reactions[sub.reactions[j]];
      flag(!(a.reactants == b.products && a.products == b.reactants),
           "core contains a reaction and its inverse");
    }
  return issues;
}

std::string core_kind_str(CoreKind k) {
  return k == CoreKind::AutocatalyticCore ? "core" : "extra-cs-core";
}

std::string unit_class_str(UnitClass u) {
  switch (u) {
    case UnitClass::CircuitOnly: return "circuit";
    case UnitClass::CircuitPlusChord: return "circuit+chord";
    case UnitClass::CircuitPlusEar: return "circuit+ear";
    case UnitClass::TypeIIIDoubleCircuit: return "double-circuit";
  }
  return "?";
}

}  // namespace autocore
