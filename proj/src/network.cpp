#include "autocore/network.hpp"

#include <algorithm>

namespace autocore {

Rat Reaction::s_minus(int entity) const {
  auto it = reactants.find(entity);
  return it == reactants.end() ? Rat(0) : it->second;
}

Rat Reaction::s_plus(int entity) const {
  auto it = products.find(entity);
  return it == products.end() ? Rat(0) : it->second;
}

int ReactionNetwork::entity_index(const std::string& name) const {
  for (int i = 0; i < n_entities(); ++i)
    if (entities[i] == name) return i;
  return -1;
}

int ReactionNetwork::reaction_index(const std::string& name) const {
  for (int i = 0; i < n_reactions(); ++i)
    if (reactions[i].name == name) return i;
  return -1;
}

void ReactionNetwork::validate() const {
  for (const Reaction& r : reactions) {
    for (const auto& side : {r.reactants, r.products}) {
      for (const auto& [x, c] : side) {
        if (x < 0 || x >= n_entities()) throw Error("reaction '" + r.name + "' references unknown entity");
        if (c <= 0) throw Error("reaction '" + r.name + "' stores a non-positive coefficient");
      }
    }
  }
}

bool SubNetwork::operator<(const SubNetwork& o) const {
  if (entities != o.entities) return entities < o.entities;
  return reactions < o.reactions;
}

bool SubNetwork::contains(const SubNetwork& o) const {
  return std::includes(entities.begin(), entities.end(), o.entities.begin(), o.entities.end()) &&
         std::includes(reactions.begin(), reactions.end(), o.reactions.begin(), o.reactions.end());
}

SubNetwork make_sub(std::vector<int> entities, std::vector<int> reactions) {
  std::sort(entities.begin(), entities.end());
  entities.erase(std::unique(entities.begin(), entities.end()), entities.end());
  std::sort(reactions.begin(), reactions.end());
  reactions.erase(std::unique(reactions.begin(), reactions.end()), reactions.end());
  return SubNetwork{std::move(entities), std::move(reactions)};
}

SubNetwork full_sub(const ReactionNetwork& rn) {
  SubNetwork s;
  s.entities.resize(rn.n_entities());
  s.reactions.resize(rn.n_reactions());
  for (int i = 0; i < rn.n_entities(); ++i) s.entities[i] = i;
  for (int i = 0; i < rn.n_reactions(); ++i) s.reactions[i] = i;
  return s;
}

void check_sub(const ReactionNetwork& rn, const SubNetwork& sub) {
  for (int x : sub.entities)
    if (x < 0 || x >= rn.n_entities()) throw Error("subnetwork entity index out of range");
  for (int r : sub.reactions)
    if (r < 0 || r >= rn.n_reactions()) throw Error("subnetwork reaction index out of range");
  if (!std::is_sorted(sub.entities.begin(), sub.entities.end()) ||
      !std::is_sorted(sub.reactions.begin(), sub.reactions.end()))
    throw Error("subnetwork index lists must be sorted");
}

bool ChildSelection::operator<(const ChildSelection& o) const {
  if (!(sub == o.sub)) return sub < o.sub;
  return kappa < o.kappa;
}

bool ChildSelection::restricts_to(const ChildSelection& tilde) const {
  for (const auto& [x, r] : tilde.kappa) {
    auto it = kappa.find(x);
    if (it == kappa.end() || it->second != r) return false;
  }
  return true;
}

bool is_child_selection(const ReactionNetwork& rn, const ChildSelection& cs) {
  if (cs.kappa.size() != cs.sub.entities.size()) return false;
  if (cs.sub.entities.size() != cs.sub.reactions.size()) return false;
  std::set<int> hit;
  for (const auto& [x, r] : cs.kappa) {
    if (!std::binary_search(cs.sub.entities.begin(), cs.sub.entities.end(), x)) return false;
    if (!std::binary_search(cs.sub.reactions.begin(), cs.sub.reactions.end(), r)) return false;
    if (!hit.insert(r).second) return false;  // must be injective
    if (rn.reactions[r].s_minus(x) <= 0) return false;
  }
  return true;
}

void check_child_selection(const ReactionNetwork& rn, const ChildSelection& cs) {
  check_sub(rn, cs.sub);
  if (!is_child_selection(rn, cs)) throw Error("invalid child-selection");
}

RatMatrix net_stoich(const ReactionNetwork& rn) {
  RatMatrix m(rn.n_entities(), rn.n_reactions());
  for (int r = 0; r < rn.n_reactions(); ++r) {
    for (const auto& [x, c] : rn.reactions[r].products) m.at(x, r) += c;
    for (const auto& [x, c] : rn.reactions[r].reactants) m.at(x, r) -= c;
  }
  return m;
}

RatMatrix submatrix(const RatMatrix& m, const SubNetwork& sub) {
  return m.select(sub.entities, sub.reactions);
}

bool is_well_formed(const ReactionNetwork& rn, const SubNetwork& sub) {
  for (int ri : sub.reactions) {
    const Reaction& r = rn.reactions[ri];
    bool has_reactant = false, has_product = false;
    for (int x : sub.entities) {
      if (r.s_minus(x) > 0) has_reactant = true;
      if (r.s_plus(x) > 0) has_product = true;
    }
    if (!has_reactant || !has_product) return false;
  }
  return true;
}

std::set<int> catalysts_of(const Reaction& r) {
  std::set<int> out;
  for (const auto& [x, c] : r.reactants)
    if (r.s_plus(x) > 0) out.insert(x);
  return out;
}

std::pair<std::set<int>, std::set<int>> food_waste(const ReactionNetwork& rn, const SubNetwork& sub) {
  std::set<int> inside(sub.entities.begin(), sub.entities.end());
  std::set<int> food, waste;
  for (int ri : sub.reactions) {
    for (const auto& [x, c] : rn.reactions[ri].reactants)
      if (!inside.count(x)) food.insert(x);
    for (const auto& [x, c] : rn.reactions[ri].products)
      if (!inside.count(x)) waste.insert(x);
  }
  return {food, waste};
}

Reaction reverse_reaction(const Reaction& r) {
  Reaction rev;
  rev.name = r.name + "_rev";
  rev.reactants = r.products;
  rev.products = r.reactants;
  return rev;
}

std::pair<ReactionNetwork, SubNetwork> reversible_extension(const ReactionNetwork& rn, const SubNetwork& sub) {
  check_sub(rn, sub);
  ReactionNetwork ext;
  ext.entities = rn.entities;
  for (int ri : sub.reactions) ext.reactions.push_back(rn.reactions[ri]);
  for (int ri : sub.reactions) ext.reactions.push_back(reverse_reaction(rn.reactions[ri]));
  SubNetwork cover;
  cover.entities = sub.entities;
  cover.reactions.resize(ext.reactions.size());
  for (size_t i = 0; i < ext.reactions.size(); ++i) cover.reactions[i] = int(i);
  return {ext, cover};
}

ReactionNetwork restrict_network(const ReactionNetwork& rn, const SubNetwork& sub) {
  check_sub(rn, sub);
  ReactionNetwork out;
  std::map<int, int> remap;
  for (int x : sub.entities) {
    remap[x] = out.n_entities();
    out.entities.push_back(rn.entities[x]);
  }
  for (int ri : sub.reactions) {
    const Reaction& r = rn.reactions[ri];
    Reaction nr;
    nr.name = r.name;
    for (const auto& [x, c] : r.reactants)
      if (auto it = remap.find(x); it != remap.end()) nr.reactants[it->second] = c;
    for (const auto& [x, c] : r.products)
      if (auto it = remap.find(x); it != remap.end()) nr.products[it->second] = c;
    out.reactions.push_back(std::move(nr));
  }
  return out;
}

std::vector<int> participating_entities(const ReactionNetwork& rn, const std::vector<int>& reactions) {
  std::set<int> xs;
  for (int ri : reactions) {
    for (const auto& [x, c] : rn.reactions[ri].reactants) xs.insert(x);
    for (const auto& [x, c] : rn.reactions[ri].products) xs.insert(x);
  }
  return std::vector<int>(xs.begin(), xs.end());
}

bool has_unit_stoichiometry(const ReactionNetwork& rn, const SubNetwork& sub) {
  std::set<int> inside(sub.entities.begin(), sub.entities.end());
  for (int ri : sub.reactions) {
    const Reaction& r = rn.reactions[ri];
    for (const auto& side : {r.reactants, r.products})
      for (const auto& [x, c] : side)
        if (inside.count(x) && c != 1) return false;
  }
  return true;
}

std::vector<std::string> entity_names(const ReactionNetwork& rn, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(rn.entities[i]);
  return out;
}

std::vector<std::string> reaction_names(const ReactionNetwork& rn, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(rn.reactions[i].name);
  return out;
}

}  // namespace autocore
