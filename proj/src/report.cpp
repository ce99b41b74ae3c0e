#include "autocore/report.hpp"

namespace autocore {

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

Json bounds_json(const SearchBounds& b) {
  Json j;
  j["max_core_entities"] = b.max_core_entities;
  j["max_circuit_len"] = b.max_circuit_len ? Json(*b.max_circuit_len) : Json(nullptr);
  j["max_superposition_depth"] = b.max_superposition_depth;
  return j;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json core_report_json(const ReactionNetwork& rn, const CoreReport& rep) {
  Json j;
  j["entities"] = entity_names(rn, rep.sub.entities);
  j["reactions"] = reaction_names(rn, rep.sub.reactions);
  Json kappa;
  for (const auto& [x, r] : rep.cs.kappa) kappa[rn.entities[x]] = rn.reactions[r].name;
  j["kappa"] = kappa;
  j["kind"] = core_kind_str(rep.kind);
  Json witness = Json::array();
  for (const Rat& w : rep.witness) witness.push_back(rat_str(w));
  j["witness"] = witness;
  j["matrix"] = matrix_json(rep.matrix);
  j["det_sign"] = det_sign(rep.matrix);
  if (rep.hard) j["hard"] = *rep.hard;
  if (rep.unit_class) j["unit_class"] = unit_class_str(*rep.unit_class);
  return j;
}

Json mas_json(const ReactionNetwork& rn, const MasResult& mas) {
  Json arr = Json::array();
  for (const MasEntry& e : mas.items) {
    Json j;
    j["reactions"] = reaction_names(rn, e.reactions);
    j["entities"] = entity_names(rn, e.entities);
    arr.push_back(j);
  }
  return arr;
}

Json membership_json(const MembershipReport& rep) {
  Json j;
  j["semipositive"] = rep.semipositive;
  j["metzler"] = rep.metzler;
  j["irreducible"] = rep.irreducible;
  j["metzler_part_irreducible"] = rep.metzler_part_irreducible;
  j["cs_core"] = rep.cs_core;
  j["autocatalytic_core"] = rep.autocatalytic_core;
  return j;
}

Json certificate_json(const SemipositivityCertificate& cert) {
  Json j;
  j["semipositive"] = cert.semipositive;
  Json vec = Json::array();
  if (cert.semipositive) {
    for (const Rat& v : cert.witness) vec.push_back(rat_str(v));
    j["witness"] = vec;
  } else {
    for (const Rat& y : cert.refutation) vec.push_back(rat_str(y));
    j["refutation"] = vec;
  }
  return j;
}

Json document_skeleton(const std::string& command, std::string_view input_bytes,
                       const ReactionNetwork& rn, const SearchBounds& b) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  Json input;
  input["digest"] = input_digest(input_bytes);
  input["entities"] = rn.n_entities();
  input["reactions"] = rn.n_reactions();
  j["input"] = input;
  j["bounds"] = bounds_json(b);
  return j;
}

std::string emit_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_dot(const BipartiteSubgraph& g, const ReactionNetwork& rn,
                     const std::set<int>& highlight_entities,
                     const std::set<int>& highlight_reactions) {
  std::string out = "digraph koenig {\n";
  for (int x : g.entities) {
    out += "  \"" + rn.entities[x] + "\" [shape=circle";
    if (highlight_entities.count(x)) out += ", style=bold, color=red";
    out += "];\n";
  }
  for (int r : g.reactions) {
    out += "  \"" + rn.reactions[r].name + "\" [shape=box";
    if (highlight_reactions.count(r)) out += ", style=bold, color=red";
    out += "];\n";
  }
  for (const auto& [x, r] : g.mr)
    out += "  \"" + rn.entities[x] + "\" -> \"" + rn.reactions[r].name + "\";\n";
  for (const auto& [r, x] : g.rm)
    out += "  \"" + rn.reactions[r].name + "\" -> \"" + rn.entities[x] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace autocore
