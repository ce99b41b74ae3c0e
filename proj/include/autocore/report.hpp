#pragma once

#include <json.hpp>

#include "autocore/cores.hpp"

namespace autocore {

using Json = nlohmann::ordered_json;

std::string input_digest(std::string_view bytes);  // fnv1a-64, hex

Json bounds_json(const SearchBounds& b);
Json core_report_json(const ReactionNetwork& rn, const CoreReport& rep);
Json mas_json(const ReactionNetwork& rn, const MasResult& mas);
Json membership_json(const MembershipReport& rep);
Json certificate_json(const SemipositivityCertificate& cert);
Json matrix_json(const RatMatrix& m);

// Document skeleton shared by all commands: schema version, input digest,
// bounds, then command-specific fields appended by the caller.
Json document_skeleton(const std::string& command, std::string_view input_bytes,
                       const ReactionNetwork& rn, const SearchBounds& b);

// Stable serialization: 2-space indent, LF line endings, trailing newline.
std::string emit_json(const Json& doc);

// DOT rendering of a bipartite subgraph: circles for entities, boxes for
// reactions. Vertices listed in `highlight` are drawn bold.
std::string emit_dot(const BipartiteSubgraph& g, const ReactionNetwork& rn,
                     const std::set<int>& highlight_entities = {},
                     const std::set<int>& highlight_reactions = {});

}  // namespace autocore
