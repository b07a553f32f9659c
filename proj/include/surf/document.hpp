#pragma once

#include <string>

#include <json.hpp>

#include "surf/cover.hpp"
#include "surf/morphism.hpp"
#include "surf/process.hpp"
#include "surf/reaction.hpp"

namespace surf {

using Json = nlohmann::json; // sorted keys; output is byte-deterministic

inline constexpr int kFormatVersion = 1;

/// Versioned document wrapper: { format_version, kind, payload }.
struct DocumentEnvelope {
    int format_version = kFormatVersion;
    std::string kind; // background | system | morphism | process | scheme | cover-instance
    Json payload;
};

DocumentEnvelope parse_document(const std::string& text);
std::string emit_document(const DocumentEnvelope& doc);

// payload (de)serialization; SchemaError carries a JSON-pointer-ish path
Json background_to_json(const Background& b);
Background background_from_json(const Json& payload);

Json subobject_to_json(const Subobject& s);
Subobject subobject_from_json(const Background& b, const Json& j);

Json system_to_json(const ReactionSystem& sys);
ReactionSystem system_from_json(const Json& payload);

Json morphism_to_json(const BackgroundMorphism& f);
BackgroundMorphism morphism_from_json(const Json& payload);

Json scheme_to_json(const Scheme& scm);
Scheme scheme_from_json(const Json& payload);

/// Process input: start subobject plus either an explicit context list
/// or a named policy ("constant-empty" with a step count).
struct ProcessInput {
    Subobject start;
    std::vector<Subobject> gamma;
};
ProcessInput process_from_json(const Background& b, const Json& payload);

Json trace_to_json(const Background& b, const ProcessTrace& trace);

Json cover_instance_to_json(const CoverInstance& inst);
CoverInstance cover_instance_from_json(const Json& payload);

// file helpers
DocumentEnvelope load_document(const std::string& path);
void save_document(const std::string& path, const DocumentEnvelope& doc);

} // namespace surf
