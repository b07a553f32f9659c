#include "surf/document.hpp"

#include <fstream>
#include <sstream>

#include "surf/error.hpp"

namespace surf {

namespace {

const Json& field(const Json& j, const std::string& name, const std::string& path) {
    if (!j.is_object() || !j.contains(name))
        throw Error(ErrorCode::SchemaError, "missing field '" + name + "' at " + path,
                    path + "/" + name);
    return j.at(name);
}

std::string string_field(const Json& j, const std::string& name, const std::string& path) {
    const Json& v = field(j, name, path);
    if (!v.is_string())
        throw Error(ErrorCode::SchemaError, "field '" + name + "' at " + path + " must be a string",
                    path + "/" + name);
    return v.get<std::string>();
}

KeySet keyset_field(const Json& j, const std::string& name, const std::string& path) {
    const Json& v = field(j, name, path);
    if (!v.is_array())
        throw Error(ErrorCode::SchemaError, "field '" + name + "' at " + path + " must be an array",
                    path + "/" + name);
    KeySet keys;
    for (const auto& item : v) keys.push_back(item.get<std::string>());
    return keys;
}

} // namespace

DocumentEnvelope parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw Error(ErrorCode::SyntaxError, err.what());
    }
    DocumentEnvelope doc;
    const Json& version = field(j, "format_version", "/");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
        throw Error(ErrorCode::VersionUnsupported,
                    "format_version " + version.dump() + ", expected " +
                        std::to_string(kFormatVersion));
    doc.format_version = version.get<int>();
    doc.kind = string_field(j, "kind", "/");
    doc.payload = field(j, "payload", "/");
    return doc;
}

std::string emit_document(const DocumentEnvelope& doc) {
    Json j;
    j["format_version"] = doc.format_version;
    j["kind"] = doc.kind;
    j["payload"] = doc.payload;
    return j.dump(2) + "\n";
}

Json scheme_to_json(const Scheme& scm) {
    Json j;
    j["name"] = scm.name;
    j["components"] = Json::array();
    for (const auto& c : scm.components) {
        Json jc;
        jc["name"] = c.name;
        jc["fixed"] = c.fixed;
        if (c.fixed) jc["fixed_set"] = c.fixed_set;
        j["components"].push_back(jc);
    }
    j["arrows"] = Json::array();
    for (const auto& a : scm.arrows)
        j["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    return j;
}

Scheme scheme_from_json(const Json& payload) {
    Scheme scm;
    scm.name = string_field(payload, "name", "/scheme");
    for (const auto& jc : field(payload, "components", "/scheme")) {
        SchemeComponent c;
        c.name = string_field(jc, "name", "/scheme/components");
        c.fixed = jc.value("fixed", false);
        if (c.fixed) c.fixed_set = keyset_field(jc, "fixed_set", "/scheme/components");
        scm.components.push_back(std::move(c));
    }
    for (const auto& ja : field(payload, "arrows", "/scheme")) {
        scm.arrows.push_back({string_field(ja, "name", "/scheme/arrows"),
                              string_field(ja, "source", "/scheme/arrows"),
                              string_field(ja, "target", "/scheme/arrows")});
    }
    validate_scheme(scm);
    return scm;
}

Json background_to_json(const Background& b) {
    Json j;
    j["id"] = b.id;
    j["kind"] = to_string(b.kind);
    switch (b.kind) {
    case Kind::Set:
        j["elements"] = std::get<SetCarrier>(b.carrier).elements;
        break;
    case Kind::Graph: {
        const auto& c = std::get<GraphCarrier>(b.carrier);
        j["alphabet"] = KeySet(c.alphabet.begin(), c.alphabet.end());
        j["vertices"] = c.vertices;
        j["edges"] = Json::object();
        for (const auto& [id, e] : c.edges)
            j["edges"][id] = {{"source", e.source}, {"target", e.target}, {"label", e.label}};
        break;
    }
    case Kind::Hypergraph: {
        const auto& c = std::get<HypergraphCarrier>(b.carrier);
        j["alphabet"] = KeySet(c.alphabet.begin(), c.alphabet.end());
        j["vertices"] = c.vertices;
        j["edges"] = Json::object();
        for (const auto& [id, e] : c.edges)
            j["edges"][id] = {{"attachment", e.attachment}, {"label", e.label}};
        break;
    }
    case Kind::Poset: {
        const auto& c = std::get<PosetCarrier>(b.carrier);
        j["elements"] = c.elements;
        j["relation"] = Json::array();
        for (const auto& [a, bb] : c.relation) j["relation"].push_back(Json::array({a, bb}));
        break;
    }
    case Kind::Diagram: {
        const auto& c = std::get<DiagramCarrier>(b.carrier);
        j["scheme"] = scheme_to_json(c.scheme);
        j["sets"] = c.data.sets;
        j["maps"] = c.data.maps;
        break;
    }
    }
    return j;
}

Background background_from_json(const Json& payload) {
    const std::string id = string_field(payload, "id", "/background");
    const Kind kind = kind_from_string(string_field(payload, "kind", "/background"));
    switch (kind) {
    case Kind::Set:
        return construct_background(id, kind,
                                    SetCarrier{keyset_field(payload, "elements", "/background")});
    case Kind::Graph: {
        GraphCarrier c;
        KeySet alphabet = keyset_field(payload, "alphabet", "/background");
        c.alphabet.insert(alphabet.begin(), alphabet.end());
        c.vertices = keyset_field(payload, "vertices", "/background");
        for (const auto& [eid, je] : field(payload, "edges", "/background").items()) {
            const std::string path = "/background/edges/" + eid;
            c.edges[eid] = GraphEdge{string_field(je, "source", path),
                                     string_field(je, "target", path),
                                     string_field(je, "label", path)};
        }
        return construct_background(id, kind, std::move(c));
    }
    case Kind::Hypergraph: {
        HypergraphCarrier c;
        KeySet alphabet = keyset_field(payload, "alphabet", "/background");
        c.alphabet.insert(alphabet.begin(), alphabet.end());
        c.vertices = keyset_field(payload, "vertices", "/background");
        for (const auto& [eid, je] : field(payload, "edges", "/background").items()) {
            const std::string path = "/background/edges/" + eid;
            c.edges[eid] =
                Hyperedge{keyset_field(je, "attachment", path), string_field(je, "label", path)};
        }
        return construct_background(id, kind, std::move(c));
    }
    case Kind::Poset: {
        PosetCarrier c;
        c.elements = keyset_field(payload, "elements", "/background");
        for (const auto& jp : field(payload, "relation", "/background")) {
            if (!jp.is_array() || jp.size() != 2)
                throw Error(ErrorCode::SchemaError, "relation entries must be pairs",
                            "/background/relation");
            c.relation.insert({jp.at(0).get<std::string>(), jp.at(1).get<std::string>()});
        }
        return construct_background(id, kind, std::move(c));
    }
    case Kind::Diagram: {
        Scheme scm = scheme_from_json(field(payload, "scheme", "/background"));
        DiagramData data;
        for (const auto& [cname, js] : field(payload, "sets", "/background").items())
            data.sets[cname] = js.get<KeySet>();
        for (const auto& [aname, jm] : field(payload, "maps", "/background").items())
            data.maps[aname] = jm.get<std::map<std::string, std::string>>();
        return instantiate_diagram_universe(id, scm, data);
    }
    }
    throw Error(ErrorCode::SchemaError, "unreachable");
}

Json subobject_to_json(const Subobject& s) {
    Json j = Json::object();
    for (const auto& [cname, keys] : s.elements) j[cname] = keys;
    return j;
}

Subobject subobject_from_json(const Background& b, const Json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::SchemaError, "subobject must be an object of key lists");
    ElementMap raw;
    for (const auto& [cname, keys] : j.items()) raw[cname] = keys.get<KeySet>();
    return validate_subobject(b, raw);
}

Json system_to_json(const ReactionSystem& sys) {
    Json j;
    j["background"] = background_to_json(sys.background);
    j["reactions"] = Json::array();
    for (const auto& a : sys.reactions) {
        Json ja;
        ja["id"] = a.id;
        ja["reactant"] = subobject_to_json(a.reactant);
        if (a.uninhibited())
            ja["inhibitor"] = "-"; // the uninhibited shorthand
        else
            ja["inhibitor"] = {{"i", subobject_to_json(a.inhibitor)},
                               {"i0", subobject_to_json(a.inhibitor_core)}};
        ja["product"] = subobject_to_json(a.product);
        j["reactions"].push_back(std::move(ja));
    }
    return j;
}

ReactionSystem system_from_json(const Json& payload) {
    Background b = background_from_json(field(payload, "background", "/system"));
    std::vector<Reaction> reactions;
    for (const auto& ja : field(payload, "reactions", "/system")) {
        const std::string id = string_field(ja, "id", "/system/reactions");
        Subobject r = subobject_from_json(b, field(ja, "reactant", "/system/reactions"));
        Subobject p = subobject_from_json(b, field(ja, "product", "/system/reactions"));
        const Json& ji = field(ja, "inhibitor", "/system/reactions");
        if (ji.is_string() && ji.get<std::string>() == "-") {
            reactions.push_back(make_uninhibited_reaction(b, id, std::move(r), std::move(p)));
        } else {
            Subobject i = subobject_from_json(b, field(ji, "i", "/system/reactions/inhibitor"));
            Subobject i0 = subobject_from_json(b, field(ji, "i0", "/system/reactions/inhibitor"));
            reactions.push_back(
                make_reaction(id, std::move(r), std::move(i), std::move(i0), std::move(p)));
        }
    }
    return make_system(std::move(b), std::move(reactions));
}

Json morphism_to_json(const BackgroundMorphism& f) {
    Json j;
    j["source"] = f.source_id;
    j["target"] = f.target_id;
    j["maps"] = f.maps;
    return j;
}

BackgroundMorphism morphism_from_json(const Json& payload) {
    BackgroundMorphism f;
    f.source_id = string_field(payload, "source", "/morphism");
    f.target_id = string_field(payload, "target", "/morphism");
    for (const auto& [cname, jm] : field(payload, "maps", "/morphism").items())
        f.maps[cname] = jm.get<std::map<std::string, std::string>>();
    return f;
}

ProcessInput process_from_json(const Background& b, const Json& payload) {
    ProcessInput input;
    input.start = subobject_from_json(b, field(payload, "start", "/process"));
    if (payload.contains("contexts")) {
        for (const auto& jc : payload.at("contexts"))
            input.gamma.push_back(subobject_from_json(b, jc));
    } else if (payload.contains("policy")) {
        const Json& jp = payload.at("policy");
        const std::string name = string_field(jp, "name", "/process/policy");
        if (name != "constant-empty")
            throw Error(ErrorCode::SchemaError, "unknown context policy '" + name + "'", name);
        const Json& steps = field(jp, "steps", "/process/policy");
        for (int i = 0; i <= steps.get<int>(); ++i) input.gamma.push_back(empty_subobject(b));
    } else {
        throw Error(ErrorCode::SchemaError, "process needs 'contexts' or 'policy'", "/process");
    }
    return input;
}

Json trace_to_json(const Background& b, const ProcessTrace& trace) {
    Json j;
    j["background"] = trace.background_id;
    j["gamma"] = Json::array();
    for (const auto& c : trace.gamma) j["gamma"].push_back(subobject_to_json(c));
    j["delta"] = Json::array();
    for (const auto& d : trace.delta) j["delta"].push_back(subobject_to_json(d));
    j["tau"] = Json::array();
    for (const auto& t : state_sequence(b, trace)) j["tau"].push_back(subobject_to_json(t));
    j["enabled"] = trace.enabled;
    j["context_independent"] = check_context_independent(b, trace);
    return j;
}

Json cover_instance_to_json(const CoverInstance& inst) {
    Json j;
    j["m"] = inst.m;
    j["n"] = inst.n;
    j["k"] = inst.k;
    j["hyperedges"] = inst.hyperedges;
    return j;
}

CoverInstance cover_instance_from_json(const Json& payload) {
    CoverInstance inst;
    inst.m = field(payload, "m", "/cover-instance").get<int>();
    inst.n = field(payload, "n", "/cover-instance").get<int>();
    inst.k = payload.value("k", 0);
    for (const auto& ju : field(payload, "hyperedges", "/cover-instance"))
        inst.hyperedges.push_back(ju.get<std::vector<int>>());
    validate_instance(inst);
    return inst;
}

DocumentEnvelope load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const std::string& path, const DocumentEnvelope& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + path + "'", path);
    out << emit_document(doc);
}

} // namespace surf
