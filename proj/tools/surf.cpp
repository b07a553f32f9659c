#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "surf/document.hpp"
#include "surf/error.hpp"
#include "surf/laws.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;

surf::Json load_payload(const std::string& path, const std::string& expected_kind) {
    surf::DocumentEnvelope doc = surf::load_document(path);
    if (doc.kind != expected_kind)
        throw surf::Error(surf::ErrorCode::SchemaError,
                          "'" + path + "' is a '" + doc.kind + "' document, expected '" +
                              expected_kind + "'");
    return doc.payload;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw surf::Error(surf::ErrorCode::SyntaxError, "cannot write '" + path + "'", path);
    out << text;
}

int run_laws(const std::string& kind, const std::string& scheme, std::size_t cases,
             std::uint64_t seed) {
    surf::LawReport report;
    if (kind == "diagram" && !scheme.empty())
        report = surf::run_law_suite_scheme(scheme, cases, seed);
    else
        report = surf::run_law_suite(surf::kind_from_string(kind), cases, seed);
    for (const auto& r : report.results) {
        std::cout << (r.failures ? "FAIL " : "pass ") << r.law << " (" << r.cases << " cases";
        if (r.failures) std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
        std::cout << ")\n";
    }
    return report.all_passed() ? kExitOk : kExitVerdictFalse;
}

int run_run(const std::string& system_path, const std::string& process_path,
            const std::string& out_path) {
    surf::ReactionSystem sys = surf::system_from_json(load_payload(system_path, "system"));
    surf::ProcessInput input =
        surf::process_from_json(sys.background, load_payload(process_path, "process"));
    surf::ProcessTrace trace = surf::run_process(sys, input.gamma, input.start);
    surf::Json out = surf::trace_to_json(sys.background, trace);
    if (out_path.empty())
        std::cout << out.dump(2) << "\n";
    else
        write_text(out_path, out.dump(2) + "\n");
    return kExitOk;
}

int run_cover(const std::string& instance_path, int k, bool parallel, bool oracle,
              const std::string& out_path) {
    surf::CoverInstance inst =
        surf::cover_instance_from_json(load_payload(instance_path, "cover-instance"));
    if (k >= 0) inst.k = k;
    surf::ReactionSystem sys = surf::build_cover_system(inst.m, inst.n);
    surf::CoverResult result = surf::is_k_coverable(sys, inst, parallel);

    surf::Json out;
    out["k"] = inst.k;
    out["coverable"] = result.coverable;
    out["witness"] = result.witness;
    out["combinations_tried"] = result.combinations_tried;
    if (oracle) out["oracle_agrees"] = (surf::brute_force_cover(inst) == result.coverable);
    if (!out_path.empty()) write_text(out_path, out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    if (oracle && !out["oracle_agrees"].get<bool>()) return kExitVerdictFalse;
    return result.coverable ? kExitOk : kExitVerdictFalse;
}

int run_morphism(const std::string& from_path, const std::string& to_path,
                 const std::string& map_path, const std::string& strong_mode,
                 std::uint64_t seed) {
    surf::ReactionSystem a = surf::system_from_json(load_payload(from_path, "system"));
    surf::ReactionSystem a_prime = surf::system_from_json(load_payload(to_path, "system"));
    surf::BackgroundMorphism f = surf::morphism_from_json(load_payload(map_path, "morphism"));

    surf::check_background_mono(f, a.background, a_prime.background);
    const bool morphism = surf::is_rs_morphism(f, a, a_prime);
    std::cout << "rs-morphism: " << (morphism ? "yes" : "no") << "\n";
    if (!morphism) return kExitVerdictFalse;
    if (strong_mode.empty()) return kExitOk;

    surf::StrongCheckMode mode;
    if (strong_mode == "exhaustive") {
        mode = surf::ExhaustiveMode{};
    } else if (strong_mode.rfind("sample:", 0) == 0) {
        mode = surf::SampleMode{std::stoul(strong_mode.substr(7)), seed};
    } else {
        throw surf::Error(surf::ErrorCode::SchemaError,
                          "--strong must be 'exhaustive' or 'sample:<k>'");
    }
    surf::StrongReport report = surf::is_strong(f, a, a_prime, mode);
    std::cout << "strong: " << (report.strong ? "yes" : "no") << " (" << report.states_checked
              << " states)\n";
    if (!report.strong) std::cout << "witness: " << surf::to_string(*report.witness) << "\n";
    return report.strong ? kExitOk : kExitVerdictFalse;
}

int run_transitions(const std::string& system_path, const std::string& dot_path) {
    surf::ReactionSystem sys = surf::system_from_json(load_payload(system_path, "system"));
    auto graph = surf::build_transition_graph(sys);
    const std::string dot = surf::transition_graph_dot(sys, graph);
    if (dot_path.empty())
        std::cout << dot;
    else
        write_text(dot_path, dot);
    return kExitOk;
}

int run_gen_cover(int m, int n, const std::string& out_path) {
    surf::ReactionSystem sys = surf::build_cover_system(m, n);
    surf::DocumentEnvelope doc;
    doc.kind = "system";
    doc.payload = surf::system_to_json(sys);
    if (out_path.empty())
        std::cout << surf::emit_document(doc);
    else
        surf::save_document(out_path, doc);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surf - reaction systems over subobject universes"};
    app.require_subcommand(1);

    std::string kind = "set", scheme, system_path, process_path, out_path;
    std::string from_path, to_path, map_path, strong_mode, instance_path, dot_path;
    std::size_t cases = 200;
    std::uint64_t seed = 0;
    bool seed_set = false, parallel = false, oracle = false;
    int k = -1, gen_m = 1, gen_n = 2;

    CLI::App* laws = app.add_subcommand("laws", "run the subobject lattice law suite");
    laws->add_option("--kind", kind, "set|graph|hypergraph|poset|diagram")->required();
    laws->add_option("--scheme", scheme, "registry scheme for --kind diagram");
    laws->add_option("--cases", cases, "randomized cases per law");
    laws->add_option("--seed", seed, "rng seed")->required();

    CLI::App* run = app.add_subcommand("run", "run an interactive process");
    run->add_option("--system", system_path)->required()->check(CLI::ExistingFile);
    run->add_option("--process", process_path)->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_path, "trace output file (default: stdout)");

    CLI::App* cover = app.add_subcommand("cover", "k-vertex-coverability test");
    cover->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
    cover->add_option("--k", k, "cover size (overrides the instance's k)");
    cover->add_flag("--parallel", parallel, "sweep combinations with OpenMP");
    cover->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
    cover->add_option("--out", out_path, "result output file");

    CLI::App* morphism = app.add_subcommand("morphism", "check a reaction-system morphism");
    morphism->add_option("--from", from_path)->required()->check(CLI::ExistingFile);
    morphism->add_option("--to", to_path)->required()->check(CLI::ExistingFile);
    morphism->add_option("--map", map_path)->required()->check(CLI::ExistingFile);
    morphism->add_option("--strong", strong_mode, "exhaustive | sample:<k>");
    auto* seed_opt = morphism->add_option("--seed", seed, "rng seed for sample mode");

    CLI::App* transitions = app.add_subcommand("transitions", "export the transition graph");
    transitions->add_option("--system", system_path)->required()->check(CLI::ExistingFile);
    transitions->add_option("--dot", dot_path, "DOT output file (default: stdout)");

    CLI::App* gen = app.add_subcommand("gen-cover", "emit the cover system A_{m,n} as a document");
    gen->add_option("--m", gen_m)->required();
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    seed_set = seed_opt->count() > 0;

    try {
        if (laws->parsed()) return run_laws(kind, scheme, cases, seed);
        if (run->parsed()) return run_run(system_path, process_path, out_path);
        if (cover->parsed()) return run_cover(instance_path, k, parallel, oracle, out_path);
        if (morphism->parsed()) {
            if (strong_mode.rfind("sample:", 0) == 0 && !seed_set)
                throw surf::Error(surf::ErrorCode::SchemaError,
                                  "--seed is required for sampled strong checks");
            return run_morphism(from_path, to_path, map_path, strong_mode, seed);
        }
        if (transitions->parsed()) return run_transitions(system_path, dot_path);
        if (gen->parsed()) return run_gen_cover(gen_m, gen_n, out_path);
    } catch (const surf::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
