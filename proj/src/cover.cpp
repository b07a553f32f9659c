#include "surf/cover.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "surf/error.hpp"

namespace surf {

namespace {

void check_parameters(int m, int n) {
    if (m < 1 || n < m)
        throw Error(ErrorCode::BadParameters,
                    "need 1 <= m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
}

// All strings over [n] of lengths 1..m, in length-then-lex order.
std::vector<std::vector<int>> attachment_strings(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> current;
    for (int v = 1; v <= n; ++v) current.push_back({v});
    for (int len = 1; len <= m; ++len) {
        out.insert(out.end(), current.begin(), current.end());
        if (len == m) break;
        std::vector<std::vector<int>> next;
        for (const auto& u : current)
            for (int v = 1; v <= n; ++v) {
                auto w = u;
                w.push_back(v);
                next.push_back(std::move(w));
            }
        current = std::move(next);
    }
    return out;
}

std::vector<std::string> attachment_keys(const std::vector<int>& u) {
    std::vector<std::string> keys;
    keys.reserve(u.size());
    for (int v : u) keys.push_back(vertex_key(v));
    return keys;
}

} // namespace

void validate_instance(const CoverInstance& inst) {
    check_parameters(inst.m, inst.n);
    if (inst.k < 0 || inst.k > inst.n)
        throw Error(ErrorCode::BadParameters, "k=" + std::to_string(inst.k) + " outside 0..n");
    for (const auto& u : inst.hyperedges) {
        if (u.empty() || static_cast<int>(u.size()) > inst.m)
            throw Error(ErrorCode::BadParameters,
                        "attachment string length outside 1..m");
        for (int v : u)
            if (v < 1 || v > inst.n)
                throw Error(ErrorCode::BadParameters,
                            "attachment vertex " + std::to_string(v) + " outside [n]");
    }
}

std::string vertex_key(int j) { return std::to_string(j); }

std::string flag_key(int j) { return std::to_string(j) + "!"; }

std::string twin_key(const std::vector<int>& u, char label) {
    std::string key;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) key += '.';
        key += std::to_string(u[i]);
    }
    key += label;
    return key;
}

Background build_ch2(int m, int n) {
    check_parameters(m, n);
    HypergraphCarrier carrier;
    carrier.alphabet = {"*", "+"};
    for (int j = 1; j <= n; ++j) carrier.vertices.push_back(vertex_key(j));
    for (const auto& u : attachment_strings(m, n)) {
        carrier.edges[twin_key(u, '*')] = Hyperedge{attachment_keys(u), "*"};
        carrier.edges[twin_key(u, '+')] = Hyperedge{attachment_keys(u), "+"};
    }
    return construct_background("ch2_" + std::to_string(m) + "_" + std::to_string(n),
                                Kind::Hypergraph, std::move(carrier));
}

Background build_cover_background(int m, int n) {
    Background b = build_ch2(m, n);
    auto& carrier = std::get<HypergraphCarrier>(b.carrier);
    for (int j = 1; j <= n; ++j)
        carrier.edges[flag_key(j)] = Hyperedge{{vertex_key(j)}, "*"};
    return construct_background("b_" + std::to_string(m) + "_" + std::to_string(n),
                                Kind::Hypergraph, std::move(carrier));
}

Subobject edge_closure(const Background& b, const std::string& edge_key) {
    return close_raw(b, {{"E", {edge_key}}});
}

Subobject flag_subobject(const Background& b, int j) { return edge_closure(b, flag_key(j)); }

ReactionSystem build_cover_system(int m, int n) {
    Background b = build_cover_background(m, n);
    std::vector<Reaction> reactions;

    // vertex sustain
    for (int j = 1; j <= n; ++j) {
        Subobject vertex = validate_subobject(b, {{"V", {vertex_key(j)}}});
        reactions.push_back(
            make_uninhibited_reaction(b, "v" + std::to_string(j), vertex, vertex));
    }
    // hyperedge sustain, one per twin hyperedge of CH2
    for (const auto& u : attachment_strings(m, n))
        for (char label : {'*', '+'}) {
            const std::string key = twin_key(u, label);
            Subobject e = edge_closure(b, key);
            reactions.push_back(make_uninhibited_reaction(b, "e" + key, e, e));
        }
    // flag sustain
    for (int j = 1; j <= n; ++j) {
        Subobject flag = flag_subobject(b, j);
        reactions.push_back(make_uninhibited_reaction(b, "f" + std::to_string(j), flag, flag));
    }
    // twin creation: *-hyperedge plus a flagged attachment vertex yields
    // the +-twin; one reaction per distinct occurring vertex
    for (const auto& u : attachment_strings(m, n)) {
        std::set<int> occurring(u.begin(), u.end());
        for (int v : occurring) {
            Subobject reactant =
                unite(b, edge_closure(b, twin_key(u, '*')), flag_subobject(b, v));
            Subobject product = edge_closure(b, twin_key(u, '+'));
            reactions.push_back(make_uninhibited_reaction(
                b, "t" + twin_key(u, '*') + "@" + std::to_string(v), reactant, product));
        }
    }
    return make_system(std::move(b), std::move(reactions));
}

ReactionSystem build_twin_sustain_system(int m, int n) {
    Background b = build_ch2(m, n);
    std::vector<Reaction> reactions;
    for (const auto& u : attachment_strings(m, n)) {
        Subobject e = edge_closure(b, twin_key(u, '*'));
        Subobject twin = edge_closure(b, twin_key(u, '+'));
        // i0: the discrete hypergraph on the attachment vertices
        Subobject core = validate_subobject(b, {{"V", twin.part("V")}});
        reactions.push_back(make_reaction("a" + twin_key(u, '*'), e, twin, core, e));
    }
    return make_system(std::move(b), std::move(reactions));
}

Subobject instance_state(const Background& b, const CoverInstance& inst) {
    validate_instance(inst);
    ElementMap raw;
    for (const auto& u : inst.hyperedges) insert_key(raw["E"], twin_key(u, '*'));
    return close_raw(b, raw);
}

CoverRun cover_process(const ReactionSystem& sys, const CoverInstance& inst,
                       const std::vector<int>& combo) {
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (combo[i] < 1 || combo[i] > inst.n)
            throw Error(ErrorCode::BadCombination,
                        "vertex " + std::to_string(combo[i]) + " outside [n]");
        if (i && combo[i] <= combo[i - 1])
            throw Error(ErrorCode::BadCombination, "combination not strictly increasing");
    }
    const Background& b = sys.background;
    std::vector<Subobject> gamma;
    for (int j : combo) gamma.push_back(flag_subobject(b, j));
    gamma.push_back(empty_subobject(b)); // MPT
    // k = 0 still needs one step
    if (gamma.size() < 2) gamma.insert(gamma.begin(), empty_subobject(b));

    CoverRun run;
    run.trace = run_process(sys, gamma, instance_state(b, inst));
    const Subobject& final_result = run.trace.delta.back();
    run.verdict = true;
    for (const auto& u : inst.hyperedges)
        if (!final_result.has("E", twin_key(u, '+'))) {
            run.verdict = false;
            break;
        }
    return run;
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
    if (k > n) return out;
    while (true) {
        out.push_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

CoverResult is_k_coverable_serial(const ReactionSystem& sys, const CoverInstance& inst) {
    validate_instance(inst);
    CoverResult result;
    for (const auto& combo : combinations(inst.n, inst.k)) {
        ++result.combinations_tried;
        if (cover_process(sys, inst, combo).verdict) {
            result.coverable = true;
            result.witness = combo;
            return result;
        }
    }
    return result;
}

CoverResult is_k_coverable_parallel(const ReactionSystem& sys, const CoverInstance& inst) {
    validate_instance(inst);
    const auto combos = combinations(inst.n, inst.k);
    CoverResult result;
    result.combinations_tried = combos.size();
    const std::ptrdiff_t none = static_cast<std::ptrdiff_t>(combos.size());
    std::ptrdiff_t first_hit = none;

#pragma omp parallel for schedule(dynamic) reduction(min : first_hit)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(combos.size()); ++i) {
        if (cover_process(sys, inst, combos[static_cast<std::size_t>(i)]).verdict)
            if (i < first_hit) first_hit = i;
    }

    if (first_hit < none) {
        result.coverable = true;
        result.witness = combos[static_cast<std::size_t>(first_hit)];
        result.combinations_tried = static_cast<std::size_t>(first_hit) + 1;
    }
    return result;
}

CoverResult is_k_coverable(const ReactionSystem& sys, const CoverInstance& inst, bool parallel) {
    return parallel ? is_k_coverable_parallel(sys, inst) : is_k_coverable_serial(sys, inst);
}

bool brute_force_cover(const CoverInstance& inst) {
    validate_instance(inst);
    for (const auto& combo : combinations(inst.n, inst.k)) {
        bool covers = true;
        for (const auto& u : inst.hyperedges) {
            bool met = false;
            for (int v : u)
                if (std::binary_search(combo.begin(), combo.end(), v)) {
                    met = true;
                    break;
                }
            if (!met) {
                covers = false;
                break;
            }
        }
        if (covers) return true;
    }
    return false;
}

} // namespace surf
