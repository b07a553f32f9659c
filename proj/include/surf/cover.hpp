#pragma once

#include <string>
#include <vector>

#include "surf/process.hpp"
#include "surf/reaction.hpp"

namespace surf {

/// A k-vertex-coverability instance over B_{m,n}: a sub-hypergraph H
/// with *-labeled non-flag hyperedges only, given by attachment strings.
struct CoverInstance {
    int m = 0;
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> hyperedges; // attachment strings over [n], lengths 1..m
};

void validate_instance(const CoverInstance& inst);

std::string vertex_key(int j);
std::string flag_key(int j);
std::string twin_key(const std::vector<int>& u, char label); // label '*' or '+'

/// Complete hypergraph with twins: vertices [n] and, for every string u
/// over [n] of length 1..m, parallel hyperedges (u,*) and (u,+).
Background build_ch2(int m, int n);

/// CH2 extended by a *-flag at each vertex.
Background build_cover_background(int m, int n);

/// The system A_{m,n}: vertex-sustain, hyperedge-sustain, flag-sustain
/// and twin-creation reactions, all uninhibited.
ReactionSystem build_cover_system(int m, int n);

/// Twin-sustain system over CH2 (no flags): one reaction per *-hyperedge
/// with inhibitor i = twin closure, i0 = discrete attachment vertices.
ReactionSystem build_twin_sustain_system(int m, int n);

/// Sub-hypergraph induced by one hyperedge (its attachment vertices plus
/// the hyperedge itself).
Subobject edge_closure(const Background& b, const std::string& edge_key);

/// Vertex j plus its *-flag.
Subobject flag_subobject(const Background& b, int j);

/// H as a subobject of the cover background.
Subobject instance_state(const Background& b, const CoverInstance& inst);

struct CoverRun {
    ProcessTrace trace;
    bool verdict = false; // every hyperedge of H has its twin in the final result
};

/// Runs pi(H, i1..ik) with gamma = <flag(i1), .., flag(ik), MPT>.
/// `combo` must be strictly increasing over [n].
CoverRun cover_process(const ReactionSystem& sys, const CoverInstance& inst,
                       const std::vector<int>& combo);

struct CoverResult {
    bool coverable = false;
    std::vector<int> witness; // lexicographically first successful combination
    std::size_t combinations_tried = 0;
};

/// Sweeps all k-combinations in lexicographic order through the engine.
/// Serial reference implementation.
CoverResult is_k_coverable_serial(const ReactionSystem& sys, const CoverInstance& inst);

/// OpenMP-parallel sweep; identical result (first witness by index).
CoverResult is_k_coverable_parallel(const ReactionSystem& sys, const CoverInstance& inst);

CoverResult is_k_coverable(const ReactionSystem& sys, const CoverInstance& inst,
                           bool parallel = false);

/// Independent oracle: checks k-subsets of [n] directly against the
/// attachment strings; no reaction engine involved.
bool brute_force_cover(const CoverInstance& inst);

std::vector<std::vector<int>> combinations(int n, int k);

} // namespace surf
