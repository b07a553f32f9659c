#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surf/reaction.hpp"

namespace surf {

/// One interactive process: context sequence gamma = c_0..c_n and
/// result sequence delta = d_0..d_n with d_i = res(c_{i-1} u d_{i-1}).
/// The state sequence tau (t_i = c_i u d_i) is recomputed on demand.
struct ProcessTrace {
    std::string background_id;
    std::vector<Subobject> gamma;
    std::vector<Subobject> delta;
    std::vector<std::vector<std::string>> enabled; // per step i=1..n, reaction ids enabled on t_{i-1}

    std::size_t steps() const { return gamma.empty() ? 0 : gamma.size() - 1; }
};

std::vector<Subobject> state_sequence(const Background& b, const ProcessTrace& trace);

/// Runs the process; |gamma| must be at least 2.
ProcessTrace run_process(const ReactionSystem& sys, const std::vector<Subobject>& gamma,
                         const Subobject& start);

/// Replays gamma and the start and checks that delta matches.
bool replay_matches(const ReactionSystem& sys, const ProcessTrace& trace);

/// c_i <= d_i for all i; then tau and delta coincide elementwise.
bool check_context_independent(const Background& b, const ProcessTrace& trace);

/// Decomposition around the smallest repeating pair t_{i0} = t_{j0}:
/// tau = t_0..t_{i0} (t_{i0+1}..t_{j0})^m residual.
struct CycleInfo {
    std::size_t i0 = 0;
    std::size_t j0 = 0;
    std::size_t prefix_length = 0; // elements before the cycle, i0 + 1
    std::size_t cycle_length = 0;  // j0 - i0
    std::size_t repetitions = 0;   // full consecutive copies of the cycle segment
    std::vector<Subobject> residual;
    /// True when the residual is an initial section of the cycle segment
    /// (always the case for deterministic trajectories).
    bool residual_is_initial_section = false;
};

/// Returns the cycle decomposition, or nullopt for a repetition-free
/// sequence. First repeat in left-to-right scan order wins.
std::optional<CycleInfo> detect_cycle(const std::vector<Subobject>& tau);

/// Reassembles prefix + m copies of the cycle segment + residual.
std::vector<Subobject> reassemble(const std::vector<Subobject>& tau, const CycleInfo& info);

/// res as a total function on all states of an enumerable background,
/// under the empty context.
std::map<Subobject, Subobject> build_transition_graph(const ReactionSystem& sys,
                                                      std::uint64_t cap = enumeration_cap());

std::string transition_graph_dot(const ReactionSystem& sys,
                                 const std::map<Subobject, Subobject>& graph);

} // namespace surf
