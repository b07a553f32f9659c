#include "surf/process.hpp"

#include <sstream>

#include "surf/error.hpp"

namespace surf {

std::vector<Subobject> state_sequence(const Background& b, const ProcessTrace& trace) {
    std::vector<Subobject> tau;
    tau.reserve(trace.gamma.size());
    for (std::size_t i = 0; i < trace.gamma.size(); ++i)
        tau.push_back(unite(b, trace.gamma[i], trace.delta[i]));
    return tau;
}

ProcessTrace run_process(const ReactionSystem& sys, const std::vector<Subobject>& gamma,
                         const Subobject& start) {
    if (gamma.size() < 2)
        throw Error(ErrorCode::TooShort,
                    "context sequence has " + std::to_string(gamma.size()) + " entries, need >= 2");
    const Background& b = sys.background;
    for (const auto& c : gamma) require_background(b, c);
    require_background(b, start);

    ProcessTrace trace;
    trace.background_id = b.id;
    trace.gamma = gamma;
    trace.delta.push_back(start);
    for (std::size_t i = 1; i < gamma.size(); ++i) {
        Subobject state = unite(b, gamma[i - 1], trace.delta[i - 1]);
        trace.enabled.push_back(enabled_reaction_ids(sys, state));
        trace.delta.push_back(result_of_system(sys, state));
    }
    return trace;
}

bool replay_matches(const ReactionSystem& sys, const ProcessTrace& trace) {
    if (trace.delta.empty()) return false;
    ProcessTrace replay = run_process(sys, trace.gamma, trace.delta.front());
    return replay.delta == trace.delta;
}

bool check_context_independent(const Background& b, const ProcessTrace& trace) {
    for (std::size_t i = 0; i < trace.gamma.size(); ++i) {
        require_background(b, trace.gamma[i]);
        if (!is_included(trace.gamma[i], trace.delta[i])) return false;
    }
    return true;
}

std::optional<CycleInfo> detect_cycle(const std::vector<Subobject>& tau) {
    std::map<Subobject, std::size_t> seen;
    std::size_t i0 = 0, j0 = 0;
    bool found = false;
    for (std::size_t j = 0; j < tau.size() && !found; ++j) {
        auto [it, inserted] = seen.try_emplace(tau[j], j);
        if (!inserted) {
            i0 = it->second;
            j0 = j;
            found = true;
        }
    }
    if (!found) return std::nullopt;

    CycleInfo info;
    info.i0 = i0;
    info.j0 = j0;
    info.prefix_length = i0 + 1;
    info.cycle_length = j0 - i0;

    // greedily count full consecutive copies of the segment t_{i0+1}..t_{j0}
    const std::size_t L = info.cycle_length;
    std::size_t pos = i0 + 1;
    std::size_t reps = 0;
    while (pos + L <= tau.size()) {
        bool match = true;
        for (std::size_t r = 0; r < L && match; ++r)
            if (tau[pos + r] != tau[i0 + 1 + r]) match = false;
        if (!match) break;
        ++reps;
        pos += L;
    }
    info.repetitions = reps;
    info.residual.assign(tau.begin() + static_cast<std::ptrdiff_t>(pos), tau.end());

    info.residual_is_initial_section = info.residual.size() < L;
    for (std::size_t r = 0; r < info.residual.size() && info.residual_is_initial_section; ++r)
        if (info.residual[r] != tau[i0 + 1 + r]) info.residual_is_initial_section = false;
    return info;
}

std::vector<Subobject> reassemble(const std::vector<Subobject>& tau, const CycleInfo& info) {
    std::vector<Subobject> out(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(info.i0 + 1));
    for (std::size_t m = 0; m < info.repetitions; ++m)
        for (std::size_t r = 0; r < info.cycle_length; ++r) out.push_back(tau[info.i0 + 1 + r]);
    out.insert(out.end(), info.residual.begin(), info.residual.end());
    return out;
}

std::map<Subobject, Subobject> build_transition_graph(const ReactionSystem& sys,
                                                      std::uint64_t cap) {
    std::map<Subobject, Subobject> graph;
    for (const auto& state : enumerate_subobjects(sys.background, cap))
        graph.emplace(state, result_of_system(sys, state));
    return graph;
}

std::string transition_graph_dot(const ReactionSystem& sys,
                                 const std::map<Subobject, Subobject>& graph) {
    std::map<Subobject, std::size_t> index;
    for (const auto& [state, next] : graph) index.emplace(state, index.size());
    std::ostringstream os;
    os << "digraph transitions {\n";
    for (const auto& [state, idx] : index)
        os << "  n" << idx << " [label=\"" << to_string(state) << "\"];\n";
    for (const auto& [state, next] : graph)
        os << "  n" << index.at(state) << " -> n" << index.at(next) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace surf
