#pragma once

#include <iosfwd>

#include "ssi/text_format.hpp"

namespace ssi::io {

struct SimulateOptions {
    StartSpec start = StartSpec::uniform_initial();
    Policy policy = Policy::uniform_random();
    std::size_t max_steps = 100;
    std::uint64_t seed = 0;

    // Streams for the interactive policy; default to std::cin / std::cerr.
    std::istream* input = nullptr;
    std::ostream* prompt = nullptr;
};

// Drives policy-selected operations through the space, sampling outcomes
// from one stream seeded with options.seed, until the step budget is
// exhausted, a state with no applicable non-identity operation is
// reached, the final set is entered via a step, or a script runs out.
//
// Scripted policies are checked against the operation set up front and
// throw InapplicableAtError at the first entry with no transition. The
// interactive policy re-prompts on unknown or inapplicable input and
// throws InteractiveAbortError on end of input or "quit".
TraceDocument simulate(const StateSpace& space, const SimulateOptions& options);

struct ReplayResult {
    bool ok = false;
    std::string message;  // first difference when not ok
};

// Re-executes the trace header against `space` and compares the recorded
// evolution step by step. Fails up front when the embedded model hash
// does not match. Interactive traces replay their recorded operations as
// a script.
ReplayResult replay_trace(const StateSpace& space, const TraceDocument& doc);

}  // namespace ssi::io
