#include "ssi/simulate.hpp"

#include <algorithm>
#include <iostream>

namespace ssi::io {

namespace {

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

}  // namespace

TraceDocument simulate(const StateSpace& space, const SimulateOptions& options) {
    if (!options.start.uniform_over_initial &&
        !space.model().states().contains(options.start.state)) {
        throw UnknownIdError(options.start.state);
    }
    if (options.policy.kind == PolicyKind::Scripted) {
        for (const std::string& op : options.policy.script) {
            if (!space.model().operations().contains(op)) throw UnknownIdError(op);
        }
    }

    SplitMix64 rng(options.seed);

    std::string current;
    if (options.start.uniform_over_initial) {
        const auto& initial = space.initial_set();
        std::vector<std::string> candidates(initial.begin(), initial.end());
        current = candidates.size() == 1 ? candidates.front()
                                         : candidates[rng.next_index(candidates.size())];
    } else {
        current = options.start.state;
    }

    TraceDocument doc;
    doc.kind = TraceKind::Simulation;
    doc.model_hash = model_hash(space.model());
    doc.seed = options.seed;
    doc.policy = options.policy;
    doc.start_spec = options.start;
    doc.start = current;
    doc.max_steps = options.max_steps;

    std::istream& input = options.input ? *options.input : std::cin;
    std::ostream& prompt = options.prompt ? *options.prompt : std::cerr;

    while (true) {
        if (doc.steps.size() >= options.max_steps) {
            doc.stop = StopReason::StepBudget;
            break;
        }

        std::string op;
        if (options.policy.kind == PolicyKind::Scripted) {
            const std::size_t position = doc.steps.size();
            if (position >= options.policy.script.size()) {
                doc.stop = StopReason::ScriptEnd;
                break;
            }
            op = options.policy.script[position];
            if (!space.is_applicable(current, op)) {
                EvolutionPath prefix = doc.to_path();
                throw InapplicableAtError(position, current, op, std::move(prefix));
            }
        } else if (options.policy.kind == PolicyKind::UniformRandom) {
            const std::vector<std::string> ops = space.applicable_ops(current);
            if (ops.empty()) {
                doc.stop = StopReason::DeadEnd;
                break;
            }
            op = ops.size() == 1 ? ops.front() : ops[rng.next_index(ops.size())];
        } else {  // Interactive
            const std::vector<std::string> ops = space.applicable_ops(current);
            if (ops.empty()) {
                doc.stop = StopReason::DeadEnd;
                break;
            }
            while (true) {
                prompt << "state " << current << "; applicable:";
                for (const std::string& candidate : ops) prompt << " " << candidate;
                prompt << "\n> " << std::flush;
                std::string line;
                if (!std::getline(input, line)) throw InteractiveAbortError();
                line = trim(line);
                if (line == "quit" || line == "q") throw InteractiveAbortError();
                if (line.empty()) continue;
                if (!space.model().operations().contains(line)) {
                    prompt << "unknown operation '" << line << "'\n";
                    continue;
                }
                if (!space.is_applicable(current, line)) {
                    prompt << "operation '" << line << "' is not applicable here\n";
                    continue;
                }
                op = line;
                break;
            }
        }

        StepRecord record = step(space, current, op, rng);
        current = record.to;
        doc.steps.push_back(
            {doc.steps.size(), std::move(op), std::move(record.to), record.prob, record.drawn});

        if (space.is_final(current)) {
            doc.stop = StopReason::FinalState;
            break;
        }
    }
    return doc;
}

ReplayResult replay_trace(const StateSpace& space, const TraceDocument& doc) {
    const std::string expected_hash = model_hash(space.model());
    if (doc.model_hash != expected_hash) {
        return {false, "model hash mismatch: trace has " + doc.model_hash + ", model is " +
                           expected_hash};
    }

    if (doc.kind == TraceKind::Path) {
        const auto violation = path_violation(space, doc.to_path());
        if (violation) return {false, *violation};
        return {true, {}};
    }

    if (!doc.seed) return {false, "simulation trace is missing its seed"};

    SimulateOptions options;
    options.seed = *doc.seed;
    options.max_steps = doc.max_steps;
    options.start = doc.start_spec;
    const bool was_interactive = doc.policy.kind == PolicyKind::Interactive;
    if (was_interactive) {
        std::vector<std::string> script;
        script.reserve(doc.steps.size());
        for (const TraceStep& step : doc.steps) script.push_back(step.op);
        options.policy = Policy::scripted(std::move(script));
    } else {
        options.policy = doc.policy;
    }

    const TraceDocument replayed = simulate(space, options);
    if (replayed.start != doc.start) {
        return {false, "start state diverged: recorded " + doc.start + ", replayed " +
                           replayed.start};
    }
    if (replayed.steps.size() != doc.steps.size()) {
        return {false, "step count diverged: recorded " + std::to_string(doc.steps.size()) +
                           ", replayed " + std::to_string(replayed.steps.size())};
    }
    for (std::size_t i = 0; i < doc.steps.size(); ++i) {
        if (!(replayed.steps[i] == doc.steps[i])) {
            return {false, "step " + std::to_string(i) + " diverged: recorded " +
                               doc.steps[i].op + " -> " + doc.steps[i].outcome + ", replayed " +
                               replayed.steps[i].op + " -> " + replayed.steps[i].outcome};
        }
    }
    // A script distilled from an interactive session may end for a
    // different bookkeeping reason; the evolution itself already matched.
    if (!was_interactive && replayed.stop != doc.stop) {
        return {false, "stop reason diverged: recorded " + to_string(doc.stop) + ", replayed " +
                           to_string(replayed.stop)};
    }
    return {true, {}};
}

}  // namespace ssi::io
