#include "ssi/state_space.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ssi {

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& violation : closure_violations) {
        out << "closure violation: " << violation.from << " --" << violation.op << "--> "
            << violation.target << " (undeclared state)\n";
    }
    for (const auto& error : probability_errors) {
        out << "probability error: " << error.from << " --" << error.op
            << "--> outcomes sum to " << error.sum.str() << "\n";
    }
    for (const auto& id : unreachable_states) {
        out << "unreachable: " << id << "\n";
    }
    return out.str();
}

std::optional<std::size_t> StateSpace::state_index(std::string_view id) const {
    auto it = state_index_.find(id);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> StateSpace::op_index(std::string_view id) const {
    auto it = op_index_.find(id);
    if (it == op_index_.end()) return std::nullopt;
    return it->second;
}

const State& StateSpace::state_def(const std::string& id) const {
    auto it = model_.states().find(id);
    if (it == model_.states().end()) throw UnknownIdError(id);
    return it->second;
}

const OperationDef& StateSpace::op_def(const std::string& id) const {
    auto it = model_.operations().find(id);
    if (it == model_.operations().end()) throw UnknownIdError(id);
    return it->second;
}

const std::vector<Outcome>* StateSpace::outcomes(const std::string& state,
                                                 const std::string& op) const {
    if (!model_.states().contains(state)) throw UnknownIdError(state);
    if (!model_.operations().contains(op)) throw UnknownIdError(op);
    return model_.outcomes_of(state, op);
}

std::vector<std::string> StateSpace::applicable_ops(const std::string& state,
                                                    bool include_identity) const {
    if (!model_.states().contains(state)) throw UnknownIdError(state);
    std::vector<std::string> ops;
    auto it = model_.transitions().lower_bound({state, std::string()});
    for (; it != model_.transitions().end() && it->first.first == state; ++it) {
        if (!include_identity && it->first.second == model_.identity_op()) continue;
        ops.push_back(it->first.second);
    }
    return ops;  // map iteration keeps these sorted
}

std::set<std::string> reachable_states(const GameModel& model) {
    std::set<std::string> visited(model.initial_set().begin(), model.initial_set().end());
    std::deque<std::string> frontier(model.initial_set().begin(), model.initial_set().end());
    while (!frontier.empty()) {
        const std::string current = std::move(frontier.front());
        frontier.pop_front();
        auto it = model.transitions().lower_bound({current, std::string()});
        for (; it != model.transitions().end() && it->first.first == current; ++it) {
            if (it->first.second == model.identity_op()) continue;
            for (const Outcome& outcome : it->second) {
                // Undeclared targets are closure violations, not states.
                if (!model.states().contains(outcome.to)) continue;
                if (visited.insert(outcome.to).second) frontier.push_back(outcome.to);
            }
        }
    }
    return visited;
}

std::variant<StateSpace, ValidationReport> validate(const GameModel& model,
                                                    const ValidateOptions& options) {
    const std::size_t edges = model.edge_count();
    if (edges > options.max_edges) {
        throw ScaleLimitError(edges, options.max_edges);
    }

    ValidationReport report;
    for (const auto& [key, outcomes] : model.transitions()) {
        Rational sum = 0;
        for (const Outcome& outcome : outcomes) {
            sum += outcome.prob;
            if (!model.states().contains(outcome.to)) {
                report.closure_violations.push_back({key.first, key.second, outcome.to});
            }
        }
        if (sum != Rational(1)) {
            report.probability_errors.push_back({key.first, key.second, sum});
        }
    }

    const std::set<std::string> reachable = reachable_states(model);
    for (const auto& [id, state] : model.states()) {
        if (!reachable.contains(id)) report.unreachable_states.push_back(id);
    }

    if (!report.ok()) return report;

    StateSpace space;
    space.model_ = model;
    space.certificate_ = {model.states().size(), edges, true, true};
    space.state_order_.reserve(model.states().size());
    for (const auto& [id, state] : model.states()) {
        space.state_index_.emplace(id, space.state_order_.size());
        space.state_order_.push_back(id);
    }
    space.op_order_.reserve(model.operations().size());
    for (const auto& [id, op] : model.operations()) {
        space.op_index_.emplace(id, space.op_order_.size());
        space.op_order_.push_back(id);
    }
    space.adjacency_.resize(space.state_order_.size());
    for (const auto& [key, outcomes] : model.transitions()) {
        if (key.second == model.identity_op()) continue;
        auto& edges_out = space.adjacency_[space.state_index_.at(key.first)];
        const std::size_t op_idx = space.op_index_.at(key.second);
        for (const Outcome& outcome : outcomes) {
            edges_out.push_back({op_idx, space.state_index_.at(outcome.to), outcome.prob});
        }
    }
    for (auto& edges_out : space.adjacency_) {
        std::sort(edges_out.begin(), edges_out.end(),
                  [](const StateSpace::Edge& a, const StateSpace::Edge& b) {
                      return a.op != b.op ? a.op < b.op : a.to < b.to;
                  });
    }
    return space;
}

StepRecord step(const StateSpace& space, const std::string& state, const std::string& op,
                SplitMix64& rng) {
    const std::vector<Outcome>* outcomes = space.outcomes(state, op);
    if (outcomes == nullptr) throw InapplicableError(state, op);
    if (outcomes->size() == 1) {
        return {outcomes->front().to, outcomes->front().prob, std::nullopt};
    }
    const double drawn = rng.next_uniform();
    double cumulative = 0.0;
    for (const Outcome& outcome : *outcomes) {
        cumulative += outcome.prob.to_double();
        if (drawn < cumulative) return {outcome.to, outcome.prob, drawn};
    }
    // Floating cumsum can land a hair under 1; the last outcome absorbs it.
    return {outcomes->back().to, outcomes->back().prob, drawn};
}

}  // namespace ssi
