#include "ssi/path.hpp"

#include <algorithm>
#include <queue>

namespace ssi {

std::vector<std::string> EvolutionPath::op_sequence() const {
    std::vector<std::string> ops;
    ops.reserve(steps.size());
    for (const PathStep& step : steps) ops.push_back(step.op);
    return ops;
}

std::optional<std::string> path_violation(const StateSpace& space, const EvolutionPath& path) {
    if (!space.model().states().contains(path.start)) {
        return "start state '" + path.start + "' is not in the space";
    }
    std::string current = path.start;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const PathStep& step = path.steps[i];
        if (!space.model().operations().contains(step.op)) {
            return "step " + std::to_string(i) + " uses unknown operation '" + step.op + "'";
        }
        const std::vector<Outcome>* outcomes = space.outcomes(current, step.op);
        if (outcomes == nullptr) {
            return "step " + std::to_string(i) + ": operation '" + step.op +
                   "' is not applicable in state '" + current + "'";
        }
        const auto it = std::find_if(outcomes->begin(), outcomes->end(),
                                     [&](const Outcome& o) { return o.to == step.outcome; });
        if (it == outcomes->end()) {
            return "step " + std::to_string(i) + ": '" + step.outcome +
                   "' is not a declared outcome of (" + current + ", " + step.op + ")";
        }
        if (it->prob != step.prob) {
            return "step " + std::to_string(i) + ": recorded probability " + step.prob.str() +
                   " does not match declared " + it->prob.str();
        }
        current = step.outcome;
    }
    return std::nullopt;
}

EvolutionPath record_path(const StateSpace& space, const std::string& start,
                          const std::vector<std::string>& script, std::uint64_t seed) {
    if (!space.model().states().contains(start)) throw UnknownIdError(start);

    EvolutionPath path{start, {}, seed};
    SplitMix64 rng(seed);
    std::string current = start;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const std::string& op = script[i];
        if (!space.model().operations().contains(op)) throw UnknownIdError(op);
        if (!space.is_applicable(current, op)) {
            throw InapplicableAtError(i, current, op, std::move(path));
        }
        StepRecord record = step(space, current, op, rng);
        current = record.to;
        path.steps.push_back({op, std::move(record.to), record.prob, record.drawn});
    }
    return path;
}

bool StatePredicate::matches(const State& state) const {
    if (state_ids.contains(state.id)) return true;
    return std::any_of(labels.begin(), labels.end(),
                       [&](const std::string& label) { return state.has_label(label); });
}

AchievementResult check_achievement(const StateSpace& space, const EvolutionPath& path,
                                    const AchievementSpec& spec) {
    if (spec.allowed_ops.empty()) {
        throw Error("achievement '" + spec.id + "' allows no operations");
    }
    for (std::size_t i = 0; i <= path.size(); ++i) {
        if (!spec.initial_pred.matches(space.state_def(path.state_at(i)))) continue;
        for (std::size_t j = i; j <= path.size(); ++j) {
            if (j > i && !spec.allowed_ops.contains(path.steps[j - 1].op)) break;
            if (spec.finish_pred.matches(space.state_def(path.state_at(j)))) {
                return {true, AchievementWitness{i, j - i}};
            }
        }
    }
    return {false, std::nullopt};
}

namespace {

// Search label ordered by (cost, steps, op sequence, outcome sequence,
// start). Comparing op-index sequences is the same as comparing op-id
// sequences because op indices follow the sorted id order. Steps break
// cost ties first so that equal-cost labels always compare sequences of
// equal length, which keeps the order prefix-monotone under extension.
struct SearchLabel {
    Rational cost;
    std::size_t steps = 0;
    std::vector<std::size_t> ops;
    std::vector<std::size_t> outcomes;
    std::size_t start = 0;
    std::size_t state = 0;
};

bool label_greater(const SearchLabel& a, const SearchLabel& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    if (a.steps != b.steps) return a.steps > b.steps;
    if (a.ops != b.ops) return a.ops > b.ops;
    if (a.outcomes != b.outcomes) return a.outcomes > b.outcomes;
    if (a.start != b.start) return a.start > b.start;
    return a.state > b.state;
}

std::vector<std::size_t> resolve_indices(const StateSpace& space,
                                         const std::set<std::string>& ids) {
    std::vector<std::size_t> indices;
    indices.reserve(ids.size());
    for (const std::string& id : ids) {
        const auto idx = space.state_index(id);
        if (!idx) throw UnknownIdError(id);
        indices.push_back(*idx);
    }
    return indices;
}

}  // namespace

PathQueryResult speedrun(const StateSpace& space, const std::set<std::string>& from,
                         const std::set<std::string>& to,
                         const std::set<std::string>& forbidden,
                         const SpeedrunOptions& options) {
    for (const std::string& id : from) {
        if (forbidden.contains(id)) {
            throw Error("speedrun source state '" + id + "' is also forbidden");
        }
    }
    const std::vector<std::size_t> sources = resolve_indices(space, from);
    const std::vector<std::size_t> target_list = resolve_indices(space, to);
    const std::vector<std::size_t> forbidden_list = resolve_indices(space, forbidden);

    const std::size_t n = space.state_order().size();
    std::vector<bool> is_target(n, false);
    for (std::size_t t : target_list) is_target[t] = true;
    std::vector<bool> is_forbidden(n, false);
    for (std::size_t f : forbidden_list) is_forbidden[f] = true;

    PathQueryResult result;

    // A source already in the target set wins with the empty sequence.
    std::optional<std::size_t> trivial;
    for (std::size_t s : sources) {
        if (is_target[s] && (!trivial || s < *trivial)) trivial = s;
    }
    if (trivial) {
        result.found = true;
        result.path = {space.state_order()[*trivial], {}, std::nullopt};
        result.total_cost = 0;
        return result;
    }

    std::vector<Rational> op_costs;
    std::vector<bool> op_usable;
    op_costs.reserve(space.op_order().size());
    for (const std::string& op_id : space.op_order()) {
        const OperationDef& def = space.op_def(op_id);
        op_costs.push_back(def.cost);
        op_usable.push_back(!options.player_ops_only || def.kind == OpKind::Player);
    }

    std::priority_queue<SearchLabel, std::vector<SearchLabel>,
                        bool (*)(const SearchLabel&, const SearchLabel&)>
        queue(label_greater);
    std::vector<bool> settled(n, false);

    for (std::size_t s : sources) {
        queue.push({Rational(0), 0, {}, {}, s, s});
    }

    while (!queue.empty()) {
        SearchLabel label = queue.top();
        queue.pop();
        if (settled[label.state]) continue;
        settled[label.state] = true;
        result.visited_count += 1;

        if (is_target[label.state]) {
            result.found = true;
            result.total_cost = label.cost;
            EvolutionPath path{space.state_order()[label.start], {}, std::nullopt};
            std::size_t at = label.start;
            for (std::size_t k = 0; k < label.ops.size(); ++k) {
                const std::size_t op = label.ops[k];
                const std::size_t outcome = label.outcomes[k];
                Rational prob = 0;
                for (const StateSpace::Edge& edge : space.edges_from(at)) {
                    if (edge.op == op && edge.to == outcome) {
                        prob = edge.prob;
                        break;
                    }
                }
                path.steps.push_back({space.op_order()[op], space.state_order()[outcome], prob,
                                      std::nullopt});
                at = outcome;
            }
            result.path = std::move(path);
            return result;
        }

        for (const StateSpace::Edge& edge : space.edges_from(label.state)) {
            if (!op_usable[edge.op] || is_forbidden[edge.to] || settled[edge.to]) continue;
            SearchLabel next = label;
            next.cost += op_costs[edge.op];
            next.steps += 1;
            next.ops.push_back(edge.op);
            next.outcomes.push_back(edge.to);
            next.state = edge.to;
            queue.push(std::move(next));
        }
    }

    return result;  // found == false; visited_count says how much was explored
}

PathEnumerator::PathEnumerator(const StateSpace& space, const std::set<std::string>& from,
                               std::size_t max_steps, const EnumerateOptions& options)
    : space_(&space), max_steps_(max_steps) {
    if (max_steps > options.max_steps_cap) {
        throw CapExceededError(max_steps, options.max_steps_cap);
    }
    starts_ = resolve_indices(space, from);
    std::sort(starts_.begin(), starts_.end());
}

std::optional<EvolutionPath> PathEnumerator::next() {
    while (true) {
        if (stack_.empty()) {
            if (next_start_ >= starts_.size()) return std::nullopt;
            const std::size_t root = starts_[next_start_++];
            current_ = EvolutionPath{space_->state_order()[root], {}, std::nullopt};
            stack_.push_back({root, 0});
            return current_;
        }
        Frame& top = stack_.back();
        const auto& edges = space_->edges_from(top.state);
        if (current_.steps.size() < max_steps_ && top.next_edge < edges.size()) {
            const StateSpace::Edge& edge = edges[top.next_edge++];
            current_.steps.push_back({space_->op_order()[edge.op],
                                      space_->state_order()[edge.to], edge.prob, std::nullopt});
            stack_.push_back({edge.to, 0});
            return current_;
        }
        stack_.pop_back();
        if (!stack_.empty()) current_.steps.pop_back();
    }
}

}  // namespace ssi
