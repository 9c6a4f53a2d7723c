#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssi/state_space.hpp"

namespace ssi {

struct PathStep {
    std::string op;
    std::string outcome;
    Rational prob;                // declared probability of this outcome
    std::optional<double> drawn;  // uniform consumed when sampled; absent for
                                  // possibilistic or deterministic steps

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

// An alternating state/operation sequence. Simulated paths carry the seed
// that reproduces them; hand-authored and query-produced paths do not.
struct EvolutionPath {
    std::string start;
    std::vector<PathStep> steps;
    std::optional<std::uint64_t> seed;

    std::size_t size() const { return steps.size(); }

    // State after `index` steps; index ranges over [0, size()].
    const std::string& state_at(std::size_t index) const {
        return index == 0 ? start : steps[index - 1].outcome;
    }

    const std::string& last_state() const { return state_at(steps.size()); }

    std::vector<std::string> op_sequence() const;

    friend bool operator==(const EvolutionPath&, const EvolutionPath&) = default;
};

// nullopt when every consecutive pair of the path is a declared transition
// with a positive-probability outcome in `space`; otherwise a description
// of the first violation.
std::optional<std::string> path_violation(const StateSpace& space, const EvolutionPath& path);

// record_path failure: index of the offending script entry plus the
// prefix that did apply.
class InapplicableAtError : public InapplicableError {
public:
    InapplicableAtError(std::size_t index, std::string state, std::string op,
                        EvolutionPath prefix)
        : InapplicableError(std::move(state), std::move(op)),
          index_(index),
          prefix_(std::move(prefix)) {}

    std::size_t index() const { return index_; }
    const EvolutionPath& prefix() const { return prefix_; }

private:
    std::size_t index_;
    EvolutionPath prefix_;
};

// Applies `script` from `start`, sampling stochastic outcomes from a
// stream seeded with `seed`. Equal arguments reproduce the path
// bit-for-bit. Throws InapplicableAtError at the first script entry with
// no transition.
EvolutionPath record_path(const StateSpace& space, const std::string& start,
                          const std::vector<std::string>& script, std::uint64_t seed);

// Matches a state by id membership or by carrying one of the labels.
struct StatePredicate {
    std::set<std::string> state_ids;
    std::set<std::string> labels;

    bool empty() const { return state_ids.empty() && labels.empty(); }
    bool matches(const State& state) const;
};

// Completion logic for an achievement: a subpath must start in a state
// matching initial_pred, use only allowed_ops, and end in a state
// matching finish_pred.
struct AchievementSpec {
    std::string id;
    StatePredicate initial_pred;
    std::set<std::string> allowed_ops;
    StatePredicate finish_pred;
};

struct AchievementWitness {
    std::size_t start_index;  // position in the path's state sequence
    std::size_t length;       // number of steps; 0 is a legal witness

    friend bool operator==(const AchievementWitness&, const AchievementWitness&) = default;
};

struct AchievementResult {
    bool achieved = false;
    std::optional<AchievementWitness> witness;
};

// Scans for the earliest-starting, then shortest, contiguous subpath
// satisfying the spec. Appending steps to a path never un-achieves it.
AchievementResult check_achievement(const StateSpace& space, const EvolutionPath& path,
                                    const AchievementSpec& spec);

struct PathQueryResult {
    bool found = false;
    EvolutionPath path;        // possibilistic: each step uses a prob>0 outcome
    Rational total_cost = 0;
    std::size_t visited_count = 0;  // states settled by the search
};

struct SpeedrunOptions {
    // Restrict the possibilistic graph to player operations, i.e. paths a
    // player can steer towards without game-driven transitions.
    bool player_ops_only = false;
};

// Least-total-cost operation sequence from any state of `from` to any
// state of `to` over the possibilistic graph (every positive-probability
// outcome is an edge, identity excluded), never visiting `forbidden`.
// Ties break by fewest steps, then lexicographic op-id sequence. With the
// default unit costs this degenerates to breadth-first order.
PathQueryResult speedrun(const StateSpace& space, const std::set<std::string>& from,
                         const std::set<std::string>& to,
                         const std::set<std::string>& forbidden = {},
                         const SpeedrunOptions& options = {});

struct EnumerateOptions {
    std::size_t max_steps_cap = 12;
};

// Streams every bounded evolution path (cycles allowed) out of `from` in
// lexicographic order: by start state, then step by step by (op, outcome),
// with each path emitted before its extensions. Identity edges are not
// enumerated. Asking for more than options.max_steps_cap steps throws
// CapExceededError.
class PathEnumerator {
public:
    PathEnumerator(const StateSpace& space, const std::set<std::string>& from,
                   std::size_t max_steps, const EnumerateOptions& options = {});

    // Next path in order, or nullopt when exhausted.
    std::optional<EvolutionPath> next();

private:
    struct Frame {
        std::size_t state;
        std::size_t next_edge;
    };

    const StateSpace* space_;
    std::vector<std::size_t> starts_;
    std::size_t next_start_ = 0;
    std::size_t max_steps_;
    std::vector<Frame> stack_;
    EvolutionPath current_;
    bool emit_current_ = false;
};

}  // namespace ssi
