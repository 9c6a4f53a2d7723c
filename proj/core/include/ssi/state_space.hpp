#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssi/model.hpp"
#include "ssi/rng.hpp"

namespace ssi {

struct ClosureViolation {
    std::string from;
    std::string op;
    std::string target;  // the undeclared outcome state

    friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
    friend auto operator<=>(const ClosureViolation&, const ClosureViolation&) = default;
};

struct ProbabilityError {
    std::string from;
    std::string op;
    Rational sum;

    friend bool operator==(const ProbabilityError&, const ProbabilityError&) = default;
};

// Every violation found during validation, not just the first. An empty
// report means the model is a state space.
struct ValidationReport {
    std::vector<ClosureViolation> closure_violations;
    std::vector<std::string> unreachable_states;
    std::vector<ProbabilityError> probability_errors;

    bool ok() const {
        return closure_violations.empty() && unreachable_states.empty() &&
               probability_errors.empty();
    }

    // One diagnostic per line, stable across runs.
    std::string to_string() const;
};

struct ValidateOptions {
    // Refuse models with more possibilistic edges than this instead of
    // trying to index them.
    std::size_t max_edges = 10'000'000;
};

struct ValidationCertificate {
    std::size_t state_count = 0;
    std::size_t edge_count = 0;
    bool closure_verified = false;
    bool reachability_verified = false;
};

// A validated, immutable state space: the declared model plus the
// certificate and a dense adjacency index. Safe to share across threads.
class StateSpace {
public:
    const GameModel& model() const { return model_; }
    const ValidationCertificate& certificate() const { return certificate_; }
    const std::string& identity_op() const { return model_.identity_op(); }
    const std::set<std::string>& initial_set() const { return model_.initial_set(); }
    const std::set<std::string>& final_set() const { return model_.final_set(); }

    // Sorted id vectors; indices below refer to positions in these.
    const std::vector<std::string>& state_order() const { return state_order_; }
    const std::vector<std::string>& op_order() const { return op_order_; }

    std::optional<std::size_t> state_index(std::string_view id) const;
    std::optional<std::size_t> op_index(std::string_view id) const;

    const State& state_def(const std::string& id) const;
    const OperationDef& op_def(const std::string& id) const;

    bool is_final(const std::string& id) const { return model_.final_set().contains(id); }

    // The declared outcome distribution, or nullptr when (state, op) has
    // no transition. Unknown ids throw UnknownIdError. The identity
    // operation is applicable everywhere and yields {state: 1}.
    const std::vector<Outcome>* outcomes(const std::string& state, const std::string& op) const;

    bool is_applicable(const std::string& state, const std::string& op) const {
        return outcomes(state, op) != nullptr;
    }

    // Sorted ids of operations applicable in `state`.
    std::vector<std::string> applicable_ops(const std::string& state,
                                            bool include_identity = false) const;

    // Dense possibilistic graph over non-identity transitions, sorted by
    // (op index, target index) within each source state.
    struct Edge {
        std::size_t op;
        std::size_t to;
        Rational prob;
    };
    const std::vector<Edge>& edges_from(std::size_t state_idx) const {
        return adjacency_[state_idx];
    }

private:
    friend std::variant<StateSpace, ValidationReport> validate(const GameModel&,
                                                               const ValidateOptions&);

    GameModel model_;
    ValidationCertificate certificate_;
    std::vector<std::string> state_order_;
    std::vector<std::string> op_order_;
    std::map<std::string, std::size_t, std::less<>> state_index_;
    std::map<std::string, std::size_t, std::less<>> op_index_;
    std::vector<std::vector<Edge>> adjacency_;
};

// Checks the two state-space axioms and exact probability sums.
//
// Closure is checked per (from, op) pair: every declared outcome state
// must itself be declared, which by induction covers operation sequences
// of any length. Reachability is a breadth-first traversal from the
// initial set over positive-probability edges, identity excluded; states
// the traversal misses are reported. Returns the immutable StateSpace on
// success, the full ValidationReport on failure. Throws ScaleLimitError
// when the model exceeds options.max_edges.
std::variant<StateSpace, ValidationReport> validate(const GameModel& model,
                                                    const ValidateOptions& options = {});

// The reachable subset of the declared states (same traversal validate
// uses); usable on models that do not validate.
std::set<std::string> reachable_states(const GameModel& model);

// One sampled application of `op` in `state`. Only distributions with
// more than one outcome consume a draw from the stream, so inserting
// identity or other deterministic steps never shifts later outcomes.
struct StepRecord {
    std::string to;
    Rational prob;                // declared probability of the sampled outcome
    std::optional<double> drawn;  // uniform actually consumed, if any
};

StepRecord step(const StateSpace& space, const std::string& state, const std::string& op,
                SplitMix64& rng);

}  // namespace ssi
