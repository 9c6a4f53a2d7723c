#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssi/errors.hpp"
#include "ssi/rational.hpp"

namespace ssi {

// A state is an atomic, uniquely named description of a game at an
// instant. Labels are free-form tags ("dead", "end", ...) used by
// predicates and by label queries in documents and on the command line.
struct State {
    std::string id;
    std::set<std::string> labels;

    bool has_label(std::string_view label) const {
        return labels.find(std::string(label)) != labels.end();
    }

    friend bool operator==(const State&, const State&) = default;
};

enum class OpKind { Player, Game, Identity };

std::string_view to_string(OpKind kind);
std::optional<OpKind> op_kind_from_string(std::string_view text);

// An operation is a named way to change states. Cost is the path weight
// used by least-cost queries; the identity operation always costs 0.
struct OperationDef {
    std::string id;
    OpKind kind = OpKind::Player;
    Rational cost = 1;

    friend bool operator==(const OperationDef&, const OperationDef&) = default;
};

// One possible result of applying an operation in a state.
struct Outcome {
    std::string to;
    Rational prob;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

// The stochastic transition for one (from, op) pair. Outcome probabilities
// must sum to exactly 1 for the pair to validate; each probability lies in
// (0, 1] and targets are distinct.
struct Transition {
    std::string from;
    std::string op;
    std::vector<Outcome> outcomes;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Id of the synthesized identity operation. A model may instead declare
// its own operation with kind=identity under any id.
inline constexpr std::string_view kIdentityOpId = "identity";

using TransitionKey = std::pair<std::string, std::string>;  // (from, op)
using TransitionMap = std::map<TransitionKey, std::vector<Outcome>>;

// A declared (not yet validated) game model. Instances come out of
// build_model(), which normalizes collections into sorted maps, checks
// structural invariants, and synthesizes the identity operation plus one
// identity self-loop per state. Whether the model satisfies closure and
// reachability is decided later by validate().
class GameModel {
public:
    const std::map<std::string, State>& states() const { return states_; }
    const std::map<std::string, OperationDef>& operations() const { return operations_; }
    const TransitionMap& transitions() const { return transitions_; }
    const std::set<std::string>& initial_set() const { return initial_; }
    const std::set<std::string>& final_set() const { return final_; }
    const std::string& identity_op() const { return identity_op_; }

    const std::vector<Outcome>* outcomes_of(const std::string& from, const std::string& op) const;

    // Possibilistic edge count over non-identity transitions; the scale
    // guard in validate() is expressed in these units.
    std::size_t edge_count() const;

    friend bool operator==(const GameModel& lhs, const GameModel& rhs) {
        return lhs.states_ == rhs.states_ && lhs.operations_ == rhs.operations_ &&
               lhs.transitions_ == rhs.transitions_ && lhs.initial_ == rhs.initial_ &&
               lhs.final_ == rhs.final_;
    }

private:
    friend GameModel build_model(std::vector<State>, std::vector<OperationDef>,
                                 std::vector<Transition>, std::vector<std::string>,
                                 std::vector<std::string>);

    std::map<std::string, State> states_;
    std::map<std::string, OperationDef> operations_;
    TransitionMap transitions_;
    std::set<std::string> initial_;
    std::set<std::string> final_;
    std::string identity_op_;
};

// Assembles a GameModel.
//
// Enforced here: well-formed ids; unique ids per kind; at most one
// transition per (from, op); distinct outcome targets with probabilities
// in (0, 1]; declared `from`/`op`/initial/final references resolve;
// non-empty initial set; identity semantics (exactly one identity
// operation, cost 0, only self-loop transitions). Outcome targets are
// deliberately NOT resolved here — undeclared targets are the closure
// violations that validate() reports.
GameModel build_model(std::vector<State> states, std::vector<OperationDef> operations,
                      std::vector<Transition> transitions, std::vector<std::string> initial,
                      std::vector<std::string> finals);

}  // namespace ssi
