#include "ssi/model.hpp"

#include <algorithm>
#include <cctype>

namespace ssi {

namespace {

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    const auto head = static_cast<unsigned char>(id.front());
    if (!std::isalnum(head) && head != '_') return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == '+';
    });
}

void require_valid_id(std::string_view id, const char* what) {
    if (!valid_id(id)) {
        throw ModelError(ModelError::Kind::InvalidId, std::string(id),
                         std::string(what) + " id '" + std::string(id) +
                             "' is empty or contains unsupported characters");
    }
}

}  // namespace

std::string_view to_string(OpKind kind) {
    switch (kind) {
        case OpKind::Player: return "player";
        case OpKind::Game: return "game";
        case OpKind::Identity: return "identity";
    }
    return "player";
}

std::optional<OpKind> op_kind_from_string(std::string_view text) {
    if (text == "player") return OpKind::Player;
    if (text == "game") return OpKind::Game;
    if (text == "identity") return OpKind::Identity;
    return std::nullopt;
}

const std::vector<Outcome>* GameModel::outcomes_of(const std::string& from,
                                                   const std::string& op) const {
    auto it = transitions_.find({from, op});
    return it == transitions_.end() ? nullptr : &it->second;
}

std::size_t GameModel::edge_count() const {
    std::size_t edges = 0;
    for (const auto& [key, outcomes] : transitions_) {
        if (key.second != identity_op_) edges += outcomes.size();
    }
    return edges;
}

GameModel build_model(std::vector<State> states, std::vector<OperationDef> operations,
                      std::vector<Transition> transitions, std::vector<std::string> initial,
                      std::vector<std::string> finals) {
    GameModel model;

    for (auto& state : states) {
        require_valid_id(state.id, "state");
        for (const auto& label : state.labels) require_valid_id(label, "label");
        auto [it, inserted] = model.states_.emplace(state.id, std::move(state));
        if (!inserted) {
            throw ModelError(ModelError::Kind::DuplicateId, it->first,
                             "duplicate state id '" + it->first + "'");
        }
    }

    for (auto& op : operations) {
        require_valid_id(op.id, "operation");
        if (op.cost.is_negative()) {
            throw ModelError(ModelError::Kind::InvalidCost, op.id,
                             "operation '" + op.id + "' has negative cost " + op.cost.str());
        }
        if (op.kind == OpKind::Identity) {
            if (!model.identity_op_.empty()) {
                throw ModelError(ModelError::Kind::InvalidIdentity, op.id,
                                 "more than one identity operation ('" + model.identity_op_ +
                                     "', '" + op.id + "')");
            }
            if (!op.cost.is_zero()) {
                throw ModelError(ModelError::Kind::InvalidIdentity, op.id,
                                 "identity operation '" + op.id + "' must have cost 0, got " +
                                     op.cost.str());
            }
            model.identity_op_ = op.id;
        }
        auto [it, inserted] = model.operations_.emplace(op.id, std::move(op));
        if (!inserted) {
            throw ModelError(ModelError::Kind::DuplicateId, it->first,
                             "duplicate operation id '" + it->first + "'");
        }
    }

    if (model.identity_op_.empty()) {
        const std::string id{kIdentityOpId};
        OperationDef identity{id, OpKind::Identity, 0};
        auto [it, inserted] = model.operations_.emplace(id, std::move(identity));
        if (!inserted) {
            throw ModelError(ModelError::Kind::DuplicateId, id,
                             "operation id '" + id +
                                 "' is reserved for the synthesized identity operation; declare "
                                 "it with kind=identity or rename it");
        }
        model.identity_op_ = id;
    }

    for (auto& transition : transitions) {
        if (!model.states_.contains(transition.from)) {
            throw ModelError(ModelError::Kind::DanglingReference, transition.from,
                             "transition source references undeclared state '" + transition.from +
                                 "'");
        }
        if (!model.operations_.contains(transition.op)) {
            throw ModelError(ModelError::Kind::DanglingReference, transition.op,
                             "transition references undeclared operation '" + transition.op +
                                 "'");
        }
        if (transition.outcomes.empty()) {
            throw ModelError(ModelError::Kind::InvalidProbability,
                             transition.from + "/" + transition.op,
                             "transition (" + transition.from + ", " + transition.op +
                                 ") has no outcomes");
        }
        const bool is_identity = transition.op == model.identity_op_;
        if (is_identity) {
            const bool self_loop = transition.outcomes.size() == 1 &&
                                   transition.outcomes.front().to == transition.from &&
                                   transition.outcomes.front().prob == Rational(1);
            if (!self_loop) {
                throw ModelError(ModelError::Kind::InvalidIdentity, transition.from,
                                 "identity transition from '" + transition.from +
                                     "' must be the self-loop with probability 1");
            }
        }
        std::sort(transition.outcomes.begin(), transition.outcomes.end(),
                  [](const Outcome& a, const Outcome& b) { return a.to < b.to; });
        for (std::size_t i = 0; i < transition.outcomes.size(); ++i) {
            const Outcome& outcome = transition.outcomes[i];
            require_valid_id(outcome.to, "outcome state");
            if (outcome.prob <= Rational(0) || outcome.prob > Rational(1)) {
                throw ModelError(ModelError::Kind::InvalidProbability,
                                 transition.from + "/" + transition.op,
                                 "outcome (" + transition.from + ", " + transition.op + ") -> " +
                                     outcome.to + " has probability " + outcome.prob.str() +
                                     " outside (0, 1]");
            }
            if (i > 0 && transition.outcomes[i - 1].to == outcome.to) {
                throw ModelError(ModelError::Kind::DuplicateOutcome, outcome.to,
                                 "transition (" + transition.from + ", " + transition.op +
                                     ") lists outcome state '" + outcome.to + "' twice");
            }
        }
        TransitionKey key{transition.from, transition.op};
        auto [it, inserted] = model.transitions_.emplace(key, std::move(transition.outcomes));
        if (!inserted) {
            throw ModelError(ModelError::Kind::DuplicateTransition,
                             key.first + "/" + key.second,
                             "duplicate transition for (" + key.first + ", " + key.second + ")");
        }
    }

    // Every state carries the identity self-loop.
    for (const auto& [id, state] : model.states_) {
        TransitionKey key{id, model.identity_op_};
        if (!model.transitions_.contains(key)) {
            model.transitions_.emplace(key, std::vector<Outcome>{{id, 1}});
        }
    }

    if (initial.empty()) {
        throw ModelError(ModelError::Kind::EmptyInitialSet, "",
                         "initial state set must not be empty");
    }
    for (auto& id : initial) {
        if (!model.states_.contains(id)) {
            throw ModelError(ModelError::Kind::DanglingReference, id,
                             "initial set references undeclared state '" + id + "'");
        }
        model.initial_.insert(std::move(id));
    }
    for (auto& id : finals) {
        if (!model.states_.contains(id)) {
            throw ModelError(ModelError::Kind::DanglingReference, id,
                             "final set references undeclared state '" + id + "'");
        }
        model.final_.insert(std::move(id));
    }

    return model;
}

}  // namespace ssi
