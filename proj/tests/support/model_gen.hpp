#pragma once

#include <optional>
#include <set>
#include <string>

#include "ssi/model.hpp"
#include "ssi/path.hpp"
#include "ssi/rng.hpp"
#include "ssi/state_space.hpp"

// Shared fixtures and test-only oracles. The oracles deliberately use
// naive algorithms (set fixpoints, exhaustive enumeration) so they stay
// independent of the library's search code.
namespace ssi::tests {

// The bundled coin model: 4 states, Drop lands Head/Tail at 49/100 each
// and Standing at 1/50. Validates.
GameModel coin_model();

// 4-state coin with the plain 50/50 drop; Standing has no incoming edge,
// so this one does not validate.
GameModel coin_model_standing_unreachable();

// 3-state coin (no Standing) with the 50/50 drop. Validates.
GameModel coin_model_simple();

// Programmatic twin of models/helldivers.ssi.
GameModel helldivers_model();

ValidationReport expect_report(const GameModel& model);
StateSpace expect_space(const GameModel& model);

struct GenOptions {
    std::size_t min_states = 2;
    std::size_t max_states = 6;
    std::size_t max_ops = 4;
    // Seed the transition plan with a random spanning tree from the
    // initial state so the model always validates.
    bool ensure_reachable = false;
};

GameModel random_model(SplitMix64& rng, const GenOptions& options = {});

// Reachability fixpoint: repeatedly unions one-step successors of the
// initial set (identity excluded, undeclared targets ignored).
std::set<std::string> brute_force_reachable(const GameModel& model);

// Minimum cost over every enumerated path from `from` that ends in `to`
// while never visiting `forbidden`; bounded by max_steps. Non-negative
// costs make some minimum-cost path simple, so max_steps = number of
// states is enough to find the true minimum.
std::optional<Rational> min_cost_by_enumeration(const StateSpace& space,
                                                const std::set<std::string>& from,
                                                const std::set<std::string>& to,
                                                const std::set<std::string>& forbidden,
                                                std::size_t max_steps);

}  // namespace ssi::tests
