// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each, nonzero exit when anything fails. Everything runs offline and
// finishes in well under a minute.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ssi/path.hpp"
#include "ssi/quantum.hpp"
#include "ssi/simulate.hpp"
#include "ssi/state_space.hpp"
#include "ssi/text_format.hpp"
#include "support/model_gen.hpp"
#include "support/proc.hpp"

using namespace ssi;

namespace {

const std::string kCli = SSI_CLI_PATH;
const std::filesystem::path kModels = SSI_MODELS_DIR;

struct Criterion {
    int number;
    std::string title;
    std::function<void(std::ostringstream&)> run;  // throws or writes to fail
};

// Collects failures; empty means pass.
#define EXPECT(cond, message)                                     \
    do {                                                          \
        if (!(cond)) fail << "    " << (message) << "\n";         \
    } while (0)

GameModel load_coin() {
    return io::parse_model(io::read_file(kModels / "coin.ssi"));
}

StateSpace coin_space() {
    return tests::expect_space(load_coin());
}

// ---- 1: quantum exactness ------------------------------------------------

void criterion_quantum_exactness(std::ostringstream& fail) {
    using namespace ssi::qct;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    const Ket h0 = apply_gate(Gate::hadamard(), Ket::zero());
    EXPECT(std::abs(h0.amp0() - Complex(inv_sqrt2)) <= 1e-9, "H|0> first amplitude");
    EXPECT(std::abs(h0.amp1() - Complex(inv_sqrt2)) <= 1e-9, "H|0> second amplitude");

    const Ket x0 = apply_gate(Gate::pauli_x(), Ket::zero());
    EXPECT(std::abs(x0.amp0()) <= 1e-9 && std::abs(x0.amp1() - Complex(1.0)) <= 1e-9,
           "X|0> = |1>");

    EXPECT((Gate::hadamard() * Gate::hadamard()).approx_equal(Gate::identity(), 1e-9),
           "H*H = I");
    EXPECT((Gate::hadamard() * Gate::hadamard().adjoint()).approx_equal(Gate::identity(), 1e-9),
           "H unitary");
    EXPECT((Gate::pauli_x() * Gate::pauli_x().adjoint()).approx_equal(Gate::identity(), 1e-9),
           "X unitary");
    EXPECT((Gate::pauli_x() * Gate::pauli_x()).approx_equal(Gate::identity(), 1e-9), "X*X = I");
}

// ---- 2: Born-rule statistics ----------------------------------------------

void criterion_born_statistics(std::ostringstream& fail) {
    for (const std::uint64_t seed : {42ULL, 7ULL, 20260810ULL}) {
        const qct::QctRun run = qct::run_qct(10000, seed);
        const double freq = run.head_frequency().to_double();
        std::ostringstream what;
        what << "seed " << seed << ": head frequency " << freq << " outside 0.5 +/- 0.02";
        EXPECT(std::abs(freq - 0.5) <= 0.02, what.str());
    }
}

// ---- 3: correspondence ----------------------------------------------------

void criterion_correspondence(std::ostringstream& fail) {
    const auto& table = qct::correspondence_table();
    EXPECT(table.size() == 5, "table has exactly five rows");
    const char* expected[5][3] = {
        {"Initial State", "|0>", "Head"},
        {"Action", "H", "Toss"},
        {"Intermediate State", "(1/sqrt(2))(|0>+|1>)", "Rolling"},
        {"Process", "Measure", "Drop"},
        {"Final State", "|1>", "Tail"},
    };
    for (int i = 0; i < 5; ++i) {
        EXPECT(table[i].step == expected[i][0] && table[i].quantum == expected[i][1] &&
                   table[i].classical == expected[i][2],
               std::string("row '") + expected[i][0] + "' matches");
    }

    const StateSpace coin = coin_space();
    const qct::QctRun run = qct::run_qct(100, 314159);
    int bad = 0;
    for (const qct::QctTrialTrace& trace : run.traces) {
        EvolutionPath path{"Head", {}, std::nullopt};
        path.steps.push_back({"Toss", "Rolling", 1, std::nullopt});
        path.steps.push_back(
            {"Drop", std::string(qct::to_string(trace.coin_face)), {49, 100}, std::nullopt});
        if (path_violation(coin, path)) ++bad;
    }
    EXPECT(bad == 0, std::to_string(bad) + " of 100 trial traces failed to map onto the coin");
}

// ---- 4: axioms on the coin model -------------------------------------------

void criterion_coin_axioms(std::ostringstream& fail) {
    const auto cli = tests::run_command(kCli + " validate " + (kModels / "coin.ssi").string());
    EXPECT(cli.exit_code == 0, "validate coin.ssi exits 0");
    EXPECT(cli.out == "OK: closure and reachability hold\n", "validate coin.ssi prints OK");

    // deleting the Toss transition strands Rolling and its successors
    std::string text = io::read_file(kModels / "coin.ssi");
    std::string tossless;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("Toss ->") == std::string::npos) tossless += line + "\n";
    }
    const ValidationReport unreachable_report =
        tests::expect_report(io::parse_model(tossless));
    EXPECT(unreachable_report.closure_violations.empty(), "tossless coin: no closure issue");
    EXPECT(unreachable_report.probability_errors.empty(), "tossless coin: no probability issue");
    EXPECT(unreachable_report.unreachable_states ==
               std::vector<std::string>({"Head", "Rolling", "Standing"}),
           "tossless coin: exactly Head, Rolling, Standing unreachable");

    // redirecting Drop at an undeclared state is a closure violation
    std::string redirected = text;
    const std::string needle = "Standing:1/50";
    redirected.replace(redirected.find(needle), needle.size(), "Edge:1/50");
    const ValidationReport closure_report =
        tests::expect_report(io::parse_model(redirected));
    EXPECT(closure_report.closure_violations ==
               std::vector<ClosureViolation>({{"Rolling", "Drop", "Edge"}}),
           "redirected coin: exactly (Rolling, Drop, Edge) violates closure");
    EXPECT(closure_report.unreachable_states == std::vector<std::string>({"Standing"}),
           "redirected coin: Standing loses its incoming edge");
}

// ---- 5 and 6: oracle equivalence -------------------------------------------

std::vector<GameModel> generated_models() {
    std::vector<GameModel> models;
    SplitMix64 rng(0xACCE57);
    for (int i = 0; i < 200; ++i) {
        models.push_back(tests::random_model(rng, {.ensure_reachable = i % 3 != 0}));
    }
    return models;
}

void criterion_reachability_oracle(std::ostringstream& fail) {
    int mismatches = 0;
    int checked = 0;
    for (const GameModel& model : generated_models()) {
        const std::set<std::string> fast = reachable_states(model);
        const std::set<std::string> slow = tests::brute_force_reachable(model);
        if (fast != slow) ++mismatches;
        // validate() must report exactly the complement
        auto result = validate(model);
        std::set<std::string> unreachable;
        if (auto* report = std::get_if<ValidationReport>(&result)) {
            unreachable.insert(report->unreachable_states.begin(),
                               report->unreachable_states.end());
        }
        for (const auto& [id, state] : model.states()) {
            const bool in_fast = fast.contains(id);
            const bool reported = unreachable.contains(id);
            if (in_fast == reported) {  // must be reachable xor reported-unreachable
                ++mismatches;
                break;
            }
        }
        ++checked;
    }
    EXPECT(checked == 200, "200 models generated");
    EXPECT(mismatches == 0,
           std::to_string(mismatches) + " reachability mismatches against brute force");
}

void criterion_speedrun_oracle(std::ostringstream& fail) {
    int mismatches = 0;
    int compared = 0;
    SplitMix64 rng(0x5EED);
    for (const GameModel& model : generated_models()) {
        auto result = validate(model);
        auto* space = std::get_if<StateSpace>(&result);
        if (space == nullptr) continue;  // reachability oracle covers these
        const std::size_t n = space->state_order().size();
        const std::set<std::string> to = {space->state_order()[rng.next_index(n)]};
        const PathQueryResult fast = speedrun(*space, space->initial_set(), to);
        const auto oracle =
            tests::min_cost_by_enumeration(*space, space->initial_set(), to, {}, n);
        if (fast.found != oracle.has_value() ||
            (fast.found && fast.total_cost != *oracle)) {
            ++mismatches;
        }
        ++compared;
    }
    EXPECT(compared >= 100, "at least 100 generated models validate (got " +
                                std::to_string(compared) + ")");
    EXPECT(mismatches == 0,
           std::to_string(mismatches) + " cost mismatches against path enumeration");

    const StateSpace coin = coin_space();
    const PathQueryResult direct = speedrun(coin, {"Tail"}, {"Head"});
    EXPECT(direct.found && direct.total_cost == Rational(2), "coin Tail -> Head costs exactly 2");
    const PathQueryResult blocked = speedrun(coin, {"Tail"}, {"Head"}, {"Rolling"});
    EXPECT(!blocked.found, "coin Tail -> Head with Rolling forbidden has no path");
}

// ---- 7: achievement logic ---------------------------------------------------

void criterion_achievements(std::ostringstream& fail) {
    const StateSpace space = tests::expect_space(
        io::parse_model(io::read_file(kModels / "helldivers.ssi")));
    const AchievementSpec spec = io::parse_achievement(
        io::read_file(kModels / "eat-this.spec"), "eat-this");

    EvolutionPath conforming{"patrol", {}, std::nullopt};
    conforming.steps.push_back({"advance", "engaged", 1, std::nullopt});
    conforming.steps.push_back({"fire-rifle", "engaged", {7, 10}, std::nullopt});
    conforming.steps.push_back({"advance", "close-range", 1, std::nullopt});
    conforming.steps.push_back({"bug-attack", "close-range", {4, 5}, std::nullopt});
    conforming.steps.push_back({"fire-shotgun", "bug-dead", {9, 10}, std::nullopt});
    EXPECT(!path_violation(space, conforming), "conforming trace is a legal path");

    const AchievementResult won = check_achievement(space, conforming, spec);
    EXPECT(won.achieved, "conforming 5-step trace achieves");
    EXPECT(won.witness && won.witness->start_index == 4 && won.witness->length == 1,
           "witness is the single shotgun step");

    // witness minimality by brute force: no satisfying subpath starts
    // earlier, and none at the same start is shorter
    bool minimal = true;
    for (std::size_t i = 0; i <= conforming.size() && minimal; ++i) {
        for (std::size_t len = 0; i + len <= conforming.size() && minimal; ++len) {
            if (!spec.initial_pred.matches(space.state_def(conforming.state_at(i)))) continue;
            if (!spec.finish_pred.matches(space.state_def(conforming.state_at(i + len))))
                continue;
            bool ops_ok = true;
            for (std::size_t k = 0; k < len; ++k) {
                if (!spec.allowed_ops.contains(conforming.steps[i + k].op)) ops_ok = false;
            }
            if (!ops_ok) continue;
            if (i < won.witness->start_index ||
                (i == won.witness->start_index && len < won.witness->length)) {
                minimal = false;
            }
        }
    }
    EXPECT(minimal, "no earlier or shorter satisfying subpath exists");

    EvolutionPath wrong_op = conforming;
    wrong_op.steps[4] = {"fire-rifle", "bug-dead", {1, 2}, std::nullopt};
    EXPECT(!path_violation(space, wrong_op), "wrong-op mutation is a legal path");
    EXPECT(!check_achievement(space, wrong_op, spec).achieved, "rifle kill does not count");

    EvolutionPath missed = conforming;
    missed.steps[4] = {"fire-shotgun", "close-range", {1, 10}, std::nullopt};
    EXPECT(!path_violation(space, missed), "missed-finish mutation is a legal path");
    EXPECT(!check_achievement(space, missed, spec).achieved, "missing the kill does not count");

    EvolutionPath never_close{"patrol", {}, std::nullopt};
    never_close.steps.push_back({"advance", "engaged", 1, std::nullopt});
    never_close.steps.push_back({"fire-rifle", "bug-dead", {3, 10}, std::nullopt});
    EXPECT(!path_violation(space, never_close), "never-close mutation is a legal path");
    EXPECT(!check_achievement(space, never_close, spec).achieved,
           "a kill from range never matches the initial predicate");
}

// ---- 8: determinism ----------------------------------------------------------

void criterion_determinism(std::ostringstream& fail) {
    const std::string cmd =
        kCli + " simulate " + (kModels / "coin.ssi").string() + " --random --seed 7";
    const auto first = tests::run_command(cmd);
    const auto second = tests::run_command(cmd);
    EXPECT(first.exit_code == 0, "simulate exits 0");
    EXPECT(!first.out.empty() && first.out == second.out,
           "two runs with seed 7 are byte-identical");

    const io::TraceDocument doc = io::parse_trace(first.out);
    const StateSpace coin = coin_space();
    const io::ReplayResult replay = io::replay_trace(coin, doc);
    EXPECT(replay.ok, "trace replays against its model hash: " + replay.message);
    EXPECT(doc.model_hash == io::model_hash(coin.model()), "embedded hash matches the model");
}

// ---- 9: round-trip -----------------------------------------------------------

void criterion_round_trip(std::ostringstream& fail) {
    SplitMix64 rng(0x207F);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        const GameModel model = tests::random_model(rng, {.ensure_reachable = i % 2 == 0});
        const std::string first = io::serialize_model(model);
        const GameModel reparsed = io::parse_model(first);
        const std::string second = io::serialize_model(reparsed);
        if (!(reparsed == model) || first != second) ++bad;
    }
    EXPECT(bad == 0, std::to_string(bad) + " of 100 models failed the round trip");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "quantum exactness (H|0>, X|0>, unitarity, involutions)",
         criterion_quantum_exactness},
        {2, "Born-rule statistics at n=10000 for three seeds", criterion_born_statistics},
        {3, "correspondence table and trial-to-coin-path mapping", criterion_correspondence},
        {4, "closure and reachability diagnostics on the coin model", criterion_coin_axioms},
        {5, "reachability equals brute-force closure on 200 random models",
         criterion_reachability_oracle},
        {6, "speedrun cost equals enumeration minimum; coin checks",
         criterion_speedrun_oracle},
        {7, "achievement completion logic and witness minimality", criterion_achievements},
        {8, "seeded simulation determinism and trace replay", criterion_determinism},
        {9, "serialize/parse/serialize byte-stability on 100 models", criterion_round_trip},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::ostringstream fail;
        std::string thrown;
        try {
            criterion.run(fail);
        } catch (const std::exception& e) {
            thrown = e.what();
        }
        const bool ok = fail.str().empty() && thrown.empty();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
                  << criterion.title << "\n";
        if (!ok) {
            ++failures;
            if (!thrown.empty()) std::cout << "    threw: " << thrown << "\n";
            std::cout << fail.str();
        }
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
