// Command-line front end: validate and explore .ssi models, run seeded
// simulations, query speedruns and achievements, and toss the quantum coin.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ssi/path.hpp"
#include "ssi/quantum.hpp"
#include "ssi/simulate.hpp"
#include "ssi/state_space.hpp"
#include "ssi/text_format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // valid input, negative answer
constexpr int kExitError = 2;     // usage, file or document errors
constexpr int kExitNoPath = 4;

ssi::ValidateOptions validate_options_from_env() {
    ssi::ValidateOptions options;
    if (const char* raw = std::getenv("SSI_MAX_EDGES")) {
        try {
            std::size_t consumed = 0;
            const unsigned long long value = std::stoull(raw, &consumed, 10);
            if (consumed != std::string(raw).size()) throw std::invalid_argument(raw);
            options.max_edges = static_cast<std::size_t>(value);
        } catch (const std::exception&) {
            throw ssi::Error(std::string("invalid SSI_MAX_EDGES value: '") + raw + "'");
        }
    }
    return options;
}

ssi::GameModel load_model(const std::string& path) {
    return ssi::io::parse_model(ssi::io::read_file(path));
}

// Validates or reports to stderr; used by commands that need a space.
ssi::StateSpace require_space(const ssi::GameModel& model) {
    auto result = ssi::validate(model, validate_options_from_env());
    if (auto* report = std::get_if<ssi::ValidationReport>(&result)) {
        throw ssi::Error("model does not validate:\n" + report->to_string());
    }
    return std::get<ssi::StateSpace>(std::move(result));
}

// A state id, or a label query (with or without a leading '#') naming
// every state that carries the label.
std::set<std::string> resolve_state_set(const ssi::GameModel& model, const std::string& token) {
    std::set<std::string> ids;
    if (!token.empty() && token[0] == '#') {
        const std::string label = token.substr(1);
        for (const auto& [id, state] : model.states()) {
            if (state.has_label(label)) ids.insert(id);
        }
        if (ids.empty()) throw ssi::Error("label query '" + token + "' matches no state");
        return ids;
    }
    if (model.states().contains(token)) {
        ids.insert(token);
        return ids;
    }
    for (const auto& [id, state] : model.states()) {
        if (state.has_label(token)) ids.insert(id);
    }
    if (ids.empty()) throw ssi::Error("'" + token + "' names no state or label");
    return ids;
}

std::vector<std::string> split_script(const std::string& joined) {
    std::vector<std::string> ops;
    std::size_t begin = 0;
    while (begin <= joined.size()) {
        auto end = joined.find(',', begin);
        if (end == std::string::npos) end = joined.size();
        std::string op = joined.substr(begin, end - begin);
        const auto first = op.find_first_not_of(" \t");
        if (first != std::string::npos) {
            const auto last = op.find_last_not_of(" \t");
            ops.push_back(op.substr(first, last - first + 1));
        }
        begin = end + 1;
    }
    return ops;
}

std::string format_path_line(const ssi::EvolutionPath& path) {
    std::string out = path.start;
    for (const ssi::PathStep& step : path.steps) {
        out += " -" + step.op + "-> " + step.outcome;
    }
    return out;
}

int cmd_validate(const std::string& model_path) {
    const ssi::GameModel model = load_model(model_path);
    auto result = ssi::validate(model, validate_options_from_env());
    if (auto* report = std::get_if<ssi::ValidationReport>(&result)) {
        std::cout << report->to_string();
        return kExitNegative;
    }
    std::cout << "OK: closure and reachability hold\n";
    return kExitOk;
}

int cmd_reach(const std::string& model_path) {
    const ssi::GameModel model = load_model(model_path);
    const std::set<std::string> reachable = ssi::reachable_states(model);
    std::vector<std::string> unreachable;
    for (const auto& [id, state] : model.states()) {
        if (!reachable.contains(id)) unreachable.push_back(id);
    }
    std::cout << "reachable (" << reachable.size() << "):";
    for (const std::string& id : reachable) std::cout << " " << id;
    std::cout << "\nunreachable (" << unreachable.size() << "):";
    for (const std::string& id : unreachable) std::cout << " " << id;
    std::cout << "\n";
    return unreachable.empty() ? kExitOk : kExitNegative;
}

struct SimulateArgs {
    std::string model_path;
    std::string script;
    bool random = false;
    bool interactive = false;
    std::uint64_t seed = 0;
    std::size_t max_steps = 100;
    std::string start;
    std::string trace_out;
};

int cmd_simulate(const SimulateArgs& args) {
    const ssi::GameModel model = load_model(args.model_path);
    const ssi::StateSpace space = require_space(model);

    ssi::io::SimulateOptions options;
    options.seed = args.seed;
    options.max_steps = args.max_steps;
    if (!args.start.empty()) {
        const auto resolved = resolve_state_set(model, args.start);
        if (resolved.size() != 1) {
            throw ssi::Error("--start must name exactly one state, '" + args.start + "' names " +
                             std::to_string(resolved.size()));
        }
        options.start = ssi::io::StartSpec::fixed(*resolved.begin());
    }
    if (args.random) {
        options.policy = ssi::io::Policy::uniform_random();
    } else if (args.interactive) {
        options.policy = ssi::io::Policy::interactive();
    } else {
        options.policy = ssi::io::Policy::scripted(split_script(args.script));
    }

    const ssi::io::TraceDocument doc = ssi::io::simulate(space, options);
    const std::string text = ssi::io::serialize_trace(doc);
    if (args.trace_out.empty()) {
        std::cout << text;
    } else {
        ssi::io::write_file_atomic(args.trace_out, text);
        std::cerr << "wrote " << doc.steps.size() << "-step trace (stop: "
                  << ssi::io::to_string(doc.stop) << ") to " << args.trace_out << "\n";
    }
    return kExitOk;
}

struct SpeedrunArgs {
    std::string model_path;
    std::string to;
    std::string from;
    std::vector<std::string> avoid;
    bool player_only = false;
    std::string trace_out;
};

int cmd_speedrun(const SpeedrunArgs& args) {
    const ssi::GameModel model = load_model(args.model_path);
    const ssi::StateSpace space = require_space(model);

    const std::set<std::string> to = resolve_state_set(model, args.to);
    std::set<std::string> from = space.initial_set();
    if (!args.from.empty()) from = resolve_state_set(model, args.from);
    std::set<std::string> forbidden;
    for (const std::string& token : args.avoid) {
        const auto resolved = resolve_state_set(model, token);
        forbidden.insert(resolved.begin(), resolved.end());
    }

    const ssi::PathQueryResult result =
        ssi::speedrun(space, from, to, forbidden, {args.player_only});
    if (!result.found) {
        std::cerr << "no path found (visited " << result.visited_count << " states)\n";
        return kExitNoPath;
    }
    std::cout << "cost: " << result.total_cost.str() << "\n";
    std::cout << "ops:";
    for (const std::string& op : result.path.op_sequence()) std::cout << " " << op;
    std::cout << "\n";
    std::cout << "path: " << format_path_line(result.path) << "\n";
    if (!args.trace_out.empty()) {
        ssi::io::write_file_atomic(
            args.trace_out, ssi::io::serialize_trace(ssi::io::trace_from_path(space, result.path)));
        std::cerr << "wrote path trace to " << args.trace_out << "\n";
    }
    return kExitOk;
}

int cmd_achieve(const std::string& model_path, const std::string& trace_path,
                const std::string& spec_path) {
    const ssi::GameModel model = load_model(model_path);
    const ssi::StateSpace space = require_space(model);

    const ssi::io::TraceDocument doc = ssi::io::parse_trace(ssi::io::read_file(trace_path));
    const std::string expected = ssi::io::model_hash(model);
    if (doc.model_hash != expected) {
        throw ssi::Error("trace was recorded against model " + doc.model_hash +
                         ", this model is " + expected);
    }
    const ssi::EvolutionPath path = doc.to_path();
    if (const auto violation = ssi::path_violation(space, path)) {
        throw ssi::Error("trace is not a valid path of this model: " + *violation);
    }

    std::filesystem::path spec_file(spec_path);
    const ssi::AchievementSpec spec =
        ssi::io::parse_achievement(ssi::io::read_file(spec_file), spec_file.stem().string());

    const ssi::AchievementResult result = ssi::check_achievement(space, path, spec);
    if (!result.achieved) {
        std::cout << "achieved: no\n";
        return kExitNegative;
    }
    const ssi::AchievementWitness& witness = *result.witness;
    ssi::EvolutionPath sub{path.state_at(witness.start_index), {}, std::nullopt};
    for (std::size_t i = 0; i < witness.length; ++i) {
        sub.steps.push_back(path.steps[witness.start_index + i]);
    }
    std::cout << "achieved: yes\n";
    std::cout << "witness: steps " << witness.start_index << ".."
              << witness.start_index + witness.length << ": " << format_path_line(sub) << "\n";
    return kExitOk;
}

struct QctArgs {
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    bool table = false;
    std::string trace_out;
};

int cmd_qct(const QctArgs& args) {
    const ssi::qct::QctRun run = ssi::qct::run_qct(args.trials, args.seed);
    char buffer[32];
    std::cout << "trials: " << run.trials << "\n";
    std::cout << "seed: " << run.seed << "\n";
    std::snprintf(buffer, sizeof(buffer), "%.6f", run.head_frequency().to_double());
    std::cout << "Head: " << run.head_count << " (" << buffer << ")\n";
    std::snprintf(buffer, sizeof(buffer), "%.6f", run.tail_frequency().to_double());
    std::cout << "Tail: " << run.tail_count << " (" << buffer << ")\n";

    if (args.table) {
        std::cout << "\n";
        std::snprintf(buffer, sizeof(buffer), "%-20s", "Step");
        std::cout << buffer;
        std::snprintf(buffer, sizeof(buffer), "%-22s", "Quantum Coin Toss");
        std::cout << buffer << "Classical Coin Toss\n";
        for (const ssi::qct::CorrespondenceRow& row : ssi::qct::correspondence_table()) {
            std::snprintf(buffer, sizeof(buffer), "%-20s", std::string(row.step).c_str());
            std::cout << buffer;
            std::snprintf(buffer, sizeof(buffer), "%-22s", std::string(row.quantum).c_str());
            std::cout << buffer << row.classical << "\n";
        }
    }

    if (!args.trace_out.empty()) {
        ssi::io::write_file_atomic(args.trace_out, ssi::io::serialize_qct_run(run));
        std::cerr << "wrote " << run.trials << " trials to " << args.trace_out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-space game models: declare, validate, simulate, query"};
    app.require_subcommand(1);

    std::string model_path;

    auto* validate_cmd = app.add_subcommand("validate", "Check closure and reachability");
    validate_cmd->add_option("model", model_path, "Model document (.ssi)")->required();

    auto* reach_cmd = app.add_subcommand("reach", "List reachable and unreachable states");
    reach_cmd->add_option("model", model_path, "Model document (.ssi)")->required();

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run a seeded evolution");
    simulate_cmd->add_option("model", sim.model_path, "Model document (.ssi)")->required();
    auto* mode = simulate_cmd->add_option_group("mode", "Operation selection");
    mode->add_option("--script", sim.script, "Comma-separated operation ids");
    mode->add_flag("--random", sim.random, "Pick applicable operations uniformly");
    mode->add_flag("--interactive", sim.interactive, "Read one operation id per line from stdin");
    mode->require_option(1);
    simulate_cmd->add_option("--seed", sim.seed, "RNG seed (default 0)");
    simulate_cmd->add_option("--max-steps", sim.max_steps, "Step budget (default 100)");
    simulate_cmd->add_option("--start", sim.start,
                             "Fixed start state (default: uniform over the initial set)");
    simulate_cmd->add_option("--trace", sim.trace_out, "Write the trace document here");

    SpeedrunArgs run;
    auto* speedrun_cmd = app.add_subcommand("speedrun", "Least-cost operation sequence");
    speedrun_cmd->add_option("model", run.model_path, "Model document (.ssi)")->required();
    speedrun_cmd->add_option("--to", run.to, "Target state or label")->required();
    speedrun_cmd->add_option("--from", run.from, "Source state or label (default: initial set)");
    speedrun_cmd->add_option("--avoid", run.avoid, "State or label to avoid (repeatable)");
    speedrun_cmd->add_flag("--player-only", run.player_only, "Use player operations only");
    speedrun_cmd->add_option("--trace", run.trace_out, "Write the found path as a trace");

    std::string trace_path;
    std::string spec_path;
    auto* achieve_cmd = app.add_subcommand("achieve", "Check an achievement against a trace");
    achieve_cmd->add_option("model", model_path, "Model document (.ssi)")->required();
    achieve_cmd->add_option("--trace", trace_path, "Trace document (.trace)")->required();
    achieve_cmd->add_option("--spec", spec_path, "Achievement document (.spec)")->required();

    QctArgs qct;
    auto* qct_cmd = app.add_subcommand("qct", "Quantum coin toss");
    qct_cmd->add_option("--trials", qct.trials, "Number of trials (default 10000)");
    qct_cmd->add_option("--seed", qct.seed, "RNG seed (default 42)");
    qct_cmd->add_flag("--table", qct.table, "Also print the quantum/classical correspondence");
    qct_cmd->add_option("--trace", qct.trace_out, "Write per-trial records here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(model_path);
        if (app.got_subcommand(reach_cmd)) return cmd_reach(model_path);
        if (app.got_subcommand(simulate_cmd)) return cmd_simulate(sim);
        if (app.got_subcommand(speedrun_cmd)) return cmd_speedrun(run);
        if (app.got_subcommand(achieve_cmd)) return cmd_achieve(model_path, trace_path, spec_path);
        if (app.got_subcommand(qct_cmd)) return cmd_qct(qct);
    } catch (const ssi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
