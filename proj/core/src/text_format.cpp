#include "ssi/text_format.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace ssi::io {

namespace {

struct Token {
    std::string text;
    std::size_t col;  // 1-based
};

struct RawLine {
    std::size_t number;  // 1-based
    std::string text;
};

std::string strip_comment(std::string_view line) {
    const auto pos = line.find("//");
    if (pos != std::string_view::npos) line = line.substr(0, pos);
    return std::string(line);
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return tokens;
}

std::vector<RawLine> logical_lines(std::string_view text) {
    std::vector<RawLine> lines;
    std::size_t number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto end = text.find('\n', begin);
        const auto raw =
            end == std::string_view::npos ? text.substr(begin) : text.substr(begin, end - begin);
        ++number;
        std::string stripped = strip_comment(raw);
        const auto first = stripped.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            const auto last = stripped.find_last_not_of(" \t\r");
            lines.push_back({number, stripped.substr(first, last - first + 1)});
        }
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return lines;
}

bool is_section_header(const std::string& line) {
    return line.size() >= 2 && line.front() == '[' && line.back() == ']';
}

// Splits into (section name -> lines), rejecting unknown and duplicate
// sections and content before the first header.
std::map<std::string, std::vector<RawLine>> split_sections(
    std::string_view text, const std::vector<std::string>& known) {
    std::map<std::string, std::vector<RawLine>> sections;
    std::string current;
    for (const RawLine& line : logical_lines(text)) {
        if (is_section_header(line.text)) {
            current = line.text.substr(1, line.text.size() - 2);
            if (std::find(known.begin(), known.end(), current) == known.end()) {
                throw ParseError(line.number, 1, "unknown section '[" + current + "]'");
            }
            if (sections.contains(current)) {
                throw ParseError(line.number, 1, "duplicate section '[" + current + "]'");
            }
            sections[current];  // remember even when empty
            continue;
        }
        if (current.empty()) {
            throw ParseError(line.number, 1, "expected a [section] header before content");
        }
        sections[current].push_back(line);
    }
    return sections;
}

Rational parse_probability(const std::string& text, std::size_t line, std::size_t col) {
    const auto value = Rational::parse(text);
    if (!value) {
        throw ParseError(line, col,
                         "expected a rational probability like 1/2, got '" + text + "'");
    }
    return *value;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

std::uint64_t parse_u64(const std::string& text, std::size_t line, std::size_t col,
                        const char* what) {
    try {
        std::size_t consumed = 0;
        const std::uint64_t value = std::stoull(text, &consumed, 10);
        if (consumed != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, col, std::string("expected ") + what + ", got '" + text + "'");
    }
}

// Entries of [initial]/[final]-style predicate sections: a state id or a
// #label query.
struct SetEntry {
    std::string token;
    std::size_t line;
    std::size_t col;
};

std::vector<SetEntry> parse_set_section(const std::vector<RawLine>& lines) {
    std::vector<SetEntry> entries;
    for (const RawLine& line : lines) {
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 1) {
            throw ParseError(line.number, tokens.size() > 1 ? tokens[1].col : 1,
                             "expected one state id or #label per line");
        }
        entries.push_back({tokens[0].text, line.number, tokens[0].col});
    }
    return entries;
}

}  // namespace

GameModel parse_model(std::string_view text) {
    const auto sections =
        split_sections(text, {"states", "operations", "transitions", "initial", "final"});
    if (!sections.contains("states")) {
        throw ParseError(1, 0, "missing [states] section");
    }

    std::vector<State> states;
    for (const RawLine& line : sections.at("states")) {
        const auto tokens = tokenize(line.text);
        State state{tokens[0].text, {}};
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (tokens[i].text.size() < 2 || tokens[i].text[0] != '#') {
                throw ParseError(line.number, tokens[i].col,
                                 "expected a #label, got '" + tokens[i].text + "'");
            }
            state.labels.insert(tokens[i].text.substr(1));
        }
        states.push_back(std::move(state));
    }

    std::vector<OperationDef> operations;
    if (sections.contains("operations")) {
        for (const RawLine& line : sections.at("operations")) {
            const auto tokens = tokenize(line.text);
            if (tokens.size() < 2 || tokens.size() > 3) {
                throw ParseError(line.number, 1, "expected 'id kind [cost]'");
            }
            const auto kind = op_kind_from_string(tokens[1].text);
            if (!kind) {
                throw ParseError(line.number, tokens[1].col,
                                 "unknown operation kind '" + tokens[1].text +
                                     "' (player, game or identity)");
            }
            Rational cost = 1;
            if (tokens.size() == 3) {
                const auto parsed = Rational::parse(tokens[2].text);
                if (!parsed || parsed->is_negative()) {
                    throw ParseError(line.number, tokens[2].col,
                                     "expected a non-negative rational cost, got '" +
                                         tokens[2].text + "'");
                }
                cost = *parsed;
            }
            operations.push_back({tokens[0].text, *kind, cost});
        }
    }

    std::vector<Transition> transitions;
    if (sections.contains("transitions")) {
        for (const RawLine& line : sections.at("transitions")) {
            const auto arrow = line.text.find("->");
            if (arrow == std::string::npos) {
                throw ParseError(line.number, 1, "expected 'from op -> to:prob, ...'");
            }
            const auto left = tokenize(line.text.substr(0, arrow));
            if (left.size() != 2) {
                throw ParseError(line.number, 1,
                                 "expected 'from op' before '->', got " +
                                     std::to_string(left.size()) + " token(s)");
            }
            Transition transition{left[0].text, left[1].text, {}};
            Rational sum = 0;
            std::size_t chunk_begin = arrow + 2;
            const std::string& full = line.text;
            while (chunk_begin <= full.size()) {
                auto chunk_end = full.find(',', chunk_begin);
                if (chunk_end == std::string::npos) chunk_end = full.size();
                std::string chunk = full.substr(chunk_begin, chunk_end - chunk_begin);
                const auto first = chunk.find_first_not_of(" \t");
                if (first == std::string::npos) {
                    throw ParseError(line.number, chunk_begin + 1, "empty outcome entry");
                }
                const auto last = chunk.find_last_not_of(" \t");
                chunk = chunk.substr(first, last - first + 1);
                const std::size_t chunk_col = chunk_begin + first + 1;

                const auto colon = chunk.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 >= chunk.size()) {
                    throw ParseError(line.number, chunk_col,
                                     "expected 'state:probability', got '" + chunk + "'");
                }
                const Rational prob = parse_probability(chunk.substr(colon + 1), line.number,
                                                        chunk_col + colon + 1);
                transition.outcomes.push_back({chunk.substr(0, colon), prob});
                sum += prob;
                chunk_begin = chunk_end + 1;
            }
            if (sum != Rational(1)) {
                throw ParseError(line.number, 0,
                                 "outcome probabilities of (" + transition.from + ", " +
                                     transition.op + ") sum to " + sum.str() + ", expected 1");
            }
            transitions.push_back(std::move(transition));
        }
    }

    // Resolve #label queries against the declared states.
    const auto resolve = [&](const std::vector<SetEntry>& entries) {
        std::vector<std::string> ids;
        for (const SetEntry& entry : entries) {
            if (entry.token.size() > 1 && entry.token[0] == '#') {
                const std::string label = entry.token.substr(1);
                bool any = false;
                for (const State& state : states) {
                    if (state.has_label(label)) {
                        ids.push_back(state.id);
                        any = true;
                    }
                }
                if (!any) {
                    throw ParseError(entry.line, entry.col,
                                     "label query '" + entry.token + "' matches no state");
                }
            } else {
                ids.push_back(entry.token);
            }
        }
        return ids;
    };

    std::vector<std::string> initial;
    if (sections.contains("initial")) {
        initial = resolve(parse_set_section(sections.at("initial")));
    }
    std::vector<std::string> finals;
    if (sections.contains("final")) {
        finals = resolve(parse_set_section(sections.at("final")));
    }

    return build_model(std::move(states), std::move(operations), std::move(transitions),
                       std::move(initial), std::move(finals));
}

std::string serialize_model(const GameModel& model) {
    std::ostringstream out;
    out << "[states]\n";
    for (const auto& [id, state] : model.states()) {
        out << id;
        for (const std::string& label : state.labels) out << " #" << label;
        out << "\n";
    }

    out << "\n[operations]\n";
    for (const auto& [id, op] : model.operations()) {
        out << id << " " << to_string(op.kind) << " " << op.cost.str() << "\n";
    }

    bool any_transition = false;
    for (const auto& [key, outcomes] : model.transitions()) {
        if (key.second != model.identity_op()) {
            any_transition = true;
            break;
        }
    }
    if (any_transition) {
        out << "\n[transitions]\n";
        for (const auto& [key, outcomes] : model.transitions()) {
            if (key.second == model.identity_op()) continue;  // implied self-loops
            out << key.first << " " << key.second << " ->";
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                out << (i == 0 ? " " : ", ") << outcomes[i].to << ":" << outcomes[i].prob.str();
            }
            out << "\n";
        }
    }

    out << "\n[initial]\n";
    for (const std::string& id : model.initial_set()) out << id << "\n";

    if (!model.final_set().empty()) {
        out << "\n[final]\n";
        for (const std::string& id : model.final_set()) out << id << "\n";
    }
    return out.str();
}

std::string model_hash(const GameModel& model) {
    return to_hex(fnv1a64(serialize_model(model)));
}

AchievementSpec parse_achievement(std::string_view text, std::string default_id) {
    const auto sections = split_sections(text, {"id", "initial", "ops", "finish"});

    AchievementSpec spec;
    spec.id = std::move(default_id);
    if (sections.contains("id")) {
        const auto& lines = sections.at("id");
        if (lines.size() != 1 || tokenize(lines[0].text).size() != 1) {
            throw ParseError(lines.empty() ? 1 : lines[0].number, 0,
                             "[id] must contain exactly one identifier");
        }
        spec.id = tokenize(lines[0].text)[0].text;
    }

    const auto fill = [&](const char* name, StatePredicate& pred) {
        if (!sections.contains(name)) {
            throw ParseError(1, 0, std::string("missing [") + name + "] section");
        }
        for (const SetEntry& entry : parse_set_section(sections.at(name))) {
            if (entry.token.size() > 1 && entry.token[0] == '#') {
                pred.labels.insert(entry.token.substr(1));
            } else {
                pred.state_ids.insert(entry.token);
            }
        }
        if (pred.empty()) {
            throw ParseError(1, 0, std::string("[") + name + "] must list at least one entry");
        }
    };
    fill("initial", spec.initial_pred);
    fill("finish", spec.finish_pred);

    if (!sections.contains("ops") || sections.at("ops").empty()) {
        throw ParseError(1, 0, "[ops] must list at least one operation id");
    }
    for (const RawLine& line : sections.at("ops")) {
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 1) {
            throw ParseError(line.number, tokens[1].col, "expected one operation id per line");
        }
        spec.allowed_ops.insert(tokens[0].text);
    }
    return spec;
}

std::string serialize_achievement(const AchievementSpec& spec) {
    std::ostringstream out;
    out << "[id]\n" << spec.id << "\n";
    const auto put = [&out](const char* name, const StatePredicate& pred) {
        out << "\n[" << name << "]\n";
        for (const std::string& id : pred.state_ids) out << id << "\n";
        for (const std::string& label : pred.labels) out << "#" << label << "\n";
    };
    put("initial", spec.initial_pred);
    out << "\n[ops]\n";
    for (const std::string& op : spec.allowed_ops) out << op << "\n";
    put("finish", spec.finish_pred);
    return out.str();
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::StepBudget: return "step-budget";
        case StopReason::DeadEnd: return "dead-end";
        case StopReason::FinalState: return "final-state";
        case StopReason::ScriptEnd: return "script-end";
    }
    return "script-end";
}

namespace {

std::optional<StopReason> stop_reason_from_string(const std::string& text) {
    if (text == "step-budget") return StopReason::StepBudget;
    if (text == "dead-end") return StopReason::DeadEnd;
    if (text == "final-state") return StopReason::FinalState;
    if (text == "script-end") return StopReason::ScriptEnd;
    return std::nullopt;
}

}  // namespace

std::string format_drawn(std::optional<double> drawn) {
    if (!drawn) return "-";
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%a", *drawn);  // hex float round-trips exactly
    return buffer;
}

namespace {

std::optional<double> parse_drawn(const std::string& text, std::size_t line, std::size_t col) {
    if (text == "-") return std::nullopt;
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + text.size()) {
        throw ParseError(line, col, "expected a hex-float draw or '-', got '" + text + "'");
    }
    return value;
}

std::vector<TraceStep> parse_steps(const std::vector<RawLine>& lines) {
    std::vector<TraceStep> steps;
    for (const RawLine& line : lines) {
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 5) {
            throw ParseError(line.number, 1, "expected 'index op outcome prob drawn'");
        }
        TraceStep step;
        step.index = parse_u64(tokens[0].text, line.number, tokens[0].col, "a step index");
        if (step.index != steps.size()) {
            throw ParseError(line.number, tokens[0].col,
                             "step index " + tokens[0].text + " out of order, expected " +
                                 std::to_string(steps.size()));
        }
        step.op = tokens[1].text;
        step.outcome = tokens[2].text;
        step.prob = parse_probability(tokens[3].text, line.number, tokens[3].col);
        step.drawn = parse_drawn(tokens[4].text, line.number, tokens[4].col);
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace

std::string serialize_trace(const TraceDocument& doc) {
    std::ostringstream out;
    out << "[header]\n";
    out << "kind " << (doc.kind == TraceKind::Simulation ? "simulate" : "path") << "\n";
    out << "model " << doc.model_hash << "\n";
    if (doc.seed) out << "seed " << *doc.seed << "\n";
    if (doc.kind == TraceKind::Simulation) {
        out << "policy ";
        switch (doc.policy.kind) {
            case PolicyKind::Scripted:
                out << "scripted";
                for (const std::string& op : doc.policy.script) out << " " << op;
                break;
            case PolicyKind::UniformRandom: out << "random"; break;
            case PolicyKind::Interactive: out << "interactive"; break;
        }
        out << "\n";
        out << "start-policy "
            << (doc.start_spec.uniform_over_initial ? "uniform-initial"
                                                    : "fixed " + doc.start_spec.state)
            << "\n";
    }
    out << "start " << doc.start << "\n";
    if (doc.kind == TraceKind::Simulation) {
        out << "max-steps " << doc.max_steps << "\n";
        out << "stop " << to_string(doc.stop) << "\n";
    }
    out << "\n[steps]\n";
    for (const TraceStep& step : doc.steps) {
        out << step.index << " " << step.op << " " << step.outcome << " " << step.prob.str()
            << " " << format_drawn(step.drawn) << "\n";
    }
    return out.str();
}

TraceDocument parse_trace(std::string_view text) {
    const auto sections = split_sections(text, {"header", "steps"});
    if (!sections.contains("header")) throw ParseError(1, 0, "missing [header] section");

    TraceDocument doc;
    bool have_kind = false;
    bool have_model = false;
    bool have_start = false;
    for (const RawLine& line : sections.at("header")) {
        const auto tokens = tokenize(line.text);
        const std::string& key = tokens[0].text;
        const auto need = [&](std::size_t count) {
            if (tokens.size() != count + 1) {
                throw ParseError(line.number, 1,
                                 "header '" + key + "' expects " + std::to_string(count) +
                                     " value(s)");
            }
        };
        if (key == "kind") {
            need(1);
            if (tokens[1].text == "simulate") {
                doc.kind = TraceKind::Simulation;
            } else if (tokens[1].text == "path") {
                doc.kind = TraceKind::Path;
            } else {
                throw ParseError(line.number, tokens[1].col,
                                 "unknown trace kind '" + tokens[1].text + "'");
            }
            have_kind = true;
        } else if (key == "model") {
            need(1);
            doc.model_hash = tokens[1].text;
            have_model = true;
        } else if (key == "seed") {
            need(1);
            doc.seed = parse_u64(tokens[1].text, line.number, tokens[1].col, "a seed");
        } else if (key == "policy") {
            if (tokens.size() < 2) throw ParseError(line.number, 1, "policy expects a kind");
            if (tokens[1].text == "scripted") {
                std::vector<std::string> script;
                for (std::size_t i = 2; i < tokens.size(); ++i) script.push_back(tokens[i].text);
                doc.policy = Policy::scripted(std::move(script));
            } else if (tokens[1].text == "random" && tokens.size() == 2) {
                doc.policy = Policy::uniform_random();
            } else if (tokens[1].text == "interactive" && tokens.size() == 2) {
                doc.policy = Policy::interactive();
            } else {
                throw ParseError(line.number, tokens[1].col,
                                 "unknown policy '" + tokens[1].text + "'");
            }
        } else if (key == "start-policy") {
            if (tokens.size() == 2 && tokens[1].text == "uniform-initial") {
                doc.start_spec = StartSpec::uniform_initial();
            } else if (tokens.size() == 3 && tokens[1].text == "fixed") {
                doc.start_spec = StartSpec::fixed(tokens[2].text);
            } else {
                throw ParseError(line.number, 1, "expected 'uniform-initial' or 'fixed <state>'");
            }
        } else if (key == "start") {
            need(1);
            doc.start = tokens[1].text;
            have_start = true;
        } else if (key == "max-steps") {
            need(1);
            doc.max_steps =
                parse_u64(tokens[1].text, line.number, tokens[1].col, "a step budget");
        } else if (key == "stop") {
            need(1);
            const auto reason = stop_reason_from_string(tokens[1].text);
            if (!reason) {
                throw ParseError(line.number, tokens[1].col,
                                 "unknown stop reason '" + tokens[1].text + "'");
            }
            doc.stop = *reason;
        } else {
            throw ParseError(line.number, tokens[0].col, "unknown header key '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError(1, 0, "header is missing 'kind'");
    if (!have_model) throw ParseError(1, 0, "header is missing 'model'");
    if (!have_start) throw ParseError(1, 0, "header is missing 'start'");

    if (sections.contains("steps")) doc.steps = parse_steps(sections.at("steps"));
    return doc;
}

EvolutionPath TraceDocument::to_path() const {
    EvolutionPath path{start, {}, seed};
    path.steps.reserve(steps.size());
    for (const TraceStep& step : steps) {
        path.steps.push_back({step.op, step.outcome, step.prob, step.drawn});
    }
    return path;
}

TraceDocument trace_from_path(const StateSpace& space, const EvolutionPath& path) {
    TraceDocument doc;
    doc.kind = TraceKind::Path;
    doc.model_hash = model_hash(space.model());
    doc.seed = path.seed;
    doc.start = path.start;
    doc.steps.reserve(path.steps.size());
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const PathStep& step = path.steps[i];
        doc.steps.push_back({i, step.op, step.outcome, step.prob, step.drawn});
    }
    return doc;
}

std::string serialize_qct_run(const qct::QctRun& run) {
    std::ostringstream out;
    out << "[header]\n";
    out << "kind qct\n";
    out << "seed " << run.seed << "\n";
    out << "trials " << run.trials << "\n";
    out << "\n[trials]\n";
    for (std::size_t i = 0; i < run.traces.size(); ++i) {
        const qct::QctTrialTrace& trace = run.traces[i];
        out << i << " " << (trace.measurement.outcome_sign > 0 ? "+1" : "-1") << " "
            << qct::to_string(trace.coin_face) << " "
            << format_drawn(trace.measurement.drawn_uniform) << "\n";
    }
    out << "\n[counts]\n";
    out << "Head " << run.head_count << "\n";
    out << "Tail " << run.tail_count << "\n";
    return out.str();
}

QctDocument parse_qct_document(std::string_view text) {
    const auto sections = split_sections(text, {"header", "trials", "counts"});
    if (!sections.contains("header")) throw ParseError(1, 0, "missing [header] section");

    QctDocument doc;
    for (const RawLine& line : sections.at("header")) {
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 2) throw ParseError(line.number, 1, "expected 'key value'");
        if (tokens[0].text == "kind") {
            if (tokens[1].text != "qct") {
                throw ParseError(line.number, tokens[1].col, "expected kind 'qct'");
            }
        } else if (tokens[0].text == "seed") {
            doc.seed = parse_u64(tokens[1].text, line.number, tokens[1].col, "a seed");
        } else if (tokens[0].text == "trials") {
            doc.trials = parse_u64(tokens[1].text, line.number, tokens[1].col, "a trial count");
        } else {
            throw ParseError(line.number, tokens[0].col,
                             "unknown header key '" + tokens[0].text + "'");
        }
    }

    if (sections.contains("trials")) {
        for (const RawLine& line : sections.at("trials")) {
            const auto tokens = tokenize(line.text);
            if (tokens.size() != 4) {
                throw ParseError(line.number, 1, "expected 'index sign face drawn'");
            }
            QctTrialRow row;
            row.index = parse_u64(tokens[0].text, line.number, tokens[0].col, "a trial index");
            if (row.index != doc.rows.size()) {
                throw ParseError(line.number, tokens[0].col, "trial index out of order");
            }
            if (tokens[1].text == "+1") {
                row.outcome_sign = +1;
            } else if (tokens[1].text == "-1") {
                row.outcome_sign = -1;
            } else {
                throw ParseError(line.number, tokens[1].col, "expected '+1' or '-1'");
            }
            if (tokens[2].text == "Head") {
                row.face = qct::CoinFace::Head;
            } else if (tokens[2].text == "Tail") {
                row.face = qct::CoinFace::Tail;
            } else {
                throw ParseError(line.number, tokens[2].col, "expected 'Head' or 'Tail'");
            }
            const auto drawn = parse_drawn(tokens[3].text, line.number, tokens[3].col);
            if (!drawn) throw ParseError(line.number, tokens[3].col, "trial rows record a draw");
            row.drawn = *drawn;
            doc.rows.push_back(row);
        }
    }

    if (sections.contains("counts")) {
        for (const RawLine& line : sections.at("counts")) {
            const auto tokens = tokenize(line.text);
            if (tokens.size() != 2) throw ParseError(line.number, 1, "expected 'face count'");
            const std::uint64_t count =
                parse_u64(tokens[1].text, line.number, tokens[1].col, "a count");
            if (tokens[0].text == "Head") {
                doc.head_count = count;
            } else if (tokens[0].text == "Tail") {
                doc.tail_count = count;
            } else {
                throw ParseError(line.number, tokens[0].col, "expected 'Head' or 'Tail'");
            }
        }
    }
    if (doc.head_count + doc.tail_count != doc.trials) {
        throw ParseError(1, 0, "head/tail counts do not add up to the trial count");
    }
    return doc;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write file: " + temp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("failed while writing: " + temp.string());
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) throw Error("cannot move " + temp.string() + " to " + path.string());
}

}  // namespace ssi::io
