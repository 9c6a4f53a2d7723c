#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/model.hpp"
#include "ssi/path.hpp"
#include "ssi/quantum.hpp"

// Line-oriented sectioned text formats: .ssi model documents, .trace
// evolution records, .spec achievement documents. All of them are
// hand-writable, diffable, and carry exact rational probabilities
// (decimal probabilities are rejected). `//` starts a comment.
namespace ssi::io {

// Parses a model document:
//
//   [states]       one id per line, optional #labels
//   [operations]   id kind [cost]          (kind: player|game|identity)
//   [transitions]  from op -> to:p/q, to:p/q
//   [initial]      one state id or #label query per line
//   [final]        one state id or #label query per line
//
// Malformed text throws ParseError with line/column; the assembled model
// goes through build_model, so its structural errors apply too.
GameModel parse_model(std::string_view text);

// Canonical serialization: fixed section order, ids sorted, normalized
// rationals, synthesized identity self-loops omitted. parse_model of the
// output reproduces an equal model, byte-stably.
std::string serialize_model(const GameModel& model);

// FNV-1a digest of the canonical serialization, 16 hex digits. Traces
// embed it so a trace cannot be replayed against the wrong model.
std::string model_hash(const GameModel& model);

// Achievement documents: [id] (optional), [initial], [ops], [finish];
// the predicate sections take one state id or #label query per line.
AchievementSpec parse_achievement(std::string_view text,
                                  std::string default_id = "achievement");
std::string serialize_achievement(const AchievementSpec& spec);

enum class PolicyKind { Scripted, UniformRandom, Interactive };

struct Policy {
    PolicyKind kind = PolicyKind::Scripted;
    std::vector<std::string> script;  // for Scripted

    static Policy scripted(std::vector<std::string> ops) {
        return {PolicyKind::Scripted, std::move(ops)};
    }
    static Policy uniform_random() { return {PolicyKind::UniformRandom, {}}; }
    static Policy interactive() { return {PolicyKind::Interactive, {}}; }

    friend bool operator==(const Policy&, const Policy&) = default;
};

struct StartSpec {
    bool uniform_over_initial = true;
    std::string state;  // used when not uniform

    static StartSpec uniform_initial() { return {true, {}}; }
    static StartSpec fixed(std::string id) { return {false, std::move(id)}; }

    friend bool operator==(const StartSpec&, const StartSpec&) = default;
};

enum class StopReason { StepBudget, DeadEnd, FinalState, ScriptEnd };

enum class TraceKind { Simulation, Path };

struct TraceStep {
    std::size_t index = 0;
    std::string op;
    std::string outcome;
    Rational prob;
    std::optional<double> drawn;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A recorded evolution: header identifying the producing run plus the
// ordered step records. Replaying the header settings against the same
// model reproduces the steps exactly.
struct TraceDocument {
    TraceKind kind = TraceKind::Simulation;
    std::string model_hash;
    std::optional<std::uint64_t> seed;
    Policy policy;
    StartSpec start_spec;
    std::string start;
    std::size_t max_steps = 0;
    StopReason stop = StopReason::ScriptEnd;
    std::vector<TraceStep> steps;

    EvolutionPath to_path() const;

    friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

std::string serialize_trace(const TraceDocument& doc);
TraceDocument parse_trace(std::string_view text);

// Wraps a possibilistic or recorded path as a kind=path trace document.
TraceDocument trace_from_path(const StateSpace& space, const EvolutionPath& path);

// Coin-toss runs serialize into the same document family: a header with
// kind=qct, one line per trial, and the closing frequency table.
struct QctTrialRow {
    std::size_t index = 0;
    int outcome_sign = 0;
    qct::CoinFace face = qct::CoinFace::Head;
    double drawn = 0.0;

    friend bool operator==(const QctTrialRow&, const QctTrialRow&) = default;
};

struct QctDocument {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t head_count = 0;
    std::size_t tail_count = 0;
    std::vector<QctTrialRow> rows;

    friend bool operator==(const QctDocument&, const QctDocument&) = default;
};

std::string serialize_qct_run(const qct::QctRun& run);
QctDocument parse_qct_document(std::string_view text);

std::string to_string(StopReason reason);
std::string format_drawn(std::optional<double> drawn);

// Whole-file helpers; writes go through a temp file + rename.
std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ssi::io
