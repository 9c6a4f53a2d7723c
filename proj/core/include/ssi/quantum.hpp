#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ssi/errors.hpp"
#include "ssi/rational.hpp"
#include "ssi/rng.hpp"

// Exact single-qubit statevector simulation: enough machinery to run the
// quantum coin toss (init |0>, Hadamard, measure) and relate it to the
// classical coin model.
namespace ssi::qct {

using Complex = std::complex<double>;

// Tolerance for the norm and unitarity invariants.
inline constexpr double kTolerance = 1e-9;

class QuantumError : public Error {
public:
    using Error::Error;
};

class NonUnitaryGateError : public QuantumError {
public:
    NonUnitaryGateError() : QuantumError("gate matrix is not unitary") {}
};

enum class BasisLabel { Zero, One };

// A normalized 2-dimensional complex statevector.
class Ket {
public:
    Ket(Complex amp0, Complex amp1);

    static Ket zero() { return Ket(1.0, 0.0); }
    static Ket one() { return Ket(0.0, 1.0); }

    Complex amp0() const { return amp0_; }
    Complex amp1() const { return amp1_; }

    double norm() const;
    double prob_zero() const { return std::norm(amp0_); }

    bool approx_equal(const Ket& other, double tol = kTolerance) const;

    friend bool operator==(const Ket&, const Ket&) = default;

private:
    Complex amp0_;
    Complex amp1_;
};

Ket ket_basis(BasisLabel label);

// A 2x2 unitary, row-major. Construction rejects non-unitary matrices.
class Gate {
public:
    static Gate from_matrix(const std::array<Complex, 4>& entries);
    static const Gate& hadamard();
    static const Gate& pauli_x();
    static const Gate& identity();

    Complex at(std::size_t row, std::size_t col) const { return entries_[row * 2 + col]; }

    Gate adjoint() const;
    bool approx_equal(const Gate& other, double tol = kTolerance) const;

    friend Gate operator*(const Gate& lhs, const Gate& rhs);

private:
    explicit Gate(const std::array<Complex, 4>& entries) : entries_(entries) {}

    std::array<Complex, 4> entries_;
};

// Matrix-vector product. Unitarity preserves the norm, so no
// renormalization happens here.
Ket apply_gate(const Gate& gate, const Ket& ket);

// Outcome of one projective measurement in the computational basis:
// sign +1 collapses to |0>, sign -1 to |1>. Measuring the collapsed ket
// again returns the same outcome with probability 1.
struct MeasurementRecord {
    int outcome_sign;
    Ket collapsed;
    double drawn_uniform;
};

MeasurementRecord measure(const Ket& ket, SplitMix64& rng);

enum class CoinFace { Head, Tail };

std::string_view to_string(CoinFace face);

// Full record of one coin-toss trial: |0> -> H -> measure, with the
// measured sign mapped onto a coin face (+1 = Head, -1 = Tail).
struct QctTrialTrace {
    Ket initial;
    Ket post_toss;
    MeasurementRecord measurement;
    CoinFace coin_face;
};

struct QctRun {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t head_count = 0;
    std::size_t tail_count = 0;
    std::vector<QctTrialTrace> traces;

    Rational head_frequency() const;
    Rational tail_frequency() const;
};

// Runs `trials` independent coin-toss trials off one seeded stream.
// Same seed, same trace list. Rejects trials < 1.
QctRun run_qct(std::size_t trials, std::uint64_t seed);

// Row-by-row mapping between the quantum toss and the classical coin.
struct CorrespondenceRow {
    std::string_view step;
    std::string_view quantum;
    std::string_view classical;
};

const std::array<CorrespondenceRow, 5>& correspondence_table();

}  // namespace ssi::qct
