#include "ssi/quantum.hpp"

#include <cmath>

namespace ssi::qct {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Ket::Ket(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
    if (std::abs(norm() - 1.0) > kTolerance) {
        throw QuantumError("ket is not normalized: |amp0|^2 + |amp1|^2 = " +
                           std::to_string(norm()));
    }
}

double Ket::norm() const {
    return std::norm(amp0_) + std::norm(amp1_);
}

bool Ket::approx_equal(const Ket& other, double tol) const {
    return std::abs(amp0_ - other.amp0_) <= tol && std::abs(amp1_ - other.amp1_) <= tol;
}

Ket ket_basis(BasisLabel label) {
    return label == BasisLabel::Zero ? Ket::zero() : Ket::one();
}

Gate Gate::from_matrix(const std::array<Complex, 4>& entries) {
    Gate gate(entries);
    // G * G^dagger must be the identity.
    const Gate product = gate * gate.adjoint();
    if (!product.approx_equal(Gate::identity())) {
        throw NonUnitaryGateError();
    }
    return gate;
}

const Gate& Gate::hadamard() {
    static const Gate gate = from_matrix({Complex(kInvSqrt2), Complex(kInvSqrt2),
                                          Complex(kInvSqrt2), Complex(-kInvSqrt2)});
    return gate;
}

const Gate& Gate::pauli_x() {
    static const Gate gate =
        from_matrix({Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)});
    return gate;
}

const Gate& Gate::identity() {
    static const Gate gate(std::array<Complex, 4>{Complex(1.0), Complex(0.0), Complex(0.0),
                                                  Complex(1.0)});
    return gate;
}

Gate Gate::adjoint() const {
    return Gate({std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
                 std::conj(entries_[3])});
}

bool Gate::approx_equal(const Gate& other, double tol) const {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(entries_[i] - other.entries_[i]) > tol) return false;
    }
    return true;
}

Gate operator*(const Gate& lhs, const Gate& rhs) {
    std::array<Complex, 4> out;
    for (std::size_t row = 0; row < 2; ++row) {
        for (std::size_t col = 0; col < 2; ++col) {
            out[row * 2 + col] =
                lhs.at(row, 0) * rhs.at(0, col) + lhs.at(row, 1) * rhs.at(1, col);
        }
    }
    return Gate(out);
}

Ket apply_gate(const Gate& gate, const Ket& ket) {
    return Ket(gate.at(0, 0) * ket.amp0() + gate.at(0, 1) * ket.amp1(),
               gate.at(1, 0) * ket.amp0() + gate.at(1, 1) * ket.amp1());
}

MeasurementRecord measure(const Ket& ket, SplitMix64& rng) {
    const double drawn = rng.next_uniform();
    if (drawn < ket.prob_zero()) {
        return {+1, Ket::zero(), drawn};
    }
    return {-1, Ket::one(), drawn};
}

std::string_view to_string(CoinFace face) {
    return face == CoinFace::Head ? "Head" : "Tail";
}

Rational QctRun::head_frequency() const {
    return trials == 0 ? Rational(0)
                       : Rational(static_cast<std::int64_t>(head_count),
                                  static_cast<std::int64_t>(trials));
}

Rational QctRun::tail_frequency() const {
    return trials == 0 ? Rational(0)
                       : Rational(static_cast<std::int64_t>(tail_count),
                                  static_cast<std::int64_t>(trials));
}

QctRun run_qct(std::size_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw QuantumError("run_qct requires at least one trial");
    }
    QctRun run;
    run.seed = seed;
    run.trials = trials;
    run.traces.reserve(trials);

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const Ket initial = Ket::zero();
        const Ket post_toss = apply_gate(Gate::hadamard(), initial);
        const MeasurementRecord record = measure(post_toss, rng);
        const CoinFace face = record.outcome_sign > 0 ? CoinFace::Head : CoinFace::Tail;
        (face == CoinFace::Head ? run.head_count : run.tail_count) += 1;
        run.traces.push_back({initial, post_toss, record, face});
    }
    return run;
}

const std::array<CorrespondenceRow, 5>& correspondence_table() {
    static const std::array<CorrespondenceRow, 5> table{{
        {"Initial State", "|0>", "Head"},
        {"Action", "H", "Toss"},
        {"Intermediate State", "(1/sqrt(2))(|0>+|1>)", "Rolling"},
        {"Process", "Measure", "Drop"},
        {"Final State", "|1>", "Tail"},
    }};
    return table;
}

}  // namespace ssi::qct
