#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace dqasrl {

// Dense statevector simulator for few-qubit circuits. Qubit 0 is the most
// significant bit of the basis-state index, i.e. for n = 2 the state |10>
// (qubit 0 in |1>, qubit 1 in |0>) sits at amplitude index 2.
//
// Rotation conventions: RY(t) = exp(-i t Y / 2) and likewise RX/RZ, so
// <Z> after RY(t)|0> equals cos(t).

using Complex = std::complex<double>;

enum class GateKind : std::uint8_t { RX, RY, RZ, CZ, CNOT, X, Identity };

bool gate_is_parameterized(GateKind kind);
bool gate_is_two_qubit(GateKind kind);
const char* gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::Identity;
    int q0 = 0;  // target qubit, or control for two-qubit kinds
    int q1 = -1; // target qubit for two-qubit kinds
    double angle = 0.0;

    static Gate rx(int qubit, double angle) { return {GateKind::RX, qubit, -1, angle}; }
    static Gate ry(int qubit, double angle) { return {GateKind::RY, qubit, -1, angle}; }
    static Gate rz(int qubit, double angle) { return {GateKind::RZ, qubit, -1, angle}; }
    static Gate cz(int control, int target) { return {GateKind::CZ, control, target, 0.0}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0.0}; }
    static Gate x(int qubit) { return {GateKind::X, qubit, -1, 0.0}; }
    static Gate identity(int qubit) { return {GateKind::Identity, qubit, -1, 0.0}; }

    bool parameterized() const { return gate_is_parameterized(kind); }
    bool two_qubit() const { return gate_is_two_qubit(kind); }
};

struct State {
    std::vector<Complex> amplitudes;
    int n = 0;

    static State zero(int n);
    std::size_t dim() const { return amplitudes.size(); }
    double norm_squared() const;
};

/// Tensor product of Z and I factors, one per qubit.
class Observable {
public:
    Observable(int n, std::span<const int> z_qubits);
    static Observable z(int n, int qubit);
    static Observable zz(int n, int qubit_a, int qubit_b);
    static Observable identity(int n) { return Observable(n, {}); }

    int qubit_count() const { return n_; }
    bool has_z(int qubit) const;
    std::vector<int> z_qubits() const;

    /// +1 or -1: parity of the Z factors over one computational basis state.
    double sign(std::size_t basis_index) const {
        return (std::popcount(basis_index & index_mask_) & 1u) ? -1.0 : 1.0;
    }

private:
    int n_;
    std::uint64_t index_mask_; // bits in basis-index space, qubit 0 = MSB
};

void apply_gate_in_place(State& state, const Gate& gate);

/// Pure version of apply_gate_in_place; the input is left untouched.
State apply_gate(const State& state, const Gate& gate);

/// Applies the inverse gate (rotations with negated angle; the rest are
/// self-inverse).
void apply_gate_inverse_in_place(State& state, const Gate& gate);

double expectation(const State& state, const Observable& obs);

/// Runs `gates` in order on |0...0>.
State run_circuit(std::span<const Gate> gates, int n);

/// Exact derivative of the final expectation with respect to the angle of
/// gates[param_location], evaluated as (E(t + pi/2) - E(t - pi/2)) / 2.
double param_shift_grad(std::span<const Gate> gates, std::size_t param_location,
                        const Observable& obs);

struct ExpectationGradient {
    double value = 0.0;
    std::vector<double> dangle; // per gate; 0 for non-parameterized gates
};

/// Scratch buffers for the reverse-sweep gradient; reuse across calls to
/// avoid reallocating in training loops.
struct GradientWorkspace {
    State ket;
    State mu;
    State tmp;
};

/// Expectation plus its derivative with respect to every rotation angle in
/// one forward/backward sweep. The values are identical to the per-angle
/// shift rule (exact for Pauli-generated rotations) at a fraction of the
/// cost.
ExpectationGradient expectation_with_gradient(std::span<const Gate> gates, int n,
                                              const Observable& obs);

/// Workspace variant; writes one derivative per gate into `dangle_out`
/// (which must have gates.size() entries) and returns the expectation.
double expectation_with_gradient(std::span<const Gate> gates, int n,
                                 const Observable& obs, GradientWorkspace& ws,
                                 std::span<double> dangle_out);

}  // namespace dqasrl
