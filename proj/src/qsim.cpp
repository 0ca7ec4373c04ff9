#include "dqasrl/qsim.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqasrl {

namespace {

std::uint64_t index_bit(int n, int qubit) {
    return std::uint64_t{1} << (n - 1 - qubit);
}

void check_qubit(int qubit, int n) {
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(n) + " qubits");
    }
}

void check_gate(const Gate& gate, int n) {
    check_qubit(gate.q0, n);
    if (gate.two_qubit()) {
        check_qubit(gate.q1, n);
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("two-qubit gate with identical qubits");
        }
    }
}

void apply_single_qubit(State& state, int qubit, Complex u00, Complex u01,
                        Complex u10, Complex u11) {
    const std::uint64_t m = index_bit(state.n, qubit);
    const std::size_t dim = state.dim();
    auto* amps = state.amplitudes.data();
    for (std::size_t k = 0; k < dim; ++k) {
        if (k & m) continue;
        const Complex a0 = amps[k];
        const Complex a1 = amps[k | m];
        amps[k] = u00 * a0 + u01 * a1;
        amps[k | m] = u10 * a0 + u11 * a1;
    }
}

// X, Y, Z on one qubit; used by the reverse gradient sweep.
void apply_pauli(const State& in, State& out, GateKind generator, int qubit) {
    const std::uint64_t m = index_bit(in.n, qubit);
    const std::size_t dim = in.dim();
    out.n = in.n;
    out.amplitudes.resize(dim);
    const auto* src = in.amplitudes.data();
    auto* dst = out.amplitudes.data();
    switch (generator) {
    case GateKind::RX: // X
        for (std::size_t k = 0; k < dim; ++k) dst[k] = src[k ^ m];
        break;
    case GateKind::RY: // Y
        for (std::size_t k = 0; k < dim; ++k) {
            if (k & m) {
                dst[k] = Complex(0.0, 1.0) * src[k ^ m];
            } else {
                dst[k] = Complex(0.0, -1.0) * src[k ^ m];
            }
        }
        break;
    case GateKind::RZ: // Z
        for (std::size_t k = 0; k < dim; ++k) dst[k] = (k & m) ? -src[k] : src[k];
        break;
    default:
        throw std::logic_error("apply_pauli: not a rotation kind");
    }
}

void apply_with_angle(State& state, const Gate& gate, double angle) {
    const double half = 0.5 * angle;
    const double c = std::cos(half);
    const double s = std::sin(half);
    switch (gate.kind) {
    case GateKind::RX:
        apply_single_qubit(state, gate.q0, {c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0});
        break;
    case GateKind::RY:
        apply_single_qubit(state, gate.q0, {c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0});
        break;
    case GateKind::RZ: {
        const Complex e_minus(c, -s);
        const Complex e_plus(c, s);
        const std::uint64_t m = index_bit(state.n, gate.q0);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            state.amplitudes[k] *= (k & m) ? e_plus : e_minus;
        }
        break;
    }
    case GateKind::CZ: {
        const std::uint64_t mc = index_bit(state.n, gate.q0);
        const std::uint64_t mt = index_bit(state.n, gate.q1);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            if ((k & mc) && (k & mt)) state.amplitudes[k] = -state.amplitudes[k];
        }
        break;
    }
    case GateKind::CNOT: {
        const std::uint64_t mc = index_bit(state.n, gate.q0);
        const std::uint64_t mt = index_bit(state.n, gate.q1);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            if ((k & mc) && !(k & mt)) {
                std::swap(state.amplitudes[k], state.amplitudes[k | mt]);
            }
        }
        break;
    }
    case GateKind::X: {
        const std::uint64_t m = index_bit(state.n, gate.q0);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            if (!(k & m)) std::swap(state.amplitudes[k], state.amplitudes[k | m]);
        }
        break;
    }
    case GateKind::Identity:
        break;
    }
}

Complex inner(const State& a, const State& b) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        acc += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    }
    return acc;
}

}  // namespace

bool gate_is_parameterized(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool gate_is_two_qubit(GateKind kind) {
    return kind == GateKind::CZ || kind == GateKind::CNOT;
}

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CZ: return "cz";
    case GateKind::CNOT: return "cnot";
    case GateKind::X: return "x";
    case GateKind::Identity: return "identity";
    }
    return "?";
}

State State::zero(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("unsupported qubit count");
    State s;
    s.n = n;
    s.amplitudes.assign(std::size_t{1} << n, Complex(0.0, 0.0));
    s.amplitudes[0] = Complex(1.0, 0.0);
    return s;
}

double State::norm_squared() const {
    double acc = 0.0;
    for (const Complex& a : amplitudes) acc += std::norm(a);
    return acc;
}

Observable::Observable(int n, std::span<const int> z_qubits) : n_(n), index_mask_(0) {
    for (int q : z_qubits) {
        check_qubit(q, n);
        index_mask_ |= index_bit(n, q);
    }
}

Observable Observable::z(int n, int qubit) {
    const int qs[] = {qubit};
    return Observable(n, qs);
}

Observable Observable::zz(int n, int qubit_a, int qubit_b) {
    const int qs[] = {qubit_a, qubit_b};
    return Observable(n, qs);
}

bool Observable::has_z(int qubit) const {
    check_qubit(qubit, n_);
    return (index_mask_ & index_bit(n_, qubit)) != 0;
}

std::vector<int> Observable::z_qubits() const {
    std::vector<int> qs;
    for (int q = 0; q < n_; ++q) {
        if (index_mask_ & index_bit(n_, q)) qs.push_back(q);
    }
    return qs;
}

void apply_gate_in_place(State& state, const Gate& gate) {
    check_gate(gate, state.n);
    apply_with_angle(state, gate, gate.angle);
}

State apply_gate(const State& state, const Gate& gate) {
    State out = state;
    apply_gate_in_place(out, gate);
    return out;
}

void apply_gate_inverse_in_place(State& state, const Gate& gate) {
    check_gate(gate, state.n);
    if (gate.parameterized()) {
        apply_with_angle(state, gate, -gate.angle);
    } else {
        apply_with_angle(state, gate, gate.angle); // CZ, CNOT, X are involutions
    }
}

double expectation(const State& state, const Observable& obs) {
    if (obs.qubit_count() != state.n) {
        throw std::invalid_argument("observable qubit count does not match state");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k) {
        acc += obs.sign(k) * std::norm(state.amplitudes[k]);
    }
    return acc;
}

State run_circuit(std::span<const Gate> gates, int n) {
    State state = State::zero(n);
    for (const Gate& g : gates) apply_gate_in_place(state, g);
    return state;
}

double param_shift_grad(std::span<const Gate> gates, std::size_t param_location,
                        const Observable& obs) {
    if (param_location >= gates.size() || !gates[param_location].parameterized()) {
        throw std::invalid_argument("param_location does not refer to a rotation gate");
    }
    const int n = obs.qubit_count();
    std::vector<Gate> shifted(gates.begin(), gates.end());
    shifted[param_location].angle = gates[param_location].angle + M_PI / 2.0;
    const double e_plus = expectation(run_circuit(shifted, n), obs);
    shifted[param_location].angle = gates[param_location].angle - M_PI / 2.0;
    const double e_minus = expectation(run_circuit(shifted, n), obs);
    return 0.5 * (e_plus - e_minus);
}

ExpectationGradient expectation_with_gradient(std::span<const Gate> gates, int n,
                                              const Observable& obs) {
    GradientWorkspace ws;
    ExpectationGradient out;
    out.dangle.assign(gates.size(), 0.0);
    out.value = expectation_with_gradient(gates, n, obs, ws, out.dangle);
    return out;
}

double expectation_with_gradient(std::span<const Gate> gates, int n,
                                 const Observable& obs, GradientWorkspace& ws,
                                 std::span<double> dangle_out) {
    if (obs.qubit_count() != n) {
        throw std::invalid_argument("observable qubit count does not match circuit");
    }
    if (dangle_out.size() != gates.size()) {
        throw std::invalid_argument("gradient output size does not match gate count");
    }

    ws.ket = run_circuit(gates, n);
    const double value = expectation(ws.ket, obs);

    // mu = O |psi>; O is diagonal in the computational basis.
    ws.mu.n = n;
    ws.mu.amplitudes.resize(ws.ket.dim());
    for (std::size_t k = 0; k < ws.ket.dim(); ++k) {
        ws.mu.amplitudes[k] = obs.sign(k) * ws.ket.amplitudes[k];
    }

    // Reverse sweep. At the top of iteration k: ket = G_k..G_0|0> and
    // mu = (G_{k+1}..G_{K-1})^dag O |psi>, so for a rotation with Pauli
    // generator P the exact derivative is Im(<mu| P |ket>).
    for (int k = static_cast<int>(gates.size()) - 1; k >= 0; --k) {
        const Gate& g = gates[static_cast<std::size_t>(k)];
        if (g.parameterized()) {
            apply_pauli(ws.ket, ws.tmp, g.kind, g.q0);
            dangle_out[static_cast<std::size_t>(k)] = inner(ws.mu, ws.tmp).imag();
        } else {
            dangle_out[static_cast<std::size_t>(k)] = 0.0;
        }
        apply_gate_inverse_in_place(ws.ket, g);
        apply_gate_inverse_in_place(ws.mu, g);
    }
    return value;
}

}  // namespace dqasrl
