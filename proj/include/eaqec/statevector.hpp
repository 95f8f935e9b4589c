#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "eaqec/code.hpp"
#include "eaqec/gf4.hpp"
#include "eaqec/pauli.hpp"

namespace eaqec {

using Complex = std::complex<double>;

/// Desk-scale exact state on m qubits; qubit 0 is the most significant
/// bit of the amplitude index (|q0 q1 ... q_{m-1}>).
struct StateVec {
    std::size_t m = 0;
    std::vector<Complex> amp;

    StateVec() = default;
    explicit StateVec(std::size_t qubits);

    std::size_t dim() const { return amp.size(); }
    double norm() const;
    void normalize();
};

struct UnitaryMatrix {
    std::size_t m = 0;
    std::vector<std::vector<Complex>> entries;  // entries[row][col]

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(std::size_t qubits);
};

/// The simulation guard: 12 qubits unless EAQEC_MAX_QUBITS overrides it.
/// Exceeding it throws std::length_error.
std::size_t max_qubits();

StateVec basis_state(std::size_t m, std::size_t index);

/// Inner product <a|b>.
Complex overlap(const StateVec& a, const StateVec& b);

/// |<a|b>| within tol of 1, i.e. equality up to a global phase.
bool equal_up_to_phase(const StateVec& a, const StateVec& b, double tol = 1e-9);

/// Embeds p onto the listed qubits (distinct, in range).
StateVec apply_pauli(const StateVec& state, const PhasedPauli& p,
                     const std::vector<std::size_t>& qubits);

/// <state| N_p |state> for p embedded on the listed qubits.
Complex pauli_expectation(const StateVec& state, const PhasedPauli& p,
                          const std::vector<std::size_t>& qubits);

/// c-fold |Phi> with all Alice halves first: 2^{-c/2} sum_a |a>|a>.
StateVec bell_state(std::size_t c);

StateVec tensor(const StateVec& a, const StateVec& b);

/// Simultaneous +1 eigenstate via the projector product applied to the
/// first standard-basis seed it does not annihilate. Generators must
/// pairwise commute and be independent.
StateVec stabilizer_eigenstate(const std::vector<PhasedPauli>& gens);

/// Theorem 1.2: U with [N_{Upsilon(u)}] = [U N_u U^{-1}] for all u.
UnitaryMatrix synthesize_clifford(const BinMatrix& upsilon, std::size_t n);

bool is_unitary(const UnitaryMatrix& m, double tol = 1e-9);

/// Applies u to the leading `top` qubits of the state.
StateVec apply_unitary_leading(const StateVec& state, const UnitaryMatrix& u, std::size_t top);

/// U_enc = U_Upsilon^{-1} U_0 on Alice's n qubits; register layout is
/// [k message][ell ancilla][c Alice ebit halves][c Bob halves].
StateVec encode(const EaqecCode& code, const StateVec& message);

struct DecodeResult {
    StateVec message;
    BitVector syndrome;        // 2c + ell bits, ordered like h's rows
    bool miscorrection = false;  // ancilla/ebit registers not restored
};

/// Measures the H_aug stabilizers, picks a minimum-weight consistent
/// error, undoes it and the encoding. Throws std::runtime_error when the
/// state is not a stabilizer eigenstate (non-Pauli corruption).
DecodeResult decode(const EaqecCode& code, const StateVec& state);

/// Superdense coding of 2c bits (z-block then x-block) through a Pauli
/// channel error on Alice's c transmitted qubits.
BitVector superdense_simulate(const BitVector& message, const PauliClass& channel_error);

struct EacecResult {
    Gf4Vector message;
    bool failed = false;
};

/// Prop 5.1 classical side: send G4*message through the additive
/// quaternary channel and decode by syndrome table.
EacecResult eacec_simulate(const QuaternaryCode& code4, const Gf4Vector& message,
                           const Gf4Vector& error);

}  // namespace eaqec
