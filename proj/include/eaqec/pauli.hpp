#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "eaqec/symplectic.hpp"

namespace eaqec {

/// A Pauli operator modulo phase: the class [N_u] of u = (z|x).
struct PauliClass {
    SympVector vec;

    PauliClass() = default;
    explicit PauliClass(SympVector v) : vec(std::move(v)) {}

    std::size_t n() const { return vec.n(); }
    bool operator==(const PauliClass& other) const { return vec == other.vec; }
};

/// A concrete operator i^phase_exp * Z^z X^x.
struct PhasedPauli {
    SympVector vec;
    int phase_exp = 0;  // mod 4

    std::size_t n() const { return vec.n(); }
};

PauliClass pauli_mul(const PauliClass& a, const PauliClass& b);
bool commutes(const PauliClass& a, const PauliClass& b);

/// Characters I, X, Y, Z; position i of the string is qubit i.
PauliClass parse_pauli(std::string_view s);
std::string render_pauli(const PauliClass& p);

/// The representative N_u = (-i)^{wt(z AND x)} Z^z X^x, whose square is
/// the identity with +1 (it matches the I/X/Y/Z letters exactly).
PhasedPauli true_pauli(const SympVector& u);

/// Action of p on a computational basis state:
///   Z^z X^x |b> = (-1)^{z.(b+x)} |b+x>, times i^phase_exp.
/// Returns the image index bits and the unit amplitude.
std::pair<BitVector, std::complex<double>> phased_matrix_action(const PhasedPauli& p,
                                                                const BitVector& basis_index);

}  // namespace eaqec
