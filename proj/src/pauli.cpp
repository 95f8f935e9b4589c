#include "eaqec/pauli.hpp"

#include <stdexcept>

namespace eaqec {

PauliClass pauli_mul(const PauliClass& a, const PauliClass& b) {
    return PauliClass(symp_add(a.vec, b.vec));
}

bool commutes(const PauliClass& a, const PauliClass& b) {
    return !symp_product(a.vec, b.vec);
}

PauliClass parse_pauli(std::string_view s) {
    BitVector z(s.size()), x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I': break;
            case 'X': x.set(i, true); break;
            case 'Z': z.set(i, true); break;
            case 'Y': z.set(i, true); x.set(i, true); break;
            default:
                throw std::invalid_argument(std::string("parse_pauli: bad character '") + s[i] + "'");
        }
    }
    return PauliClass(SympVector(std::move(z), std::move(x)));
}

std::string render_pauli(const PauliClass& p) {
    std::string s(p.n(), 'I');
    for (std::size_t i = 0; i < p.n(); ++i) {
        bool z = p.vec.z.get(i), x = p.vec.x.get(i);
        s[i] = z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I');
    }
    return s;
}

PhasedPauli true_pauli(const SympVector& u) {
    // Each qubit with z_i = x_i = 1 contributes ZX = -iY, so multiply by
    // (-i)^count to land on the Hermitian, involutive representative.
    std::size_t count = 0;
    for (std::size_t i = 0; i < u.n(); ++i) count += (u.z.get(i) && u.x.get(i));
    return PhasedPauli{u, static_cast<int>((4 - count % 4) % 4)};
}

std::pair<BitVector, std::complex<double>> phased_matrix_action(const PhasedPauli& p,
                                                                const BitVector& basis_index) {
    if (basis_index.size() != p.n())
        throw std::invalid_argument("phased_matrix_action: index length mismatch");
    BitVector image = xor_add(basis_index, p.vec.x);
    bool sign = p.vec.z.dot(image);
    static const std::complex<double> kI{0.0, 1.0};
    std::complex<double> amp{1.0, 0.0};
    switch (p.phase_exp & 3) {
        case 1: amp = kI; break;
        case 2: amp = -1.0; break;
        case 3: amp = -kI; break;
        default: break;
    }
    if (sign) amp = -amp;
    return {std::move(image), amp};
}

}  // namespace eaqec
