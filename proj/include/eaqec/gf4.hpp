#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaqec/symplectic.hpp"

namespace eaqec {

/// Element of F_4 = {0, 1, w, W} (w = omega, W = omega-bar), encoded so
/// that the gamma image is (z|x) with value = 2z + x:
///   0 -> 0, W -> 1, w -> 2, 1 -> 3.
/// Addition is then plain XOR.
using Gf4 = std::uint8_t;

inline constexpr Gf4 kGf4Zero = 0;
inline constexpr Gf4 kGf4OmegaBar = 1;
inline constexpr Gf4 kGf4Omega = 2;
inline constexpr Gf4 kGf4One = 3;

using Gf4Vector = std::vector<Gf4>;

Gf4 gf4_add(Gf4 a, Gf4 b);
Gf4 gf4_mul(Gf4 a, Gf4 b);
Gf4 gf4_inv(Gf4 a);  // throws on zero
bool gf4_trace(Gf4 a);
Gf4 gf4_conjugate(Gf4 a);

char gf4_to_char(Gf4 a);
Gf4 gf4_from_char(char c);  // accepts '0','1','w','W'

struct Gf4Matrix {
    std::vector<Gf4Vector> rows;
    std::size_t ncols = 0;

    Gf4Matrix() = default;
    Gf4Matrix(std::size_t nr, std::size_t nc) : rows(nr, Gf4Vector(nc, 0)), ncols(nc) {}

    std::size_t nrows() const { return rows.size(); }
    Gf4 get(std::size_t r, std::size_t c) const { return rows[r][c]; }
    void set(std::size_t r, std::size_t c, Gf4 v) { rows[r][c] = v; }

    Gf4Vector mul_vector(const Gf4Vector& v) const;  // M * v^T
    bool operator==(const Gf4Matrix& other) const = default;
};

/// One row per line over {0,1,w,W}; blank lines and '#' comments skipped.
Gf4Matrix parse_gf4_text(std::string_view text);
std::string format_gf4_text(const Gf4Matrix& m);

/// Right kernel of m: columns of the result span { v : m * v^T = 0 };
/// returned as a matrix whose ROWS are the basis vectors.
Gf4Matrix gf4_kernel(const Gf4Matrix& m);
std::size_t gf4_rank(const Gf4Matrix& m);

/// A classical [n, k, d]_4 code given by its parity check matrix.
struct QuaternaryCode {
    std::size_t n = 0;
    std::size_t k = 0;
    Gf4Matrix h4;                              // (n-k) x n
    std::optional<Gf4Matrix> g4;               // n x k, H4 * G4 = 0
    std::optional<std::size_t> declared_distance;

    static QuaternaryCode from_parity_check(Gf4Matrix h4,
                                            std::optional<std::size_t> distance = std::nullopt);
    Gf4Vector encode(const Gf4Vector& message) const;  // G4 * message
    Gf4Vector syndrome(const Gf4Vector& received) const;
};

/// Componentwise gamma, z-bits gathered first then x-bits.
SympVector gamma(const Gf4Vector& a);
Gf4Vector gamma_inverse(const SympVector& u);

/// tr<a,b> = tr(sum conj(a_i) * b_i).
bool trace_inner_product(const Gf4Vector& a, const Gf4Vector& b);

std::size_t wt4(const Gf4Vector& a);

/// H = gamma(H4~) where H4~ stacks w*H4 over W*H4: a 2(n-k) x 2n binary
/// symplectic matrix.
BinMatrix lift_parity_check(const QuaternaryCode& code);

struct Gf4DecodeResult {
    Gf4Vector corrected;
    bool failed = false;  // syndrome outside the precomputed table
};

/// Syndrome-table decoder correcting any error of weight <= (d-1)/2.
/// Requires declared_distance.
Gf4DecodeResult classical_decode(const QuaternaryCode& code, const Gf4Vector& received);

}  // namespace eaqec
