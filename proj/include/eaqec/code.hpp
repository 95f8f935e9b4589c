#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eaqec/gf4.hpp"
#include "eaqec/symplectic.hpp"

namespace eaqec {

struct DistanceResult {
    std::size_t d = 0;
    bool degenerate = false;
    // Search stopped at the cap: the true distance exceeds it and d is
    // not meaningful.
    bool exceeds_cap = false;
    // No codeword lies outside iso(C^perp) (k = 0 style); d then reports
    // the minimum nonzero weight of C itself.
    bool stabilizer_weight = false;
};

/// An [[n, k; c]] EAQEC code built from a check matrix.
/// h rows are ordered like the canonical F: the ell isotropic u-rows,
/// then the c symplectic u-rows, then their c hyperbolic partners.
struct EaqecCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t c = 0;
    std::size_t ell = 0;
    BinMatrix h;       // (2c + ell) x 2n row basis of C^perp
    BinMatrix h_iso;   // the ell isotropic rows
    SympDecomposition decomp;
    BinMatrix upsilon;  // 2n x 2n, maps h row-by-row to the canonical F
    // Qubit q <-> decomp.pairs[pair_of_qubit[q]]; message qubits first,
    // then ancilla (isotropic) qubits, then ebit (symplectic) qubits.
    std::vector<std::size_t> pair_of_qubit;
    std::optional<DistanceResult> distance_info;
};

EaqecCode from_check_matrix(const BinMatrix& h);
EaqecCode from_gf4(const QuaternaryCode& code);

bool is_dual_containing(const EaqecCode& code);

/// r = H (.) u^T: 2c + ell bits ordered like h's rows.
BitVector reduced_syndrome(const EaqecCode& code, const SympVector& u);

/// Theorem-style pairwise test: every distinct pair u, u' must satisfy
/// H (.) (u - u') != 0 or u - u' in rowspace(h_iso).
bool correctable(const EaqecCode& code, const std::vector<SympVector>& errors);

/// Basis of the codeword space C = rowspace(h)^perp, isotropic rows first.
BinMatrix codeword_space(const EaqecCode& code);

/// Minimum weight of C \ iso(C^perp) via Gray-code enumeration of C.
DistanceResult distance(const EaqecCode& code, std::size_t cap = 8);
DistanceResult distance_serial(const EaqecCode& code, std::size_t cap = 8);

struct SingletonCheck {
    bool holds = false;
    bool saturated = false;
};

/// n - k + c >= 2(d - 1), exact integers.
SingletonCheck singleton_check(const EaqecCode& code, const DistanceResult& dist);

/// sum_{j<=floor((d-1)/2)} 3^j C(n,j) <= 2^{n-k+c}; absent for
/// degenerate codes (the bound is not asserted there).
std::optional<bool> hamming_check(const EaqecCode& code, const DistanceResult& dist);

/// 1 - H(p) and 2 - H(p) for a Pauli/quaternary error distribution.
double hashing_rate(const std::array<double, 4>& p);
double shannon_quaternary_rate(const std::array<double, 4>& p);

struct Rational {
    long long num = 0;
    long long den = 1;  // positive; fraction stored reduced
    std::string to_string() const;
};

/// (k - c) / n, reduced.
Rational net_rate(const EaqecCode& code);

struct AugmentedCheck {
    BinMatrix h_aug;  // (2c + ell) x 2(n + c); rowspace is isotropic
};

AugmentedCheck augmented_check(const EaqecCode& code);

/// Adds a parity qubit: the all-X and all-Z rows plus h zero-padded.
EaqecCode extend(const EaqecCode& code);

/// Deletes one Z/X coordinate pair from a generator basis of C and
/// rebuilds from the dual. Throws on position out of range.
EaqecCode puncture(const EaqecCode& code, std::size_t position = 0);

/// Combines an [[n,k;c]] code with an [[n',c;0]] seed into an
/// [[n+n',k;0]] dual-containing code (the section-4 block matrix).
EaqecCode catalytic_combine(const EaqecCode& cqec, const EaqecCode& seed);

}  // namespace eaqec
