#pragma once

#include <cstddef>
#include <vector>

#include "eaqec/gf2.hpp"

namespace eaqec {

/// An element u = (z|x) of (Z_2)^{2n}.
struct SympVector {
    BitVector z;
    BitVector x;

    SympVector() = default;
    SympVector(BitVector z_part, BitVector x_part);

    std::size_t n() const { return z.size(); }

    /// Packs into a single length-2n row, z-block then x-block.
    BitVector to_row() const;
    static SympVector from_row(const BitVector& row);

    bool is_zero() const { return z.is_zero() && x.is_zero(); }
    bool operator==(const SympVector& other) const { return z == other.z && x == other.x; }
};

SympVector symp_add(const SympVector& u, const SympVector& v);

/// z.x' + z'.x mod 2; zero iff the corresponding Pauli operators commute.
bool symp_product(const SympVector& u, const SympVector& v);

/// wt(z OR x): the number of qubits the operator touches.
std::size_t weight(const SympVector& u);

/// u with symp_product(u, v) = 1 and both self-products zero (automatic
/// over GF(2)).
struct HyperbolicPair {
    SympVector u;
    SympVector v;
};

enum class PairOrigin {
    Symplectic,  // both u and v lie in the input space
    Isotropic,   // only u lies in the input space
    Outside,     // neither does
};

/// Output of the hyperbolic-pair decomposition: a full symplectic basis
/// of (Z_2)^{2n} ordered as c symplectic pairs, ell isotropic pairs,
/// then the n-c-ell pairs outside the input space.
struct SympDecomposition {
    std::vector<HyperbolicPair> pairs;
    std::vector<PairOrigin> origins;
    std::size_t c = 0;
    std::size_t ell = 0;
    std::size_t m = 0;  // dimension of the input row space; 2c + ell == m
    std::size_t n = 0;

    const HyperbolicPair& symplectic_pair(std::size_t i) const { return pairs[i]; }
    const HyperbolicPair& isotropic_pair(std::size_t i) const { return pairs[c + i]; }
    const HyperbolicPair& outside_pair(std::size_t i) const { return pairs[c + ell + i]; }
};

/// The n-round pairing algorithm. Rows of v need not be independent; a
/// row basis is extracted first (original rows kept, in order).
/// Requires an even column count.
SympDecomposition symplectic_gram_schmidt(const BinMatrix& v);

/// Basis of V^perp under the symplectic form, computed as the kernel of
/// rows(V) * J.
BinMatrix symplectic_dual(const BinMatrix& v);

/// Basis of iso(V) = V intersect V^perp; the unique isotropic part.
BinMatrix iso_part(const BinMatrix& v);

bool is_isotropic(const BinMatrix& v);
bool is_symplectic_subspace(const BinMatrix& v);

/// The 2n x 2n block matrix J = [[0, I], [I, 0]].
BinMatrix symplectic_form_matrix(std::size_t n);

/// The invertible matrix Upsilon with Upsilon * u_i^T = g_i^T and
/// Upsilon * v_i^T = h_i^T for the decomposition's pairs in order.
BinMatrix standardizing_symplectomorphism(const SympDecomposition& d);

/// True iff m is invertible and M J M^T = J.
bool verify_symplectomorphism(const BinMatrix& m);

/// Image Upsilon(u) under the column convention Upsilon * u^T.
SympVector apply_symplectomorphism(const BinMatrix& upsilon, const SympVector& u);

BinMatrix invert(const BinMatrix& m);  // GF(2) inverse; throws if singular

}  // namespace eaqec
