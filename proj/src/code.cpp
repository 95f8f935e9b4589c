#include "eaqec/code.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eaqec {

namespace {

// Largest codeword-space dimension the exhaustive distance search will
// enumerate (2^26 Gray steps).
constexpr std::size_t kMaxDistanceDim = 26;

}  // namespace

EaqecCode from_check_matrix(const BinMatrix& h_in) {
    if (h_in.ncols() % 2 != 0) throw std::invalid_argument("from_check_matrix: odd column count");
    EaqecCode code;
    code.n = h_in.ncols() / 2;
    code.decomp = symplectic_gram_schmidt(h_in);
    code.c = code.decomp.c;
    code.ell = code.decomp.ell;
    code.k = code.n - code.ell - code.c;

    // Qubit assignment: message qubits take the pairs outside C^perp in
    // decomposition order, ancilla qubits the isotropic pairs in order,
    // and ebit qubits the symplectic pairs in reverse order (the reverse
    // makes U_Upsilon reproduce the round structure of the Thm 1.1 proof,
    // where the last-found pairs sit closest to the message block).
    code.pair_of_qubit.resize(code.n);
    for (std::size_t q = 0; q < code.k; ++q)
        code.pair_of_qubit[q] = code.c + code.ell + q;
    for (std::size_t i = 0; i < code.ell; ++i)
        code.pair_of_qubit[code.k + i] = code.c + i;
    for (std::size_t j = 0; j < code.c; ++j)
        code.pair_of_qubit[code.k + code.ell + j] = code.c - 1 - j;

    // h rows follow the ordered set R: isotropic u's, symplectic u's,
    // then the symplectic v's, all in qubit order.
    code.h = BinMatrix(0, 2 * code.n);
    code.h_iso = BinMatrix(0, 2 * code.n);
    for (std::size_t i = 0; i < code.ell; ++i) {
        const auto& p = code.decomp.pairs[code.pair_of_qubit[code.k + i]];
        code.h.append_row(p.u.to_row());
        code.h_iso.append_row(p.u.to_row());
    }
    for (std::size_t j = 0; j < code.c; ++j)
        code.h.append_row(code.decomp.pairs[code.pair_of_qubit[code.k + code.ell + j]].u.to_row());
    for (std::size_t j = 0; j < code.c; ++j)
        code.h.append_row(code.decomp.pairs[code.pair_of_qubit[code.k + code.ell + j]].v.to_row());

    // Upsilon sends the pair assigned to qubit q to (g_q, h_q).
    BinMatrix p(2 * code.n, 2 * code.n);
    for (std::size_t q = 0; q < code.n; ++q) {
        const auto& pr = code.decomp.pairs[code.pair_of_qubit[q]];
        BitVector u = pr.u.to_row(), v = pr.v.to_row();
        for (std::size_t r = 0; r < 2 * code.n; ++r) {
            p.set(r, q, u.get(r));
            p.set(r, code.n + q, v.get(r));
        }
    }
    code.upsilon = invert(p);
    return code;
}

EaqecCode from_gf4(const QuaternaryCode& code4) {
    return from_check_matrix(lift_parity_check(code4));
}

bool is_dual_containing(const EaqecCode& code) { return code.c == 0; }

BitVector reduced_syndrome(const EaqecCode& code, const SympVector& u) {
    if (u.n() != code.n) throw std::invalid_argument("reduced_syndrome: dimension mismatch");
    BitVector r(code.h.nrows());
    for (std::size_t i = 0; i < code.h.nrows(); ++i)
        r.set(i, symp_product(SympVector::from_row(code.h.row(i)), u));
    return r;
}

bool correctable(const EaqecCode& code, const std::vector<SympVector>& errors) {
    for (std::size_t i = 0; i < errors.size(); ++i) {
        for (std::size_t j = i + 1; j < errors.size(); ++j) {
            SympVector diff = symp_add(errors[i], errors[j]);
            if (diff.is_zero()) continue;  // same error listed twice
            if (!reduced_syndrome(code, diff).is_zero()) continue;  // (i) holds
            if (code.h_iso.nrows() > 0 && row_space_contains(code.h_iso, diff.to_row()))
                continue;  // (ii) holds
            return false;
        }
    }
    return true;
}

BinMatrix codeword_space(const EaqecCode& code) {
    BinMatrix basis = code.h_iso;
    if (basis.nrows() == 0) basis = BinMatrix(0, 2 * code.n);
    BinMatrix dual = symplectic_dual(code.h);
    for (const auto& row : dual.rows())
        if (basis.nrows() == 0 ? !row.is_zero() : !row_space_contains(basis, row))
            basis.append_row(row);
    return basis;
}

namespace {

struct DistanceScan {
    std::size_t min_noniso = SIZE_MAX;
    std::size_t min_iso = SIZE_MAX;
};

// Scans Gray-code positions [begin, end) of the combination space.
DistanceScan scan_range(const std::vector<BitVector>& bz, const std::vector<BitVector>& bx,
                        std::size_t ell, std::uint64_t begin, std::uint64_t end) {
    DistanceScan out;
    if (begin >= end) return out;
    const std::size_t n = bz.empty() ? 0 : bz[0].size();
    const std::uint64_t iso_limit = ell >= 64 ? ~0ull : (1ull << ell);
    BitVector z(n), x(n);
    std::uint64_t mask = begin ^ (begin >> 1);
    for (std::size_t b = 0; b < bz.size(); ++b) {
        if ((mask >> b) & 1) {
            z.xor_assign(bz[b]);
            x.xor_assign(bx[b]);
        }
    }
    for (std::uint64_t t = begin; t < end; ++t) {
        if (t != begin) {
            std::size_t b = std::countr_zero(t);
            mask ^= 1ull << b;
            z.xor_assign(bz[b]);
            x.xor_assign(bx[b]);
        }
        if (mask == 0) continue;
        std::size_t w = BitVector::bit_or(z, x).popcount();
        if (mask < iso_limit) {
            if (w < out.min_iso) out.min_iso = w;
        } else {
            if (w < out.min_noniso) out.min_noniso = w;
        }
    }
    return out;
}

DistanceResult distance_impl(const EaqecCode& code, std::size_t cap, bool parallel) {
    BinMatrix basis = codeword_space(code);
    const std::size_t dim = basis.nrows();
    if (dim > kMaxDistanceDim)
        throw std::runtime_error("distance: codeword space too large for exhaustive search");
    std::vector<BitVector> bz, bx;
    for (const auto& row : basis.rows()) {
        SympVector s = SympVector::from_row(row);
        bz.push_back(s.z);
        bx.push_back(s.x);
    }
    const std::uint64_t total = 1ull << dim;

    DistanceScan scan;
    if (!parallel || total < (1ull << 12)) {
        scan = scan_range(bz, bx, code.ell, 0, total);
    } else {
#ifdef _OPENMP
        int nthreads = omp_get_max_threads();
#else
        int nthreads = 1;
#endif
        std::vector<DistanceScan> partial(nthreads);
        const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
        for (int tid = 0; tid < nthreads; ++tid) {
            std::uint64_t begin = std::min<std::uint64_t>(tid * chunk, total);
            std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
            partial[tid] = scan_range(bz, bx, code.ell, begin, end);
        }
        for (const auto& p : partial) {
            scan.min_noniso = std::min(scan.min_noniso, p.min_noniso);
            scan.min_iso = std::min(scan.min_iso, p.min_iso);
        }
    }

    DistanceResult res;
    if (scan.min_noniso == SIZE_MAX) {
        // Every codeword is a stabilizer element (k = 0 style).
        res.stabilizer_weight = true;
        res.d = scan.min_iso == SIZE_MAX ? 0 : scan.min_iso;
        if (res.d > cap) {
            res.exceeds_cap = true;
            res.d = 0;
        }
        return res;
    }
    if (scan.min_noniso > cap) {
        res.exceeds_cap = true;
        res.degenerate = scan.min_iso < scan.min_noniso;
        return res;
    }
    res.d = scan.min_noniso;
    res.degenerate = scan.min_iso < res.d;
    return res;
}

}  // namespace

DistanceResult distance(const EaqecCode& code, std::size_t cap) {
    return distance_impl(code, cap, true);
}

DistanceResult distance_serial(const EaqecCode& code, std::size_t cap) {
    return distance_impl(code, cap, false);
}

SingletonCheck singleton_check(const EaqecCode& code, const DistanceResult& dist) {
    SingletonCheck out;
    if (dist.exceeds_cap) throw std::invalid_argument("singleton_check: distance unknown");
    long long lhs = static_cast<long long>(code.n) - static_cast<long long>(code.k) +
                    static_cast<long long>(code.c);
    long long rhs = 2 * (static_cast<long long>(dist.d) - 1);
    out.holds = lhs >= rhs;
    out.saturated = lhs == rhs;
    return out;
}

std::optional<bool> hamming_check(const EaqecCode& code, const DistanceResult& dist) {
    if (dist.exceeds_cap) throw std::invalid_argument("hamming_check: distance unknown");
    if (dist.degenerate) return std::nullopt;
    const std::size_t t = (dist.d - 1) / 2;
    unsigned long long lhs = 0, binom = 1, pow3 = 1;
    for (std::size_t j = 0; j <= t; ++j) {
        lhs += pow3 * binom;
        binom = binom * (code.n - j) / (j + 1);
        pow3 *= 3;
    }
    long long expo = static_cast<long long>(code.n) - static_cast<long long>(code.k) +
                     static_cast<long long>(code.c);
    if (expo >= 63) return true;
    if (expo < 0) return lhs == 0;
    return lhs <= (1ull << expo);
}

namespace {

double entropy_bits(const std::array<double, 4>& p) {
    double sum = 0, h = 0;
    for (double v : p) {
        if (v < 0) throw std::invalid_argument("entropy: negative probability");
        sum += v;
        if (v > 0) h -= v * std::log2(v);
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("entropy: does not sum to 1");
    return h;
}

}  // namespace

double hashing_rate(const std::array<double, 4>& p) { return 1.0 - entropy_bits(p); }

double shannon_quaternary_rate(const std::array<double, 4>& p) { return 2.0 - entropy_bits(p); }

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational net_rate(const EaqecCode& code) {
    Rational r;
    r.num = static_cast<long long>(code.k) - static_cast<long long>(code.c);
    r.den = static_cast<long long>(code.n);
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

AugmentedCheck augmented_check(const EaqecCode& code) {
    const std::size_t n = code.n, c = code.c, ell = code.ell;
    AugmentedCheck out;
    out.h_aug = BinMatrix(0, 2 * (n + c));
    for (std::size_t i = 0; i < code.h.nrows(); ++i) {
        SympVector s = SympVector::from_row(code.h.row(i));
        BitVector bz(c), bx(c);
        if (i >= ell && i < ell + c) bz.set(i - ell, true);        // symplectic u-row: Z on Bob
        if (i >= ell + c) bx.set(i - ell - c, true);               // symplectic v-row: X on Bob
        out.h_aug.append_row(BitVector::concat(BitVector::concat(s.z, bz),
                                               BitVector::concat(s.x, bx)));
    }
    return out;
}

EaqecCode extend(const EaqecCode& code) {
    const std::size_t n = code.n;
    BinMatrix h(0, 2 * (n + 1));
    BitVector all_x(2 * (n + 1)), all_z(2 * (n + 1));
    for (std::size_t i = 0; i < n + 1; ++i) {
        all_x.set(n + 1 + i, true);
        all_z.set(i, true);
    }
    h.append_row(all_x);
    h.append_row(all_z);
    for (const auto& row : code.h.rows()) {
        SympVector s = SympVector::from_row(row);
        BitVector z(n + 1), x(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            z.set(i, s.z.get(i));
            x.set(i, s.x.get(i));
        }
        h.append_row(BitVector::concat(z, x));
    }
    return from_check_matrix(h);
}

EaqecCode puncture(const EaqecCode& code, std::size_t position) {
    if (code.n < 2) throw std::invalid_argument("puncture: need at least 2 qubits");
    if (position >= code.n) throw std::invalid_argument("puncture: position out of range");
    BinMatrix cw = codeword_space(code);
    BinMatrix punctured(0, 2 * (code.n - 1));
    for (const auto& row : cw.rows()) {
        SympVector s = SympVector::from_row(row);
        BitVector z(code.n - 1), x(code.n - 1);
        std::size_t out = 0;
        for (std::size_t i = 0; i < code.n; ++i) {
            if (i == position) continue;
            z.set(out, s.z.get(i));
            x.set(out, s.x.get(i));
            ++out;
        }
        punctured.append_row(BitVector::concat(z, x));
    }
    return from_check_matrix(symplectic_dual(punctured));
}

EaqecCode catalytic_combine(const EaqecCode& cqec, const EaqecCode& seed) {
    if (seed.c != 0) throw std::invalid_argument("catalytic_combine: seed must have c = 0");
    if (seed.k != cqec.c) throw std::invalid_argument("catalytic_combine: seed.k must equal cqec.c");
    const std::size_t n = cqec.n, np = seed.n, c = cqec.c;

    // Extend C'^perp greedily to a maximal isotropic subspace; the c new
    // vectors play the role of the u_i.
    BinMatrix iso = row_basis(seed.h);
    std::vector<BitVector> u_vecs;
    while (iso.nrows() < np) {
        BinMatrix dual = symplectic_dual(iso);
        bool grown = false;
        for (const auto& cand : dual.rows()) {
            if (!row_space_contains(iso, cand)) {
                iso.append_row(cand);
                u_vecs.push_back(cand);
                grown = true;
                break;
            }
        }
        if (!grown) throw std::logic_error("catalytic_combine: isotropic extension stalled");
    }
    if (u_vecs.size() != c) throw std::logic_error("catalytic_combine: wrong extension count");

    // Hyperbolic partners w_j inside C': w_j (.) C'^perp = 0,
    // w_j (.) u_i = delta_ij, w_j (.) w_i = 0 for i < j.
    auto twisted = [np](const BitVector& row) {
        SympVector s = SympVector::from_row(row);
        return BitVector::concat(s.x, s.z);
    };
    std::vector<BitVector> w_vecs;
    for (std::size_t j = 0; j < c; ++j) {
        BinMatrix constraints(0, 2 * np);
        BitVector rhs(seed.h.nrows() + c + w_vecs.size());
        std::size_t r = 0;
        for (const auto& row : seed.h.rows()) constraints.append_row(twisted(row)), ++r;
        for (std::size_t i = 0; i < c; ++i) {
            constraints.append_row(twisted(u_vecs[i]));
            rhs.set(r++, i == j);
        }
        for (const auto& w : w_vecs) constraints.append_row(twisted(w)), ++r;
        auto sol = solve(constraints, rhs);
        if (!sol) throw std::logic_error("catalytic_combine: no hyperbolic partner");
        w_vecs.push_back(*sol);
    }

    // B' row for h row i: zero (isotropic), u_j (symplectic u), or w_j
    // (symplectic v).
    auto combined_row = [&](const BitVector& hrow, const BitVector& brow) {
        SympVector a = SympVector::from_row(hrow);
        SympVector b = SympVector::from_row(brow);
        return BitVector::concat(BitVector::concat(a.z, b.z), BitVector::concat(a.x, b.x));
    };
    BinMatrix h(0, 2 * (n + np));
    const BitVector zero_np(2 * np);
    for (std::size_t i = 0; i < cqec.h.nrows(); ++i) {
        BitVector bprime = zero_np;
        if (i >= cqec.ell && i < cqec.ell + c) bprime = u_vecs[i - cqec.ell];
        if (i >= cqec.ell + c) bprime = w_vecs[i - cqec.ell - c];
        h.append_row(combined_row(cqec.h.row(i), bprime));
    }
    const BitVector zero_n(2 * n);
    for (const auto& row : seed.h.rows()) h.append_row(combined_row(zero_n, row));
    return from_check_matrix(h);
}

}  // namespace eaqec
