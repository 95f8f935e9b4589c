#include "eaqec/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace eaqec {

namespace {

void guard_qubits(std::size_t m) {
    if (m > max_qubits())
        throw std::length_error("statevector: qubit count exceeds the simulation guard");
}

// Bits of `index` at the given qubit positions (qubit 0 = MSB).
BitVector extract_bits(std::size_t index, std::size_t m, const std::vector<std::size_t>& qubits) {
    BitVector out(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i)
        out.set(i, (index >> (m - 1 - qubits[i])) & 1);
    return out;
}

std::size_t deposit_bits(std::size_t index, std::size_t m, const std::vector<std::size_t>& qubits,
                         const BitVector& bits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        std::size_t shift = m - 1 - qubits[i];
        index = (index & ~(std::size_t{1} << shift)) |
                (static_cast<std::size_t>(bits.get(i)) << shift);
    }
    return index;
}

std::vector<std::size_t> iota_qubits(std::size_t count) {
    std::vector<std::size_t> q(count);
    for (std::size_t i = 0; i < count; ++i) q[i] = i;
    return q;
}

}  // namespace

std::size_t max_qubits() {
    if (const char* env = std::getenv("EAQEC_MAX_QUBITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 12;
}

StateVec::StateVec(std::size_t qubits) : m(qubits) {
    guard_qubits(qubits);
    amp.assign(std::size_t{1} << qubits, Complex{0.0, 0.0});
}

double StateVec::norm() const {
    double s = 0;
    for (const Complex& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void StateVec::normalize() {
    double n = norm();
    if (n < 1e-300) throw std::runtime_error("StateVec::normalize: zero vector");
    for (Complex& a : amp) a /= n;
}

UnitaryMatrix::UnitaryMatrix(std::size_t qubits) : m(qubits) {
    guard_qubits(qubits);
    std::size_t d = std::size_t{1} << qubits;
    entries.assign(d, std::vector<Complex>(d, Complex{0.0, 0.0}));
}

StateVec basis_state(std::size_t m, std::size_t index) {
    StateVec s(m);
    s.amp[index] = 1.0;
    return s;
}

Complex overlap(const StateVec& a, const StateVec& b) {
    if (a.m != b.m) throw std::invalid_argument("overlap: qubit count mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

bool equal_up_to_phase(const StateVec& a, const StateVec& b, double tol) {
    if (a.m != b.m) return false;
    return std::abs(std::abs(overlap(a, b)) - 1.0) <= tol;
}

StateVec apply_pauli(const StateVec& state, const PhasedPauli& p,
                     const std::vector<std::size_t>& qubits) {
    if (qubits.size() != p.n()) throw std::invalid_argument("apply_pauli: qubit list mismatch");
    for (std::size_t q : qubits)
        if (q >= state.m) throw std::invalid_argument("apply_pauli: qubit index out of range");
    StateVec out(state.m);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (state.amp[i] == Complex{0.0, 0.0}) continue;
        auto [image, amp] = phased_matrix_action(p, extract_bits(i, state.m, qubits));
        out.amp[deposit_bits(i, state.m, qubits, image)] += amp * state.amp[i];
    }
    return out;
}

Complex pauli_expectation(const StateVec& state, const PhasedPauli& p,
                          const std::vector<std::size_t>& qubits) {
    return overlap(state, apply_pauli(state, p, qubits));
}

StateVec bell_state(std::size_t c) {
    StateVec s(2 * c);
    double a = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << c));
    for (std::size_t pat = 0; pat < (std::size_t{1} << c); ++pat)
        s.amp[(pat << c) | pat] = a;
    return s;
}

StateVec tensor(const StateVec& a, const StateVec& b) {
    StateVec out(a.m + b.m);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.amp[i] == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < b.dim(); ++j)
            out.amp[(i << b.m) | j] = a.amp[i] * b.amp[j];
    }
    return out;
}

StateVec stabilizer_eigenstate(const std::vector<PhasedPauli>& gens) {
    if (gens.empty()) throw std::invalid_argument("stabilizer_eigenstate: no generators");
    const std::size_t m = gens[0].n();
    BinMatrix rows(0, 2 * m);
    for (const auto& g : gens) {
        if (g.n() != m) throw std::invalid_argument("stabilizer_eigenstate: size mismatch");
        rows.append_row(g.vec.to_row());
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (symp_product(gens[i].vec, gens[j].vec))
                throw std::invalid_argument("stabilizer_eigenstate: generators do not commute");
    if (rank(rows) != gens.size())
        throw std::invalid_argument("stabilizer_eigenstate: dependent generators");

    auto all_qubits = iota_qubits(m);
    for (std::size_t seed = 0; seed < (std::size_t{1} << m); ++seed) {
        StateVec psi = basis_state(m, seed);
        for (const auto& g : gens) {
            StateVec image = apply_pauli(psi, g, all_qubits);
            for (std::size_t i = 0; i < psi.dim(); ++i)
                psi.amp[i] = 0.5 * (psi.amp[i] + image.amp[i]);
        }
        if (psi.norm() > 1e-6) {
            psi.normalize();
            return psi;
        }
    }
    throw std::runtime_error("stabilizer_eigenstate: projector annihilates every seed");
}

UnitaryMatrix synthesize_clifford(const BinMatrix& upsilon, std::size_t n) {
    if (!verify_symplectomorphism(upsilon) || upsilon.nrows() != 2 * n)
        throw std::invalid_argument("synthesize_clifford: not a symplectomorphism");
    std::vector<PhasedPauli> stab;
    std::vector<SympVector> vtilde;
    for (std::size_t i = 0; i < n; ++i) {
        SympVector gi(BitVector::unit(n, i), BitVector(n));
        SympVector hi(BitVector(n), BitVector::unit(n, i));
        stab.push_back(true_pauli(apply_symplectomorphism(upsilon, gi)));
        vtilde.push_back(apply_symplectomorphism(upsilon, hi));
    }
    StateVec zero_tilde = stabilizer_eigenstate(stab);
    auto all_qubits = iota_qubits(n);
    UnitaryMatrix u(n);
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
        // Ordered product of the partner Paulis, not the single Pauli of
        // the summed vector: the product convention is what makes the
        // conjugation U N_{g_i} U^{-1} = N_{u~_i}, U N_{h_i} U^{-1} =
        // N_{v~_i} exact (the representatives of commuting classes
        // combine with -1 factors that would otherwise leak into the
        // contract).
        StateVec col = zero_tilde;
        for (std::size_t i = 0; i < n; ++i)
            if ((b >> (n - 1 - i)) & 1) col = apply_pauli(col, true_pauli(vtilde[i]), all_qubits);
        for (std::size_t r = 0; r < col.dim(); ++r) u.entries[r][b] = col.amp[r];
    }
    return u;
}

bool is_unitary(const UnitaryMatrix& m, double tol) {
    const std::size_t d = m.entries.size();
    for (const auto& row : m.entries)
        if (row.size() != d) return false;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t r = 0; r < d; ++r)
                s += std::conj(m.entries[r][i]) * m.entries[r][j];
            if (std::abs(s - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) > tol) return false;
        }
    }
    return true;
}

StateVec apply_unitary_leading(const StateVec& state, const UnitaryMatrix& u, std::size_t top) {
    if (top > state.m || u.entries.size() != (std::size_t{1} << top))
        throw std::invalid_argument("apply_unitary_leading: size mismatch");
    const std::size_t rest = state.m - top;
    StateVec out(state.m);
    for (std::size_t a = 0; a < (std::size_t{1} << top); ++a) {
        for (std::size_t ap = 0; ap < (std::size_t{1} << top); ++ap) {
            Complex e = u.entries[a][ap];
            if (e == Complex{0.0, 0.0}) continue;
            for (std::size_t b = 0; b < (std::size_t{1} << rest); ++b)
                out.amp[(a << rest) | b] += e * state.amp[(ap << rest) | b];
        }
    }
    return out;
}

namespace {

// The |b~> machinery for a code: ut_q = u of the pair on qubit q (their
// true Paulis stabilize |0~>), vt_q = the partner generating |b~>.
struct TildeBasis {
    StateVec zero_tilde;               // n qubits
    std::vector<SympVector> vtilde;    // per qubit
};

TildeBasis tilde_basis(const EaqecCode& code) {
    TildeBasis tb;
    std::vector<PhasedPauli> stab;
    for (std::size_t q = 0; q < code.n; ++q) {
        const auto& pr = code.decomp.pairs[code.pair_of_qubit[q]];
        stab.push_back(true_pauli(pr.u));
        tb.vtilde.push_back(pr.v);
    }
    tb.zero_tilde = stabilizer_eigenstate(stab);
    return tb;
}

// |b~> as the ordered product of the partner true Paulis, not the single
// Pauli of the summed vector. The product convention keeps the codespace
// an exact +1 eigenspace of the H_aug stabilizers; the summed one leaks
// -1 factors between commuting representatives and (for the worked
// example) even turns a single-qubit X into an undetectable logical
// operator.
StateVec tilde_state(const EaqecCode& code, const TildeBasis& tb, std::size_t bits) {
    static thread_local std::vector<std::size_t> qubits;
    qubits.resize(code.n);
    for (std::size_t i = 0; i < code.n; ++i) qubits[i] = i;
    StateVec out = tb.zero_tilde;
    for (std::size_t q = 0; q < code.n; ++q)
        if ((bits >> (code.n - 1 - q)) & 1)
            out = apply_pauli(out, true_pauli(tb.vtilde[q]), qubits);
    return out;
}

StateVec encode_with(const EaqecCode& code, const TildeBasis& tb, const StateVec& message) {
    const std::size_t n = code.n, k = code.k, c = code.c, ell = code.ell;
    guard_qubits(n + c);
    StateVec out(n + c);
    const double bell_amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << c));
    for (std::size_t b = 0; b < (std::size_t{1} << k); ++b) {
        if (message.amp[b] == Complex{0.0, 0.0}) continue;
        for (std::size_t a = 0; a < (std::size_t{1} << c); ++a) {
            // Alice's pre-encoding pattern: message bits, ell zeros, ebit
            // half a; Bob holds the matching a.
            std::size_t alice = (b << (ell + c)) | a;
            StateVec col = tilde_state(code, tb, alice);
            Complex w = message.amp[b] * bell_amp;
            for (std::size_t i = 0; i < col.dim(); ++i) {
                if (col.amp[i] == Complex{0.0, 0.0}) continue;
                out.amp[(i << c) | a] += w * col.amp[i];
            }
        }
    }
    return out;
}

std::vector<PhasedPauli> stabilizer_generators(const EaqecCode& code) {
    std::vector<PhasedPauli> gens;
    AugmentedCheck aug = augmented_check(code);
    for (const auto& row : aug.h_aug.rows())
        gens.push_back(true_pauli(SympVector::from_row(row)));
    return gens;
}

}  // namespace

StateVec encode(const EaqecCode& code, const StateVec& message) {
    if (message.m != code.k) throw std::invalid_argument("encode: message size mismatch");
    return encode_with(code, tilde_basis(code), message);
}

DecodeResult decode(const EaqecCode& code, const StateVec& state) {
    const std::size_t n = code.n, k = code.k, c = code.c, ell = code.ell;
    if (state.m != n + c) throw std::invalid_argument("decode: state size mismatch");
    TildeBasis tb = tilde_basis(code);
    auto all_qubits = iota_qubits(n + c);

    // Reference signs of the stabilizers on a clean codeword fix the
    // zero-syndrome convention (the true-Pauli representative may carry
    // a -1 on the codespace).
    StateVec reference = encode_with(code, tb, basis_state(k, 0));
    std::vector<PhasedPauli> gens = stabilizer_generators(code);
    BitVector syndrome(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        double ref = pauli_expectation(reference, gens[i], all_qubits).real();
        double val = pauli_expectation(state, gens[i], all_qubits).real();
        if (std::abs(ref) < 0.5 || std::abs(val) < 0.5)
            throw std::runtime_error("decode: state is not a stabilizer eigenstate");
        syndrome.set(i, (ref < 0) != (val < 0));
    }

    // A minimum-weight Alice-side error consistent with the syndrome:
    // one particular solution of H (.) u = r, minimized over its C-coset.
    BinMatrix twisted(0, 2 * n);
    for (const auto& row : code.h.rows()) {
        SympVector s = SympVector::from_row(row);
        twisted.append_row(BitVector::concat(s.x, s.z));
    }
    auto particular = solve(twisted, syndrome);
    if (!particular) throw std::logic_error("decode: inconsistent syndrome");
    SympVector best = SympVector::from_row(*particular);
    {
        BinMatrix cw = codeword_space(code);
        SympVector cur = best;
        std::size_t best_w = weight(best);
        std::uint64_t mask = 0;
        for (std::uint64_t t = 1; t < (1ull << cw.nrows()); ++t) {
            std::size_t bit = std::countr_zero(t);
            mask ^= 1ull << bit;
            cur = symp_add(cur, SympVector::from_row(cw.row(bit)));
            if (std::size_t w = weight(cur); w < best_w) {
                best_w = w;
                best = cur;
            }
        }
    }

    StateVec corrected = apply_pauli(state, true_pauli(best), iota_qubits(n));

    // Undo the encoding: amplitudes in the |b~> basis on Alice's side.
    DecodeResult res;
    res.syndrome = syndrome;
    res.message = StateVec(k);
    double recovered = 0.0;
    const double bell_amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << c));
    for (std::size_t b = 0; b < (std::size_t{1} << k); ++b) {
        // <b, 0^ell, Phi^c | U_Upsilon^(Alice) corrected> accumulated over
        // the ebit pattern a.
        Complex acc{0.0, 0.0};
        for (std::size_t a = 0; a < (std::size_t{1} << c); ++a) {
            std::size_t alice = (b << (ell + c)) | a;
            StateVec col = tilde_state(code, tb, alice);
            Complex inner{0.0, 0.0};
            for (std::size_t i = 0; i < col.dim(); ++i)
                inner += std::conj(col.amp[i]) * corrected.amp[(i << c) | a];
            acc += bell_amp * inner;
        }
        res.message.amp[b] = acc;
        recovered += std::norm(acc);
    }
    if (recovered < 1.0 - 1e-9) {
        res.miscorrection = true;
        if (recovered > 1e-12)
            for (auto& ampl : res.message.amp) ampl /= std::sqrt(recovered);
    } else {
        res.message.normalize();
    }
    return res;
}

BitVector superdense_simulate(const BitVector& message, const PauliClass& channel_error) {
    if (message.size() % 2 != 0) throw std::invalid_argument("superdense: odd message length");
    const std::size_t c = message.size() / 2;
    if (channel_error.n() != c) throw std::invalid_argument("superdense: error size mismatch");
    guard_qubits(2 * c);

    StateVec psi = bell_state(c);
    std::vector<std::size_t> alice = iota_qubits(c);
    SympVector msg_op = SympVector::from_row(message);
    psi = apply_pauli(psi, true_pauli(msg_op), alice);
    psi = apply_pauli(psi, true_pauli(channel_error.vec), alice);

    BitVector decoded(2 * c);
    for (std::size_t j = 0; j < c; ++j) {
        SympVector xx(BitVector(2 * c), BitVector(2 * c));
        xx.x.set(j, true);
        xx.x.set(c + j, true);
        SympVector zz(BitVector(2 * c), BitVector(2 * c));
        zz.z.set(j, true);
        zz.z.set(c + j, true);
        auto all = iota_qubits(2 * c);
        decoded.set(j, pauli_expectation(psi, true_pauli(xx), all).real() < 0);
        decoded.set(c + j, pauli_expectation(psi, true_pauli(zz), all).real() < 0);
    }
    return decoded;
}

namespace {

std::optional<Gf4Vector> gf4_solve(const Gf4Matrix& m, const Gf4Vector& t) {
    Gf4Matrix aug(m.nrows(), m.ncols + 1);
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols; ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.ncols, t[i]);
    }
    // Forward elimination on the augmented system.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t cidx = 0; cidx < aug.ncols && r < aug.nrows(); ++cidx) {
        std::size_t pivot = r;
        while (pivot < aug.nrows() && aug.get(pivot, cidx) == 0) ++pivot;
        if (pivot == aug.nrows()) continue;
        std::swap(aug.rows[r], aug.rows[pivot]);
        Gf4 inv = gf4_inv(aug.get(r, cidx));
        for (std::size_t j = 0; j < aug.ncols; ++j) aug.set(r, j, gf4_mul(inv, aug.get(r, j)));
        for (std::size_t i = 0; i < aug.nrows(); ++i) {
            if (i == r || aug.get(i, cidx) == 0) continue;
            Gf4 f = aug.get(i, cidx);
            for (std::size_t j = 0; j < aug.ncols; ++j)
                aug.set(i, j, gf4_add(aug.get(i, j), gf4_mul(f, aug.get(r, j))));
        }
        pivots.push_back(cidx);
        ++r;
    }
    Gf4Vector s(m.ncols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.ncols) return std::nullopt;
        s[pivots[i]] = aug.get(i, m.ncols);
    }
    return s;
}

}  // namespace

EacecResult eacec_simulate(const QuaternaryCode& code4, const Gf4Vector& message,
                           const Gf4Vector& error) {
    if (error.size() != code4.n) throw std::invalid_argument("eacec_simulate: error length");
    Gf4Vector sent = code4.encode(message);
    Gf4Vector received(code4.n);
    for (std::size_t i = 0; i < code4.n; ++i) received[i] = gf4_add(sent[i], error[i]);
    Gf4DecodeResult dec = classical_decode(code4, received);
    if (dec.failed) return {Gf4Vector(), true};
    auto m = gf4_solve(*code4.g4, dec.corrected);
    if (!m) return {Gf4Vector(), true};
    return {*m, false};
}

}  // namespace eaqec
