#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eaqec/statevector.hpp"

using namespace eaqec;

namespace {

EaqecCode worked_example() {
    return from_check_matrix(parse_matrix_text("110|000\n101|000\n000|110\n000|101\n"));
}

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = i;
    return q;
}

BinMatrix random_symplectomorphism(std::mt19937_64& rng, std::size_t n) {
    // Decompose a random subspace; its standardizing map is a valid
    // random-ish symplectomorphism.
    while (true) {
        BinMatrix v(1 + rng() % (2 * n), 2 * n);
        for (std::size_t r = 0; r < v.nrows(); ++r)
            for (std::size_t c = 0; c < 2 * n; ++c) v.set(r, c, rng() & 1);
        SympDecomposition d = symplectic_gram_schmidt(v);
        return standardizing_symplectomorphism(d);
    }
}

}  // namespace

TEST_CASE("basis_state, overlap, equal_up_to_phase") {
    StateVec s = basis_state(2, 3);
    CHECK(s.dim() == 4);
    CHECK(s.amp[3] == Complex{1, 0});
    CHECK(std::abs(overlap(s, s) - Complex{1, 0}) < 1e-15);
    StateVec t = s;
    t.amp[3] = Complex{0, 1};  // global phase i
    CHECK(equal_up_to_phase(s, t));
    CHECK_FALSE(equal_up_to_phase(s, basis_state(2, 0)));
}

TEST_CASE("apply_pauli embeds on chosen qubits, qubit 0 is the MSB") {
    StateVec s = basis_state(3, 0);  // |000>
    StateVec t = apply_pauli(s, true_pauli(parse_pauli("X").vec), {0});
    CHECK(t.amp[4] == Complex{1, 0});  // |100>
    t = apply_pauli(s, true_pauli(parse_pauli("X").vec), {2});
    CHECK(t.amp[1] == Complex{1, 0});  // |001>
    // Z on a |1> flips the sign.
    StateVec u = apply_pauli(t, true_pauli(parse_pauli("Z").vec), {2});
    CHECK(u.amp[1] == Complex{-1, 0});
    CHECK_THROWS_AS(apply_pauli(s, true_pauli(parse_pauli("X").vec), {7}),
                    std::invalid_argument);
}

TEST_CASE("bell_state and tensor") {
    StateVec phi = bell_state(1);
    CHECK(std::abs(phi.amp[0] - Complex{std::sqrt(0.5), 0}) < 1e-15);
    CHECK(std::abs(phi.amp[3] - Complex{std::sqrt(0.5), 0}) < 1e-15);
    CHECK(phi.amp[1] == Complex{0, 0});
    // Two pairs with Alice halves first: nonzero at |a a>.
    StateVec phi2 = bell_state(2);
    for (std::size_t a = 0; a < 4; ++a)
        CHECK(std::abs(phi2.amp[(a << 2) | a] - Complex{0.5, 0}) < 1e-15);
    StateVec prod = tensor(basis_state(1, 1), basis_state(2, 0));
    CHECK(prod.amp[4] == Complex{1, 0});
}

TEST_CASE("stabilizer_eigenstate reproduces the worked-example |0~>") {
    std::vector<PhasedPauli> gens = {
        true_pauli(SympVector::from_row(BitVector::from_string("110000"))),  // u1
        true_pauli(SympVector::from_row(BitVector::from_string("000110"))),  // u2
        true_pauli(SympVector::from_row(BitVector::from_string("111000"))),  // u3
    };
    StateVec s = stabilizer_eigenstate(gens);
    StateVec expected(3);
    expected.amp[0] = std::sqrt(0.5);  // (|000> + |110>)/sqrt(2)
    expected.amp[6] = std::sqrt(0.5);
    CHECK(equal_up_to_phase(s, expected, 1e-12));
    // Dependent or non-commuting generators are rejected.
    CHECK_THROWS_AS(stabilizer_eigenstate({gens[0], gens[0]}), std::invalid_argument);
    CHECK_THROWS_AS(stabilizer_eigenstate({true_pauli(parse_pauli("X").vec),
                                           true_pauli(parse_pauli("Z").vec)}),
                    std::invalid_argument);
}

TEST_CASE("synthesize_clifford satisfies the conjugation contract exactly") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 1 + rng() % 3;
        BinMatrix ups = random_symplectomorphism(rng, n);
        UnitaryMatrix u = synthesize_clifford(ups, n);
        CHECK(is_unitary(u));
        auto qs = all_qubits(n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            SympVector gen = i < n ? SympVector(BitVector::unit(n, i), BitVector(n))
                                   : SympVector(BitVector(n), BitVector::unit(n, i - n));
            SympVector image = apply_symplectomorphism(ups, gen);
            // Compare U N_gen |b> with N_image U |b> column by column, up
            // to one global phase shared by all columns.
            Complex ratio{0, 0};
            bool ok = true;
            for (std::size_t b = 0; b < (std::size_t{1} << n) && ok; ++b) {
                StateVec col(n);
                for (std::size_t r = 0; r < col.dim(); ++r) col.amp[r] = u.entries[r][b];
                StateVec rhs = apply_pauli(col, true_pauli(image), qs);
                StateVec gb = apply_pauli(basis_state(n, b), true_pauli(gen), qs);
                StateVec lhs(n);
                for (std::size_t bb = 0; bb < gb.dim(); ++bb)
                    if (gb.amp[bb] != Complex{0, 0})
                        for (std::size_t r = 0; r < lhs.dim(); ++r)
                            lhs.amp[r] += gb.amp[bb] * u.entries[r][bb];
                for (std::size_t r = 0; r < lhs.dim(); ++r) {
                    if (std::abs(rhs.amp[r]) < 1e-12) {
                        if (std::abs(lhs.amp[r]) > 1e-9) ok = false;
                        continue;
                    }
                    Complex q = lhs.amp[r] / rhs.amp[r];
                    if (ratio == Complex{0, 0})
                        ratio = q;
                    else if (std::abs(q - ratio) > 1e-9)
                        ok = false;
                }
            }
            CHECK(ok);
            CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("identity symplectomorphism synthesizes a diagonal unitary") {
    UnitaryMatrix u = synthesize_clifford(BinMatrix::identity(4), 2);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c) CHECK(std::abs(u.entries[r][c]) < 1e-12);
}

TEST_CASE("encode: trivial code is the identity") {
    // c = 0, ell = 0 requires an empty check matrix.
    EaqecCode code = from_check_matrix(BinMatrix(0, 4));
    CHECK(code.k == 2);
    CHECK(code.c == 0);
    StateVec msg(2);
    msg.amp = {Complex(0.5, 0), Complex(0, 0.5), Complex(-0.5, 0), Complex(0.5, 0)};
    StateVec enc = encode(code, msg);
    CHECK(equal_up_to_phase(enc, msg, 1e-12));
}

TEST_CASE("encoded states are +1 eigenstates of every augmented stabilizer") {
    EaqecCode code = worked_example();
    StateVec enc = encode(code, basis_state(1, 0));
    AugmentedCheck aug = augmented_check(code);
    auto qs = all_qubits(code.n + code.c);
    for (const auto& row : aug.h_aug.rows()) {
        Complex e = pauli_expectation(enc, true_pauli(SympVector::from_row(row)), qs);
        CHECK(std::abs(e - Complex{1, 0}) < 1e-9);
    }
}

TEST_CASE("worked-example round trip over all single-qubit errors") {
    EaqecCode code = worked_example();
    StateVec msg(1);
    msg.amp[0] = Complex(0.6, 0.0);
    msg.amp[1] = Complex(0.0, 0.8);
    StateVec enc = encode(code, msg);
    for (std::size_t q = 0; q < 3; ++q) {
        for (int letter = 1; letter <= 3; ++letter) {
            SympVector e(BitVector(3), BitVector(3));
            e.z.set(q, letter & 2);
            e.x.set(q, letter & 1);
            StateVec bad = apply_pauli(enc, true_pauli(e), all_qubits(3));
            DecodeResult dec = decode(code, bad);
            CHECK_FALSE(dec.miscorrection);
            CHECK(std::abs(overlap(dec.message, msg)) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(dec.syndrome == reduced_syndrome(code, e));
        }
    }
}

TEST_CASE("decode flags non-Pauli corruption") {
    EaqecCode code = worked_example();
    StateVec enc = encode(code, basis_state(1, 0));
    StateVec mixed(enc.m);
    // A superposition straddling two syndrome sectors after a partial
    // error is not an eigenstate; build one by adding an error to half.
    StateVec bad = apply_pauli(enc, true_pauli(parse_pauli("XII").vec), all_qubits(3));
    for (std::size_t i = 0; i < mixed.dim(); ++i)
        mixed.amp[i] = (enc.amp[i] + bad.amp[i]) / std::sqrt(2.0);
    mixed.normalize();
    CHECK_THROWS_AS(decode(code, mixed), std::runtime_error);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(StateVec(max_qubits() + 1), std::length_error);
}

TEST_CASE("superdense coding transmits 2c bits through a Pauli channel") {
    for (std::size_t c = 1; c <= 2; ++c) {
        for (std::size_t msg = 0; msg < (std::size_t{1} << (2 * c)); ++msg) {
            BitVector m(2 * c);
            for (std::size_t i = 0; i < 2 * c; ++i) m.set(i, (msg >> i) & 1);
            // No channel error: exact recovery.
            BitVector out = superdense_simulate(m, PauliClass(SympVector(BitVector(c), BitVector(c))));
            CHECK(out == m);
        }
        // Pauli channel error e shifts the message by e's bits (b + gamma^-1(e)
        // at the GF(4) level).
        std::mt19937_64 rng(c);
        for (int it = 0; it < 8; ++it) {
            BitVector m(2 * c);
            SympVector e{BitVector(c), BitVector(c)};
            for (std::size_t i = 0; i < 2 * c; ++i) m.set(i, rng() & 1);
            for (std::size_t i = 0; i < c; ++i) {
                e.z.set(i, rng() & 1);
                e.x.set(i, rng() & 1);
            }
            BitVector out = superdense_simulate(m, PauliClass(e));
            CHECK(out == xor_add(m, e.to_row()));
        }
    }
}

TEST_CASE("eacec classical simulation") {
    QuaternaryCode q = QuaternaryCode::from_parity_check(parse_gf4_text("110\n101\n"), 3);
    for (Gf4 msg = 0; msg < 4; ++msg) {
        // Every single-position error is transparent to the message.
        for (std::size_t pos = 0; pos < 3; ++pos) {
            for (Gf4 ev = 1; ev < 4; ++ev) {
                Gf4Vector err(3, 0);
                err[pos] = ev;
                EacecResult res = eacec_simulate(q, {msg}, err);
                CHECK_FALSE(res.failed);
                REQUIRE(res.message.size() == 1);
                CHECK(res.message[0] == msg);
            }
        }
    }
    // Weight 2 exceeds the guarantee: failure flagged or message wrong.
    EacecResult res = eacec_simulate(q, {kGf4One}, {kGf4One, kGf4Omega, kGf4Zero});
    CHECK((res.failed || res.message != Gf4Vector{kGf4One}));
}
