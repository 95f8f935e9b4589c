#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eaqec/gf4.hpp"

using namespace eaqec;

TEST_CASE("field tables") {
    // Addition is XOR in the 2z+x encoding.
    CHECK(gf4_add(kGf4One, kGf4Omega) == kGf4OmegaBar);
    CHECK(gf4_add(kGf4Omega, kGf4Omega) == kGf4Zero);
    // w * w = W, w * W = 1.
    CHECK(gf4_mul(kGf4Omega, kGf4Omega) == kGf4OmegaBar);
    CHECK(gf4_mul(kGf4Omega, kGf4OmegaBar) == kGf4One);
    CHECK(gf4_mul(kGf4One, kGf4Omega) == kGf4Omega);
    CHECK(gf4_mul(kGf4Zero, kGf4Omega) == kGf4Zero);
    // Inverses and conjugation.
    CHECK(gf4_inv(kGf4One) == kGf4One);
    CHECK(gf4_inv(kGf4Omega) == kGf4OmegaBar);
    CHECK_THROWS_AS(gf4_inv(kGf4Zero), std::invalid_argument);
    CHECK(gf4_conjugate(kGf4Omega) == kGf4OmegaBar);
    CHECK(gf4_conjugate(kGf4One) == kGf4One);
    // tr(0) = tr(1) = 0, tr(w) = tr(W) = 1.
    CHECK_FALSE(gf4_trace(kGf4Zero));
    CHECK_FALSE(gf4_trace(kGf4One));
    CHECK(gf4_trace(kGf4Omega));
    CHECK(gf4_trace(kGf4OmegaBar));

    for (Gf4 a = 0; a < 4; ++a) {
        CHECK(gf4_from_char(gf4_to_char(a)) == a);
        for (Gf4 b = 0; b < 4; ++b) {
            CHECK(gf4_mul(a, b) == gf4_mul(b, a));
            // Frobenius: conj distributes over both operations.
            CHECK(gf4_conjugate(gf4_add(a, b)) == gf4_add(gf4_conjugate(a), gf4_conjugate(b)));
            CHECK(gf4_conjugate(gf4_mul(a, b)) == gf4_mul(gf4_conjugate(a), gf4_conjugate(b)));
        }
    }
}

TEST_CASE("gamma is the (z|x) coordinate map") {
    Gf4Vector a = {kGf4Zero, kGf4One, kGf4Omega, kGf4OmegaBar};
    SympVector g = gamma(a);
    // z-parts 0,1,1,0 then x-parts 0,1,0,1 in the 2z+x encoding.
    CHECK(g.to_row().to_string() == "01100101");
    CHECK(gamma_inverse(g) == a);
    CHECK(wt4(a) == 3);
    CHECK(weight(g) == 3);
}

TEST_CASE("trace inner product equals the symplectic product of images") {
    // Exhaustive over all pairs of length-2 vectors: 256 cases.
    for (int av = 0; av < 16; ++av) {
        for (int bv = 0; bv < 16; ++bv) {
            Gf4Vector a = {static_cast<Gf4>(av & 3), static_cast<Gf4>(av >> 2)};
            Gf4Vector b = {static_cast<Gf4>(bv & 3), static_cast<Gf4>(bv >> 2)};
            CHECK(trace_inner_product(a, b) == symp_product(gamma(a), gamma(b)));
        }
    }
}

TEST_CASE("gf4 text format") {
    Gf4Matrix m = parse_gf4_text("# worked example\n110\n101\n");
    CHECK(m.nrows() == 2);
    CHECK(m.ncols == 3);
    CHECK(m.get(0, 0) == kGf4One);
    CHECK(m.get(1, 1) == kGf4Zero);
    CHECK(format_gf4_text(m) == "110\n101\n");
    Gf4Matrix w = parse_gf4_text("1wW0\n");
    CHECK(w.get(0, 1) == kGf4Omega);
    CHECK(w.get(0, 2) == kGf4OmegaBar);
    CHECK_THROWS_AS(parse_gf4_text("1x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gf4_text("11\n111\n"), std::invalid_argument);
}

TEST_CASE("rank and kernel over GF(4)") {
    Gf4Matrix m = parse_gf4_text("110\n101\n");
    CHECK(gf4_rank(m) == 2);
    Gf4Matrix k = gf4_kernel(m);
    REQUIRE(k.nrows() == 1);
    for (std::size_t r = 0; r < m.nrows(); ++r) {
        Gf4 acc = 0;
        for (std::size_t c = 0; c < m.ncols; ++c) acc = gf4_add(acc, gf4_mul(m.get(r, c), k.get(0, c)));
        CHECK(acc == kGf4Zero);
    }
    // Dependent rows.
    Gf4Matrix dep = parse_gf4_text("1w\nwW\n");  // row1 = w * row0
    CHECK(gf4_rank(dep) == 1);
}

TEST_CASE("QuaternaryCode encode and syndrome") {
    QuaternaryCode code = QuaternaryCode::from_parity_check(parse_gf4_text("110\n101\n"), 3);
    CHECK(code.n == 3);
    CHECK(code.k == 1);
    REQUIRE(code.g4.has_value());
    // Every codeword has zero syndrome; distance 3 means all nonzero
    // codewords have full weight here (k = 1).
    for (Gf4 msg = 0; msg < 4; ++msg) {
        Gf4Vector cw = code.encode({msg});
        for (Gf4 s : code.syndrome(cw)) CHECK(s == kGf4Zero);
        if (msg != 0) CHECK(wt4(cw) == 3);
    }
}

TEST_CASE("lift_parity_check on the worked example") {
    QuaternaryCode code = QuaternaryCode::from_parity_check(parse_gf4_text("110\n101\n"));
    BinMatrix h = lift_parity_check(code);
    // gamma(w*H4) rows then gamma(W*H4) rows, frozen from the paper's H.
    CHECK(h.nrows() == 4);
    CHECK(h.ncols() == 6);
    CHECK(h.row(0).to_string() == "110000");
    CHECK(h.row(1).to_string() == "101000");
    CHECK(h.row(2).to_string() == "000110");
    CHECK(h.row(3).to_string() == "000101");
}

TEST_CASE("lifted rows annihilate every codeword image") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + rng() % 4;
        std::size_t rows = 1 + rng() % (n - 1);
        Gf4Matrix h4(rows, n);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < n; ++c) h4.set(r, c, rng() & 3);
        QuaternaryCode code = QuaternaryCode::from_parity_check(h4);
        if (!code.g4) continue;
        BinMatrix h = lift_parity_check(code);
        // Enumerate all codewords; each must be symplectically orthogonal
        // to every lifted row (Prop 3.1 direction used by from_gf4).
        std::vector<Gf4Vector> msgs;
        std::size_t total = 1;
        for (std::size_t i = 0; i < code.k; ++i) total *= 4;
        for (std::size_t m = 0; m < total; ++m) {
            Gf4Vector msg(code.k);
            std::size_t t = m;
            for (std::size_t i = 0; i < code.k; ++i, t /= 4) msg[i] = t & 3;
            // The trace form is Hermitian while the syndrome uses the plain
            // product, so the lifted rows annihilate images of conjugated
            // codewords: row (.) gamma(conj(c)) = tr<s*h, conj(c)> =
            // tr(conj(s * H c)) = 0.
            Gf4Vector cw = code.encode(msg);
            for (Gf4& v : cw) v = gf4_conjugate(v);
            SympVector img = gamma(cw);
            for (const auto& row : h.rows())
                CHECK_FALSE(symp_product(SympVector::from_row(row), img));
        }
    }
}

TEST_CASE("classical syndrome-table decoder") {
    QuaternaryCode code = QuaternaryCode::from_parity_check(parse_gf4_text("110\n101\n"), 3);
    Gf4Vector cw = code.encode({kGf4Omega});
    // Every single-position error is corrected.
    for (std::size_t pos = 0; pos < 3; ++pos) {
        for (Gf4 e = 1; e < 4; ++e) {
            Gf4Vector r = cw;
            r[pos] = gf4_add(r[pos], e);
            Gf4DecodeResult dec = classical_decode(code, r);
            CHECK_FALSE(dec.failed);
            CHECK(dec.corrected == cw);
        }
    }
    // A weight-2 error lands outside the table or on a wrong coset leader.
    Gf4Vector bad = cw;
    bad[0] = gf4_add(bad[0], kGf4One);
    bad[1] = gf4_add(bad[1], kGf4Omega);
    Gf4DecodeResult dec = classical_decode(code, bad);
    CHECK((dec.failed || dec.corrected != cw));
}
