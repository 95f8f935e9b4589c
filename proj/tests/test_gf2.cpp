#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eaqec/gf2.hpp"

using namespace eaqec;

TEST_CASE("BitVector basics") {
    BitVector v(70);
    CHECK(v.size() == 70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.get(0));
    CHECK(v.get(69));
    CHECK_FALSE(v.get(35));
    CHECK(v.popcount() == 2);

    BitVector w = BitVector::from_string("101");
    CHECK(w.size() == 3);
    CHECK(w.to_string() == "101");
    CHECK(BitVector::unit(5, 2).to_string() == "00100");
}

TEST_CASE("BitVector xor, dot, slice, concat") {
    BitVector a = BitVector::from_string("1100");
    BitVector b = BitVector::from_string("1010");
    CHECK(xor_add(a, b).to_string() == "0110");
    CHECK(a.dot(b) == true);   // overlap at position 0 only
    CHECK(a.dot(a) == false);  // even weight
    CHECK(BitVector::bit_or(a, b).to_string() == "1110");
    CHECK(a.slice(1, 2).to_string() == "10");
    CHECK(BitVector::concat(a, b).to_string() == "11001010");
}

TEST_CASE("rref and rank on a frozen matrix") {
    // rank 2: row2 = row0 + row1.
    BinMatrix m = BinMatrix::from_string("1100\n0110\n1010\n");
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(rank(m) == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.rref.row(0).to_string() == "1010");
    CHECK(r.rref.row(1).to_string() == "0110");
    CHECK(r.rref.row(2).is_zero());
}

TEST_CASE("row_space_contains and solve") {
    BinMatrix m = BinMatrix::from_string("110\n011\n");
    CHECK(row_space_contains(m, BitVector::from_string("101")));
    CHECK_FALSE(row_space_contains(m, BitVector::from_string("100")));

    // M s^T = t^T with M 2x3.
    auto s = solve(m, BitVector::from_string("10"));
    REQUIRE(s.has_value());
    CHECK(m.mul_vector(*s) == BitVector::from_string("10"));
    // Equal rows force an equal right-hand side.
    BinMatrix tall = BinMatrix::from_string("10\n10\n");
    CHECK_FALSE(solve(tall, BitVector::from_string("10")).has_value());
    CHECK(solve(tall, BitVector::from_string("11")).has_value());
}

TEST_CASE("kernel spans the null space") {
    BinMatrix m = BinMatrix::from_string("1100\n0011\n");
    BinMatrix k = kernel(m);
    CHECK(k.nrows() == 2);
    for (const auto& row : k.rows()) CHECK(m.mul_vector(row).is_zero());
    CHECK(rank(k) == 2);

    // Full-rank square matrix has an empty kernel.
    CHECK(kernel(BinMatrix::identity(4)).nrows() == 0);
}

TEST_CASE("row_basis keeps original rows in order") {
    BinMatrix m = BinMatrix::from_string("110\n110\n011\n101\n");
    BinMatrix b = row_basis(m);
    REQUIRE(b.nrows() == 2);
    CHECK(b.row(0).to_string() == "110");
    CHECK(b.row(1).to_string() == "011");
}

TEST_CASE("matrix text format round trip") {
    std::string text = "# comment line\n110|000\n\n101|000\n";
    BinMatrix m = parse_matrix_text(text);
    CHECK(m.nrows() == 2);
    CHECK(m.ncols() == 6);
    CHECK(m.row(1).to_string() == "101000");
    std::string out = format_matrix_text(m, 3);
    CHECK(out == "110|000\n101|000\n");
    CHECK(parse_matrix_text(out) == m);

    CHECK_THROWS_AS(parse_matrix_text("10|1|0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("102\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("10\n101\n"), std::invalid_argument);
}

TEST_CASE("randomized rank/kernel consistency") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int it = 0; it < 50; ++it) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
        BinMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
        std::size_t rk = rank(m);
        BinMatrix k = kernel(m);
        CHECK(rk + k.nrows() == cols);  // rank-nullity
        for (const auto& row : k.rows()) CHECK(m.mul_vector(row).is_zero());
        // Every original row is in the row space of the extracted basis.
        BinMatrix b = row_basis(m);
        CHECK(b.nrows() == rk);
        for (const auto& row : m.rows()) CHECK(row_space_contains(b, row));
    }
}
