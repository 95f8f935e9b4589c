#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eaqec {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
/// Length is fixed at construction; all arithmetic is word-parallel.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len);
    BitVector(std::size_t len, std::initializer_list<int> bits);

    static BitVector from_string(std::string_view s);
    static BitVector unit(std::size_t len, std::size_t pos);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    void xor_assign(const BitVector& other);
    std::size_t popcount() const;
    bool is_zero() const;

    /// Parity of the AND with `other` (binary inner product mod 2).
    bool dot(const BitVector& other) const;

    /// Positionwise OR, used for the symplectic weight wt(z | x).
    static BitVector bit_or(const BitVector& a, const BitVector& b);

    BitVector slice(std::size_t begin, std::size_t count) const;
    static BitVector concat(const BitVector& a, const BitVector& b);

    bool operator==(const BitVector& other) const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
    void mask_tail();
};

BitVector xor_add(const BitVector& u, const BitVector& v);

/// Rectangular matrix over GF(2); rows stored as BitVectors.
/// Zero-row matrices are legal and represent the zero subspace.
class BinMatrix {
  public:
    BinMatrix() = default;
    BinMatrix(std::size_t nrows, std::size_t ncols);
    explicit BinMatrix(std::vector<BitVector> rows, std::size_t ncols);

    static BinMatrix identity(std::size_t n);
    static BinMatrix from_string(std::string_view text);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVector>& rows() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    void append_row(const BitVector& r);

    /// M * v^T as a column of nrows bits.
    BitVector mul_vector(const BitVector& v) const;
    BinMatrix transposed() const;

    bool operator==(const BinMatrix& other) const;
    std::string to_string(std::size_t bar_col = 0) const;

  private:
    std::vector<BitVector> rows_;
    std::size_t ncols_ = 0;
};

struct RowOp {
    enum class Kind { Swap, AddInto } kind;
    std::size_t a, b;  // Swap: rows a,b; AddInto: row b += row a
};

struct RrefResult {
    BinMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    std::vector<RowOp> row_ops;
};

/// Reduced row-echelon form with leftmost-pivot, topmost-row tie-breaking.
RrefResult rref(const BinMatrix& m);

std::size_t rank(const BinMatrix& m);

bool row_space_contains(const BinMatrix& m, const BitVector& v);

/// Some s with M * s^T = t^T, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BinMatrix& m, const BitVector& t);

/// Basis of { v : M * v^T = 0 }, one row per basis vector.
BinMatrix kernel(const BinMatrix& m);

/// Subset of the input rows forming a basis of the row space, kept in
/// their original order and unmodified.
BinMatrix row_basis(const BinMatrix& m);

/// Parses the '|'-separated text format: one row per line over '0'/'1',
/// blank lines and '#' comments skipped, a single optional '|' per row.
/// Throws std::invalid_argument on malformed input.
BinMatrix parse_matrix_text(std::string_view text);

std::string format_matrix_text(const BinMatrix& m, std::size_t bar_col = 0);

}  // namespace eaqec
