#include "eaqec/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitVector::BitVector(std::size_t len, std::initializer_list<int> bits) : BitVector(len) {
    std::size_t i = 0;
    for (int b : bits) {
        if (i >= len) throw std::invalid_argument("BitVector: too many initializer bits");
        set(i++, b != 0);
    }
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            v.set(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitVector: expected '0' or '1'");
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t pos) {
    BitVector v(len);
    v.set(pos, true);
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVector::get");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("BitVector::set");
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::xor_assign(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1u;
}

BitVector BitVector::bit_or(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BitVector: length mismatch");
    BitVector out(a.len_);
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = a.words_[w] | b.words_[w];
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > len_) throw std::out_of_range("BitVector::slice");
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i) out.set(i, get(begin + i));
    return out;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
    return out;
}

bool BitVector::operator==(const BitVector& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

void BitVector::mask_tail() {
    std::size_t rem = len_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

BitVector xor_add(const BitVector& u, const BitVector& v) {
    BitVector out = u;
    out.xor_assign(v);
    return out;
}

BinMatrix::BinMatrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows, BitVector(ncols)), ncols_(ncols) {}

BinMatrix::BinMatrix(std::vector<BitVector> rows, std::size_t ncols)
    : rows_(std::move(rows)), ncols_(ncols) {
    for (const auto& r : rows_)
        if (r.size() != ncols_) throw std::invalid_argument("BinMatrix: ragged rows");
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::from_string(std::string_view text) { return parse_matrix_text(text); }

void BinMatrix::append_row(const BitVector& r) {
    if (nrows() == 0 && ncols_ == 0) ncols_ = r.size();
    if (r.size() != ncols_) throw std::invalid_argument("BinMatrix::append_row: length mismatch");
    rows_.push_back(r);
}

BitVector BinMatrix::mul_vector(const BitVector& v) const {
    if (v.size() != ncols_) throw std::invalid_argument("BinMatrix::mul_vector: length mismatch");
    BitVector out(nrows());
    for (std::size_t i = 0; i < nrows(); ++i) out.set(i, rows_[i].dot(v));
    return out;
}

BinMatrix BinMatrix::transposed() const {
    BinMatrix out(ncols_, nrows());
    for (std::size_t i = 0; i < nrows(); ++i)
        for (std::size_t j = 0; j < ncols_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

bool BinMatrix::operator==(const BinMatrix& other) const {
    return ncols_ == other.ncols_ && rows_ == other.rows_;
}

std::string BinMatrix::to_string(std::size_t bar_col) const {
    return format_matrix_text(*this, bar_col);
}

RrefResult rref(const BinMatrix& m) {
    RrefResult res;
    res.rref = m;
    auto& a = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.ncols() && r < a.nrows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.nrows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.nrows()) continue;
        if (pivot != r) {
            std::swap(a.row(r), a.row(pivot));
            res.row_ops.push_back({RowOp::Kind::Swap, r, pivot});
        }
        for (std::size_t i = 0; i < a.nrows(); ++i) {
            if (i != r && a.get(i, c)) {
                a.row(i).xor_assign(a.row(r));
                res.row_ops.push_back({RowOp::Kind::AddInto, r, i});
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const BinMatrix& m) { return rref(m).rank; }

bool row_space_contains(const BinMatrix& m, const BitVector& v) {
    if (v.size() != m.ncols()) throw std::invalid_argument("row_space_contains: length mismatch");
    RrefResult r = rref(m);
    BitVector residual = v;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (residual.get(r.pivots[i])) residual.xor_assign(r.rref.row(i));
    }
    return residual.is_zero();
}

std::optional<BitVector> solve(const BinMatrix& m, const BitVector& t) {
    if (t.size() != m.nrows()) throw std::invalid_argument("solve: rhs length mismatch");
    // Eliminate on the augmented matrix (M | t).
    BinMatrix aug(m.nrows(), m.ncols() + 1);
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.ncols(), t.get(i));
    }
    RrefResult r = rref(aug);
    BitVector s(m.ncols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.ncols()) return std::nullopt;  // pivot in rhs column
        s.set(r.pivots[i], r.rref.get(i, m.ncols()));
    }
    return s;
}

BinMatrix kernel(const BinMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    BinMatrix basis(0, m.ncols());
    for (std::size_t c = 0; c < m.ncols(); ++c) {
        if (is_pivot[c]) continue;
        BitVector v(m.ncols());
        v.set(c, true);
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.rref.get(i, c)) v.set(r.pivots[i], true);
        basis.append_row(v);
    }
    return basis;
}

BinMatrix row_basis(const BinMatrix& m) {
    BinMatrix basis(0, m.ncols());
    BinMatrix reduced(0, m.ncols());  // rref of the rows accepted so far
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        if (basis.nrows() == 0 ? !m.row(i).is_zero() : !row_space_contains(reduced, m.row(i))) {
            basis.append_row(m.row(i));
            reduced = rref(basis).rref;
        }
    }
    return basis;
}

BinMatrix parse_matrix_text(std::string_view text) {
    BinMatrix m(0, 0);
    std::size_t bar_col = std::string::npos;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first_row = true;
    while (std::getline(in, line)) {
        std::string row;
        std::size_t bar = std::string::npos;
        bool done = false;
        for (char ch : line) {
            if (done) break;
            switch (ch) {
                case '#': done = true; break;
                case ' ': case '\t': case '\r': break;
                case '|':
                    if (bar != std::string::npos)
                        throw std::invalid_argument("matrix text: multiple '|' in a row");
                    bar = row.size();
                    break;
                case '0': case '1': row.push_back(ch); break;
                default:
                    throw std::invalid_argument(std::string("matrix text: bad character '") + ch + "'");
            }
        }
        if (row.empty()) continue;
        if (first_row) {
            bar_col = bar;
            first_row = false;
        } else if (bar != bar_col) {
            throw std::invalid_argument("matrix text: inconsistent '|' placement");
        }
        m.append_row(BitVector::from_string(row));
    }
    return m;
}

std::string format_matrix_text(const BinMatrix& m, std::size_t bar_col) {
    std::string out;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        std::string row = m.row(i).to_string();
        if (bar_col > 0 && bar_col < m.ncols()) row.insert(bar_col, 1, '|');
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace eaqec
