#include "eaqec/gf4.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace eaqec {

namespace {

// Index by the 2z+x encoding: [0, W, w, 1].
constexpr Gf4 kMulTable[4][4] = {
    {0, 0, 0, 0},
    {0, 2, 3, 1},  // W*W = w, W*w = 1, W*1 = W
    {0, 3, 1, 2},  // w*W = 1, w*w = W, w*1 = w
    {0, 1, 2, 3},
};

void check_element(Gf4 a) {
    if (a > 3) throw std::invalid_argument("gf4: element out of range");
}

}  // namespace

Gf4 gf4_add(Gf4 a, Gf4 b) {
    check_element(a);
    check_element(b);
    return a ^ b;
}

Gf4 gf4_mul(Gf4 a, Gf4 b) {
    check_element(a);
    check_element(b);
    return kMulTable[a][b];
}

Gf4 gf4_inv(Gf4 a) {
    check_element(a);
    if (a == 0) throw std::invalid_argument("gf4_inv: zero has no inverse");
    for (Gf4 b = 1; b <= 3; ++b)
        if (gf4_mul(a, b) == kGf4One) return b;
    throw std::logic_error("gf4_inv: unreachable");
}

bool gf4_trace(Gf4 a) {
    check_element(a);
    // tr{0,1} = 0, tr{w,W} = 1.
    return a == kGf4Omega || a == kGf4OmegaBar;
}

Gf4 gf4_conjugate(Gf4 a) {
    check_element(a);
    if (a == kGf4Omega) return kGf4OmegaBar;
    if (a == kGf4OmegaBar) return kGf4Omega;
    return a;
}

char gf4_to_char(Gf4 a) {
    check_element(a);
    switch (a) {
        case kGf4Zero: return '0';
        case kGf4One: return '1';
        case kGf4Omega: return 'w';
        default: return 'W';
    }
}

Gf4 gf4_from_char(char c) {
    switch (c) {
        case '0': return kGf4Zero;
        case '1': return kGf4One;
        case 'w': return kGf4Omega;
        case 'W': return kGf4OmegaBar;
        default:
            throw std::invalid_argument(std::string("gf4: bad character '") + c + "'");
    }
}

Gf4Vector Gf4Matrix::mul_vector(const Gf4Vector& v) const {
    if (v.size() != ncols) throw std::invalid_argument("Gf4Matrix::mul_vector: length mismatch");
    Gf4Vector out(nrows(), 0);
    for (std::size_t i = 0; i < nrows(); ++i) {
        Gf4 acc = 0;
        for (std::size_t j = 0; j < ncols; ++j) acc = gf4_add(acc, gf4_mul(rows[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

Gf4Matrix parse_gf4_text(std::string_view text) {
    Gf4Matrix m;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        Gf4Vector row;
        bool done = false;
        for (char ch : line) {
            if (done) break;
            if (ch == '#') {
                done = true;
            } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                continue;
            } else {
                row.push_back(gf4_from_char(ch));
            }
        }
        if (row.empty()) continue;
        if (m.nrows() == 0) m.ncols = row.size();
        if (row.size() != m.ncols) throw std::invalid_argument("gf4 text: ragged rows");
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::string format_gf4_text(const Gf4Matrix& m) {
    std::string out;
    for (const auto& row : m.rows) {
        for (Gf4 e : row) out.push_back(gf4_to_char(e));
        out.push_back('\n');
    }
    return out;
}

namespace {

struct Gf4Echelon {
    Gf4Matrix reduced;
    std::vector<std::size_t> pivots;
};

Gf4Echelon gf4_rref(const Gf4Matrix& m) {
    Gf4Echelon res{m, {}};
    auto& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.ncols && r < a.nrows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.nrows() && a.get(pivot, c) == 0) ++pivot;
        if (pivot == a.nrows()) continue;
        std::swap(a.rows[r], a.rows[pivot]);
        Gf4 inv = gf4_inv(a.get(r, c));
        for (std::size_t j = 0; j < a.ncols; ++j) a.set(r, j, gf4_mul(inv, a.get(r, j)));
        for (std::size_t i = 0; i < a.nrows(); ++i) {
            if (i == r || a.get(i, c) == 0) continue;
            Gf4 f = a.get(i, c);
            for (std::size_t j = 0; j < a.ncols; ++j)
                a.set(i, j, gf4_add(a.get(i, j), gf4_mul(f, a.get(r, j))));
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

}  // namespace

std::size_t gf4_rank(const Gf4Matrix& m) { return gf4_rref(m).pivots.size(); }

Gf4Matrix gf4_kernel(const Gf4Matrix& m) {
    Gf4Echelon e = gf4_rref(m);
    std::vector<bool> is_pivot(m.ncols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Gf4Matrix basis;
    basis.ncols = m.ncols;
    for (std::size_t c = 0; c < m.ncols; ++c) {
        if (is_pivot[c]) continue;
        Gf4Vector v(m.ncols, 0);
        v[c] = kGf4One;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced.get(i, c) != 0) v[e.pivots[i]] = e.reduced.get(i, c);
        basis.rows.push_back(std::move(v));
    }
    return basis;
}

QuaternaryCode QuaternaryCode::from_parity_check(Gf4Matrix h4,
                                                 std::optional<std::size_t> distance) {
    QuaternaryCode code;
    code.n = h4.ncols;
    code.k = code.n - gf4_rank(h4);
    code.h4 = std::move(h4);
    Gf4Matrix ker = gf4_kernel(code.h4);  // rows span the codeword space
    Gf4Matrix g4(code.n, ker.nrows());
    for (std::size_t j = 0; j < ker.nrows(); ++j)
        for (std::size_t i = 0; i < code.n; ++i) g4.set(i, j, ker.get(j, i));
    code.g4 = std::move(g4);
    code.declared_distance = distance;
    return code;
}

Gf4Vector QuaternaryCode::encode(const Gf4Vector& message) const {
    if (!g4) throw std::logic_error("QuaternaryCode::encode: no generator matrix");
    return g4->mul_vector(message);
}

Gf4Vector QuaternaryCode::syndrome(const Gf4Vector& received) const {
    return h4.mul_vector(received);
}

SympVector gamma(const Gf4Vector& a) {
    BitVector z(a.size()), x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        check_element(a[i]);
        z.set(i, (a[i] >> 1) & 1);
        x.set(i, a[i] & 1);
    }
    return SympVector(std::move(z), std::move(x));
}

Gf4Vector gamma_inverse(const SympVector& u) {
    Gf4Vector a(u.n(), 0);
    for (std::size_t i = 0; i < u.n(); ++i)
        a[i] = static_cast<Gf4>((u.z.get(i) ? 2 : 0) | (u.x.get(i) ? 1 : 0));
    return a;
}

bool trace_inner_product(const Gf4Vector& a, const Gf4Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("trace_inner_product: length mismatch");
    Gf4 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = gf4_add(acc, gf4_mul(gf4_conjugate(a[i]), b[i]));
    return gf4_trace(acc);
}

std::size_t wt4(const Gf4Vector& a) {
    std::size_t w = 0;
    for (Gf4 e : a) w += (e != 0);
    return w;
}

BinMatrix lift_parity_check(const QuaternaryCode& code) {
    BinMatrix h(0, 2 * code.n);
    for (Gf4 scale : {kGf4Omega, kGf4OmegaBar}) {
        for (const auto& row : code.h4.rows) {
            Gf4Vector scaled(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) scaled[j] = gf4_mul(scale, row[j]);
            h.append_row(gamma(scaled).to_row());
        }
    }
    return h;
}

Gf4DecodeResult classical_decode(const QuaternaryCode& code, const Gf4Vector& received) {
    if (!code.declared_distance)
        throw std::logic_error("classical_decode: code has no declared distance");
    if (received.size() != code.n)
        throw std::invalid_argument("classical_decode: length mismatch");
    const std::size_t t = (*code.declared_distance - 1) / 2;

    // Table of correctable-error syndromes, built once per call; codes at
    // desk scale keep this cheap (sum over j<=t of 3^j C(n,j) entries).
    std::map<Gf4Vector, Gf4Vector> table;
    Gf4Vector err(code.n, 0);
    table[code.syndrome(err)] = err;
    std::vector<std::size_t> pos;
    // Enumerate supports of size 1..t with all 3^|support| nonzero patterns.
    auto visit = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
        if (remaining == 0) return;
        for (std::size_t p = start; p < code.n; ++p) {
            for (Gf4 v = 1; v <= 3; ++v) {
                err[p] = v;
                table.emplace(code.syndrome(err), err);
                self(self, p + 1, remaining - 1);
            }
            err[p] = 0;
        }
    };
    visit(visit, 0, t);

    Gf4Vector s = code.syndrome(received);
    auto it = table.find(s);
    if (it == table.end()) return {received, true};
    Gf4Vector corrected = received;
    for (std::size_t i = 0; i < code.n; ++i) corrected[i] = gf4_add(corrected[i], it->second[i]);
    return {corrected, false};
}

}  // namespace eaqec
