#include "eaqec/symplectic.hpp"

#include <stdexcept>

namespace eaqec {

SympVector::SympVector(BitVector z_part, BitVector x_part)
    : z(std::move(z_part)), x(std::move(x_part)) {
    if (z.size() != x.size()) throw std::invalid_argument("SympVector: z/x length mismatch");
}

BitVector SympVector::to_row() const { return BitVector::concat(z, x); }

SympVector SympVector::from_row(const BitVector& row) {
    if (row.size() % 2 != 0) throw std::invalid_argument("SympVector: odd row length");
    std::size_t n = row.size() / 2;
    return SympVector(row.slice(0, n), row.slice(n, n));
}

SympVector symp_add(const SympVector& u, const SympVector& v) {
    return SympVector(xor_add(u.z, v.z), xor_add(u.x, v.x));
}

bool symp_product(const SympVector& u, const SympVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("symp_product: dimension mismatch");
    return u.z.dot(v.x) ^ v.z.dot(u.x);
}

std::size_t weight(const SympVector& u) { return BitVector::bit_or(u.z, u.x).popcount(); }

namespace {

bool symp_product_rows(const BitVector& a, const BitVector& b) {
    return symp_product(SympVector::from_row(a), SympVector::from_row(b));
}

void require_even(const BinMatrix& v, const char* what) {
    if (v.ncols() % 2 != 0) throw std::invalid_argument(std::string(what) + ": odd column count");
}

}  // namespace

SympDecomposition symplectic_gram_schmidt(const BinMatrix& v) {
    require_even(v, "symplectic_gram_schmidt");
    const std::size_t n = v.ncols() / 2;

    BinMatrix basis = row_basis(v);
    const std::size_t m = basis.nrows();

    // Extend to a basis of the full space, standard basis vectors taken
    // greedily in index order.
    std::vector<BitVector> work(basis.rows().begin(), basis.rows().end());
    {
        BinMatrix span(work, 2 * n);
        for (std::size_t i = 0; i < 2 * n && work.size() < 2 * n; ++i) {
            BitVector e = BitVector::unit(2 * n, i);
            if (!row_space_contains(span, e)) {
                work.push_back(e);
                span.append_row(e);
            }
        }
    }

    std::size_t m_prime = m;
    std::vector<HyperbolicPair> sympl, iso, outside;

    for (std::size_t round = 0; round < n; ++round) {
        BitVector u = work[0];
        const bool u_in_v = m_prime >= 1;

        std::size_t j = 1;
        while (j < work.size() && !symp_product_rows(u, work[j])) ++j;
        if (j == work.size())
            throw std::logic_error("symplectic_gram_schmidt: no hyperbolic partner found");
        BitVector partner = work[j];

        std::vector<BitVector> next;
        if (j + 1 <= m_prime) {
            // Partner inside V: a symplectic pair.
            std::swap(work[j], work[1]);
            for (std::size_t k = 2; k < work.size(); ++k) {
                BitVector w = work[k];
                if (symp_product_rows(partner, work[k])) w.xor_assign(u);
                if (symp_product_rows(u, work[k])) w.xor_assign(partner);
                next.push_back(w);
            }
            m_prime -= 2;
            sympl.push_back({SympVector::from_row(u), SympVector::from_row(partner)});
        } else {
            std::swap(work[j], work.back());
            for (std::size_t k = 1; k + 1 < work.size(); ++k) {
                BitVector w = work[k];
                if (symp_product_rows(partner, work[k])) w.xor_assign(u);
                if (symp_product_rows(u, work[k])) w.xor_assign(partner);
                next.push_back(w);
            }
            if (u_in_v) {
                m_prime -= 1;
                iso.push_back({SympVector::from_row(u), SympVector::from_row(partner)});
            } else {
                outside.push_back({SympVector::from_row(u), SympVector::from_row(partner)});
            }
        }
        work = std::move(next);
    }
    if (m_prime != 0) throw std::logic_error("symplectic_gram_schmidt: rounds did not exhaust V");

    SympDecomposition d;
    d.n = n;
    d.m = m;
    d.c = sympl.size();
    d.ell = iso.size();
    for (const auto& p : sympl) {
        d.pairs.push_back(p);
        d.origins.push_back(PairOrigin::Symplectic);
    }
    for (const auto& p : iso) {
        d.pairs.push_back(p);
        d.origins.push_back(PairOrigin::Isotropic);
    }
    for (const auto& p : outside) {
        d.pairs.push_back(p);
        d.origins.push_back(PairOrigin::Outside);
    }
    return d;
}

BinMatrix symplectic_form_matrix(std::size_t n) {
    BinMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j.set(i, n + i, true);
        j.set(n + i, i, true);
    }
    return j;
}

BinMatrix symplectic_dual(const BinMatrix& v) {
    require_even(v, "symplectic_dual");
    const std::size_t n = v.ncols() / 2;
    // w is symplectically orthogonal to every row r iff (r J) . w = 0.
    BinMatrix twisted(0, 2 * n);
    for (const auto& r : v.rows()) {
        SympVector s = SympVector::from_row(r);
        twisted.append_row(BitVector::concat(s.x, s.z));
    }
    if (twisted.nrows() == 0) return BinMatrix::identity(2 * n);
    return kernel(twisted);
}

BinMatrix iso_part(const BinMatrix& v) {
    require_even(v, "iso_part");
    // V intersect V^perp: vectors of V annihilated by the twisted rows of V.
    BinMatrix vb = row_basis(v);
    BinMatrix dual = symplectic_dual(v);
    // Solve for combinations of vb's rows lying in span(dual): the
    // coefficient space is the kernel of dual-membership residuals.
    // Equivalent and simpler: kernel of the Gram matrix G with
    // G[i][j] = vb_i (.) vb_j gives the radical coefficients.
    BinMatrix gram(vb.nrows(), vb.nrows());
    for (std::size_t i = 0; i < vb.nrows(); ++i)
        for (std::size_t j = 0; j < vb.nrows(); ++j)
            gram.set(i, j, symp_product_rows(vb.row(i), vb.row(j)));
    BinMatrix coeffs = kernel(gram);
    BinMatrix out(0, v.ncols());
    for (const auto& cf : coeffs.rows()) {
        BitVector w(v.ncols());
        for (std::size_t i = 0; i < vb.nrows(); ++i)
            if (cf.get(i)) w.xor_assign(vb.row(i));
        out.append_row(w);
    }
    return out;
}

bool is_isotropic(const BinMatrix& v) {
    require_even(v, "is_isotropic");
    for (std::size_t i = 0; i < v.nrows(); ++i)
        for (std::size_t j = i; j < v.nrows(); ++j)
            if (symp_product_rows(v.row(i), v.row(j))) return false;
    return true;
}

bool is_symplectic_subspace(const BinMatrix& v) {
    require_even(v, "is_symplectic_subspace");
    return iso_part(v).nrows() == 0;
}

BinMatrix invert(const BinMatrix& m) {
    if (m.nrows() != m.ncols()) throw std::invalid_argument("invert: not square");
    const std::size_t n = m.nrows();
    BinMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, n + i, true);
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivots.size() || r.pivots[i] != i)
            throw std::invalid_argument("invert: singular matrix");
    BinMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.rref.get(i, n + j));
    return inv;
}

BinMatrix standardizing_symplectomorphism(const SympDecomposition& d) {
    const std::size_t n = d.n;
    if (d.pairs.size() != n) throw std::invalid_argument("standardizing_symplectomorphism: bad decomposition");
    // Columns of P are u_1..u_n, v_1..v_n; Upsilon = P^{-1} sends u_i to
    // e_i and v_i to e_{n+i}, i.e. g_i and h_i in the (z|x) packing.
    BinMatrix p(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector u = d.pairs[i].u.to_row();
        BitVector v = d.pairs[i].v.to_row();
        for (std::size_t rrow = 0; rrow < 2 * n; ++rrow) {
            p.set(rrow, i, u.get(rrow));
            p.set(rrow, n + i, v.get(rrow));
        }
    }
    return invert(p);
}

bool verify_symplectomorphism(const BinMatrix& m) {
    if (m.nrows() != m.ncols() || m.nrows() % 2 != 0) return false;
    const std::size_t n = m.nrows() / 2;
    if (rank(m) != m.nrows()) return false;
    BinMatrix j = symplectic_form_matrix(n);
    // Check M J M^T == J entry by entry.
    for (std::size_t a = 0; a < 2 * n; ++a) {
        BitVector ja = j.mul_vector(m.row(a));  // J * (row_a)^T
        for (std::size_t b = 0; b < 2 * n; ++b) {
            bool lhs = m.row(b).dot(ja);
            if (lhs != j.get(a, b)) return false;
        }
    }
    return true;
}

SympVector apply_symplectomorphism(const BinMatrix& upsilon, const SympVector& u) {
    BitVector col = u.to_row();
    BitVector out(upsilon.nrows());
    for (std::size_t i = 0; i < upsilon.nrows(); ++i) out.set(i, upsilon.row(i).dot(col));
    return SympVector::from_row(out);
}

}  // namespace eaqec
