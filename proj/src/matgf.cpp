#include "qtpc/matgf.hpp"

#include <algorithm>

namespace qtpc {

namespace {

// Row-packed view of a GF(2) matrix for word-parallel elimination/products.
struct PackedGf2 {
    int rows, cols, words;
    std::vector<std::uint64_t> w;
    PackedGf2(const GfMatrix& a)
        : rows(a.rows()), cols(a.cols()), words((a.cols() + 63) / 64),
          w(static_cast<std::size_t>(a.rows()) * words, 0) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (a.at(r, c)) w[static_cast<std::size_t>(r) * words + c / 64] |=
                    1ull << (c % 64);
    }
    std::uint64_t* rp(int r) { return w.data() + static_cast<std::size_t>(r) * words; }
    const std::uint64_t* rp(int r) const {
        return w.data() + static_cast<std::size_t>(r) * words;
    }
    bool get(int r, int c) const { return rp(r)[c / 64] >> (c % 64) & 1; }
    void xor_row(int dst, int src) {
        auto *d = rp(dst);
        auto *s = rp(src);
        for (int t = 0; t < words; ++t) d[t] ^= s[t];
    }
    void swap_rows(int a, int b) {
        if (a != b) std::swap_ranges(rp(a), rp(a) + words, rp(b));
    }
};

int eliminate_gf2(PackedGf2& m, std::vector<int>* pivots) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.get(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        m.swap_rows(rank, piv);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.get(r, c)) m.xor_row(r, rank);
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

// Generic in-place Gauss-Jordan; returns rank, records pivot columns.
int eliminate(const Field& f, std::vector<gf_elem>& d, int rows, int cols,
              std::vector<int>* pivots) {
    auto at = [&](int r, int c) -> gf_elem& {
        return d[static_cast<std::size_t>(r) * cols + c];
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int t = 0; t < cols; ++t) std::swap(at(rank, t), at(piv, t));
        gf_elem inv = f.inv(at(rank, c));
        if (inv != 1)
            for (int t = 0; t < cols; ++t) at(rank, t) = f.mul(inv, at(rank, t));
        for (int r = 0; r < rows; ++r) {
            if (r == rank || at(r, c) == 0) continue;
            gf_elem fac = at(r, c);
            for (int t = 0; t < cols; ++t) at(r, t) ^= f.mul(fac, at(rank, t));
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

void require_same_field(const GfMatrix& a, const GfMatrix& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("matrix field mismatch");
}

}  // namespace

GfMatrix::GfMatrix(const Field& f, int rows, int cols, std::vector<gf_elem> data)
    : field_(&f), rows_(rows), cols_(cols), d_(std::move(data)) {
    if (d_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("GfMatrix: data length != rows*cols");
    for (gf_elem x : d_)
        if (!f.is_element(x)) throw std::invalid_argument("GfMatrix: bad element");
}

GfMatrix GfMatrix::identity(const Field& f, int n) {
    GfMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GfMatrix GfMatrix::from_rows(const Field& f,
                             const std::vector<std::vector<gf_elem>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    GfMatrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool GfMatrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](gf_elem x) { return x == 0; });
}

bool GfMatrix::operator==(const GfMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
    const Field& f = a.field();
    GfMatrix out(f, a.rows(), b.cols());
    if (f.m() == 1) {
        PackedGf2 pb(b);
        std::vector<std::uint64_t> acc(pb.words);
        for (int i = 0; i < a.rows(); ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int t = 0; t < a.cols(); ++t)
                if (a.at(i, t)) {
                    const std::uint64_t* src = pb.rp(t);
                    for (int wrd = 0; wrd < pb.words; ++wrd) acc[wrd] ^= src[wrd];
                }
            for (int j = 0; j < b.cols(); ++j)
                if (acc[j / 64] >> (j % 64) & 1) out.set(i, j, 1);
        }
        return out;
    }
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t) {
            gf_elem av = a.at(i, t);
            if (!av) continue;
            for (int j = 0; j < b.cols(); ++j) {
                gf_elem bv = b.at(t, j);
                if (bv) out.set(i, j, out.at(i, j) ^ f.mul(av, bv));
            }
        }
    return out;
}

GfMatrix matadd(const GfMatrix& a, const GfMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matadd: shape mismatch");
    std::vector<gf_elem> d(a.data());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] ^= b.data()[i];
    return GfMatrix(a.field(), a.rows(), a.cols(), std::move(d));
}

GfMatrix transpose(const GfMatrix& a) {
    GfMatrix out(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
    return out;
}

GfMatrix dagger(const GfMatrix& a) {
    if (a.field().m() != 2)
        throw std::invalid_argument("dagger: defined for GF(4) matrices");
    GfMatrix out(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(j, i, conj_gf4(a.at(i, j)));
    return out;
}

std::vector<gf_elem> matvec(const GfMatrix& a, std::span<const gf_elem> v) {
    if (static_cast<int>(v.size()) != a.cols())
        throw std::invalid_argument("matvec: length mismatch");
    const Field& f = a.field();
    std::vector<gf_elem> out(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        gf_elem acc = 0;
        for (int j = 0; j < a.cols(); ++j)
            if (v[j]) acc ^= f.mul(a.at(i, j), v[j]);
        out[i] = acc;
    }
    return out;
}

GfMatrix kron(const GfMatrix& a, const GfMatrix& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    GfMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            gf_elem av = a.at(i, j);
            if (!av) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c) {
                    gf_elem bv = b.at(r, c);
                    if (bv) out.set(i * b.rows() + r, j * b.cols() + c, f.mul(av, bv));
                }
        }
    return out;
}

int rank(const GfMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    if (a.field().m() == 1) {
        PackedGf2 p(a);
        return eliminate_gf2(p, nullptr);
    }
    std::vector<gf_elem> d(a.data());
    return eliminate(a.field(), d, a.rows(), a.cols(), nullptr);
}

bool is_full_row_rank(const GfMatrix& a) { return rank(a) == a.rows(); }

GfMatrix rref(const GfMatrix& a, std::vector<int>* pivots) {
    std::vector<int> piv_local;
    std::vector<int>& piv = pivots ? *pivots : piv_local;
    piv.clear();
    std::vector<gf_elem> d(a.data());
    int r = a.rows() ? eliminate(a.field(), d, a.rows(), a.cols(), &piv) : 0;
    d.resize(static_cast<std::size_t>(r) * a.cols());
    return GfMatrix(a.field(), r, a.cols(), std::move(d));
}

GfMatrix null_space(const GfMatrix& a) {
    std::vector<int> pivots;
    GfMatrix R = rref(a, &pivots);
    const Field& f = a.field();
    int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<gf_elem>> rows;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<gf_elem> v(n, 0);
        v[c] = 1;
        for (int r = 0; r < R.rows(); ++r) v[pivots[r]] = R.at(r, c);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return GfMatrix(f, 0, n);
    return GfMatrix::from_rows(f, rows);
}

GfMatrix solve_left_inverse(const GfMatrix& s) {
    if (s.rows() != s.cols())
        throw std::invalid_argument("solve_left_inverse: matrix not square");
    const Field& f = s.field();
    int n = s.rows();
    // eliminate [S | I]
    std::vector<gf_elem> d(static_cast<std::size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * 2 * n + j] = s.at(i, j);
        d[static_cast<std::size_t>(i) * 2 * n + n + i] = 1;
    }
    std::vector<int> pivots;
    eliminate(f, d, n, 2 * n, &pivots);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw std::domain_error(
            "solve_left_inverse: matrix is singular (full-rank hypothesis fails)");
    GfMatrix out(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.set(i, j, d[static_cast<std::size_t>(i) * 2 * n + n + j]);
    return out;
}

bool in_row_space(const GfMatrix& a, std::span<const gf_elem> v) {
    if (static_cast<int>(v.size()) != a.cols())
        throw std::invalid_argument("in_row_space: length mismatch");
    // reduce v against rref(a)
    std::vector<int> pivots;
    GfMatrix R = rref(a, &pivots);
    const Field& f = a.field();
    std::vector<gf_elem> w(v.begin(), v.end());
    for (int r = 0; r < R.rows(); ++r) {
        gf_elem x = w[pivots[r]];
        if (!x) continue;
        for (int c = 0; c < R.cols(); ++c) w[c] ^= f.mul(x, R.at(r, c));
    }
    return std::all_of(w.begin(), w.end(), [](gf_elem x) { return x == 0; });
}

GfMatrix companion(const Field& f, gf_elem a) {
    int m = f.m();
    const Field& f2 = Field::get(1);
    GfMatrix out(f2, m, m);
    if (a == 0) return out;
    // M: subdiagonal identity, last row = primitive poly coefficients
    GfMatrix M(f2, m, m);
    for (int i = 0; i + 1 < m; ++i) M.set(i, i + 1, 1);
    for (int j = 0; j < m; ++j) M.set(m - 1, j, f.primitive_poly() >> j & 1);
    // [a] = M^log(a)
    std::uint64_t e = f.log(a);
    GfMatrix r = GfMatrix::identity(f2, m);
    GfMatrix base = M;
    while (e) {
        if (e & 1) r = matmul(r, base);
        base = matmul(base, base);
        e >>= 1;
    }
    return r;
}

GfMatrix companion_expand(const GfMatrix& h, bool transposed) {
    const Field& f = h.field();
    int m = f.m();
    GfMatrix out(Field::get(1), h.rows() * m, h.cols() * m);
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            gf_elem b = h.at(i, j);
            if (!b) continue;
            GfMatrix blk = companion(f, b);
            if (transposed) blk = transpose(blk);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    if (blk.at(r, c)) out.set(i * m + r, j * m + c, 1);
        }
    return out;
}

GfMatrix psi_matrix(const GfMatrix& h, const SubfieldMap& map) {
    if (!(h.field() == map.ext()))
        throw std::invalid_argument("psi_matrix: matrix not over the extension field");
    int rho = map.rho();
    GfMatrix out(map.base(), h.rows() * rho, h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            auto col = map.psi(h.at(i, j));
            for (int t = 0; t < rho; ++t) out.set(i * rho + t, j, col[t]);
        }
    return out;
}

GfMatrix psi_inv_matrix(const GfMatrix& h, const SubfieldMap& map) {
    if (!(h.field() == map.base()))
        throw std::invalid_argument("psi_inv_matrix: matrix not over the base field");
    if (h.rows() != map.rho())
        throw std::invalid_argument("psi_inv_matrix: expected rho rows");
    GfMatrix out(map.ext(), 1, h.cols());
    std::vector<gf_elem> col(map.rho());
    for (int j = 0; j < h.cols(); ++j) {
        for (int t = 0; t < map.rho(); ++t) col[t] = h.at(t, j);
        out.set(0, j, map.psi_inv(col));
    }
    return out;
}

}  // namespace qtpc
