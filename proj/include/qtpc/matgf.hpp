#pragma once

#include <span>

#include "qtpc/galois.hpp"

namespace qtpc {

/// Dense row-major matrix over a Field. Values are immutable in spirit:
/// all operations return fresh matrices. GF(2) products and elimination run
/// on packed 64-bit words internally.
class GfMatrix {
public:
    GfMatrix() : field_(&Field::get(1)), rows_(0), cols_(0) {}
    GfMatrix(const Field& f, int rows, int cols)
        : field_(&f), rows_(rows), cols_(cols),
          d_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("GfMatrix: bad shape");
    }
    GfMatrix(const Field& f, int rows, int cols, std::vector<gf_elem> data);

    static GfMatrix identity(const Field& f, int n);
    static GfMatrix from_rows(const Field& f,
                              const std::vector<std::vector<gf_elem>>& rows);

    const Field& field() const noexcept { return *field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    gf_elem at(int r, int c) const { return d_[idx(r, c)]; }
    void set(int r, int c, gf_elem v) { d_[idx(r, c)] = v; }
    std::span<const gf_elem> row(int r) const {
        return {d_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
    }
    const std::vector<gf_elem>& data() const noexcept { return d_; }

    bool is_zero() const;
    bool operator==(const GfMatrix& o) const;

private:
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("GfMatrix index");
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    const Field* field_;
    int rows_, cols_;
    std::vector<gf_elem> d_;
};

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b);
GfMatrix matadd(const GfMatrix& a, const GfMatrix& b);
GfMatrix transpose(const GfMatrix& a);
/// Conjugate transpose over GF(4): elementwise square, then transpose.
GfMatrix dagger(const GfMatrix& a);
/// Matrix-vector product A v^T as a vector.
std::vector<gf_elem> matvec(const GfMatrix& a, std::span<const gf_elem> v);

/// Kronecker product; block (i,j) of the result is a_ij * B.
GfMatrix kron(const GfMatrix& a, const GfMatrix& b);

int rank(const GfMatrix& a);
bool is_full_row_rank(const GfMatrix& a);
/// Reduced row echelon form; pivot column indices returned through `pivots`
/// when non-null. Zero rows are dropped.
GfMatrix rref(const GfMatrix& a, std::vector<int>* pivots = nullptr);
/// Rows span {x : A x^T = 0}; rows() = cols(A) - rank(A).
GfMatrix null_space(const GfMatrix& a);
/// L with L * S = identity; S must be square and invertible.
GfMatrix solve_left_inverse(const GfMatrix& s);
/// True iff v lies in the row space of A.
bool in_row_space(const GfMatrix& a, std::span<const gf_elem> v);

/// Replace each entry b of H (over GF(2^rho)) by its rho x rho binary
/// companion matrix [b], transposed per entry when `transposed` is set.
GfMatrix companion_expand(const GfMatrix& h, bool transposed);
/// The rho1 x rho1 binary companion matrix of a field element (Eq.-style
/// subdiagonal-identity layout, [alpha] = M, [0] = 0, [1] = I).
GfMatrix companion(const Field& f, gf_elem a);

/// Expand a k x n matrix over ext to a (k*rho) x n matrix over base by
/// stacking psi of each entry columnwise.
GfMatrix psi_matrix(const GfMatrix& h, const SubfieldMap& map);
/// Pack a rho x n matrix over base into a 1 x n row over ext.
GfMatrix psi_inv_matrix(const GfMatrix& h, const SubfieldMap& map);

}  // namespace qtpc
