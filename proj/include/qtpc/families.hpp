#pragma once

#include "qtpc/codes.hpp"

namespace qtpc {

/// Cyclic code of odd length n presented by its generator polynomial. The
/// canonical parity check is the banded rho x n matrix whose rows are shifts
/// of the reversed check polynomial h(x) = (x^n - 1)/g(x).
struct CyclicCode {
    LinearCode code;
    Poly g;                         // generator over GF(2)
    std::vector<int> defining_set;  // exponents i with g(alpha^i) = 0, sorted
    int n = 0;
};

struct FireSpec {
    Poly b_poly;
    int l = 0;
    std::uint64_t rho_period = 0;  // period of b_poly
    int n = 0;                     // LCM(2l-1, period)
};

struct FireCode {
    CyclicCode cyclic;
    FireSpec spec;
};

/// Generalized Reed-Solomon structure: point column j is
/// (v_j x_j^i)_{i=0..rho-1}; an optional trailing infinity column is
/// (0,...,0,1)^T.
struct GrsInfo {
    const Field* field = nullptr;
    std::vector<gf_elem> points;
    std::vector<gf_elem> mults;
    bool inf_col = false;
    int rho = 0;
};

struct RsCode {
    LinearCode code;
    GrsInfo grs;
};

/// [n, 1, n] repetition code with parity rows e_i + e_{i+1}.
LinearCode repetition(int n);

/// Partition of Z_n into q-ary cyclotomic cosets, each sorted, ordered by
/// smallest element.
std::vector<std::vector<int>> cyclotomic_cosets(int n, int q);
/// Union of the q-ary cosets of {lo, ..., hi} mod n.
std::vector<int> coset_closure(int n, int q, int lo, int hi);

/// Binary cyclic code of length n from a 2-closed defining set.
CyclicCode cyclic_from_defining_set(int n, const std::vector<int>& z);

/// Binary BCH code of length 2^m - 1 with defining set
/// {C_b, C_{b+1}, ..., C_{b+delta-2}} (narrow-sense primitive when b = 1).
CyclicCode bch(int m, int b, int delta);

struct BchContainment {
    bool predicted = false;  // delta <= 2^ceil(m/2) - 1 (narrow-sense bound)
    bool verified = false;   // H H^T == 0
};
/// Both the design-distance prediction and the direct matrix verification;
/// they must agree for narrow-sense primitive inputs.
BchContainment bch_dual_containing_check(const CyclicCode& c, int m, int delta);

/// [n, k, n-k+1] MDS code over F: narrow-sense Vandermonde for n <= q-1,
/// evaluation at all of F for n = q, plus an infinity column for n = q+1.
RsCode reed_solomon(const Field& f, int n, int k);

/// Dual-containing [n, n-d+1, d] generalized RS code (H H^T = 0 bit-exactly);
/// requires d <= floor(n/2) + 1 and n <= q.
RsCode mds_dual_containing(const Field& f, int n, int d);

/// g = g_r, cross-checked against Z = -Z mod n.
bool is_reversible(const CyclicCode& c);

/// l-burst-error-correcting Fire code with generator (x^(2l-1) + 1) b(x).
FireCode fire_code(const Poly& b_poly, int l);

/// Subfield subcode with parity check psi(H), re-reduced to full rank.
LinearCode subfield_subcode(const LinearCode& c, const SubfieldMap& map);

}  // namespace qtpc
