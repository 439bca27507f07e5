#pragma once

#include "qtpc/tpc.hpp"

namespace qtpc {

enum class Purity { verified, asserted, unknown };

/// Classical (a|b) image of a Pauli operator X(a)Z(b).
struct PauliErrorVector {
    std::vector<gf_elem> a, b;
    int weight() const;
};

/// Pair of classical TPC structures backing a CSS-built QTPC: X errors are
/// decoded through the Z-side checks and vice versa.
struct QtpcPair {
    TensorProductCode x_side;  // C_L (plain companion blocks, L H_c1)
    TensorProductCode z_side;  // C   (transposed companion blocks)
};

struct BurstCapability {
    int l = 0;  // max burst length within a subblock
    int t = 0;  // number of bursts, in distinct subblocks
};

/// Stabilizer code in binary symplectic form: rows of stab are (a|b) with
/// X(a)Z(b) generators; all pairs commute and rank(stab) = n - k.
struct StabilizerCode {
    int n = 0;
    int k = 0;
    Distance d{1, false};
    GfMatrix stab;
    Purity pure = Purity::unknown;
    std::string provenance;
    std::optional<QtpcPair> tpcs;
    std::optional<BurstCapability> burst;
};

/// All pairwise symplectic products a.b' + a'.b vanish.
bool symplectic_commute(const GfMatrix& stab);

/// Coordinate projections of a set of (a|b) errors onto bit and phase
/// error classes.
std::pair<std::vector<std::vector<gf_elem>>, std::vector<std::vector<gf_elem>>>
classical_error_classes(const std::vector<PauliErrorVector>& errors);

/// CSS construction: C2^perp subseteq C1 (checked as H1 H2^T = 0) gives an
/// [[n, k1+k2-n, d]] code; d computed exactly by weight-difference
/// enumeration when feasible.
StabilizerCode css(const LinearCode& c1, const LinearCode& c2,
                   std::uint64_t enum_budget = 1ull << 22);

/// Hermitian construction from a Hermitian dual-containing GF(4) code:
/// [[n, 2k-n, d]].
StabilizerCode hermitian(const LinearCode& d4,
                         std::uint64_t enum_budget = 1ull << 22);

/// Pure QTPC from a dual-containing component (binary CSS branch or GF(4)
/// Hermitian branch chosen by the base field): [[n1n2, n1n2-2*rho1*rho2,
/// min{d1,d2}]].
StabilizerCode qtpc_theorem1(const LinearCode& c1, const LinearCode& c2);

/// Companion-form QTPC: requires H_c1 H_c1^T of full rank and an
/// Euclidean dual-containing c2; CSS pair (C_L, C).
StabilizerCode qtpc_theorem2(const LinearCode& c1, const LinearCode& c2);

/// Repetition (x) dual-containing-MDS burst QTPC:
/// [[n1n2, n1n2-2(n1-1)^2, n1]] correcting ceil(n1/2)-1 sized bursts.
StabilizerCode qtpc_burst_theorem3(int n1, int n2);

/// Reversible-Fire (x) dual-containing-RS burst QTPC:
/// [[n1n2, n1n2-2*rho1*rho2]] correcting floor((rho2+1)/2) l-bursts.
StabilizerCode qtpc_burst_theorem4(const FireCode& fire, const RsCode& c2);

/// Self-dual square construction: [[n^2, n^2/2, d]].
StabilizerCode self_dual_corollary1(const LinearCode& c,
                                    std::uint64_t enum_budget = 1ull << 22);
/// Self-dual with an MDS boost: [[n^2, n^2 - nd + n, d]].
StabilizerCode self_dual_corollary2(const LinearCode& c);

struct CqcSpec {
    int m = 0;
    int delta1 = 0;
    int eta1 = 0;
    int eta2 = 0;
    std::uint64_t n2 = 0;
};
struct QuantumParams {
    std::uint64_t n = 0, k = 0;
    int d = 0;
};
/// Concatenated-code comparison parameters [[n1n2, K1(n2-2*eta2+2),
/// eta1*eta2]]; arithmetic only, no code is constructed.
QuantumParams cqc_parameters(const CqcSpec& spec);

/// Check-symbol count rho1 of the narrow-sense primitive BCH component used
/// by the comparison table: coset-union size over GF(2) (odd m) or GF(4)
/// (even m, length 4^(m/2)-1), with the design distance rounded up to odd.
int table_bch_check_symbols(int m, int delta1);

struct Table1Row {
    int m, delta1, eta1, eta2;
    std::uint64_t n2_lo, n2_hi;
};
/// The 14 comparison rows (m, delta1, eta1, eta2, n2 range).
const std::vector<Table1Row>& table1_rows();

/// QTPC formula for a table row: [[n1*n2, n1*n2 - 2*rho1*(delta1-1), delta1]].
QuantumParams table_qtpc_params(int m, int delta1, std::uint64_t n2);

/// Dimension-crossover bound: QTPCs beat CQCs when n2 >= ceil((1-2/m) n1).
std::uint64_t table_crossover_n2(int m);

}  // namespace qtpc
