#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qtpc/matgf.hpp"

namespace qtpc {

/// Thrown when a construction's theorem hypothesis fails (CLI exit 3).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A distance value with an explicit exact / lower-bound tag.
struct Distance {
    int value = 1;
    bool exact = false;
};

/// Budget knobs for distance certification.
struct DistanceBudget {
    std::uint64_t max_enumeration = 1ull << 22;  // codeword count cap
    int max_column_weight = 7;                   // column-dependency search cap
};

/// Linear code presented by a full-row-rank parity check matrix. Input
/// checks are canonicalized (row reduced) on ingestion.
class LinearCode {
public:
    /// Builds a code from any parity check (rows reduced to full rank).
    static LinearCode from_parity(const GfMatrix& h);

    const Field& field() const noexcept { return h_.field(); }
    int n() const noexcept { return h_.cols(); }
    int k() const noexcept { return h_.cols() - h_.rows(); }
    int rho() const noexcept { return h_.rows(); }
    const GfMatrix& h() const noexcept { return h_; }

    /// Generator matrix: k x n, G H^T = 0.
    const GfMatrix& generator() const;

    std::vector<gf_elem> syndrome(std::span<const gf_elem> v) const;
    bool contains(std::span<const gf_elem> v) const;
    std::vector<gf_elem> encode(std::span<const gf_elem> msg) const;

    /// Number of codewords, as long double to survive huge k.
    long double size() const;

    /// Declared distance knowledge (set by family constructors/certifiers).
    const Distance& distance() const noexcept { return d_; }
    void set_distance(Distance d) { d_ = d; }

    bool operator==(const LinearCode& o) const;

private:
    explicit LinearCode(GfMatrix h) : h_(std::move(h)) {}
    GfMatrix h_;
    Distance d_{1, false};
    mutable std::optional<GfMatrix> gen_;
};

LinearCode dual(const LinearCode& c);
/// Hermitian dual over GF(4): conjugated dual.
LinearCode hermitian_dual(const LinearCode& c);

/// C^perp subseteq C, checked bit-exactly as H H^T = 0.
bool is_dual_containing(const LinearCode& c);
/// C^perp_h subseteq C over GF(4), checked as H H^dagger = 0.
bool is_hermitian_dual_containing(const LinearCode& c);
/// Trace-Hermitian self-orthogonality of the GF(4)-linear code D, checked on
/// a GF(2)-basis of D (rows g_i and omega g_i of its generator).
bool is_trace_hermitian_self_orthogonal(const LinearCode& d);

/// Visit every codeword (q^k of them); return false from the callback to
/// stop early. Throws if q^k exceeds the budget.
void for_each_codeword(const LinearCode& c, std::uint64_t budget,
                       const std::function<bool(std::span<const gf_elem>)>& fn);

/// Exact minimum distance or a certified lower bound. Strategy: full
/// enumeration when q^k fits the budget, else a search for w <= w_max
/// linearly dependent parity-check columns (exact if one is found, else the
/// certified bound d > w_max).
Distance min_distance(const LinearCode& c, const DistanceBudget& budget = {});

/// min { wt(c) : c in C \ D } for D a subcode of C; enumerates C.
/// Returns nullopt when C == D (empty difference).
std::optional<int> min_weight_difference(const LinearCode& c, const LinearCode& d,
                                         std::uint64_t budget = 1ull << 22);

int hamming_weight(std::span<const gf_elem> v);

}  // namespace qtpc
