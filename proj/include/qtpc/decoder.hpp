#pragma once

#include <memory>

#include "qtpc/quantum.hpp"

namespace qtpc {

// ---------------------------------------------------------------------------
// Burst patterns
// ---------------------------------------------------------------------------

/// Error values for burst sampling/enumeration: binary puts a single 1 at
/// each burst position; pauli draws (a|b) pairs with non-identity endpoints.
enum class BurstAlphabet { binary, pauli };

/// Multi-burst error pattern: each burst lives in one subblock, subblocks
/// are pairwise distinct, and burst endpoints are nonzero.
struct BurstPattern {
    struct Burst {
        int subblock = 0;
        int offset = 0;                                  // start within subblock
        std::vector<std::pair<gf_elem, gf_elem>> values;  // (a|b) per position
    };
    std::vector<Burst> bursts;

    PauliErrorVector to_pauli(int n1, int n2) const;
};

/// Exhaustive, duplicate-free enumeration of all patterns with exactly t
/// bursts of length <= l in distinct subblocks.
std::vector<BurstPattern> enumerate_burst_patterns(int n1, int n2, int t, int l,
                                                   BurstAlphabet alphabet);
/// Number of such patterns (matches the enumeration).
std::uint64_t count_burst_patterns(int n1, int n2, int t, int l,
                                   BurstAlphabet alphabet);

/// Deterministic counter-based sampling: the pattern depends only on
/// (seed, index).
BurstPattern sample_burst_pattern(std::uint64_t seed, std::uint64_t index, int n1,
                                  int n2, int t, int l, BurstAlphabet alphabet);

// ---------------------------------------------------------------------------
// Component decoders
// ---------------------------------------------------------------------------

/// Bounded-distance GRS decoder. Syndromes are S_i = sum_j v_j e_j x_j^i,
/// i = 0..rho-1, matching the GrsInfo parity check. The key-equation path
/// (extended Euclid) covers radius <= floor(rho/2) on codes without a zero
/// evaluation point; support enumeration covers the rest and detects
/// ambiguity explicitly.
class GrsDecoder {
public:
    explicit GrsDecoder(GrsInfo grs);

    enum class Outcome { ok, failure, ambiguous };
    struct Result {
        Outcome outcome = Outcome::failure;
        std::vector<gf_elem> error;  // length n, set when outcome == ok
    };

    int default_radius() const noexcept { return grs_.rho / 2; }
    int n() const noexcept { return static_cast<int>(grs_.points.size()); }

    Result decode(std::span<const gf_elem> syndrome, int radius) const;
    Result decode(std::span<const gf_elem> syndrome) const {
        return decode(syndrome, default_radius());
    }

    /// Both algorithmic routes, for cross-checking.
    Result decode_key_equation(std::span<const gf_elem> syndrome, int radius) const;
    Result decode_support_enum(std::span<const gf_elem> syndrome, int radius) const;

    std::vector<gf_elem> syndrome_of(std::span<const gf_elem> error) const;

private:
    bool verify(std::span<const gf_elem> syndrome,
                std::span<const gf_elem> error) const;
    GrsInfo grs_;
    bool has_zero_point_ = false;
};

/// Subblock decoder keyed on component-matrix syndromes W e^T.
class InnerDecoder {
public:
    virtual ~InnerDecoder() = default;
    /// Subblock error for this syndrome, or nullopt (uncorrectable).
    virtual std::optional<std::vector<gf_elem>> decode(
        std::span<const gf_elem> syndrome) const = 0;
};

/// Syndrome table over all binary patterns of weight <= t.
std::unique_ptr<InnerDecoder> make_table_decoder(const GfMatrix& w, int t);
/// Syndrome table over all single bursts of length <= l.
std::unique_ptr<InnerDecoder> make_burst_table_decoder(const GfMatrix& w, int l);
/// Cyclic error-trapping decoder for a Fire-type code with generator g;
/// corrects single bursts of length <= l exactly.
std::unique_ptr<InnerDecoder> make_trapping_decoder(const GfMatrix& w, const Poly& g,
                                                    int l);

// ---------------------------------------------------------------------------
// Two-stage TPC decoding
// ---------------------------------------------------------------------------

enum class DecodeStatus {
    ok,
    outer_failure,    // C2 decoder found no candidate in radius
    outer_ambiguous,  // several candidates tie (beyond half distance)
    inner_failure,    // some flagged subblock's syndrome is uncorrectable
    verify_mismatch,  // re-computed syndrome differs (miscorrection caught)
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::outer_failure;
    std::vector<gf_elem> error;  // length n1*n2, set when status == ok
};

/// Decoder for one TPC structure: outer C2 decoding of the packed syndrome,
/// then per-subblock inner decoding. Never returns a wrong answer silently:
/// the result's syndrome is re-checked bit-exactly.
class TpcDecoder {
public:
    TpcDecoder(const TensorProductCode& tpc, GrsInfo outer,
               std::unique_ptr<InnerDecoder> inner);

    DecodeResult decode(std::span<const gf_elem> syndrome) const {
        return decode(syndrome, outer_.default_radius());
    }
    DecodeResult decode(std::span<const gf_elem> syndrome, int outer_radius) const;

    const TensorProductCode& tpc() const noexcept { return *tpc_; }

private:
    const TensorProductCode* tpc_;
    GrsDecoder outer_;
    std::unique_ptr<InnerDecoder> inner_;
};

// ---------------------------------------------------------------------------
// QTPC (CSS) decoding and capability verification
// ---------------------------------------------------------------------------

struct QeccDecodeResult {
    bool success = false;
    DecodeStatus x_status = DecodeStatus::ok;  // decoding of the a-component
    DecodeStatus z_status = DecodeStatus::ok;  // decoding of the b-component
    bool x_logical = false;  // a-side residual escapes the stabilizer
    bool z_logical = false;
};

/// Decoder pair for a Theorem-2/3/4 stabilizer code, with degeneracy-aware
/// success checks precomputed.
class QtpcDecoder {
public:
    /// q must carry its TPC pair; inner decoders are built per c1's family
    /// (table for repetition-like codes, trapping for Fire codes).
    QtpcDecoder(const StabilizerCode& q, const GrsInfo& outer,
                const std::optional<Poly>& fire_g);

    /// Decode both halves of e from their syndromes and compare with the
    /// injected error modulo the stabilizer.
    QeccDecodeResult decode(const PauliErrorVector& e) const;

    int outer_radius() const noexcept { return radius_; }
    void set_outer_radius(int r) { radius_ = r; }

private:
    struct SpaceChecker {
        GfMatrix rref_rows;
        std::vector<int> pivots;
        bool contains(std::span<const gf_elem> v) const;
    };
    const StabilizerCode* q_;
    TpcDecoder x_dec_;  // decodes a via H_[C_L]
    TpcDecoder z_dec_;  // decodes b via H_[C]
    SpaceChecker x_space_;  // rowspace(H_[C])
    SpaceChecker z_space_;  // rowspace(H_[C_L])
    int radius_;
};

struct CapabilityReport {
    std::uint64_t patterns = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::optional<BurstPattern> first_failure;
};

/// Exhaustive over all patterns with <= t bursts when the count fits the
/// budget, else `trials` seeded Monte Carlo draws of exactly-t-burst
/// patterns.
CapabilityReport capability_report(const QtpcDecoder& dec, int n1, int n2, int t,
                                   int l, std::uint64_t trials, std::uint64_t seed,
                                   std::uint64_t exhaustive_budget = 200000);

}  // namespace qtpc
