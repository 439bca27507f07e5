#pragma once

#include "qtpc/families.hpp"

namespace qtpc {

/// Which parity-check expansion defines h_base. psi expands the
/// extension-field tensor check through the coordinate map; the companion
/// variants replace each extension entry by its binary companion matrix,
/// transposed entrywise or not. psi and companion_transposed produce the
/// same matrix bit-for-bit; companion_plain is conjugate to them and is the
/// form Theorem 2's C_L uses.
enum class TpcVariant { psi, companion_transposed, companion_plain };

/// Tensor product code with component C1 over GF(q) (q = 2 or 4) and C2
/// over GF(q^rho1). Codewords are n2 subblocks of n1 base-field symbols;
/// v is a codeword iff its inner-syndrome vector lies in C2.
class TensorProductCode {
public:
    const LinearCode& c1() const noexcept { return c1_; }
    const LinearCode& c2() const noexcept { return c2_; }
    TpcVariant variant() const noexcept { return variant_; }
    const SubfieldMap& map() const noexcept { return map_; }

    int n1() const noexcept { return c1_.n(); }
    int n2() const noexcept { return c2_.n(); }
    int rho1() const noexcept { return map_.rho(); }
    int rho2() const noexcept { return c2_.rho(); }
    int n() const noexcept { return n1() * n2(); }
    int k() const noexcept { return n() - rho1() * rho2(); }

    /// The c1-side matrix appearing in every block of h_base (c1's parity
    /// check, or L * H_c1 for Theorem 2's C_L).
    const GfMatrix& component() const noexcept { return component_; }
    /// rho2 x n1n2 check over the extension field (psi variant only).
    const std::optional<GfMatrix>& h_ext() const noexcept { return h_ext_; }
    /// rho1*rho2 x n1n2 check over the base field; full row rank.
    const GfMatrix& h_base() const noexcept { return h_base_; }

    /// Basis-twist applied by the companion_plain representation; identity
    /// for the other variants (exposed for the decoder).
    const GfMatrix& twist() const noexcept { return twist_; }
    const GfMatrix& twist_inv() const noexcept { return twist_inv_; }

    /// min{d1, d2} knowledge (lower bound until certified).
    const Distance& distance() const noexcept { return dist_; }
    void set_distance(Distance d) { dist_ = d; }

    /// Inner-syndrome vector (t_1, ..., t_n2) over the extension field;
    /// membership <=> this vector lies in C2.
    std::vector<gf_elem> inner_syndromes(std::span<const gf_elem> v) const;
    bool membership(std::span<const gf_elem> v) const;

    friend TensorProductCode tpc_build(const LinearCode&, const LinearCode&,
                                       TpcVariant);
    friend TensorProductCode build_cl(const LinearCode&, const LinearCode&);

private:
    TensorProductCode(LinearCode c1, LinearCode c2, TpcVariant variant,
                      SubfieldMap map, GfMatrix component);
    LinearCode c1_, c2_;
    TpcVariant variant_;
    SubfieldMap map_;
    GfMatrix component_;
    std::optional<GfMatrix> h_ext_;
    GfMatrix h_base_;
    GfMatrix twist_, twist_inv_;
    Distance dist_{1, false};
};

/// Builds the TPC of (c1, c2); c2's field must be the degree-rho1 extension
/// of c1's field. Companion variants require a binary base field.
TensorProductCode tpc_build(const LinearCode& c1, const LinearCode& c2,
                            TpcVariant variant);

/// Theorem-2 companion code C_L: the companion_plain TPC built on L * H_c1
/// where L inverts S = H_c1 H_c1^T. Throws HypothesisError when S is
/// singular.
TensorProductCode build_cl(const LinearCode& c1, const LinearCode& c2);

/// Invertible T with M T = T M^T for the field's companion matrix M
/// (Hankel symmetrizer built from the primitive polynomial).
GfMatrix companion_symmetrizer(const Field& f);

/// Lower bound min{d1,d2} plus a constructive upper-bound witness search;
/// exact when the two meet. Never overstates: a failed witness search
/// downgrades to a bound-only result.
Distance certify_distance(const TensorProductCode& t,
                          const DistanceBudget& budget = {});

}  // namespace qtpc
