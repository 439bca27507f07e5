#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtpc {

using gf_elem = std::uint32_t;

/// Binary extension field GF(2^m), elements as m-bit coefficient vectors in
/// the polynomial basis {1, alpha, ..., alpha^(m-1)} (coefficient of 1 in
/// bit 0). Log/antilog tables are built for m <= QTPC_GF_TABLE_MAX_M; above
/// that, multiplication falls back to shift-and-reduce.
class Field {
public:
    static constexpr int kMaxDegree = 24;
    static constexpr int kTableMaxDegree = 16;

    /// Interned field with the lexicographically smallest primitive
    /// polynomial of degree m. Returned reference lives for the program.
    static const Field& get(int m);
    /// Interned field with an explicit primitive polynomial (coefficient
    /// bitmask, bit i = coefficient of x^i, bit m set).
    static const Field& get(int m, gf_elem primitive_poly);

    int m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }
    gf_elem primitive_poly() const noexcept { return poly_; }

    bool is_element(gf_elem a) const noexcept { return a < q_; }

    static gf_elem add(gf_elem a, gf_elem b) noexcept { return a ^ b; }
    gf_elem mul(gf_elem a, gf_elem b) const;
    gf_elem square(gf_elem a) const { return mul(a, a); }
    gf_elem inv(gf_elem a) const;
    gf_elem pow(gf_elem a, std::uint64_t e) const;
    /// alpha^i for the fixed primitive element alpha = x.
    gf_elem alpha(std::uint64_t i) const;
    /// Square root (Frobenius is bijective in characteristic 2).
    gf_elem sqrt(gf_elem a) const { return pow(a, q_ >> 1); }
    /// Discrete log base alpha; a must be nonzero (tables required).
    std::uint64_t log(gf_elem a) const;

    bool operator==(const Field& o) const noexcept {
        return m_ == o.m_ && poly_ == o.poly_;
    }

private:
    Field(int m, gf_elem poly);
    int m_;
    gf_elem poly_;
    std::uint64_t q_;
    std::vector<gf_elem> exp_;
    std::vector<std::int32_t> log_;
};

/// GF(4) helpers on Field::get(2) codes: 0, 1, w = 2, w^2 = 3.
inline constexpr gf_elem gf4_omega = 2;
inline constexpr gf_elem gf4_omega2 = 3;

/// Tr : GF(4) -> GF(2), a + a^2.
gf_elem trace_gf4(gf_elem a);
/// Elementwise Frobenius conjugate over GF(4): a -> a^2.
gf_elem conj_gf4(gf_elem a);

gf_elem euclidean_inner(const Field& f, std::span<const gf_elem> u,
                        std::span<const gf_elem> v);
gf_elem hermitian_inner(std::span<const gf_elem> u, std::span<const gf_elem> v);
gf_elem trace_hermitian_inner(std::span<const gf_elem> u,
                              std::span<const gf_elem> v);

/// Coordinate maps between GF(q^rho) and GF(q)^rho for q = 2 or 4, with
/// respect to the basis {1, alpha, ..., alpha^(rho-1)} of the extension
/// (alpha = primitive element of ext). For q = 4 the base field GF(4) embeds
/// into ext as {0, 1, g, g^2} with g = alpha^((Q-1)/3).
class SubfieldMap {
public:
    SubfieldMap(const Field& ext, const Field& base);

    const Field& ext() const noexcept { return *ext_; }
    const Field& base() const noexcept { return *base_; }
    int rho() const noexcept { return rho_; }

    /// Image of a base-field element inside the extension field.
    gf_elem embed(gf_elem a) const;

    /// psi(beta): column of rho base-field coordinates, a0 first.
    std::vector<gf_elem> psi(gf_elem beta) const;
    /// psi^{-1} of a rho-long base-field column.
    gf_elem psi_inv(std::span<const gf_elem> coords) const;

private:
    const Field* ext_;
    const Field* base_;
    int rho_;
    gf_elem gamma_;  // embed(omega) for q = 4, unused for q = 2
    // Binary change-of-basis between ext's native bit coordinates and the
    // (base, alpha-power) coordinates, row-major m x m over GF(2).
    std::vector<std::uint32_t> fwd_;  // native bits -> stacked base coords
    int mext_;
};

/// Polynomial over a Field, coefficients low degree first, no trailing zeros.
struct Poly {
    const Field* field = &Field::get(1);
    std::vector<gf_elem> c;

    Poly() = default;
    Poly(const Field& f, std::vector<gf_elem> coeffs);
    /// Binary polynomial from a coefficient bitmask (bit i = coeff of x^i).
    static Poly from_bits(std::uint64_t bits);
    std::uint64_t to_bits() const;  // GF(2) only

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    gf_elem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }
    gf_elem eval(gf_elem x) const;

    bool operator==(const Poly& o) const { return c == o.c && *field == *o.field; }
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
/// x^e mod f by square-and-multiply.
Poly poly_powmod_x(std::uint64_t e, const Poly& f);

/// f_r(x) = x^deg(f) f(1/x).
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);
/// Rabin's test; works over any coefficient field in this library's range.
bool is_irreducible(const Poly& f);
/// Smallest rho with f | x^rho - 1; requires f(0) != 0.
std::uint64_t period(const Poly& f);

/// Moebius function by trial factorization.
int moebius(std::uint64_t n);

/// Number of self-reciprocal irreducible binary polynomials of even degree w.
std::uint64_t self_reciprocal_irreducible_count(int w);
/// All of them, ordered by coefficient bitmask.
std::vector<Poly> enumerate_self_reciprocal_irreducible(int w);

}  // namespace qtpc
