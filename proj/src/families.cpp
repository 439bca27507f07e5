#include "qtpc/families.hpp"

#include <algorithm>
#include <numeric>

namespace qtpc {

namespace {

// Banded canonical parity check from the generator: rows are shifts of the
// reversed check polynomial h = (x^n - 1)/g.
GfMatrix cyclic_parity_from_generator(const Poly& g, int n) {
    const Field& f2 = Field::get(1);
    Poly xn1(f2, [&] {
        std::vector<gf_elem> c(n + 1, 0);
        c[0] = 1;
        c[n] = 1;
        return c;
    }());
    auto [h, rem] = poly_divmod(xn1, g);
    if (!rem.is_zero())
        throw std::invalid_argument("generator does not divide x^n - 1");
    int k = h.degree();
    int rho = n - k;
    GfMatrix H(f2, rho, n);
    for (int i = 0; i < rho; ++i)
        for (int t = 0; t <= k; ++t) H.set(i, i + t, h.coeff(k - t));
    return H;
}

// Smallest m with n | 2^m - 1 (multiplicative order of 2 mod n).
int splitting_degree(int n) {
    if (n % 2 == 0) throw std::invalid_argument("even length cyclic code");
    std::uint64_t pow2 = 1;
    for (int m = 1; m <= Field::kMaxDegree; ++m) {
        pow2 = (pow2 * 2) % n;
        if (pow2 == 1) return m;
    }
    throw std::invalid_argument("cyclic length needs a splitting field beyond 2^24");
}

std::vector<int> roots_of(const Poly& g, int n) {
    int m = splitting_degree(n);
    const Field& f = Field::get(m);
    gf_elem beta = f.alpha((f.q() - 1) / static_cast<std::uint64_t>(n));
    // evaluate g (binary coefficients) at beta^i
    std::vector<int> z;
    for (int i = 0; i < n; ++i) {
        gf_elem x = f.pow(beta, static_cast<std::uint64_t>(i));
        gf_elem acc = 0;
        for (int d = g.degree(); d >= 0; --d) {
            acc = f.mul(acc, x);
            if (g.coeff(d)) acc ^= 1;
        }
        if (acc == 0) z.push_back(i);
    }
    return z;
}

CyclicCode make_cyclic(Poly g, int n) {
    CyclicCode c{LinearCode::from_parity(cyclic_parity_from_generator(g, n)),
                 std::move(g),
                 {},
                 n};
    c.defining_set = roots_of(c.g, n);
    return c;
}

GfMatrix grs_parity(const GrsInfo& grs) {
    const Field& f = *grs.field;
    int n = static_cast<int>(grs.points.size()) + (grs.inf_col ? 1 : 0);
    GfMatrix h(f, grs.rho, n);
    for (std::size_t j = 0; j < grs.points.size(); ++j)
        for (int i = 0; i < grs.rho; ++i)
            h.set(i, static_cast<int>(j),
                  f.mul(grs.mults[j], f.pow(grs.points[j], static_cast<std::uint64_t>(i))));
    if (grs.inf_col) h.set(grs.rho - 1, n - 1, 1);
    return h;
}

}  // namespace

LinearCode repetition(int n) {
    if (n < 2) throw std::invalid_argument("repetition: n >= 2 required");
    const Field& f2 = Field::get(1);
    GfMatrix h(f2, n - 1, n);
    for (int i = 0; i < n - 1; ++i) {
        h.set(i, i, 1);
        h.set(i, i + 1, 1);
    }
    LinearCode c = LinearCode::from_parity(h);
    c.set_distance({n, true});
    return c;
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, int q) {
    if (n <= 0 || std::gcd(n, q) != 1)
        throw std::invalid_argument("cyclotomic_cosets: need gcd(n, q) = 1");
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
        if (seen[b]) continue;
        std::vector<int> orbit;
        long long x = b;
        while (!seen[x]) {
            seen[x] = true;
            orbit.push_back(static_cast<int>(x));
            x = (x * q) % n;
        }
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

std::vector<int> coset_closure(int n, int q, int lo, int hi) {
    std::vector<bool> in(n, false);
    for (int b = lo; b <= hi; ++b) {
        long long x = ((b % n) + n) % n;
        while (!in[x]) {
            in[x] = true;
            x = (x * q) % n;
        }
    }
    std::vector<int> z;
    for (int i = 0; i < n; ++i)
        if (in[i]) z.push_back(i);
    return z;
}

CyclicCode cyclic_from_defining_set(int n, const std::vector<int>& z) {
    std::vector<bool> in(n, false);
    for (int i : z) {
        if (i < 0 || i >= n) throw std::invalid_argument("defining set out of range");
        in[i] = true;
    }
    for (int i : z)
        if (!in[(2ll * i) % n])
            throw std::invalid_argument("defining set not closed under multiplication by 2");
    int m = splitting_degree(n);
    const Field& f = Field::get(m);
    gf_elem beta = f.alpha((f.q() - 1) / static_cast<std::uint64_t>(n));
    // g = prod over z of (x - beta^i); coefficients must land in GF(2)
    std::vector<gf_elem> g = {1};
    for (int i : z) {
        gf_elem root = f.pow(beta, static_cast<std::uint64_t>(i));
        std::vector<gf_elem> next(g.size() + 1, 0);
        for (std::size_t t = 0; t < g.size(); ++t) {
            next[t + 1] ^= g[t];
            next[t] ^= f.mul(g[t], root);
        }
        g = std::move(next);
    }
    std::vector<gf_elem> gbits(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (g[t] > 1) throw std::logic_error("generator not binary (set not 2-closed?)");
        gbits[t] = g[t];
    }
    return make_cyclic(Poly(Field::get(1), std::move(gbits)), n);
}

CyclicCode bch(int m, int b, int delta) {
    if (m < 2 || delta < 2) throw std::invalid_argument("bch: need m >= 2, delta >= 2");
    int n = (1 << m) - 1;
    return cyclic_from_defining_set(n, coset_closure(n, 2, b, b + delta - 2));
}

BchContainment bch_dual_containing_check(const CyclicCode& c, int m, int delta) {
    BchContainment out;
    out.predicted = delta <= (1 << ((m + 1) / 2)) - 1;
    out.verified = is_dual_containing(c.code);
    return out;
}

RsCode reed_solomon(const Field& f, int n, int k) {
    std::uint64_t q = f.q();
    if (n < 1 || static_cast<std::uint64_t>(n) > q + 1)
        throw std::invalid_argument("reed_solomon: need 1 <= n <= q + 1");
    if (k < 1 || k > n) throw std::invalid_argument("reed_solomon: need 1 <= k <= n");
    GrsInfo grs;
    grs.field = &f;
    grs.rho = n - k;
    if (static_cast<std::uint64_t>(n) <= q - 1) {
        // narrow-sense: H_ij = alpha^(ij) = x_j * x_j^i with x_j = alpha^j
        for (int j = 1; j <= n; ++j) {
            gf_elem x = f.alpha(static_cast<std::uint64_t>(j));
            grs.points.push_back(x);
            grs.mults.push_back(x);
        }
    } else {
        // evaluation at alpha^1..alpha^(q-1), 0, and optionally infinity
        for (std::uint64_t j = 1; j <= q - 1; ++j) {
            grs.points.push_back(f.alpha(j));
            grs.mults.push_back(1);
        }
        grs.points.push_back(0);
        grs.mults.push_back(1);
        grs.inf_col = static_cast<std::uint64_t>(n) == q + 1;
    }
    RsCode rs{LinearCode::from_parity(grs_parity(grs)), std::move(grs)};
    if (rs.code.k() != k) throw std::logic_error("reed_solomon: rank defect");
    rs.code.set_distance({n - k + 1, true});
    return rs;
}

RsCode mds_dual_containing(const Field& f, int n, int d) {
    std::uint64_t q = f.q();
    if (n < 2 || static_cast<std::uint64_t>(n) > q)
        throw std::invalid_argument("mds_dual_containing: need 2 <= n <= q");
    if (d < 1 || d > n / 2 + 1)
        throw HypothesisError(
            "mds_dual_containing: requires d <= floor(n/2) + 1 (dual-containing MDS bound)");
    GrsInfo grs;
    grs.field = &f;
    grs.rho = d - 1;
    for (int j = 1; j <= n; ++j)
        grs.points.push_back(static_cast<std::uint64_t>(j) == q ? 0
                                                                : f.alpha(static_cast<std::uint64_t>(j)));
    // v_j = sqrt(w_j) with Lagrange weights w_j = 1 / prod_{i != j} (x_j - x_i)
    for (int j = 0; j < n; ++j) {
        gf_elem prod = 1;
        for (int i = 0; i < n; ++i)
            if (i != j) prod = f.mul(prod, Field::add(grs.points[j], grs.points[i]));
        grs.mults.push_back(f.sqrt(f.inv(prod)));
    }
    RsCode rs{LinearCode::from_parity(grs_parity(grs)), std::move(grs)};
    if (rs.code.k() != n - d + 1) throw std::logic_error("mds_dual_containing: rank defect");
    if (!is_dual_containing(rs.code))
        throw std::logic_error("mds_dual_containing: H H^T != 0");
    rs.code.set_distance({d, true});
    return rs;
}

bool is_reversible(const CyclicCode& c) {
    bool by_poly = is_self_reciprocal(c.g);
    bool by_set = true;
    std::vector<bool> in(c.n, false);
    for (int i : c.defining_set) in[i] = true;
    for (int i : c.defining_set)
        if (!in[(c.n - i) % c.n]) { by_set = false; break; }
    if (by_poly != by_set)
        throw std::logic_error("is_reversible: g = g_r and Z = -Z disagree");
    return by_poly;
}

FireCode fire_code(const Poly& b_poly, int l) {
    if (b_poly.field->m() != 1)
        throw std::invalid_argument("fire_code: b_poly must be binary");
    if (!is_irreducible(b_poly))
        throw std::invalid_argument("fire_code: b_poly is not irreducible");
    int w = b_poly.degree();
    if (l < 1 || l > w)
        throw std::invalid_argument("fire_code: requires 1 <= l <= deg b");
    std::uint64_t rho_p = period(b_poly);
    std::uint64_t burst_len = 2ull * l - 1;
    if (burst_len % rho_p == 0)
        throw std::invalid_argument("fire_code: 2l-1 must not be divisible by the period of b");
    std::uint64_t n = std::lcm(burst_len, rho_p);
    // g = (x^(2l-1) + 1) b(x)
    std::vector<gf_elem> xf(burst_len + 1, 0);
    xf[0] = 1;
    xf[burst_len] = 1;
    Poly g = poly_mul(Poly(Field::get(1), std::move(xf)), b_poly);
    FireCode fc{make_cyclic(std::move(g), static_cast<int>(n)),
                FireSpec{b_poly, l, rho_p, static_cast<int>(n)}};
    return fc;
}

LinearCode subfield_subcode(const LinearCode& c, const SubfieldMap& map) {
    return LinearCode::from_parity(psi_matrix(c.h(), map));
}

}  // namespace qtpc
