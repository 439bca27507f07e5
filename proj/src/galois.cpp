#include "qtpc/galois.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace qtpc {

namespace {

int bit_length(std::uint64_t x) {
    int n = 0;
    while (x) { ++n; x >>= 1; }
    return n;
}

// Carry-less multiply then reduce modulo poly (degree m).
gf_elem clmul_reduce(gf_elem a, gf_elem b, gf_elem poly, int m) {
    std::uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = bit_length(acc) - 1; d >= m; d = bit_length(acc) - 1)
        acc ^= static_cast<std::uint64_t>(poly) << (d - m);
    return static_cast<gf_elem>(acc);
}

bool poly_bits_irreducible(std::uint64_t f);

// Multiplicative order of x modulo f; -1 sentinel never returned (throws).
std::uint64_t order_of_x(std::uint64_t f) {
    int m = bit_length(f) - 1;
    std::uint64_t cur = 2 & ((1ull << m) - 1);
    if (m == 1) cur = f == 3 ? 1 : 0;  // x mod (x+1) = 1
    if (cur == 1) return 1;
    std::uint64_t e = 1;
    while (cur != 1) {
        cur <<= 1;
        if (bit_length(cur) - 1 >= m) cur ^= f << (bit_length(cur) - 1 - m);
        ++e;
        if (e > (1ull << m)) throw std::logic_error("order_of_x: no order");
    }
    return e;
}

bool is_primitive_poly(std::uint64_t f) {
    int m = bit_length(f) - 1;
    if (!(f & 1)) return false;
    if (!poly_bits_irreducible(f)) return false;
    return order_of_x(f) == (1ull << m) - 1;
}

std::uint64_t smallest_primitive_poly(int m) {
    if (m == 1) return 0b11;  // x + 1
    for (std::uint64_t f = 1ull << m; f < (2ull << m); ++f)
        if (is_primitive_poly(f)) return f;
    throw std::logic_error("no primitive polynomial found");
}

// --- bit-packed GF(2)[x] helpers for the irreducibility test -------------

std::uint64_t pb_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    int m = bit_length(f) - 1;
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (bit_length(a) - 1 >= m) a ^= f << (bit_length(a) - 1 - m);
        while (bit_length(acc) - 1 >= m) acc ^= f << (bit_length(acc) - 1 - m);
    }
    return acc;
}

std::uint64_t pb_powmod_x(std::uint64_t e, std::uint64_t f) {
    int m = bit_length(f) - 1;
    if (m <= 0) throw std::invalid_argument("constant modulus");
    std::uint64_t result = 1, base = 2;
    if (bit_length(base) - 1 >= m) base ^= f;
    while (e) {
        if (e & 1) result = pb_mulmod(result, base, f);
        base = pb_mulmod(base, base, f);
        e >>= 1;
    }
    return result;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t pb_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        while (a && bit_length(a) >= bit_length(b))
            a ^= b << (bit_length(a) - bit_length(b));
        std::swap(a, b);
    }
    return a;
}

bool poly_bits_irreducible(std::uint64_t f) {
    int m = bit_length(f) - 1;
    if (m <= 0) return false;
    if (m == 1) return true;
    std::uint64_t x1 = pb_powmod_x(1, f);
    if (pb_powmod_x(1ull << m, f) != x1) return false;
    for (int p : prime_divisors(m))
        if (pb_gcd(pb_powmod_x(1ull << (m / p), f) ^ x1, f) != 1) return false;
    return true;
}

}  // namespace

// --------------------------------------------------------------------------
// Field
// --------------------------------------------------------------------------

Field::Field(int m, gf_elem poly) : m_(m), poly_(poly), q_(1ull << m) {
    if (m < 1 || m > kMaxDegree)
        throw std::invalid_argument("Field: extension degree out of range");
    if (bit_length(poly) - 1 != m)
        throw std::invalid_argument("Field: primitive_poly degree != m");
    if (m > 1 && !is_primitive_poly(poly))
        throw std::invalid_argument("Field: polynomial is not primitive");
    if (m <= kTableMaxDegree) {
        exp_.assign(q_ - 1, 1);
        log_.assign(q_, -1);
        gf_elem cur = 1;
        log_[1] = 0;
        for (std::uint64_t i = 1; i < q_ - 1; ++i) {
            cur <<= 1;
            if (cur >> m) cur ^= poly;
            exp_[i] = cur;
            log_[cur] = static_cast<std::int32_t>(i);
        }
    }
}

const Field& Field::get(int m) {
    return get(m, static_cast<gf_elem>(smallest_primitive_poly(m)));
}

const Field& Field::get(int m, gf_elem primitive_poly) {
    static std::mutex mu;
    static std::map<std::pair<int, gf_elem>, std::unique_ptr<Field>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(m, primitive_poly);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(m, primitive_poly)))
                 .first;
    return *it->second;
}

gf_elem Field::mul(gf_elem a, gf_elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    return clmul_reduce(a, b, poly_, m_);
}

gf_elem Field::inv(gf_elem a) const {
    if (a == 0) throw std::domain_error("Field::inv of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

gf_elem Field::pow(gf_elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty())
        return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1)];
    gf_elem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

gf_elem Field::alpha(std::uint64_t i) const {
    if (m_ == 1) return 1;
    if (!exp_.empty()) return exp_[i % (q_ - 1)];
    return pow(2, i % (q_ - 1));
}

std::uint64_t Field::log(gf_elem a) const {
    if (a == 0) throw std::domain_error("Field::log of zero");
    if (exp_.empty()) {
        // no tables: walk powers (only hit for m > kTableMaxDegree)
        gf_elem cur = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            if (cur == a) return i;
            cur = mul(cur, 2);
        }
        throw std::logic_error("Field::log: element not found");
    }
    return static_cast<std::uint64_t>(log_[a]);
}

// --------------------------------------------------------------------------
// GF(4) helpers and inner products
// --------------------------------------------------------------------------

gf_elem trace_gf4(gf_elem a) {
    const Field& f4 = Field::get(2);
    return f4.mul(a, a) ^ a;
}

gf_elem conj_gf4(gf_elem a) { return Field::get(2).mul(a, a); }

gf_elem euclidean_inner(const Field& f, std::span<const gf_elem> u,
                        std::span<const gf_elem> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("inner product: length mismatch");
    gf_elem acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc ^= f.mul(u[i], v[i]);
    return acc;
}

gf_elem hermitian_inner(std::span<const gf_elem> u, std::span<const gf_elem> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("inner product: length mismatch");
    const Field& f4 = Field::get(2);
    gf_elem acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc ^= f4.mul(u[i], f4.mul(v[i], v[i]));
    return acc;
}

gf_elem trace_hermitian_inner(std::span<const gf_elem> u,
                              std::span<const gf_elem> v) {
    return trace_gf4(hermitian_inner(u, v));
}

// --------------------------------------------------------------------------
// SubfieldMap
// --------------------------------------------------------------------------

namespace {

// Invert a small dense binary matrix given as row bitmasks.
std::vector<std::uint32_t> invert_gf2(std::vector<std::uint32_t> a, int n) {
    std::vector<std::uint32_t> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = 1u << i;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r] >> c & 1) { piv = r; break; }
        if (piv < 0) throw std::logic_error("invert_gf2: singular");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        for (int r = 0; r < n; ++r)
            if (r != c && (a[r] >> c & 1)) { a[r] ^= a[c]; inv[r] ^= inv[c]; }
    }
    return inv;
}

}  // namespace

SubfieldMap::SubfieldMap(const Field& ext, const Field& base)
    : ext_(&ext), base_(&base) {
    int mb = base.m(), me = ext.m();
    if (mb != 1 && mb != 2)
        throw std::invalid_argument("SubfieldMap: base field must be GF(2) or GF(4)");
    if (me % mb != 0 || me == 0)
        throw std::invalid_argument("SubfieldMap: base does not divide ext");
    rho_ = me / mb;
    mext_ = me;
    gamma_ = 0;
    if (mb == 2) {
        if (me == mb) {
            gamma_ = gf4_omega;  // ext == GF(4) itself
        } else {
            gamma_ = ext.alpha((ext.q() - 1) / 3);
        }
    }
    // Columns of the basis matrix: embed(base basis elt) * alpha^i, native bits.
    std::vector<std::uint32_t> cols;
    for (int i = 0; i < rho_; ++i) {
        gf_elem ai = (me == 1) ? 1 : ext.pow(2, static_cast<std::uint64_t>(i));
        cols.push_back(ai);
        if (mb == 2) cols.push_back(ext.mul(gamma_, ai));
    }
    // fwd_ maps stacked-coordinate vectors to native bits; we store its
    // inverse so psi() is a row product.
    std::vector<std::uint32_t> basis_rows(me, 0);
    for (int r = 0; r < me; ++r)
        for (int c = 0; c < me; ++c)
            if (cols[c] >> r & 1) basis_rows[r] |= 1u << c;
    fwd_ = invert_gf2(std::move(basis_rows), me);
}

gf_elem SubfieldMap::embed(gf_elem a) const {
    if (base_->m() == 1) return a;
    switch (a) {
        case 0: return 0;
        case 1: return 1;
        case gf4_omega: return gamma_;
        default: return ext_->mul(gamma_, gamma_);
    }
}

std::vector<gf_elem> SubfieldMap::psi(gf_elem beta) const {
    // stacked coords = fwd_ * native bits
    std::uint32_t stacked = 0;
    for (int r = 0; r < mext_; ++r) {
#ifdef __GNUC__
        if (__builtin_parity(fwd_[r] & beta)) stacked |= 1u << r;
#else
        std::uint32_t x = fwd_[r] & beta;
        x ^= x >> 16; x ^= x >> 8; x ^= x >> 4; x ^= x >> 2; x ^= x >> 1;
        if (x & 1) stacked |= 1u << r;
#endif
    }
    std::vector<gf_elem> out(rho_);
    int mb = base_->m();
    for (int i = 0; i < rho_; ++i) {
        gf_elem a = 0;
        for (int t = 0; t < mb; ++t)
            if (stacked >> (i * mb + t) & 1) a |= 1u << t;
        out[i] = a;
    }
    return out;
}

gf_elem SubfieldMap::psi_inv(std::span<const gf_elem> coords) const {
    if (static_cast<int>(coords.size()) != rho_)
        throw std::invalid_argument("psi_inv: expected rho coordinates");
    gf_elem acc = 0;
    for (int i = 0; i < rho_; ++i) {
        gf_elem ai = (mext_ == 1) ? 1 : ext_->pow(2, static_cast<std::uint64_t>(i));
        acc ^= ext_->mul(embed(coords[i]), ai);
    }
    return acc;
}

// --------------------------------------------------------------------------
// Poly
// --------------------------------------------------------------------------

namespace {
void trim(std::vector<gf_elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(const Field& f, std::vector<gf_elem> coeffs)
    : field(&f), c(std::move(coeffs)) {
    trim(c);
    for (gf_elem x : c)
        if (!f.is_element(x)) throw std::invalid_argument("Poly: bad coefficient");
}

Poly Poly::from_bits(std::uint64_t bits) {
    std::vector<gf_elem> c;
    for (int i = 0; bits >> i; ++i) c.push_back((bits >> i) & 1);
    return Poly(Field::get(1), std::move(c));
}

std::uint64_t Poly::to_bits() const {
    if (field->m() != 1) throw std::invalid_argument("to_bits: GF(2) only");
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) b |= 1ull << i;
    return b;
}

gf_elem Poly::eval(gf_elem x) const {
    gf_elem acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = field->mul(acc, x) ^ *it;
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<gf_elem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] ^= a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] ^= b.c[i];
    return Poly(*a.field, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(*a.field, {});
    std::vector<gf_elem> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] ^= a.field->mul(a.c[i], b.c[j]);
    return Poly(*a.field, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    const Field& f = *a.field;
    std::vector<gf_elem> rem = a.c;
    int db = b.degree();
    gf_elem lead_inv = f.inv(b.c.back());
    std::vector<gf_elem> quot(
        a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        gf_elem fac = f.mul(rem[d], lead_inv);
        quot[d - db] = fac;
        for (int i = 0; i <= db; ++i) rem[d - db + i] ^= f.mul(fac, b.c[i]);
    }
    trim(rem);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        gf_elem inv = a.field->inv(a.c.back());
        for (auto& x : a.c) x = a.field->mul(x, inv);
    }
    return a;
}

Poly poly_powmod_x(std::uint64_t e, const Poly& f) {
    Poly result(*f.field, {1});
    Poly base = poly_mod(Poly(*f.field, {0, 1}), f);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base), f);
        base = poly_mod(poly_mul(base, base), f);
        e >>= 1;
    }
    return result;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of zero polynomial");
    std::vector<gf_elem> c(f.c.rbegin(), f.c.rend());
    return Poly(*f.field, std::move(c));
}

bool is_self_reciprocal(const Poly& f) { return f == reciprocal(f); }

bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const Field& fld = *f.field;
    std::uint64_t q = fld.q();
    Poly x = poly_mod(Poly(fld, {0, 1}), f);
    auto frob_pow = [&](const Poly& p) {  // p^q mod f
        Poly r(fld, {1});
        Poly base = p;
        std::uint64_t e = q;
        while (e) {
            if (e & 1) r = poly_mod(poly_mul(r, base), f);
            base = poly_mod(poly_mul(base, base), f);
            e >>= 1;
        }
        return r;
    };
    std::vector<Poly> powers;  // powers[i] = x^(q^i) mod f
    powers.push_back(x);
    for (int i = 1; i <= d; ++i) powers.push_back(frob_pow(powers.back()));
    if (!(powers[d] == x)) return false;
    for (int p : prime_divisors(d))
        if (poly_gcd(poly_add(powers[d / p], x), f).degree() != 0) return false;
    return true;
}

std::uint64_t period(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw std::domain_error("period: requires f(0) != 0");
    if (f.degree() == 0) return 1;
    constexpr std::uint64_t kCap = 1ull << 22;
    Poly cur = poly_mod(Poly(*f.field, {0, 1}), f);
    Poly one(*f.field, {1});
    std::uint64_t e = 1;
    while (!(cur == one)) {
        cur = poly_mod(poly_mul(cur, Poly(*f.field, {0, 1})), f);
        ++e;
        if (e > kCap) throw std::domain_error("period: exceeds search cap");
    }
    return e;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius(0)");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t self_reciprocal_irreducible_count(int w) {
    if (w < 2 || w % 2)
        throw std::invalid_argument("self_reciprocal_irreducible_count: w must be even, >= 2");
    int t = w / 2;
    std::int64_t sum = 0;
    for (int d = 1; d <= t; ++d) {
        if (t % d || d % 2 == 0) continue;
        sum += static_cast<std::int64_t>(moebius(d)) * (1ll << (t / d));
    }
    return static_cast<std::uint64_t>(sum / (2 * t));
}

std::vector<Poly> enumerate_self_reciprocal_irreducible(int w) {
    if (w < 2 || w % 2)
        throw std::invalid_argument("enumerate_self_reciprocal_irreducible: w must be even, >= 2");
    int t = w / 2;
    std::vector<Poly> out;
    for (std::uint64_t free = 0; free < (1ull << t); ++free) {
        std::uint64_t bits = 1ull | (1ull << w);
        for (int i = 1; i <= t; ++i)
            if (free >> (i - 1) & 1) bits |= (1ull << i) | (1ull << (w - i));
        Poly f = Poly::from_bits(bits);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace qtpc
