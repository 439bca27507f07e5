#include "qtpc/decoder.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace qtpc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Non-identity Pauli values as (a|b) pairs, in a fixed order.
constexpr std::pair<gf_elem, gf_elem> kPaulis[3] = {{1, 0}, {1, 1}, {0, 1}};

std::vector<std::vector<std::pair<gf_elem, gf_elem>>> burst_value_lists(
    int len, BurstAlphabet alphabet) {
    std::vector<std::vector<std::pair<gf_elem, gf_elem>>> out;
    if (alphabet == BurstAlphabet::binary) {
        // endpoints 1, interior free over GF(2)
        int interior = std::max(0, len - 2);
        for (std::uint64_t mask = 0; mask < (1ull << interior); ++mask) {
            std::vector<std::pair<gf_elem, gf_elem>> v(len, {1, 0});
            for (int i = 0; i < interior; ++i)
                if (!(mask >> i & 1)) v[i + 1] = {0, 0};
            out.push_back(std::move(v));
        }
        return out;
    }
    // pauli: endpoints in {X,Y,Z}, interior in {I,X,Y,Z}
    int interior = std::max(0, len - 2);
    std::uint64_t icount = 1;
    for (int i = 0; i < interior; ++i) icount *= 4;
    int endpoints = len == 1 ? 1 : 2;
    std::uint64_t ecount = endpoints == 1 ? 3 : 9;
    for (std::uint64_t e = 0; e < ecount; ++e)
        for (std::uint64_t m = 0; m < icount; ++m) {
            std::vector<std::pair<gf_elem, gf_elem>> v(len);
            v[0] = kPaulis[e % 3];
            if (len > 1) v[len - 1] = kPaulis[(e / 3) % 3];
            std::uint64_t mm = m;
            for (int i = 0; i < interior; ++i) {
                int sym = static_cast<int>(mm % 4);
                mm /= 4;
                v[i + 1] = sym == 0 ? std::pair<gf_elem, gf_elem>{0, 0}
                                    : kPaulis[sym - 1];
            }
            out.push_back(std::move(v));
        }
    return out;
}

std::uint64_t per_subblock_burst_count(int n1, int l, BurstAlphabet alphabet) {
    std::uint64_t total = 0;
    for (int len = 1; len <= std::min(l, n1); ++len) {
        std::uint64_t positions = static_cast<std::uint64_t>(n1 - len + 1);
        std::uint64_t vals;
        if (alphabet == BurstAlphabet::binary) {
            vals = len >= 2 ? (1ull << (len - 2)) : 1;
        } else {
            vals = len == 1 ? 3 : 9;
            for (int i = 0; i < len - 2; ++i) vals *= 4;
        }
        total += positions * vals;
    }
    return total;
}

}  // namespace

PauliErrorVector BurstPattern::to_pauli(int n1, int n2) const {
    PauliErrorVector e;
    e.a.assign(static_cast<std::size_t>(n1) * n2, 0);
    e.b.assign(static_cast<std::size_t>(n1) * n2, 0);
    for (const auto& burst : bursts) {
        if (burst.subblock < 0 || burst.subblock >= n2)
            throw std::invalid_argument("burst subblock out of range");
        for (std::size_t i = 0; i < burst.values.size(); ++i) {
            std::size_t pos = static_cast<std::size_t>(burst.subblock) * n1 +
                              burst.offset + i;
            e.a[pos] = burst.values[i].first;
            e.b[pos] = burst.values[i].second;
        }
    }
    return e;
}

std::vector<BurstPattern> enumerate_burst_patterns(int n1, int n2, int t, int l,
                                                   BurstAlphabet alphabet) {
    if (t < 0 || t > n2 || l < 1 || l > n1)
        throw std::invalid_argument("enumerate_burst_patterns: infeasible (t, l)");
    // per-subblock burst list
    std::vector<BurstPattern::Burst> menu;
    for (int len = 1; len <= l; ++len)
        for (int off = 0; off + len <= n1; ++off)
            for (auto& vals : burst_value_lists(len, alphabet))
                menu.push_back({0, off, vals});
    std::vector<BurstPattern> out;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    // choose t distinct subblocks, then a burst per chosen subblock
    std::vector<int> subs(t);
    for (int i = 0; i < t; ++i) subs[i] = i;
    for (;;) {
        std::vector<std::size_t> pick(t, 0);
        for (;;) {
            BurstPattern p;
            for (int i = 0; i < t; ++i) {
                auto b = menu[pick[i]];
                b.subblock = subs[i];
                p.bursts.push_back(std::move(b));
            }
            out.push_back(std::move(p));
            int pos = t - 1;
            while (pos >= 0 && pick[pos] + 1 == menu.size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
        int pos = t - 1;
        while (pos >= 0 && subs[pos] == n2 - t + pos) --pos;
        if (pos < 0) break;
        ++subs[pos];
        for (int i = pos + 1; i < t; ++i) subs[i] = subs[i - 1] + 1;
    }
    return out;
}

std::uint64_t count_burst_patterns(int n1, int n2, int t, int l,
                                   BurstAlphabet alphabet) {
    if (t < 0 || t > n2 || l < 1 || l > n1)
        throw std::invalid_argument("count_burst_patterns: infeasible (t, l)");
    if (t == 0) return 1;
    std::uint64_t choose = 1;
    for (int i = 0; i < t; ++i) choose = choose * (n2 - i) / (i + 1);
    std::uint64_t per = per_subblock_burst_count(n1, l, alphabet);
    std::uint64_t total = choose;
    for (int i = 0; i < t; ++i) total *= per;
    return total;
}

BurstPattern sample_burst_pattern(std::uint64_t seed, std::uint64_t index, int n1,
                                  int n2, int t, int l, BurstAlphabet alphabet) {
    if (t < 0 || t > n2 || l < 1 || l > n1)
        throw std::invalid_argument("sample_burst_pattern: infeasible (t, l)");
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    // t distinct subblocks
    std::vector<int> subs(n2);
    for (int i = 0; i < n2; ++i) subs[i] = i;
    for (int i = 0; i < t; ++i) {
        std::uniform_int_distribution<int> d(i, n2 - 1);
        std::swap(subs[i], subs[d(rng)]);
    }
    std::sort(subs.begin(), subs.begin() + t);
    BurstPattern p;
    for (int i = 0; i < t; ++i) {
        std::uniform_int_distribution<int> dlen(1, l);
        int len = dlen(rng);
        std::uniform_int_distribution<int> doff(0, n1 - len);
        int off = doff(rng);
        std::vector<std::pair<gf_elem, gf_elem>> vals(len);
        auto nonzero = [&]() -> std::pair<gf_elem, gf_elem> {
            if (alphabet == BurstAlphabet::binary) return {1, 0};
            std::uniform_int_distribution<int> d3(0, 2);
            return kPaulis[d3(rng)];
        };
        auto any = [&]() -> std::pair<gf_elem, gf_elem> {
            if (alphabet == BurstAlphabet::binary) {
                std::uniform_int_distribution<int> d2(0, 1);
                return {static_cast<gf_elem>(d2(rng)), 0};
            }
            std::uniform_int_distribution<int> d4(0, 3);
            int s = d4(rng);
            return s == 0 ? std::pair<gf_elem, gf_elem>{0, 0} : kPaulis[s - 1];
        };
        vals[0] = nonzero();
        if (len > 1) vals[len - 1] = nonzero();
        for (int j = 1; j + 1 < len; ++j) vals[j] = any();
        p.bursts.push_back({subs[i], off, std::move(vals)});
    }
    return p;
}

// ---------------------------------------------------------------------------
// GRS decoder
// ---------------------------------------------------------------------------

GrsDecoder::GrsDecoder(GrsInfo grs) : grs_(std::move(grs)) {
    if (!grs_.field) throw std::invalid_argument("GrsDecoder: missing field");
    if (grs_.inf_col)
        throw std::invalid_argument(
            "GrsDecoder: infinity-extended codes are not decodable here");
    for (gf_elem x : grs_.points)
        if (x == 0) has_zero_point_ = true;
    for (gf_elem v : grs_.mults)
        if (v == 0) throw std::invalid_argument("GrsDecoder: zero column multiplier");
}

std::vector<gf_elem> GrsDecoder::syndrome_of(std::span<const gf_elem> error) const {
    const Field& f = *grs_.field;
    if (error.size() != grs_.points.size())
        throw std::invalid_argument("syndrome_of: length mismatch");
    std::vector<gf_elem> s(grs_.rho, 0);
    for (std::size_t j = 0; j < error.size(); ++j) {
        if (!error[j]) continue;
        gf_elem ve = f.mul(grs_.mults[j], error[j]);
        gf_elem xp = 1;
        for (int i = 0; i < grs_.rho; ++i) {
            s[i] ^= f.mul(ve, xp);
            xp = f.mul(xp, grs_.points[j]);
        }
    }
    return s;
}

bool GrsDecoder::verify(std::span<const gf_elem> syndrome,
                        std::span<const gf_elem> error) const {
    auto s = syndrome_of(error);
    return std::equal(s.begin(), s.end(), syndrome.begin(), syndrome.end());
}

GrsDecoder::Result GrsDecoder::decode_key_equation(
    std::span<const gf_elem> syndrome, int radius) const {
    const Field& f = *grs_.field;
    int rho = grs_.rho;
    if (static_cast<int>(syndrome.size()) != rho)
        throw std::invalid_argument("decode: syndrome length != rho");
    if (has_zero_point_ || radius > rho / 2)
        throw std::invalid_argument("decode_key_equation: out of its domain");
    Result res;
    if (std::all_of(syndrome.begin(), syndrome.end(),
                    [](gf_elem x) { return x == 0; })) {
        res.outcome = Outcome::ok;
        res.error.assign(grs_.points.size(), 0);
        return res;
    }
    // extended Euclid on (z^rho, S(z)) until deg r < ceil(rho/2)
    Poly r_prev(f, [&] {
        std::vector<gf_elem> c(rho + 1, 0);
        c[rho] = 1;
        return c;
    }());
    Poly r_cur(f, std::vector<gf_elem>(syndrome.begin(), syndrome.end()));
    Poly u_prev(f, {});
    Poly u_cur(f, {1});
    int stop = (rho + 1) / 2;
    while (!r_cur.is_zero() && r_cur.degree() >= stop) {
        auto [q, rem] = poly_divmod(r_prev, r_cur);
        Poly u_next = poly_add(u_prev, poly_mul(q, u_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    const Poly& sigma = u_cur;
    if (sigma.is_zero()) return res;
    int nerr = sigma.degree();
    if (nerr > radius) return res;
    // Chien search over the code's points
    std::vector<int> support;
    for (std::size_t j = 0; j < grs_.points.size(); ++j)
        if (sigma.eval(f.inv(grs_.points[j])) == 0)
            support.push_back(static_cast<int>(j));
    if (static_cast<int>(support.size()) != nerr) return res;
    // magnitudes by solving the first |support| syndrome equations
    int e = nerr;
    GfMatrix a(f, rho, e);
    for (int c = 0; c < e; ++c) {
        gf_elem xp = 1;
        for (int i = 0; i < rho; ++i) {
            a.set(i, c, f.mul(grs_.mults[support[c]], xp));
            xp = f.mul(xp, grs_.points[support[c]]);
        }
    }
    // gaussian solve a * vals = syndrome (consistent overdetermined system)
    std::vector<std::vector<gf_elem>> aug(rho, std::vector<gf_elem>(e + 1));
    for (int i = 0; i < rho; ++i) {
        for (int c = 0; c < e; ++c) aug[i][c] = a.at(i, c);
        aug[i][e] = syndrome[i];
    }
    int rank_pos = 0;
    std::vector<int> piv_cols;
    for (int c = 0; c < e && rank_pos < rho; ++c) {
        int piv = -1;
        for (int r = rank_pos; r < rho; ++r)
            if (aug[r][c]) { piv = r; break; }
        if (piv < 0) return res;
        std::swap(aug[rank_pos], aug[piv]);
        gf_elem inv = f.inv(aug[rank_pos][c]);
        for (auto& x : aug[rank_pos]) x = f.mul(inv, x);
        for (int r = 0; r < rho; ++r) {
            if (r == rank_pos || !aug[r][c]) continue;
            gf_elem fac = aug[r][c];
            for (int t = 0; t <= e; ++t) aug[r][t] ^= f.mul(fac, aug[rank_pos][t]);
        }
        piv_cols.push_back(c);
        ++rank_pos;
    }
    if (static_cast<int>(piv_cols.size()) != e) return res;
    res.error.assign(grs_.points.size(), 0);
    for (int c = 0; c < e; ++c) {
        gf_elem val = aug[c][e];
        if (!val) return res;  // support mismatch
        res.error[support[c]] = val;
    }
    if (!verify(syndrome, res.error)) {
        res.error.clear();
        return res;
    }
    res.outcome = Outcome::ok;
    return res;
}

GrsDecoder::Result GrsDecoder::decode_support_enum(
    std::span<const gf_elem> syndrome, int radius) const {
    const Field& f = *grs_.field;
    int rho = grs_.rho;
    int n = static_cast<int>(grs_.points.size());
    if (static_cast<int>(syndrome.size()) != rho)
        throw std::invalid_argument("decode: syndrome length != rho");
    Result res;
    if (std::all_of(syndrome.begin(), syndrome.end(),
                    [](gf_elem x) { return x == 0; })) {
        res.outcome = Outcome::ok;
        res.error.assign(n, 0);
        return res;
    }
    for (int w = 1; w <= radius; ++w) {
        std::vector<std::vector<gf_elem>> found;
        std::vector<int> idx(w);
        for (int i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            // solve for values on this support; full-weight solutions only
            std::vector<std::vector<gf_elem>> aug(rho, std::vector<gf_elem>(w + 1));
            for (int i = 0; i < rho; ++i) {
                for (int c = 0; c < w; ++c) {
                    gf_elem xp = f.pow(grs_.points[idx[c]], static_cast<std::uint64_t>(i));
                    aug[i][c] = f.mul(grs_.mults[idx[c]], xp);
                }
                aug[i][w] = syndrome[i];
            }
            int rnk = 0;
            std::vector<int> pivs;
            bool consistent = true;
            for (int c = 0; c < w && rnk < rho; ++c) {
                int piv = -1;
                for (int r = rnk; r < rho; ++r)
                    if (aug[r][c]) { piv = r; break; }
                if (piv < 0) continue;
                std::swap(aug[rnk], aug[piv]);
                gf_elem inv = f.inv(aug[rnk][c]);
                for (auto& x : aug[rnk]) x = f.mul(inv, x);
                for (int r = 0; r < rho; ++r) {
                    if (r == rnk || !aug[r][c]) continue;
                    gf_elem fac = aug[r][c];
                    for (int t = 0; t <= w; ++t) aug[r][t] ^= f.mul(fac, aug[rnk][t]);
                }
                pivs.push_back(c);
                ++rnk;
            }
            for (int r = rnk; r < rho; ++r)
                if (aug[r][w]) { consistent = false; break; }
            if (consistent && rnk == w) {
                std::vector<gf_elem> vals(w);
                bool full = true;
                for (int c = 0; c < w; ++c) {
                    vals[c] = aug[c][w];
                    if (!vals[c]) full = false;
                }
                if (full) {
                    std::vector<gf_elem> err(n, 0);
                    for (int c = 0; c < w; ++c) err[idx[c]] = vals[c];
                    found.push_back(std::move(err));
                }
            }
            int pos = w - 1;
            while (pos >= 0 && idx[pos] == n - w + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (found.size() == 1) {
            if (!verify(syndrome, found[0])) return res;
            res.outcome = Outcome::ok;
            res.error = std::move(found[0]);
            return res;
        }
        if (found.size() > 1) {
            res.outcome = Outcome::ambiguous;
            return res;
        }
    }
    return res;
}

GrsDecoder::Result GrsDecoder::decode(std::span<const gf_elem> syndrome,
                                      int radius) const {
    if (radius <= grs_.rho / 2 && !has_zero_point_)
        return decode_key_equation(syndrome, radius);
    return decode_support_enum(syndrome, radius);
}

// ---------------------------------------------------------------------------
// Inner decoders
// ---------------------------------------------------------------------------

namespace {

std::uint64_t pack_syndrome(std::span<const gf_elem> s, int bits_per_elem) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        key |= static_cast<std::uint64_t>(s[i]) << (bits_per_elem * i);
    return key;
}

class TableDecoder final : public InnerDecoder {
public:
    TableDecoder(const GfMatrix& w,
                 const std::vector<std::vector<gf_elem>>& patterns)
        : w_(w), bits_(w.field().m()) {
        for (const auto& e : patterns) {
            auto key = pack_syndrome(matvec(w_, e), bits_);
            auto [it, inserted] = table_.emplace(key, e);
            if (!inserted && it->second != e)
                throw std::logic_error(
                    "syndrome table: correctable class has colliding syndromes");
        }
    }
    std::optional<std::vector<gf_elem>> decode(
        std::span<const gf_elem> syndrome) const override {
        auto it = table_.find(pack_syndrome(syndrome, bits_));
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

private:
    GfMatrix w_;
    int bits_;
    std::map<std::uint64_t, std::vector<gf_elem>> table_;
};

std::vector<std::vector<gf_elem>> weight_patterns(int n, int t) {
    std::vector<std::vector<gf_elem>> out;
    out.push_back(std::vector<gf_elem>(n, 0));
    std::vector<int> idx;
    // iterative subsets of each weight
    for (int w = 1; w <= t; ++w) {
        idx.assign(w, 0);
        for (int i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            std::vector<gf_elem> e(n, 0);
            for (int i : idx) e[i] = 1;
            out.push_back(std::move(e));
            int pos = w - 1;
            while (pos >= 0 && idx[pos] == n - w + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

std::vector<std::vector<gf_elem>> burst_patterns_binary(int n, int l) {
    std::vector<std::vector<gf_elem>> out;
    out.push_back(std::vector<gf_elem>(n, 0));
    for (int len = 1; len <= l; ++len)
        for (int off = 0; off + len <= n; ++off) {
            int interior = std::max(0, len - 2);
            for (std::uint64_t mask = 0; mask < (1ull << interior); ++mask) {
                std::vector<gf_elem> e(n, 0);
                e[off] = 1;
                e[off + len - 1] = 1;
                for (int i = 0; i < interior; ++i)
                    if (mask >> i & 1) e[off + 1 + i] = 1;
                out.push_back(std::move(e));
            }
        }
    // duplicate removal (len = 1 overlaps nothing; keep simple and exact)
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class TrappingDecoder final : public InnerDecoder {
public:
    TrappingDecoder(const GfMatrix& w, Poly g, int l)
        : w_(w), g_(std::move(g)), l_(l), n_(w.cols()) {
        // right inverse of W: some e0 with W e0 = s for any s
        const Field& f2 = Field::get(1);
        int rho = w_.rows();
        // solve on the identity: columns of B satisfy W b_i = e_i
        GfMatrix aug(f2, rho, n_ + rho);
        for (int r = 0; r < rho; ++r) {
            for (int c = 0; c < n_; ++c) aug.set(r, c, w_.at(r, c));
            aug.set(r, n_ + r, 1);
        }
        std::vector<int> pivots;
        GfMatrix red = rref(aug, &pivots);
        b_ = GfMatrix(f2, n_, rho);
        for (int r = 0; r < red.rows(); ++r) {
            if (pivots[r] >= n_) throw std::logic_error("trapping: W not full rank");
            for (int c = 0; c < rho; ++c) b_.set(pivots[r], c, red.at(r, n_ + c));
        }
    }

    std::optional<std::vector<gf_elem>> decode(
        std::span<const gf_elem> syndrome) const override {
        const Field& f2 = Field::get(1);
        // polynomial syndrome of any vector with this matrix syndrome
        std::vector<gf_elem> e0 = matvec(b_, syndrome);
        Poly s = poly_mod(Poly(f2, e0), g_);
        if (s.is_zero())
            return std::vector<gf_elem>(static_cast<std::size_t>(n_), 0);
        Poly x(f2, {0, 1});
        Poly shifted = s;
        for (int i = 0; i < n_; ++i) {
            if (i > 0) shifted = poly_mod(poly_mul(shifted, x), g_);
            if (shifted.degree() < l_) {
                // burst b(x) at position (n - i) mod n
                std::vector<gf_elem> err(static_cast<std::size_t>(n_), 0);
                int start = (n_ - i) % n_;
                for (int d = 0; d <= shifted.degree(); ++d)
                    err[(start + d) % n_] = shifted.coeff(d);
                auto check = matvec(w_, err);
                if (std::equal(check.begin(), check.end(), syndrome.begin(),
                               syndrome.end()))
                    return err;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

private:
    GfMatrix w_;
    Poly g_;
    int l_;
    int n_;
    GfMatrix b_;
};

}  // namespace

std::unique_ptr<InnerDecoder> make_table_decoder(const GfMatrix& w, int t) {
    return std::make_unique<TableDecoder>(w, weight_patterns(w.cols(), t));
}

std::unique_ptr<InnerDecoder> make_burst_table_decoder(const GfMatrix& w, int l) {
    return std::make_unique<TableDecoder>(w, burst_patterns_binary(w.cols(), l));
}

std::unique_ptr<InnerDecoder> make_trapping_decoder(const GfMatrix& w, const Poly& g,
                                                    int l) {
    return std::make_unique<TrappingDecoder>(w, g, l);
}

// ---------------------------------------------------------------------------
// TpcDecoder
// ---------------------------------------------------------------------------

TpcDecoder::TpcDecoder(const TensorProductCode& tpc, GrsInfo outer,
                       std::unique_ptr<InnerDecoder> inner)
    : tpc_(&tpc), outer_(std::move(outer)), inner_(std::move(inner)) {
    if (tpc.map().base().m() != 1)
        throw std::invalid_argument("TpcDecoder: binary base field required");
}

DecodeResult TpcDecoder::decode(std::span<const gf_elem> syndrome,
                                int outer_radius) const {
    const TensorProductCode& t = *tpc_;
    int rho1 = t.rho1(), rho2 = t.rho2(), n1 = t.n1(), n2 = t.n2();
    if (static_cast<int>(syndrome.size()) != rho1 * rho2)
        throw std::invalid_argument("decode: syndrome length != rho1*rho2");
    DecodeResult out;
    bool plain = t.variant() == TpcVariant::companion_plain;
    // stage 1: pack chunks into extension symbols and decode with C2
    std::vector<gf_elem> packed(rho2);
    for (int i = 0; i < rho2; ++i) {
        std::vector<gf_elem> chunk(syndrome.begin() + i * rho1,
                                   syndrome.begin() + (i + 1) * rho1);
        if (plain) chunk = matvec(t.twist_inv(), chunk);
        packed[i] = t.map().psi_inv(chunk);
    }
    auto outer_res = outer_.decode(packed, outer_radius);
    if (outer_res.outcome == GrsDecoder::Outcome::ambiguous) {
        out.status = DecodeStatus::outer_ambiguous;
        return out;
    }
    if (outer_res.outcome != GrsDecoder::Outcome::ok) {
        out.status = DecodeStatus::outer_failure;
        return out;
    }
    // stage 2: inner decoding on each flagged subblock
    std::vector<gf_elem> err(static_cast<std::size_t>(n1) * n2, 0);
    for (int j = 0; j < n2; ++j) {
        if (!outer_res.error[j]) continue;
        std::vector<gf_elem> s = t.map().psi(outer_res.error[j]);
        if (plain) s = matvec(t.twist(), s);
        auto sub = inner_->decode(s);
        if (!sub) {
            out.status = DecodeStatus::inner_failure;
            return out;
        }
        for (int p = 0; p < n1; ++p) err[static_cast<std::size_t>(j) * n1 + p] = (*sub)[p];
    }
    // soundness: the estimate must reproduce the input syndrome exactly
    auto re = matvec(t.h_base(), err);
    if (!std::equal(re.begin(), re.end(), syndrome.begin(), syndrome.end())) {
        out.status = DecodeStatus::verify_mismatch;
        return out;
    }
    out.status = DecodeStatus::ok;
    out.error = std::move(err);
    return out;
}

// ---------------------------------------------------------------------------
// QtpcDecoder / capability_report
// ---------------------------------------------------------------------------

namespace {

std::unique_ptr<InnerDecoder> make_inner_for(const TensorProductCode& t,
                                             const std::optional<Poly>& fire_g,
                                             int l_or_t) {
    if (fire_g) return make_trapping_decoder(t.component(), *fire_g, l_or_t);
    return make_table_decoder(t.component(), l_or_t);
}

}  // namespace

bool QtpcDecoder::SpaceChecker::contains(std::span<const gf_elem> v) const {
    std::vector<gf_elem> w(v.begin(), v.end());
    for (int r = 0; r < rref_rows.rows(); ++r) {
        if (!w[pivots[r]]) continue;
        for (int c = 0; c < rref_rows.cols(); ++c)
            w[c] ^= rref_rows.at(r, c);  // binary
    }
    return std::all_of(w.begin(), w.end(), [](gf_elem x) { return x == 0; });
}

QtpcDecoder::QtpcDecoder(const StabilizerCode& q, const GrsInfo& outer,
                         const std::optional<Poly>& fire_g)
    : q_(&q),
      x_dec_(q.tpcs ? q.tpcs->x_side
                    : throw std::invalid_argument(
                          "QtpcDecoder: stabilizer code lacks TPC metadata"),
             outer,
             make_inner_for(q.tpcs->x_side, fire_g,
                            q.burst ? q.burst->l
                                    : (q.tpcs->x_side.c1().distance().value - 1) / 2)),
      z_dec_(q.tpcs->z_side, outer,
             make_inner_for(q.tpcs->z_side, fire_g,
                            q.burst ? q.burst->l
                                    : (q.tpcs->z_side.c1().distance().value - 1) / 2)),
      radius_(q.burst ? q.burst->t : outer.rho / 2) {
    x_space_.rref_rows = rref(q.tpcs->z_side.h_base(), &x_space_.pivots);
    z_space_.rref_rows = rref(q.tpcs->x_side.h_base(), &z_space_.pivots);
}

QeccDecodeResult QtpcDecoder::decode(const PauliErrorVector& e) const {
    QeccDecodeResult res;
    const TensorProductCode& cl = q_->tpcs->x_side;
    const TensorProductCode& c = q_->tpcs->z_side;
    // X and Z sides are decoded independently (CSS split)
    auto syn_a = matvec(cl.h_base(), e.a);
    auto ra = x_dec_.decode(syn_a, radius_);
    res.x_status = ra.status;
    auto syn_b = matvec(c.h_base(), e.b);
    auto rb = z_dec_.decode(syn_b, radius_);
    res.z_status = rb.status;
    if (ra.status != DecodeStatus::ok || rb.status != DecodeStatus::ok) return res;
    // degeneracy-aware equality: residuals must lie in the stabilizer
    std::vector<gf_elem> da(e.a), db(e.b);
    for (std::size_t i = 0; i < da.size(); ++i) {
        da[i] ^= ra.error[i];
        db[i] ^= rb.error[i];
    }
    res.x_logical = !x_space_.contains(da);
    res.z_logical = !z_space_.contains(db);
    res.success = !res.x_logical && !res.z_logical;
    return res;
}

CapabilityReport capability_report(const QtpcDecoder& dec, int n1, int n2, int t,
                                   int l, std::uint64_t trials, std::uint64_t seed,
                                   std::uint64_t exhaustive_budget) {
    CapabilityReport rep;
    rep.seed = seed;
    std::uint64_t total = 0;
    bool fits = true;
    for (int tt = 0; tt <= t && fits; ++tt) {
        total += count_burst_patterns(n1, n2, tt, l, BurstAlphabet::pauli);
        if (total > exhaustive_budget) fits = false;
    }
    auto run_one = [&](const BurstPattern& p) {
        auto e = p.to_pauli(n1, n2);
        auto r = dec.decode(e);
        ++rep.patterns;
        if (r.success) {
            ++rep.successes;
        } else {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = p;
        }
    };
    if (fits) {
        rep.exhaustive = true;
        for (int tt = 0; tt <= t; ++tt)
            for (const auto& p :
                 enumerate_burst_patterns(n1, n2, tt, l, BurstAlphabet::pauli))
                run_one(p);
    } else {
        for (std::uint64_t i = 0; i < trials; ++i)
            run_one(sample_burst_pattern(seed, i, n1, n2, t, l, BurstAlphabet::pauli));
    }
    return rep;
}

}  // namespace qtpc
