#include "qtpc/codes.hpp"

#include <algorithm>
#include <cmath>

namespace qtpc {

LinearCode LinearCode::from_parity(const GfMatrix& h) {
    // keep the caller's check when it already has full row rank (family
    // constructors rely on their canonical forms); reduce otherwise
    if (h.rows() > 0 && rank(h) == h.rows()) return LinearCode(h);
    GfMatrix reduced = rref(h);
    if (reduced.rows() == 0) reduced = GfMatrix(h.field(), 0, h.cols());
    return LinearCode(std::move(reduced));
}

const GfMatrix& LinearCode::generator() const {
    if (!gen_) gen_ = null_space(h_);
    return *gen_;
}

std::vector<gf_elem> LinearCode::syndrome(std::span<const gf_elem> v) const {
    return matvec(h_, v);
}

bool LinearCode::contains(std::span<const gf_elem> v) const {
    auto s = syndrome(v);
    return std::all_of(s.begin(), s.end(), [](gf_elem x) { return x == 0; });
}

std::vector<gf_elem> LinearCode::encode(std::span<const gf_elem> msg) const {
    if (static_cast<int>(msg.size()) != k())
        throw std::invalid_argument("encode: message length != k");
    const GfMatrix& g = generator();
    std::vector<gf_elem> out(n(), 0);
    for (int i = 0; i < k(); ++i) {
        if (!msg[i]) continue;
        for (int j = 0; j < n(); ++j)
            out[j] ^= field().mul(msg[i], g.at(i, j));
    }
    return out;
}

long double LinearCode::size() const {
    return std::pow(static_cast<long double>(field().q()), k());
}

bool LinearCode::operator==(const LinearCode& o) const {
    // equal row spaces of the parity checks (same code over the same field)
    if (!(field() == o.field()) || n() != o.n() || k() != o.k()) return false;
    for (int r = 0; r < o.h_.rows(); ++r)
        if (!in_row_space(h_, o.h_.row(r))) return false;
    return true;
}

LinearCode dual(const LinearCode& c) {
    // parity check of the dual = generator of c
    return LinearCode::from_parity(c.generator());
}

LinearCode hermitian_dual(const LinearCode& c) {
    if (c.field().m() != 2)
        throw std::invalid_argument("hermitian_dual: GF(4) codes only");
    // v in C^perp_h  iff  conj(v) in C^perp = rowspace(H), i.e. v in rowspace(conj H)
    GfMatrix hc(c.field(), c.h().rows(), c.h().cols());
    for (int i = 0; i < hc.rows(); ++i)
        for (int j = 0; j < hc.cols(); ++j) hc.set(i, j, conj_gf4(c.h().at(i, j)));
    // parity check of that row space = null space basis
    return LinearCode::from_parity(null_space(hc));
}

bool is_dual_containing(const LinearCode& c) {
    return matmul(c.h(), transpose(c.h())).is_zero();
}

bool is_hermitian_dual_containing(const LinearCode& c) {
    if (c.field().m() != 2)
        throw std::invalid_argument("is_hermitian_dual_containing: GF(4) codes only");
    return matmul(c.h(), dagger(c.h())).is_zero();
}

bool is_trace_hermitian_self_orthogonal(const LinearCode& d) {
    if (d.field().m() != 2)
        throw std::invalid_argument("is_trace_hermitian_self_orthogonal: GF(4) only");
    const GfMatrix& g = d.generator();
    // GF(2)-basis of D: rows g_i and omega*g_i
    std::vector<std::vector<gf_elem>> basis;
    for (int i = 0; i < g.rows(); ++i) {
        std::vector<gf_elem> r(g.row(i).begin(), g.row(i).end());
        std::vector<gf_elem> rw(r);
        for (auto& x : rw) x = d.field().mul(gf4_omega, x);
        basis.push_back(std::move(r));
        basis.push_back(std::move(rw));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (trace_hermitian_inner(basis[i], basis[j]) != 0) return false;
    return true;
}

void for_each_codeword(const LinearCode& c, std::uint64_t budget,
                       const std::function<bool(std::span<const gf_elem>)>& fn) {
    const Field& f = c.field();
    int k = c.k();
    long double total = c.size();
    if (total > static_cast<long double>(budget))
        throw std::invalid_argument("for_each_codeword: q^k exceeds budget");
    const GfMatrix& g = c.generator();
    std::uint64_t count = static_cast<std::uint64_t>(total);
    std::vector<gf_elem> msg(k, 0), word(c.n(), 0);
    // base-q counter; word updated by the delta of the bumped symbol only
    for (std::uint64_t idx = 0;; ++idx) {
        if (!fn(word)) return;
        if (idx + 1 >= count) return;
        for (int pos = 0;; ++pos) {
            gf_elem old = msg[pos];
            gf_elem next = (old + 1 == f.q()) ? 0 : old + 1;
            msg[pos] = next;
            gf_elem delta = Field::add(old, next);
            for (int j = 0; j < c.n(); ++j)
                word[j] ^= f.mul(delta, g.at(pos, j));
            if (next != 0) break;
        }
    }
}

int hamming_weight(std::span<const gf_elem> v) {
    int w = 0;
    for (gf_elem x : v) w += (x != 0);
    return w;
}

namespace {

// Any w columns of H linearly dependent? Finds the smallest such w <= cap.
std::optional<int> min_dependent_columns(const GfMatrix& h, int cap) {
    int n = h.cols();
    for (int w = 1; w <= std::min(cap, n); ++w) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            GfMatrix sub(h.field(), h.rows(), w);
            for (int c = 0; c < w; ++c)
                for (int r = 0; r < h.rows(); ++r) sub.set(r, c, h.at(r, idx[c]));
            if (rank(sub) < w) return w;
            int pos = w - 1;
            while (pos >= 0 && idx[pos] == n - w + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

Distance min_distance(const LinearCode& c, const DistanceBudget& budget) {
    if (c.k() == 0) return {c.n() + 1, true};  // zero code: no nonzero word
    if (c.k() == c.n()) return {1, true};
    long double total = c.size();
    if (total <= static_cast<long double>(budget.max_enumeration)) {
        int best = c.n() + 1;
        for_each_codeword(c, budget.max_enumeration,
                          [&](std::span<const gf_elem> w) {
                              int wt = hamming_weight(w);
                              if (wt && wt < best) best = wt;
                              return true;
                          });
        return {best, true};
    }
    auto dep = min_dependent_columns(c.h(), budget.max_column_weight);
    if (dep) return {*dep, true};
    return {budget.max_column_weight + 1, false};
}

std::optional<int> min_weight_difference(const LinearCode& c, const LinearCode& d,
                                         std::uint64_t budget) {
    if (!(c.field() == d.field()) || c.n() != d.n())
        throw std::invalid_argument("min_weight_difference: incompatible codes");
    // D subseteq C: every generator row of D must satisfy C's checks
    const GfMatrix& gd = d.generator();
    for (int r = 0; r < gd.rows(); ++r)
        if (!c.contains(gd.row(r)))
            throw std::invalid_argument("min_weight_difference: D is not a subcode of C");
    std::optional<int> best;
    for_each_codeword(c, budget, [&](std::span<const gf_elem> w) {
        if (d.contains(w)) return true;
        int wt = hamming_weight(w);
        if (!best || wt < *best) best = wt;
        return true;
    });
    return best;
}

}  // namespace qtpc
