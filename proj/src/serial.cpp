#include "qtpc/serial.hpp"

#include <sstream>

namespace qtpc {

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SpecError(std::string("missing or non-integer field: ") + key);
    return j[key].get<int>();
}

const json& require(const json& j, const char* key) {
    if (!j.contains(key)) throw SpecError(std::string("missing field: ") + key);
    return j[key];
}

Poly poly_from_bits_json(const json& j) {
    if (!j.is_array()) throw SpecError("polynomial must be a bit array, low degree first");
    std::vector<gf_elem> c;
    for (const auto& b : j) {
        int v = b.get<int>();
        if (v != 0 && v != 1) throw SpecError("polynomial bits must be 0/1");
        c.push_back(static_cast<gf_elem>(v));
    }
    return Poly(Field::get(1), std::move(c));
}

json poly_to_bits_json(const Poly& p) {
    json a = json::array();
    for (gf_elem c : p.c) a.push_back(c);
    return a;
}

json distance_to_json(const Distance& d) {
    return json{{"value", d.value}, {"exact", d.exact}};
}

const char* purity_name(Purity p) {
    switch (p) {
        case Purity::verified: return "verified";
        case Purity::asserted: return "asserted";
        default: return "unknown";
    }
}

}  // namespace

json field_to_json(const Field& f) {
    json bits = json::array();
    for (int i = 0; i <= f.m(); ++i) bits.push_back(f.primitive_poly() >> i & 1);
    return json{{"m", f.m()}, {"primitive_poly", bits}};
}

const Field& field_from_json(const json& j) {
    int m = require_int(j, "m");
    if (!j.contains("primitive_poly")) return Field::get(m);
    gf_elem poly = 0;
    const auto& bits = j["primitive_poly"];
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i].get<int>()) poly |= 1u << i;
    return Field::get(m, poly);
}

std::vector<std::string> gf2_hex_rows(const GfMatrix& m) {
    if (m.field().m() != 1)
        throw std::invalid_argument("gf2_hex_rows: GF(2) matrices only");
    std::vector<std::string> out;
    for (int r = 0; r < m.rows(); ++r) {
        std::string s;
        for (int c0 = 0; c0 < m.cols(); c0 += 4) {
            int nib = 0;
            for (int t = 0; t < 4 && c0 + t < m.cols(); ++t)
                if (m.at(r, c0 + t)) nib |= 1 << t;
            s.push_back("0123456789abcdef"[nib]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

GfMatrix gf2_from_hex_rows(const std::vector<std::string>& rows, int cols) {
    GfMatrix m(Field::get(1), static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != (cols + 3) / 4)
            throw SpecError("hex row has wrong length");
        for (int c = 0; c < cols; ++c) {
            char h = rows[r][c / 4];
            int nib = h <= '9' ? h - '0' : h - 'a' + 10;
            if (nib >> (c % 4) & 1) m.set(static_cast<int>(r), c, 1);
        }
    }
    return m;
}

json matrix_to_json(const GfMatrix& m) {
    json j{{"rows", m.rows()}, {"cols", m.cols()}, {"field", field_to_json(m.field())}};
    if (m.field().m() == 1) {
        j["hex"] = gf2_hex_rows(m);
    } else {
        json d = json::array();
        for (gf_elem x : m.data()) d.push_back(x);
        j["data"] = std::move(d);
    }
    return j;
}

GfMatrix matrix_from_json(const json& j) {
    int rows = require_int(j, "rows"), cols = require_int(j, "cols");
    const Field& f = field_from_json(require(j, "field"));
    if (j.contains("hex")) {
        if (f.m() != 1) throw SpecError("hex rows are only valid for GF(2)");
        auto hx = j["hex"].get<std::vector<std::string>>();
        if (static_cast<int>(hx.size()) != rows) throw SpecError("hex row count mismatch");
        return gf2_from_hex_rows(hx, cols);
    }
    const auto& d = require(j, "data");
    if (!d.is_array() || static_cast<int>(d.size()) != rows * cols)
        throw SpecError("matrix data length != rows*cols");
    std::vector<gf_elem> vals;
    vals.reserve(d.size());
    for (const auto& x : d) vals.push_back(x.get<gf_elem>());
    return GfMatrix(f, rows, cols, std::move(vals));
}

// ---------------------------------------------------------------------------
// Spec-driven construction
// ---------------------------------------------------------------------------

namespace {

json linear_code_artifact(const LinearCode& c, const json& spec) {
    return json{{"type", "linear_code"},
                {"n", c.n()},
                {"k", c.k()},
                {"d", distance_to_json(c.distance())},
                {"h", matrix_to_json(c.h())},
                {"spec", spec}};
}

TpcVariant variant_from_string(const std::string& s) {
    if (s == "psi") return TpcVariant::psi;
    if (s == "companion_t") return TpcVariant::companion_transposed;
    if (s == "companion") return TpcVariant::companion_plain;
    throw SpecError("variant must be one of psi|companion|companion_t");
}

json stabilizer_artifact(const StabilizerCode& q, const json& spec) {
    json j{{"type", "stabilizer"},
           {"n", q.n},
           {"k", q.k},
           {"d", distance_to_json(q.d)},
           {"pure", purity_name(q.pure)},
           {"provenance", q.provenance},
           {"stab_ab", gf2_hex_rows(q.stab)},
           {"spec", spec}};
    if (q.burst) j["burst"] = json{{"l", q.burst->l}, {"t", q.burst->t}};
    return j;
}

struct QtpcRebuild {
    StabilizerCode q;
    GrsInfo outer;
    std::optional<Poly> fire_g;
    int n1 = 0, n2 = 0;
};

QtpcRebuild rebuild_qtpc(const json& spec);

}  // namespace

LinearCode code_from_spec(const json& spec) {
    const std::string kind = require(spec, "kind").get<std::string>();
    if (kind == "repetition") return repetition(require_int(spec, "n"));
    if (kind == "bch") {
        auto c = bch(require_int(spec, "m"), require_int(spec, "b"),
                     require_int(spec, "delta"));
        c.code.set_distance({require_int(spec, "delta"), false});
        return c.code;
    }
    if (kind == "rs")
        return reed_solomon(Field::get(require_int(spec, "m")),
                            require_int(spec, "n"), require_int(spec, "k"))
            .code;
    if (kind == "mds")
        return mds_dual_containing(Field::get(require_int(spec, "m")),
                                   require_int(spec, "n"), require_int(spec, "d"))
            .code;
    if (kind == "fire")
        return fire_code(poly_from_bits_json(require(spec, "b_poly")),
                         require_int(spec, "l"))
            .cyclic.code;
    if (kind == "parity")
        return LinearCode::from_parity(matrix_from_json(require(spec, "h")));
    throw SpecError("unknown code kind: " + kind);
}

namespace {

QtpcRebuild rebuild_qtpc(const json& spec) {
    const std::string kind = require(spec, "kind").get<std::string>();
    QtpcRebuild r;
    if (kind == "qtpc_burst3") {
        int n1 = require_int(spec, "n1"), n2 = require_int(spec, "n2");
        r.q = qtpc_burst_theorem3(n1, n2);
        r.outer = mds_dual_containing(Field::get(n1 - 1), n2, n1).grs;
        r.n1 = n1;
        r.n2 = n2;
        return r;
    }
    if (kind == "qtpc_burst4") {
        const json& fspec = require(spec, "fire");
        FireCode fire = fire_code(poly_from_bits_json(require(fspec, "b_poly")),
                                  require_int(fspec, "l"));
        const json& cspec = require(spec, "c2");
        if (require(cspec, "kind").get<std::string>() != "mds")
            throw SpecError("qtpc_burst4: c2 must be an mds spec");
        RsCode c2 = mds_dual_containing(Field::get(require_int(cspec, "m")),
                                        require_int(cspec, "n"),
                                        require_int(cspec, "d"));
        r.q = qtpc_burst_theorem4(fire, c2);
        r.outer = c2.grs;
        r.fire_g = fire.cyclic.g;
        r.n1 = fire.spec.n;
        r.n2 = c2.code.n();
        return r;
    }
    throw SpecError("artifact does not support decode-sim: kind " + kind);
}

}  // namespace

json build_from_spec(const json& spec) {
    if (!spec.is_object()) throw SpecError("spec must be a JSON object");
    const std::string kind = require(spec, "kind").get<std::string>();
    if (kind == "repetition" || kind == "bch" || kind == "rs" || kind == "mds" ||
        kind == "fire" || kind == "parity")
        return linear_code_artifact(code_from_spec(spec), spec);
    if (kind == "tpc") {
        LinearCode c1 = code_from_spec(require(spec, "c1"));
        LinearCode c2 = code_from_spec(require(spec, "c2"));
        TpcVariant v = variant_from_string(
            spec.value("variant", std::string("psi")));
        TensorProductCode t = tpc_build(c1, c2, v);
        return json{{"type", "tpc"},
                    {"n", t.n()},
                    {"k", t.k()},
                    {"d", distance_to_json(certify_distance(t))},
                    {"variant", spec.value("variant", std::string("psi"))},
                    {"h_base", matrix_to_json(t.h_base())},
                    {"spec", spec}};
    }
    if (kind == "css") {
        StabilizerCode q = css(code_from_spec(require(spec, "c1")),
                               code_from_spec(require(spec, "c2")));
        return stabilizer_artifact(q, spec);
    }
    if (kind == "hermitian") {
        StabilizerCode q = hermitian(code_from_spec(require(spec, "d4")));
        return stabilizer_artifact(q, spec);
    }
    if (kind == "qtpc_theorem1") {
        StabilizerCode q = qtpc_theorem1(code_from_spec(require(spec, "c1")),
                                         code_from_spec(require(spec, "c2")));
        return stabilizer_artifact(q, spec);
    }
    if (kind == "qtpc_theorem2") {
        StabilizerCode q = qtpc_theorem2(code_from_spec(require(spec, "c1")),
                                         code_from_spec(require(spec, "c2")));
        return stabilizer_artifact(q, spec);
    }
    if (kind == "qtpc_burst3" || kind == "qtpc_burst4")
        return stabilizer_artifact(rebuild_qtpc(spec).q, spec);
    if (kind == "corollary1") {
        LinearCode c = code_from_spec(require(spec, "c"));
        if (spec.contains("d")) c.set_distance({require_int(spec, "d"), true});
        return stabilizer_artifact(self_dual_corollary1(c), spec);
    }
    if (kind == "corollary2") {
        LinearCode c = code_from_spec(require(spec, "c"));
        if (spec.contains("d")) c.set_distance({require_int(spec, "d"), true});
        return stabilizer_artifact(self_dual_corollary2(c), spec);
    }
    throw SpecError("unknown spec kind: " + kind);
}

VerifyReport verify_artifact(const json& artifact) {
    VerifyReport rep;
    if (!artifact.is_object() || !artifact.contains("type"))
        throw SpecError("artifact missing type");
    const std::string type = artifact["type"].get<std::string>();
    if (type == "linear_code") {
        GfMatrix h = matrix_from_json(require(artifact, "h"));
        rep.add("parity check full rank", rank(h) == h.rows());
        rep.add("k = n - rank(h)",
                require_int(artifact, "k") == h.cols() - rank(h));
        if (artifact.contains("spec")) {
            LinearCode rebuilt = code_from_spec(artifact["spec"]);
            rep.add("rebuild matches", rebuilt.h() == h);
        }
        return rep;
    }
    if (type == "tpc") {
        GfMatrix h = matrix_from_json(require(artifact, "h_base"));
        int n = require_int(artifact, "n"), k = require_int(artifact, "k");
        rep.add("h_base full rank", rank(h) == h.rows());
        rep.add("dimension law n - rho1*rho2", k == n - h.rows());
        if (artifact.contains("spec")) {
            json rebuilt = build_from_spec(artifact["spec"]);
            rep.add("rebuild matches",
                    matrix_from_json(rebuilt["h_base"]) == h);
        }
        return rep;
    }
    if (type == "stabilizer") {
        int n = require_int(artifact, "n"), k = require_int(artifact, "k");
        GfMatrix stab =
            gf2_from_hex_rows(artifact["stab_ab"].get<std::vector<std::string>>(),
                              2 * n);
        rep.add("symplectic commutation", symplectic_commute(stab));
        rep.add("rank(stab) = n - k", rank(stab) == n - k);
        if (artifact.contains("spec")) {
            json rebuilt = build_from_spec(artifact["spec"]);
            rep.add("rebuild matches",
                    rebuilt["stab_ab"] == artifact["stab_ab"] &&
                        require_int(rebuilt, "k") == k);
        }
        return rep;
    }
    throw SpecError("unknown artifact type: " + type);
}

json decode_sim(const json& artifact, const DecodeSimOptions& opts) {
    if (!artifact.contains("spec"))
        throw SpecError("decode-sim requires an artifact with an embedded spec");
    QtpcRebuild r = rebuild_qtpc(artifact["spec"]);
    if (!r.q.burst) throw SpecError("artifact carries no burst metadata");
    int t = opts.t >= 0 ? opts.t : r.q.burst->t;
    int l = opts.l >= 0 ? opts.l : r.q.burst->l;
    QtpcDecoder dec(r.q, r.outer, r.fire_g);
    CapabilityReport rep = capability_report(dec, r.n1, r.n2, t, l, opts.trials,
                                             opts.seed, opts.exhaustive_budget);
    json out{{"patterns", rep.patterns},
             {"successes", rep.successes},
             {"failures", rep.failures},
             {"mode", rep.exhaustive ? "exhaustive" : "mc"},
             {"seed", rep.seed},
             {"t", t},
             {"l", l},
             {"first_failure", nullptr}};
    if (rep.first_failure) {
        json bursts = json::array();
        for (const auto& b : rep.first_failure->bursts) {
            json vals = json::array();
            for (auto [a, bb] : b.values) vals.push_back(json::array({a, bb}));
            bursts.push_back(json{{"subblock", b.subblock},
                                  {"offset", b.offset},
                                  {"values", vals}});
        }
        out["first_failure"] = json{{"bursts", bursts}};
    }
    return out;
}

std::string decode_sim_csv(const json& artifact, const DecodeSimOptions& opts) {
    std::ostringstream os;
    os << "t,patterns,successes,failures,success_rate\n";
    QtpcRebuild r = rebuild_qtpc(require(artifact, "spec"));
    int tmax = opts.t >= 0 ? opts.t : (r.q.burst ? r.q.burst->t : 0);
    for (int t = 0; t <= tmax; ++t) {
        DecodeSimOptions o = opts;
        o.t = t;
        json rep = decode_sim(artifact, o);
        std::uint64_t pats = rep["patterns"].get<std::uint64_t>();
        std::uint64_t succ = rep["successes"].get<std::uint64_t>();
        os << t << ',' << pats << ',' << succ << ','
           << rep["failures"].get<std::uint64_t>() << ','
           << (pats ? static_cast<double>(succ) / pats : 0.0) << '\n';
    }
    return os.str();
}

}  // namespace qtpc
