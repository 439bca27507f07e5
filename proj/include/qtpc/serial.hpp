#pragma once

#include <json.hpp>

#include "qtpc/decoder.hpp"

namespace qtpc {

using json = nlohmann::json;

json field_to_json(const Field& f);
const Field& field_from_json(const json& j);

/// {"rows", "cols", "field", "data": [...]} with a compact "hex" row list
/// replacing "data" for GF(2) matrices. Hex digits cover columns left to
/// right, four per digit, column-LSB-first within each digit.
json matrix_to_json(const GfMatrix& m);
GfMatrix matrix_from_json(const json& j);

std::vector<std::string> gf2_hex_rows(const GfMatrix& m);
GfMatrix gf2_from_hex_rows(const std::vector<std::string>& rows, int cols);

/// Thrown on malformed/ill-typed spec or artifact input (CLI exit 2).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the artifact selected by spec["kind"]:
///   repetition, bch, rs, mds, fire, parity       -> linear-code artifact
///   tpc                                          -> tpc artifact
///   css, hermitian, qtpc_theorem1, qtpc_theorem2,
///   qtpc_burst3, qtpc_burst4, corollary1, corollary2 -> stabilizer artifact
/// The originating spec is embedded for round-trip verification.
json build_from_spec(const json& spec);

/// Classical-code construction for specs of the linear-code kinds.
LinearCode code_from_spec(const json& spec);

struct VerifyReport {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> checks;
    void add(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        pass = pass && ok;
    }
};
/// Re-runs every applicable invariant on a built artifact: rank laws,
/// commutation, containment products, parameter formulas, and a bit-exact
/// rebuild from the embedded spec.
VerifyReport verify_artifact(const json& artifact);

struct DecodeSimOptions {
    int t = -1;  // -1: use the artifact's burst metadata
    int l = -1;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::uint64_t exhaustive_budget = 200000;
};
/// Rebuilds the construction behind a stabilizer artifact and runs the
/// burst-capability harness.
json decode_sim(const json& artifact, const DecodeSimOptions& opts);

/// Per-t' success-rate CSV rows ("t,patterns,successes,failures,rate").
std::string decode_sim_csv(const json& artifact, const DecodeSimOptions& opts);

}  // namespace qtpc
