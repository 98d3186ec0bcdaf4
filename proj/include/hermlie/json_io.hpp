#pragma once

// JSON loading of Hermitian data and extension specifications, and JSON
// emission of property reports.  All scalars cross the boundary as exact
// strings ("p/q", "p/q*sqrt(d)", ...); floating-point numbers are rejected.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hermlie/constructions.hpp"
#include "hermlie/dsl.hpp"
#include "hermlie/nilradical.hpp"

namespace hermlie {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_input(const std::string& message) {
    throw construction_error("BAD_INPUT", message);
}

}  // namespace detail

inline Scalar scalar_from_json(const json& v) {
    if (v.is_number_integer()) return Scalar(v.get<long long>());
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const std::domain_error& err) {
            detail::bad_input(std::string("bad scalar literal: ") + err.what());
        }
    }
    detail::bad_input("scalars must be exact: integers or strings like \"1/2\" or \"1/2*sqrt(3)\"");
}

inline json scalar_to_json(const Scalar& s) { return s.to_string(); }

inline Matrix matrix_from_json(const json& v, int dim) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        detail::bad_input("expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " matrix as an array of rows");
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = v[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            detail::bad_input("matrix row " + std::to_string(r + 1) + " must have " +
                              std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c) m(r, c) = scalar_from_json(row[c]);
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline int image_index(const json& v, const std::string& what) {
    std::string text;
    if (v.is_number_integer()) {
        text = std::to_string(v.get<long long>());
    } else if (v.is_string()) {
        text = v.get<std::string>();
    } else {
        bad_input(what + " must be an integer or an integer string");
    }
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) bad_input(what + " is not an integer: '" + text + "'");
        return value;
    } catch (const std::exception&) {
        bad_input(what + " is not an integer: '" + text + "'");
    }
}

/// J from an image map {"1": "2", "3": "4", ...}: each entry a -> b sets
/// J e_a = e_b (b may be negative for a sign), with J e_b = -e_a implied.
inline Matrix j_from_image_map(const json& v, int dim) {
    Matrix m(dim, dim);
    std::vector<bool> used(static_cast<std::size_t>(dim), false);
    for (const auto& [key, value] : v.items()) {
        const int a = image_index(json(key), "image-map key");
        const int b_signed = image_index(value, "image of basis vector " + key);
        const int sign = b_signed < 0 ? -1 : 1;
        const int b = b_signed < 0 ? -b_signed : b_signed;
        if (a < 1 || a > dim || b < 1 || b > dim)
            bad_input("image map touches basis index out of range for dimension " +
                      std::to_string(dim));
        if (used[a - 1] || (a != b && used[b - 1]))
            bad_input("image map assigns basis vector " + std::to_string(used[a - 1] ? a : b) +
                      " twice");
        used[a - 1] = true;
        used[b - 1] = true;
        m(b - 1, a - 1) = Scalar(sign);
        m(a - 1, b - 1) = Scalar(-sign);
    }
    return m;
}

}  // namespace detail

inline ComplexStructure load_complex_structure(const json& v, int dim) {
    if (v.is_object()) return ComplexStructure(detail::j_from_image_map(v, dim));
    if (v.is_array()) return ComplexStructure(matrix_from_json(v, dim));
    detail::bad_input("\"J\" must be an image map {\"1\":\"2\",...} or a matrix");
}

inline Metric load_metric(const json& v, int dim) {
    if (v.is_string() && v.get<std::string>() == "identity") return Metric(Matrix::identity(dim));
    if (v.is_array()) return Metric(matrix_from_json(v, dim));
    detail::bad_input("\"g\" must be \"identity\" or a matrix");
}

/// A single Hermitian structure {"J": ..., "g": ...}; g defaults to the
/// identity.  Construction errors (J^2 != -Id, g not symmetric positive
/// definite, incompatibility) surface from the component constructors.
inline HermitianData load_hermitian(const json& doc, const LieAlgebra& l) {
    if (!doc.is_object() || !doc.contains("J"))
        detail::bad_input("expected an object with a \"J\" field");
    ComplexStructure j = load_complex_structure(doc.at("J"), l.dim());
    Metric g = doc.contains("g") ? load_metric(doc.at("g"), l.dim())
                                 : Metric(Matrix::identity(l.dim()));
    return HermitianData(l, std::move(j), std::move(g));
}

/// A Hermitian-data file: either a single structure object, or
/// {"structures": [{"label", "J", "g"}, ...], "gk": [["a","b"], ...]} where
/// gk lists label pairs to test as generalized Kahler candidates.
struct HermitianFile {
    std::vector<std::pair<std::string, HermitianData>> structures;
    std::vector<std::pair<std::string, std::string>> gk_pairs;
};

inline HermitianFile load_hermitian_file(const json& doc, const LieAlgebra& l) {
    HermitianFile out;
    if (doc.is_object() && doc.contains("structures")) {
        const json& list = doc.at("structures");
        if (!list.is_array() || list.empty())
            detail::bad_input("\"structures\" must be a nonempty array");
        int counter = 0;
        for (const json& item : list) {
            ++counter;
            std::string label = item.is_object() && item.contains("label")
                                    ? item.at("label").get<std::string>()
                                    : "structure " + std::to_string(counter);
            for (const auto& [existing, data] : out.structures)
                if (existing == label) detail::bad_input("duplicate structure label '" + label + "'");
            out.structures.emplace_back(std::move(label), load_hermitian(item, l));
        }
        if (doc.contains("gk")) {
            const json& gk = doc.at("gk");
            if (!gk.is_array()) detail::bad_input("\"gk\" must be an array of label pairs");
            for (const json& pair : gk) {
                if (!pair.is_array() || pair.size() != 2)
                    detail::bad_input("each \"gk\" entry must be a pair of structure labels");
                const std::string a = pair[0].get<std::string>();
                const std::string b = pair[1].get<std::string>();
                auto find = [&](const std::string& label) -> const HermitianData* {
                    for (const auto& [name, data] : out.structures)
                        if (name == label) return &data;
                    return nullptr;
                };
                const HermitianData* pa = find(a);
                const HermitianData* pb = find(b);
                if (!pa || !pb)
                    detail::bad_input("\"gk\" refers to unknown structure label '" +
                                      (pa ? b : a) + "'");
                if (!(pa->metric().matrix() == pb->metric().matrix()))
                    detail::bad_input("a generalized Kahler pair must share one metric; '" + a +
                                      "' and '" + b + "' differ");
                out.gk_pairs.emplace_back(a, b);
            }
        }
    } else {
        out.structures.emplace_back("standard", load_hermitian(doc, l));
    }
    return out;
}

/// Extension input: {"base": {"structure": "(dsl)", "J": ..., "g": ...},
/// "k": 1, "theta": [matrix, ...]} with 2k action matrices over the base.
inline ExtensionSpec load_extension_spec(const json& doc) {
    if (!doc.is_object() || !doc.contains("base"))
        detail::bad_input("expected an object with a \"base\" field");
    const json& base_doc = doc.at("base");
    if (!base_doc.is_object() || !base_doc.contains("structure"))
        detail::bad_input("\"base\" must carry a \"structure\" field with structure equations");
    LieAlgebra base_algebra = parse_structure(base_doc.at("structure").get<std::string>());
    HermitianData base = load_hermitian(base_doc, base_algebra);
    int k = 1;
    if (doc.contains("k")) {
        if (!doc.at("k").is_number_integer()) detail::bad_input("\"k\" must be an integer");
        k = doc.at("k").get<int>();
    }
    if (!doc.contains("theta") || !doc.at("theta").is_array())
        detail::bad_input("expected a \"theta\" array of action matrices");
    std::vector<Matrix> theta;
    for (const json& m : doc.at("theta")) theta.push_back(matrix_from_json(m, base_algebra.dim()));
    return ExtensionSpec{std::move(base), k, std::move(theta)};
}

namespace detail {

inline json flag_json(const FlagReport& flag) {
    if (!flag.value.has_value()) return nullptr;
    return *flag.value;
}

inline void collect_witness(json& witnesses, const char* name, const FlagReport& flag) {
    if (!flag.witness) return;
    json w;
    w["indices"] = flag.witness->indices;
    w["value"] = scalar_to_json(flag.witness->value);
    witnesses[name] = std::move(w);
}

}  // namespace detail

/// The property report of one algebra with its Hermitian structures, as JSON.
inline json report_json(const std::string& name, const LieAlgebra& l,
                        const std::vector<std::pair<std::string, HermitianData>>& structures,
                        const std::vector<std::pair<std::string, std::string>>& gk_pairs = {}) {
    json doc;
    doc["name"] = name;
    doc["dimension"] = l.dim();
    doc["jacobi"] = !l.jacobi_check().has_value();
    doc["unimodular"] = l.is_unimodular();

    json nil;
    if (auto found = find_nilradical(l)) {
        nil["dim"] = found->dim();
        nil["verdict"] = to_string(NilradicalVerdict::IS_NILRADICAL);
    } else {
        nil["dim"] = nullptr;
        nil["verdict"] = "UNDETERMINED";
    }
    doc["nilradical"] = std::move(nil);

    doc["structures"] = json::array();
    for (const auto& [label, hd] : structures) {
        PropertyReport rep = analyze(hd.algebra(), hd.J(), hd.metric());
        json s;
        s["label"] = label;
        s["integrable"] = detail::flag_json(rep.integrable);
        s["compatible"] = detail::flag_json(rep.compatible);
        s["kahler"] = detail::flag_json(rep.kahler);
        s["skt"] = detail::flag_json(rep.skt);
        s["balanced"] = detail::flag_json(rep.balanced);
        s["chern_ricci_flat"] = detail::flag_json(rep.chern_ricci_flat);
        json witnesses = json::object();
        detail::collect_witness(witnesses, "integrable", rep.integrable);
        detail::collect_witness(witnesses, "compatible", rep.compatible);
        detail::collect_witness(witnesses, "kahler", rep.kahler);
        detail::collect_witness(witnesses, "skt", rep.skt);
        detail::collect_witness(witnesses, "balanced", rep.balanced);
        detail::collect_witness(witnesses, "chern_ricci_flat", rep.chern_ricci_flat);
        s["witnesses"] = std::move(witnesses);
        doc["structures"].push_back(std::move(s));
    }

    doc["gk"] = json::array();
    for (const auto& [a, b] : gk_pairs) {
        const HermitianData* pa = nullptr;
        const HermitianData* pb = nullptr;
        for (const auto& [label, hd] : structures) {
            if (label == a) pa = &hd;
            if (label == b) pb = &hd;
        }
        if (!pa || !pb) detail::bad_input("generalized Kahler pair refers to an unknown label");
        GKReport rep = is_generalized_kahler(l, pa->J(), pb->J(), pa->metric());
        json entry;
        entry["labels"] = json::array({a, b});
        entry["verdict"] = to_string(rep.verdict);
        if (!rep.reason.empty()) entry["reason"] = rep.reason;
        doc["gk"].push_back(std::move(entry));
    }
    return doc;
}

inline std::string emit_report(const std::string& name, const LieAlgebra& l,
                               const std::vector<std::pair<std::string, HermitianData>>& structures,
                               const std::vector<std::pair<std::string, std::string>>& gk_pairs = {}) {
    return report_json(name, l, structures, gk_pairs).dump(2) + "\n";
}

/// The Hermitian data of a catalog-style structure as loadable JSON.
inline json hermitian_to_json(const HermitianData& hd) {
    json doc;
    doc["J"] = matrix_to_json(hd.J().matrix());
    doc["g"] = matrix_to_json(hd.metric().matrix());
    return doc;
}

}  // namespace hermlie
