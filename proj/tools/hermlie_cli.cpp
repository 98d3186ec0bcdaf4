// Command-line front end: structure-equation files in, exact verdicts out.
//
//   hermlie check FILE [--hermitian FILE] [--assert FLAG=BOOL ...]
//   hermlie catalog list
//   hermlie catalog check NAME [--param k=v ...] | --all
//   hermlie nilradical FILE --candidate i,j,...
//   hermlie search (skt|kahler) FILE --J FILE [--seed N] [--budget N]
//   hermlie extend BASE.json
//   hermlie export NAME [--json] [--dir DIR]
//
// Exit codes: 0 success, 1 an asserted expectation failed, 2 invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/catalog.hpp"
#include "hermlie/dsl.hpp"
#include "hermlie/json_io.hpp"
#include "hermlie/search.hpp"

namespace {

using namespace hermlie;

constexpr int kExitSuccess = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw construction_error("BAD_INPUT", "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw construction_error("BAD_INPUT", path + " is not valid JSON: " + e.what());
    }
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct ParsedStructure {
    std::string name;
    LieAlgebra algebra;
};

ParsedStructure load_structure_file(const std::string& path) {
    const DslDocument doc = parse_document(read_file(path));
    return {doc.name.value_or(file_stem(path)), document_to_algebra(doc)};
}

// --- check ------------------------------------------------------------------

bool flag_matches(const json& value, bool expected) {
    return value.is_boolean() && value.get<bool>() == expected;
}

int run_check(const std::string& file, const std::string& hermitian_file,
              const std::vector<std::string>& assertions) {
    ParsedStructure in = load_structure_file(file);

    std::vector<std::pair<std::string, HermitianData>> structures;
    std::vector<std::pair<std::string, std::string>> gk_pairs;
    if (!hermitian_file.empty()) {
        HermitianFile hf = load_hermitian_file(read_json_file(hermitian_file), in.algebra);
        structures = std::move(hf.structures);
        gk_pairs = std::move(hf.gk_pairs);
    }

    const json report = report_json(in.name, in.algebra, structures, gk_pairs);
    std::cout << report.dump(2) << "\n";

    static const std::vector<std::string> algebra_flags = {"jacobi", "unimodular"};
    static const std::vector<std::string> structure_flags = {
        "integrable", "compatible", "kahler", "skt", "balanced", "chern_ricci_flat"};

    int exit_code = kExitSuccess;
    for (const std::string& spec : assertions) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw construction_error("BAD_INPUT", "--assert takes FLAG=BOOL, got: " + spec);
        const std::string flag = spec.substr(0, eq);
        const std::string text = spec.substr(eq + 1);
        bool expected;
        if (text == "true" || text == "1")
            expected = true;
        else if (text == "false" || text == "0")
            expected = false;
        else
            throw construction_error("BAD_INPUT", "--assert value must be a boolean, got: " + text);

        bool ok;
        if (std::find(algebra_flags.begin(), algebra_flags.end(), flag) != algebra_flags.end()) {
            ok = flag_matches(report.at(flag), expected);
        } else if (std::find(structure_flags.begin(), structure_flags.end(), flag) !=
                   structure_flags.end()) {
            if (structures.empty())
                throw construction_error("BAD_INPUT",
                                         "--assert " + flag + " requires --hermitian");
            ok = true;
            for (const json& s : report.at("structures")) ok = ok && flag_matches(s.at(flag), expected);
        } else {
            throw construction_error("BAD_INPUT", "unknown flag in --assert: " + flag);
        }
        if (!ok) {
            std::cerr << "assertion failed: " << flag << " != " << (expected ? "true" : "false")
                      << "\n";
            exit_code = kExitExpectationFailed;
        }
    }
    return exit_code;
}

// --- catalog ----------------------------------------------------------------

int run_catalog_list() {
    for (const std::string& name : catalog_list()) {
        const CatalogEntry& entry = catalog_entry(name);
        std::cout << name;
        if (!entry.params.empty()) {
            std::cout << " [";
            for (std::size_t i = 0; i < entry.params.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << entry.params[i].first << "=" << entry.params[i].second.to_string();
            }
            std::cout << "]";
        }
        std::cout << " - " << entry.summary << "\n";
    }
    return kExitSuccess;
}

std::map<std::string, Scalar> parse_overrides(const std::vector<std::string>& params) {
    std::map<std::string, Scalar> overrides;
    for (const std::string& spec : params) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw construction_error("BAD_INPUT", "--param takes k=v, got: " + spec);
        try {
            overrides.emplace(spec.substr(0, eq), parse_scalar(spec.substr(eq + 1)));
        } catch (const std::domain_error& e) {
            throw construction_error("BAD_INPUT",
                                     "--param " + spec + ": " + std::string(e.what()));
        }
    }
    return overrides;
}

void print_catalog_check(const CatalogCheck& check) {
    std::cout << check.name << ": " << (check.pass ? "pass" : "FAIL") << "\n";
    for (const std::string& m : check.mismatches) std::cout << "  - " << m << "\n";
}

int run_catalog_check(const std::string& name, const std::vector<std::string>& params, bool all) {
    if (all) {
        const std::vector<std::string> names = catalog_list();
        std::vector<std::future<CatalogCheck>> futures;
        futures.reserve(names.size());
        for (const std::string& n : names)
            futures.push_back(std::async(std::launch::async,
                                         [n] { return catalog_check(n, {}); }));
        bool pass = true;
        for (auto& f : futures) {
            const CatalogCheck check = f.get();
            print_catalog_check(check);
            pass = pass && check.pass;
        }
        return pass ? kExitSuccess : kExitExpectationFailed;
    }
    const CatalogCheck check = catalog_check(name, parse_overrides(params));
    print_catalog_check(check);
    return check.pass ? kExitSuccess : kExitExpectationFailed;
}

// --- nilradical -------------------------------------------------------------

int run_nilradical(const std::string& file, const std::string& candidate) {
    ParsedStructure in = load_structure_file(file);
    std::vector<int> indices;
    std::stringstream ss(candidate);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            const int idx = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            indices.push_back(idx);
        } catch (const std::exception&) {
            throw construction_error("BAD_INPUT", "--candidate expects integers, got: " + piece);
        }
    }
    const NilradicalReport report = verify_nilradical(in.algebra, indices);
    std::cout << to_string(report.verdict) << "\n";
    if (!report.detail.empty()) std::cout << report.detail << "\n";
    return report.certified() ? kExitSuccess : kExitExpectationFailed;
}

// --- search -----------------------------------------------------------------

int run_search(bool kahler, const std::string& file, const std::string& j_file,
               std::uint64_t seed, int budget) {
    ParsedStructure in = load_structure_file(file);
    const json jdoc = read_json_file(j_file);
    const ComplexStructure j = load_complex_structure(
        jdoc.is_object() && jdoc.contains("J") ? jdoc.at("J") : jdoc, in.algebra.dim());

    const SearchOutcome out = kahler ? kahler_metric_search(in.algebra, j, budget, seed)
                                     : skt_metric_search(in.algebra, j, budget, seed);
    std::cout << "status: " << to_string(out.status) << "\n";
    std::cout << "kernel dimension: " << out.kernel_dim << "\n";
    std::cout << "attempts: " << out.attempts << "\n";
    if (out.status == SearchStatus::FOUND) {
        std::cout << "omega: " << out.omega->to_string() << "\n";
        std::cout << "g: " << matrix_to_json(out.metric->matrix()).dump() << "\n";
    }
    return kExitSuccess;
}

// --- extend -----------------------------------------------------------------

int run_extend(const std::string& file) {
    const ExtensionSpec spec = load_extension_spec(read_json_file(file));
    const HermitianData extended = skt_extension(spec);
    json out;
    out["dimension"] = extended.dim();
    out["structure"] = serialize_structure(extended.algebra());
    out["J"] = matrix_to_json(extended.J().matrix());
    out["g"] = matrix_to_json(extended.metric().matrix());
    std::cout << out.dump(2) << "\n";
    return kExitSuccess;
}

// --- export -----------------------------------------------------------------

std::string export_dsl(const std::string& name, const CatalogInstance& inst) {
    DslDocument doc = algebra_to_document(inst.algebra);
    doc.name = name;
    doc.parameters = catalog_entry(name).params;
    return serialize_document(doc);
}

json export_hermitian(const CatalogInstance& inst) {
    if (inst.hermitian.size() == 1 && inst.gk.empty())
        return hermitian_to_json(inst.hermitian.front().second);
    json out;
    out["structures"] = json::array();
    for (const auto& [label, hd] : inst.hermitian) {
        json s = hermitian_to_json(hd);
        s["label"] = label;
        out["structures"].push_back(std::move(s));
    }
    if (!inst.gk.empty()) {
        out["gk"] = json::array();
        for (const GKPairCase& pair : inst.gk) {
            // Pairs reference structure labels; export each member that is not
            // already present under a synthesized label.
            const std::string pl = pair.label + ".plus", ml = pair.label + ".minus";
            json sp = hermitian_to_json(HermitianData(inst.algebra, pair.jp, pair.metric));
            sp["label"] = pl;
            json sm = hermitian_to_json(HermitianData(inst.algebra, pair.jm, pair.metric));
            sm["label"] = ml;
            out["structures"].push_back(std::move(sp));
            out["structures"].push_back(std::move(sm));
            out["gk"].push_back(json::array({pl, ml}));
        }
    }
    return out;
}

int run_export(const std::string& name, bool as_json, const std::string& dir) {
    const CatalogInstance inst = catalog_entry(name).instantiate();
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        const auto lie_path = std::filesystem::path(dir) / (name + ".lie");
        const auto json_path = std::filesystem::path(dir) / (name + ".json");
        std::ofstream(lie_path) << export_dsl(name, inst);
        std::ofstream(json_path) << export_hermitian(inst).dump(2) << "\n";
        std::cout << lie_path.string() << "\n" << json_path.string() << "\n";
        return kExitSuccess;
    }
    if (as_json)
        std::cout << export_hermitian(inst).dump(2) << "\n";
    else
        std::cout << export_dsl(name, inst);
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Hermitian structures on Lie algebras"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_hermitian;
    std::vector<std::string> check_asserts;
    CLI::App* check = app.add_subcommand("check", "analyze a structure file and print a report");
    check->add_option("FILE", check_file, "structure equations (DSL text)")->required();
    check->add_option("--hermitian", check_hermitian, "Hermitian data (JSON)");
    check->add_option("--assert", check_asserts, "require FLAG=BOOL in the report");

    // catalog list | check
    CLI::App* catalog = app.add_subcommand("catalog", "built-in examples");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "list entries with parameters");
    std::string cat_name;
    std::vector<std::string> cat_params;
    bool cat_all = false;
    CLI::App* cat_check = catalog->add_subcommand("check", "re-verify expected properties");
    cat_check->add_option("NAME", cat_name, "entry name");
    cat_check->add_option("--param", cat_params, "override a parameter (k=v)");
    cat_check->add_flag("--all", cat_all, "check every entry (parallel)");

    // nilradical
    std::string nil_file, nil_candidate;
    CLI::App* nil = app.add_subcommand("nilradical", "certify a nilradical candidate");
    nil->add_option("FILE", nil_file, "structure equations (DSL text)")->required();
    nil->add_option("--candidate", nil_candidate, "basis indices i,j,...")->required();

    // search skt | kahler
    CLI::App* search = app.add_subcommand("search", "hunt for a compatible metric");
    search->require_subcommand(1);
    std::string search_file, search_j;
    std::uint64_t search_seed = 0;
    int search_budget = 512;
    for (const char* flavor : {"skt", "kahler"}) {
        CLI::App* sub = search->add_subcommand(flavor);
        sub->add_option("FILE", search_file, "structure equations (DSL text)")->required();
        sub->add_option("--J", search_j, "complex structure (JSON)")->required();
        sub->add_option("--seed", search_seed, "random seed (default 0)");
        sub->add_option("--budget", search_budget, "attempt budget (default 512)");
    }

    // extend
    std::string extend_file;
    CLI::App* extend = app.add_subcommand("extend", "build a double extension from a spec");
    extend->add_option("BASE", extend_file, "extension spec (JSON)")->required();

    // export
    std::string export_name, export_dir;
    bool export_json = false;
    CLI::App* exp = app.add_subcommand("export", "emit a catalog entry as files");
    exp->add_option("NAME", export_name, "entry name")->required();
    exp->add_flag("--json", export_json, "print Hermitian JSON instead of DSL text");
    exp->add_option("--dir", export_dir, "write NAME.lie and NAME.json into DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(check_file, check_hermitian, check_asserts);
        if (catalog->parsed()) {
            if (catalog->get_subcommand("list")->parsed()) return run_catalog_list();
            if (!cat_all && cat_name.empty())
                throw construction_error("BAD_INPUT", "catalog check needs NAME or --all");
            if (cat_all && !cat_name.empty())
                throw construction_error("BAD_INPUT", "catalog check takes NAME or --all, not both");
            return run_catalog_check(cat_name, cat_params, cat_all);
        }
        if (nil->parsed()) return run_nilradical(nil_file, nil_candidate);
        if (search->parsed())
            return run_search(search->get_subcommand("kahler")->parsed(), search_file, search_j,
                              search_seed, search_budget);
        if (extend->parsed()) return run_extend(extend_file);
        if (exp->parsed()) return run_export(export_name, export_json, export_dir);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
