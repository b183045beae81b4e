#include "fcalg/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fcalg/element.hpp"
#include "fcalg/report.hpp"

namespace fcalg {

namespace {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// option plumbing

struct CommonOpts {
    std::string input_path;
    std::string out_path;
    std::string atlas_dir = "atlas";
    bool no_atlas = false;
    bool force = false;
    std::uint64_t cap_enumeration = std::uint64_t(1) << 24;
    int cap_factor_degree = 12;
    int threads = 1;
    bool timing = false;
};

struct CommandArgs {
    std::string element;              // classify, decompose
    std::string subset;               // omega: "units" or "group"
    std::string x_name, y_name;       // omega
    std::string a_name, g_name;       // witnesses
    int k = 0;                        // witnesses
    std::string shifts_csv;           // witnesses --shifts
    std::string sample_csv;           // sandwich --sample
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("input", c.input_path, "algebra description JSON file")
        ->required();
    cmd->add_option("--out", c.out_path, "write the report to this file instead of standard output");
    cmd->add_option("--atlas-dir", c.atlas_dir, "atlas directory (default ./atlas)");
    cmd->add_flag("--no-atlas", c.no_atlas, "neither consult nor update the atlas");
    cmd->add_flag("--force", c.force, "recompute even when the atlas already holds this entry");
    cmd->add_option("--cap-enumeration", c.cap_enumeration,
                    "largest element count an exhaustive scan may visit");
    cmd->add_option("--cap-factor-degree", c.cap_factor_degree,
                    "largest polynomial degree factored over the rationals");
    cmd->add_option("--threads", c.threads, "worker threads for enumeration scans");
    cmd->add_flag("--timing", c.timing,
                  "record wall-clock seconds in the report (such reports skip the atlas)");
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

const AlgElement& named_element(const LoadedDescription& input, const std::string& name) {
    for (const auto& [n, el] : input.elements)
        if (n == name) return el;
    std::string known;
    for (const auto& [n, el] : input.elements) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    if (known.empty()) known = "(none)";
    fail(ErrorCode::usage_error,
         "the input document has no element named '" + name + "'; available: " + known);
}

// ---------------------------------------------------------------------------
// atlas store

std::optional<std::string> read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return buf.str();
}

void write_atomic(const fs::path& target, const std::string& bytes) {
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::storage_error, "cannot write '" + tmp.string() + "'");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out)
            fail(ErrorCode::storage_error, "short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        fail(ErrorCode::storage_error,
             "cannot move '" + tmp.string() + "' into place: " + ec.message());
    }
}

json read_index(const fs::path& dir) {
    auto bytes = read_file_bytes(dir / "index.json");
    if (!bytes) return json::object();
    json idx = json::parse(*bytes, nullptr, false);
    if (idx.is_discarded() || !idx.is_object()) return json::object();
    return idx;
}

std::optional<std::string> atlas_lookup(const fs::path& dir, const std::string& key) {
    json idx = read_index(dir);
    auto entries = idx.find("entries");
    if (entries == idx.end() || !entries->is_object()) return std::nullopt;
    auto hit = entries->find(key);
    if (hit == entries->end() || !hit->is_string()) return std::nullopt;
    return hit->get<std::string>();
}

std::string atlas_store(const fs::path& dir, const std::string& key, const std::string& bytes) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        fail(ErrorCode::storage_error,
             "cannot create atlas directory '" + dir.string() + "': " + ec.message());
    std::string filename = sha256_hex(bytes).substr(0, 16) + ".json";
    write_atomic(dir / filename, bytes);
    json idx = read_index(dir);
    if (!idx.contains("entries") || !idx["entries"].is_object()) idx["entries"] = json::object();
    idx["entries"][key] = filename;
    write_atomic(dir / "index.json", idx.dump(2) + "\n");
    return filename;
}

/// Everything that can change the report bytes, minus thread count and
/// output plumbing: the atlas key must hit exactly when the result would
/// be byte-identical.
std::string canonical_key(const std::string& digest, const std::string& command,
                          const CommonOpts& common, const CommandArgs& args) {
    ordered_json j;
    j["element"] = args.element;
    j["subset"] = args.subset;
    j["x"] = args.x_name;
    j["y"] = args.y_name;
    j["a"] = args.a_name;
    j["g"] = args.g_name;
    j["k"] = args.k;
    j["shifts"] = args.shifts_csv;
    j["sample"] = args.sample_csv;
    j["cap_enumeration"] = common.cap_enumeration;
    j["cap_factor_degree"] = common.cap_factor_degree;
    return digest + "|" + command + "|" + j.dump();
}

// ---------------------------------------------------------------------------
// command bodies

struct Computed {
    ordered_json results;
    ordered_json gates = ordered_json::array();
};

Computed compute_results(const std::string& command, const LoadedDescription& input,
                         const CommonOpts& common, const CommandArgs& args) {
    const AlgebraPtr& A = input.algebra;
    Computed c;
    if (command == "validate") {
        c.results = validate_results(input);
    } else if (command == "radical") {
        RadicalOptions opt;
        opt.enumeration_cap = common.cap_enumeration;
        c.results = radical_results(A, opt);
    } else if (command == "center") {
        c.results = center_results(A);
    } else if (command == "classify") {
        c.results = classify_results(args.element, named_element(input, args.element));
    } else if (command == "decompose") {
        FactorOptions opt;
        opt.max_degree_rationals = common.cap_factor_degree;
        c.results = decompose_results(args.element, named_element(input, args.element), opt);
    } else if (command == "units" || command == "fc" || command == "series") {
        UnitGroupOptions opt;
        opt.cap = common.cap_enumeration;
        opt.threads = common.threads;
        UnitGroupTable table = enumerate_units(A, opt);
        if (command == "units") {
            c.results = units_results(table, common.threads);
        } else if (command == "fc") {
            FCOptions fopt;
            fopt.threads = common.threads;
            c.results = fc_results(table, fopt);
        } else {
            c.results = series_results(table);
            ordered_json gate;
            gate["claim"] = "unit-group commutator, nilpotency, and solvability bounds";
            gate["hypothesis"] = c.results["theorem_gate"]["hypothesis"];
            gate["satisfied"] = c.results["theorem_gate"]["satisfied"];
            c.gates.push_back(std::move(gate));
        }
    } else if (command == "omega") {
        const AlgElement& x = named_element(input, args.x_name);
        const AlgElement& y = named_element(input, args.y_name);
        AlgElement z = lie_commutator(x, y);
        OmegaReport r;
        if (args.subset == "units" || args.subset == "U") {
            UnitGroupOptions opt;
            opt.cap = common.cap_enumeration;
            opt.threads = common.threads;
            UnitGroupTable table = enumerate_units(A, opt);
            r = omega_annihilator_count(table, z);
        } else if (args.subset == "group" || args.subset == "G") {
            r = omega_annihilator_count_group(A, z);
        } else {
            fail(ErrorCode::usage_error,
                 "omega subset must be 'units' (all invertible elements) or 'group' "
                 "(the group basis of a group algebra), got '" + args.subset + "'");
        }
        c.results = omega_results(r, args.x_name, args.y_name, z);
    } else if (command == "witnesses") {
        const AlgElement& a = named_element(input, args.a_name);
        const AlgElement& g = named_element(input, args.g_name);
        WitnessList w = [&] {
            if (!args.shifts_csv.empty()) {
                std::vector<ScalarValue> shifts;
                for (const std::string& tok : split_csv(args.shifts_csv))
                    shifts.push_back(A->field()->parse(tok));
                return conjugate_witnesses(a, g, shifts);
            }
            return conjugate_witnesses(a, g, args.k);
        }();
        c.results = witnesses_results(w);
    } else if (command == "sandwich") {
        std::vector<AlgElement> extras;
        for (const std::string& name : split_csv(args.sample_csv))
            extras.push_back(named_element(input, name));
        NablaEstimate est = nabla_sandwich(A, default_unit_sample(A, extras));
        c.results = sandwich_results(A, est);
    } else {
        fail(ErrorCode::internal_error, "unhandled command '" + command + "'");
    }
    return c;
}

void emit_report(const std::string& bytes, const CommonOpts& common, std::ostream& out) {
    if (common.out_path.empty()) {
        out << bytes;
        return;
    }
    std::ofstream f(common.out_path, std::ios::binary | std::ios::trunc);
    if (!f)
        fail(ErrorCode::storage_error, "cannot write report to '" + common.out_path + "'");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f)
        fail(ErrorCode::storage_error, "short write to '" + common.out_path + "'");
}

int run_compute_command(const std::string& command, const CommonOpts& common,
                        const CommandArgs& args, std::ostream& out, std::ostream& err) {
    LoadedDescription input = load_description_file(common.input_path);
    bool use_atlas = !common.no_atlas && !common.timing;
    std::string key = canonical_key(input.digest, command, common, args);
    fs::path dir(common.atlas_dir);

    if (use_atlas && !common.force) {
        if (auto filename = atlas_lookup(dir, key)) {
            if (auto bytes = read_file_bytes(dir / *filename)) {
                err << "cached: " << (dir / *filename).string() << "\n";
                emit_report(*bytes, common, out);
                return 0;
            }
        }
    }

    std::optional<double> seconds;
    ordered_json report;
    if (common.timing) {
        auto t0 = std::chrono::steady_clock::now();
        Computed c = compute_results(command, input, common, args);
        auto t1 = std::chrono::steady_clock::now();
        seconds = std::chrono::duration<double>(t1 - t0).count();
        report = make_report(command, &input, std::move(c.results), std::move(c.gates), seconds);
    } else {
        Computed c = compute_results(command, input, common, args);
        report = make_report(command, &input, std::move(c.results), std::move(c.gates), seconds);
    }
    std::string bytes = report_to_bytes(report);

    if (use_atlas) atlas_store(dir, key, bytes);
    emit_report(bytes, common, out);
    return 0;
}

int run_atlas_command(const CommonOpts& common, std::ostream& out) {
    fs::path dir(common.atlas_dir);
    json idx = read_index(dir);
    ordered_json results;
    results["atlas_dir"] = dir.string();
    ordered_json entries = ordered_json::array();
    if (idx.contains("entries") && idx["entries"].is_object()) {
        for (const auto& [key, filename] : idx["entries"].items()) {
            ordered_json e;
            auto first_bar = key.find('|');
            auto second_bar = key.find('|', first_bar == std::string::npos ? 0 : first_bar + 1);
            e["digest"] = first_bar == std::string::npos ? key : key.substr(0, first_bar);
            e["command"] = second_bar == std::string::npos
                               ? ""
                               : key.substr(first_bar + 1, second_bar - first_bar - 1);
            e["file"] = filename.is_string() ? filename.get<std::string>() : "";
            e["key"] = key;
            entries.push_back(std::move(e));
        }
    }
    results["entry_count"] = entries.size();
    results["entries"] = std::move(entries);
    ordered_json report =
        make_report("atlas", nullptr, std::move(results), ordered_json::array(), std::nullopt);
    emit_report(report_to_bytes(report), common, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact finite-conjugate structure computations for finite-dimensional algebras"};
    app.require_subcommand(1);

    CommonOpts common;
    CommandArgs cargs;

    add_common(app.add_subcommand("validate", "load, validate, and echo the algebra description"),
               common);
    add_common(app.add_subcommand("radical", "Jacobson radical with ideal and quotient checks"),
               common);
    add_common(app.add_subcommand("center", "center and commutativity witness"), common);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "minimal polynomial, nilpotence, unipotence, torsion");
    classify_cmd->add_option("element", cargs.element, "named element to classify")->required();
    add_common(classify_cmd, common);

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "primary idempotent decomposition of F[g]");
    decompose_cmd->add_option("element", cargs.element, "named element to decompose")->required();
    add_common(decompose_cmd, common);

    add_common(app.add_subcommand("units", "enumerate the unit group with conjugacy data"),
               common);
    add_common(app.add_subcommand(
                   "fc", "finite-conjugate subgroup and subring computed from the definitions"),
               common);
    add_common(app.add_subcommand("series",
                                  "derived and lower central series with gated theorem checks"),
               common);

    CLI::App* omega_cmd =
        app.add_subcommand("omega", "count annihilators 1-h of the commutator [x,y]");
    omega_cmd->add_option("subset", cargs.subset, "'units' or 'group'")->required();
    omega_cmd->add_option("x", cargs.x_name, "first named element")->required();
    omega_cmd->add_option("y", cargs.y_name, "second named element")->required();
    add_common(omega_cmd, common);

    CLI::App* witnesses_cmd =
        app.add_subcommand("witnesses", "distinct conjugates of a under shifted units g - s");
    witnesses_cmd->add_option("a", cargs.a_name, "named element to conjugate")->required();
    witnesses_cmd->add_option("g", cargs.g_name, "named unit supplying the shifts")->required();
    witnesses_cmd->add_option("k", cargs.k, "how many conjugates to produce")->required();
    witnesses_cmd->add_option("--shifts", cargs.shifts_csv,
                              "comma-separated explicit shifts (overrides the enumerated ones)");
    add_common(witnesses_cmd, common);

    CLI::App* sandwich_cmd = app.add_subcommand(
        "sandwich", "bound the finite-conjugate subring between center and a centralizer");
    sandwich_cmd->add_option("--sample", cargs.sample_csv,
                             "comma-separated named units to add to the default sample");
    add_common(sandwich_cmd, common);

    CLI::App* atlas_cmd = app.add_subcommand("atlas", "list the stored atlas entries");
    atlas_cmd->add_option("--atlas-dir", common.atlas_dir, "atlas directory (default ./atlas)");
    atlas_cmd->add_option("--out", common.out_path,
                          "write the listing to this file instead of standard output");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("fcalg");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (std::string& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "atlas") return run_atlas_command(common, out);
        return run_compute_command(command, common, cargs, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.klass() == ErrorClass::input ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: internal_error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fcalg
