#ifndef EISEN_CLI_HPP
#define EISEN_CLI_HPP

// Command-line front end. Kept in a header so the test suite can drive
// run_cli() in-process; tools/eisen.cpp is a thin main().

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eisenstein.hpp"
#include "errors.hpp"
#include "euler_products.hpp"
#include "root_systems.hpp"
#include "special_functions.hpp"

namespace eisen::cli
{

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, usage = 2, data = 3, numeric = 4 };

/// Parses "a+bi", "a-bi", "a", "bi", "-i" (no spaces). Exponents allowed.
inline Complex parse_complex(const std::string &text)
{
    auto fail = [&]() -> Complex { throw PreconditionError("cannot parse complex number '" + text + "'"); };
    if (text.empty() || text.find(' ') != std::string::npos) {
        return fail();
    }
    auto to_double = [&](const std::string &t, double if_empty) {
        if (t.empty() || t == "+") {
            return if_empty;
        }
        if (t == "-") {
            return -if_empty;
        }
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::logic_error &) {
            fail();
        }
        if (used != t.size()) {
            fail();
        }
        return v;
    };
    if (text.back() != 'i') {
        return {to_double(text, 0), 0};
    }
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not leading and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0, to_double(body, 1)};
    }
    return {to_double(body.substr(0, split), 0), to_double(body.substr(split), 1)};
}

inline std::string format_complex(const Complex &z)
{
    std::ostringstream os;
    os << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
    return os.str();
}

namespace detail
{

inline int exit_code_for(const Error &e)
{
    const std::string kind = e.kind();
    if (kind == "ParseError" || kind == "DataError") {
        return data;
    }
    if (kind == "PoleError" || kind == "OverflowError" || kind == "ConvergenceError" || kind == "ResourceError") {
        return numeric;
    }
    return usage;
}

inline std::string scalar_text(const json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(17) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

inline std::string csv_cell(const json &v)
{
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') {
                q += '"';
            }
        }
        return q + "\"";
    }
    return s;
}

// Scalars as "key: value" lines, rows as a whitespace-aligned table.
inline void emit_text(std::ostream &out, const json &report)
{
    for (const auto &[k, v] : report.items()) {
        if (k == "rows" || k == "config") {
            continue;
        }
        out << k << ": " << scalar_text(v) << '\n';
    }
    if (report.contains("config")) {
        for (const auto &[k, v] : report["config"].items()) {
            out << "config." << k << ": " << scalar_text(v) << '\n';
        }
    }
    if (report.contains("rows") && !report["rows"].empty()) {
        const auto &rows = report["rows"];
        std::vector<std::string> keys;
        for (const auto &[k, v] : rows.front().items()) {
            keys.push_back(k);
        }
        std::vector<std::size_t> width(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
            width[c] = keys[c].size();
            for (const auto &r : rows) {
                width[c] = std::max(width[c], scalar_text(r.value(keys[c], json())).size());
            }
        }
        for (std::size_t c = 0; c < keys.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c]) + 2) << keys[c];
        }
        out << '\n';
        for (const auto &r : rows) {
            for (std::size_t c = 0; c < keys.size(); ++c) {
                out << std::left << std::setw(static_cast<int>(width[c]) + 2) << scalar_text(r.value(keys[c], json()));
            }
            out << '\n';
        }
    }
}

// Rows if present, otherwise the scalar fields as a single row.
inline void emit_csv(std::ostream &out, const json &report)
{
    json rows = json::array();
    if (report.contains("rows")) {
        rows = report["rows"];
    } else {
        json flat = json::object();
        for (const auto &[k, v] : report.items()) {
            if (!v.is_structured()) {
                flat[k] = v;
            }
        }
        rows.push_back(flat);
    }
    if (rows.empty()) {
        return;
    }
    std::vector<std::string> keys;
    for (const auto &[k, v] : rows.front().items()) {
        keys.push_back(k);
    }
    for (std::size_t c = 0; c < keys.size(); ++c) {
        out << (c ? "," : "") << keys[c];
    }
    out << '\n';
    for (const auto &r : rows) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
            const json v = r.value(keys[c], json());
            out << (c ? "," : "") << (v.is_array() ? csv_cell(v.dump()) : csv_cell(v));
        }
        out << '\n';
    }
}

inline void emit(std::ostream &out, const json &report, const std::string &format)
{
    if (format == "json") {
        out << report.dump(2) << '\n';
    } else if (format == "csv") {
        emit_csv(out, report);
    } else {
        emit_text(out, report);
    }
}

inline void put_complex(json &j, const std::string &prefix, const Complex &z)
{
    j[prefix + "_re"] = z.real();
    j[prefix + "_im"] = z.imag();
}

inline std::vector<Complex> reflection_sample(int count, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < count) {
        const Complex s(u(gen), u(gen));
        if (std::abs(s) <= 10 && std::abs(s) >= 0.1 && std::abs(s - 1.0) >= 0.1) {
            out.push_back(s);
        }
    }
    return out;
}

struct Options
{
    std::string format = "text";
    bool verbose = false;
    std::string z = "0+1i";
    std::string fe_z = "0.3+1.4i";
    std::string s;
    std::vector<std::string> s_list;
    std::string method = "both";
    int radius = TruncationPolicy{}.lattice_radius;
    int terms = TruncationPolicy{}.fourier_terms;
    int nodes = TruncationPolicy{}.quadrature_nodes;
    bool extract = false;
    std::string check = "fe";
    int points = 100;
    std::uint64_t seed = 1;
    std::uint64_t max_q = 100000;
    std::string input;
    std::vector<std::string> decompose_args;
    bool table = false;
};

inline TruncationPolicy policy_from(const Options &o)
{
    TruncationPolicy t;
    t.lattice_radius = o.radius;
    t.fourier_terms = o.terms;
    t.quadrature_nodes = o.nodes;
    t.max_fourier_terms = std::max(t.max_fourier_terms, o.terms);
    t.validate();
    return t;
}

inline json config_of(const Options &o, const std::string &command)
{
    json c;
    c["command"] = command;
    c["format"] = o.format;
    c["lattice_radius"] = o.radius;
    c["fourier_terms"] = o.terms;
    c["quadrature_nodes"] = o.nodes;
    c["auto_escalate"] = TruncationPolicy{}.auto_escalate;
    c["target_error"] = TruncationPolicy{}.target_error;
    c["pole_exclusion_radius"] = 1e-6;
    c["max_q"] = o.max_q;
    return c;
}

inline json cmd_eval(const Options &o)
{
    const Complex zc = parse_complex(o.z);
    const HalfPlanePoint z(zc.real(), zc.imag());
    const SpectralParameter s(parse_complex(o.s));
    const TruncationPolicy t = policy_from(o);
    json r;
    r["command"] = "eval";
    r["method"] = o.method;
    put_complex(r, "z", zc);
    put_complex(r, "s", s.value());
    if (o.method == "lattice") {
        const auto e = eval_lattice_sum(z, s, t);
        put_complex(r, "value", e.value);
        r["tail_bound"] = e.tail_bound;
        r["lattice_radius"] = e.terms;
    } else if (o.method == "fourier") {
        const auto e = eval_fourier(z, s, t);
        put_complex(r, "value", e.value);
        r["tail_bound"] = e.tail_bound;
        r["fourier_terms"] = e.terms;
    } else {
        const auto f = eval_fourier(z, s, t);
        put_complex(r, "value", f.value);
        r["tail_bound"] = f.tail_bound;
        r["fourier_terms"] = f.terms;
        // The lattice sum only exists for Re(s) > 1; elsewhere its fields are null.
        if (s.value().real() > 1) {
            const auto l = eval_lattice_sum(z, s, t);
            put_complex(r, "lattice_value", l.value);
            r["lattice_tail_bound"] = l.tail_bound;
            r["lattice_radius"] = l.terms;
            r["discrepancy"] = std::abs(f.value - l.value);
        } else {
            r["lattice_value_re"] = nullptr;
            r["lattice_value_im"] = nullptr;
            r["lattice_tail_bound"] = nullptr;
            r["lattice_radius"] = nullptr;
            r["discrepancy"] = nullptr;
        }
    }
    return r;
}

inline json cmd_fourier(const Options &o)
{
    const Complex zc = parse_complex(o.z);
    const HalfPlanePoint z(zc.real(), zc.imag());
    const SpectralParameter s(parse_complex(o.s));
    const TruncationPolicy t = policy_from(o);
    json r;
    r["command"] = "fourier";
    r["y"] = z.y();
    put_complex(r, "s", s.value());
    json rows = json::array();
    double max_err = 0;
    for (int n = 0; n <= o.terms; ++n) {
        json row;
        row["n"] = n;
        const Complex a = fourier_coefficient(n, z.y(), s);
        put_complex(row, "a", a);
        if (o.extract) {
            const Complex q = extract_coefficient_by_quadrature(n, z.y(), s, t);
            put_complex(row, "quadrature", q);
            row["difference"] = std::abs(q - a);
            max_err = std::max(max_err, std::abs(q - a));
        }
        rows.push_back(row);
    }
    if (o.extract) {
        r["max_difference"] = max_err;
    }
    r["rows"] = rows;
    return r;
}

inline json cmd_fe_check(const Options &o)
{
    json r;
    r["command"] = "fe-check";
    r["check"] = o.check;
    std::vector<Complex> grid;
    if (!o.s_list.empty()) {
        for (const auto &text : o.s_list) {
            grid.push_back(parse_complex(text));
        }
    } else if (o.check == "xi") {
        grid = reflection_sample(o.points, o.seed);
    } else {
        grid = default_fe_grid();
    }
    const Complex zc = parse_complex(o.fe_z);
    const HalfPlanePoint z(zc.real(), zc.imag());
    const TruncationPolicy t = policy_from(o);
    if (o.check == "fe") {
        put_complex(r, "z", zc);
    }

    json rows = json::array();
    double max_defect = 0;
    int computed = 0;
    int skipped = 0;
    for (const Complex &s : grid) {
        json row;
        put_complex(row, "s", s);
        try {
            double d = 0;
            if (o.check == "xi") {
                d = std::abs(xi_completed(s) - xi_completed(1.0 - s));
            } else if (o.check == "first") {
                d = first_coefficient_xi_check(s);
            } else {
                d = functional_equation_defect(z, SpectralParameter(s), t);
            }
            row["status"] = "ok";
            row["defect"] = d;
            max_defect = std::max(max_defect, d);
            ++computed;
        } catch (const PoleError &e) {
            row["status"] = "skipped-pole";
            row["defect"] = nullptr;
            row["message"] = e.what();
            ++skipped;
        } catch (const Error &e) {
            row["status"] = "error";
            row["defect"] = nullptr;
            row["message"] = e.what();
            ++skipped;
        }
        if (!row.contains("message")) {
            row["message"] = "";
        }
        rows.push_back(row);
    }
    r["points"] = static_cast<int>(grid.size());
    r["computed"] = computed;
    r["skipped"] = skipped;
    r["max_defect"] = max_defect;
    r["rows"] = rows;
    return r;
}

inline json cmd_xi(const Options &o)
{
    const Complex s = parse_complex(o.s);
    const Complex a = xi_completed(s);
    const Complex b = xi_completed(1.0 - s);
    json r;
    r["command"] = "xi";
    put_complex(r, "s", s);
    put_complex(r, "xi", a);
    put_complex(r, "xi_reflected", b);
    r["reflection_defect"] = std::abs(a - b);
    return r;
}

inline json cmd_euler(const Options &o, std::ostream &err)
{
    std::ifstream in(o.input);
    if (!in) {
        throw DataError("cannot open input file '" + o.input + "'");
    }
    const LFunctionData data = parse_places(in);
    const Complex s = parse_complex(o.s);
    const auto res = partial_l(data, s, o.max_q);
    json r;
    r["command"] = "euler";
    r["input"] = o.input;
    put_complex(r, "s", s);
    r["max_q"] = o.max_q;
    put_complex(r, "value", res.value);
    r["factor_count"] = res.factor_count;
    r["tail_estimate"] = res.tail_estimate;
    r["convergence_margin"] = res.convergence_margin;
    r["warnings"] = res.warnings;
    for (const auto &w : res.warnings) {
        err << "warning: " << w << '\n';
    }
    return r;
}

inline std::vector<CartanLabel> standard_table_types()
{
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
            {'C', 3}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}};
}

inline json cmd_decompose(const Options &o)
{
    std::vector<CartanLabel> types;
    if (o.table) {
        types = standard_table_types();
    } else {
        if (o.decompose_args.size() != 2) {
            throw PreconditionError("decompose: expected TYPE RANK or --table");
        }
        const std::string &ty = o.decompose_args[0];
        int rank = 0;
        try {
            std::size_t used = 0;
            rank = std::stoi(o.decompose_args[1], &used);
            if (used != o.decompose_args[1].size()) {
                throw std::invalid_argument("rank");
            }
        } catch (const std::logic_error &) {
            throw PreconditionError("decompose: rank must be an integer");
        }
        if (ty.size() != 1) {
            throw InvalidTypeError("no simple root system of type " + ty + std::to_string(rank));
        }
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(ty[0])));
        if (!is_valid_type(c, rank)) {
            throw InvalidTypeError("no simple root system of type " + ty + std::to_string(rank));
        }
        types.push_back({c, rank});
    }
    json rows = json::array();
    for (const auto &row : enumerate_table(types)) {
        json j;
        j["type"] = std::string(1, row.system.type);
        j["rank"] = row.system.rank;
        j["removed_index"] = row.removed_index;
        j["levi"] = levi_string(row.levi);
        j["m"] = row.m;
        j["dims"] = row.dims;
        j["a"] = row.a;
        rows.push_back(j);
    }
    json r;
    r["command"] = "decompose";
    r["row_count"] = rows.size();
    r["rows"] = rows;
    return r;
}

} // namespace detail

/// Runs one command. Reports go to `out` in the requested format; on failure
/// a structured error record goes to `out` and a one-line message to `err`.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    detail::Options o;
    CLI::App app{"Eisenstein series, completed zeta, Euler products and root-system tables"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_flag("--verbose", o.verbose, "Include the effective configuration");
    };
    auto truncation = [&](CLI::App *sub) {
        sub->add_option("--radius", o.radius, "Lattice radius max(|m|,|n|)");
        sub->add_option("--terms", o.terms, "Fourier terms");
        sub->add_option("--nodes", o.nodes, "Quadrature nodes");
    };

    auto *eval = app.add_subcommand("eval", "Evaluate E(z, s)");
    eval->add_option("--z", o.z, "Point a+bi in the upper half-plane")->required();
    eval->add_option("--s", o.s, "Spectral parameter a+bi")->required();
    eval->add_option("--method", o.method, "lattice, fourier or both")
        ->check(CLI::IsMember({"lattice", "fourier", "both"}));
    truncation(eval);
    common(eval);

    auto *fourier = app.add_subcommand("fourier", "Fourier coefficients a_0..a_N at y = Im z");
    fourier->add_option("--z", o.z, "Point whose imaginary part is y")->required();
    fourier->add_option("--s", o.s, "Spectral parameter")->required();
    fourier->add_flag("--extract", o.extract, "Also extract each a_n by quadrature of the lattice sum");
    truncation(fourier);
    common(fourier);

    auto *fe = app.add_subcommand("fe-check", "Functional-equation sweeps");
    fe->add_option("--check", o.check, "fe, xi or first")->check(CLI::IsMember({"fe", "xi", "first"}));
    fe->add_option("--z", o.fe_z, "Point for the fe check");
    fe->add_option("--s", o.s_list, "Explicit grid point (repeatable)");
    fe->add_option("--points", o.points, "Sample size for --check xi");
    fe->add_option("--seed", o.seed, "Seed for --check xi");
    truncation(fe);
    common(fe);

    auto *xi = app.add_subcommand("xi", "Completed zeta and its reflection defect");
    xi->add_option("--s", o.s, "Argument")->required();
    common(xi);

    auto *euler = app.add_subcommand("euler", "Partial L-function from place data");
    euler->add_option("--input", o.input, "Place-data file")->required();
    euler->add_option("--s", o.s, "Argument")->required();
    euler->add_option("--max-q", o.max_q, "Largest residue-field size included");
    common(euler);

    auto *decompose = app.add_subcommand("decompose", "Nilradical gradings of maximal parabolics");
    decompose->add_option("type_rank", o.decompose_args, "TYPE RANK, e.g. G 2")->expected(0, 2);
    decompose->add_flag("--table", o.table, "Standard table of types");
    common(decompose);

    std::string command = "?";
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &) {
            out << app.help();
            return ok;
        } catch (const CLI::ParseError &e) {
            err << "usage error: " << e.what() << '\n';
            return usage;
        }
        json report;
        if (eval->parsed()) {
            command = "eval";
            report = detail::cmd_eval(o);
        } else if (fourier->parsed()) {
            command = "fourier";
            report = detail::cmd_fourier(o);
        } else if (fe->parsed()) {
            command = "fe-check";
            report = detail::cmd_fe_check(o);
        } else if (xi->parsed()) {
            command = "xi";
            report = detail::cmd_xi(o);
        } else if (euler->parsed()) {
            command = "euler";
            report = detail::cmd_euler(o, err);
        } else {
            command = "decompose";
            report = detail::cmd_decompose(o);
        }
        if (o.verbose) {
            report["config"] = detail::config_of(o, command);
        }
        detail::emit(out, report, o.format);
        return ok;
    } catch (const Error &e) {
        const int code = detail::exit_code_for(e);
        json rec;
        rec["command"] = command;
        rec["error"] = {{"type", e.kind()}, {"message", e.what()}};
        rec["exit_code"] = code;
        if (o.format == "json") {
            out << rec.dump(2) << '\n';
        } else {
            out << "error: " << e.kind() << ": " << e.what() << '\n';
        }
        err << e.kind() << ": " << e.what() << '\n';
        return code;
    }
}

} // namespace eisen::cli

#endif
