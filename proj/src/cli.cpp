#include "nlbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nlbound/errors.hpp"
#include "nlbound/json_io.hpp"

namespace nlbound {
namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

void emit_error(std::ostream& err, const char* kind, const std::string& message) {
    err << canonical_dump(Json{{"error", kind}, {"message", message}}) << '\n';
}

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ValidationError("not a number: " + s);
    }
    if (used != s.size()) throw ValidationError("not a number: " + s);
    return v;
}

}  // namespace

std::vector<double> parse_T_list(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ValidationError("range must be start:stop:step");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0) || stop < start) throw ValidationError("range needs step > 0 and stop >= start");
        const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
        if (n > 100000) throw ValidationError("range has too many points");
        for (long long k = 0; k <= n; ++k) out.push_back(start + static_cast<double>(k) * step);
    } else {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_number(p));
    }
    if (out.empty()) throw ValidationError("empty T list");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Model algebra for CHSH boxes and the entropy-weighted bound on the CHSH value", "nlbound"};
    app.require_subcommand(1);

    std::string box_path;
    auto* chsh = app.add_subcommand("chsh", "Correlators, CHSH values and no-signaling check of a box");
    chsh->add_option("box", box_path, "Box JSON file")->required();

    std::string method = "both";
    auto* local = app.add_subcommand("local-test", "Local-polytope membership of a box");
    local->add_option("box", box_path, "Box JSON file")->required();
    local->add_option("--method", method, "facets, lp or both")->check(CLI::IsMember({"facets", "lp", "both"}));

    std::string chain_path;
    bool box_only = false;
    auto* wire = app.add_subcommand("wire", "Sequentially compose a chain of boxes");
    wire->add_option("chain", chain_path, "Chain JSON file")->required();
    wire->add_flag("--box-only", box_only, "Print only the composed box");

    std::string position = "first";
    auto* audit = app.add_subcommand("audit", "Wire a box with all 16 deterministic local boxes");
    audit->add_option("box", box_path, "Box JSON file")->required();
    audit->add_option("--position", position, "Where the local box sits: first or second")
        ->check(CLI::IsMember({"first", "second"}));

    double X = 0.0, Y = 2.0;
    DeformationParams params;
    auto* combine = app.add_subcommand("combine", "Combined CHSH limit Z(Y, X)");
    combine->add_option("--X", X, "Upper CHSH limit")->required();
    combine->add_option("--Y", Y, "Lower CHSH limit")->capture_default_str();
    combine->add_option("--T", params.T, "Deformation parameter")->capture_default_str();
    combine->add_option("--quad-order", params.quad_order, "Gauss-Legendre order")->capture_default_str();

    auto* solve = app.add_subcommand("solve", "Solve Z(2, X) = target for X");
    solve->add_option("--T", params.T, "Deformation parameter")->capture_default_str();
    solve->add_option("--target", params.target, "Right-hand side")->capture_default_str();
    solve->add_option("--tol", params.root_tol, "Residual tolerance")->capture_default_str();
    solve->add_option("--quad-order", params.quad_order, "Gauss-Legendre order")->capture_default_str();

    std::string t_list;
    auto* sweep = app.add_subcommand("sweep", "Solve for X_max over several T; CSV output");
    sweep->add_option("--T-list", t_list, "Comma list or start:stop:step")->required();
    sweep->add_option("--target", params.target, "Right-hand side")->capture_default_str();
    sweep->add_option("--tol", params.root_tol, "Residual tolerance")->capture_default_str();
    sweep->add_option("--quad-order", params.quad_order, "Gauss-Legendre order")->capture_default_str();

    long long grid = 1000000;
    auto* idem = app.add_subcommand("idem", "Idempotent (supremum) reading of the combination");
    idem->add_option("--X", X, "Upper CHSH limit")->required();
    idem->add_option("--Y", Y, "Lower CHSH limit")->capture_default_str();
    idem->add_option("--T", params.T, "Deformation parameter")->capture_default_str();
    idem->add_option("--grid", grid, "Grid points in (0, 1)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "validation", e.what());
        return kExitValidation;
    }

    try {
        if (chsh->parsed()) {
            out << canonical_dump(chsh_report_json(box_from_json(read_json_file(box_path)))) << '\n';
        } else if (local->parsed()) {
            const auto box = box_from_json(read_json_file(box_path));
            Json j;
            if (method == "facets") {
                j = locality_report_json(is_local_facets(box));
            } else if (method == "lp") {
                j = locality_report_json(is_local_lp(box));
            } else {
                const auto f = is_local_facets(box);
                const auto l = is_local_lp(box);
                j = Json{{"facets", locality_report_json(f)},
                         {"lp", locality_report_json(l)},
                         {"agree", f.is_local == l.is_local}};
            }
            out << canonical_dump(j) << '\n';
        } else if (wire->parsed()) {
            const auto composed = compose_chain(chain_from_json(read_json_file(chain_path)));
            if (box_only) {
                out << canonical_dump(box_to_json(composed)) << '\n';
            } else {
                out << canonical_dump(Json{{"box", box_to_json(composed)}, {"report", chsh_report_json(composed)}})
                    << '\n';
            }
        } else if (audit->parsed()) {
            const auto box = box_from_json(read_json_file(box_path));
            const auto pos = position == "first" ? StagePosition::first : StagePosition::second;
            out << canonical_dump(audit_json(absorption_audit(box, pos))) << '\n';
        } else if (combine->parsed()) {
            out << canonical_dump(combine_json(combined_chsh(Y, X, params))) << '\n';
        } else if (solve->parsed()) {
            out << canonical_dump(solve_json(solve_xmax(params))) << '\n';
        } else if (sweep->parsed()) {
            DeformationParams shared = params;
            shared.T = 1.0;
            shared.validate();
            const auto rows = sweep_T(parse_T_list(t_list), params);
            out << sweep_csv(rows);
            bool failed = false;
            for (const auto& r : rows) {
                if (!r.result) {
                    failed = true;
                    err << canonical_dump(Json{{"error", "row"}, {"T", r.T}, {"message", r.error}}) << '\n';
                }
            }
            return failed ? kExitNumeric : kExitOk;
        } else if (idem->parsed()) {
            const double sup = idempotent_combined_chsh(Y, X, params.T, grid);
            const auto z = combined_chsh(Y, X, params);
            out << canonical_dump(Json{{"sup", sup},
                                       {"Z", z.Z},
                                       {"X", X},
                                       {"Y", Y},
                                       {"T", params.T},
                                       {"grid", grid}})
                << '\n';
        }
    } catch (const ValidationError& e) {
        emit_error(err, "validation", e.what());
        return kExitValidation;
    } catch (const NumericError& e) {
        emit_error(err, "numeric", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace nlbound
