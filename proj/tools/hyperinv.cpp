// hyperinv: command-line front end for the hyperinv library.
//
//   hyperinv invariants <curve.json> [--numeric] [--tol T]
//   hyperinv classify   <curve.json> [--numeric] [--tol T]
//   hyperinv isomorphic <a.json> <b.json>
//   hyperinv model      [--genus G] --u u1,...,ug [--family NAME] [--w W]
//   hyperinv decompose  <curve.json>
//
// Any curve file may be replaced by --poly "x^8 - 3*x^6 + ..." (repeatable).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperinv/cli.hpp"

namespace {

using namespace hyperinv;

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int emit(const cli::Result& r)
{
    std::cout << cli::render(r);
    if (!r.diagnostic.empty()) std::cerr << "hyperinv: " << r.diagnostic << '\n';
    return r.exit_code;
}

int usage_error(const std::string& command, const std::string& message)
{
    return emit(cli::guarded(command, [&]() -> cli::Result { throw error(errc::parse_error, message); }));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Extra involutions and dihedral invariants of hyperelliptic curves"};
    app.require_subcommand(1);

    cli::Options opt;
    bool json = true;
    std::vector<std::string> files;
    std::vector<std::string> polys;
    std::optional<int> genus;
    std::string u_list;
    std::string family = "generic_v4";
    std::string w;

    auto add_curve_inputs = [&](CLI::App* sub) {
        sub->add_option("files", files, "curve document(s): {\"genus\": g, \"coeffs\": [...]}, low to high degree");
        sub->add_option("--poly", polys, "polynomial text instead of a file, e.g. \"x^6 + 3*x^2 + 1\"");
        sub->add_option("--genus", genus, "genus for --poly input");
        sub->add_flag("--json", json, "JSON output (the only format)");
    };
    auto add_numeric = [&](CLI::App* sub) {
        sub->add_flag("--numeric", opt.numeric, "also run the floating-point involution search");
        sub->add_option("--tol", opt.tol, "relative tolerance for numeric comparisons")->check(CLI::PositiveNumber);
    };

    CLI::App* inv = app.add_subcommand("invariants", "dihedral invariants of a curve");
    add_curve_inputs(inv);
    add_numeric(inv);
    CLI::App* cls = app.add_subcommand("classify", "V4 relations and factor sign");
    add_curve_inputs(cls);
    add_numeric(cls);
    CLI::App* iso = app.add_subcommand("isomorphic", "compare two (curve, involution) pairs");
    add_curve_inputs(iso);
    CLI::App* dec = app.add_subcommand("decompose", "E = G(H) with deg H = 2");
    add_curve_inputs(dec);
    CLI::App* mdl = app.add_subcommand("model", "rational model from invariants");
    mdl->add_option("--genus", genus, "genus (defaults to the number of invariants)");
    mdl->add_option("--u", u_list, "comma-separated invariants u_1,...,u_g");
    mdl->add_option("--family", family, "generic_v4, g2_D8, g2_D12, g2_V4_a, g2_V4_b, g3_aut16, g3_D12, "
                                         "g3_Z2xZ4, g3_Z2cubed");
    mdl->add_option("--w", w, "parameter of g3_aut16");
    mdl->add_flag("--json", json, "JSON output (the only format)");
    add_numeric(mdl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<CurveDocument> docs;
    try {
        if (command != "model") {
            const bool curve = command != "decompose";
            for (const auto& f : files) docs.push_back(read_curve_document(f, curve));
            for (const auto& p : polys) docs.push_back(curve_document_from_text(p, genus, curve));
        }
    } catch (const error& e) {
        return emit(cli::guarded(command, [&]() -> cli::Result { throw e; }));
    }

    const std::size_t wanted = command == "isomorphic" ? 2 : 1;
    if (command != "model" && docs.size() != wanted)
        return usage_error(command, command + " needs " + std::to_string(wanted) + " curve input(s), got " +
                                        std::to_string(docs.size()));

    if (command == "invariants") return emit(cli::cmd_invariants(docs[0], opt));
    if (command == "classify") return emit(cli::cmd_classify(docs[0], opt));
    if (command == "isomorphic") return emit(cli::cmd_isomorphic(docs[0], docs[1]));
    if (command == "decompose") return emit(cli::cmd_decompose(docs[0]));

    return emit(cli::guarded("model", [&] {
        cli::ModelArgs args;
        args.genus = genus;
        args.family = parse_model_family(family);
        if (!u_list.empty()) args.u = parse_rational_list(u_list);
        if (!w.empty()) args.w = Rational::parse(w);
        return cli::cmd_model(args, opt);
    }));
}
