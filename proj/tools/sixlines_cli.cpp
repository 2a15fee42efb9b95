// Command-line front end: exact-rational JSON in, machine-readable reports out.
// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input, 3 a
// precondition was violated.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sixlines/report.hpp"

namespace {

using sixlines::json;

struct CommonOpts {
    std::string input_path;
    std::vector<std::string> moduli;
    std::vector<std::string> rosenhain;
    std::vector<std::string> params;
    long long radicand = 0;
    std::string output_path;
};

void add_source_flags(CLI::App* cmd, CommonOpts& o, bool with_params = false) {
    cmd->add_option("--input", o.input_path, "JSON request file ('-' for stdin)");
    cmd->add_option("--moduli", o.moduli, "moduli a b c d as rationals")->expected(4);
    cmd->add_option("--rosenhain", o.rosenhain, "Rosenhain parameters l1 l2 l3")->expected(3);
    if (with_params) {
        cmd->add_option("--params", o.params,
                        "quartic parameters alpha beta gamma delta epsilon zeta")
            ->expected(6);
        cmd->add_option("--radicand", o.radicand,
                        "square-free D when parameters live in Q(sqrt(D)); entries then read "
                        "as base,coeff pairs p/q,r/s");
    }
}

json load_input_json(const CommonOpts& o) {
    if (!o.input_path.empty()) {
        json doc;
        try {
            if (o.input_path == "-") {
                doc = json::parse(std::cin);
            } else {
                std::ifstream in(o.input_path);
                if (!in) throw sixlines::RequestError("cannot open " + o.input_path);
                doc = json::parse(in);
            }
        } catch (const json::parse_error& e) {
            throw sixlines::RequestError(std::string("malformed JSON: ") + e.what());
        }
        return doc;
    }
    json doc = json::object();
    if (!o.moduli.empty()) doc["moduli"] = o.moduli;
    if (!o.rosenhain.empty()) doc["rosenhain"] = o.rosenhain;
    return doc;
}

sixlines::Rational parse_rat_arg(const std::string& s, const char* what) {
    if (auto r = sixlines::Rational::parse(s)) return *r;
    throw sixlines::RequestError(std::string(what) + ": cannot parse rational '" + s + "'");
}

sixlines::SolvedParams parse_params(const CommonOpts& o) {
    using namespace sixlines;
    if (o.radicand == 0) {
        std::array<Rational, 6> v;
        for (int i = 0; i < 6; ++i) v[i] = parse_rat_arg(o.params[i], "params");
        return SexticParams<Rational>{v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    std::array<QuadExt, 6> v;
    for (int i = 0; i < 6; ++i) {
        const std::string& s = o.params[i];
        auto comma = s.find(',');
        if (comma == std::string::npos) {
            v[i] = QuadExt(parse_rat_arg(s, "params"));
        } else {
            Rational base = parse_rat_arg(s.substr(0, comma), "params");
            Rational coeff = parse_rat_arg(s.substr(comma + 1), "params");
            v[i] = QuadExt(base, coeff, o.radicand);
        }
    }
    return SexticParams<QuadExt>{v[0], v[1], v[2], v[3], v[4], v[5]};
}

int emit(const json& report, const CommonOpts& o) {
    std::string text = report.dump(2);
    if (!o.output_path.empty()) {
        std::ofstream out(o.output_path);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return sixlines::report_ok(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, Weierstrass models, and identity checks for six-line "
                 "configurations"};
    app.require_subcommand(1);

    CommonOpts inv_o, cls_o, fib_o, iso_o, tan_o, par_o, ver_o;
    std::string model_name;
    std::uint64_t seed = 1;
    int samples = 50;

    auto* inv = app.add_subcommand("invariants", "Dolgachev-Ortland and J-invariants");
    add_source_flags(inv, inv_o);
    inv->add_option("--output", inv_o.output_path, "write the report to a file");

    auto* cls = app.add_subcommand("classify", "degeneration stratum of a configuration");
    add_source_flags(cls, cls_o);
    cls->add_option("--output", cls_o.output_path, "write the report to a file");

    auto* fib = app.add_subcommand("fibration", "Weierstrass model and Kodaira fibers");
    add_source_flags(fib, fib_o, /*with_params=*/true);
    fib->add_option("--model", model_name,
                    "natural | natural-dual | y-alt | x-std | x-alt | x-alt-dual")
        ->required();
    fib->add_option("--output", fib_o.output_path, "write the report to a file");

    auto* iso = app.add_subcommand("isogeny", "symbolic two-isogeny verification");
    iso->add_flag("--verify", "run the full symbolic suite (default)");
    iso->add_option("--output", iso_o.output_path, "write the report to a file");

    auto* tan = app.add_subcommand("tangent", "tangent-to-conic restriction checks");
    add_source_flags(tan, tan_o);
    tan->add_option("--output", tan_o.output_path, "write the report to a file");

    auto* par = app.add_subcommand("params", "quartic parameters from a configuration");
    add_source_flags(par, par_o);
    par->add_flag("--from-config", "solve parameters from the configuration (default)");
    par->add_option("--output", par_o.output_path, "write the report to a file");

    auto* ver = app.add_subcommand("verify-all", "run the complete verification suite");
    ver->add_option("--seed", seed, "base seed for the sampled checks");
    ver->add_option("--samples", samples, "sample count for the sampled checks");
    ver->add_option("--output", ver_o.output_path, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace sixlines;
        if (inv->parsed())
            return emit(invariants_report(configuration_from_json(load_input_json(inv_o))),
                        inv_o);
        if (cls->parsed())
            return emit(classify_report(configuration_from_json(load_input_json(cls_o))), cls_o);
        if (fib->parsed()) {
            auto label = fibration_label_from_name(model_name);
            if (!label) throw RequestError("fibration: unknown model '" + model_name + "'");
            if (!fib_o.params.empty())
                return emit(fibration_report(*label, parse_params(fib_o)), fib_o);
            return emit(fibration_report(*label, configuration_from_json(load_input_json(fib_o))),
                        fib_o);
        }
        if (iso->parsed()) return emit(isogeny_report(), iso_o);
        if (tan->parsed()) {
            json doc = load_input_json(tan_o);
            Configuration c = configuration_from_json(doc);
            if (!c.rosenhain)
                throw RequestError("tangent: a rosenhain source is required");
            const auto& l = c.rosenhain->lambda;
            return emit(tangent_report(l[0], l[1], l[2]), tan_o);
        }
        if (par->parsed())
            return emit(params_report(configuration_from_json(load_input_json(par_o))), par_o);
        if (ver->parsed())
            return emit(verify_all_report(seed, std::max(samples, 200), samples), ver_o);
    } catch (const sixlines::RequestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
