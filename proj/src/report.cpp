#include "sixlines/report.hpp"

#include "sixlines/isogeny.hpp"

namespace sixlines {

namespace {

Rational parse_rational(const json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        if (auto r = Rational::parse(v.get<std::string>())) return *r;
    }
    throw RequestError(std::string(what) + ": expected an integer or a rational string");
}

json result_entry(const char* status, json value) {
    return json{{"status", status}, {"value", std::move(value)}};
}

json check_results(const std::vector<verify::CheckResult>& checks) {
    json out = json::object();
    for (const auto& c : checks) {
        json e{{"status", c.passed ? "pass" : "fail"}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        out[c.name] = std::move(e);
    }
    return out;
}

json stratum_to_json(const Stratum& s) {
    json out;
    out["case"] = stratum_name(s.status);
    out["vanishing_t_indices"] = s.vanishing_t_indices;
    out["r_is_zero"] = s.r_is_zero;
    if (s.status == StratumCase::FourConcurrentOrDoubleLine)
        out["double_line"] = s.has_double_line;
    return out;
}

json config_echo(const Configuration& c) {
    json lines = json::array();
    for (const auto& l : c.lines)
        lines.push_back({l.coeffs[0].str(), l.coeffs[1].str(), l.coeffs[2].str()});
    json out{{"lines", lines}};
    if (c.moduli) {
        json m = json::array();
        for (const auto& v : c.moduli->abcd) m.push_back(v.str());
        out["moduli"] = m;
    }
    if (c.rosenhain) {
        json m = json::array();
        for (const auto& v : c.rosenhain->lambda) m.push_back(v.str());
        out["rosenhain"] = m;
    }
    return out;
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

json quadext_to_json(const QuadExt& v) {
    if (v.is_rational()) return v.base().str();
    return json{{"base", v.base().str()},
                {"coeff", v.coeff().str()},
                {"D", v.radicand()}};
}

template <class K>
json poly_to_json(const Poly<K>& p) {
    json out = json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        if constexpr (std::is_same_v<K, Rational>)
            out.push_back(rational_to_json(p.coeff(i)));
        else
            out.push_back(quadext_to_json(p.coeff(i)));
    }
    return out;
}
template json poly_to_json(const Poly<Rational>&);
template json poly_to_json(const Poly<QuadExt>&);

Configuration configuration_from_json(const json& input) {
    if (!input.is_object()) throw RequestError("input: expected an object");
    int sources = int(input.contains("lines")) + int(input.contains("moduli")) +
                  int(input.contains("rosenhain"));
    if (sources != 1)
        throw RequestError("input: exactly one of lines | moduli | rosenhain required");
    for (const auto& [key, _] : input.items())
        if (key != "lines" && key != "moduli" && key != "rosenhain")
            throw RequestError("input: unknown field '" + key + "'");
    if (input.contains("moduli")) {
        const auto& m = input["moduli"];
        if (!m.is_array() || m.size() != 4) throw RequestError("moduli: expected four rationals");
        return from_moduli(parse_rational(m[0], "moduli"), parse_rational(m[1], "moduli"),
                           parse_rational(m[2], "moduli"), parse_rational(m[3], "moduli"));
    }
    if (input.contains("rosenhain")) {
        const auto& m = input["rosenhain"];
        if (!m.is_array() || m.size() != 3)
            throw RequestError("rosenhain: expected three rationals");
        return from_rosenhain(parse_rational(m[0], "rosenhain"),
                              parse_rational(m[1], "rosenhain"),
                              parse_rational(m[2], "rosenhain"));
    }
    const auto& ls = input["lines"];
    if (!ls.is_array() || ls.size() != 6) throw RequestError("lines: expected six lines");
    std::array<Line, 6> lines;
    for (int i = 0; i < 6; ++i) {
        const auto& l = ls[i];
        if (!l.is_array() || l.size() != 3)
            throw RequestError("lines: each line needs three coefficients");
        lines[i] = Line{{parse_rational(l[0], "lines"), parse_rational(l[1], "lines"),
                         parse_rational(l[2], "lines")}};
    }
    return from_lines(lines);
}

json invariants_report(const Configuration& c) {
    json rep{{"schema", kSchemaTag}, {"input", config_echo(c)}};
    json res = json::object();

    DOCoordinates d = do_coordinates(c);
    json tv = json::array();
    for (const auto& t : d.t) tv.push_back(t.str());
    res["t_coordinates"] = result_entry("info", tv);
    res["r_coordinate"] = result_entry("info", d.r.str());

    RelationReport rr = verify_relations(d);
    res["plucker_relations"] = result_entry(rr.all_ok() ? "pass" : "fail",
                                            json{{"linear_ok", rr.linear_ok},
                                                 {"r_identity_ok", rr.r_identity_ok}});

    SatakeCoordinates x = satake_from_t(d.t);
    json xv = json::array();
    for (const auto& xi : x.x) xv.push_back(xi.str());
    res["satake_coordinates"] = result_entry("info", xv);

    JInvariants j = j_invariants(x);
    res["j_invariants"] = result_entry(
        "info", json{j.j2.str(), j.j3.str(), j.j4.str(), j.j5.str(), j.j6.str()});

    SatakeSextic sx = satake_sextic(j);
    res["satake_sextic"] = result_entry("info", json{{"A", poly_to_json(sx.a)},
                                                     {"B", poly_to_json(sx.b)},
                                                     {"S", poly_to_json(sx.s)}});

    DerivedInvariants dv = derived_invariants(j);
    res["derived_invariants"] = result_entry("info", json{{"disc_A", dv.disc_a.str()},
                                                          {"res_AB", dv.res_ab.str()},
                                                          {"disc_S", dv.disc_s.str()}});

    StratumFlags f = stratum_from_invariants(j, dv);
    res["stratum_flags"] = result_entry("info", json{{"valid", f.valid},
                                                     {"tangent", f.tangent},
                                                     {"concurrent", f.concurrent},
                                                     {"cases34", f.cases34},
                                                     {"case5", f.case5},
                                                     {"disc_s_zero", f.disc_s_zero}});
    res["stratum"] = result_entry("info", stratum_to_json(classify(c)));
    res["discriminant_components"] = result_entry("info", discriminant_components(d));
    rep["results"] = std::move(res);
    return rep;
}

json classify_report(const Configuration& c) {
    json rep{{"schema", kSchemaTag}, {"input", config_echo(c)}};
    json res = json::object();
    res["stratum"] = result_entry("info", stratum_to_json(classify(c)));
    DOCoordinates d = do_coordinates(c);
    res["discriminant_components"] = result_entry("info", discriminant_components(d));
    RelationReport rr = verify_relations(d);
    res["plucker_relations"] = result_entry(rr.all_ok() ? "pass" : "fail",
                                            json{{"linear_ok", rr.linear_ok},
                                                 {"r_identity_ok", rr.r_identity_ok}});
    rep["results"] = std::move(res);
    return rep;
}

namespace {

template <class K>
json fiber_report_json(const FiberReport<K>& rep) {
    json fibs = json::array();
    for (const auto& f : rep.fibers) {
        json e{{"type", f.type.name()}, {"count", f.count}};
        if (f.place)
            e["place"] = poly_to_json(*f.place);
        else
            e["place"] = "infinity";
        fibs.push_back(std::move(e));
    }
    return json{{"fibers", fibs},
                {"euler_sum", rep.euler_sum},
                {"two_torsion_order", rep.two_torsion_order}};
}

template <class K>
json model_json(const WeierstrassModel<K>& m) {
    return json{{"a2", poly_to_json(m.a2)},
                {"a4", poly_to_json(m.a4)},
                {"a6", poly_to_json(m.a6)},
                {"label", fibration_label_name(m.label)}};
}

template <class K>
json fibration_result(const WeierstrassModel<K>& m) {
    json res = json::object();
    res["model"] = result_entry("info", model_json(m));
    auto rep = kodaira_classify(m);
    res["fibers"] = result_entry("info", fiber_report_json(rep));
    res["euler_audit"] =
        result_entry(rep.euler_sum == 24 ? "pass" : "fail", rep.euler_sum);
    return res;
}

}  // namespace

json fibration_report(FibrationLabel label, const Configuration& c) {
    json rep{{"schema", kSchemaTag},
             {"input", config_echo(c)},
             {"model_label", fibration_label_name(label)}};
    switch (label) {
        case FibrationLabel::Natural:
        case FibrationLabel::NaturalDual: {
            if (!c.moduli)
                throw RequestError(
                    "fibration: the natural fibrations need a moduli-form configuration");
            const auto& m = c.moduli->abcd;
            auto model = label == FibrationLabel::Natural
                             ? natural_fibration(m[0], m[1], m[2], m[3])
                             : natural_bfdual(m[0], m[1], m[2], m[3]);
            rep["results"] = fibration_result(model);
            return rep;
        }
        case FibrationLabel::YAlternate: {
            rep["results"] = fibration_result(y_alternate(j_invariants_of(c)));
            return rep;
        }
        default: {
            // X-side models go through the solved quartic parameters
            json out = fibration_report(label, solve_params(j_invariants_of(c)));
            out["input"]["configuration"] = config_echo(c);
            return out;
        }
    }
}

json fibration_report(FibrationLabel label, const SolvedParams& params) {
    json rep{{"schema", kSchemaTag}, {"model_label", fibration_label_name(label)}};
    auto run = [&](const auto& p) {
        switch (label) {
            case FibrationLabel::XStandard: return fibration_result(x_standard(p));
            case FibrationLabel::XAlternate: return fibration_result(x_alternate(p));
            case FibrationLabel::XAlternateDual:
                return fibration_result(x_alternate_bfdual(p));
            default:
                throw RequestError("fibration: model needs a configuration, not parameters");
        }
    };
    if (auto* pr = std::get_if<SexticParams<Rational>>(&params)) {
        rep["input"] = json{{"params",
                             {pr->alpha.str(), pr->beta.str(), pr->gamma.str(), pr->delta.str(),
                              pr->epsilon.str(), pr->zeta.str()}}};
        rep["results"] = run(*pr);
    } else {
        const auto& pe = std::get<SexticParams<QuadExt>>(params);
        rep["input"] = json{{"params",
                             {quadext_to_json(pe.alpha), quadext_to_json(pe.beta),
                              quadext_to_json(pe.gamma), quadext_to_json(pe.delta),
                              quadext_to_json(pe.epsilon), quadext_to_json(pe.zeta)}}};
        rep["results"] = run(pe);
    }
    return rep;
}

json params_report(const Configuration& c) {
    json rep{{"schema", kSchemaTag}, {"input", config_echo(c)}};
    JInvariants j = j_invariants_of(c);
    json res = json::object();
    res["j_invariants"] = result_entry(
        "info", json{j.j2.str(), j.j3.str(), j.j4.str(), j.j5.str(), j.j6.str()});
    auto solved = solve_params(j);
    json pv;
    bool match;
    if (auto* pr = std::get_if<SexticParams<Rational>>(&solved)) {
        pv = json{{"alpha", pr->alpha.str()},     {"beta", pr->beta.str()},
                  {"gamma", pr->gamma.str()},     {"delta", pr->delta.str()},
                  {"epsilon", pr->epsilon.str()}, {"zeta", pr->zeta.str()}};
        match = weighted_equal(moduli_match(*pr), j.as_weighted_point());
    } else {
        const auto& pe = std::get<SexticParams<QuadExt>>(solved);
        pv = json{{"alpha", quadext_to_json(pe.alpha)},     {"beta", quadext_to_json(pe.beta)},
                  {"gamma", quadext_to_json(pe.gamma)},     {"delta", quadext_to_json(pe.delta)},
                  {"epsilon", quadext_to_json(pe.epsilon)}, {"zeta", quadext_to_json(pe.zeta)},
                  {"radicand", pe.zeta.radicand() != 0 ? pe.zeta.radicand()
                                                       : pe.delta.radicand()}};
        match = weighted_equal(moduli_match(pe), promote(j.as_weighted_point()));
    }
    res["params"] = result_entry("info", pv);
    res["moduli_match"] = result_entry(match ? "pass" : "fail", match);
    rep["results"] = std::move(res);
    return rep;
}

json isogeny_report() {
    json rep{{"schema", kSchemaTag}, {"input", json::object()}};
    IsogenyCertificate cert = verify_isogeny_symbolic();
    json res = json::object();
    auto put = [&](const char* name, bool ok) {
        res[name] = json{{"status", ok ? "pass" : "fail"}};
    };
    put("involution_x_on_model", cert.involution_x_on_model);
    put("involution_x_involutive", cert.involution_x_involutive);
    put("involution_x_fixed_locus", cert.involution_x_fixed_locus);
    put("phi_hat_image_on_y_model", cert.phi_hat_image_on_y_model);
    put("phi_hat_invariant_under_involution", cert.phi_hat_invariant_under_involution);
    put("involution_y_on_model", cert.involution_y_on_model);
    put("involution_y_involutive", cert.involution_y_involutive);
    put("phi_image_on_x_model", cert.phi_image_on_x_model);
    put("phi_invariant_under_involution_y", cert.phi_invariant_under_involution_y);
    put("phi_after_phi_hat_is_doubling", cert.phi_after_phi_hat_is_doubling);
    put("phi_hat_after_phi_is_doubling", cert.phi_hat_after_phi_is_doubling);
    rep["results"] = std::move(res);
    return rep;
}

json tangent_report(const Rational& l1, const Rational& l2, const Rational& l3) {
    Configuration c = from_rosenhain(l1, l2, l3);
    json rep{{"schema", kSchemaTag}, {"input", config_echo(c)}};
    json res = json::object();
    auto check = restriction_check(make_rosenhain(l1, l2, l3));
    res["j_invariants"] = result_entry(
        "info", json{check.j.j2.str(), check.j.j3.str(), check.j.j4.str(), check.j.j5.str(),
                     check.j.j6.str()});
    res["igusa_invariants"] = result_entry("info", json{{"I2", check.igusa.i2.str()},
                                                        {"I4", check.igusa.i4.str()},
                                                        {"I6", check.igusa.i6.str()},
                                                        {"I10", check.igusa.i10.str()}});
    res["r_zero"] = result_entry(check.r_zero ? "pass" : "fail", check.r_zero);
    res["j4_zero"] = result_entry(check.j4_zero ? "pass" : "fail", check.j4_zero);
    res["restriction_identity"] =
        result_entry(check.weighted_equal_ok ? "pass" : "fail", check.weighted_equal_ok);
    rep["results"] = std::move(res);
    return rep;
}

json verify_all_report(std::uint64_t seed, int samples_large, int samples_small) {
    json rep{{"schema", kSchemaTag},
             {"input", json{{"seed", seed},
                            {"samples_large", samples_large},
                            {"samples_small", samples_small}}}};
    rep["results"] = check_results(verify::run_all(seed, samples_large, samples_small));
    return rep;
}

bool report_ok(const json& report) {
    if (!report.contains("results")) return false;
    for (const auto& [name, entry] : report["results"].items()) {
        if (!entry.contains("status")) return false;
        const std::string s = entry["status"].get<std::string>();
        if (s == "fail" || s == "error") return false;
    }
    return true;
}

}  // namespace sixlines
