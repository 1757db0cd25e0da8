#include "pfaff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "pfaff/criteria.hpp"
#include "pfaff/models.hpp"
#include "pfaff/parser.hpp"
#include "pfaff/printer.hpp"

namespace pfaff::cli {

namespace {

using nlohmann::json;

uint64_t default_seed() {
    const char* env = std::getenv("PFAFF_SEED");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw std::invalid_argument("PFAFF_SEED must be an unsigned integer");
    return static_cast<uint64_t>(v);
}

json point_json(const ComplexPoint& z) {
    json coords = json::array();
    for (const auto& c : z.coordinates) coords.push_back(json::array({c.real(), c.imag()}));
    return coords;
}

json make_report(const std::string& command, json inputs, json verdict, json witness) {
    json r;
    r["schema"] = kReportSchema;
    r["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    r["verdict"] = std::move(verdict);
    r["witness"] = std::move(witness);
    return r;
}

int emit(std::ostream& out, const json& report, bool ok) {
    out << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

std::vector<uint32_t> parse_ell(const std::string& text) {
    std::vector<uint32_t> ell;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size() || v == 0) throw std::invalid_argument("--ell expects positive integers like 1,2,3");
        ell.push_back(static_cast<uint32_t>(v));
    }
    if (ell.empty()) throw std::invalid_argument("--ell expects positive integers like 1,2,3");
    return ell;
}

struct Options {
    uint32_t n = 0;
    uint32_t m = 0;
    std::string form, surface, point, p_src, q_src, nu_src, ell, t_src;
    std::string from_file, to_file, matrix_file;
    double radius = 1.0;
    double tol = 1e-9;
    double clearance = 1e-6;
    uint64_t samples = 1024;
    uint64_t path_samples = 129;
    uint64_t seed = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    try {
        opt.seed = default_seed();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"exact checks for polynomial one-forms: integrability, invariant hypersurfaces, "
                 "sphere transversality, isotropic rank certificates and skew-matrix homotopies"};
    app.name(kToolName);

    auto* check = app.add_subcommand("check", "run a verification check");
    check->require_subcommand(1);

    auto* c_int = check->add_subcommand("integrable", "Frobenius integrability: is w ^ dw == 0?");
    c_int->add_option("--n", opt.n, "ambient dimension")->required();
    c_int->add_option("--form", opt.form, "one-form expression")->required();

    auto* c_inv = check->add_subcommand("invariant", "is {f=0} invariant for Ker(w)?");
    c_inv->add_option("--n", opt.n, "ambient dimension")->required();
    c_inv->add_option("--form", opt.form, "one-form expression")->required();
    c_inv->add_option("--surface", opt.surface, "hypersurface equation f")->required();

    auto* c_rad = check->add_subcommand("radial", "does w annihilate the radial field?");
    c_rad->add_option("--n", opt.n, "ambient dimension")->required();
    c_rad->add_option("--form", opt.form, "one-form expression")->required();

    auto* c_tra = check->add_subcommand("transversal", "sample sphere tangencies of Ker(w)");
    c_tra->add_option("--n", opt.n, "ambient dimension")->required();
    c_tra->add_option("--form", opt.form, "one-form expression")->required();
    c_tra->add_option("--radius", opt.radius, "sphere radius (default 1)");
    c_tra->add_option("--samples", opt.samples, "sample count (default 1024)");
    c_tra->add_option("--seed", opt.seed, "sampling seed (default PFAFF_SEED or 0)");
    c_tra->add_option("--tol", opt.tol, "tangency tolerance on normalized minors (default 1e-9)");

    auto* c_sim = check->add_subcommand("simple-sing", "is p a simple singularity of w?");
    c_sim->add_option("--n", opt.n, "ambient dimension")->required();
    c_sim->add_option("--form", opt.form, "one-form expression")->required();
    c_sim->add_option("--point", opt.point, "exact singular point, e.g. \"0,0,0,0\"")->required();

    auto* c_iso = check->add_subcommand("isotropic", "rank certificate for d(w) at a point");
    c_iso->add_option("--n", opt.n, "ambient dimension")->required();
    c_iso->add_option("--form", opt.form, "one-form expression")->required();
    c_iso->add_option("--point", opt.point, "exact point")->required();

    auto* c_dar = check->add_subcommand("darboux", "is w == P dQ - Q dP?");
    c_dar->add_option("--n", opt.n, "ambient dimension")->required();
    c_dar->add_option("--form", opt.form, "one-form expression")->required();
    c_dar->add_option("--P", opt.p_src, "polynomial P")->required();
    c_dar->add_option("--Q", opt.q_src, "polynomial Q")->required();

    auto* gen = app.add_subcommand("gen", "generate model objects");
    gen->require_subcommand(1);

    auto* g_j = gen->add_subcommand("J", "block-diagonal skew matrix J(2m) and its one-form");
    g_j->add_option("--m", opt.m, "half size")->required();

    auto* g_pd = gen->add_subcommand("pd", "normal-form pair (omega, xi) for exponents ell");
    g_pd->add_option("--ell", opt.ell, "comma-separated positive exponents")->required();

    auto* g_rem = gen->add_subcommand("remark", "df + f*nu with f = (1/2) sum z_j^2");
    g_rem->add_option("--m", opt.m, "half dimension (ambient n = 2m)")->required();
    g_rem->add_option("--nu", opt.nu_src, "one-form nu with d(nu)(0) nondegenerate")->required();

    auto* pf = app.add_subcommand("pfaffian", "exact Pfaffian and determinant of a skew matrix");
    pf->add_option("--matrix", opt.matrix_file, "JSON matrix file")->required();

    auto* path = app.add_subcommand("path", "nonsingular pencil path between skew matrices");
    path->add_option("--from", opt.from_file, "JSON matrix file")->required();
    path->add_option("--to", opt.to_file, "JSON matrix file")->required();
    path->add_option("--clearance", opt.clearance, "lower bound for |det| on the path")->required();
    path->add_option("--samples", opt.path_samples, "number of waypoints (default 129)");

    auto* deform = app.add_subcommand("deform", "radial rescaling family t^{-1} w(tz)");
    deform->add_option("--n", opt.n, "ambient dimension")->required();
    deform->add_option("--form", opt.form, "one-form expression")->required();
    deform->add_option("--t", opt.t_src, "exact parameter value, e.g. \"1/2\"")->required();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_int->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            auto [obstruction, integrable] = integrability_obstruction(w);
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}};
            json witness{{"obstruction", print_canonical(obstruction)}};
            return emit(out, make_report("check integrable", inputs, integrable, witness), integrable);
        }
        if (c_inv->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            Polynomial f = parse_polynomial(opt.surface, opt.n);
            SquarefreeVerdict probe = squarefree_probe(f, 8, opt.seed);
            if (probe == SquarefreeVerdict::not_reduced)
                err << "warning: surface fails the squarefree probe; the invariance criterion "
                       "assumes a reduced equation\n";
            bool invariant = invariant_hypersurface(w, f);
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}, {"surface", print_canonical(f)}};
            json witness{{"surface_squarefree_probe",
                          probe == SquarefreeVerdict::probably_reduced ? "probably-reduced" : "not-reduced"}};
            return emit(out, make_report("check invariant", inputs, invariant, witness), invariant);
        }
        if (c_rad->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            Polynomial contraction = contract(w, radial_field(opt.n)).scalar();
            bool annihilates = contraction.is_zero();
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}};
            json witness{{"contraction", print_canonical(contraction)}};
            return emit(out, make_report("check radial", inputs, annihilates, witness), annihilates);
        }
        if (c_tra->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            TransversalityReport rep = transversality_sample(w, opt.radius, opt.samples, opt.seed, opt.tol);
            bool ok = rep.transversal_everywhere() && rep.dimension_parity_ok;
            json tangent = json::array(), singular = json::array();
            for (const auto& z : rep.tangent_points) tangent.push_back(point_json(z));
            for (const auto& z : rep.singular_points) singular.push_back(point_json(z));
            json inputs{{"n", opt.n},      {"form", print_canonical(w)}, {"radius", opt.radius},
                        {"samples", opt.samples}, {"seed", opt.seed},    {"tol", opt.tol}};
            json witness{{"tangent_points", tangent},
                         {"singular_points", singular},
                         {"min_margin", rep.min_margin},
                         {"dimension_parity_ok", rep.dimension_parity_ok}};
            return emit(out, make_report("check transversal", inputs, ok, witness), ok);
        }
        if (c_sim->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            std::vector<GaussianRational> p = parse_exact_point(opt.point, opt.n);
            bool simple = simple_singularity(w, p);
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}, {"point", opt.point}};
            return emit(out, make_report("check simple-sing", inputs, simple, nullptr), simple);
        }
        if (c_iso->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            std::vector<GaussianRational> p = parse_exact_point(opt.point, opt.n);
            Certificate cert = isotropic_dim_bound(w, p);
            bool fires = cert.kind == Certificate::Kind::no_integral_hypersurface;
            std::string kind = fires ? "no-integral-hypersurface" : "not-applicable";
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}, {"point", opt.point}};
            json witness{{"kind", kind},
                         {"rank_at_point", cert.rank_at_point},
                         {"dim_bound", cert.dim_bound}};
            return emit(out, make_report("check isotropic", inputs, kind, witness), fires);
        }
        if (c_dar->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            Polynomial p = parse_polynomial(opt.p_src, opt.n);
            Polynomial q = parse_polynomial(opt.q_src, opt.n);
            bool matches = darboux_form_check(w, p, q);
            json inputs{{"n", opt.n},
                        {"form", print_canonical(w)},
                        {"P", print_canonical(p)},
                        {"Q", print_canonical(q)}};
            return emit(out, make_report("check darboux", inputs, matches, nullptr), matches);
        }
        if (g_j->parsed()) {
            SkewMatrix j = canonical_j(opt.m);
            json inputs{{"m", opt.m}};
            json witness{{"matrix", json::parse(skew_matrix_to_json(j))},
                         {"omega", print_canonical(omega_from_skew(j))}};
            return emit(out, make_report("gen J", inputs, "ok", witness), true);
        }
        if (g_pd->parsed()) {
            std::vector<uint32_t> ell = parse_ell(opt.ell);
            PoincareDulacPair pair = poincare_dulac(ell);
            Polynomial contraction = contract(pair.omega, pair.xi).scalar();
            json inputs{{"ell", opt.ell}};
            json witness{{"omega", print_canonical(pair.omega)},
                         {"xi", print_canonical(pair.xi)},
                         {"contraction", print_canonical(contraction)}};
            return emit(out, make_report("gen pd", inputs, "ok", witness), true);
        }
        if (g_rem->parsed()) {
            KForm nu = parse_one_form(opt.nu_src, 2 * opt.m);
            KForm w = invariant_quadric_form(nu, opt.m);
            json inputs{{"m", opt.m}, {"nu", print_canonical(nu)}};
            json witness{{"omega", print_canonical(w)},
                         {"surface", print_canonical(half_sum_of_squares(opt.m))}};
            return emit(out, make_report("gen remark", inputs, "ok", witness), true);
        }
        if (pf->parsed()) {
            SkewMatrix a = load_skew_matrix(opt.matrix_file);
            GaussianRational p = pfaffian(a);
            GaussianRational d = det_bareiss(a.entries());
            json inputs{{"matrix", opt.matrix_file}, {"m", a.size() / 2}};
            json witness{{"pfaffian", print_canonical(p)},
                         {"determinant", print_canonical(d)},
                         {"pfaffian_squared_equals_det", p * p == d}};
            return emit(out, make_report("pfaffian", inputs, "ok", witness), true);
        }
        if (path->parsed()) {
            SkewMatrix a = load_skew_matrix(opt.from_file);
            SkewMatrix b = load_skew_matrix(opt.to_file);
            PathPlan plan = skew_path(a, b, opt.clearance, opt.path_samples);
            json waypoints = json::array();
            for (const auto& s : plan.waypoints) waypoints.push_back(json::array({s.real(), s.imag()}));
            double min_abs = *std::min_element(plan.abs_p.begin(), plan.abs_p.end());
            json inputs{{"from", opt.from_file},
                        {"to", opt.to_file},
                        {"clearance", opt.clearance},
                        {"samples", opt.path_samples}};
            json witness{{"waypoints", waypoints}, {"abs_p", plan.abs_p}, {"min_abs_p", min_abs}};
            return emit(out, make_report("path", inputs, "ok", witness), true);
        }
        if (deform->parsed()) {
            KForm w = parse_one_form(opt.form, opt.n);
            GaussianRational t = parse_gaussian_rational(opt.t_src);
            DeformationFamily family = radial_deformation(w);
            json comps = json::array();
            for (const auto& [nu, part] : family.components())
                comps.push_back(json::array({nu, print_canonical(part)}));
            json inputs{{"n", opt.n}, {"form", print_canonical(w)}, {"t", print_canonical(t)}};
            json witness{{"components", comps}, {"value_at_t", print_canonical(family.evaluate_at(t))}};
            return emit(out, make_report("deform", inputs, "ok", witness), true);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no command selected\n" << app.help() << "\n";
    return 2;
}

}  // namespace pfaff::cli
