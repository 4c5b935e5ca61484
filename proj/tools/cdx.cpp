// cdx: batch command-line surface over the hypercomplex analysis engine.
// Emits one JSON object per result on stdout; errors go to stderr as
// structured objects with exit code 1, usage problems exit with 2.

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdanalysis/contour.hpp"
#include "cdanalysis/expr.hpp"
#include "cdanalysis/io.hpp"
#include "cdanalysis/qcx.hpp"
#include "cdanalysis/selftest.hpp"
#include "cdanalysis/special.hpp"
#include "cdanalysis/transcend.hpp"
#include "cdanalysis/xform.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    double tol = 1e-10;
    int level = 2;
    std::string kernel = "linear";
    long branch = 0;
    std::string out = "json";
};

cd::CdNumber eval_expr(const std::string& text,
                       const std::map<std::string, cd::CdNumber>& bindings = {}) {
    return cd::Expression::parse(text).eval(bindings);
}

json coeffs_json(const cd::CdNumber& value, int level) {
    cd::CdNumber v = value;
    if (v.level() < level) v = cd::embed(v, level);
    return json(v.coeffs());
}

cd::CdNumber parse_axis(const std::string& text) {
    const cd::CdNumber axis = eval_expr(text);
    if (cd::norm(cd::im(axis)) < 1e-12)
        cd::raise(cd::ErrorKind::UsageError, "axis must be purely imaginary and nonzero");
    return cd::im(axis) / cd::norm(cd::im(axis));
}

std::vector<cd::CdNumber> parse_cd_list(const std::string& text) {
    std::vector<cd::CdNumber> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (!item.empty()) out.push_back(eval_expr(item));
    }
    return out;
}

cd::KernelKind kernel_kind(const GlobalOpts& g) {
    return g.kernel == "spherical" ? cd::KernelKind::spherical : cd::KernelKind::linear;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercomplex analysis engine"};
    app.set_config("--config");
    GlobalOpts g;
    app.add_option("--tol", g.tol, "tolerance handed to every numeric kernel");
    app.add_option("--level", g.level, "algebra level (2 quaternions, 3 octonions)")
        ->check(CLI::Range(1, 3));
    app.add_option("--kernel", g.kernel, "transform kernel")
        ->check(CLI::IsMember({"linear", "spherical"}));
    app.add_option("--branch", g.branch, "logarithm branch index");
    app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.require_subcommand(1);

    // eval
    auto* c_eval = app.add_subcommand("eval", "evaluate an expression");
    std::string eval_expr_text;
    c_eval->add_option("--expr", eval_expr_text, "expression")->required();

    // extend
    auto* c_extend = app.add_subcommand("extend", "evaluate a quasi-conformal extension");
    std::string ext_kind = "power_series", ext_coeffs, ext_rates, ext_at;
    double ext_center = 0.0, ext_radius = 1.0;
    bool ext_spherical = false, ext_direct = false;
    c_extend->add_option("--seed", ext_kind, "seed kind")
        ->check(CLI::IsMember({"power_series", "exp_sum"}));
    c_extend->add_option("--coeffs", ext_coeffs, "comma-separated real coefficients")
        ->required();
    c_extend->add_option("--rates", ext_rates, "comma-separated exponent rates (exp_sum)");
    c_extend->add_option("--center", ext_center, "marked point (real)");
    c_extend->add_option("--radius", ext_radius, "series radius");
    c_extend->add_flag("--spherical", ext_spherical, "spherical coordinates");
    c_extend->add_flag("--direct", ext_direct, "direct series summation route");
    c_extend->add_option("--at", ext_at, "evaluation point expression")->required();

    // integral
    auto* c_integral = app.add_subcommand("integral", "line integral along a path");
    std::string int_f, int_path, int_center = "0", int_axis = "i1", int_order = "right";
    double int_rho = 1.0;
    c_integral->add_option("--f", int_f, "integrand in z")->required();
    c_integral->add_option("--path-json", int_path, "path description file");
    c_integral->add_option("--center", int_center, "circle center expression");
    c_integral->add_option("--axis", int_axis, "circle axis generator");
    c_integral->add_option("--rho", int_rho, "circle radius");
    c_integral->add_option("--order", int_order, "multiplication order")
        ->check(CLI::IsMember({"right", "left"}));

    // residue
    auto* c_res = app.add_subcommand("residue", "residue of f about a point");
    std::string res_f, res_y = "0", res_axis = "i1", res_a;
    double res_rho = 0.5;
    int res_n = 1;
    c_res->add_option("--f", res_f, "integrand in z (y available)")->required();
    c_res->add_option("--y", res_y, "pole location expression");
    c_res->add_option("--axis", res_axis, "residue direction N");
    c_res->add_option("--rho", res_rho, "loop radius");
    c_res->add_option("--n", res_n, "n-residue order");
    c_res->add_option("--a", res_a, "inner coefficients, ';' separated");

    // argn
    auto* c_arg = app.add_subcommand("argn", "argument variation along a loop");
    std::string arg_f, arg_path, arg_center = "0", arg_axis = "i1", arg_a;
    double arg_rho = 1.0;
    c_arg->add_option("--f", arg_f, "function in z")->required();
    c_arg->add_option("--path-json", arg_path, "path description file");
    c_arg->add_option("--center", arg_center, "circle center expression");
    c_arg->add_option("--axis", arg_axis, "circle axis generator");
    c_arg->add_option("--rho", arg_rho, "circle radius");
    c_arg->add_option("--a", arg_a, "inner coefficients, ';' separated");

    // transform
    auto* c_tr = app.add_subcommand("transform", "forward integral transform");
    std::string tr_mode = "laplace", tr_f, tr_p, tr_q = "0";
    double tr_s0 = 0.0, tr_s1 = 1.0, tr_scale = 2.0;
    c_tr->add_option("mode", tr_mode, "laplace | two_sided | mellin")
        ->check(CLI::IsMember({"laplace", "two_sided", "mellin"}));
    c_tr->add_option("--f", tr_f, "original in t")->required();
    c_tr->add_option("--p", tr_p, "evaluation point expression")->required();
    c_tr->add_option("--q", tr_q, "kernel shift expression");
    c_tr->add_option("--s0", tr_s0, "growth exponent");
    c_tr->add_option("--s1", tr_s1, "decay exponent (two-sided/Mellin)");
    c_tr->add_option("--scale", tr_scale, "growth bound constant C");

    // invert
    auto* c_inv = app.add_subcommand("invert", "Bromwich-line inversion");
    std::string inv_image, inv_axis = "i1", inv_mode = "laplace";
    double inv_t = 1.0, inv_anchor = 1.0, inv_trunc = 32.0;
    c_inv->add_option("--image", inv_image, "image expression in p")->required();
    c_inv->add_option("--t", inv_t, "time (or tau for Mellin)");
    c_inv->add_option("--anchor", inv_anchor, "line anchor a");
    c_inv->add_option("--axis", inv_axis, "line direction S");
    c_inv->add_option("--truncation", inv_trunc, "initial truncation B");
    c_inv->add_option("--mode", inv_mode, "laplace | mellin")
        ->check(CLI::IsMember({"laplace", "mellin"}));

    // symmetry
    auto* c_sym = app.add_subcommand("symmetry", "image symmetry residuals");
    std::string sym_f;
    double sym_s0 = -1.0, sym_s1 = 1.0, sym_scale = 3.0;
    int sym_probes = 8;
    bool sym_equivariance = false;
    c_sym->add_option("--f", sym_f, "two-sided original in t")->required();
    c_sym->add_option("--s0", sym_s0, "growth exponent");
    c_sym->add_option("--s1", sym_s1, "decay exponent");
    c_sym->add_option("--scale", sym_scale, "growth bound constant C");
    c_sym->add_option("--probes", sym_probes, "probe count");
    c_sym->add_flag("--equivariance", sym_equivariance, "also run the reality check");

    // zeta
    auto* c_zeta = app.add_subcommand("zeta", "zeta and companions");
    std::string zeta_z, zeta_rep = "auto", zeta_fn = "zeta";
    c_zeta->add_option("--z", zeta_z, "argument expression")->required();
    c_zeta->add_option("--rep", zeta_rep, "representation")
        ->check(CLI::IsMember(
            {"auto", "euler_maclaurin", "strip", "reflected", "hankel", "mellin_digamma"}));
    c_zeta->add_option("--fn", zeta_fn, "function")
        ->check(CLI::IsMember({"zeta", "gamma", "gamma_reciprocal", "digamma", "chi", "xi",
                               "upsilon", "omega_s"}));

    // scan
    auto* c_scan = app.add_subcommand("scan", "critical-line zero scan");
    double scan_lo = 10.0, scan_hi = 30.0, scan_step = 0.05;
    std::string scan_axis = "i1";
    c_scan->add_option("--lo", scan_lo, "lower end of the t range");
    c_scan->add_option("--hi", scan_hi, "upper end of the t range");
    c_scan->add_option("--step", scan_step, "scan step");
    c_scan->add_option("--axis", scan_axis, "imaginary axis M");

    auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_eval) {
            emit({{"value", coeffs_json(eval_expr(eval_expr_text), g.level)}});
        } else if (*c_extend) {
            std::vector<double> coeffs, rates;
            for (auto& part : CLI::detail::split(ext_coeffs, ','))
                coeffs.push_back(std::stod(part));
            for (auto& part : CLI::detail::split(ext_rates, ','))
                if (!part.empty()) rates.push_back(std::stod(part));
            cd::ExtensionSpec spec =
                ext_kind == "exp_sum"
                    ? cd::ExtensionSpec::exp_sum(coeffs, rates, ext_center, g.level,
                                                 ext_spherical)
                    : cd::ExtensionSpec::power_series(coeffs, ext_center, ext_radius, g.level,
                                                      ext_spherical);
            const cd::CdNumber at = eval_expr(ext_at);
            const cd::CdNumber value =
                ext_direct ? cd::eval_series_direct(spec, at) : cd::eval_extension(spec, at);
            emit({{"value", coeffs_json(value, g.level)}, {"spec", cd::to_json(spec)}});
        } else if (*c_integral) {
            const cd::Expression f = cd::Expression::parse(int_f);
            cd::Path path = int_path.empty()
                                ? cd::Path::circle(eval_expr(int_center), int_rho,
                                                   parse_axis(int_axis))
                                : [&] {
                                      std::ifstream in(int_path);
                                      if (!in) cd::raise(cd::ErrorKind::UsageError,
                                                         "cannot open path file");
                                      json j;
                                      in >> j;
                                      return cd::path_from_json(j);
                                  }();
            const cd::CdNumber value = cd::line_integral(
                [&](const cd::CdNumber& z) { return f.eval(z); }, path, g.tol,
                int_order == "left" ? cd::MulOrder::left : cd::MulOrder::right);
            emit({{"integral", coeffs_json(value, g.level)}});
        } else if (*c_res) {
            const cd::Expression f = cd::Expression::parse(res_f);
            const cd::CdNumber y = eval_expr(res_y);
            const cd::CdNumber axis = parse_axis(res_axis);
            const cd::CdFunction fn = [&](const cd::CdNumber& z) {
                return f.eval({{"z", z}, {"y", y}, {"t", z}, {"p", z}});
            };
            const cd::CdNumber value =
                res_n <= 1 ? cd::residue(fn, y, axis, res_rho, g.tol)
                           : cd::residue_n(fn, y, axis, res_rho, parse_cd_list(res_a), g.tol);
            emit({{"res", coeffs_json(value, g.level)}});
        } else if (*c_arg) {
            const cd::Expression f = cd::Expression::parse(arg_f);
            cd::Path path = arg_path.empty()
                                ? cd::Path::circle(eval_expr(arg_center), arg_rho,
                                                   parse_axis(arg_axis))
                                : [&] {
                                      std::ifstream in(arg_path);
                                      if (!in) cd::raise(cd::ErrorKind::UsageError,
                                                         "cannot open path file");
                                      json j;
                                      in >> j;
                                      return cd::path_from_json(j);
                                  }();
            const cd::CdNumber value = cd::delta_arg_n(
                [&](const cd::CdNumber& z) { return f.eval(z); }, path,
                parse_cd_list(arg_a), g.tol);
            emit({{"delta_arg", coeffs_json(value, g.level)}});
        } else if (*c_tr) {
            const cd::Expression f = cd::Expression::parse(tr_f);
            cd::Original orig;
            orig.f = [&](double t) { return f.eval(cd::CdNumber::real(t)); };
            orig.s0 = tr_s0;
            orig.s1 = tr_s1;
            orig.bound_scale = tr_scale;
            orig.support = tr_mode == "laplace" ? cd::SupportKind::right_sided
                           : tr_mode == "mellin" ? cd::SupportKind::multiplicative
                                                 : cd::SupportKind::two_sided;
            cd::TransformSpec spec;
            spec.kernel = kernel_kind(g);
            spec.level = g.level;
            spec.tol = g.tol;
            spec.shift = eval_expr(tr_q);
            const cd::CdNumber p = eval_expr(tr_p);
            emit({{"value", coeffs_json(cd::transform(orig, p, spec), g.level)}});
        } else if (*c_inv) {
            const cd::Expression image = cd::Expression::parse(inv_image);
            cd::TransformSpec spec;
            spec.kernel = kernel_kind(g);
            spec.level = g.level;
            spec.tol = std::max(g.tol, 1e-8);
            cd::BromwichLine line;
            line.anchor = inv_anchor;
            line.direction = parse_axis(inv_axis);
            line.truncation = inv_trunc;
            const cd::CdFunction fn = [&](const cd::CdNumber& p) { return image.eval(p); };
            const cd::CdNumber value = inv_mode == "mellin"
                                           ? cd::invert_mellin(fn, inv_t, line, spec)
                                           : cd::invert(fn, inv_t, line, spec);
            emit({{"value", coeffs_json(value, g.level)}});
        } else if (*c_sym) {
            const cd::Expression f = cd::Expression::parse(sym_f);
            cd::Original orig;
            orig.f = [&](double t) { return f.eval(cd::CdNumber::real(t)); };
            orig.s0 = sym_s0;
            orig.s1 = sym_s1;
            orig.bound_scale = sym_scale;
            orig.support = cd::SupportKind::two_sided;
            cd::TransformSpec spec;
            spec.kernel = kernel_kind(g);
            spec.level = g.level;
            spec.tol = g.tol;
            std::mt19937_64 rng(4242);
            std::uniform_real_distribution<double> res(sym_s0 * 0.6, sym_s1 * 0.6);
            std::uniform_real_distribution<double> ims(0.2, 1.2);
            std::vector<cd::CdNumber> probes;
            for (int k = 0; k < sym_probes; ++k) {
                cd::CdNumber p = cd::CdNumber::zero(g.level);
                p.set_coeff(0, res(rng));
                p.set_coeff(1 + (k % (p.dim() - 1)), ims(rng));
                probes.push_back(p);
            }
            const cd::CdFunction img = [&](const cd::CdNumber& p) {
                return cd::laplace_two_sided(orig, p, spec);
            };
            const cd::SymmetryReport rep = cd::symmetry_report(img, probes, spec);
            json out{{"conj_sym", rep.conj_sym},
                     {"even_sym", rep.even_sym},
                     {"spherical_conj_sym", rep.spherical_conj_sym}};
            if (sym_equivariance)
                out["equivariance"] = cd::quasi_regularity_check(orig, spec, probes);
            emit(out);
        } else if (*c_zeta) {
            const cd::CdNumber z = eval_expr(zeta_z);
            cd::CdNumber value;
            if (zeta_fn == "gamma") {
                value = cd::gamma_fn(z);
            } else if (zeta_fn == "gamma_reciprocal") {
                value = cd::gamma_reciprocal(z);
            } else if (zeta_fn == "digamma") {
                value = cd::digamma(z);
            } else if (zeta_fn == "chi") {
                value = cd::chi_fn(z);
            } else if (zeta_fn == "xi") {
                value = cd::xi_fn(z);
            } else if (zeta_fn == "upsilon") {
                value = cd::upsilon_fn(z);
            } else if (zeta_fn == "omega_s") {
                value = cd::omega_s(z, std::max(g.tol, 1e-9));
            } else if (zeta_rep == "auto") {
                value = cd::zeta_auto(z);
            } else {
                const std::map<std::string, cd::ZetaRep> reps{
                    {"euler_maclaurin", cd::ZetaRep::euler_maclaurin},
                    {"strip", cd::ZetaRep::strip},
                    {"reflected", cd::ZetaRep::reflected},
                    {"hankel", cd::ZetaRep::hankel},
                    {"mellin_digamma", cd::ZetaRep::mellin_digamma}};
                value = cd::zeta(z, reps.at(zeta_rep));
            }
            emit({{"value", coeffs_json(value, g.level)}});
        } else if (*c_scan) {
            const auto brackets =
                cd::critical_line_scan(scan_lo, scan_hi, scan_step, parse_axis(scan_axis));
            if (g.out == "csv") {
                for (const auto& b : brackets) {
                    json row = {b.lo, b.hi, b.refined, b.zeta_abs};
                    std::string line;
                    for (const auto& cell : row) {
                        if (!line.empty()) line += ",";
                        line += cell.dump();
                    }
                    std::cout << line << "\n";
                }
            } else {
                for (const auto& b : brackets) {
                    emit({{"lo", b.lo}, {"hi", b.hi}, {"refined", b.refined},
                          {"zeta_abs", b.zeta_abs}});
                }
            }
        } else if (*c_self) {
            const int failed = cd::selftest::run_and_report(std::cout, std::cerr);
            return failed == 0 ? 0 : 1;
        }
    } catch (const cd::Error& e) {
        std::cerr << json{{"error", cd::to_string(e.kind())}, {"message", e.what()}}.dump()
                  << "\n";
        return e.kind() == cd::ErrorKind::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Exception"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
