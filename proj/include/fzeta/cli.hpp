#pragma once

// Command-line front end. `run` parses arguments and writes CSV/JSON to the
// given stream (or to --out); errors become a single "error: ..." line on the
// error stream and a nonzero exit code.

#include "fzeta/content.hpp"
#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/measures.hpp"
#include "fzeta/mzeta.hpp"
#include "fzeta/pzeta.hpp"
#include "fzeta/serialize.hpp"
#include "fzeta/strings.hpp"
#include "fzeta/tube.hpp"
#include "fzeta/zeta.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fzeta::cli {

/// Round-trip decimal form of a double ("%.17g").
inline std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline LatticeStringSpec lattice_from(const std::string& r, unsigned m)
{
    return LatticeStringSpec(parse_rational(r), m);
}

inline CantorLayout variant_from(const std::string& name)
{
    if (name == "omega1" || name == "Ω1" || name == "1") return CantorLayout::omega1;
    if (name == "omega2" || name == "Ω2" || name == "2") return CantorLayout::omega2;
    if (name == "omega3" || name == "Ω3" || name == "3") return CantorLayout::omega3;
    throw InvalidArgument("unknown variant \"" + name + "\" (omega1, omega2, omega3)");
}

inline const char* variant_label(CantorLayout v)
{
    switch (v) {
    case CantorLayout::omega1: return "Ω1";
    case CantorLayout::omega2: return "Ω2";
    case CantorLayout::omega3: return "Ω3";
    case CantorLayout::none: break;
    }
    return "none";
}

inline Json pole_json(const std::vector<ComplexDimension>& poles)
{
    Json arr = Json::array();
    for (const auto& p : poles)
        arr.push_back({{"re", p.omega.real()}, {"im", p.omega.imag()}, {"residue_re", p.residue.real()},
                       {"residue_im", p.residue.imag()}});
    return arr;
}

inline Json complex_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

struct Options {
    std::string out;

    // string
    std::string r = "1/3";
    unsigned m = 2;
    unsigned depth = defaults::truncation_depth;
    std::string variant = "omega1";

    // zeta
    double s_re = 2, s_im = 0;
    std::size_t terms = 200;

    // dims
    double re_min = -1, re_max = 2;
    std::optional<double> im_min;
    double im_max = 12;

    // tube
    int grid = defaults::tube_grid_points;
    double eps_min = defaults::tube_grid_min, eps_max = defaults::tube_grid_max;
    int n_terms = defaults::explicit_terms;
    std::optional<std::string> epsilon;

    // measures / pzeta
    unsigned h = 3;
    std::string w = "3";
    unsigned n = 2;
    std::optional<unsigned> n_min;
    unsigned precision_depth = 32;
    unsigned k1 = 1, k2 = 2;
    std::optional<double> s_real;
    unsigned K = defaults::spectrum_max_denominator;

    // mzeta
    std::optional<unsigned> verify_stages;
    std::vector<double> probes{2.0, 2.5};
    std::string eta_c = "1/3", eta_ratio = "1/3";
    double window_im = defaults::pole_window_im;

    // content-bounds
    std::optional<double> dimension;

    // box-dim
    unsigned k_min = 2, k_max = 8;
};

inline void cmd_string_lattice(const Options& o, std::ostream& out)
{
    out << to_json(build_lattice_string(lattice_from(o.r, o.m), o.depth)).dump(2) << "\n";
}

inline void cmd_string_realize(const Options& o, std::ostream& out)
{
    out << to_json(realize_cantor_configuration(variant_from(o.variant), o.depth)).dump(2) << "\n";
}

inline void cmd_zeta(const Options& o, std::ostream& out)
{
    const auto spec = lattice_from(o.r, o.m);
    const Complex s(o.s_re, o.s_im);
    Json doc{{"s", complex_json(s)}};
    try {
        doc["closed_form"] = complex_json(zeta_closed_form_lattice(spec, s).value);
    } catch (const PoleProximityError& e) {
        throw PoleProximityError(std::string(e.what()) + " (nearest pole " + fmt(e.nearest_pole().real()) + " + " +
                                     fmt(e.nearest_pole().imag()) + "i)",
                                 e.nearest_pole());
    }
    const auto t = zeta_truncated(build_lattice_string(spec, static_cast<unsigned>(o.terms)), s, o.terms);
    Json tr = complex_json(t.value);
    tr["terms"] = t.terms;
    tr["convergent"] = t.convergent;
    if (t.convergent) tr["tail_bound"] = t.tail_bound;
    doc["truncated"] = std::move(tr);
    out << doc.dump(2) << "\n";
}

inline void cmd_dims(const Options& o, std::ostream& out)
{
    const auto spec = lattice_from(o.r, o.m);
    const Window w(o.re_min, o.re_max, o.im_min.value_or(-o.im_max), o.im_max);
    auto poles = complex_dimensions_lattice(spec, w);
    sort_poles(poles);
    out << Json{{"poles", pole_json(poles)}}.dump(2) << "\n";
}

inline void cmd_tube(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto spec = lattice_from(o.r, o.m);
    const auto ls = build_lattice_string(spec);
    const double D = spec.dimension();
    const Rational limit = explicit_validity_limit(spec);

    std::vector<Rational> eps;
    if (o.epsilon) {
        eps.push_back(parse_rational(*o.epsilon));
    } else {
        for (double e : log_grid(o.eps_min, o.eps_max, o.grid)) eps.push_back(Rational(e));
    }
    const double h = (o.n_terms + 0.5) * spec.period();
    const auto dims = complex_dimensions_lattice(spec, Window(D, D, -h, h));

    out << "epsilon,v_direct,v_explicit,abs_diff,normalized\n";
    bool noted = false;
    for (const auto& e : eps) {
        if (e <= 0) throw InvalidArgument("epsilon must be positive");
        const auto direct = tube_volume_direct(ls, e);
        const double ed = to_double(e);
        out << fmt(ed) << "," << fmt(direct.volume) << ",";
        if (e <= limit) {
            const double v = tube_volume_explicit(dims, spec, ed, o.n_terms).volume;
            out << fmt(v) << "," << fmt(std::abs(v - direct.volume));
        } else {
            out << ",";
            if (!noted) err << "note: epsilon > " << to_string(limit) << " lies outside the explicit formula's validity range; v_explicit left empty\n";
            noted = true;
        }
        out << "," << fmt(direct.volume * std::pow(ed, D - 1)) << "\n";
    }
}

inline BinomialMeasureSpec measure_from(const Options& o, std::ostream& err)
{
    BinomialMeasureSpec spec(o.h, parse_rational(o.w));
    if (!spec.within_spectrum_hypotheses() && !spec.degenerate())
        err << "note: w <= 2 lies outside the hypotheses of the spectrum theorem\n";
    return spec;
}

inline void cmd_census(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto spec = measure_from(o, err);
    const unsigned lo = o.n_min.value_or(o.n);
    if (lo < 1 || lo > o.n) throw InvalidArgument("need 1 <= n-min <= n");
    out << "n,j,k1_reduced,k2_reduced,alpha,length,count\n";
    for (unsigned n = lo; n <= o.n; ++n)
        for (const auto& row : census(spec, n))
            out << row.n << "," << row.j << "," << row.idx.k1 << "," << row.idx.k2 << "," << fmt(row.alpha) << ","
                << to_string(row.length) << "," << row.count.str() << "\n";
}

inline void cmd_pzeta(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto spec = measure_from(o, err);
    if (spec.degenerate()) throw HypothesisError("degenerate: equal weights");
    const PartitionZeta pz{spec, RegularityIndex(o.k1, o.k2)};
    const double alpha = regularity_value(spec, pz.idx);
    const auto numeric = abscissa_numeric(pz);
    Json doc{{"h", spec.h()},
             {"w", to_string(spec.w())},
             {"k1", o.k1},
             {"k2", o.k2},
             {"alpha", alpha},
             {"sigma_formula", sigma_formula(spec, alpha)},
             {"abscissa_numeric", numeric.value},
             {"within_hypotheses", spec.within_spectrum_hypotheses()}};
    if (o.s_real) {
        const auto v = partition_zeta_eval(pz, Complex(*o.s_real, 0), static_cast<int>(o.terms));
        Json ev = complex_json(v.value);
        ev["s"] = *o.s_real;
        ev["terms"] = v.terms;
        ev["divergent_region"] = v.divergent_region;
        if (!v.divergent_region) ev["tail_bound"] = v.tail_bound;
        doc["value"] = std::move(ev);
    }
    out << doc.dump(2) << "\n";
}

inline void cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto spec = measure_from(o, err);
    out << "k1,k2,alpha,sigma,f_alpha,is_max\n";
    for (const auto& p : spectrum_sample(spec, o.K))
        out << p.idx.k1 << "," << p.idx.k2 << "," << fmt(p.alpha) << "," << fmt(p.sigma) << ","
            << (p.f_alpha ? fmt(*p.f_alpha) : std::string()) << "," << (p.is_max ? "true" : "false") << "\n";
}

inline void cmd_mzeta(const Options& o, std::ostream& out)
{
    const auto variant = variant_from(o.variant);
    const PointMassMeasure m(realize_cantor_configuration(variant, o.depth));
    const auto ns = ScaleSequence::geometric(parse_rational(o.eta_c), parse_rational(o.eta_ratio));
    const auto pos = mzeta_infinity(m, ns);
    const auto neg = mzeta_neg_infinity(m, ns);
    auto poles = pole_set(neg, Window(-1e3, 1e3, -o.window_im, o.window_im));
    sort_poles(poles);
    Json doc{{"variant", variant_label(variant)},
             {"zeta_infty", render(pos)},
             {"zeta_neg_infty", render(neg)},
             {"poles_neg_infty", pole_json(poles)},
             {"reconstruction", variant != CantorLayout::omega1},
             {"perfect_boundary", neg.theorem_applies}};
    if (o.verify_stages) {
        const auto rep = mzeta_oracle(m, ns, *o.verify_stages, o.probes);
        Json rows = Json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"alpha", to_string(r.alpha)}, {"s", r.s}, {"bruteforce", r.brute.real()},
                            {"closed_form", r.closed.real()}, {"relative_error", r.relative_error}});
        doc["oracle"] = {{"stages", rep.max_stage}, {"max_relative_error", rep.max_relative_error}, {"probes", std::move(rows)}};
    }
    out << doc.dump(2) << "\n";
}

inline void cmd_content_bounds(const Options& o, std::ostream& out)
{
    const auto spec = lattice_from(o.r, o.m);
    const double D = o.dimension.value_or(spec.dimension());
    const auto cb = minkowski_content_bounds(build_lattice_string(spec), D, log_grid(o.eps_min, o.eps_max, o.grid));
    out << Json{{"dimension", D},
                {"lower", cb.lower},
                {"upper", cb.upper},
                {"gap", cb.upper - cb.lower},
                {"period_points", cb.epsilon_grid.size()},
                {"measurable", is_minkowski_measurable_lattice(spec).measurable},
                {"explanation", is_minkowski_measurable_lattice(spec).explanation}}
               .dump(2)
        << "\n";
}

inline void cmd_box_dim(const Options& o, std::ostream& out)
{
    if (o.k_min > o.k_max) throw InvalidArgument("need k-min <= k-max");
    const auto gs = realize_cantor_configuration(variant_from(o.variant), o.depth);
    std::vector<Rational> grid;
    for (unsigned k = o.k_min; k <= o.k_max; ++k) grid.push_back(pow(Rational(1, 3), k));
    const auto est = box_counting_dimension(gs, grid);
    Json counts = Json::array();
    for (const auto& [eps, n] : est.counts) counts.push_back({{"epsilon", to_string(eps)}, {"count", fzeta::detail::big_to_json(n)}});
    out << Json{{"counts", std::move(counts)}, {"slope_estimate", est.slope_estimate}}.dump(2) << "\n";
}

} // namespace detail

/// Runs one command. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Fractal strings, complex dimensions and multifractal zeta functions", "fzeta"};
    app.require_subcommand(1);
    app.add_option("--out", o.out, "write output to this file instead of standard output");

    auto add_lattice = [&](CLI::App* c) {
        c->add_option("--r", o.r, "scaling ratio num/den")->capture_default_str();
        c->add_option("--m", o.m, "multiplier")->capture_default_str();
    };
    auto add_measure = [&](CLI::App* c) {
        c->set_help_flag("--help", "Print this help message and exit"); // -h is taken by --h
        c->add_option("--h", o.h, "length base (children have ratio 1/h)")->capture_default_str();
        c->add_option("--w", o.w, "weight base num/den (left weight 1/w)")->capture_default_str();
    };

    auto* string_cmd = app.add_subcommand("string", "build or realize a fractal string");
    string_cmd->require_subcommand(1);
    auto* lattice_cmd = string_cmd->add_subcommand("lattice", "lattice length sequence");
    add_lattice(lattice_cmd);
    lattice_cmd->add_option("--depth", o.depth, "materialized entries")->capture_default_str();
    auto* realize_cmd = string_cmd->add_subcommand("realize", "Cantor-length configuration");
    realize_cmd->add_option("--variant", o.variant, "omega1 | omega2 | omega3")->capture_default_str();
    realize_cmd->add_option("--depth", o.depth, "generations")->capture_default_str();

    auto* zeta_cmd = app.add_subcommand("zeta", "geometric zeta function of a lattice string");
    add_lattice(zeta_cmd);
    zeta_cmd->add_option("--s-re", o.s_re)->capture_default_str();
    zeta_cmd->add_option("--s-im", o.s_im)->capture_default_str();
    zeta_cmd->add_option("--terms", o.terms, "truncation N")->capture_default_str();

    auto* dims_cmd = app.add_subcommand("dims", "complex dimensions in a window");
    add_lattice(dims_cmd);
    dims_cmd->add_option("--re-min", o.re_min)->capture_default_str();
    dims_cmd->add_option("--re-max", o.re_max)->capture_default_str();
    dims_cmd->add_option("--im-min", o.im_min, "defaults to -im-max");
    dims_cmd->add_option("--im-max", o.im_max)->capture_default_str();

    auto* tube_cmd = app.add_subcommand("tube", "direct vs explicit tube volume");
    add_lattice(tube_cmd);
    tube_cmd->add_option("--grid", o.grid, "log-spaced grid points")->capture_default_str();
    tube_cmd->add_option("--eps-min", o.eps_min)->capture_default_str();
    tube_cmd->add_option("--eps-max", o.eps_max)->capture_default_str();
    tube_cmd->add_option("--n-terms", o.n_terms, "poles with |k| <= N")->capture_default_str();
    tube_cmd->add_option("--epsilon", o.epsilon, "single exact scale num/den");

    auto* census_cmd = app.add_subcommand("measure-census", "intervals of level n by right-turn count");
    add_measure(census_cmd);
    census_cmd->add_option("--n", o.n, "level")->capture_default_str();
    census_cmd->add_option("--n-min", o.n_min, "first level (defaults to n)");

    auto* pzeta_cmd = app.add_subcommand("pzeta", "partition zeta function and its abscissa");
    add_measure(pzeta_cmd);
    pzeta_cmd->add_option("--k1", o.k1)->capture_default_str();
    pzeta_cmd->add_option("--k2", o.k2)->capture_default_str();
    pzeta_cmd->add_option("--s", o.s_real, "evaluate the series at this real s");
    pzeta_cmd->add_option("--terms", o.terms, "series terms")->capture_default_str();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "sampled spectrum sigma(alpha)");
    add_measure(spectrum_cmd);
    spectrum_cmd->add_option("--K", o.K, "largest denominator k2")->capture_default_str();

    auto* mzeta_cmd = app.add_subcommand("mzeta", "multifractal zeta functions at +-inf");
    mzeta_cmd->add_option("--variant", o.variant, "omega1 | omega2 | omega3")->capture_default_str();
    mzeta_cmd->add_option("--depth", o.depth, "truncation depth")->capture_default_str();
    mzeta_cmd->add_option("--verify-stages", o.verify_stages, "compare brute-force sums up to this stage");
    mzeta_cmd->add_option("--probes", o.probes, "real probe points for --verify-stages")->capture_default_str();
    mzeta_cmd->add_option("--eta-c", o.eta_c, "eta_n = c * ratio^n")->capture_default_str();
    mzeta_cmd->add_option("--eta-ratio", o.eta_ratio)->capture_default_str();
    mzeta_cmd->add_option("--im-max", o.window_im, "pole window |Im| bound")->capture_default_str();

    auto* content_cmd = app.add_subcommand("content-bounds", "bounds on V(eps) eps^(D-1)");
    add_lattice(content_cmd);
    content_cmd->add_option("--D", o.dimension, "exponent (defaults to the Minkowski dimension)");
    content_cmd->add_option("--grid", o.grid)->capture_default_str();
    content_cmd->add_option("--eps-min", o.eps_min)->capture_default_str();
    content_cmd->add_option("--eps-max", o.eps_max)->capture_default_str();

    auto* box_cmd = app.add_subcommand("box-dim", "box-counting estimate at eps = 3^-k");
    box_cmd->add_option("--variant", o.variant)->capture_default_str();
    box_cmd->add_option("--depth", o.depth)->capture_default_str();
    box_cmd->add_option("--k-min", o.k_min)->capture_default_str();
    box_cmd->add_option("--k-max", o.k_max)->capture_default_str();

    std::vector<std::string> storage{"fzeta"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return 2;
    }

    std::ostringstream buffer;
    try {
        if (lattice_cmd->parsed()) detail::cmd_string_lattice(o, buffer);
        else if (realize_cmd->parsed()) detail::cmd_string_realize(o, buffer);
        else if (zeta_cmd->parsed()) detail::cmd_zeta(o, buffer);
        else if (dims_cmd->parsed()) detail::cmd_dims(o, buffer);
        else if (tube_cmd->parsed()) detail::cmd_tube(o, buffer, err);
        else if (census_cmd->parsed()) detail::cmd_census(o, buffer, err);
        else if (pzeta_cmd->parsed()) detail::cmd_pzeta(o, buffer, err);
        else if (spectrum_cmd->parsed()) detail::cmd_spectrum(o, buffer, err);
        else if (mzeta_cmd->parsed()) detail::cmd_mzeta(o, buffer);
        else if (content_cmd->parsed()) detail::cmd_content_bounds(o, buffer);
        else if (box_cmd->parsed()) detail::cmd_box_dim(o, buffer);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return 1;
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.out << " for writing\n";
            return 1;
        }
        file << buffer.str();
    }
    return 0;
}

} // namespace fzeta::cli
