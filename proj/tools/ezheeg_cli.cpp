// command-line front end: p-adic operator algebra, class groups, L-invariants,
// trivial-zero crosschecks, Heegner point logarithms, and the derivative
// verification harness
#include <CLI11.hpp>

#include "ezheeg/catalog.hpp"
#include "ezheeg/harness.hpp"
#include "ezheeg/kubota_leopoldt.hpp"
#include "ezheeg/qexp.hpp"
#include "ezheeg/report.hpp"

#include <iostream>

using namespace ezheeg;

namespace {

struct GlobalOpts {
    std::string catalog_path;
    RunConfig cfg;
};

Catalog open_catalog(const GlobalOpts& g) {
    return load_catalog(g.catalog_path.empty() ? default_catalog_path() : g.catalog_path);
}

int run_qexp(const GlobalOpts& g, const std::string& op, long t_power) {
    Catalog cat = open_catalog(g);
    const auto& E = cat.curve(g.cfg.curve_label);
    long p = g.cfg.p;
    QExpQ f = newform_qexp(E, p, g.cfg.qprec);
    Rat ap = f.an(p);
    QExpQ out = f;
    if (op == "id") {
        out = f;
    } else if (op == "up") {
        out = U_p(f);
    } else if (op == "v") {
        out = V_op(f);
    } else if (op == "deplete") {
        out = deplete(f, ap);
    } else if (op == "d") {
        out = atkin_serre_power(deplete(f, ap), t_power);
    } else if (op == "dinv") {
        out = coleman_value_series(f, ap);
    } else {
        std::cerr << "unknown operator: " << op << "\n";
        return 2;
    }
    std::cout << qexp_json(out) << "\n";
    return 0;
}

int run_class_group(const GlobalOpts& g) {
    ImagQuadField K(g.cfg.disc);
    std::cout << "{\"disc\":" << K.disc() << ",\"h\":" << K.class_number() << ",\"forms\":[";
    const auto& cls = K.class_group();
    for (size_t i = 0; i < cls.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << "[" << cls[i].a << "," << cls[i].b << "," << cls[i].c << "]";
    }
    std::cout << "]}\n";
    return 0;
}

int run_split_prime(const GlobalOpts& g) {
    ImagQuadField K(g.cfg.disc);
    PadicContext ctx(g.cfg.p, g.cfg.prec);
    SplitPrimeData sp = split_prime(K, g.cfg.p, ctx);
    std::cout << "{\"p\":" << sp.p << ",\"disc\":" << sp.disc << ",\"h\":" << sp.h
              << ",\"pi\":{\"x\":\"" << sp.pi.x.str() << "\",\"y\":\"" << sp.pi.y.str()
              << "\"},\"pi_image\":" << sp.pi_image.json()
              << ",\"varpi\":" << sp.varpi.json() << "}\n";
    return 0;
}

int run_linv(const GlobalOpts& g) {
    Catalog cat = open_catalog(g);
    const auto& E = cat.curve(g.cfg.curve_label);
    ImagQuadField K(g.cfg.disc);
    PadicContext ctx(g.cfg.p, g.cfg.prec);
    LInvariantReport rep = l_invariant_fK(E, K, ctx);
    std::cout << (g.cfg.format == "json" ? rep.json() + "\n" : rep.text());
    return 0;
}

int run_kl(const GlobalOpts& g) {
    ImagQuadField K(g.cfg.disc);
    PadicContext ctx(g.cfg.p, g.cfg.prec);
    FGCrosscheck fg = fg_crosscheck(K, g.cfg.p, ctx);
    std::cout << (g.cfg.format == "json" ? fg_report_json(fg) + "\n" : fg_report_text(fg));
    return exit_code_for(true, fg.pass);
}

int run_heegner_log(const GlobalOpts& g) {
    Catalog cat = open_catalog(g);
    const auto& E = cat.curve(g.cfg.curve_label);
    auto pts = cat.points_for(g.cfg.curve_label, g.cfg.disc);
    if (pts.empty()) {
        std::cerr << "no catalog point for this curve and discriminant\n";
        return 2;
    }
    PadicContext ctx(g.cfg.p, g.cfg.prec);
    PgzValue v = pgz_value(E, to_kpoint(pts.front()), g.cfg.disc, ctx);
    std::cout << (g.cfg.format == "json" ? pgz_report_json(v, E.label, g.cfg.disc) + "\n"
                                         : pgz_report_text(v, E.label, g.cfg.disc));
    return 0;
}

int run_ez_verify(const GlobalOpts& g) {
    Catalog cat = open_catalog(g);
    const auto& E = cat.curve(g.cfg.curve_label);
    HypothesisReport hyp = check_hypotheses(E, g.cfg.disc, g.cfg.p);
    if (!hyp.all_machine_checks_pass()) {
        std::cerr << "hypotheses fail:\n" << hyp.text();
        return 2;
    }
    auto pts = cat.points_for(g.cfg.curve_label, g.cfg.disc);
    if (pts.empty()) {
        std::cerr << "no catalog point for this curve and discriminant\n";
        return 2;
    }
    ImagQuadField K(g.cfg.disc);
    PadicContext ctx(g.cfg.p, g.cfg.prec);
    LInvariantReport linv = l_invariant_fK(E, K, ctx);
    PgzValue pv = pgz_value(E, to_kpoint(pts.front()), g.cfg.disc, ctx);
    EZInput in = assemble_ez_input(linv, pv, g.cfg.w, g.cfg.jet_order);
    in.tower_trunc = g.cfg.tprec;
    EZReport rep = ez_verify(in);
    std::cout << (g.cfg.format == "json" ? rep.json() + "\n" : rep.text());
    return exit_code_for(true, rep.all_pass());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic toolkit: operator algebra on q-expansions, class groups, "
                 "L-invariants, trivial-zero crosschecks, and the Heegner derivative "
                 "verification harness"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--catalog", g.catalog_path, "curve/point catalog path");
    app.add_option("--prec", g.cfg.prec, "p-adic working precision M");
    app.add_option("--qprec", g.cfg.qprec, "q-expansion truncation");
    app.add_option("--tprec", g.cfg.tprec, "T-truncation for tower classes");

    std::string op = "id";
    long t_power = 1;

    auto* qexp = app.add_subcommand("qexp", "operator algebra on q-expansions");
    qexp->add_option("--curve", g.cfg.curve_label, "curve label");
    qexp->add_option("--p", g.cfg.p, "prime");
    qexp->add_option("--op", op, "id|up|v|deplete|d|dinv");
    qexp->add_option("--t", t_power, "integer power for --op d");

    auto* cg = app.add_subcommand("class-group", "reduced forms and class number");
    cg->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");

    auto* sp = app.add_subcommand("split-prime", "norm-equation data above p");
    sp->add_option("--p", g.cfg.p, "prime");
    sp->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");

    auto* linv = app.add_subcommand("linv", "L-invariants of the curve and character");
    linv->add_option("--curve", g.cfg.curve_label, "curve label");
    linv->add_option("--p", g.cfg.p, "prime");
    linv->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");
    linv->add_option("--report", g.cfg.format, "text|json");

    auto* kl = app.add_subcommand("kl-crosscheck", "trivial zero and derivative ratio");
    kl->add_option("--p", g.cfg.p, "prime");
    kl->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");
    kl->add_option("--report", g.cfg.format, "text|json");

    auto* hl = app.add_subcommand("heegner-log", "p-adic logarithm of a catalog point");
    hl->add_option("--curve", g.cfg.curve_label, "curve label");
    hl->add_option("--p", g.cfg.p, "prime");
    hl->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");
    hl->add_option("--report", g.cfg.format, "text|json");

    auto* ez = app.add_subcommand("ez-verify", "derivative identity harness");
    ez->add_option("--curve", g.cfg.curve_label, "curve label");
    ez->add_option("--p", g.cfg.p, "prime");
    ez->add_option("--disc", g.cfg.disc, "fundamental discriminant (negative)");
    ez->add_option("--w", g.cfg.w, "conjugation sign, -1 or +1");
    ez->add_option("--jet-order", g.cfg.jet_order, "series truncation (total degree)");
    ez->add_option("--report", g.cfg.format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        g.cfg.validate();
        if (qexp->parsed()) return run_qexp(g, op, t_power);
        if (cg->parsed()) return run_class_group(g);
        if (sp->parsed()) return run_split_prime(g);
        if (linv->parsed()) return run_linv(g);
        if (kl->parsed()) return run_kl(g);
        if (hl->parsed()) return run_heegner_log(g);
        if (ez->parsed()) return run_ez_verify(g);
    } catch (const precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
