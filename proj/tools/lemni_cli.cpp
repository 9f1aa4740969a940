// lemni: arc arithmetic and polygon constructions on Bernoulli's lemniscate.
//
// Subcommands:
//   ngon    construct or sample a regular n-gon, emit SVG or a JSON trace
//   arc     one-shot arc arithmetic on radii
//   verify  run a module's oracle suite and report the worst error
//   trace   write a replayable JSON trace of a named construction

#include "lemni/arc_algebra.hpp"
#include "lemni/division_radicals.hpp"
#include "lemni/kernel.hpp"
#include "lemni/numerics.hpp"
#include "lemni/recipes.hpp"
#include "lemni/svg.hpp"
#include "lemni/trace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

using namespace lemni;

namespace {

struct BuildOutcome {
    Scene scene;
    NGonResult result;
    bool used_numeric_seed = false;
};

/// Constructed n-gon for n = 2^a * (distinct Fermat primes): the 17-gon
/// recipe seeds the 17 part, other Fermat prime factors fall back to numeric
/// seeds (no explicit recipe exists for them), composition is by Bezout
/// merges and doublings.
BuildOutcome build_constructed(int n, const PrecisionContext& ctx) {
    BuildOutcome out{Scene(ctx), {}, false};
    Frame f = Frame::create(out.scene);

    int rest = n;
    int twos = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }

    NGonResult acc;
    bool have = false;
    if (rest % 17 == 0) {
        acc = recipe_seventeen_all(out.scene, f);
        have = true;
        rest /= 17;
    }
    for (int p : {3, 5, 257, 65537}) {
        if (rest % p != 0)
            continue;
        rest /= p;
        out.used_numeric_seed = true;
        NGon seed = numeric_ngon(p, ctx);
        if (!have) {
            acc.gon = place_ngon(out.scene, seed);
            acc.certificate = certify_ngon(acc.gon, ctx);
            have = true;
        } else {
            acc = recipe_nm_gon(out.scene, f, acc.gon, seed);
        }
    }
    if (!have) {
        // pure power of two: the 1- or 2-gon base is the origin passes, then
        // doublings take over
        acc.gon = place_ngon(out.scene, numeric_ngon(std::min(n, 2), ctx));
        acc.gon.mode = NGon::Mode::constructed;
        acc.certificate = certify_ngon(acc.gon, ctx);
        if (n > 1)
            --twos;
    }
    for (int i = 0; i < twos; ++i)
        acc = recipe_2n_gon(out.scene, f, acc.gon);
    out.result = std::move(acc);
    return out;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "lemni: cannot write " << path << "\n";
        return 1;
    }
    os << content;
    return 0;
}

Real parse_real(const std::string& text, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    return Real(text);
}

void print_certs(const std::vector<CertificateEntry>& certs, bool verbose) {
    Real worst(0);
    std::size_t failed = 0;
    for (const CertificateEntry& c : certs) {
        if (c.achieved > worst)
            worst = c.achieved;
        if (!c.pass) {
            ++failed;
            std::cout << "FAIL " << c.name << ": error " << c.achieved.str(6)
                      << " > tolerance " << c.target.str(6) << "\n";
        } else if (verbose) {
            std::cout << "  ok " << c.name << ": error " << c.achieved.str(6) << "\n";
        }
    }
    std::cout << "certificates: " << certs.size() - failed << "/" << certs.size()
              << " pass, max error " << worst.str(6) << "\n";
}

bool all_pass(const std::vector<CertificateEntry>& certs) {
    return std::all_of(certs.begin(), certs.end(),
                       [](const CertificateEntry& c) { return c.pass; });
}

int cmd_ngon(int n, bool numeric_mode, const PrecisionContext& ctx, const std::string& format,
             const std::string& out_path, bool verbose) {
    if (!numeric_mode && !constructible(static_cast<std::uint64_t>(n))) {
        std::cerr << "ngon: " << n << " is not constructible: n must be a power of two "
                  << "times distinct Fermat primes\n";
        return 2;
    }

    std::optional<BuildOutcome> built;
    std::optional<Scene> numeric_scene;
    NGonResult result;
    if (numeric_mode) {
        numeric_scene.emplace(ctx);
        result.gon = place_ngon(*numeric_scene, numeric_ngon(n, ctx));
        result.certificate = certify_ngon(result.gon, ctx);
    } else {
        built.emplace(build_constructed(n, ctx));
        result = std::move(built->result);
        if (built->used_numeric_seed)
            std::cerr << "ngon: no explicit recipe for some Fermat prime factors; "
                      << "numeric seed vertices were used\n";
    }
    Scene& scene = built ? built->scene : *numeric_scene;

    AuditReport report = audit(scene);
    if (!report.pass) {
        for (const std::string& v : report.violations)
            std::cerr << "audit: " << v << "\n";
        return 1;
    }

    std::map<std::string, PointId> outputs;
    for (std::size_t k = 0; k < result.gon.ids.size(); ++k)
        outputs["V" + std::to_string(k)] = result.gon.ids[k];

    int rc = 0;
    if (format == "svg") {
        rc = write_output(out_path, render_svg(ctx, &scene, &result.gon));
    } else if (format == "json") {
        rc = write_output(out_path,
                          make_trace(scene, outputs, result.certificate).dump(1) + "\n");
    }
    if (rc != 0)
        return rc;

    std::cout << "ngon " << n << (numeric_mode ? " numeric" : " constructed") << ": "
              << result.gon.vertices.size() << " vertices, " << scene.steps().size()
              << " construction steps\n";
    print_certs(result.certificate, verbose);
    return all_pass(result.certificate) ? 0 : 1;
}

int cmd_arc(const std::string& op, const std::vector<std::string>& args,
            const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const unsigned show = ctx.digits;
    Real om = omega(ctx);
    auto arc_of_radius = [&](const Real& r) { return arc_length(Radius(r), ctx).s; };

    if (op == "add" || op == "sub") {
        if (args.size() != 2)
            throw CLI::ValidationError("arc " + op + " expects two radii");
        Radius r(parse_real(args[0], ctx)), u(parse_real(args[1], ctx));
        if (op == "add") {
            FoldedRadius t = add_arcs(r, u, ctx);
            Real err = abs(arc_of_radius(t.r.r) -
                           (t.folded ? om - arc_of_radius(r.r) - arc_of_radius(u.r)
                                     : arc_of_radius(r.r) + arc_of_radius(u.r)));
            std::cout << t.r.r.str(show) << "\n";
            if (t.folded)
                std::cout << "folded past the half petal\n";
            std::cout << "arc-length check error: " << err.str(6) << "\n";
            return err <= ctx.eps() ? 0 : 1;
        }
        Radius v = sub_arcs(r, u, ctx);
        Real err = abs(arc_of_radius(v.r) - (arc_of_radius(r.r) - arc_of_radius(u.r)));
        std::cout << v.r.str(show) << "\n";
        std::cout << "arc-length check error: " << err.str(6) << "\n";
        return err <= ctx.eps() ? 0 : 1;
    }
    if (op == "double") {
        if (args.size() != 1)
            throw CLI::ValidationError("arc double expects one radius");
        Radius r(parse_real(args[0], ctx));
        FoldedRadius u = double_arc(r, ctx);
        Real err = abs(arc_of_radius(u.r.r) -
                       (u.folded ? om - 2 * arc_of_radius(r.r) : 2 * arc_of_radius(r.r)));
        std::cout << u.r.r.str(show) << "\n";
        if (u.folded)
            std::cout << "folded past the half petal\n";
        std::cout << "arc-length check error: " << err.str(6) << "\n";
        return err <= ctx.eps() ? 0 : 1;
    }
    if (op == "halve") {
        if (args.size() != 2)
            throw CLI::ValidationError("arc halve expects a radius and its polar angle");
        Radius u(parse_real(args[0], ctx));
        Real theta = parse_real(args[1], ctx);
        HalvePair pair = halve_arc(u, theta, ctx);
        Real err1 = abs(double_arc(pair.direct, ctx).r.r - u.r);
        Real err2 = abs(double_arc(pair.complementary, ctx).r.r - u.r);
        std::cout << pair.direct.r.str(show) << "\n"
                  << pair.complementary.r.str(show) << "\n";
        std::cout << "doubling check errors: " << err1.str(6) << ", " << err2.str(6) << "\n";
        return (err1 <= ctx.eps() && err2 <= ctx.eps()) ? 0 : 1;
    }
    std::cerr << "arc: unknown operation '" << op << "'\n";
    return 1;
}

int verify_radicals(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Quartic p = abel_quartic();
    RadicalValue root = abel_radical_root(ctx);
    Real worst = abs(p.eval(root.value));
    std::cout << "selected branch k = " << root.branch_k << "\n";
    std::cout << "max |P(root)| = " << worst.str(6) << "\n";

    Complex rewritten = rewritten_u(ctx);
    Real rw_err = abs(rewritten * Real(4) - root.value);
    std::cout << "|4*rewritten - root| = " << rw_err.str(6) << "\n";
    worst = std::max(worst, rw_err);

    SeventeenData data = phi_two_omega_17(ctx);
    Real oracle = lemniscate_sine(ArcParam(2 * omega(ctx) / 17), ctx);
    Real r1_err = abs(data.r1 - oracle);
    std::cout << "|r1 - lemniscate_sine(2w/17)| = " << r1_err.str(6) << "\n";
    worst = std::max(worst, r1_err);

    std::cout << "max error = " << worst.str(6) << "\n";
    return worst <= ctx.eps() ? 0 : 1;
}

int verify_seventeen(const PrecisionContext& ctx) {
    Scene scene(ctx);
    Frame f = Frame::create(scene);
    NGonResult r = recipe_seventeen_all(scene, f);
    AuditReport report = audit(scene);
    std::cout << "construction steps: " << report.total_steps
              << ", audit: " << (report.pass ? "pass" : "FAIL") << "\n";
    print_certs(r.certificate, false);
    return (report.pass && all_pass(r.certificate)) ? 0 : 1;
}

int verify_arcs(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real om = omega(ctx);
    std::mt19937_64 rng(20250809);
    std::uniform_real_distribution<double> unif(0.02, 0.98);
    Real worst(0);
    for (int i = 0; i < 100; ++i) {
        Real sr = om / 2 * Real(unif(rng));
        Real su = om / 2 * Real(unif(rng));
        if (sr < su)
            std::swap(sr, su);
        Radius r(lemniscate_sine(ArcParam(sr), ctx));
        Radius u(lemniscate_sine(ArcParam(su), ctx));
        if (sr + su <= om / 2) {
            FoldedRadius t = add_arcs(r, u, ctx);
            worst = std::max(worst, Real(abs(arc_length(t.r, ctx).s - (sr + su))));
            worst = std::max(worst, Real(abs(sub_arcs(t.r, u, ctx).r - r.r)));
        }
        Real theta = acos(r.r * r.r) / 2;
        HalvePair pair = halve_arc(r, theta, ctx);
        worst = std::max(worst, Real(abs(double_arc(pair.direct, ctx).r.r - r.r)));
        QuadraticCoeffs q = sum_quadratic(r, u, ctx);
        Real disc = sqrt(q.B * q.B - 4 * q.C);
        Real t_root = (-q.B + disc) / 2, v_root = (-q.B - disc) / 2;
        worst = std::max(worst, Real(abs(t_root - add_arcs(r, u, ctx).r.r)));
        worst = std::max(worst, Real(abs(v_root - sub_arcs(r, u, ctx).r)));
    }
    std::cout << "100 random on-curve pairs, max error = " << worst.str(6) << "\n";
    return worst <= ctx.eps() ? 0 : 1;
}

int cmd_trace(const std::string& recipe, const std::string& out_path,
              const PrecisionContext& ctx) {
    Scene scene(ctx);
    Frame f = Frame::create(scene);
    std::map<std::string, PointId> outputs;
    std::vector<CertificateEntry> certs;

    if (recipe == "seventeen") {
        NGonResult r = recipe_seventeen_all(scene, f);
        for (std::size_t k = 0; k < r.gon.ids.size(); ++k)
            outputs["V" + std::to_string(k)] = r.gon.ids[k];
        certs = r.certificate;
    } else if (recipe == "seventeen-u") {
        RecipeResult r = recipe_seventeen_u(scene, f);
        outputs = r.outputs;
        certs = r.certificate;
    } else if (recipe == "seventeen-v1") {
        RecipeResult u = recipe_seventeen_u(scene, f);
        RecipeResult r = recipe_seventeen_v1(scene, f, u.at("U"));
        outputs = r.outputs;
        certs = r.certificate;
        certs.insert(certs.end(), u.certificate.begin(), u.certificate.end());
    } else {
        std::cerr << "trace: unknown recipe '" << recipe
                  << "' (choose seventeen, seventeen-u, seventeen-v1)\n";
        return 1;
    }

    nlohmann::json doc = make_trace(scene, outputs, certs);
    replay_trace(doc);  // must reproduce coordinates exactly
    int rc = write_output(out_path, doc.dump(1) + "\n");
    if (rc != 0)
        return rc;
    std::cout << "trace " << recipe << ": " << scene.steps().size()
              << " steps, replay verified\n";
    print_certs(certs, false);
    return all_pass(certs) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ruler-and-compass arc arithmetic on Bernoulli's lemniscate"};
    app.require_subcommand(1);
    app.fallthrough();  // global --precision may follow the subcommand

    unsigned precision = 30;
    app.add_option("--precision,-p", precision, "working precision in decimal digits (>= 15)")
        ->envname("LEMNI_PRECISION")
        ->check(CLI::Range(15u, 10000u));

    auto* ngon = app.add_subcommand("ngon", "regular n-gon on the curve");
    int n = 17;
    bool construct_mode = false, numeric_mode = false, verbose = false;
    std::string format, out_path;
    ngon->add_option("n", n, "number of vertices")->required()->check(CLI::PositiveNumber);
    ngon->add_flag("--construct", construct_mode, "run the ruler-and-compass construction");
    ngon->add_flag("--numeric", numeric_mode, "vertices from the arc-length oracle");
    ngon->add_option("--format", format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
    ngon->add_option("--out,-o", out_path, "output path (default stdout)");
    ngon->add_flag("--verbose,-v", verbose, "print every certificate");

    auto* arc = app.add_subcommand("arc", "arc arithmetic on radii");
    std::string arc_op;
    std::vector<std::string> arc_args;
    arc->add_option("op", arc_op, "add | sub | double | halve")->required();
    arc->add_option("args", arc_args, "operands");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "radicals | seventeen | arcs")->required();

    auto* trace = app.add_subcommand("trace", "write a replayable JSON trace");
    std::string trace_recipe, trace_out;
    trace->add_option("recipe", trace_recipe, "seventeen | seventeen-u | seventeen-v1")
        ->required();
    trace->add_option("out", trace_out, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        PrecisionContext ctx(precision);
        if (ngon->parsed()) {
            if (construct_mode && numeric_mode)
                throw CLI::ValidationError("choose one of --construct / --numeric");
            return cmd_ngon(n, !construct_mode, ctx, format, out_path, verbose);
        }
        if (arc->parsed())
            return cmd_arc(arc_op, arc_args, ctx);
        if (verify->parsed()) {
            if (suite == "radicals")
                return verify_radicals(ctx);
            if (suite == "seventeen")
                return verify_seventeen(ctx);
            if (suite == "arcs")
                return verify_arcs(ctx);
            std::cerr << "verify: unknown suite '" << suite << "'\n";
            return 1;
        }
        if (trace->parsed())
            return cmd_trace(trace_recipe, trace_out, ctx);
    } catch (const std::exception& e) {
        std::cerr << "lemni: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
