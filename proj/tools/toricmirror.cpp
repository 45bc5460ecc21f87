// Command-line front end: reads an input document, writes JSON reports or SVG figures.
#include <toricmirror/io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace toricmirror;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2 };

struct Flags {
    std::string input;
    std::string out;
    std::string format = "json";
    std::string region;
    std::string ell;
    std::string divisor;
    std::string kinks;
    long long d = 3;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned threads = 1;
};

void emit(const Flags& f, const std::string& command, const std::string& body, const std::string& ext)
{
    if (f.out.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::create_directories(f.out);
    auto path = std::filesystem::path(f.out) / (command + "." + ext);
    std::ofstream o(path, std::ios::binary);
    if (!o) throw InputError("cannot write " + path.string());
    o << body;
    std::cout << path.string() << "\n";
}

void emit_json(const Flags& f, const std::string& command, const InputDocument* doc, Json result)
{
    emit(f, command, report_envelope(command, doc, std::move(result)).dump(2) + "\n", "json");
}

InputDocument need_input(const Flags& f)
{
    if (f.input.empty()) throw InputError("--input is required");
    return load_input(f.input);
}

std::optional<std::string> region_arg(const Flags& f)
{
    if (f.region.empty()) return std::nullopt;
    return f.region;
}

ResolvedTwisting need_twisting(const Flags& f, const InputDocument& doc)
{
    if (f.ell.empty()) throw InputError("--ell is required");
    return resolve_twisting(doc, f.ell, region_arg(f));
}

const SubdividedPolytope& need_polytope(const InputDocument& doc)
{
    if (!doc.polytope) throw InputError("document has no polytope");
    return *doc.polytope;
}

int cmd_validate(const Flags& f)
{
    InputDocument doc = need_input(f);
    Json r;
    bool ok = true;
    std::optional<TropicalCurve> curve;
    if (doc.polytope) {
        auto v = validate(*doc.polytope);
        r["polytope"] = report_validation(v);
        ok = ok && v.ok();
        if (v.ok()) curve = tropical_curve(*doc.polytope);
    }
    if (doc.fan) {
        std::string defect = fan_defect(*doc.fan);
        r["fan"] = {{"ok", defect.empty()}, {"message", defect}};
        ok = ok && defect.empty();
    }
    Json tw = Json::object();
    for (const auto& [name, e] : doc.twisting) {
        Json x;
        try {
            auto t = resolve_twisting(doc, name, std::nullopt);
            auto v = validate_twisting(t.fan, t.ell);
            x = {{"ok", v.ok()}, {"failures", v.failures}};
            ok = ok && v.ok();
        } catch (const InputError& err) {
            x = {{"ok", false}, {"failures", {err.what()}}};
            ok = false;
        }
        tw[name] = x;
    }
    if (!doc.twisting.empty()) r["twisting"] = tw;
    Json kk = Json::object();
    for (const auto& [name, k] : doc.kinks) {
        Json x;
        if (!curve) {
            x = {{"ok", false}, {"failures", {"kinks need a valid polytope"}}};
            ok = false;
        } else if (k.size() != curve->bounded_edges.size()) {
            x = {{"ok", false},
                 {"failures", {"expected " + std::to_string(curve->bounded_edges.size()) + " kinks, got " + std::to_string(k.size())}}};
            ok = false;
        } else {
            x = {{"ok", true}, {"in_kernel", !first_failing_region(*curve, k).has_value()}};
        }
        kk[name] = x;
    }
    if (!doc.kinks.empty()) r["kinks"] = kk;
    r["ok"] = ok;
    emit_json(f, "validate", &doc, r);
    return ok ? kOk : kInputError;
}

int cmd_tropical(const Flags& f)
{
    InputDocument doc = need_input(f);
    TropicalCurve c = tropical_curve(need_polytope(doc));
    if (f.format == "svg") emit(f, "tropical", render_curve_svg(c), "svg");
    else emit_json(f, "tropical", &doc, report_tropical(c));
    return kOk;
}

int cmd_picard(const Flags& f)
{
    InputDocument doc = need_input(f);
    TropicalCurve c = tropical_curve(need_polytope(doc));
    auto basis = picard_basis(c);
    Json r;
    r["bounded_edges"] = c.bounded_edges.size();
    r["rank"] = basis.size();
    Json b = Json::array();
    for (const auto& k : basis) b.push_back(to_json(k));
    r["kernel_basis"] = b;
    auto regions = bounded_regions(c);
    Json canon = Json::object();
    for (std::size_t i = 0; i < regions.size(); ++i) {
        std::string name = "C" + std::to_string(i);
        if (!f.region.empty() && parse_region(f.region, regions.size()) != i) continue;
        canon[name] = {{"dual_vertex", to_json(regions[i].dual_vertex)}, {"K", to_json(canonical_KC(c, regions[i]))}};
    }
    r["canonical"] = canon;
    Json named = Json::object();
    bool ok = true;
    for (const auto& [name, k] : doc.kinks) {
        if (k.size() != c.bounded_edges.size())
            throw InputError("kinks '" + name + "' need " + std::to_string(c.bounded_edges.size()) + " entries");
        Json x;
        auto bad = first_failing_region(c, k);
        x["in_kernel"] = !bad.has_value();
        if (bad) {
            x["failing_region"] = "C" + std::to_string(*bad);
            ok = false;
        } else {
            x["support_values"] = to_json(support_from_kinks(c, k).values);
        }
        named[name] = x;
    }
    if (!doc.kinks.empty()) r["kinks"] = named;
    emit_json(f, "picard", &doc, r);
    return ok ? kOk : kMismatch;
}

int cmd_sphere(const Flags& f)
{
    InputDocument doc = need_input(f);
    ResolvedTwisting t = need_twisting(f, doc);
    Json r = report_sphere(t.fan, t.ell);
    if (!r["valid"].get<bool>()) {
        emit_json(f, "sphere", &doc, r);
        return kInputError;
    }
    if (f.format == "svg") emit(f, "sphere", render_gamma_svg(gamma_curve(theta_from_twisting(t.fan, t.ell))), "svg");
    else emit_json(f, "sphere", &doc, r);
    return kOk;
}

int cmd_winding(const Flags& f)
{
    InputDocument doc = need_input(f);
    ResolvedTwisting t = need_twisting(f, doc);
    require_valid_twisting(t.fan, t.ell);
    auto th = theta_from_twisting(t.fan, t.ell);
    auto table = winding_table(th, f.threads, doc.options.search_margin);
    if (f.format == "svg") {
        emit(f, "winding", render_gamma_svg(gamma_curve(th), table), "svg");
        return kOk;
    }
    Json r = report_winding(table);
    r["ell"] = to_json(t.ell);
    r["rays"] = to_json(t.fan.rays);
    emit_json(f, "winding", &doc, r);
    return kOk;
}

int cmd_cohomology(const Flags& f)
{
    InputDocument doc = need_input(f);
    ToricSupportFunction psi;
    Json r;
    if (!f.divisor.empty()) {
        auto fan = region_fan(doc, region_arg(f));
        IntVector a = parse_int_list(f.divisor);
        psi = support_from_divisor(fan, a);
        r["rays"] = to_json(fan.rays);
    } else {
        ResolvedTwisting t = need_twisting(f, doc);
        require_valid_twisting(t.fan, t.ell);
        psi = psi_from_theta(theta_from_twisting(t.fan, t.ell));
        r["rays"] = to_json(t.fan.rays);
        r["ell"] = to_json(t.ell);
    }
    r["divisor"] = to_json(divisor_coeffs(psi));
    r["intersections"] = to_json(intersection_numbers(psi));
    r["dims"] = report_cohomology(cohomology_dims(psi, f.threads, doc.options.search_margin));
    emit_json(f, "cohomology", &doc, r);
    return kOk;
}

int cmd_theorem(const Flags& f)
{
    InputDocument doc = need_input(f);
    ResolvedTwisting t = need_twisting(f, doc);
    require_valid_twisting(t.fan, t.ell);
    auto rep = verify_winding_theorem(theta_from_twisting(t.fan, t.ell), f.threads);
    Json r = report_theorem(rep);
    r["rays"] = to_json(t.fan.rays);
    r["ell"] = to_json(t.ell);
    emit_json(f, "verify-winding-theorem", &doc, r);
    return rep.match ? kOk : kMismatch;
}

int cmd_a2d(const Flags& f)
{
    auto ex = build_a2d_example(f.d);
    auto rep = verify_a2d_configuration(ex);
    Json r = report_a2d(ex, rep);
    TropicalCurve c = tropical_curve(a2d_polytope(f.d));
    r["picard_rank"] = picard_rank(c);
    emit_json(f, "a2d", nullptr, r);
    return rep.ok() ? kOk : kMismatch;
}

int cmd_smooth(const Flags& f)
{
    InputDocument doc = need_input(f);
    const Options& o = doc.options;
    std::uint64_t seed = f.seed_set ? f.seed : o.seed;
    Json r;
    bool ok = true;
    if (doc.polytope && f.ell.empty()) {
        std::vector<Integer> values = doc.polytope->nu;
        if (!f.kinks.empty()) {
            auto it = doc.kinks.find(f.kinks);
            if (it == doc.kinks.end()) throw InputError("no kink vector named '" + f.kinks + "'");
            values = support_from_kinks(tropical_curve(*doc.polytope), it->second).values;
        }
        auto rep = check_support_smoothing(*doc.polytope, values, {o.epsilon, o.quadrature_order},
                                           static_cast<std::size_t>(o.samples), seed);
        r["support"] = report_smoothing(rep);
        ok = ok && rep.ok();
    }
    if (!f.ell.empty()) {
        ResolvedTwisting t = need_twisting(f, doc);
        require_valid_twisting(t.fan, t.ell);
        auto rep = check_hessian_definiteness(theta_from_twisting(t.fan, t.ell), {o.epsilon, o.quadrature_order},
                                              static_cast<std::size_t>(o.samples), seed);
        r["hessian"] = report_hessian(rep);
        ok = ok && rep.ok();
    }
    if (r.empty()) throw InputError("smooth-check needs a polytope or --ell");
    r["ok"] = ok;
    emit_json(f, "smooth-check", &doc, r);
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tropical curves, spheres and winding numbers on toric Calabi-Yau threefolds"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--input", f.input, "input document (JSON)");
    app.add_option("--out", f.out, "write the report into this directory instead of stdout");
    app.add_option("--format", f.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    app.add_option("--region", f.region, "bounded region C<i>, an index, or 'fan'");
    app.add_option("--ell", f.ell, "named twisting set or an inline list in fan order, such as -14,-9,-14,5");
    app.add_option("--divisor", f.divisor, "divisor coefficients on the rays (cohomology)");
    app.add_option("--kinks", f.kinks, "named kink vector (smooth-check)");
    app.add_option("--seed", f.seed, "seed for numeric sampling")->each([&](const std::string&) { f.seed_set = true; });
    app.add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 256u));

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Flags&);
    };
    const Command commands[] = {
        {"validate", "check the document", cmd_validate},
        {"tropical", "tropical curve of the polytope", cmd_tropical},
        {"picard", "kernel of Phi and canonical classes", cmd_picard},
        {"sphere", "validate twisting numbers, build theta and gamma", cmd_sphere},
        {"winding", "winding table of gamma", cmd_winding},
        {"cohomology", "line bundle cohomology by lattice point labels", cmd_cohomology},
        {"verify-winding-theorem", "compare winding counts with cohomology", cmd_theorem},
        {"a2d", "build and verify the A_{2d-1} configuration", cmd_a2d},
        {"smooth-check", "mollifier numerics", cmd_smooth},
    };
    std::map<CLI::App*, const Command*> dispatch;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
        if (std::string(c.name) == "a2d") sub->add_option("--d", f.d, "d >= 1")->check(CLI::Range(1LL, 1000LL));
        dispatch[sub] = &c;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    try {
        for (auto& [sub, c] : dispatch)
            if (sub->parsed()) return c->run(f);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kInputError;
}
