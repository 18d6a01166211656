#include "slopekit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slopekit/covers.hpp"
#include "slopekit/density.hpp"
#include "slopekit/error.hpp"
#include "slopekit/fox.hpp"
#include "slopekit/io.hpp"
#include "slopekit/jumping_loci.hpp"
#include "slopekit/surface.hpp"

namespace slopekit::cli {

namespace {

[[noreturn]] void usage_error(const std::string& message) { throw Error("cli", "usage", message); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cli", "io", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text")
        return OutputFormat::text;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    usage_error("unknown format '" + s + "' (expected text, json or csv)");
}

OutputFormat resolve_format(const RunConfig& c) {
    if (c.format != OutputFormat::automatic)
        return c.format;
    return c.subcommand == "density" ? OutputFormat::csv : OutputFormat::text;
}

void require(bool present, const RunConfig& c, const char* flag) {
    if (!present)
        usage_error(c.subcommand + " requires " + flag);
}

GroupPresentation load_presentation(const RunConfig& c) {
    if (*c.input == kCartwrightSteger)
        usage_error("'cartwright-steger' names a numeric profile; " + c.subcommand +
                    " needs a presentation file (its presentation is not built in)");
    return parse_presentation(read_file(*c.input));
}

AbelianEpimorphism load_epimorphism(const RunConfig& c) {
    if (c.epimorphism_path)
        return epimorphism_from_json(Json::parse(read_file(*c.epimorphism_path)));
    return AbelianEpimorphism::cyclic(*c.cyclic, *c.weights);
}

std::string abelian_text(const AbelianGroupStructure& h) {
    std::ostringstream os;
    bool any = false;
    if (h.free_rank > 0) {
        os << "Z^" << h.free_rank;
        any = true;
    }
    for (const Integer& t : h.torsion_coefficients) {
        os << (any ? " + " : "") << "Z/" << t;
        any = true;
    }
    return any ? os.str() : "0";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_error(std::ostream& err, const std::string& module, const std::string& kind, const std::string& message) {
    err << Json{{"error", Json{{"module", module}, {"kind", kind}, {"message", message}}}}.dump() << '\n';
}

int run_abelianize(const RunConfig& c, std::ostream& out) {
    const AbelianGroupStructure h = abelianization(load_presentation(c));
    if (resolve_format(c) == OutputFormat::json) {
        Json torsion = Json::array();
        for (const Integer& t : h.torsion_coefficients)
            torsion.push_back(t.get_str());
        print_json(out, Json{{"free_rank", h.free_rank}, {"torsion_coefficients", torsion}});
    } else {
        out << "H1 = " << abelian_text(h) << '\n';
    }
    return 0;
}

int run_alexander(const RunConfig& c, std::ostream& out) {
    const GroupPresentation p = load_presentation(c);
    const bool json = resolve_format(c) == OutputFormat::json;
    if (c.character) {
        const AlexanderEvaluator evaluator(p);
        const TorsionCharacter xi = parse_character(*c.character);
        const CyclotomicMatrix m = evaluator.evaluate(xi);
        const int h1 = evaluator.twisted_h1(xi);
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& z : row)
                r.push_back(z.to_string());
            rows.push_back(r);
        }
        if (json) {
            print_json(out, Json{{"character", xi.to_string()},
                                 {"matrix", rows},
                                 {"rank", cyclotomic_rank(m)},
                                 {"twisted_h1", h1}});
        } else {
            out << "character " << xi.to_string() << " (z = primitive " << xi.modulus() << "-th root of unity)\n";
            for (std::size_t j = 0; j < m.size(); ++j) {
                out << "row " << j + 1 << ": [";
                for (std::size_t i = 0; i < m[j].size(); ++i)
                    out << (i ? ", " : "") << m[j][i].to_string();
                out << "]\n";
            }
            out << "rank " << cyclotomic_rank(m) << "\nh1 " << h1 << '\n';
        }
        return 0;
    }

    const AlexanderMatrix a = alexander_matrix(p);
    const std::size_t b = static_cast<std::size_t>(abelianization(p).free_rank);
    if (json) {
        Json rows = Json::array();
        for (const auto& row : a) {
            Json r = Json::array();
            for (const auto& entry : row)
                r.push_back(entry.to_string());
            rows.push_back(r);
        }
        print_json(out, Json{{"rows", a.size()}, {"cols", p.generator_count()}, {"variables", b}, {"matrix", rows}});
    } else {
        out << "alexander matrix " << a.size() << " x " << p.generator_count() << " in " << b << " variable(s)\n";
        for (std::size_t j = 0; j < a.size(); ++j) {
            out << "row " << j + 1 << ": [";
            for (std::size_t i = 0; i < a[j].size(); ++i)
                out << (i ? ", " : "") << a[j][i].to_string();
            out << "]\n";
        }
    }
    return 0;
}

void print_report_text(std::ostream& out, const JumpingLocusReport& report) {
    out << "scan bound: " << report.scan_bound << '\n';
    out << "b1: " << report.b1 << '\n';
    out << "nontrivial characters in W_1: " << report.entries.size() << '\n';
    for (const LocusEntry& e : report.entries)
        out << "  " << e.character.to_string() << " depth " << e.depth << '\n';
    out << "exponent: " << report.exponent << '\n';
}

int run_scan(const RunConfig& c, std::ostream& out) {
    const JumpingLocusReport report = scan_jumping_loci(load_presentation(c), *c.max_order, c.threads);
    if (resolve_format(c) == OutputFormat::json)
        print_json(out, report_to_json(report));
    else
        print_report_text(out, report);
    return 0;
}

int run_cover_b1(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const GroupPresentation p = load_presentation(c);
    const AbelianEpimorphism alpha = load_epimorphism(c);
    const JumpingLocusReport report = scan_jumping_loci(p, *c.max_order, c.threads);
    const CoverBetti hironaka = hironaka_b1(report.b1, report, alpha);
    const SubgroupPresentation sub = reidemeister_schreier(p, alpha);
    const long rs = abelianization(sub.presentation).free_rank;
    const bool agree = hironaka.b1 == rs;

    std::optional<CoprimeCoverResult> coprime;
    if (!c.epimorphism_path)
        coprime = coprime_cover_b1(report.b1, report, *c.cyclic, *c.weights);

    if (resolve_format(c) == OutputFormat::json) {
        Json j{{"cover_order", alpha.order()},
               {"epimorphism", epimorphism_to_json(alpha)},
               {"scan_bound", report.scan_bound},
               {"exponent", report.exponent},
               {"hironaka_b1", hironaka.b1},
               {"reidemeister_schreier_b1", rs},
               {"euler_relation", sub.euler_relation_holds()},
               {"routes_agree", agree}};
        if (hironaka.warning)
            j["warning"] = *hironaka.warning;
        if (coprime && coprime->certificate)
            j["coprime_certificate"] = Json{{"d", coprime->certificate->d},
                                            {"exponent", coprime->certificate->exponent},
                                            {"no_entry_factors", coprime->certificate->no_entry_factors}};
        print_json(out, j);
    } else {
        out << "cover order: " << alpha.order() << '\n';
        out << "hironaka b1: " << hironaka.b1 << '\n';
        out << "reidemeister-schreier b1: " << rs << '\n';
        out << "routes agree: " << (agree ? "yes" : "no") << '\n';
        if (coprime && coprime->certificate)
            out << "coprime certificate: gcd(" << coprime->certificate->d << ", " << coprime->certificate->exponent
                << ") = 1\n";
        if (hironaka.warning)
            out << "warning: " << *hironaka.warning << '\n';
    }
    if (!agree) {
        const std::string cause = report.scan_bound < alpha.exponent()
                                      ? "the scan bound is below exp(S), so the jumping-locus scan may be incomplete"
                                      : "the scan covers exp(S), so this indicates a bug";
        emit_error(err, "cli", "route-mismatch",
                   "hironaka b1 " + std::to_string(hironaka.b1) + " differs from reidemeister-schreier b1 " +
                       std::to_string(rs) + "; " + cause);
        return 3;
    }
    return 0;
}

int run_invariants(const RunConfig& c, std::ostream& out) {
    auto [base, fibration] = cartwright_steger_profile();
    std::int64_t fiber_genus = fibration.fiber_genus;
    if (c.input && *c.input != kCartwrightSteger) {
        base = invariants_from_json(Json::parse(read_file(*c.input)));
        fiber_genus = c.fiber_genus;
    } else if (c.fiber_genus != 19) {
        usage_error("the cartwright-steger profile has fiber genus 19; pass an invariants file to change it");
    }
    const FamilyParams params = FamilyParams::create(*c.d, *c.k);
    const SurfaceInvariants cover = cyclic_cover_invariants(base, params.d, c.q_cover.value_or(base.q()));
    const SurfaceInvariants surface = branched_double_cover_invariants(cover, params.k, fiber_genus);
    const Rational s = slope(surface);
    const bool geography = check_geography(surface);
    const bool congruent = params.satisfies_exponent(c.exponent);

    if (resolve_format(c) == OutputFormat::json) {
        print_json(out, Json{{"d", params.d},
                             {"k", params.k},
                             {"fiber_genus", fiber_genus},
                             {"base", invariants_to_json(base)},
                             {"cyclic_cover", invariants_to_json(cover)},
                             {"surface", invariants_to_json(surface)},
                             {"slope", s.get_str()},
                             {"geography", geography},
                             {"exponent", c.exponent},
                             {"d_congruent_1_mod_e", congruent}});
    } else {
        auto line = [&](const char* label, const SurfaceInvariants& x) {
            out << label << ": K2=" << x.K2() << " chi=" << x.chi() << " q=" << x.q() << " pg=" << x.pg() << '\n';
        };
        line("X", base);
        line("X_d", cover);
        line("S_{d,k}", surface);
        out << "slope " << s.get_str() << '\n';
        out << "geography " << (geography ? "ok" : "violated") << '\n';
        out << "d = 1 mod " << c.exponent << ": " << (congruent ? "yes" : "no") << '\n';
    }
    return 0;
}

int run_density(const RunConfig& c, std::ostream& out) {
    if (c.input && *c.input != kCartwrightSteger)
        usage_error("density only supports --input cartwright-steger");
    const Rational epsilon = parse_rational(*c.epsilon);
    const OutputFormat format = resolve_format(c);

    if (c.target) {
        const TargetSlope t = parse_target(*c.target);
        const ConvergenceReport r = convergence_report(t, c.exponent, c.fiber_genus, epsilon);
        DensityCertificate single;
        single.epsilon = epsilon;
        single.exponent = c.exponent;
        single.fiber_genus = c.fiber_genus;
        single.entries.push_back(r);
        if (format == OutputFormat::csv) {
            write_certificate_csv(out, single);
        } else if (format == OutputFormat::json) {
            print_json(out, Json{{"p", t.p()},
                                 {"q", t.q()},
                                 {"target", t.value().get_str()},
                                 {"epsilon", epsilon.get_str()},
                                 {"n", r.n},
                                 {"d", r.params.d},
                                 {"k", r.params.k},
                                 {"slope", r.achieved.get_str()},
                                 {"gap", r.gap.get_str()}});
        } else {
            out << "target " << t.value().get_str() << ": n=" << r.n << " d=" << r.params.d << " k=" << r.params.k
                << " slope=" << r.achieved.get_str() << " gap=" << r.gap.get_str() << '\n';
        }
        if (c.plot_path) {
            std::ofstream svg(*c.plot_path);
            write_convergence_svg(svg, {t}, c.exponent, c.fiber_genus, std::max<std::int64_t>(r.n, 2));
        }
        return 0;
    }

    const DensityCertificate cert = density_certificate(epsilon, c.exponent, c.fiber_genus, *c.max_denominator);
    if (!verify_certificate(cert))
        throw Error("density", "internal", "certificate failed independent re-verification");
    if (format == OutputFormat::csv) {
        write_certificate_csv(out, cert);
    } else if (format == OutputFormat::json) {
        print_json(out, certificate_to_json(cert));
    } else {
        out << "epsilon " << cert.epsilon.get_str() << ", " << cert.entries.size() << " targets, coverage radius "
            << coverage_radius(cert).get_str() << '\n';
        for (const auto& e : cert.entries)
            out << "  9 - " << e.target.p() << '/' << e.target.q() << ": n=" << e.n << " d=" << e.params.d
                << " k=" << e.params.k << " slope=" << e.achieved.get_str() << " gap=" << e.gap.get_str() << '\n';
    }
    if (c.plot_path) {
        std::vector<TargetSlope> targets;
        for (const auto& e : cert.entries)
            targets.push_back(e.target);
        std::ofstream svg(*c.plot_path);
        write_convergence_svg(svg, targets, c.exponent, c.fiber_genus, 10);
    }
    return 0;
}

} // namespace

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            Rational r(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
            if (r.get_den() == 0)
                throw std::invalid_argument("zero denominator");
            r.canonicalize();
            return r;
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos)
            return Rational(Integer(text, 10));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t scale = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("decimal");
        Integer den = 1;
        for (std::size_t i = 0; i < scale; ++i)
            den *= 10;
        Rational r(Integer(digits, 10), den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        usage_error("cannot parse rational '" + text + "'");
    }
}

std::vector<long> parse_weights(const std::string& text) {
    std::vector<long> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            usage_error("cannot parse weights '" + text + "'");
        }
    }
    if (out.empty())
        usage_error("empty weight list");
    return out;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"slopekit: jumping loci, abelian cover Betti numbers and slope geography"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunConfig c;
    std::string input, weights, epimorphism, character, target, epsilon, format, out_path, plot;
    long max_order = 0, cyclic = 0;
    std::int64_t d = 0, k = 0, q_cover = 0, max_denominator = 0;

    struct Flags {
        CLI::Option *input = nullptr, *max_order = nullptr, *cyclic = nullptr, *weights = nullptr,
                    *epimorphism = nullptr, *character = nullptr, *d = nullptr, *k = nullptr, *q_cover = nullptr,
                    *target = nullptr, *epsilon = nullptr, *max_denominator = nullptr, *format = nullptr,
                    *out = nullptr, *plot = nullptr;
    };
    std::vector<std::pair<CLI::App*, Flags>> subs;

    auto add = [&](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        Flags f;
        f.input = sub->add_option("--input", input, "presentation file (or 'cartwright-steger')");
        f.format = sub->add_option("--format", format, "text | json | csv");
        f.out = sub->add_option("--out", out_path, "write output to this file");
        subs.emplace_back(sub, f);
        return std::pair<CLI::App*, Flags*>{sub, &subs.back().second};
    };
    subs.reserve(6);

    add("abelianize", "H_1 structure of a presentation");
    {
        auto [sub, f] = add("alexander", "Alexander matrix, optionally evaluated at a character");
        f->character = sub->add_option("--char", character, "torsion character m:k1,k2,...");
    }
    {
        auto [sub, f] = add("scan", "jumping loci W_i up to a character order bound");
        f->max_order = sub->add_option("--max-order", max_order, "largest character order scanned");
    }
    {
        auto [sub, f] = add("cover-b1", "b_1 of an abelian cover by two independent routes");
        f->max_order = sub->add_option("--max-order", max_order, "largest character order scanned");
        f->cyclic = sub->add_option("--cyclic", cyclic, "cyclic cover order d");
        f->weights = sub->add_option("--weights", weights, "images of the free generators, a1,a2,...");
        f->epimorphism = sub->add_option("--epimorphism", epimorphism, "epimorphism JSON file");
    }
    {
        auto [sub, f] = add("invariants", "invariants and slope of S_{d,k}");
        f->d = sub->add_option("--d", d, "cyclic cover order");
        f->k = sub->add_option("--k", k, "half the number of branch fibers");
        f->q_cover = sub->add_option("--q-cover", q_cover, "irregularity of X_d (default: q of the base)");
        sub->add_option("--exponent", c.exponent, "exponent e(G) for the d = 1 mod e check");
        sub->add_option("--fiber-genus", c.fiber_genus, "fiber genus (invariants files only)");
    }
    {
        auto [sub, f] = add("density", "slope density certificate for [8, 9]");
        f->target = sub->add_option("--target", target, "single target fraction p/q (slope 9 - p/q)");
        f->epsilon = sub->add_option("--epsilon", epsilon, "tolerance, e.g. 1/10 or 0.001");
        f->max_denominator = sub->add_option("--max-denominator", max_denominator, "Farey order Q");
        f->plot = sub->add_option("--plot", plot, "also write an SVG scatter of slope against n");
        sub->add_option("--exponent", c.exponent, "exponent e(G)");
        sub->add_option("--fiber-genus", c.fiber_genus, "fiber genus g(F)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        usage_error(e.what());
    }

    for (auto& [sub, f] : subs) {
        if (!sub->parsed())
            continue;
        c.subcommand = sub->get_name();
        auto given = [](CLI::Option* o) { return o != nullptr && o->count() > 0; };
        if (given(f.input)) c.input = input;
        if (given(f.max_order)) c.max_order = max_order;
        if (given(f.cyclic)) c.cyclic = cyclic;
        if (given(f.weights)) c.weights = parse_weights(weights);
        if (given(f.epimorphism)) c.epimorphism_path = epimorphism;
        if (given(f.character)) c.character = character;
        if (given(f.d)) c.d = d;
        if (given(f.k)) c.k = k;
        if (given(f.q_cover)) c.q_cover = q_cover;
        if (given(f.target)) c.target = target;
        if (given(f.epsilon)) c.epsilon = epsilon;
        if (given(f.max_denominator)) c.max_denominator = max_denominator;
        if (given(f.format)) c.format = parse_format(format);
        if (given(f.out)) c.out_path = out_path;
        if (given(f.plot)) c.plot_path = plot;
    }
    return c;
}

void validate(const RunConfig& c) {
    const std::string& s = c.subcommand;
    if (s == "abelianize" || s == "alexander" || s == "scan" || s == "cover-b1")
        require(c.input.has_value(), c, "--input");
    if (s == "scan" || s == "cover-b1") {
        require(c.max_order.has_value(), c, "--max-order (the scan bound is never defaulted)");
        if (*c.max_order < 1)
            usage_error("--max-order must be >= 1");
    }
    if (s == "cover-b1") {
        const bool shorthand = c.cyclic || c.weights;
        if (shorthand == c.epimorphism_path.has_value())
            usage_error("cover-b1 requires either --cyclic with --weights or --epimorphism");
        if (shorthand) {
            require(c.cyclic.has_value(), c, "--cyclic");
            require(c.weights.has_value(), c, "--weights");
        }
    }
    if (s == "invariants") {
        require(c.d.has_value(), c, "--d");
        require(c.k.has_value(), c, "--k");
    }
    if (s == "density") {
        require(c.epsilon.has_value(), c, "--epsilon");
        if (!c.target)
            require(c.max_denominator.has_value(), c, "--max-denominator (or --target)");
    }
    if (c.format == OutputFormat::csv && s != "density")
        usage_error("csv output is only available for density");
    if (c.plot_path && s != "density")
        usage_error("--plot is only available for density");
    if (c.exponent < 1)
        usage_error("--exponent must be >= 1");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        std::ofstream file;
        std::ostream* sink = &out;
        if (config.out_path) {
            file.open(*config.out_path, std::ios::binary);
            if (!file)
                throw Error("cli", "io", "cannot write '" + *config.out_path + "'");
            sink = &file;
        }
        const std::string& s = config.subcommand;
        if (s == "abelianize")
            return run_abelianize(config, *sink);
        if (s == "alexander")
            return run_alexander(config, *sink);
        if (s == "scan")
            return run_scan(config, *sink);
        if (s == "cover-b1")
            return run_cover_b1(config, *sink, err);
        if (s == "invariants")
            return run_invariants(config, *sink);
        if (s == "density")
            return run_density(config, *sink);
        usage_error("unknown subcommand '" + s + "'");
    } catch (const Error& e) {
        emit_error(err, e.module(), e.kind(), e.what());
        return e.kind() == "usage" ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        emit_error(err, "cli", "parse", e.what());
        return 1;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse_command_line(argc, argv, out);
    } catch (const Error& e) {
        emit_error(err, e.module(), e.kind(), e.what());
        return 2;
    }
    if (!config)
        return 0;
    if (const char* env = std::getenv("SLOPEKIT_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1)
                config->threads = static_cast<unsigned>(cap);
        } catch (const std::logic_error&) {
            emit_error(err, "cli", "usage", std::string("SLOPEKIT_THREADS must be a positive integer, got '") + env + "'");
            return 2;
        }
    }
    return run(*config, out, err);
}

} // namespace slopekit::cli
