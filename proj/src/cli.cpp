#include "hochcat/cli.hpp"

#include "hochcat/category_text.hpp"
#include "hochcat/comparison.hpp"
#include "hochcat/derivations.hpp"
#include "hochcat/errors.hpp"
#include "hochcat/fixtures.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <ostream>

namespace hochcat::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxDegree = 16;

Verb parse_verb(const std::string& s)
{
    static const std::vector<std::pair<std::string, Verb>> verbs{
        {"validate", Verb::Validate}, {"props", Verb::Props},     {"fad", Verb::Fad},
        {"cohomology", Verb::Cohomology}, {"compare", Verb::Compare}, {"derivations", Verb::Derivations}};
    for (const auto& [name, verb] : verbs)
        if (name == s)
            return verb;
    throw ArgumentError("UnknownVerb", fmt::format("unknown verb '{}'", s), {{"verb", s}});
}

std::size_t parse_degree(const std::string& s)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v > kMaxDegree)
        throw ArgumentError("BadDegree", fmt::format("invalid degree '{}' (expected 0..{})", s, kMaxDegree),
                            {{"degree", s}});
    return v;
}

std::size_t parse_cap(const std::string& s)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw ArgumentError("BadOption", fmt::format("invalid cap '{}'", s), {{"cap", s}});
    return v;
}

const char* usage_text()
{
    return "usage: hochcat <verb> <input> [--field q|gf:<p>] [--max-degree N] [--output text|json]\n"
           "                              [--cap N] [--theory full|relative|both]\n"
           "verbs: validate props fad cohomology compare derivations\n"
           "input: a category file or a builtin (triv a2 c2 ex6 diamond s3 cn:<k> chain:<k>)\n";
}

FiniteCategory load_input(const std::string& input)
{
    if (is_builtin(input))
        return builtin(input);
    if (!std::filesystem::exists(input))
        throw CategoryError("FileNotFound", fmt::format("no such file or builtin '{}'", input), {{"path", input}});
    return load_category_file(input);
}

Json category_json(const Command& cmd, const FiniteCategory& cat)
{
    return Json{{"name", cmd.input}, {"objects", cat.n_objects()}, {"morphisms", cat.n_morphisms()}};
}

Json error_json(const Error& e)
{
    Json entry{{"kind", e.kind()}};
    for (const auto& [k, v] : e.fields())
        entry[k] = v;
    entry["message"] = e.what();
    return entry;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json opt(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "ok" : "FAIL") : "-"; }

std::string witness_names(const FiniteCategory& cat, const Witness& w)
{
    std::string s;
    for (auto f : w.morphisms) {
        if (!s.empty())
            s += ", ";
        s += cat.morphism_name(f);
    }
    return s;
}

Json predicates_json(const HypothesisFlags& flags)
{
    Json j = Json::object();
    for (const auto& [label, report] : flags.labelled())
        j[std::string(label)] = report->holds;
    return j;
}

// Whether ∂^m (and everything below) fits in the cap.
bool full_fits(const FiniteCategory& cat, std::size_t m, const ComplexLimits& limits)
{
    try {
        full_cochain_dim(cat, m + 1, limits);
        return true;
    } catch (const DimensionCapExceeded&) {
        return false;
    }
}

int run_validate(const Command& cmd, std::ostream& out)
{
    const auto cat = load_input(cmd.input);
    if (cmd.output == OutputFormat::Json)
        emit_json(out, Json{{"category", category_json(cmd, cat)}, {"errors", Json::array()}});
    else
        out << fmt::format("valid: {} objects, {} morphisms\n", cat.n_objects(), cat.n_morphisms());
    return exit_code::ok;
}

int run_props(const Command& cmd, std::ostream& out)
{
    const auto cat = load_input(cmd.input);
    const auto flags = check_hypotheses(cat);
    if (cmd.output == OutputFormat::Json) {
        Json preds = Json::object();
        for (const auto& [label, report] : flags.labelled()) {
            Json p{{"holds", report->holds}};
            if (report->witness) {
                Json names = Json::array();
                for (auto f : report->witness->morphisms)
                    names.push_back(cat.morphism_name(f));
                p["witness"] = Json{{"clause", report->witness->clause},
                                    {"morphisms", names},
                                    {"rendering", report->witness->rendering}};
            }
            preds[std::string(label)] = p;
        }
        emit_json(out, Json{{"category", category_json(cmd, cat)}, {"predicates", preds}});
        return exit_code::ok;
    }
    for (const auto& [label, report] : flags.labelled()) {
        out << fmt::format("{:<22}{}", label, report->holds ? "PASS" : "FAIL");
        if (report->witness)
            out << fmt::format("  witness ({}): {}", witness_names(cat, *report->witness), report->witness->rendering);
        out << '\n';
    }
    return exit_code::ok;
}

int run_fad(const Command& cmd, std::ostream& out)
{
    const auto cat = load_input(cmd.input);
    const auto fad = adjoint_category(cat);
    const auto& d = fad.category();
    if (cmd.output == OutputFormat::Text) {
        out << format_category(d);
        return exit_code::ok;
    }
    Json objects = Json::array();
    for (auto x : d.objects())
        objects.push_back(d.object_name(x));
    Json morphisms = Json::array();
    for (auto eta : d.morphisms()) {
        const auto& s = fad.square(eta);
        morphisms.push_back(Json{{"name", d.morphism_name(eta)},
                                 {"source", d.object_name(d.source(eta))},
                                 {"target", d.object_name(d.target(eta))},
                                 {"square",
                                  {cat.morphism_name(s.a), cat.morphism_name(s.g), cat.morphism_name(s.b)}}});
    }
    emit_json(out, Json{{"category", category_json(cmd, cat)}, {"objects", objects}, {"morphisms", morphisms}});
    return exit_code::ok;
}

template <ExactField F>
int run_cohomology(const Command& cmd, const F& field, std::ostream& out, std::ostream& err)
{
    const auto cat = load_input(cmd.input);
    auto theory = cmd.theory;
    std::optional<std::string> notice;
    if (theory == Theory::Both && !full_fits(cat, cmd.max_degree, cmd.limits)) {
        theory = Theory::Relative;
        notice = fmt::format("full complex exceeds the cap of {} basis elements; relative only", cmd.limits.cap);
    }
    std::vector<std::size_t> full, rel;
    if (theory != Theory::Relative)
        full = hochschild_cohomology_dims(cat, field, cmd.max_degree, cmd.limits);
    if (theory != Theory::Full)
        rel = relative_cohomology_dims(cat, field, cmd.max_degree, cmd.limits);

    auto at = [](const std::vector<std::size_t>& v, std::size_t m) {
        return m < v.size() ? std::optional<std::size_t>(v[m]) : std::nullopt;
    };
    if (cmd.output == OutputFormat::Json) {
        Json degrees = Json::array();
        for (std::size_t m = 0; m <= cmd.max_degree; ++m)
            degrees.push_back(Json{{"m", m}, {"dim_hh", opt(at(full, m))}, {"dim_rel", opt(at(rel, m))}});
        Json j{{"category", category_json(cmd, cat)}, {"field", cmd.field.name()}, {"degrees", degrees}};
        if (notice)
            j["notice"] = *notice;
        emit_json(out, j);
        return exit_code::ok;
    }
    if (notice)
        err << "notice: " << *notice << '\n';
    out << fmt::format("{} over {}\n", cmd.input, cmd.field.name());
    out << fmt::format("{:>3} {:>6} {:>6}\n", "m", "HH", "rel");
    for (std::size_t m = 0; m <= cmd.max_degree; ++m)
        out << fmt::format("{:>3} {:>6} {:>6}\n", m, cell(at(full, m)), cell(at(rel, m)));
    return exit_code::ok;
}

struct DegreeRow {
    std::size_t m = 0;
    std::optional<std::size_t> dim_hh, dim_rel, dim_fad;
    std::optional<bool> t_chain_ok, x_chain_ok, section_ok, two_sided_ok, iso;
};

template <class Fn>
std::optional<bool> guarded(bool hypotheses, Fn&& fn)
{
    if (!hypotheses)
        return std::nullopt;
    return fn();
}

template <ExactField F>
int run_compare(const Command& cmd, const F& field, std::ostream& out)
{
    const auto ctx = ComparisonContext::make(load_input(cmd.input), cmd.limits);
    const auto& flags = ctx.flags;
    const auto& fad = ctx.fad.category();
    const bool det_canc = ctx.deterministic_cancellative();
    const bool section_hyp = flags.right_deterministic.holds && flags.cancellative();

    const auto max_m = cmd.max_degree;
    const bool full_ok = full_fits(ctx.cat, max_m, ctx.limits);
    const auto source = full_ok ? ComplexSource::Full : ComplexSource::Relative;

    std::vector<DegreeRow> rows(max_m + 1);
    std::optional<ComparisonReport<F>> report;
    if (det_canc) {
        report = comparison_report(ctx, field, max_m, source);
        for (std::size_t m = 0; m <= max_m; ++m) {
            const auto& d = report->degrees[m];
            rows[m].dim_hh = d.dim_hh;
            rows[m].dim_rel = d.dim_rel;
            rows[m].dim_fad = d.dim_fad;
            rows[m].iso = d.iso;
        }
    } else {
        const auto rel = relative_cohomology_dims(ctx.cat, field, max_m, ctx.limits);
        const auto fad_dims = simplicial_cohomology_dims(fad, field, max_m, ctx.limits);
        std::vector<std::size_t> full;
        if (full_ok)
            full = hochschild_cohomology_dims(ctx.cat, field, max_m, ctx.limits);
        for (std::size_t m = 0; m <= max_m; ++m) {
            if (full_ok)
                rows[m].dim_hh = full[m];
            rows[m].dim_rel = rel[m];
            rows[m].dim_fad = fad_dims[m];
        }
    }
    for (std::size_t m = 0; m <= max_m; ++m) {
        auto& row = rows[m];
        row.m = m;
        if (full_ok) {
            row.t_chain_ok = guarded(flags.cancellative(), [&] { return verify_t_chain_identity(ctx, field, m).holds; });
            row.x_chain_ok = guarded(det_canc, [&] { return verify_x_chain_identity(ctx, field, m).holds; });
            row.section_ok = guarded(section_hyp, [&] { return verify_section(ctx, field, m).holds; });
            row.two_sided_ok = guarded(ctx.iso_hypotheses(),
                                       [&] { return verify_two_sided_on_relative(ctx, field, m).holds(); });
        }
    }

    bool checks_ok = !report || report->verified();
    for (const auto& row : rows)
        for (const auto& check : {row.t_chain_ok, row.x_chain_ok, row.section_ok, row.two_sided_ok})
            if (check && !*check)
                checks_ok = false;
    std::string verdict = "failed";
    int code = exit_code::failure;
    if (checks_ok && !report) {
        verdict = "unverified";
        code = exit_code::hypothesis;
    } else if (checks_ok) {
        verdict = report->tier == Tier::Isomorphism ? "isomorphism" : "surjective";
        code = exit_code::ok;
    }

    if (cmd.output == OutputFormat::Json) {
        Json degrees = Json::array();
        for (const auto& r : rows)
            degrees.push_back(Json{{"m", r.m},
                                   {"dim_hh", opt(r.dim_hh)},
                                   {"dim_rel", opt(r.dim_rel)},
                                   {"dim_simplicial_fad", opt(r.dim_fad)},
                                   {"t_chain_ok", opt(r.t_chain_ok)},
                                   {"x_chain_ok", opt(r.x_chain_ok)},
                                   {"section_ok", opt(r.section_ok)},
                                   {"iso", opt(r.iso)},
                                   {"two_sided_ok", opt(r.two_sided_ok)}});
        emit_json(out, Json{{"category", category_json(cmd, ctx.cat)},
                            {"field", cmd.field.name()},
                            {"predicates", predicates_json(flags)},
                            {"degrees", degrees},
                            {"verdict", verdict}});
        return code;
    }
    out << fmt::format("{} over {}: {} objects, {} morphisms; F^ad has {} objects, {} morphisms\n", cmd.input,
                       cmd.field.name(), ctx.cat.n_objects(), ctx.cat.n_morphisms(), fad.n_objects(),
                       fad.n_morphisms());
    for (const auto& [label, report_ptr] : flags.labelled())
        out << fmt::format("  {:<22}{}\n", label, report_ptr->holds ? "PASS" : "FAIL");
    out << fmt::format("{:>3} {:>6} {:>6} {:>6} {:>6} {:>6} {:>8} {:>10} {:>5}\n", "m", "HH", "rel", "H(Fad)", "T",
                       "X", "section", "two-sided", "iso");
    for (const auto& r : rows)
        out << fmt::format("{:>3} {:>6} {:>6} {:>6} {:>6} {:>6} {:>8} {:>10} {:>5}\n", r.m, cell(r.dim_hh),
                           cell(r.dim_rel), cell(r.dim_fad), cell(r.t_chain_ok), cell(r.x_chain_ok),
                           cell(r.section_ok), cell(r.two_sided_ok),
                           r.iso ? (*r.iso ? "yes" : "no") : "-");
    out << "verdict: " << verdict << '\n';
    return code;
}

template <ExactField F>
int run_derivations(const Command& cmd, const F& field, std::ostream& out)
{
    const auto ctx = ComparisonContext::make(load_input(cmd.input), cmd.limits);
    const auto der = graded_derivation_space(ctx.cat, field, ctx.limits);
    const auto chr = character_space(ctx.fad.category(), field);

    std::optional<BijectionReport<F>> report;
    if (ctx.iso_hypotheses())
        report = bijection_report(ctx, field);
    std::string verdict = !report ? "unverified" : report->verified() ? "bijection" : "failed";
    const int code = !report ? exit_code::hypothesis : report->verified() ? exit_code::ok : exit_code::failure;

    auto flag = [&](bool BijectionReport<F>::*member) {
        return report ? std::optional<bool>((*report).*member) : std::nullopt;
    };
    if (cmd.output == OutputFormat::Json) {
        emit_json(out, Json{{"category", category_json(cmd, ctx.cat)},
                            {"field", cmd.field.name()},
                            {"predicates", predicates_json(ctx.flags)},
                            {"dim_derivations", der.dim()},
                            {"dim_characters", chr.dim()},
                            {"lands_in_characters", opt(flag(&BijectionReport<F>::lands_in_characters))},
                            {"x_lands_in_derivations", opt(flag(&BijectionReport<F>::x_lands_in_derivations))},
                            {"x_inverts", opt(flag(&BijectionReport<F>::x_inverts))},
                            {"bijection", opt(flag(&BijectionReport<F>::bijection))},
                            {"verdict", verdict}});
        return code;
    }
    out << fmt::format("{} over {}\n", cmd.input, cmd.field.name());
    out << fmt::format("graded derivations: {}\ncharacters on F^ad: {}\n", der.dim(), chr.dim());
    if (report)
        out << fmt::format("T lands in characters: {}\nX lands in derivations: {}\nX inverts T: {}\n",
                           cell(flag(&BijectionReport<F>::lands_in_characters)),
                           cell(flag(&BijectionReport<F>::x_lands_in_derivations)),
                           cell(flag(&BijectionReport<F>::x_inverts)));
    out << "verdict: " << verdict << '\n';
    return code;
}

int report_error(const Command& cmd, const Error& e, int code, std::ostream& out, std::ostream& err)
{
    if (cmd.output == OutputFormat::Json)
        emit_json(out, Json{{"errors", Json::array({error_json(e)})}});
    else
        err << "error: " << e.kind() << ": " << e.what() << '\n';
    return code;
}

} // namespace

Command parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"hochcat"};
    app.set_help_flag();
    std::string verb, input, field = "q", degree = "3", output = "text", theory = "both", cap;
    app.add_option("verb", verb)->required();
    app.add_option("input", input)->required();
    app.add_option("--field", field);
    app.add_option("--max-degree", degree);
    app.add_option("--output", output);
    app.add_option("--cap", cap);
    app.add_option("--theory", theory);

    // The verb is checked before anything else so a typo gets the right error.
    if (!args.empty() && !args.front().starts_with("-"))
        parse_verb(args.front());
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ArgumentError("BadOption", e.what());
    }

    Command cmd;
    cmd.verb = parse_verb(verb);
    cmd.input = input;
    cmd.field = FieldSpec::parse(field);
    cmd.max_degree = parse_degree(degree);
    if (output == "text")
        cmd.output = OutputFormat::Text;
    else if (output == "json")
        cmd.output = OutputFormat::Json;
    else
        throw ArgumentError("BadOutput", fmt::format("unknown output format '{}'", output), {{"output", output}});
    if (theory == "full")
        cmd.theory = Theory::Full;
    else if (theory == "relative")
        cmd.theory = Theory::Relative;
    else if (theory == "both")
        cmd.theory = Theory::Both;
    else
        throw ArgumentError("BadTheory", fmt::format("unknown theory '{}'", theory), {{"theory", theory}});
    cmd.limits = ComplexLimits::from_environment();
    if (!cap.empty())
        cmd.limits.cap = parse_cap(cap);
    return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err)
{
    try {
        switch (cmd.verb) {
        case Verb::Validate:
            return run_validate(cmd, out);
        case Verb::Props:
            return run_props(cmd, out);
        case Verb::Fad:
            return run_fad(cmd, out);
        case Verb::Cohomology:
            return with_field(cmd.field, [&](const auto& f) { return run_cohomology(cmd, f, out, err); });
        case Verb::Compare:
            return with_field(cmd.field, [&](const auto& f) { return run_compare(cmd, f, out); });
        case Verb::Derivations:
            return with_field(cmd.field, [&](const auto& f) { return run_derivations(cmd, f, out); });
        }
    } catch (const CategoryError& e) {
        return report_error(cmd, e, e.kind() == "FileNotFound" ? exit_code::usage : exit_code::failure, out, err);
    } catch (const FixtureError& e) {
        return report_error(cmd, e, exit_code::usage, out, err);
    } catch (const HypothesisViolated& e) {
        return report_error(cmd, e, exit_code::hypothesis, out, err);
    } catch (const DimensionCapExceeded& e) {
        return report_error(cmd, e, exit_code::usage, out, err);
    } catch (const Error& e) {
        return report_error(cmd, e, exit_code::failure, out, err);
    }
    return exit_code::failure;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args.front() == "-h" || args.front() == "--help" || args.front() == "help") {
        (args.empty() ? err : out) << usage_text();
        return args.empty() ? exit_code::usage : exit_code::ok;
    }
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n' << usage_text();
        return exit_code::usage;
    }
    return run(cmd, out, err);
}

} // namespace hochcat::cli
