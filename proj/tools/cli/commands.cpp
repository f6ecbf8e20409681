#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperreg/hyperreg.hpp"

namespace hyperreg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

FieldCtx field_for(const RunConfig& cfg)
{
    const auto pp = prime_power(cfg.q);
    if (!pp) {
        throw ConfigError(std::to_string(cfg.q) + " is not a prime power");
    }
    try {
        return make_field(pp->first, pp->second, ModulusOverrides{cfg.base_modulus, cfg.cubic_modulus});
    } catch (const FieldError& e) {
        throw ConfigError(e.what());
    }
}

Json label_json(CirclePoint cp)
{
    if (cp.is_infinity()) {
        return "inf";
    }
    return cp.label;
}

Json cover_json(const Cover& c)
{
    Json j;
    j["kind"] = c.kind == CoverKind::I ? 1 : 2;
    j["a"] = c.a.index;
    if (c.kind == CoverKind::II) {
        j["b"] = c.b.index;
    }
    j["f"] = c.f.index;
    Json pts = Json::array();
    for (auto p : c.points) {
        pts.push_back(label_json(p));
    }
    j["points"] = std::move(pts);
    return j;
}

Json plane_keys_json(const std::vector<Plane>& planes)
{
    Json arr = Json::array();
    for (const auto& pl : planes) {
        arr.push_back(to_hex(pl.key()));
    }
    return arr;
}

std::vector<PlaneKey> keys_of(const std::vector<Plane>& planes)
{
    std::vector<PlaneKey> k;
    for (const auto& pl : planes) {
        k.push_back(pl.key());
    }
    std::sort(k.begin(), k.end());
    return k;
}

Elt elt_param(const FieldCtx& ctx, const std::optional<unsigned>& v, const char* flag)
{
    if (!v) {
        throw ConfigError(std::string("missing --") + flag);
    }
    if (*v >= ctx.order()) {
        throw ConfigError(std::string("--") + flag + " must be an element index below q^3 = " +
                          std::to_string(ctx.order()));
    }
    return Elt{std::uint16_t(*v)};
}

Cover cover_from_config(const FieldCtx& ctx, const RunConfig& cfg)
{
    try {
        const Elt a = elt_param(ctx, cfg.a, "a");
        const Elt f = elt_param(ctx, cfg.f, "f");
        if (cfg.kind == 1) {
            return cover_type1(ctx, a, f);
        }
        if (cfg.kind == 2) {
            return cover_type2(ctx, a, elt_param(ctx, cfg.b, "b"), f);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("--kind must be 1 or 2");
}

void require_census_capacity(const RunConfig& cfg)
{
    if (cfg.q > cfg.census_max_q) {
        throw ConfigError("capacity: a full plane census at q = " + std::to_string(cfg.q) +
                          " exceeds --census-max-q = " + std::to_string(cfg.census_max_q));
    }
}

void require_cover_capacity(const RunConfig& cfg)
{
    if (cfg.q > 8) {
        throw ConfigError("capacity: exhaustive cover enumeration is limited to q <= 8");
    }
}

Json census_json(const CensusReport& r)
{
    Json j;
    j["q"] = r.q;
    j["count_a"] = r.count_a;
    j["count_b"] = r.count_b;
    j["count_c"] = r.count_c;
    j["total"] = r.total;
    j["covers_total"] = r.covers_total;
    j["identity_x_eq_y"] = r.identity_x_eq_y;
    j["trace_check"] = {{"checked", r.trace_check.checked},
                        {"matched", r.trace_check.matched},
                        {"multiplicity_ok", r.trace_check.multiplicity_ok}};
    j["passed"] = r.passed;
    j["failures"] = r.failures;
    j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

void census_checks(Report& rep, const CensusReport& c)
{
    const std::uint64_t q = c.q;
    rep.check("census_type_a", formulas::type_a(q), c.count_a);
    rep.check("census_type_b", formulas::type_b(q), c.count_b);
    rep.check("census_type_c", formulas::type_c(q), c.count_c);
    rep.check("census_total", formulas::total_planes(q), c.total);
    rep.check("x_eq_y", c.covers_total * formulas::transversals(q), c.count_b);
    if (c.trace_check.checked) {
        rep.check("trace_is_cover", true, c.trace_check.matched);
        rep.check("trace_multiplicity", true, c.trace_check.multiplicity_ok);
    }
}

void covers_checks(Report& rep, const CoverEnumeration& all)
{
    const std::uint64_t q = rep.q;
    rep.check("covers_total", formulas::covers_total(q), all.total());
    rep.check("covers_type1", formulas::covers_type1(q), all.type1);
    rep.check("covers_type2", formulas::covers_type2(q), all.type2);
    rep.check("covers_size", true, all.sizes_ok);
    rep.check("covers_dedup_swap_only", true,
              all.duplicates_are_swaps && all.duplicates_removed * 2 == all.type2_parameters);
    rep.check("covers_families_disjoint", true, all.families_disjoint);
}

}  // namespace

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::check(std::string name, Json expected, Json actual)
{
    const bool ok = expected == actual;
    checks.push_back(Check{std::move(name), std::move(expected), std::move(actual), ok});
}

Report cmd_covers(const RunConfig& cfg)
{
    const auto start = Clock::now();
    const FieldCtx ctx = field_for(cfg);
    require_cover_capacity(cfg);
    Report rep;
    rep.q = cfg.q;
    rep.subcommand = "covers";

    const auto all = enumerate_covers(ctx);
    covers_checks(rep, all);
    rep.data["count"] = all.total();
    rep.data["type1"] = all.type1;
    rep.data["type2"] = all.type2;
    rep.data["type2_parameters"] = all.type2_parameters;
    rep.data["duplicates_removed"] = all.duplicates_removed;
    if (cfg.list) {
        Json lists = Json::array();
        for (const auto& c : all.covers) {
            Json pts = Json::array();
            for (auto p : c.points) {
                pts.push_back(label_json(p));
            }
            lists.push_back(std::move(pts));
        }
        rep.data["covers"] = std::move(lists);
    }
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

Report cmd_transversals(const RunConfig& cfg)
{
    const auto start = Clock::now();
    const FieldCtx ctx = field_for(cfg);
    const Spread spread = build_spread(ctx);
    const Cover cover = cover_from_config(ctx, cfg);

    Report rep;
    rep.q = cfg.q;
    rep.subcommand = "transversals";

    const auto x = hyper_regulus(spread, cover);
    const auto found = transversal_planes(spread, x, cfg.jobs);
    rep.check("transversal_count", formulas::transversals(cfg.q), found.size());
    rep.check("switching_split", true, split_switching_classes(ctx, found).has_value());
    if (cfg.brute_force) {
        const auto slow = transversal_planes_brute_force(spread, x);
        rep.check("brute_force_agrees", true, keys_of(slow) == keys_of(found));
    }
    rep.data["cover"] = cover_json(cover);
    rep.data["count"] = found.size();
    rep.data["planes"] = plane_keys_json(found);
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

Report cmd_switching(const RunConfig& cfg)
{
    const auto start = Clock::now();
    const FieldCtx ctx = field_for(cfg);
    const Spread spread = build_spread(ctx);
    RunConfig type1 = cfg;
    type1.kind = 1;
    const Cover cover = cover_from_config(ctx, type1);

    Report rep;
    rep.q = cfg.q;
    rep.subcommand = "switching";

    const SwitchingPair pair = andre_switching_sets(spread, cover.a, cover.f);
    const auto x = hyper_regulus(spread, cover);
    const std::uint64_t n = formulas::plane_size(cfg.q);
    rep.check("y_size", n, pair.y.size());
    rep.check("z_size", n, pair.z.size());
    rep.check("switching_property", true, has_switching_property(ctx, x.planes, pair));

    std::vector<Plane> both = pair.y;
    both.insert(both.end(), pair.z.begin(), pair.z.end());
    const auto found = transversal_planes(spread, x, cfg.jobs);
    rep.check("union_matches_transversals", true, keys_of(both) == keys_of(found));

    rep.data["cover"] = cover_json(cover);
    rep.data["Y"] = plane_keys_json(pair.y);
    rep.data["Z"] = plane_keys_json(pair.z);
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

Report cmd_census(const RunConfig& cfg)
{
    const auto start = Clock::now();
    const FieldCtx ctx = field_for(cfg);
    require_census_capacity(cfg);
    const Spread spread = build_spread(ctx);

    Report rep;
    rep.q = cfg.q;
    rep.subcommand = "census";

    const bool traces = cfg.trace || cfg.q <= cfg.trace_max_q;
    const auto covers = enumerate_covers(ctx);
    const auto census = run_census(spread, covers, CensusOptions{cfg.jobs, traces});
    census_checks(rep, census);
    rep.data = census_json(census);
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

Report cmd_verify(const RunConfig& cfg)
{
    const auto start = Clock::now();
    const FieldCtx ctx = field_for(cfg);
    require_census_capacity(cfg);
    const std::uint64_t q = cfg.q;

    Report rep;
    rep.q = cfg.q;
    rep.subcommand = "verify";

    // Field self-tests.
    {
        bool exp_log = true;
        std::vector<std::uint64_t> fiber(q, 0);
        for (unsigned i = 1; i < ctx.order(); ++i) {
            const Elt x{std::uint16_t(i)};
            exp_log = exp_log && ctx.exp(ctx.log(x)) == x;
            const Elt n = ctx.norm(x);
            if (ctx.is_base(n)) {
                ++fiber[n.index];
            }
        }
        rep.check("field_exp_log_inverse", true, exp_log);
        Json expected = Json::array(), actual = Json::array();
        for (unsigned f = 1; f < q; ++f) {
            expected.push_back(formulas::plane_size(q));
            actual.push_back(fiber[f]);
        }
        rep.check("field_norm_fibers", expected, actual);
    }

    // Spread.
    std::optional<Spread> spread;
    try {
        spread.emplace(build_spread(ctx));
        rep.check("spread_partition", formulas::point_count(q), formulas::point_count(q));
    } catch (const std::logic_error& e) {
        rep.check("spread_partition", formulas::point_count(q), e.what());
        rep.runtime_seconds = seconds_since(start);
        return rep;
    }
    rep.check("spread_size", formulas::spread_size(q), spread->size());
    if (cfg.check_regularity) {
        rep.check("spread_regular", true, check_regularity(*spread));
    }

    // Covers and census.
    const auto covers = enumerate_covers(ctx);
    covers_checks(rep, covers);
    const bool traces = cfg.trace || cfg.q <= cfg.trace_max_q;
    const auto census = run_census(*spread, covers, CensusOptions{cfg.jobs, traces});
    census_checks(rep, census);

    // Transversals: every cover for small q, a seeded sample otherwise.
    std::vector<std::size_t> chosen;
    if (cfg.q <= cfg.exhaustive_max_q && !cfg.sample) {
        chosen.resize(covers.covers.size());
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            chosen[i] = i;
        }
    } else {
        chosen = sample_covers(covers, cfg.sample.value_or(20), cfg.seed);
    }
    std::uint64_t exact = 0, split = 0, type1 = 0, switching_ok = 0, brute_ok = 0;
    for (auto idx : chosen) {
        const Cover& c = covers.covers[idx];
        const auto x = hyper_regulus(*spread, c);
        const auto found = transversal_planes(*spread, x, cfg.jobs);
        exact += found.size() == formulas::transversals(q);
        split += split_switching_classes(ctx, found).has_value();
        if (c.kind == CoverKind::I) {
            ++type1;
            try {
                const auto pair = andre_switching_sets(*spread, c.a, c.f);
                std::vector<Plane> both = pair.y;
                both.insert(both.end(), pair.z.begin(), pair.z.end());
                switching_ok += keys_of(both) == keys_of(found);
            } catch (const std::logic_error&) {
            }
        }
        if (q == 2) {
            brute_ok += keys_of(transversal_planes_brute_force(*spread, x)) == keys_of(found);
        }
    }
    rep.check("transversals_exact", chosen.size(), exact);
    rep.check("transversals_split", chosen.size(), split);
    rep.check("switching_sets_match", type1, switching_ok);
    if (q == 2) {
        rep.check("transversals_brute_force", chosen.size(), brute_ok);
    }
    rep.data["census"] = census_json(census);
    rep.data["covers_checked"] = chosen.size();
    rep.data["covers_exhaustive"] = chosen.size() == covers.covers.size();
    if (chosen.size() != covers.covers.size()) {
        rep.data["seed"] = cfg.seed;
        Json sampled = Json::array();
        for (auto idx : chosen) {
            sampled.push_back(cover_json(covers.covers[idx]));
        }
        rep.data["sampled_covers"] = std::move(sampled);
    }
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

Report run_command(const RunConfig& cfg)
{
    if (cfg.subcommand == "verify") {
        return cmd_verify(cfg);
    }
    if (cfg.subcommand == "census") {
        return cmd_census(cfg);
    }
    if (cfg.subcommand == "covers") {
        return cmd_covers(cfg);
    }
    if (cfg.subcommand == "transversals") {
        return cmd_transversals(cfg);
    }
    if (cfg.subcommand == "switching") {
        return cmd_switching(cfg);
    }
    throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
}

Json to_json(const Report& r)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["q"] = r.q;
    j["subcommand"] = r.subcommand;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    j["data"] = r.data;
    j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

std::string to_text(const Report& r)
{
    std::size_t wn = 5, we = 8, wa = 6;
    for (const auto& c : r.checks) {
        wn = std::max(wn, c.name.size());
        we = std::max(we, c.expected.dump().size());
        wa = std::max(wa, c.actual.dump().size());
    }
    std::ostringstream os;
    os << r.subcommand << "  q=" << r.q << "\n";
    os << std::left << std::setw(int(wn)) << "check" << "  " << std::setw(int(we)) << "expected" << "  "
       << std::setw(int(wa)) << "actual" << "  result\n";
    for (const auto& c : r.checks) {
        os << std::left << std::setw(int(wn)) << c.name << "  " << std::setw(int(we)) << c.expected.dump() << "  "
           << std::setw(int(wa)) << c.actual.dump() << "  " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    os << (r.passed() ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(3) << r.runtime_seconds
       << " s)\n";
    return os.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    std::string format = "json";
    std::uint64_t sample = 0;

    CLI::App app{"Exhaustive checks of hyper-reguli, switching sets and plane census in PG(5,q)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--q", cfg.q, "Field order q = p^h (q <= 16)")->required();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--sample", sample, "Covers sampled for transversal checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Sampling seed");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--base-modulus", cfg.base_modulus, "GF(p) coefficients, low degree first, leading 1 included")
        ->delimiter(',');
    app.add_option("--cubic-modulus", cfg.cubic_modulus, "GF(q) coefficients, low degree first, leading 1 included")
        ->delimiter(',');
    app.add_option("--census-max-q", cfg.census_max_q, "Largest q for a full plane census");
    app.add_option("--trace-max-q", cfg.trace_max_q, "Largest q for the trace check");

    auto* verify = app.add_subcommand("verify", "Run every check for one q");
    verify->add_flag("--trace", cfg.trace, "Force the trace check");
    verify->add_flag("--check-regularity", cfg.check_regularity, "Slow regularity check of the spread");

    auto* census = app.add_subcommand("census", "Classify every plane as type A, B or C");
    census->add_flag("--trace", cfg.trace, "Force the trace check");

    auto* covers = app.add_subcommand("covers", "Enumerate covers of CG(3,q)");
    covers->add_flag("--list", cfg.list, "List every cover");

    auto* trans = app.add_subcommand("transversals", "Planes meeting every plane of a hyper-regulus in a point");
    trans->add_option("--kind", cfg.kind, "Cover family, 1 or 2")->check(CLI::IsMember({1u, 2u}));
    trans->add_option("--a", cfg.a, "Element index a");
    trans->add_option("--b", cfg.b, "Element index b (kind 2)");
    trans->add_option("--f", cfg.f, "Element index f in GF(q)*");
    trans->add_flag("--brute-force", cfg.brute_force, "Cross-check against a sweep of all planes");

    auto* sw = app.add_subcommand("switching", "Explicit switching sets of a type-I hyper-regulus");
    sw->add_option("--a", cfg.a, "Element index a");
    sw->add_option("--f", cfg.f, "Element index f in GF(q)*");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return int(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return int(ExitCode::invalid_config);
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "text" ? Format::text : Format::json;
    if (sample > 0) {
        cfg.sample = sample;
    }

    try {
        const Report rep = run_command(cfg);
        if (cfg.format == Format::json) {
            out << to_json(rep).dump(2) << "\n";
        } else {
            out << to_text(rep);
        }
        return int(rep.passed() ? ExitCode::ok : ExitCode::mismatch);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return int(ExitCode::invalid_config);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return int(ExitCode::mismatch);
    }
}

}  // namespace hyperreg::cli
