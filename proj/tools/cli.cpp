/**************************************************************************
 * Copyright 2026 The sfp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "sfp/census.hpp"
#include "sfp/frobenius_orbits.hpp"
#include "sfp/gf_arith.hpp"
#include "sfp/monoid.hpp"
#include "sfp/poly_repr.hpp"
#include "sfp/text_format.hpp"

namespace sfp::cli {

namespace {

using nlohmann::json;

struct Globals {
    bool json = false;
    std::uint64_t bound = kDefaultBound;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t samples = 1000;
};

struct Field {
    FieldSpec spec;
    FieldCtx ctx;
    OrbitTable table;

    explicit Field(const std::string& text)
        : spec(parse_field_spec(text)), ctx(make_field(spec)), table(ctx) {}
};

/// "a..b" or a single integer.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad range '" + text + "', expected a..b");
    }
}

std::vector<std::uint64_t> filter_range(const std::string& text, const std::function<bool(std::uint64_t)>& keep) {
    const auto [lo, hi] = parse_range(text);
    std::vector<std::uint64_t> out;
    for (auto v = lo; v <= hi; ++v)
        if (keep(v)) out.push_back(v);
    return out;
}

std::string modulus_pretty(const FieldCtx& ctx) {
    return pretty_poly(ctx, std::vector<ElemId>(ctx.modulus().coeffs.begin(), ctx.modulus().coeffs.end()));
}

// ---------------------------------------------------------------------------

int cmd_field(const Globals& g, const std::string& spec_text, std::ostream& out) {
    const FieldSpec spec = parse_field_spec(spec_text);
    const FieldCtx ctx = make_field(spec);
    FieldSpec canonical = spec;
    canonical.modulus = ctx.modulus();
    if (g.json) {
        out << json{{"spec", to_string(canonical)},
                    {"p", ctx.p()},
                    {"e", ctx.e()},
                    {"q", ctx.q()},
                    {"m", ctx.m()},
                    {"degree", ctx.degree()},
                    {"modulus", format_prime_poly(ctx.modulus())},
                    {"modulus_pretty", modulus_pretty(ctx)},
                    {"elements", ctx.element_count().get_str()}}
                   .dump(2)
            << '\n';
        return 0;
    }
    out << "field     GF(" << ctx.q() << "^" << ctx.m() << ")  spec " << to_string(canonical) << '\n'
        << "p=" << ctx.p() << " e=" << ctx.e() << " q=" << ctx.q() << " m=" << ctx.m() << '\n'
        << "degree    " << ctx.degree() << " over F_" << ctx.p() << '\n'
        << "modulus   " << modulus_pretty(ctx) << "  (" << format_prime_poly(ctx.modulus()) << ")\n"
        << "elements  " << ctx.element_count().get_str() << '\n';
    return 0;
}

int cmd_orbits(const Globals& g, const std::string& spec_text, std::ostream& out) {
    const Field f(spec_text);
    if (g.json) {
        out << orbit_table_json(f.ctx, f.table).dump(2) << '\n';
        return 0;
    }
    for (const auto& s : f.table.strata()) {
        out << "k=" << s.k << ": " << s.orbits.size() << " orbit(s)\n";
        for (std::size_t i = 0; i < s.orbits.size(); ++i) {
            out << "  i=" << i + 1 << "  (";
            for (std::size_t j = 0; j < s.orbits[i].size(); ++j)
                out << (j ? " " : "") << "[" << format_element(f.ctx, s.orbits[i][j]) << "]";
            out << ")  minpoly " << pretty_poly(f.ctx, minimal_polynomial(f.ctx, f.table, s.orbits[i][0])) << '\n';
        }
    }
    return 0;
}

int cmd_count(const Globals& g, const std::string& spec_text, std::ostream& out) {
    const FieldSpec spec = parse_field_spec(spec_text);
    const CensusReport r = census_report(spec.q(), spec.m);
    if (g.json) {
        out << census_report_json(r).dump(2) << '\n';
        return 0;
    }
    for (const auto& d : r.pis) out << "pi(" << d.k << ") = " << d.pi.get_str() << '\n';
    out << "|T|  = " << r.count_T.get_str() << '\n'
        << "|T*| = " << r.count_units.get_str() << '\n'
        << "|L|  = " << r.count_L.get_str() << '\n';
    if (r.density_T) out << "density_T     = " << r.density_T->get_str() << " ~ " << to_decimal(*r.density_T, 12) << '\n';
    if (r.density_units)
        out << "density_units = " << r.density_units->get_str() << " ~ " << to_decimal(*r.density_units, 12) << '\n';
    return 0;
}

int cmd_density(const Globals& g, const std::string& spec_text, const std::string& diagonal,
                std::uint64_t fixed_q, std::uint64_t fixed_p, const std::string& range, std::ostream& out) {
    std::vector<ConvergenceRow> rows;
    const auto prime = [](std::uint64_t v) { return is_prime(v); };
    if (!diagonal.empty()) {
        rows = convergence_table(SweepMode::Diagonal, 0, filter_range(diagonal, prime));
    } else if (fixed_q != 0) {
        if (range.empty()) throw Error(ErrorCode::ParseError, "--fixed-q needs --range");
        rows = convergence_table(SweepMode::FixedQ, fixed_q, filter_range(range, prime));
    } else if (fixed_p != 0) {
        if (range.empty()) throw Error(ErrorCode::ParseError, "--fixed-p needs --range");
        rows = convergence_table(SweepMode::FixedP, fixed_p,
                                 filter_range(range, [](std::uint64_t v) { return prime_power_root(v).has_value(); }));
    } else if (!spec_text.empty()) {
        const FieldSpec spec = parse_field_spec(spec_text);
        const std::uint64_t q = spec.q();
        json j = {{"q", q}, {"m", spec.m}};
        const mpq_class dt = density_T(q, spec.m);
        const mpq_class du = density_units(q, spec.m);
        j["density_T"] = {{"exact", dt.get_str()}, {"decimal", to_decimal(dt)}, {"float", dt.get_d()}};
        j["density_units"] = {{"exact", du.get_str()}, {"decimal", to_decimal(du)}, {"float", du.get_d()}};
        if (is_prime(spec.m)) {
            j["log_density_T"] = log_density_T_stable(q, spec.m);
            j["log_density_units"] = log_density_units(q, spec.m);
        }
        if (g.json) {
            out << j.dump(2) << '\n';
        } else {
            out << "density_T     = " << dt.get_str() << " ~ " << to_decimal(dt, 15) << '\n'
                << "density_units = " << du.get_str() << " ~ " << to_decimal(du, 15) << '\n';
            if (is_prime(spec.m))
                out << "log density_T (stable) = " << j["log_density_T"].get<double>() << '\n'
                    << "log density_units      = " << j["log_density_units"].get<double>() << '\n';
        }
        return 0;
    } else {
        throw Error(ErrorCode::ParseError, "density needs a field spec or one of --diagonal, --fixed-q, --fixed-p");
    }

    if (g.json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"q", r.q}, {"p", r.p}, {"log_density", r.log_density}});
        out << arr.dump(2) << '\n';
    } else {
        out << convergence_csv(rows);
    }
    return 0;
}

int cmd_enumerate(const Globals& g, const std::string& spec_text, bool units_only, std::ostream& out) {
    const Field f(spec_text);
    const MonoidShape shape = MonoidShape::of_table(f.table);
    json arr = json::array();
    for_each_element(shape, g.bound, [&](const MonoidElem& a) {
        const bool unit = is_invertible(a);
        if (units_only && !unit) return;
        const PolyRep poly = interpolate(f.ctx, delta(a, f.table));
        if (g.json) {
            arr.push_back({{"poly", format_poly(f.ctx, poly)},
                           {"pretty", pretty_poly(f.ctx, poly.coeffs)},
                           {"unit", unit},
                           {"element", monoid_elem_json(a)}});
        } else {
            out << format_poly(f.ctx, poly) << "\t" << pretty_poly(f.ctx, poly.coeffs) << '\n';
        }
    });
    if (g.json) out << arr.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckLog {
    std::vector<std::pair<std::string, std::string>> rows;  // name, detail
    bool ok = true;

    void add(const std::string& name, bool pass, const std::string& detail) {
        rows.emplace_back((pass ? "PASS " : "FAIL ") + name, detail);
        ok = ok && pass;
    }
};

std::uint64_t candidate_code(const FieldCtx& ctx, const PolyRep& poly) {
    const auto& base = ctx.base_field();
    std::uint64_t code = 0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
        const auto pos = std::find(base.begin(), base.end(), *it);
        if (pos == base.end()) return ~std::uint64_t{0};
        code = code * base.size() + static_cast<std::uint64_t>(pos - base.begin());
    }
    return code;
}

bool within_bound(const mpz_class& v, std::uint64_t bound) { return v <= mpz_class(static_cast<unsigned long>(bound)); }

void check_homomorphism_pairs(const Field& f, const std::vector<MonoidElem>& elems, CheckLog& log,
                              const std::string& mode) {
    std::uint64_t failures = 0, pairs = 0;
    for (const auto& a : elems) {
        const FuncTable da = delta(a, f.table);
        for (const auto& b : elems) {
            ++pairs;
            if (delta(compose(a, b), f.table) != compose_tables(da, delta(b, f.table))) ++failures;
        }
    }
    log.add("homomorphism", failures == 0, std::to_string(pairs) + " pairs " + mode);
}

int cmd_verify(const Globals& g, const std::string& spec_text, std::ostream& out) {
    const Field f(spec_text);
    const MonoidShape shape = MonoidShape::of_table(f.table);
    CheckLog log;

    // exhaustive when the oracle's candidate space fits the bound
    bool exhaustive = f.ctx.size() <= 64;
    if (exhaustive) {
        mpz_class candidates;
        mpz_ui_pow_ui(candidates.get_mpz_t(), f.ctx.q(), f.ctx.size());
        exhaustive = within_bound(candidates, g.bound) && within_bound(shape.order(), g.bound);
    }

    const mpz_class formula_T = shape.order();
    const mpz_class formula_units = shape.unit_count();

    if (exhaustive) {
        BruteForceOptions options;
        options.bound = g.bound;
        options.threads = g.threads;
        options.collect_members = true;
        const BruteForceResult bf = brute_force_census(f.ctx, f.table, options);
        log.add("count_T", mpz_class(static_cast<unsigned long>(bf.members)) == formula_T,
                std::to_string(bf.members) + " = " + formula_T.get_str());
        log.add("count_units", mpz_class(static_cast<unsigned long>(bf.units)) == formula_units,
                std::to_string(bf.units) + " = " + formula_units.get_str());
        log.add("canonical_commute", bf.commuting == bf.candidates,
                std::to_string(bf.commuting) + "/" + std::to_string(bf.candidates) + " candidates");
        if (bf.preserving_maps)
            log.add("count_L", mpz_class(static_cast<unsigned long>(*bf.preserving_maps)) == bf.formula_L,
                    std::to_string(*bf.preserving_maps) + " = " + bf.formula_L.get_str());

        const auto elems = enumerate_monoid(shape, g.bound);
        std::vector<std::uint64_t> image_codes;
        std::uint64_t round_trip_failures = 0;
        for (const auto& a : elems) {
            const FuncTable t = delta(a, f.table);
            image_codes.push_back(candidate_code(f.ctx, interpolate(f.ctx, t)));
            if (delta_inv(t, f.ctx, f.table) != a) ++round_trip_failures;
        }
        std::sort(image_codes.begin(), image_codes.end());
        log.add("set_match", image_codes == bf.member_codes,
                std::to_string(image_codes.size()) + " structure images vs " + std::to_string(bf.member_codes.size()) +
                    " oracle members");
        log.add("round_trip", round_trip_failures == 0, std::to_string(elems.size()) + " elements");

        if (elems.size() * elems.size() <= (std::uint64_t{1} << 16)) {
            check_homomorphism_pairs(f, elems, log, "(exhaustive)");
        } else {
            std::mt19937_64 rng(g.seed);
            std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
            std::vector<MonoidElem> sample;
            for (std::uint64_t i = 0; i < std::min<std::uint64_t>(g.samples, 100); ++i) sample.push_back(elems[pick(rng)]);
            check_homomorphism_pairs(f, sample, log, "(sampled)");
        }
    } else {
        std::uint64_t bad_member = 0, bad_round = 0, bad_hom = 0, bad_inverse = 0, bad_factor = 0, disagree = 0;
        for (std::uint64_t i = 0; i < g.samples; ++i) {
            const MonoidElem a = random_element(shape, g.seed + 2 * i);
            const MonoidElem b = random_element(shape, g.seed + 2 * i + 1);
            const FuncTable ta = delta(a, f.table);
            const PolyRep pa = interpolate(f.ctx, ta);
            if (!is_member_T(f.ctx, f.table, pa)) ++bad_member;
            if (delta_inv(ta, f.ctx, f.table) != a) ++bad_round;
            if (delta(compose(a, b), f.table) != compose_tables(ta, delta(b, f.table))) ++bad_hom;

            const MonoidElem u = random_unit(shape, g.seed + i);
            const MonoidElem ui = invert(u);
            if (compose(u, ui) != identity(shape) || compose(ui, u) != identity(shape)) ++bad_inverse;
            const auto fac = factor_unit(u, f.table);
            if (compose_tables(fac.s, delta(fac.h, f.table)) != delta(u, f.table)) ++bad_factor;

            // dual-path canonicity on an arbitrary table
            std::mt19937_64 rng(g.seed ^ (i * 0x9e3779b97f4a7c15ULL));
            std::uniform_int_distribution<ElemId> pick(0, f.ctx.size() - 1);
            FuncTable t;
            t.values.resize(f.ctx.size());
            for (auto& v : t.values) v = pick(rng);
            if (is_canonical(f.ctx, interpolate(f.ctx, t)) != commutes_with_frobenius(f.ctx, t)) ++disagree;
        }
        const std::string n = std::to_string(g.samples) + " samples";
        log.add("member", bad_member == 0, n);
        log.add("round_trip", bad_round == 0, n);
        log.add("homomorphism", bad_hom == 0, n);
        log.add("inverse", bad_inverse == 0, n);
        log.add("factor_unit", bad_factor == 0, n);
        log.add("canonical_dual_path", disagree == 0, n);
    }

    const std::string mode = exhaustive ? "exhaustive" : "sampled";
    if (g.json) {
        json checks = json::array();
        for (const auto& [name, detail] : log.rows) checks.push_back({{"check", name}, {"detail", detail}});
        out << json{{"spec", spec_text}, {"mode", mode}, {"pass", log.ok}, {"checks", checks}}.dump(2) << '\n';
    } else {
        for (const auto& [name, detail] : log.rows) out << name << "  " << detail << '\n';
        out << (log.ok ? "PASS" : "FAIL") << " (" << mode << ")\n";
    }
    return log.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

void print_elem(const Globals& g, const MonoidElem& a, std::ostream& out) {
    if (g.json) {
        out << monoid_elem_json(a).dump(2) << '\n';
        return;
    }
    for (const auto& part : a.parts) {
        out << "k=" << part.k << "  sigma=[";
        for (std::size_t i = 0; i < part.sigma.size(); ++i) out << (i ? "," : "") << part.sigma[i];
        out << "]  shifts=[";
        for (std::size_t i = 0; i < part.shifts.size(); ++i) out << (i ? "," : "") << part.shifts[i];
        out << "]\n";
    }
}

void print_poly(const Globals& g, const FieldCtx& ctx, const PolyRep& poly, std::ostream& out) {
    if (g.json) out << json{{"poly", format_poly(ctx, poly)}, {"pretty", pretty_poly(ctx, poly.coeffs)}}.dump(2) << '\n';
    else out << format_poly(ctx, poly) << "\t" << pretty_poly(ctx, poly.coeffs) << '\n';
}

int cmd_decompose(const Globals& g, const std::string& spec_text, const std::string& poly_text, std::ostream& out) {
    const Field f(spec_text);
    const PolyRep poly = parse_poly(f.ctx, poly_text);
    print_elem(g, delta_inv(func_from_poly(f.ctx, poly), f.ctx, f.table), out);
    return 0;
}

int cmd_compose(const Globals& g, const std::string& spec_text, const std::string& lhs, const std::string& rhs,
                std::ostream& out) {
    const Field f(spec_text);
    print_poly(g, f.ctx, compose_polys(f.ctx, parse_poly(f.ctx, lhs), parse_poly(f.ctx, rhs)), out);
    return 0;
}

int cmd_invert(const Globals& g, const std::string& spec_text, const std::string& poly_text, std::ostream& out) {
    const Field f(spec_text);
    const FuncTable t = func_from_poly(f.ctx, parse_poly(f.ctx, poly_text));
    if (!is_bijective(t)) throw Error(ErrorCode::NotInvertible, "polynomial does not permute the field");
    const MonoidElem inv = invert(delta_inv(t, f.ctx, f.table));
    print_poly(g, f.ctx, interpolate(f.ctx, delta(inv, f.table)), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical subfield-preserving polynomials over finite fields"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--bound", g.bound, "feasibility bound for exhaustive enumeration")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--threads", g.threads, "oracle worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--samples", g.samples, "sample count for sampled verification")->capture_default_str();

    std::string spec, poly_a, poly_b, diagonal, range;
    std::uint64_t fixed_q = 0, fixed_p = 0;
    bool units_only = false;
    std::function<int()> action;

    auto field_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("spec", spec, "field spec p^e:m[:modulus]")->required();
        return sub;
    };

    field_cmd("field", "describe a field")->callback([&] { action = [&] { return cmd_field(g, spec, out); }; });
    field_cmd("orbits", "Frobenius orbits and their labels")->callback([&] {
        action = [&] { return cmd_orbits(g, spec, out); };
    });
    field_cmd("count", "exact cardinalities")->callback([&] { action = [&] { return cmd_count(g, spec, out); }; });

    auto* density = app.add_subcommand("density", "exact densities or convergence sweeps (CSV)");
    density->fallthrough();
    density->add_option("spec", spec, "field spec");
    density->add_option("--diagonal", diagonal, "q = p over the primes in a..b");
    density->add_option("--fixed-q", fixed_q, "fixed q, p over the primes in --range");
    density->add_option("--fixed-p", fixed_p, "fixed prime p, q over the prime powers in --range");
    density->add_option("--range", range, "a..b");
    density->callback([&] {
        action = [&] { return cmd_density(g, spec, diagonal, fixed_q, fixed_p, range, out); };
    });

    auto* enumerate = field_cmd("enumerate", "list the polynomials of the monoid");
    enumerate->add_flag("--units", units_only, "invertible elements only");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(g, spec, units_only, out); }; });

    field_cmd("verify", "oracle and property checks")->callback([&] {
        action = [&] { return cmd_verify(g, spec, out); };
    });

    auto* decompose = field_cmd("decompose", "polynomial -> (sigma, shifts)");
    decompose->add_option("poly", poly_a, "ascending coefficients")->required();
    decompose->callback([&] { action = [&] { return cmd_decompose(g, spec, poly_a, out); }; });

    auto* compose_cmd = field_cmd("compose", "f o g");
    compose_cmd->add_option("f", poly_a, "outer polynomial")->required();
    compose_cmd->add_option("g", poly_b, "inner polynomial")->required();
    compose_cmd->callback([&] { action = [&] { return cmd_compose(g, spec, poly_a, poly_b, out); }; });

    auto* invert_cmd = field_cmd("invert", "inverse of a unit");
    invert_cmd->add_option("poly", poly_a, "ascending coefficients")->required();
    invert_cmd->callback([&] { action = [&] { return cmd_invert(g, spec, poly_a, out); }; });

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        return action ? action() : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace sfp::cli
