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

#include "sfp/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace sfp {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    s = strip(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

// split at commas that are not inside brackets
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        else if (s[i] == ']') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
        if (depth < 0) throw Error(ErrorCode::ParseError, "unbalanced brackets");
    }
    if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced brackets");
    out.push_back(s.substr(start));
    return out;
}

}  // namespace

std::uint64_t FieldSpec::q() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    return q;
}

FieldSpec parse_field_spec(std::string_view text) {
    text = strip(text);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw Error(ErrorCode::ParseError, "field spec must look like p^e:m[:modulus]");

    FieldSpec spec;
    const std::string_view order = strip(parts[0]);
    if (const auto caret = order.find('^'); caret != std::string_view::npos) {
        spec.p = static_cast<Residue>(parse_uint(order.substr(0, caret), "characteristic"));
        spec.e = static_cast<unsigned>(parse_uint(order.substr(caret + 1), "exponent"));
        if (!is_prime(spec.p))
            throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(spec.p) + " is not prime");
    } else {
        const std::uint64_t q = parse_uint(order, "field order");
        const auto root = prime_power_root(q);
        if (!root) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
        spec.p = static_cast<Residue>(root->first);
        spec.e = root->second;
    }
    spec.m = static_cast<unsigned>(parse_uint(parts[1], "extension degree"));
    if (spec.e == 0 || spec.m == 0) throw Error(ErrorCode::DegenerateField, "e and m must be positive");
    if (parts.size() == 3) spec.modulus = parse_prime_poly(parts[2]);
    return spec;
}

std::string to_string(const FieldSpec& spec) {
    std::string out = std::to_string(spec.p);
    if (spec.e != 1) out += "^" + std::to_string(spec.e);
    out += ":" + std::to_string(spec.m);
    if (spec.modulus) out += ":" + format_prime_poly(*spec.modulus);
    return out;
}

FieldCtx make_field(const FieldSpec& spec) { return build_field(spec.p, spec.e, spec.m, spec.modulus); }

std::vector<std::uint64_t> parse_residues(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (auto token : split_top_level(strip(text))) out.push_back(parse_uint(token, "residue"));
    return out;
}

PrimePoly parse_prime_poly(std::string_view text) {
    PrimePoly f;
    for (auto v : parse_residues(text)) f.coeffs.push_back(static_cast<Residue>(v));
    return f;
}

std::string format_prime_poly(const PrimePoly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs[i]);
    }
    return out;
}

std::string format_element(const FieldCtx& ctx, ElemId a) {
    const FFElem e = ctx.element(a);
    std::string out;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.coeffs[i]);
    }
    return out;
}

ElemId parse_element(const FieldCtx& ctx, std::string_view text) {
    const auto residues = parse_residues(text);
    if (residues.size() > ctx.degree())
        throw Error(ErrorCode::ParseError, "element has more than " + std::to_string(ctx.degree()) + " coordinates");
    FFElem e;
    e.coeffs.assign(ctx.degree(), 0);
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i] >= ctx.p()) throw Error(ErrorCode::ParseError, "residue out of range");
        e.coeffs[i] = static_cast<Residue>(residues[i]);
    }
    return ctx.id(e);
}

std::string format_poly(const FieldCtx& ctx, const std::vector<ElemId>& coeffs) {
    std::size_t len = coeffs.size();
    while (len > 1 && coeffs[len - 1] == 0) --len;
    if (len == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
        if (i) out += ',';
        // ids below p are exactly the prime field
        if (coeffs[i] < ctx.p()) out += std::to_string(coeffs[i]);
        else out += "[" + format_element(ctx, coeffs[i]) + "]";
    }
    return out;
}

PolyRep parse_poly(const FieldCtx& ctx, std::string_view text) {
    std::vector<ElemId> coeffs;
    for (auto token : split_top_level(strip(text))) {
        token = strip(token);
        if (!token.empty() && token.front() == '[') {
            if (token.back() != ']') throw Error(ErrorCode::ParseError, "unterminated element");
            coeffs.push_back(parse_element(ctx, token.substr(1, token.size() - 2)));
        } else {
            const auto v = parse_uint(token, "coefficient");
            if (v >= ctx.p()) throw Error(ErrorCode::ParseError, "residue " + std::to_string(v) + " out of range");
            coeffs.push_back(static_cast<ElemId>(v));
        }
    }
    return make_poly(ctx, std::move(coeffs));
}

std::string pretty_poly(const FieldCtx& ctx, const std::vector<ElemId>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const ElemId c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        const std::string coef = c < ctx.p() ? std::to_string(c) : "[" + format_element(ctx, c) + "]";
        if (i == 0) {
            out += coef;
            continue;
        }
        if (c != 1) out += coef;
        out += 'x';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json orbit_table_json(const FieldCtx& ctx, const OrbitTable& table) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& s : table.strata()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& orbit : s.orbits) {
            nlohmann::json elements = nlohmann::json::array();
            for (auto a : orbit) elements.push_back(format_element(ctx, a));
            list.push_back({{"rep", format_element(ctx, orbit.front())}, {"elements", elements}});
        }
        j[std::to_string(s.k)] = list;
    }
    return j;
}

nlohmann::json monoid_elem_json(const MonoidElem& a) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& part : a.parts) j[std::to_string(part.k)] = {{"sigma", part.sigma}, {"shifts", part.shifts}};
    return j;
}

MonoidElem monoid_elem_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "monoid element must be a JSON object");
    std::vector<MonoidPart> parts;
    for (const auto& [key, value] : j.items()) {
        MonoidPart part;
        part.k = static_cast<unsigned>(parse_uint(key, "divisor"));
        try {
            part.sigma = value.at("sigma").get<std::vector<std::uint32_t>>();
            part.shifts = value.at("shifts").get<std::vector<std::uint32_t>>();
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::ParseError, ex.what());
        }
        if (part.sigma.size() != part.shifts.size())
            throw Error(ErrorCode::ShapeMismatch, "sigma and shifts differ in length");
        parts.push_back(std::move(part));
    }
    // object keys come back in string order ("10" < "2"); restore divisor order
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
    return MonoidElem{std::move(parts)};
}

namespace {

nlohmann::json rational_json(const mpq_class& x) {
    return {{"exact", x.get_str()}, {"decimal", to_decimal(x)}, {"float", x.get_d()}};
}

}  // namespace

nlohmann::json census_report_json(const CensusReport& r) {
    nlohmann::json pis = nlohmann::json::object();
    for (const auto& d : r.pis) pis[std::to_string(d.k)] = d.pi.get_str();
    nlohmann::json j = {
        {"q", r.q},
        {"m", r.m},
        {"pi", pis},
        {"count_T", r.count_T.get_str()},
        {"count_units", r.count_units.get_str()},
        {"count_L", r.count_L.get_str()},
    };
    j["density_T"] = r.density_T ? rational_json(*r.density_T) : nlohmann::json(nullptr);
    j["density_units"] = r.density_units ? rational_json(*r.density_units) : nlohmann::json(nullptr);
    j["log_density_T"] = r.log_density_T ? nlohmann::json(*r.log_density_T) : nlohmann::json(nullptr);
    j["log_density_units"] = r.log_density_units ? nlohmann::json(*r.log_density_units) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json brute_force_json(const BruteForceResult& r) {
    nlohmann::json j = {
        {"candidates", r.candidates},
        {"commuting", r.commuting},
        {"members", r.members},
        {"units", r.units},
        {"formula_T", r.formula_T.get_str()},
        {"formula_units", r.formula_units.get_str()},
        {"formula_L", r.formula_L.get_str()},
        {"matches", r.matches()},
    };
    if (r.preserving_maps) {
        j["maps_checked"] = *r.maps_checked;
        j["preserving_maps"] = *r.preserving_maps;
    }
    return j;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "q,p,log_density\n";
    for (const auto& r : rows) out << r.q << ',' << r.p << ',' << r.log_density << '\n';
    return out.str();
}

}  // namespace sfp
