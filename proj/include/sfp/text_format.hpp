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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sfp/census.hpp"
#include "sfp/frobenius_orbits.hpp"
#include "sfp/gf_arith.hpp"
#include "sfp/monoid.hpp"
#include "sfp/poly_repr.hpp"

// Textual and JSON forms shared by the CLI and fixtures.
//
//   field spec   "p^e:m[:modulus]"  (or "q:m" with q a prime power)
//   modulus      "c0,c1,...,cN"     residues mod p, ascending degree
//   element      "c0,c1,...,c_{N-1}" coordinates in the power basis
//   polynomial   comma separated coefficients, ascending degree; a coefficient
//                in the prime field is a bare residue, any other coefficient
//                is its element form in brackets, e.g. "0,[0,1],1"

namespace sfp {

struct FieldSpec {
    Residue p = 2;
    unsigned e = 1;
    unsigned m = 1;
    std::optional<PrimePoly> modulus;

    std::uint64_t q() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

FieldSpec parse_field_spec(std::string_view text);
std::string to_string(const FieldSpec& spec);
FieldCtx make_field(const FieldSpec& spec);

std::vector<std::uint64_t> parse_residues(std::string_view text);
PrimePoly parse_prime_poly(std::string_view text);
std::string format_prime_poly(const PrimePoly& f);

std::string format_element(const FieldCtx& ctx, ElemId a);
/// Accepts up to e*m residues; missing high coordinates are zero.
ElemId parse_element(const FieldCtx& ctx, std::string_view text);

std::string format_poly(const FieldCtx& ctx, const std::vector<ElemId>& coeffs);
inline std::string format_poly(const FieldCtx& ctx, const PolyRep& f) { return format_poly(ctx, f.coeffs); }
PolyRep parse_poly(const FieldCtx& ctx, std::string_view text);
/// Human form, highest degree first: "x^3+x+1", "[0,1]x^2+1".
std::string pretty_poly(const FieldCtx& ctx, const std::vector<ElemId>& coeffs);

nlohmann::json orbit_table_json(const FieldCtx& ctx, const OrbitTable& table);
nlohmann::json monoid_elem_json(const MonoidElem& a);
MonoidElem monoid_elem_from_json(const nlohmann::json& j);
nlohmann::json census_report_json(const CensusReport& report);
nlohmann::json brute_force_json(const BruteForceResult& result);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace sfp
