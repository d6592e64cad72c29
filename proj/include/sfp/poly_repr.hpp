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

#include <vector>

#include "sfp/frobenius_orbits.hpp"
#include "sfp/gf_arith.hpp"
#include "sfp/monoid.hpp"

namespace sfp {

/// Reduced polynomial (degree < q^m) with coefficients in the ambient field,
/// ascending. Always exactly q^m coefficients; trailing zeros allowed.
struct PolyRep {
    std::vector<ElemId> coeffs;

    friend bool operator==(const PolyRep&, const PolyRep&) = default;
};

/// Pads (or validates) a coefficient list to the reduced length q^m.
/// Throws TooLarge if the list is longer than q^m.
PolyRep make_poly(const FieldCtx& ctx, std::vector<ElemId> coeffs);

ElemId evaluate(const FieldCtx& ctx, const PolyRep& f, ElemId x);
FuncTable func_from_poly(const FieldCtx& ctx, const PolyRep& f);

/// Unique reduced polynomial through every point of the table, built from the
/// Lagrange basis L_a(x) = 1 - (x - a)^(n-1) of the whole field.
PolyRep interpolate(const FieldCtx& ctx, const FuncTable& f);

/// Every coefficient satisfies c^q = c.
bool is_canonical(const FieldCtx& ctx, const PolyRep& f);
/// f o phi_q = phi_q o f on the value table.
bool commutes_with_frobenius(const FieldCtx& ctx, const FuncTable& f);

/// f(S_k) in S_k for every stratum, read off the orbit labels.
bool is_subfield_preserving(const FieldCtx& ctx, const OrbitTable& table, const FuncTable& f);
/// f(F_q) in F_q and f(F_{q^d} \ F_{q^s}) in F_{q^d} \ F_{q^s} for all d, s | m,
/// with subfield membership tested by x^(q^d) = x.
bool is_subfield_preserving_literal(const FieldCtx& ctx, const FuncTable& f);

bool is_member_T(const FieldCtx& ctx, const OrbitTable& table, const PolyRep& f);

/// Reduced representative of f o g, computed through value tables.
PolyRep compose_polys(const FieldCtx& ctx, const PolyRep& f, const PolyRep& g);

}  // namespace sfp
