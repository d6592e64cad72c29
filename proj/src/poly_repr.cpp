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

#include "sfp/poly_repr.hpp"

#include <string>

namespace sfp {

PolyRep make_poly(const FieldCtx& ctx, std::vector<ElemId> coeffs) {
    if (coeffs.size() > ctx.size())
        throw Error(ErrorCode::TooLarge, "polynomial of degree >= q^m is not reduced");
    for (auto c : coeffs)
        if (c >= ctx.size()) throw Error(ErrorCode::IndexOutOfRange, "coefficient is not a field element");
    coeffs.resize(ctx.size(), 0);
    return PolyRep{std::move(coeffs)};
}

ElemId evaluate(const FieldCtx& ctx, const PolyRep& f, ElemId x) {
    ElemId acc = 0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
    return acc;
}

FuncTable func_from_poly(const FieldCtx& ctx, const PolyRep& f) {
    FuncTable out;
    out.values.resize(ctx.size());
    for (ElemId x = 0; x < ctx.size(); ++x) out.values[x] = evaluate(ctx, f, x);
    return out;
}

PolyRep interpolate(const FieldCtx& ctx, const FuncTable& f) {
    const std::uint32_t n = ctx.size();
    if (f.size() != n) throw Error(ErrorCode::ShapeMismatch, "table size differs from field size");
    const Residue p = ctx.p();

    // power sums S_t = sum_a f(a) a^t, t < n - 1 (with 0^0 = 1)
    std::vector<ElemId> sums(n > 1 ? n - 1 : 0, 0);
    for (ElemId a = 0; a < n; ++a) {
        const ElemId fa = f(a);
        if (fa == 0) continue;
        ElemId term = fa;
        for (std::uint32_t t = 0; t + 1 < n; ++t) {
            sums[t] = ctx.add(sums[t], term);
            term = ctx.mul(term, a);
            if (term == 0) break;
        }
    }

    // coefficient i >= 1 is -C(n-1, i) (-1)^(n-1-i) S_{n-1-i}, and by Lucas
    // C(n-1, i) = (-1)^(base-p digit sum of i) mod p since n - 1 has all digits p-1.
    PolyRep out;
    out.coeffs.assign(n, 0);
    out.coeffs[0] = f(0);
    const ElemId minus_one = ctx.neg(1);
    for (std::uint32_t i = 1; i < n; ++i) {
        std::uint32_t digit_sum = 0;
        for (std::uint32_t r = i; r > 0; r /= p) digit_sum += r % p;
        const std::uint32_t parity = (1 + digit_sum + (n - 1 - i)) % 2;
        const ElemId s = sums[n - 1 - i];
        out.coeffs[i] = parity ? ctx.mul(minus_one, s) : s;
    }
    return out;
}

bool is_canonical(const FieldCtx& ctx, const PolyRep& f) {
    for (auto c : f.coeffs)
        if (ctx.frobenius_q(c) != c) return false;
    return true;
}

bool commutes_with_frobenius(const FieldCtx& ctx, const FuncTable& f) {
    for (ElemId x = 0; x < ctx.size(); ++x)
        if (f(ctx.frobenius_q(x)) != ctx.frobenius_q(f(x))) return false;
    return true;
}

bool is_subfield_preserving(const FieldCtx& ctx, const OrbitTable& table, const FuncTable& f) {
    if (f.size() != ctx.size()) return false;
    for (ElemId x = 0; x < ctx.size(); ++x)
        if (f(x) >= ctx.size() || table.locate(f(x)).k != table.locate(x).k) return false;
    return true;
}

namespace {

bool in_subfield(const FieldCtx& ctx, ElemId x, std::uint64_t d) {
    ElemId y = x;
    for (std::uint64_t i = 0; i < d; ++i) y = ctx.frobenius_q(y);
    return y == x;
}

}  // namespace

bool is_subfield_preserving_literal(const FieldCtx& ctx, const FuncTable& f) {
    if (f.size() != ctx.size()) return false;
    for (ElemId x = 0; x < ctx.size(); ++x)
        if (f(x) >= ctx.size()) return false;
    for (ElemId x = 0; x < ctx.size(); ++x)
        if (in_subfield(ctx, x, 1) && !in_subfield(ctx, f(x), 1)) return false;
    const auto divs = divisors(ctx.m());
    for (auto d : divs) {
        for (auto s : divs) {
            for (ElemId x = 0; x < ctx.size(); ++x) {
                if (!in_subfield(ctx, x, d) || in_subfield(ctx, x, s)) continue;
                const ElemId y = f(x);
                if (!in_subfield(ctx, y, d) || in_subfield(ctx, y, s)) return false;
            }
        }
    }
    return true;
}

bool is_member_T(const FieldCtx& ctx, const OrbitTable& table, const PolyRep& f) {
    return is_canonical(ctx, f) && is_subfield_preserving(ctx, table, func_from_poly(ctx, f));
}

PolyRep compose_polys(const FieldCtx& ctx, const PolyRep& f, const PolyRep& g) {
    return interpolate(ctx, compose_tables(func_from_poly(ctx, f), func_from_poly(ctx, g)));
}

}  // namespace sfp
