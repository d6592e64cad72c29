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

#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "sfp/census.hpp"
#include "sfp/poly_repr.hpp"

using namespace sfp;

namespace {

FuncTable random_table(std::uint32_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<ElemId> pick(0, n - 1);
    FuncTable t;
    for (std::uint32_t i = 0; i < n; ++i) t.values.push_back(pick(rng));
    return t;
}

// all n^n maps on a tiny field, in lexicographic order
template <class Visit>
void for_each_map(std::uint32_t n, Visit&& visit) {
    FuncTable t{std::vector<ElemId>(n, 0)};
    for (;;) {
        visit(t);
        std::uint32_t i = 0;
        while (i < n && ++t.values[i] == n) t.values[i++] = 0;
        if (i == n) return;
    }
}

}  // namespace

TEST_SUITE("poly_repr") {

TEST_CASE("evaluate examples in F_4") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    CHECK(evaluate(f, make_poly(f, {1, 1, 1}), 2) == 0);
    CHECK(evaluate(f, make_poly(f, {0, 0, 0, 1}), 2) == 1);
    CHECK(evaluate(f, make_poly(f, {0, 0, 1}), 2) == 3);
    CHECK_THROWS_AS(make_poly(f, {0, 0, 0, 0, 1}), Error);
}

TEST_CASE("interpolate examples in F_4") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    CHECK(interpolate(f, FuncTable{{1, 1, 2, 3}}).coeffs == std::vector<ElemId>{1, 1, 0, 1});
    CHECK(interpolate(f, FuncTable{{0, 1, 3, 2}}).coeffs == std::vector<ElemId>{0, 0, 1, 0});
    CHECK(interpolate(f, FuncTable{{0, 1, 1, 1}}).coeffs == std::vector<ElemId>{0, 0, 0, 1});
    CHECK(interpolate(f, identity_table(4)).coeffs == std::vector<ElemId>{0, 1, 0, 0});
    CHECK(interpolate(f, FuncTable{{2, 2, 2, 2}}).coeffs == std::vector<ElemId>{2, 0, 0, 0});
}

TEST_CASE("interpolate agrees with Vandermonde elimination") {
    std::mt19937_64 rng(7);
    for (auto [p, e, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {7u, 1u, 1u}}) {
        const FieldCtx f = build_field(p, e, m);
        for (int trial = 0; trial < 10; ++trial) {
            const FuncTable t = random_table(f.size(), rng);
            const PolyRep c = interpolate(f, t);
            CHECK(c == oracle::interpolate_by_elimination(f, t));
            CHECK(func_from_poly(f, c) == t);
        }
    }
}

TEST_CASE("interpolate is inverse to evaluation on reduced polynomials") {
    std::mt19937_64 rng(11);
    const FieldCtx f = build_field(3, 1, 3);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ElemId> coeffs;
        std::uniform_int_distribution<ElemId> pick(0, f.size() - 1);
        for (std::uint32_t i = 0; i < f.size(); ++i) coeffs.push_back(pick(rng));
        const PolyRep g = make_poly(f, coeffs);
        CHECK(interpolate(f, func_from_poly(f, g)) == g);
    }
}

TEST_CASE("canonical coefficients iff commuting with frobenius: all 256 candidates over F_8") {
    const FieldCtx f = build_field(2, 1, 3);
    const OrbitTable t(f);
    std::uint64_t commuting = 0, members = 0;
    for (std::uint64_t code = 0; code < 256; ++code) {
        const PolyRep g = decode_candidate(f, code);
        REQUIRE(is_canonical(f, g));
        const FuncTable vals = func_from_poly(f, g);
        CHECK(commutes_with_frobenius(f, vals));
        CHECK(interpolate(f, vals) == g);
        ++commuting;
        const bool preserving = is_subfield_preserving_literal(f, vals);
        CHECK(preserving == is_subfield_preserving(f, t, vals));
        CHECK(is_member_T(f, t, g) == preserving);
        if (preserving) ++members;
    }
    CHECK(commuting == 256);
    CHECK(members == 144);
}

TEST_CASE("canonical coefficients iff commuting with frobenius: sampled tables over F_9") {
    const FieldCtx f = build_field(3, 1, 2);
    const OrbitTable t(f);
    const MonoidShape shape = MonoidShape::of_table(t);
    std::mt19937_64 rng(3);
    int commuting = 0;
    for (std::uint64_t i = 0; i < 400; ++i) {
        // equivariant tables from the monoid, arbitrary tables otherwise
        const FuncTable vals = i % 2 == 0 ? delta(random_element(shape, i), t) : random_table(f.size(), rng);
        const bool comm = commutes_with_frobenius(f, vals);
        CHECK(is_canonical(f, interpolate(f, vals)) == comm);
        if (comm) ++commuting;
    }
    CHECK(commuting >= 200);
    CHECK(commuting < 400);
}

TEST_CASE("non-canonical polynomial fails commutation") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    const PolyRep g = make_poly(f, {2});  // constant alpha
    CHECK_FALSE(is_canonical(f, g));
    CHECK_FALSE(commutes_with_frobenius(f, func_from_poly(f, g)));
}

TEST_CASE("subfield preserving maps of F_4") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    const OrbitTable t(f);
    int preserving = 0, members = 0;
    for_each_map(4, [&](const FuncTable& vals) {
        const bool lit = is_subfield_preserving_literal(f, vals);
        CHECK(lit == is_subfield_preserving(f, t, vals));
        if (lit) ++preserving;
        if (is_member_T(f, t, interpolate(f, vals))) ++members;
    });
    CHECK(preserving == 16);
    CHECK(members == 8);
}

TEST_CASE("subfield preservation agrees on sampled tables of larger fields") {
    std::mt19937_64 rng(5);
    for (auto [p, e, m] : {std::tuple{2u, 1u, 4u}, {2u, 1u, 6u}, {3u, 1u, 2u}, {2u, 2u, 2u}}) {
        const FieldCtx f = build_field(p, e, m);
        const OrbitTable t(f);
        const MonoidShape shape = MonoidShape::of_table(t);
        for (std::uint64_t i = 0; i < 40; ++i) {
            const FuncTable vals = i % 2 == 0 ? delta(random_element(shape, i), t) : random_table(f.size(), rng);
            CHECK(is_subfield_preserving_literal(f, vals) == is_subfield_preserving(f, t, vals));
        }
    }
}

TEST_CASE("membership examples in T_2^2") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    const OrbitTable t(f);
    CHECK(is_member_T(f, t, make_poly(f, {0, 1})));
    CHECK(is_member_T(f, t, make_poly(f, {0, 0, 1})));
    CHECK(is_member_T(f, t, make_poly(f, {1, 1, 0, 1})));
    CHECK_FALSE(is_member_T(f, t, make_poly(f, {0, 0, 0, 1})));  // x^3 sends alpha into F_2
    CHECK_FALSE(is_member_T(f, t, make_poly(f, {1})));
    CHECK_FALSE(is_member_T(f, t, make_poly(f, {2, 1})));        // alpha + x is not canonical
}

TEST_CASE("composition stays inside T on T_2^3") {
    const FieldCtx f = build_field(2, 1, 3);
    const OrbitTable t(f);
    std::vector<PolyRep> members;
    for (std::uint64_t code = 0; code < 256 && members.size() < 8; ++code) {
        const PolyRep g = decode_candidate(f, code);
        if (is_member_T(f, t, g)) members.push_back(g);
    }
    REQUIRE(members.size() == 8);
    for (const auto& a : members)
        for (const auto& b : members) {
            const PolyRep c = compose_polys(f, a, b);
            CHECK(is_member_T(f, t, c));
            CHECK(func_from_poly(f, c) == compose_tables(func_from_poly(f, a), func_from_poly(f, b)));
        }
}

}  // TEST_SUITE
