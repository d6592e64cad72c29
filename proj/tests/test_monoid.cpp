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

#include <set>

#include "doctest.h"

#include "sfp/monoid.hpp"
#include "sfp/poly_repr.hpp"
#include "sfp/text_format.hpp"

using namespace sfp;

namespace {

struct Setup {
    FieldCtx ctx;
    OrbitTable table;
    MonoidShape shape;

    Setup(Residue p, unsigned e, unsigned m)
        : ctx(build_field(p, e, m)), table(ctx), shape(MonoidShape::of_table(table)) {}
};

// frobenius element of T_2^2: identity on F_2, shift 1 on the 2-cycle
MonoidElem frobenius_elem() {
    return MonoidElem{{MonoidPart{1, {1, 2}, {0, 0}}, MonoidPart{2, {1}, {1}}}};
}

}  // namespace

TEST_SUITE("monoid_structure") {

TEST_CASE("shape of the field") {
    const Setup s(2, 1, 2);
    CHECK(s.shape == MonoidShape::of_field(2, 2));
    CHECK(s.shape.parts == std::vector<ShapePart>{{1, 2}, {2, 1}});
    CHECK(s.shape.order() == 8);
    CHECK(s.shape.unit_count() == 4);
    CHECK(MonoidShape::of_field(2, 3).order() == 144);
    CHECK(MonoidShape::of_field(3, 2).order() == 5832);
}

TEST_CASE("identity") {
    const Setup s(2, 1, 3);
    const MonoidElem id = identity(s.shape);
    CHECK(delta(id, s.table) == identity_table(s.ctx.size()));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MonoidElem a = random_element(s.shape, seed);
        CHECK(compose(id, a) == a);
        CHECK(compose(a, id) == a);
    }
}

TEST_CASE("frobenius element squares to identity in T_2^2") {
    const Setup s(2, 1, 2);
    const MonoidElem fr = frobenius_elem();
    CHECK(compose(fr, fr) == identity(s.shape));
    CHECK(invert(fr) == fr);
}

TEST_CASE("delta examples in T_2^2") {
    const Setup s(2, 1, 2);
    // sigma_1 constant 2, everything else identity: table of x^3+x+1
    const MonoidElem c{{MonoidPart{1, {2, 2}, {0, 0}}, MonoidPart{2, {1}, {0}}}};
    CHECK(delta(c, s.table).values == std::vector<ElemId>{1, 1, 2, 3});
    // shift 1 on the 2-cycle: table of x^2
    CHECK(delta(frobenius_elem(), s.table).values == std::vector<ElemId>{0, 1, 3, 2});
}

TEST_CASE("delta_inv examples and errors") {
    const Setup s(2, 1, 2);
    CHECK(delta_inv(identity_table(4), s.ctx, s.table) == identity(s.shape));
    const MonoidElem sq = delta_inv(FuncTable{{0, 1, 3, 2}}, s.ctx, s.table);
    CHECK(sq == frobenius_elem());

    // x^3 on F_4: 0 -> 0, everything else -> 1
    try {
        delta_inv(FuncTable{{0, 1, 1, 1}}, s.ctx, s.table);
        FAIL("expected NotPreserving");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPreserving);
    }
    // swaps alpha and alpha+1 on one side only: preserving but not equivariant
    const Setup s8(2, 1, 3);
    FuncTable bad = identity_table(8);
    const auto& orbit = s8.table.stratum(3).orbits[0];
    std::swap(bad.values[orbit[0]], bad.values[orbit[1]]);
    try {
        delta_inv(bad, s8.ctx, s8.table);
        FAIL("expected NotEquivariant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotEquivariant);
    }
}

TEST_CASE("compose rejects mismatched shapes") {
    const Setup a(2, 1, 2), b(2, 1, 3);
    CHECK_THROWS_AS(compose(identity(a.shape), identity(b.shape)), Error);
    CHECK_THROWS_AS(delta(identity(a.shape), b.table), Error);
}

TEST_CASE("homomorphism law, exhaustive on T_2^2 and T_2^3") {
    for (unsigned m : {2u, 3u}) {
        const Setup s(2, 1, m);
        const auto elems = enumerate_monoid(s.shape);
        std::vector<FuncTable> tables;
        for (const auto& a : elems) tables.push_back(delta(a, s.table));
        std::uint64_t bad = 0;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (delta(compose(elems[i], elems[j]), s.table) != compose_tables(tables[i], tables[j])) ++bad;
        CHECK(bad == 0);
    }
}

TEST_CASE("associativity on sampled triples") {
    const Setup s(3, 1, 2);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto a = random_element(s.shape, 3 * seed);
        const auto b = random_element(s.shape, 3 * seed + 1);
        const auto c = random_element(s.shape, 3 * seed + 2);
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("enumeration counts, order and uniqueness") {
    CHECK(enumerate_monoid(MonoidShape::of_field(2, 2)).size() == 8);
    CHECK(enumerate_monoid(MonoidShape::of_field(2, 3)).size() == 144);
    const auto big = enumerate_monoid(MonoidShape::of_field(3, 2));
    CHECK(big.size() == 5832);

    const auto small = enumerate_monoid(MonoidShape::of_field(2, 2));
    CHECK(small.front() == MonoidElem{{MonoidPart{1, {1, 1}, {0, 0}}, MonoidPart{2, {1}, {0}}}});
    CHECK(small[1] == MonoidElem{{MonoidPart{1, {1, 1}, {0, 0}}, MonoidPart{2, {1}, {1}}}});
    CHECK(small.back() == MonoidElem{{MonoidPart{1, {2, 2}, {0, 0}}, MonoidPart{2, {1}, {1}}}});

    std::set<std::string> seen;
    for (const auto& a : big) seen.insert(monoid_elem_json(a).dump());
    CHECK(seen.size() == big.size());

    try {
        enumerate_monoid(MonoidShape::of_field(5, 2));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("units: counts, inverses, and non-injective images") {
    for (auto [q, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        const Setup s(q, 1, m);
        std::uint64_t units = 0;
        for (const auto& a : enumerate_monoid(s.shape)) {
            const bool bij = is_bijective(delta(a, s.table));
            CHECK(is_invertible(a) == bij);
            if (!is_invertible(a)) {
                CHECK_THROWS_AS(invert(a), Error);
                continue;
            }
            ++units;
            const auto ai = invert(a);
            CHECK(compose(a, ai) == identity(s.shape));
            CHECK(compose(ai, a) == identity(s.shape));
        }
        CHECK(mpz_class(static_cast<unsigned long>(units)) == s.shape.unit_count());
    }
}

TEST_CASE("unit frequency of uniform sampling on T_3^2") {
    const Setup s(3, 1, 2);
    const int samples = 100000;
    int units = 0;
    for (int i = 0; i < samples; ++i)
        if (is_invertible(random_element(s.shape, static_cast<std::uint64_t>(i)))) ++units;
    const double prob = 288.0 / 5832.0;
    const double sigma = std::sqrt(samples * prob * (1 - prob));
    CHECK(std::abs(units - samples * prob) < 3 * sigma);
}

TEST_CASE("random elements are reproducible and round trip") {
    const Setup s(2, 1, 4);
    CHECK(random_element(s.shape, 42) == random_element(s.shape, 42));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto a = random_element(s.shape, seed);
        const auto t = delta(a, s.table);
        CHECK(delta_inv(t, s.ctx, s.table) == a);
        CHECK(commutes_with_frobenius(s.ctx, t));
        CHECK(is_subfield_preserving(s.ctx, s.table, t));
        for (ElemId x = 0; x < s.ctx.size(); ++x) CHECK(s.ctx.subfield_degree(t(x)) == s.ctx.subfield_degree(x));
        const auto u = random_unit(s.shape, seed);
        CHECK(is_invertible(u));
    }
}

TEST_CASE("factor_unit") {
    {
        const Setup s(2, 1, 2);
        const auto id = factor_unit(identity(s.shape), s.table);
        CHECK(id.s == identity_table(4));
        CHECK(id.h == identity(s.shape));

        const auto fr = factor_unit(frobenius_elem(), s.table);
        CHECK(fr.s == identity_table(4));
        CHECK(fr.h == frobenius_elem());
        CHECK_THROWS_AS(factor_unit(MonoidElem{{MonoidPart{1, {1, 1}, {0, 0}}, MonoidPart{2, {1}, {0}}}}, s.table),
                        Error);
    }
    for (auto [q, m] : {std::pair{2u, 2u}, {2u, 3u}}) {
        const Setup s(q, 1, m);
        for (const auto& u : enumerate_monoid(s.shape)) {
            if (!is_invertible(u)) continue;
            const auto fac = factor_unit(u, s.table);
            CHECK(compose_tables(fac.s, delta(fac.h, s.table)) == delta(u, s.table));
            CHECK(is_bijective(fac.s));
            const auto h = delta(fac.h, s.table);
            for (ElemId x = 0; x < s.ctx.size(); ++x) {
                if (s.ctx.in_base_field(x)) CHECK(h(x) == x);
                else CHECK(fac.s(x) == x);
            }
        }
    }
}

TEST_CASE("MonoidElem JSON round trip") {
    const Setup s(3, 1, 2);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = random_element(s.shape, seed);
        CHECK(monoid_elem_from_json(monoid_elem_json(a)) == a);
    }
    const auto j = monoid_elem_json(frobenius_elem());
    CHECK(j.dump() == R"({"1":{"shifts":[0,0],"sigma":[1,2]},"2":{"shifts":[1],"sigma":[1]}})");
}

}  // TEST_SUITE
