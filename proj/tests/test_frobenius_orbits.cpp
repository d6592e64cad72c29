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

#include "oracles.hpp"
#include "sfp/frobenius_orbits.hpp"
#include "sfp/text_format.hpp"

using namespace sfp;

TEST_SUITE("frobenius_orbits") {

TEST_CASE("F_4 partition and labels") {
    const FieldCtx f = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    const OrbitTable t = orbit_partition(f);
    REQUIRE(t.strata().size() == 2);
    CHECK(t.stratum(1).orbits == std::vector<std::vector<ElemId>>{{0}, {1}});
    CHECK(t.stratum(2).orbits == std::vector<std::vector<ElemId>>{{2, 3}});  // (alpha, alpha+1)

    CHECK(locate(t, 2) == OrbitCoord{2, 1, 1});
    CHECK(locate(t, 0) == OrbitCoord{1, 1, 1});
    CHECK(element_at(t, 2, 1, 2) == 3);
    CHECK(element_at(t, 1, 2, 1) == 1);
}

TEST_CASE("F_2 has two fixed points") {
    const OrbitTable t(build_field(2, 1, 1));
    REQUIRE(t.strata().size() == 1);
    CHECK(t.orbit_count(1) == 2);
}

TEST_CASE("F_8: two fixed points and two 3-cycles") {
    const FieldCtx f = build_field(2, 1, 3);
    const OrbitTable t(f);
    CHECK(t.orbit_count(1) == 2);
    CHECK(t.orbit_count(3) == 2);
    const auto& orbits = t.stratum(3).orbits;
    CHECK(element_at(t, 3, 1, 1) == orbits[0][0]);
    CHECK(element_at(t, 3, 2, 1) == orbits[1][0]);
    CHECK(orbits[0][0] < orbits[1][0]);
}

TEST_CASE("element_at rejects bad coordinates") {
    const OrbitTable t(build_field(2, 1, 2));
    CHECK_THROWS_AS(element_at(t, 3, 1, 1), Error);
    CHECK_THROWS_AS(element_at(t, 2, 2, 1), Error);
    CHECK_THROWS_AS(element_at(t, 2, 1, 3), Error);
    CHECK_THROWS_AS(element_at(t, 1, 0, 1), Error);
}

TEST_CASE("table invariants on several fields") {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 6u}, {3u, 1u, 4u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {3u, 2u, 2u}}) {
        const FieldCtx f = build_field(p, e, m);
        const OrbitTable t(f);
        mpz_class covered = 0;
        std::vector<int> seen(f.size(), 0);
        for (const auto& s : t.strata()) {
            CHECK(mpz_class(static_cast<unsigned long>(s.orbits.size())) == pi_count(f.q(), s.k));
            covered += static_cast<unsigned long>(s.k * s.orbits.size());
            ElemId prev_rep = 0;
            for (std::size_t i = 0; i < s.orbits.size(); ++i) {
                const auto& orbit = s.orbits[i];
                REQUIRE(orbit.size() == s.k);
                CHECK(*std::min_element(orbit.begin(), orbit.end()) == orbit[0]);
                if (i > 0) CHECK(orbit[0] > prev_rep);
                prev_rep = orbit[0];
                for (unsigned j = 0; j < s.k; ++j) {
                    ++seen[orbit[j]];
                    CHECK(f.frobenius_q(orbit[j]) == orbit[(j + 1) % s.k]);
                    const auto c = t.locate(orbit[j]);
                    CHECK(t.element_at(c.k, c.i, c.j) == orbit[j]);
                    CHECK(c == OrbitCoord{s.k, static_cast<std::uint32_t>(i + 1), j + 1});
                }
            }
        }
        CHECK(covered == f.element_count());
        CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    }
}

TEST_CASE("pi_count examples") {
    CHECK(pi_count(2, 1) == 2);
    CHECK(pi_count(2, 2) == 1);
    CHECK(pi_count(2, 4) == 3);
    CHECK(pi_count(3, 2) == 3);
    CHECK(pi_count(4, 2) == 6);
    CHECK(pi_count(13, 13) > 0);
}

TEST_CASE("pi_count agrees with exhaustive irreducibility scan") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned d = 1;; ++d) {
            std::uint64_t size = 1;
            for (unsigned i = 0; i < d; ++i) size *= p;
            if (size > 4096) break;
            CHECK(pi_count(p, d) == static_cast<unsigned long>(oracle::count_irreducibles(p, d)));
        }
    }
}

TEST_CASE("pi_count for prime-power q matches orbit counting") {
    // orbits of exact length d in GF(q^d) number d * pi(d)
    for (auto [p, e, d] : {std::tuple{2u, 2u, 2u}, {2u, 2u, 3u}, {2u, 3u, 2u}, {3u, 2u, 2u}, {2u, 2u, 4u}}) {
        const FieldCtx f = build_field(p, e, d);
        CHECK(pi_count(f.q(), d) == static_cast<unsigned long>(OrbitTable(f).orbit_count(d)));
    }
}

TEST_CASE("minimal polynomials") {
    const FieldCtx f4 = build_field(2, 1, 2, PrimePoly{{1, 1, 1}});
    const OrbitTable t4(f4);
    CHECK(minimal_polynomial(f4, t4, 2) == std::vector<ElemId>{1, 1, 1});
    CHECK(minimal_polynomial(f4, t4, 3) == std::vector<ElemId>{1, 1, 1});
    CHECK(minimal_polynomial(f4, t4, 0) == std::vector<ElemId>{0, 1});

    const FieldCtx f8 = build_field(2, 1, 3);
    const OrbitTable t8(f8);
    std::set<std::vector<ElemId>> cubics;
    for (const auto& orbit : t8.stratum(3).orbits) cubics.insert(minimal_polynomial(f8, t8, orbit[0]));
    CHECK(cubics == std::set<std::vector<ElemId>>{{1, 1, 0, 1}, {1, 0, 1, 1}});
}

TEST_CASE("minimal polynomial is constant on orbits, injective on orbits, with F_q coefficients") {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}, {3u, 2u, 2u}}) {
        const FieldCtx f = build_field(p, e, m);
        const OrbitTable t(f);
        for (const auto& s : t.strata()) {
            std::set<std::vector<ElemId>> distinct;
            for (const auto& orbit : s.orbits) {
                const auto mp = minimal_polynomial(f, t, orbit[0]);
                CHECK(mp.size() == s.k + 1);
                CHECK(mp.back() == 1);
                for (auto c : mp) CHECK(f.frobenius_q(c) == c);
                for (auto a : orbit) CHECK(minimal_polynomial(f, t, a) == mp);
                distinct.insert(mp);
            }
            CHECK(distinct.size() == s.orbits.size());
        }
    }
}

TEST_CASE("orbit table JSON") {
    const FieldCtx f = build_field(2, 1, 2);
    const auto j = orbit_table_json(f, OrbitTable(f));
    CHECK(j["1"].size() == 2);
    CHECK(j["2"][0]["rep"] == "0,1");
    CHECK(j["2"][0]["elements"] == nlohmann::json::array({"0,1", "1,1"}));
}

}  // TEST_SUITE
