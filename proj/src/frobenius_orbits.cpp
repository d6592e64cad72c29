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

#include "sfp/frobenius_orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sfp {

OrbitTable::OrbitTable(const FieldCtx& ctx) : m_(ctx.m()), coords_(ctx.size()) {
    const auto divs = divisors(ctx.m());
    for (auto k : divs) strata_.push_back(OrbitStratum{static_cast<unsigned>(k), {}});

    std::vector<bool> seen(ctx.size(), false);
    for (ElemId a = 0; a < ctx.size(); ++a) {
        if (seen[a]) continue;
        std::vector<ElemId> orbit;
        ElemId x = a;
        do {
            seen[x] = true;
            orbit.push_back(x);
            x = ctx.frobenius_q(x);
        } while (x != a);

        const auto k = static_cast<unsigned>(orbit.size());
        auto& stratum = strata_[static_cast<std::size_t>(
            std::find(divs.begin(), divs.end(), k) - divs.begin())];
        const auto i = static_cast<std::uint32_t>(stratum.orbits.size() + 1);
        for (unsigned j = 0; j < k; ++j) coords_[orbit[j]] = OrbitCoord{k, i, j + 1};
        stratum.orbits.push_back(std::move(orbit));
    }

    std::uint64_t covered = 0;
    for (const auto& s : strata_) covered += std::uint64_t{s.k} * s.orbits.size();
    if (covered != ctx.size()) throw std::logic_error("orbit partition does not cover the field");
}

const OrbitStratum& OrbitTable::stratum(unsigned k) const {
    for (const auto& s : strata_)
        if (s.k == k) return s;
    throw Error(ErrorCode::IndexOutOfRange, "orbit length " + std::to_string(k) + " does not divide m");
}

ElemId OrbitTable::element_at(unsigned k, std::uint32_t i, unsigned j) const {
    const auto& s = stratum(k);
    if (i < 1 || i > s.orbits.size() || j < 1 || j > k)
        throw Error(ErrorCode::IndexOutOfRange, "no element at (" + std::to_string(k) + ", " + std::to_string(i) +
                                                    ", " + std::to_string(j) + ")");
    return s.orbits[i - 1][j - 1];
}

OrbitCoord locate(const OrbitTable& table, ElemId a) { return table.locate(a); }

ElemId element_at(const OrbitTable& table, unsigned k, std::uint32_t i, unsigned j) {
    return table.element_at(k, i, j);
}

mpz_class pi_count(std::uint64_t q, std::uint64_t d) {
    if (d == 0) throw Error(ErrorCode::IndexOutOfRange, "degree must be positive");
    mpz_class sum = 0;
    for (auto j : divisors(d)) {
        const int mu = moebius(d / j);
        if (mu == 0) continue;
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), q, j);
        sum += mu * term;
    }
    if (sum % mpz_class(static_cast<unsigned long>(d)) != 0)
        throw std::logic_error("Moebius sum not divisible by d");
    return sum / mpz_class(static_cast<unsigned long>(d));
}

std::vector<ElemId> minimal_polynomial(const FieldCtx& ctx, const OrbitTable& table, ElemId a) {
    const auto c = table.locate(a);
    const auto& orbit = table.stratum(c.k).orbits[c.i - 1];
    std::vector<ElemId> poly{1};
    for (ElemId root : orbit) {
        // poly *= (x - root)
        const ElemId neg_root = ctx.neg(root);
        std::vector<ElemId> next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = ctx.add(next[t + 1], poly[t]);
            next[t] = ctx.add(next[t], ctx.mul(poly[t], neg_root));
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace sfp
