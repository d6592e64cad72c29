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

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sfp/gf_arith.hpp"

namespace sfp {

/// 1-based label of a field element: the j-th element of the i-th orbit of length k.
struct OrbitCoord {
    unsigned k = 0;
    std::uint32_t i = 0;
    unsigned j = 0;

    friend bool operator==(const OrbitCoord&, const OrbitCoord&) = default;
};

/// All orbits of the same length k, sorted by representative.
struct OrbitStratum {
    unsigned k = 0;
    std::vector<std::vector<ElemId>> orbits;
};

/// Partition of GF(q^m) into cycles of x -> x^q. Each orbit starts at its
/// basis-order minimum and continues by applying the Frobenius map, so
/// position j+1 is the image of position j.
class OrbitTable {
public:
    explicit OrbitTable(const FieldCtx& ctx);

    /// Strata for every divisor of m, ascending in k.
    const std::vector<OrbitStratum>& strata() const { return strata_; }
    /// Stratum of orbit length k; throws IndexOutOfRange if k does not divide m.
    const OrbitStratum& stratum(unsigned k) const;
    std::uint32_t orbit_count(unsigned k) const {
        return static_cast<std::uint32_t>(stratum(k).orbits.size());
    }

    OrbitCoord locate(ElemId a) const { return coords_.at(a); }
    ElemId element_at(unsigned k, std::uint32_t i, unsigned j) const;

    std::uint32_t field_size() const { return static_cast<std::uint32_t>(coords_.size()); }
    unsigned m() const { return m_; }

private:
    unsigned m_;
    std::vector<OrbitStratum> strata_;
    std::vector<OrbitCoord> coords_;
};

inline OrbitTable orbit_partition(const FieldCtx& ctx) { return OrbitTable(ctx); }

/// Number of monic irreducible polynomials of degree d over F_q, by the exact
/// Moebius sum (1/d) * sum_{j | d} mu(d/j) q^j.
mpz_class pi_count(std::uint64_t q, std::uint64_t d);

/// prod_{i<d} (x - a^(q^i)) as ascending coefficients in the ambient field;
/// every coefficient lies in F_q.
std::vector<ElemId> minimal_polynomial(const FieldCtx& ctx, const OrbitTable& table, ElemId a);

OrbitCoord locate(const OrbitTable& table, ElemId a);
ElemId element_at(const OrbitTable& table, unsigned k, std::uint32_t i, unsigned j);

}  // namespace sfp
