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
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sfp/frobenius_orbits.hpp"
#include "sfp/gf_arith.hpp"

namespace sfp {

/// A total map of the field to itself, values indexed by basis order.
struct FuncTable {
    std::vector<ElemId> values;

    ElemId operator()(ElemId x) const { return values[x]; }
    std::size_t size() const { return values.size(); }
    friend bool operator==(const FuncTable&, const FuncTable&) = default;
};

FuncTable identity_table(std::uint32_t field_size);
/// (f o g)(x) = f(g(x)).
FuncTable compose_tables(const FuncTable& f, const FuncTable& g);
bool is_bijective(const FuncTable& f);

struct ShapePart {
    unsigned k = 0;       // orbit length, a divisor of m
    std::uint32_t n = 0;  // number of orbits of that length

    friend bool operator==(const ShapePart&, const ShapePart&) = default;
};

/// One factor M_[n] x| C_k^n per divisor k of m, ascending in k.
struct MonoidShape {
    std::vector<ShapePart> parts;

    static MonoidShape of_field(std::uint64_t q, unsigned m);
    static MonoidShape of_table(const OrbitTable& table);

    /// prod k^n * n^n
    mpz_class order() const;
    /// prod k^n * n!
    mpz_class unit_count() const;

    friend bool operator==(const MonoidShape&, const MonoidShape&) = default;
};

/// The pair (sigma, gamma) for one divisor k. sigma holds 1-based images of
/// a self-map of [n]; shifts[i] = s means gamma_i(j) = ((j - 1 + s) mod k) + 1.
struct MonoidPart {
    unsigned k = 0;
    std::vector<std::uint32_t> sigma;
    std::vector<std::uint32_t> shifts;

    friend bool operator==(const MonoidPart&, const MonoidPart&) = default;
};

struct MonoidElem {
    std::vector<MonoidPart> parts;

    MonoidShape shape() const;
    friend bool operator==(const MonoidElem&, const MonoidElem&) = default;
};

/// Throws ShapeMismatch or IndexOutOfRange for malformed elements.
void validate(const MonoidElem& a, const MonoidShape& shape);

MonoidElem identity(const MonoidShape& shape);

/// compose(a, b) acts as "b first, then a": delta(compose(a, b)) = delta(a) o delta(b).
/// Per divisor, sigma'' = sigma_a o sigma_b and s''_i = (s^a_{sigma_b(i)} + s^b_i) mod k.
MonoidElem compose(const MonoidElem& a, const MonoidElem& b);

/// True iff every sigma is a bijection.
bool is_invertible(const MonoidElem& a);

/// sigma^-1 with shifts s'_i = -s_{sigma^-1(i)} mod k; throws NotInvertible.
MonoidElem invert(const MonoidElem& a);

/// The induced map a^(k)_{i,j} -> a^(k)_{sigma(i), gamma_i(j)}.
FuncTable delta(const MonoidElem& a, const OrbitTable& table);

/// Recovers (sigma, gamma) from a map that preserves orbit lengths and commutes
/// with x -> x^q. Throws NotPreserving or NotEquivariant otherwise.
MonoidElem delta_inv(const FuncTable& f, const FieldCtx& ctx, const OrbitTable& table);

inline constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 20;

/// Visits every element in lexicographic (sigma, gamma) order, divisors ascending.
/// Throws TooLarge when the monoid order exceeds bound.
void for_each_element(const MonoidShape& shape, std::uint64_t bound,
                      const std::function<void(const MonoidElem&)>& visit);
std::vector<MonoidElem> enumerate_monoid(const MonoidShape& shape, std::uint64_t bound = kDefaultBound);

/// Uniform over the monoid; deterministic for a given seed.
MonoidElem random_element(const MonoidShape& shape, std::uint64_t seed);
/// Uniform over the unit group.
MonoidElem random_unit(const MonoidShape& shape, std::uint64_t seed);

/// Splits a unit u as s o delta(h): s permutes F_q and fixes everything else,
/// h fixes F_q pointwise.
struct UnitFactorization {
    FuncTable s;
    MonoidElem h;
};
UnitFactorization factor_unit(const MonoidElem& u, const OrbitTable& table);

}  // namespace sfp
