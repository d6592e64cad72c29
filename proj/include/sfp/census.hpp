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
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sfp/frobenius_orbits.hpp"
#include "sfp/gf_arith.hpp"
#include "sfp/poly_repr.hpp"

namespace sfp {

// Exact counts. q must be a prime power (NotPrimePower otherwise) and q^m at
// most 2^24 (TooLarge otherwise).

/// prod_{k|m} k^pi(k) * pi(k)^pi(k)
mpz_class count_T(std::uint64_t q, unsigned m);
/// prod_{k|m} k^pi(k) * pi(k)!
mpz_class count_units(std::uint64_t q, unsigned m);
/// prod_{k|m} (k pi(k))^(k pi(k)), all subfield preserving maps regardless of coefficients.
mpz_class count_L(std::uint64_t q, unsigned m);

/// count_T / q^(q^m). For prime m the closed form q^q (q^m - q)^((q^m - q)/m) / q^(q^m)
/// is evaluated as well and must agree.
mpq_class density_T(std::uint64_t q, unsigned m);
/// count_units / q^(q^m).
mpq_class density_units(std::uint64_t q, unsigned m);

/// ln density_T(q, p) for prime p, simplified to ((q^p - q)/p) ln(1 - q^(1-p)) and
/// evaluated without forming q^p. Throws DegenerateField for q < 2 or composite p.
double log_density_T_stable(std::uint64_t q, unsigned p);
/// ln density_units(q, p) = ln q! + pi ln p + ln pi! - q^p ln q with pi = (q^p - q)/p,
/// through lgamma.
double log_density_units(std::uint64_t q, unsigned p);

struct DivisorCount {
    unsigned k;
    mpz_class pi;
};

struct CensusReport {
    std::uint64_t q = 0;
    unsigned m = 0;
    std::vector<DivisorCount> pis;
    mpz_class count_T;
    mpz_class count_units;
    mpz_class count_L;
    /// Present when q^(q^m) is small enough to write down.
    std::optional<mpq_class> density_T;
    std::optional<mpq_class> density_units;
    /// Present for prime m.
    std::optional<double> log_density_T;
    std::optional<double> log_density_units;
};

CensusReport census_report(std::uint64_t q, unsigned m);

/// Decimal expansion of a rational with the given number of significant digits.
std::string to_decimal(const mpq_class& x, int digits = 30);

struct BruteForceOptions {
    std::uint64_t bound = std::uint64_t{1} << 20;
    unsigned threads = 0;         // 0 = hardware concurrency
    bool collect_members = false;
    bool count_maps = true;       // also enumerate all maps when (q^m)^(q^m) <= bound
};

struct BruteForceResult {
    std::uint64_t candidates = 0;
    std::uint64_t commuting = 0;  // candidates whose tables commute with phi_q
    std::uint64_t members = 0;
    std::uint64_t units = 0;
    std::optional<std::uint64_t> maps_checked;
    std::optional<std::uint64_t> preserving_maps;
    /// Candidate codes of members, ascending; see decode_candidate.
    std::vector<std::uint64_t> member_codes;

    mpz_class formula_T;
    mpz_class formula_units;
    mpz_class formula_L;

    bool matches() const;
};

/// Candidate code -> polynomial: base-q digit i (c0 least significant) picks
/// the coefficient of x^i from the basis-ordered elements of F_q.
PolyRep decode_candidate(const FieldCtx& ctx, std::uint64_t code);

/// Classifies every reduced polynomial with coefficients in F_q. Throws
/// TooLarge when q^(q^m) exceeds the bound.
BruteForceResult brute_force_census(const FieldCtx& ctx, const OrbitTable& table,
                                    const BruteForceOptions& options = {});

enum class SweepMode { FixedQ, FixedP, Diagonal };

struct ConvergenceRow {
    std::uint64_t q;
    unsigned p;
    double log_density;
};

/// FixedQ: q = fixed, p over values. FixedP: p = fixed, q over values.
/// Diagonal: q = p over values (fixed ignored).
std::vector<ConvergenceRow> convergence_table(SweepMode mode, std::uint64_t fixed,
                                              const std::vector<std::uint64_t>& values);

}  // namespace sfp
