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

#include "sfp/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace sfp {

namespace {

constexpr std::uint64_t kMaxCountedField = std::uint64_t{1} << 24;
constexpr std::uint64_t kMaxExactDensityField = std::uint64_t{1} << 20;

// q^m, checked against the counting limit
std::uint64_t field_order(std::uint64_t q, unsigned m, std::uint64_t limit) {
    if (!prime_power_root(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (m == 0) throw Error(ErrorCode::DegenerateField, "m must be positive");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (n > limit / q) throw Error(ErrorCode::TooLarge, "q^m too large for exact counting");
        n *= q;
    }
    return n;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

mpz_class ambient_count(std::uint64_t q, std::uint64_t n) { return pow_ui(q, n); }

}  // namespace

mpz_class count_T(std::uint64_t q, unsigned m) {
    field_order(q, m, kMaxCountedField);
    mpz_class total = 1;
    for (auto k : divisors(m)) {
        const unsigned long n = pi_count(q, k).get_ui();
        total *= pow_ui(k, n) * pow_ui(n, n);
    }
    return total;
}

mpz_class count_units(std::uint64_t q, unsigned m) {
    field_order(q, m, kMaxCountedField);
    mpz_class total = 1;
    for (auto k : divisors(m)) {
        const unsigned long n = pi_count(q, k).get_ui();
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        total *= pow_ui(k, n) * fact;
    }
    return total;
}

mpz_class count_L(std::uint64_t q, unsigned m) {
    field_order(q, m, kMaxCountedField);
    mpz_class total = 1;
    for (auto k : divisors(m)) {
        const unsigned long size = k * pi_count(q, k).get_ui();
        total *= pow_ui(size, size);
    }
    return total;
}

mpq_class density_T(std::uint64_t q, unsigned m) {
    const std::uint64_t n = field_order(q, m, kMaxExactDensityField);
    mpq_class density(count_T(q, m), ambient_count(q, n));
    density.canonicalize();
    if (is_prime(m)) {
        const std::uint64_t outside = n - q;  // elements not in F_q
        mpq_class closed(pow_ui(q, q) * pow_ui(outside, outside / m), ambient_count(q, n));
        closed.canonicalize();
        if (closed != density) throw std::logic_error("closed-form density disagrees with the product formula");
    }
    return density;
}

mpq_class density_units(std::uint64_t q, unsigned m) {
    const std::uint64_t n = field_order(q, m, kMaxExactDensityField);
    mpq_class density(count_units(q, m), ambient_count(q, n));
    density.canonicalize();
    return density;
}

double log_density_T_stable(std::uint64_t q, unsigned p) {
    if (q < 2) throw Error(ErrorCode::DegenerateField, "q must be at least 2");
    if (!is_prime(p)) throw Error(ErrorCode::DegenerateField, "degree " + std::to_string(p) + " is not prime");
    // With x = q^(1-p): (q^p - q)/p = (q/p)(1 - x)/x, so the log density is
    // (q/p)(1 - x) * log1p(-x)/x.
    const double qd = static_cast<double>(q);
    const double x = std::exp((1.0 - static_cast<double>(p)) * std::log(qd));
    const double ratio = x > 0.0 ? std::log1p(-x) / x : -1.0;
    return (qd / p) * (1.0 - x) * ratio;
}

double log_density_units(std::uint64_t q, unsigned p) {
    if (q < 2) throw Error(ErrorCode::DegenerateField, "q must be at least 2");
    if (!is_prime(p)) throw Error(ErrorCode::DegenerateField, "degree " + std::to_string(p) + " is not prime");
    const double qd = static_cast<double>(q);
    const double log_q = std::log(qd);
    const double qp = std::exp(p * log_q);
    const double orbits = (qp - qd) / p;
    return std::lgamma(qd + 1.0) + orbits * std::log(static_cast<double>(p)) + std::lgamma(orbits + 1.0) - qp * log_q;
}

CensusReport census_report(std::uint64_t q, unsigned m) {
    CensusReport r;
    r.q = q;
    r.m = m;
    const std::uint64_t n = field_order(q, m, kMaxCountedField);
    for (auto k : divisors(m)) r.pis.push_back(DivisorCount{static_cast<unsigned>(k), pi_count(q, k)});
    r.count_T = count_T(q, m);
    r.count_units = count_units(q, m);
    r.count_L = count_L(q, m);
    if (n <= (std::uint64_t{1} << 16)) {
        r.density_T = density_T(q, m);
        r.density_units = density_units(q, m);
    }
    if (is_prime(m)) {
        r.log_density_T = log_density_T_stable(q, m);
        r.log_density_units = log_density_units(q, m);
    }
    return r;
}

std::string to_decimal(const mpq_class& x, int digits) {
    mpf_class f(x, 512);
    mp_exp_t exponent = 0;
    std::string mant = f.get_str(exponent, 10, static_cast<std::size_t>(digits));
    if (mant.empty()) return "0";
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    if (exponent <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mant;
    if (static_cast<std::size_t>(exponent) >= mant.size())
        return sign + mant + std::string(static_cast<std::size_t>(exponent) - mant.size(), '0');
    return sign + mant.substr(0, static_cast<std::size_t>(exponent)) + "." +
           mant.substr(static_cast<std::size_t>(exponent));
}

// ---------------------------------------------------------------------------
// brute force

bool BruteForceResult::matches() const {
    if (commuting != candidates) return false;
    if (mpz_class(static_cast<unsigned long>(members)) != formula_T) return false;
    if (mpz_class(static_cast<unsigned long>(units)) != formula_units) return false;
    if (preserving_maps && mpz_class(static_cast<unsigned long>(*preserving_maps)) != formula_L) return false;
    return true;
}

PolyRep decode_candidate(const FieldCtx& ctx, std::uint64_t code) {
    const auto& base = ctx.base_field();
    PolyRep f;
    f.coeffs.assign(ctx.size(), 0);
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
        f.coeffs[i] = base[code % base.size()];
        code /= base.size();
    }
    return f;
}

namespace {

struct Partial {
    std::uint64_t candidates = 0;
    std::uint64_t commuting = 0;
    std::uint64_t members = 0;
    std::uint64_t units = 0;
    std::vector<std::uint64_t> member_codes;
};

// Scans candidate codes [begin, end). The value table is updated in place as
// the odometer advances, so each step costs O(q^m) per changed digit.
Partial scan_candidates(const FieldCtx& ctx, const std::vector<unsigned>& degree, std::uint64_t begin,
                        std::uint64_t end, bool collect) {
    const std::uint32_t n = ctx.size();
    const auto& base = ctx.base_field();
    const std::uint64_t q = base.size();

    // contrib[(i * q + c) * n + x] = base[c] * x^i
    std::vector<ElemId> contrib(static_cast<std::size_t>(n) * q * n);
    for (ElemId x = 0; x < n; ++x) {
        ElemId power = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint64_t c = 0; c < q; ++c) contrib[(i * q + c) * n + x] = ctx.mul(base[c], power);
            power = ctx.mul(power, x);
        }
    }

    std::vector<std::uint32_t> digits(n);
    std::uint64_t code = begin;
    for (auto& d : digits) {
        d = static_cast<std::uint32_t>(code % q);
        code /= q;
    }
    std::vector<ElemId> values(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (ElemId x = 0; x < n; ++x) values[x] = ctx.add(values[x], contrib[(i * q + digits[i]) * n + x]);

    Partial out;
    for (std::uint64_t cur = begin; cur < end; ++cur) {
        ++out.candidates;
        bool commutes = true;
        for (ElemId x = 0; x < n && commutes; ++x)
            commutes = values[ctx.frobenius_q(x)] == ctx.frobenius_q(values[x]);
        if (commutes) ++out.commuting;

        bool preserving = true;
        for (ElemId x = 0; x < n && preserving; ++x)
            preserving = degree[values[x]] == degree[x];
        if (commutes && preserving) {
            ++out.members;
            if (collect) out.member_codes.push_back(cur);
            std::uint64_t hit = 0;
            for (ElemId x = 0; x < n; ++x) hit |= std::uint64_t{1} << values[x];
            if (hit == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) ++out.units;
        }

        if (cur + 1 == end) break;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t old = digits[i];
            const std::uint32_t next = old + 1 == q ? 0 : old + 1;
            digits[i] = next;
            const ElemId* from = &contrib[(i * q + old) * n];
            const ElemId* to = &contrib[(i * q + next) * n];
            for (ElemId x = 0; x < n; ++x) values[x] = ctx.add(ctx.sub(values[x], from[x]), to[x]);
            if (next != 0) break;
        }
    }
    return out;
}

std::uint64_t count_preserving_maps(const FieldCtx& ctx) {
    const std::uint32_t n = ctx.size();
    std::vector<ElemId> values(n, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (ElemId x = 0; x < n && ok; ++x) ok = ctx.subfield_degree(values[x]) == ctx.subfield_degree(x);
        if (ok) ++count;
        std::uint32_t i = 0;
        while (i < n && ++values[i] == n) values[i++] = 0;
        if (i == n) return count;
    }
}

}  // namespace

BruteForceResult brute_force_census(const FieldCtx& ctx, const OrbitTable& table, const BruteForceOptions& options) {
    const std::uint32_t n = ctx.size();
    if (n > 64) throw Error(ErrorCode::TooLarge, "oracle supports fields of at most 64 elements");
    std::vector<unsigned> degree(n);
    for (ElemId x = 0; x < n; ++x) degree[x] = table.locate(x).k;
    const std::uint64_t q = ctx.q();
    // q^n against the bound without overflow
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (total > options.bound / q)
            throw Error(ErrorCode::TooLarge, "q^(q^m) candidates exceed the bound " + std::to_string(options.bound));
        total *= q;
    }

    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            partials[w] = scan_candidates(ctx, degree, begin, end, options.collect_members);
        });
    }
    for (auto& t : pool) t.join();

    BruteForceResult r;
    for (auto& part : partials) {
        r.candidates += part.candidates;
        r.commuting += part.commuting;
        r.members += part.members;
        r.units += part.units;
        r.member_codes.insert(r.member_codes.end(), part.member_codes.begin(), part.member_codes.end());
    }

    if (options.count_maps) {
        std::uint64_t maps = 1;
        bool feasible = true;
        for (std::uint32_t i = 0; i < n && feasible; ++i) {
            if (maps > options.bound / n) feasible = false;
            else maps *= n;
        }
        if (feasible) {
            r.maps_checked = maps;
            r.preserving_maps = count_preserving_maps(ctx);
        }
    }

    r.formula_T = count_T(q, ctx.m());
    r.formula_units = count_units(q, ctx.m());
    r.formula_L = count_L(q, ctx.m());
    return r;
}

std::vector<ConvergenceRow> convergence_table(SweepMode mode, std::uint64_t fixed,
                                              const std::vector<std::uint64_t>& values) {
    std::vector<ConvergenceRow> rows;
    for (auto v : values) {
        std::uint64_t q = 0;
        std::uint64_t p = 0;
        switch (mode) {
        case SweepMode::FixedQ: q = fixed; p = v; break;
        case SweepMode::FixedP: q = v; p = fixed; break;
        case SweepMode::Diagonal: q = v; p = v; break;
        }
        rows.push_back(ConvergenceRow{q, static_cast<unsigned>(p), log_density_T_stable(q, static_cast<unsigned>(p))});
    }
    return rows;
}

}  // namespace sfp
