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

#include "sfp/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace sfp {

FuncTable identity_table(std::uint32_t field_size) {
    FuncTable f;
    f.values.resize(field_size);
    std::iota(f.values.begin(), f.values.end(), ElemId{0});
    return f;
}

FuncTable compose_tables(const FuncTable& f, const FuncTable& g) {
    FuncTable out;
    out.values.resize(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out.values[x] = f.values.at(g.values[x]);
    return out;
}

bool is_bijective(const FuncTable& f) {
    std::vector<bool> hit(f.size(), false);
    for (auto y : f.values) {
        if (y >= f.size() || hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

// ---------------------------------------------------------------------------

MonoidShape MonoidShape::of_field(std::uint64_t q, unsigned m) {
    MonoidShape shape;
    for (auto k : divisors(m)) {
        const mpz_class n = pi_count(q, k);
        if (!n.fits_uint_p() || n > mpz_class(static_cast<unsigned long>(kMaxFieldSize)))
            throw Error(ErrorCode::TooLarge, "too many orbits of length " + std::to_string(k));
        shape.parts.push_back(ShapePart{static_cast<unsigned>(k), static_cast<std::uint32_t>(n.get_ui())});
    }
    return shape;
}

MonoidShape MonoidShape::of_table(const OrbitTable& table) {
    MonoidShape shape;
    for (const auto& s : table.strata())
        shape.parts.push_back(ShapePart{s.k, static_cast<std::uint32_t>(s.orbits.size())});
    return shape;
}

mpz_class MonoidShape::order() const {
    mpz_class total = 1, t;
    for (const auto& part : parts) {
        mpz_ui_pow_ui(t.get_mpz_t(), part.k, part.n);
        total *= t;
        mpz_ui_pow_ui(t.get_mpz_t(), part.n, part.n);
        total *= t;
    }
    return total;
}

mpz_class MonoidShape::unit_count() const {
    mpz_class total = 1, t;
    for (const auto& part : parts) {
        mpz_ui_pow_ui(t.get_mpz_t(), part.k, part.n);
        total *= t;
        mpz_fac_ui(t.get_mpz_t(), part.n);
        total *= t;
    }
    return total;
}

MonoidShape MonoidElem::shape() const {
    MonoidShape s;
    for (const auto& part : parts) s.parts.push_back(ShapePart{part.k, static_cast<std::uint32_t>(part.sigma.size())});
    return s;
}

void validate(const MonoidElem& a, const MonoidShape& shape) {
    if (a.parts.size() != shape.parts.size()) throw Error(ErrorCode::ShapeMismatch, "wrong number of divisors");
    for (std::size_t d = 0; d < a.parts.size(); ++d) {
        const auto& part = a.parts[d];
        const auto& want = shape.parts[d];
        if (part.k != want.k || part.sigma.size() != want.n || part.shifts.size() != want.n)
            throw Error(ErrorCode::ShapeMismatch, "component for k=" + std::to_string(want.k) + " has wrong size");
        for (auto s : part.sigma)
            if (s < 1 || s > want.n) throw Error(ErrorCode::IndexOutOfRange, "sigma entry out of range");
        for (auto s : part.shifts)
            if (s >= want.k) throw Error(ErrorCode::IndexOutOfRange, "shift out of range");
    }
}

MonoidElem identity(const MonoidShape& shape) {
    MonoidElem out;
    for (const auto& part : shape.parts) {
        MonoidPart p{part.k, std::vector<std::uint32_t>(part.n), std::vector<std::uint32_t>(part.n, 0)};
        std::iota(p.sigma.begin(), p.sigma.end(), std::uint32_t{1});
        out.parts.push_back(std::move(p));
    }
    return out;
}

MonoidElem compose(const MonoidElem& a, const MonoidElem& b) {
    if (a.shape() != b.shape()) throw Error(ErrorCode::ShapeMismatch, "operands have different shapes");
    MonoidElem out;
    out.parts.reserve(a.parts.size());
    for (std::size_t d = 0; d < a.parts.size(); ++d) {
        const auto& pa = a.parts[d];
        const auto& pb = b.parts[d];
        const std::size_t n = pb.sigma.size();
        MonoidPart r{pa.k, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t via = pb.sigma[i];
            r.sigma[i] = pa.sigma[via - 1];
            r.shifts[i] = (pa.shifts[via - 1] + pb.shifts[i]) % pa.k;
        }
        out.parts.push_back(std::move(r));
    }
    return out;
}

bool is_invertible(const MonoidElem& a) {
    for (const auto& part : a.parts) {
        std::vector<bool> hit(part.sigma.size(), false);
        for (auto s : part.sigma) {
            if (hit[s - 1]) return false;
            hit[s - 1] = true;
        }
    }
    return true;
}

MonoidElem invert(const MonoidElem& a) {
    if (!is_invertible(a)) throw Error(ErrorCode::NotInvertible, "some sigma component is not a bijection");
    MonoidElem out;
    for (const auto& part : a.parts) {
        const std::size_t n = part.sigma.size();
        MonoidPart r{part.k, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
        for (std::size_t i = 0; i < n; ++i) r.sigma[part.sigma[i] - 1] = static_cast<std::uint32_t>(i + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t pre = r.sigma[i];
            r.shifts[i] = (part.k - part.shifts[pre - 1] % part.k) % part.k;
        }
        out.parts.push_back(std::move(r));
    }
    return out;
}

FuncTable delta(const MonoidElem& a, const OrbitTable& table) {
    validate(a, MonoidShape::of_table(table));
    FuncTable f;
    f.values.resize(table.field_size());
    for (const auto& part : a.parts) {
        const auto& orbits = table.stratum(part.k).orbits;
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& target = orbits[part.sigma[i] - 1];
            for (unsigned j = 0; j < part.k; ++j) f.values[orbits[i][j]] = target[(j + part.shifts[i]) % part.k];
        }
    }
    return f;
}

MonoidElem delta_inv(const FuncTable& f, const FieldCtx& ctx, const OrbitTable& table) {
    if (f.size() != ctx.size()) throw Error(ErrorCode::ShapeMismatch, "table size differs from field size");
    for (ElemId x = 0; x < ctx.size(); ++x) {
        if (f(x) >= ctx.size()) throw Error(ErrorCode::IndexOutOfRange, "table value out of range");
        if (ctx.subfield_degree(f(x)) != ctx.subfield_degree(x))
            throw Error(ErrorCode::NotPreserving, "element of degree " + std::to_string(ctx.subfield_degree(x)) +
                                                      " sent to degree " + std::to_string(ctx.subfield_degree(f(x))));
    }
    for (ElemId x = 0; x < ctx.size(); ++x)
        if (f(ctx.frobenius_q(x)) != ctx.frobenius_q(f(x)))
            throw Error(ErrorCode::NotEquivariant, "map does not commute with the Frobenius map");

    MonoidElem out;
    for (const auto& s : table.strata()) {
        const std::size_t n = s.orbits.size();
        MonoidPart part{s.k, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = table.locate(f(s.orbits[i][0]));
            part.sigma[i] = c.i;
            part.shifts[i] = c.j - 1;
        }
        out.parts.push_back(std::move(part));
    }
    return out;
}

void for_each_element(const MonoidShape& shape, std::uint64_t bound,
                      const std::function<void(const MonoidElem&)>& visit) {
    if (shape.order() > mpz_class(static_cast<unsigned long>(bound)))
        throw Error(ErrorCode::TooLarge, "monoid has " + shape.order().get_str() + " elements, bound is " +
                                             std::to_string(bound));
    MonoidElem cur = identity(shape);
    for (auto& part : cur.parts) std::fill(part.sigma.begin(), part.sigma.end(), 1);

    // coordinates in significance order: sigma_k then shifts_k, divisors ascending
    struct Digit {
        std::uint32_t* value;
        std::uint32_t lo, hi;
    };
    std::vector<Digit> digits;
    for (auto& part : cur.parts) {
        for (auto& s : part.sigma) digits.push_back({&s, 1, static_cast<std::uint32_t>(part.sigma.size())});
        for (auto& s : part.shifts) digits.push_back({&s, 0, part.k - 1});
    }
    for (;;) {
        visit(cur);
        std::size_t t = digits.size();
        while (t > 0) {
            auto& d = digits[t - 1];
            if (*d.value < d.hi) {
                ++*d.value;
                break;
            }
            *d.value = d.lo;
            --t;
        }
        if (t == 0) return;
    }
}

std::vector<MonoidElem> enumerate_monoid(const MonoidShape& shape, std::uint64_t bound) {
    std::vector<MonoidElem> out;
    for_each_element(shape, bound, [&](const MonoidElem& a) { out.push_back(a); });
    return out;
}

MonoidElem random_element(const MonoidShape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MonoidElem out = identity(shape);
    for (auto& part : out.parts) {
        const auto n = static_cast<std::uint32_t>(part.sigma.size());
        std::uniform_int_distribution<std::uint32_t> pick(1, n);
        std::uniform_int_distribution<std::uint32_t> shift(0, part.k - 1);
        for (auto& s : part.sigma) s = pick(rng);
        for (auto& s : part.shifts) s = shift(rng);
    }
    return out;
}

MonoidElem random_unit(const MonoidShape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MonoidElem out = identity(shape);
    for (auto& part : out.parts) {
        std::shuffle(part.sigma.begin(), part.sigma.end(), rng);
        std::uniform_int_distribution<std::uint32_t> shift(0, part.k - 1);
        for (auto& s : part.shifts) s = shift(rng);
    }
    return out;
}

UnitFactorization factor_unit(const MonoidElem& u, const OrbitTable& table) {
    if (!is_invertible(u)) throw Error(ErrorCode::NotInvertible, "factor_unit needs a unit");
    const MonoidShape shape = MonoidShape::of_table(table);
    validate(u, shape);

    // base-field part of u, identity elsewhere
    MonoidElem base = identity(shape);
    base.parts.front() = u.parts.front();
    MonoidElem h = u;
    h.parts.front() = identity(shape).parts.front();
    return UnitFactorization{delta(base, table), std::move(h)};
}

}  // namespace sfp
