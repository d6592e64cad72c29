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

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sfp/error.hpp"

namespace sfp {

/// A residue modulo the characteristic p.
using Residue = std::uint32_t;

/// Position of a field element in basis order; also its packed base-p
/// encoding (coordinate t contributes coeffs[t] * p^t).
using ElemId = std::uint32_t;

/// Largest ambient field the library will construct.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// Monic polynomial over F_p, ascending coefficients.
struct PrimePoly {
    std::vector<Residue> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const PrimePoly&, const PrimePoly&) = default;
};

/// Field element as coordinates with respect to the power basis 1, x, ..., x^(N-1)
/// of the modulus, N = e*m.
struct FFElem {
    std::vector<Residue> coeffs;

    friend bool operator==(const FFElem&, const FFElem&) = default;
};

// Integer helpers shared across modules.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
int moebius(std::uint64_t n);
/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t q);

/// Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(const PrimePoly& f, Residue p);

/// Lexicographically least monic irreducible of degree d over F_p
/// (coefficient c0 varies fastest).
PrimePoly find_irreducible(Residue p, unsigned d);

/// Immutable description of GF(q^m), q = p^e, realized as F_p[x]/(modulus)
/// with deg modulus = e*m. Element ids follow basis order, so id 0 is zero,
/// id 1 is one and id p is the class of x.
class FieldCtx {
public:
    FieldCtx(Residue p, unsigned e, unsigned m, std::optional<PrimePoly> modulus = std::nullopt);

    Residue p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned m() const { return m_; }
    /// Degree of the ambient field over F_p.
    unsigned degree() const { return e_ * m_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t size() const { return size_; }
    mpz_class element_count() const { return mpz_class(static_cast<unsigned long>(size_)); }
    const PrimePoly& modulus() const { return modulus_; }

    FFElem element(ElemId id) const;
    /// Throws IndexOutOfRange when the vector has the wrong length or a coordinate >= p.
    ElemId id(const FFElem& a) const;
    FFElem zero() const { return element(0); }
    FFElem one() const { return element(1); }
    std::vector<FFElem> enumerate() const;

    ElemId add(ElemId a, ElemId b) const;
    ElemId sub(ElemId a, ElemId b) const;
    ElemId neg(ElemId a) const;
    ElemId mul(ElemId a, ElemId b) const;
    ElemId inv(ElemId a) const;
    ElemId pow(ElemId a, std::uint64_t exponent) const;
    ElemId pow(ElemId a, const mpz_class& exponent) const;

    FFElem add(const FFElem& a, const FFElem& b) const { return element(add(id(a), id(b))); }
    FFElem sub(const FFElem& a, const FFElem& b) const { return element(sub(id(a), id(b))); }
    FFElem neg(const FFElem& a) const { return element(neg(id(a))); }
    FFElem mul(const FFElem& a, const FFElem& b) const { return element(mul(id(a), id(b))); }
    FFElem inv(const FFElem& a) const { return element(inv(id(a))); }
    FFElem pow(const FFElem& a, const mpz_class& exponent) const { return element(pow(id(a), exponent)); }

    /// x -> x^q, read from a precomputed table.
    ElemId frobenius_q(ElemId a) const { return frob_q_[a]; }
    FFElem frobenius_q(const FFElem& a) const { return element(frob_q_[id(a)]); }
    /// Least d with a^(q^d) = a.
    unsigned subfield_degree(ElemId a) const { return degree_over_q_[a]; }
    unsigned subfield_degree(const FFElem& a) const { return degree_over_q_[id(a)]; }
    bool in_base_field(ElemId a) const { return degree_over_q_[a] == 1; }

    /// Elements of F_q in basis order.
    const std::vector<ElemId>& base_field() const { return base_field_; }

private:
    void decode(ElemId a, std::uint64_t* digits) const;
    ElemId encode(const std::uint64_t* digits) const;

    Residue p_;
    unsigned e_;
    unsigned m_;
    std::uint64_t q_;
    std::uint32_t size_;
    PrimePoly modulus_;
    std::vector<std::uint32_t> place_;  // p^t
    std::vector<ElemId> frob_q_;
    std::vector<std::uint8_t> degree_over_q_;
    std::vector<ElemId> base_field_;
};

/// Validating constructor; find_irreducible(p, e*m) is used when no modulus is given.
FieldCtx build_field(Residue p, unsigned e, unsigned m, std::optional<PrimePoly> modulus = std::nullopt);

}  // namespace sfp
