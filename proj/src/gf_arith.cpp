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

#include "sfp/gf_arith.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace sfp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::WrongModulusDegree: return "WrongModulusDegree";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotPreserving: return "NotPreserving";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateField: return "DegenerateField";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// integers

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int moebius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    unsigned e = 0;
    while (q > 1) {
        q /= factors[0];
        ++e;
    }
    return std::make_pair(factors[0], e);
}

// ---------------------------------------------------------------------------
// polynomials over F_p, used only for modulus selection

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, exp = p - 2;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

// a mod f, f nonzero
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (exp) {
        if (exp & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return poly_mod(std::move(result), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f
Poly frobenius_power_of_x(unsigned k, const Poly& f, std::uint64_t p) {
    Poly r = poly_mod(Poly{0, 1}, f, p);
    for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
}

Poly minus_x(Poly a, std::uint64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(const PrimePoly& f, Residue p) {
    if (f.coeffs.size() < 2 || f.coeffs.back() != 1) return false;
    const Poly fp(f.coeffs.begin(), f.coeffs.end());
    const auto d = static_cast<unsigned>(f.degree());
    if (d == 1) return true;
    if (!minus_x(frobenius_power_of_x(d, fp, p), p).empty()) return false;
    for (auto r : prime_factors(d)) {
        const Poly g = poly_gcd(fp, minus_x(frobenius_power_of_x(d / static_cast<unsigned>(r), fp, p), p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

PrimePoly find_irreducible(Residue p, unsigned d) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    PrimePoly f;
    f.coeffs.assign(d + 1, 0);
    f.coeffs[d] = 1;
    for (;;) {
        if (is_irreducible(f, p)) return f;
        // odometer over c0..c_{d-1}, c0 fastest
        std::size_t t = 0;
        while (t < d && ++f.coeffs[t] == p) f.coeffs[t++] = 0;
        if (t == d) break;
    }
    throw Error(ErrorCode::ReducibleModulus, "no irreducible found");  // unreachable for prime p
}

// ---------------------------------------------------------------------------
// FieldCtx

namespace {
constexpr std::size_t kMaxDigits = 20;  // p^N <= 2^20 forces N <= 20
}

FieldCtx::FieldCtx(Residue p, unsigned e, unsigned m, std::optional<PrimePoly> modulus)
    : p_(p), e_(e), m_(m) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (e == 0 || m == 0) throw Error(ErrorCode::DegenerateField, "e and m must be positive");

    const unsigned n_digits = e * m;
    std::uint64_t size = 1;
    for (unsigned t = 0; t < n_digits; ++t) {
        size *= p;
        if (size > kMaxFieldSize)
            throw Error(ErrorCode::FieldTooLarge, "field with more than 2^20 elements requested");
    }
    size_ = static_cast<std::uint32_t>(size);
    q_ = 1;
    for (unsigned t = 0; t < e; ++t) q_ *= p;

    if (modulus) {
        if (modulus->coeffs.size() != n_digits + 1)
            throw Error(ErrorCode::WrongModulusDegree,
                        "modulus degree " + std::to_string(modulus->degree()) + " but e*m = " + std::to_string(n_digits));
        if (modulus->coeffs.back() != 1)
            throw Error(ErrorCode::WrongModulusDegree, "modulus must be monic");
        for (auto c : modulus->coeffs)
            if (c >= p) throw Error(ErrorCode::ParseError, "modulus coefficient out of range");
        if (!is_irreducible(*modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        modulus_ = *modulus;
    } else {
        modulus_ = find_irreducible(p, n_digits);
    }

    place_.resize(n_digits + 1);
    place_[0] = 1;
    for (unsigned t = 1; t <= n_digits; ++t) place_[t] = place_[t - 1] * p;

    // phi_p is F_p-linear: phi_p(id) = phi_p(id without its top digit) + c * phi_p(x^t).
    std::vector<ElemId> frob_p(size_);
    frob_p[0] = 0;
    for (unsigned t = 0; t < n_digits; ++t) {
        const ElemId basis = place_[t];
        const ElemId image = pow(basis, std::uint64_t{p});
        for (ElemId low = 0; low < basis; ++low) {
            ElemId acc = image;
            for (Residue c = 1; c < p; ++c) {
                frob_p[c * basis + low] = add(frob_p[low], acc);
                acc = add(acc, image);
            }
        }
    }
    frob_q_.resize(size_);
    for (ElemId a = 0; a < size_; ++a) {
        ElemId x = a;
        for (unsigned i = 0; i < e; ++i) x = frob_p[x];
        frob_q_[a] = x;
    }

    degree_over_q_.assign(size_, 0);
    for (ElemId a = 0; a < size_; ++a) {
        if (degree_over_q_[a] != 0) continue;
        unsigned len = 1;
        for (ElemId x = frob_q_[a]; x != a; x = frob_q_[x]) ++len;
        ElemId x = a;
        do {
            degree_over_q_[x] = static_cast<std::uint8_t>(len);
            x = frob_q_[x];
        } while (x != a);
    }
    for (ElemId a = 0; a < size_; ++a)
        if (degree_over_q_[a] == 1) base_field_.push_back(a);
}

FieldCtx build_field(Residue p, unsigned e, unsigned m, std::optional<PrimePoly> modulus) {
    return FieldCtx(p, e, m, std::move(modulus));
}

void FieldCtx::decode(ElemId a, std::uint64_t* digits) const {
    const unsigned n = degree();
    for (unsigned t = 0; t < n; ++t) {
        digits[t] = a % p_;
        a /= p_;
    }
}

ElemId FieldCtx::encode(const std::uint64_t* digits) const {
    ElemId a = 0;
    for (unsigned t = degree(); t-- > 0;) a = a * p_ + static_cast<ElemId>(digits[t]);
    return a;
}

FFElem FieldCtx::element(ElemId id) const {
    if (id >= size_) throw Error(ErrorCode::IndexOutOfRange, "element id " + std::to_string(id));
    FFElem out;
    out.coeffs.resize(degree());
    for (auto& c : out.coeffs) {
        c = id % p_;
        id /= p_;
    }
    return out;
}

ElemId FieldCtx::id(const FFElem& a) const {
    if (a.coeffs.size() != degree())
        throw Error(ErrorCode::IndexOutOfRange, "element has " + std::to_string(a.coeffs.size()) +
                                                    " coordinates, field needs " + std::to_string(degree()));
    ElemId out = 0;
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
        if (*it >= p_) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
        out = out * p_ + *it;
    }
    return out;
}

std::vector<FFElem> FieldCtx::enumerate() const {
    std::vector<FFElem> out;
    out.reserve(size_);
    for (ElemId a = 0; a < size_; ++a) out.push_back(element(a));
    return out;
}

ElemId FieldCtx::add(ElemId a, ElemId b) const {
    if (p_ == 2) return a ^ b;
    ElemId out = 0;
    for (unsigned t = 0; t < degree(); ++t) {
        const ElemId s = a % p_ + b % p_;
        out += (s >= p_ ? s - p_ : s) * place_[t];
        a /= p_;
        b /= p_;
    }
    return out;
}

ElemId FieldCtx::neg(ElemId a) const {
    if (p_ == 2) return a;
    ElemId out = 0;
    for (unsigned t = 0; t < degree(); ++t) {
        const ElemId c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * place_[t];
        a /= p_;
    }
    return out;
}

ElemId FieldCtx::sub(ElemId a, ElemId b) const { return add(a, neg(b)); }

ElemId FieldCtx::mul(ElemId a, ElemId b) const {
    const unsigned n = degree();
    std::array<std::uint64_t, kMaxDigits> da{}, db{};
    std::array<std::uint64_t, 2 * kMaxDigits> prod{};
    decode(a, da.data());
    decode(b, db.data());
    for (unsigned i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) prod[i + j] += da[i] * db[j];
    }
    for (unsigned i = 0; i + 1 < 2 * n; ++i) prod[i] %= p_;
    // reduce by the monic modulus from the top
    for (unsigned deg = 2 * n - 2; deg >= n; --deg) {
        const std::uint64_t c = prod[deg];
        if (c != 0) {
            const unsigned shift = deg - n;
            for (unsigned i = 0; i < n; ++i)
                prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_.coeffs[i]) % p_;
        }
        prod[deg] = 0;
    }
    return encode(prod.data());
}

ElemId FieldCtx::pow(ElemId a, std::uint64_t exponent) const {
    ElemId result = 1, base = a;
    while (exponent) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

ElemId FieldCtx::pow(ElemId a, const mpz_class& exponent) const {
    if (exponent < 0) throw Error(ErrorCode::IndexOutOfRange, "negative exponent");
    if (exponent == 0) return 1;
    if (a == 0) return 0;
    // multiplicative group has order size - 1
    mpz_class reduced = exponent % (size_ - 1);
    if (reduced == 0) return 1;
    return pow(a, static_cast<std::uint64_t>(reduced.get_ui()));
}

ElemId FieldCtx::inv(ElemId a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
    return pow(a, std::uint64_t{size_} - 2);
}

}  // namespace sfp
