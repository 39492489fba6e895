#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "core.hpp"

namespace cyclespectra {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in two variables a, b with arbitrary-precision integer coefficients.
///
/// Terms are keyed by exponent pair (i, j) for a^i b^j; zero coefficients are never
/// stored, so the zero polynomial is the empty map.
class BivarPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, BigInt>;

    static constexpr int kMaxDegree = 12;

    enum class Var { A, B };

    BivarPoly() = default;
    BivarPoly(long long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[{0, 0}] = c;
    }

    static BivarPoly a() { return monomial(1, 1, 0); }
    static BivarPoly b() { return monomial(1, 0, 1); }

    static BivarPoly monomial(const BigInt& c, int i, int j) {
        BivarPoly p;
        p.add_term({i, j}, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    int degree() const noexcept {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }

    BigInt coefficient(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BivarPoly& operator+=(const BivarPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }

    friend BivarPoly operator+(BivarPoly p, const BivarPoly& q) { return p += q; }
    friend BivarPoly operator-(BivarPoly p, const BivarPoly& q) { return p -= q; }
    friend BivarPoly operator-(const BivarPoly& p) { return BivarPoly{} - p; }

    friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r;
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_)
                r.add_term({ep.first + eq.first, ep.second + eq.second}, cp * cq);
        return r;
    }
    BivarPoly& operator*=(const BivarPoly& q) { return *this = *this * q; }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    BivarPoly pow(unsigned n) const {
        BivarPoly r(1);
        for (unsigned k = 0; k < n; ++k) r *= *this;
        return r;
    }

    /// Replaces one variable by a polynomial in (a, b).
    BivarPoly substitute(Var v, const BivarPoly& replacement) const {
        BivarPoly r;
        for (const auto& [e, c] : terms_) {
            const int k = v == Var::A ? e.first : e.second;
            const BivarPoly rest = v == Var::A ? monomial(c, 0, e.second) : monomial(c, e.first, 0);
            r += rest * replacement.pow(static_cast<unsigned>(k));
        }
        return r;
    }

    Rational eval(const Rational& av, const Rational& bv) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) sum += Rational(c) * ipow(av, e.first) * ipow(bv, e.second);
        return sum;
    }

    double eval(double av, double bv) const {
        double sum = 0.0;
        for (const auto& [e, c] : terms_)
            sum += c.convert_to<double>() * std::pow(av, e.first) * std::pow(bv, e.second);
        return sum;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const bool bare = e.first == 0 && e.second == 0;
            if (mag != 1 || bare) os << mag;
            auto var = [&](char name, int k) {
                if (k == 0) return;
                os << name;
                if (k > 1) os << '^' << k;
            };
            var('a', e.first);
            var('b', e.second);
        }
        return os.str();
    }

private:
    static Rational ipow(const Rational& x, int k) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= x;
        return r;
    }

    void add_term(Exponents e, const BigInt& c) {
        if (c == 0) return;
        if (e.first + e.second > kMaxDegree)
            throw Error(ErrorCode::DegreeBound,
                        "polynomial degree exceeds " + std::to_string(kMaxDegree));
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.str(); }

/// A complex polynomial in (a, b) kept as real and imaginary parts over Z[a, b].
struct ComplexPoly {
    BivarPoly re;
    BivarPoly im;

    friend ComplexPoly operator*(const ComplexPoly& p, const ComplexPoly& q) {
        return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
    }
    friend ComplexPoly operator-(const ComplexPoly& p, const BivarPoly& c) { return {p.re - c, p.im}; }
    ComplexPoly conj() const { return {re, -im}; }
    ComplexPoly pow(unsigned n) const {
        ComplexPoly r{BivarPoly(1), BivarPoly()};
        for (unsigned k = 0; k < n; ++k) r = r * *this;
        return r;
    }
};

}  // namespace cyclespectra
