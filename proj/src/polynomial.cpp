/*
 * Copyright 2026 The Cubix Authors
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
 */

#include "cubix/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "cubix/error.hpp"

namespace cubix {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) fail(Errc::DimensionMismatch, "variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponent exps, const Rational& c) {
    require_dim(exps.size(), nvars, "monomial exponent length");
    Polynomial p(nvars);
    p.add_term(exps, c);
    return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto k : e) s += k;
        if (s != d) return false;
    }
    return true;
}

Rational Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    require_dim(e.size(), nvars_, "term exponent length");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational monomial_value(const Exponent& e, std::span<const Rational> x) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) v *= x[i];
        if (sgn(v) == 0) return v;
    }
    return v;
}

Rational Polynomial::eval(std::span<const Rational> x) const {
    require_dim(x.size(), nvars_, "poly_eval point");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = monomial_value(e, x);
        if (sgn(m) != 0) acc += c * m;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars_) fail(Errc::DimensionMismatch, "derivative variable out of range");
    Polynomial d(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        d.add_term(f, c * Rational(e[var]));
    }
    return d;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
    require_dim(values.size(), nvars_, "substitution arity");
    std::size_t target = values.empty() ? 0 : values.front().nvars();
    for (const auto& v : values) require_dim(v.nvars(), target, "substituted ring");
    // powers[i][k] = values[i]^k, built on demand
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * values[i]);
        return cache[k];
    };
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i) {
            if (e[i]) term = term * power(i, e[i]);
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::shifted(std::size_t new_nvars, std::size_t offset) const {
    if (offset + nvars_ > new_nvars) fail(Errc::DimensionMismatch, "shift exceeds target ring");
    Polynomial out(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f(new_nvars, 0);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        out.add_term(f, c);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational Polynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Polynomial::divide_by_variable(std::size_t var, Polynomial& out) const {
    out = Polynomial(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) return false;
        Exponent f = e;
        f[var] -= 1;
        out.add_term(f, c);
    }
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    require_dim(o.nvars_, nvars_, "polynomial add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    require_dim(o.nvars_, nvars_, "polynomial sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_dim(b.nvars_, a.nvars_, "polynomial mul");
    Polynomial r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool has_var = std::any_of(e.begin(), e.end(), [](auto k) { return k > 0; });
        out += sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!has_var) {
            out += cubix::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += cubix::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

std::vector<Exponent> homogeneous_monomials(std::size_t nvars, unsigned degree) {
    std::vector<Exponent> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent e(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (int k = static_cast<int>(left); k >= 0; --k) {
            e[i] = static_cast<std::uint16_t>(k);
            rec(i + 1, left - static_cast<unsigned>(k));
        }
        e[i] = 0;
    };
    rec(0, degree);
    return out;
}

}  // namespace cubix
