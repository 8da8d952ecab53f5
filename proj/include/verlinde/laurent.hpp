#pragma once

#include <map>
#include <string>

#include "verlinde/series.hpp"

namespace verlinde {

/// Finitely supported sum f_n u^n, n in Z. Zero coefficients are never stored.
template <class R>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const R& c) { add_term(0, c); }

    static LaurentPoly monomial(int n, const R& c)
    {
        LaurentPoly p;
        p.add_term(n, c);
        return p;
    }

    const std::map<int, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    R coefficient(int n, const R& zero = R{}) const
    {
        auto it = terms_.find(n);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(int n, const R& c)
    {
        if (verlinde::is_zero(c))
            return;
        auto [it, inserted] = terms_.emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (verlinde::is_zero(it->second))
                terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [n, c] : o.terms_)
            add_term(n, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [n, c] : o.terms_)
            add_term(n, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        for (const auto& [n, c] : a.terms_)
            for (const auto& [m, d] : b.terms_)
                r.add_term(n + m, c * d);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// u -> u^{-1}.
    LaurentPoly reflected() const
    {
        LaurentPoly r;
        for (const auto& [n, c] : terms_)
            r.add_term(-n, c);
        return r;
    }

    /// sum n^k f_n u^n: the k-fold u d/du.
    LaurentPoly weighted(int k) const
    {
        LaurentPoly r;
        for (const auto& [n, c] : terms_) {
            long w = 1;
            for (int i = 0; i < k; ++i)
                w *= n;
            r.add_term(n, scale(c, Rational(w)));
        }
        return r;
    }

    template <class F>
    auto map_coefficients(F&& fn) const
    {
        using T = decltype(fn(std::declval<const R&>()));
        LaurentPoly<T> r;
        for (const auto& [n, c] : terms_)
            r.add_term(n, fn(c));
        return r;
    }

private:
    std::map<int, R> terms_;
};

/// f-dot: sum n f_n u^n.
template <class R>
LaurentPoly<R> dot(const LaurentPoly<R>& f) { return f.weighted(1); }
/// f-double-dot: sum n^2 f_n u^n.
template <class R>
LaurentPoly<R> ddot(const LaurentPoly<R>& f) { return f.weighted(2); }

using RatLaurent = LaurentPoly<Rational>;

/// Text form "{-1:1,1:1}" (exponent:coefficient pairs).
std::string to_string(const RatLaurent& f);
RatLaurent parse_laurent(const std::string& text);

} // namespace verlinde
