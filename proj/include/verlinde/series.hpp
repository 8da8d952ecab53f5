#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "verlinde/ring.hpp"

namespace verlinde {

inline CycScalar scale(const CycScalar& x, const CycScalar& s) { return x * s; }
inline CycScalar scale(const CycScalar& x, const Rational& s) { return x * CycScalar(s); }
inline Rational scale(const Rational& x, const Rational& s) { return x * s; }

template <class R>
class TSeries;
template <class R>
bool is_zero(const TSeries<R>& s);
template <class R>
TSeries<R> unit_inverse(const TSeries<R>& s);
template <class R>
TSeries<R> exp_constant(const TSeries<R>& s);
template <class R>
TSeries<R> log_constant(const TSeries<R>& s);
template <class R, class B>
TSeries<R> like(const TSeries<R>& proto, const B& value);
template <class R>
CycScalar scalar_part(const TSeries<R>& s);
template <class R>
int total_order(const TSeries<R>& s);
template <class R, class B>
TSeries<R> scale(TSeries<R> s, const B& factor);

/// Truncated power series c_0 + c_1 t + ... + c_K t^K over the ring R.
///
/// Binary operations between series of different orders truncate to the
/// smaller order; the result's order() records it. R may itself be a TSeries,
/// which is how several independent deformation parameters are carried.
template <class R>
class TSeries {
public:
    TSeries() : coeffs_(1) {}
    explicit TSeries(int order, const R& zero = R{}) : coeffs_(static_cast<size_t>(checked(order)) + 1, zero) {}
    explicit TSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw PreconditionError("series needs at least one coefficient");
    }

    static TSeries constant(const R& c, int order)
    {
        TSeries s(order, like(c, Rational(0)));
        s.coeffs_[0] = c;
        return s;
    }

    /// The parameter t itself, with coefficients shaped like `proto`.
    static TSeries variable(int order, const R& proto = R{})
    {
        TSeries s(order, like(proto, Rational(0)));
        if (order >= 1)
            s.coeffs_[1] = like(proto, Rational(1));
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    R& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!verlinde::is_zero(c))
                return false;
        return true;
    }

    TSeries truncated(int order) const
    {
        if (order >= this->order())
            return *this;
        return TSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TSeries& operator+=(const TSeries& o)
    {
        shrink_to(o.order());
        for (int k = 0; k <= order(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TSeries& operator-=(const TSeries& o)
    {
        shrink_to(o.order());
        for (int k = 0; k <= order(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    TSeries& operator*=(const TSeries& o)
    {
        *this = *this * o;
        return *this;
    }

    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b)
    {
        const int k = std::min(a.order(), b.order());
        TSeries r(k, like(a.coeffs_[0], Rational(0)));
        for (int i = 0; i <= k; ++i) {
            if (verlinde::is_zero(a.coeffs_[i]))
                continue;
            for (int j = 0; i + j <= k; ++j)
                if (!verlinde::is_zero(b.coeffs_[j]))
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend TSeries operator*(TSeries a, const R& s)
    {
        for (auto& c : a.coeffs_)
            c *= s;
        return a;
    }
    friend TSeries operator*(const R& s, TSeries a) { return std::move(a) * s; }
    TSeries operator-() const
    {
        TSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b)
    {
        const int k = std::min(a.order(), b.order());
        for (int i = 0; i <= k; ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i]))
                return false;
        return true;
    }

    /// Multiplicative inverse; the constant term must be a unit.
    TSeries inverse() const
    {
        if (verlinde::is_zero(coeffs_[0]))
            throw DivisionByZero("inverse of a series with zero constant term");
        const R c0inv = unit_inverse(coeffs_[0]);
        TSeries r(order(), like(coeffs_[0], Rational(0)));
        r.coeffs_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            R acc = like(coeffs_[0], Rational(0));
            for (int k = 1; k <= n; ++k)
                if (!verlinde::is_zero(coeffs_[k]))
                    acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = -(acc * c0inv);
        }
        return r;
    }

    /// exp(S). Over base scalars the constant term must vanish.
    TSeries exp() const
    {
        TSeries e(order(), like(coeffs_[0], Rational(0)));
        e.coeffs_[0] = exp_constant(coeffs_[0]);
        for (int n = 1; n <= order(); ++n) {
            R acc = like(coeffs_[0], Rational(0));
            for (int k = 1; k <= n; ++k)
                if (!verlinde::is_zero(coeffs_[k]))
                    acc += scale(coeffs_[k] * e.coeffs_[n - k], Rational(k));
            e.coeffs_[n] = scale(acc, Rational(1, n));
        }
        return e;
    }

    /// log(S). Over base scalars the constant term must be 1.
    TSeries log() const
    {
        const R l0 = log_constant(coeffs_[0]);
        if (order() == 0)
            return constant(l0, 0);
        TSeries q = derivative() * inverse().truncated(order() - 1);
        TSeries l(order(), like(coeffs_[0], Rational(0)));
        l.coeffs_[0] = l0;
        for (int n = 1; n <= order(); ++n)
            l.coeffs_[n] = scale(q.coeffs_[n - 1], Rational(1, n));
        return l;
    }

    TSeries pow_int(long e) const
    {
        if (e < 0)
            return inverse().pow_int(-e);
        TSeries base = *this;
        TSeries result = constant(like(coeffs_[0], Rational(1)), order());
        while (e != 0) {
            if (e & 1L)
                result = result * base;
            e >>= 1;
            if (e != 0)
                base = base * base;
        }
        return result;
    }

    /// d/dt, of order K-1 (order 0 stays at order 0 with a zero coefficient).
    TSeries derivative() const
    {
        if (order() == 0)
            return TSeries(0, like(coeffs_[0], Rational(0)));
        TSeries d(order() - 1, like(coeffs_[0], Rational(0)));
        for (int k = 1; k <= order(); ++k)
            d.coeffs_[k - 1] = scale(coeffs_[k], Rational(k));
        return d;
    }

    /// S(T(t)); T must have vanishing constant term.
    TSeries compose(const TSeries& inner) const
    {
        if (!verlinde::is_zero(inner.coeffs_[0]))
            throw PreconditionError("composition with a series of nonzero constant term");
        const int k = std::min(order(), inner.order());
        TSeries r = constant(coeffs_[k], k);
        for (int i = k - 1; i >= 0; --i)
            r = r * inner.truncated(k) + constant(coeffs_[i], k);
        return r;
    }

private:
    static int checked(int order)
    {
        if (order < 0)
            throw PreconditionError("negative truncation order");
        return order;
    }
    void shrink_to(int k)
    {
        if (k < order())
            coeffs_.resize(static_cast<size_t>(k) + 1);
    }

    std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const TSeries<R>& s) { return s.is_zero(); }
template <class R>
TSeries<R> unit_inverse(const TSeries<R>& s) { return s.inverse(); }
template <class R>
TSeries<R> exp_constant(const TSeries<R>& s) { return s.exp(); }
template <class R>
TSeries<R> log_constant(const TSeries<R>& s) { return s.log(); }
template <class R, class B>
TSeries<R> like(const TSeries<R>& proto, const B& value)
{
    return TSeries<R>::constant(like(proto[0], value), proto.order());
}
template <class R>
CycScalar scalar_part(const TSeries<R>& s) { return scalar_part(s[0]); }
template <class R>
int total_order(const TSeries<R>& s) { return s.order() + total_order(s[0]); }
template <class R, class B>
TSeries<R> scale(TSeries<R> s, const B& factor)
{
    TSeries<R> r = s;
    for (int k = 0; k <= r.order(); ++k)
        r[k] = scale(s[k], factor);
    return r;
}

using RatSeries = TSeries<Rational>;
using CycSeries = TSeries<CycScalar>;
/// Two deformation parameters: outer t_1, inner t_2.
using CycSeries2 = TSeries<CycSeries>;

/// Solves F(x) = 0 order by order starting from x0 with F(x0) vanishing at
/// the origin. Each sweep solves the next coefficient linearly against the
/// scalar derivative dF(x0)|_{t=0}; the result is re-substituted and must give
/// the zero series through the working order.
template <class S>
S newton_solve(const std::function<S(const S&)>& f, const std::function<S(const S&)>& df, const S& x0)
{
    const CycScalar slope = scalar_part(df(x0));
    if (slope.is_zero())
        throw SingularPoint("singular derivative at the base point of a series solve");
    if (!scalar_part(f(x0)).is_zero())
        throw PreconditionError("base point of a series solve is not a root at t = 0");
    const CycScalar slope_inv = slope.inverse();
    S x = x0;
    const int sweeps = total_order(x0) + 1;
    for (int i = 0; i < sweeps; ++i) {
        const S residual = f(x);
        if (residual.is_zero())
            return x;
        x -= scale(residual, slope_inv);
    }
    if (!f(x).is_zero())
        throw ConsistencyError("series solve left a nonzero residual");
    return x;
}

} // namespace verlinde
