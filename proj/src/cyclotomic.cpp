#include "verlinde/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace verlinde {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_100;

std::vector<long> compute_cyclotomic(int n)
{
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<long> num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const auto& den = cyclotomic_polynomial(d);
        const size_t dd = den.size() - 1;
        std::vector<long> quot(num.size() - dd, 0);
        for (size_t i = num.size() - 1; i + 1 > dd; --i) {
            const long c = num[i];
            quot[i - dd] = c;
            if (c != 0)
                for (size_t j = 0; j <= dd; ++j)
                    num[i - dd + j] -= c * den[j];
            if (i == dd)
                break;
        }
        num = std::move(quot);
    }
    return num;
}

std::string decimal_string(const Decimal& x, int digits)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    std::string s = os.str();
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

} // namespace

const std::vector<long>& cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw PreconditionError("cyclotomic polynomial of non-positive index");
    static std::mutex mutex;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::vector<long> poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

std::vector<Rational> CycScalar::reduce(int n, std::vector<Rational> poly)
{
    const auto& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0)
            continue;
        const Rational c = poly[i];
        for (size_t j = 0; j < deg; ++j)
            if (phi[j] != 0)
                poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg, Rational(0));
    return poly;
}

CycScalar CycScalar::root_of_unity(int n, long k)
{
    if (n < 1)
        throw PreconditionError("root of unity of non-positive order");
    long e = k % n;
    if (e < 0)
        e += n;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[static_cast<size_t>(e)] = 1;
    return CycScalar(n, reduce(n, std::move(poly)));
}

CycScalar CycScalar::from_powers(int n, const std::vector<Rational>& coeffs)
{
    std::vector<Rational> poly(static_cast<size_t>(n), Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        poly[i % static_cast<size_t>(n)] += coeffs[i];
    return CycScalar(n, reduce(n, std::move(poly)));
}

bool CycScalar::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool CycScalar::is_rational() const
{
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            return false;
    return true;
}

Rational CycScalar::rational_value() const
{
    if (!is_rational())
        throw PreconditionError("cyclotomic value " + to_string() + " is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycScalar CycScalar::promoted(int m) const
{
    if (m == conductor_)
        return *this;
    if (m % conductor_ != 0)
        throw PreconditionError("conductor promotion to a non-multiple");
    const size_t step = static_cast<size_t>(m / conductor_);
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[i * step] = coeffs_[i];
    return CycScalar(m, reduce(m, std::move(poly)));
}

CycScalar& CycScalar::operator+=(const CycScalar& o)
{
    if (o.conductor_ != conductor_) {
        const int m = std::lcm(conductor_, o.conductor_);
        *this = promoted(m);
        return *this += o.promoted(m);
    }
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar CycScalar::operator-() const
{
    CycScalar r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o)
{
    if (o.conductor_ != conductor_) {
        const int m = std::lcm(conductor_, o.conductor_);
        *this = promoted(m);
        return *this *= o.promoted(m);
    }
    if (conductor_ <= 2) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> poly(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (sgn(o.coeffs_[j]) != 0)
                poly[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = reduce(conductor_, std::move(poly));
    return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b)
{
    if (a.conductor_ == b.conductor_)
        return a.coeffs_ == b.coeffs_;
    const int m = std::lcm(a.conductor_, b.conductor_);
    return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

CycScalar CycScalar::conjugate() const
{
    const size_t n = static_cast<size_t>(conductor_);
    std::vector<Rational> poly(n, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[(n - i) % n] += coeffs_[i];
    return CycScalar(conductor_, reduce(conductor_, std::move(poly)));
}

CycScalar CycScalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero in Q(z_" + std::to_string(conductor_) + ")");
    const size_t deg = coeffs_.size();
    // Column j of the multiplication-by-x matrix is x * z^j; solve M y = e_0.
    std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
    for (size_t j = 0; j < deg; ++j) {
        std::vector<Rational> poly(deg + j, Rational(0));
        for (size_t i = 0; i < deg; ++i)
            poly[i + j] = coeffs_[i];
        const auto col = reduce(conductor_, std::move(poly));
        for (size_t i = 0; i < deg; ++i)
            m[i][j] = col[i];
    }
    m[0][deg] = 1;
    for (size_t c = 0; c < deg; ++c) {
        size_t p = c;
        while (p < deg && sgn(m[p][c]) == 0)
            ++p;
        if (p == deg)
            throw ConsistencyError("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[p], m[c]);
        const Rational piv = m[c][c];
        for (size_t k = c; k <= deg; ++k)
            m[c][k] /= piv;
        for (size_t r = 0; r < deg; ++r) {
            if (r == c || sgn(m[r][c]) == 0)
                continue;
            const Rational f = m[r][c];
            for (size_t k = c; k <= deg; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> y(deg);
    for (size_t i = 0; i < deg; ++i)
        y[i] = m[i][deg];
    return CycScalar(conductor_, std::move(y));
}

CycScalar CycScalar::pow(long e) const
{
    CycScalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CycScalar result(1);
    while (k != 0) {
        if (k & 1UL)
            result *= base;
        k >>= 1;
        if (k != 0)
            base *= base;
    }
    return result;
}

std::string CycScalar::to_string() const
{
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += coeffs_[i].get_str();
        if (i > 0)
            out += "*z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

CycScalar CycScalar::parse(const std::string& text, int conductor)
{
    std::vector<Rational> poly(static_cast<size_t>(conductor), Rational(0));
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(" + ", pos);
        const std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        const size_t star = term.find("*z^");
        if (star == std::string::npos) {
            poly[0] += parse_rational(term);
        } else {
            const long e = std::stol(term.substr(star + 3));
            if (e < 0 || e >= conductor)
                throw PreconditionError("exponent out of range in '" + text + "'");
            poly[static_cast<size_t>(e)] += parse_rational(term.substr(0, star));
        }
        if (end == std::string::npos)
            break;
        pos = end + 3;
    }
    return CycScalar(conductor, reduce(conductor, std::move(poly)));
}

ComplexDecimal CycScalar::to_complex(int digits) const
{
    if (digits < 1)
        throw PreconditionError("to_complex requires at least one digit");
    const Decimal two_pi = 2 * boost::math::constants::pi<Decimal>();
    Decimal re = 0, im = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        const Decimal c = Decimal(coeffs_[i].get_num().get_str()) / Decimal(coeffs_[i].get_den().get_str());
        const Decimal angle = two_pi * static_cast<long>(i) / conductor_;
        re += c * cos(angle);
        im += c * sin(angle);
    }
    return {decimal_string(re, digits), decimal_string(im, digits)};
}

std::pair<double, double> CycScalar::to_complex_double() const
{
    double re = 0, im = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const double c = coeffs_[i].get_d();
        const double angle = 2 * M_PI * static_cast<double>(i) / conductor_;
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {re, im};
}

} // namespace verlinde
