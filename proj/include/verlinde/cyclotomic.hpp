#pragma once

#include <string>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

/// Coefficients (constant term first) of the N-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Euler's totient, the degree of the N-th cyclotomic polynomial.
int euler_phi(int n);

/// Decimal rendering of a complex value.
struct ComplexDecimal {
    std::string re;
    std::string im;
};

/// Element of the cyclotomic field Q(z), z = exp(2 pi i / N).
///
/// Stored as sum c_i z^i, i < phi(N), reduced modulo the N-th cyclotomic
/// polynomial, so that equal field elements at the same conductor have equal
/// coefficient vectors. Arithmetic between different conductors promotes both
/// operands to the lcm of the conductors. Rationals live at conductor 1.
class CycScalar {
public:
    CycScalar() : conductor_(1), coeffs_{Rational(0)} {}
    CycScalar(const Rational& q) : conductor_(1), coeffs_{q} {}
    CycScalar(long n) : conductor_(1), coeffs_{Rational(n)} {}

    /// z_N^k for any integer k.
    static CycScalar root_of_unity(int n, long k);

    /// Builds sum coeffs[i] z_N^i for an arbitrary-length coefficient list.
    static CycScalar from_powers(int n, const std::vector<Rational>& coeffs);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws PreconditionError when the value is not rational.
    Rational rational_value() const;

    /// The same element viewed in Q(z_M); M must be a multiple of the conductor.
    CycScalar promoted(int m) const;

    CycScalar conjugate() const;
    CycScalar inverse() const;
    CycScalar pow(long e) const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    CycScalar operator-() const;

    friend bool operator==(const CycScalar& a, const CycScalar& b);

    /// "a0 + a1*z^1 + ..." with z = z_N; zero renders as "0".
    std::string to_string() const;
    /// Inverse of to_string for a known conductor.
    static CycScalar parse(const std::string& text, int conductor);

    /// Value under z -> exp(2 pi i / N), rendered in fixed notation with the
    /// given number of fractional digits. Display only.
    ComplexDecimal to_complex(int digits) const;
    /// Double-precision value; display and cross-checks only.
    std::pair<double, double> to_complex_double() const;

private:
    CycScalar(int n, std::vector<Rational> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}
    static std::vector<Rational> reduce(int n, std::vector<Rational> poly);

    int conductor_;
    std::vector<Rational> coeffs_;
};

} // namespace verlinde
