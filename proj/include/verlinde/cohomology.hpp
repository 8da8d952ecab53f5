#pragma once

// Cohomology of Sigma x J_d x BT with the universal-bundle classes.
//
// Generators: omega (Sigma volume class), alpha_i, beta_i (H^1(Sigma)) and
// a_i, b_i (H^1(J)), i = 1..g. The Sigma factor of a monomial is one of
// {1, alpha_i, beta_i, omega} with alpha_i beta_i = omega = -beta_i alpha_i;
// the J factor is a subset of the 2g odd generators, kept in the order
// a_1..a_g, b_1..b_g. Coefficients are Laurent in u and in u^d, polynomial in
// the degree symbol d and truncated-polynomial in t.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "verlinde/laurent.hpp"

namespace verlinde {

/// u^u * (u^d)^ud * d^d * t^t.
struct CoeffKey {
    int u = 0;
    int ud = 0;
    int d = 0;
    int t = 0;
    auto operator<=>(const CoeffKey&) const = default;
};

class Coeff {
public:
    /// Truncation order meaning "no truncation".
    static constexpr int kExact = 1 << 20;

    Coeff() = default;
    Coeff(const Rational& c) { add(CoeffKey{}, c); }
    Coeff(long c) : Coeff(Rational(c)) {}

    static Coeff monomial(CoeffKey key, const Rational& c, int t_order = kExact);
    static Coeff u_power(int a) { return monomial({a, 0, 0, 0}, 1); }
    static Coeff d_symbol() { return monomial({0, 0, 1, 0}, 1); }
    static Coeff t_symbol(int t_order) { return monomial({0, 0, 0, 1}, 1, t_order); }
    static Coeff laurent(const RatLaurent& f);

    const std::map<CoeffKey, Rational>& terms() const { return terms_; }
    int t_order() const { return t_order_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const CoeffKey& key, const Rational& c);

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    Coeff operator-() const;
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

    /// d -> value (both in d^m and in u^{ud d}).
    Coeff substitute_d(long value) const;
    /// u -> u^{-1}.
    Coeff dual() const;
    /// Terms with t-power 0 and no d, as a Laurent polynomial in u; throws if
    /// anything else is present.
    RatLaurent to_laurent() const;
    /// The Laurent polynomial multiplying (u^d)^ud d^dpow t^tpow.
    RatLaurent laurent_part(int ud, int dpow, int tpow) const;
    int max_d_power() const;

    std::string to_string() const;

private:
    std::map<CoeffKey, Rational> terms_;
    int t_order_ = kExact;
};

/// Sigma part code: 0 = 1, 1..g = alpha_i, g+1..2g = beta_i, 2g+1 = omega.
struct CohoMonomial {
    int sigma = 0;
    std::uint32_t jac = 0;
    auto operator<=>(const CohoMonomial&) const = default;
};

class CohoElement {
public:
    static constexpr int kMaxGenus = 12;

    explicit CohoElement(int genus);
    CohoElement(int genus, const Coeff& c);

    static CohoElement omega(int genus);
    static CohoElement alpha(int genus, int i);
    static CohoElement beta(int genus, int i);
    static CohoElement a(int genus, int i);
    static CohoElement b(int genus, int i);
    /// eta = sum a_i b_i.
    static CohoElement eta(int genus);
    /// psi = sum alpha_i a_i + beta_i b_i.
    static CohoElement psi(int genus);

    int genus() const { return genus_; }
    const std::map<CohoMonomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_sigma() const;
    Coeff component(const CohoMonomial& m) const;
    int degree(const CohoMonomial& m) const;

    void add(const CohoMonomial& m, const Coeff& c);

    CohoElement& operator+=(const CohoElement& o);
    CohoElement& operator-=(const CohoElement& o);
    friend CohoElement operator+(CohoElement x, const CohoElement& y) { return x += y; }
    friend CohoElement operator-(CohoElement x, const CohoElement& y) { return x -= y; }
    friend CohoElement operator*(const CohoElement& x, const CohoElement& y);
    friend CohoElement operator*(const CohoElement& x, const Coeff& c);
    friend CohoElement operator*(const Coeff& c, const CohoElement& x) { return x * c; }
    CohoElement operator-() const;
    friend bool operator==(const CohoElement& x, const CohoElement& y);

    CohoElement pow(unsigned k) const;
    /// exp of a nilpotent element (no t-free scalar part).
    CohoElement exp() const;

    /// Chern character of the dual: u -> u^{-1}, degree-2k parts times (-1)^k.
    CohoElement dual() const;
    CohoElement substitute_d(long value) const;
    /// Coefficient substitution u -> u e^{sign eta} (u^d -> u^d e^{sign d eta}).
    CohoElement rescale_u(int sign) const;
    /// Pullback to {x} x J: every Sigma generator set to zero.
    CohoElement restrict_to_point() const;
    /// Part with u-exponent a (and no u^d), with the u^a factor removed.
    CohoElement u_component(int a) const;

    /// Sorted "monomial | coefficient-key | value" lines.
    std::string dump() const;

private:
    void check_same_genus(const CohoElement& o) const;

    int genus_;
    std::map<CohoMonomial, Coeff> terms_;
};

/// exp(c eta) = sum c^k eta^k / k!, built from powers of eta.
CohoElement exp_eta(int genus, const Coeff& c);
/// f(u e^{eta}) = sum f_n u^n e^{n eta}.
CohoElement at_u_exp_eta(int genus, const RatLaurent& f);

/// Coefficients c_0..c_g with x = sum c_k eta^k; throws ConsistencyError if x
/// does not lie in the subalgebra generated by eta.
std::vector<Coeff> eta_coefficients(const CohoElement& x);

/// Pushforward along Sigma: omega -> 1, every other Sigma class -> 0.
CohoElement integrate_sigma(const CohoElement& x);
/// Integral over J_d, oriented so that int prod(a_i b_i) = 1, i.e.
/// int e^{c eta} = c^g.
Coeff integrate_jacobian(const CohoElement& x);

/// td(Sigma) = 1 + (1 - g) omega.
CohoElement todd_sigma(int genus);

/// ch(P_d), from c_1 = eta + d omega + psi + lambda with e^lambda = u.
CohoElement poincare_chern_character(int genus);
/// ch(P_d^k).
CohoElement ch_power(int genus, int k);
/// ch of R pi_*(P^2 + P^-2)[1], the virtual normal complex.
CohoElement ch_normal(int genus);

/// K-theory Euler class of the conormal complex, in the factored form
/// sign * (u e^eta - u^-1 e^-eta)^weyl_power * L^(l0 + l1 d) * e^(c eta)
/// with L = u^2 e^{2 eta}.
struct EulerClass {
    int genus = 0;
    int sign = 1;
    int weyl_power = 0;
    long l0 = 0;
    long l1 = 0;
    Rational eta_rate;

    CohoElement rest() const;
    CohoElement rest_inverse() const;
    CohoElement full() const;
    /// (u - u^-1)^weyl_power at a point; SingularPoint at u = +-1.
    CycScalar weyl_factor_at(const CycScalar& u) const;
};

/// Derived from ch_normal by the line-bundle factors and the logarithmic
/// derivative of the eta-linear terms; checked against the closed form.
EulerClass virtual_normal_euler(int genus);
/// (-1)^{g-1} (u e^eta - u^-1 e^-eta)^{2g-2} (u e^eta)^{4d} e^{-4 eta}.
CohoElement euler_closed_form(int genus);

/// ch of the determinant line of a K-class given by its Chern character
/// (Sigma-free, rank and c_1 linear in d).
CohoElement determinant_character(const CohoElement& ch);
/// ch(D^h), D = det^{-1} R pi_*(P + P^-1).
CohoElement ch_determinant(int genus, int h);
/// ch alpha(V) = int_Sigma ch(E^* V); checked against d f'(u e^eta) - eta f''(u e^eta).
CohoElement ch_index_bundle(int genus, const RatLaurent& f);
/// ch E_x^* V = f(u e^eta).
CohoElement ch_evaluation_bundle(int genus, const RatLaurent& f);

} // namespace verlinde
