#include "verlinde/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace verlinde {

namespace {

Rational signed_rational(int sign) { return Rational(sign); }

long integer_value(const Rational& q, const char* what)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw ConsistencyError(std::string(what) + " is not a machine integer");
    return q.get_num().get_si();
}

} // namespace

Coeff Coeff::monomial(CoeffKey key, const Rational& c, int t_order)
{
    Coeff r;
    r.t_order_ = t_order;
    r.add(key, c);
    return r;
}

Coeff Coeff::laurent(const RatLaurent& f)
{
    Coeff r;
    for (const auto& [n, c] : f.terms())
        r.add({n, 0, 0, 0}, c);
    return r;
}

void Coeff::add(const CoeffKey& key, const Rational& c)
{
    if (sgn(c) == 0 || key.t > t_order_)
        return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Coeff& Coeff::operator+=(const Coeff& o)
{
    if (o.t_order_ < t_order_) {
        t_order_ = o.t_order_;
        std::erase_if(terms_, [&](const auto& kv) { return kv.first.t > t_order_; });
    }
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff operator*(const Coeff& a, const Coeff& b)
{
    Coeff r;
    r.t_order_ = std::min(a.t_order_, b.t_order_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const CoeffKey k{ka.u + kb.u, ka.ud + kb.ud, ka.d + kb.d, ka.t + kb.t};
            if (k.t <= r.t_order_)
                r.add(k, ca * cb);
        }
    return r;
}

Coeff Coeff::operator-() const
{
    Coeff r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

Coeff Coeff::substitute_d(long value) const
{
    Coeff r;
    r.t_order_ = t_order_;
    for (const auto& [k, c] : terms_) {
        Rational w = c;
        for (int i = 0; i < k.d; ++i)
            w *= value;
        r.add({static_cast<int>(k.u + k.ud * value), 0, 0, k.t}, w);
    }
    return r;
}

Coeff Coeff::dual() const
{
    Coeff r;
    r.t_order_ = t_order_;
    for (const auto& [k, c] : terms_)
        r.add({-k.u, -k.ud, k.d, k.t}, c);
    return r;
}

RatLaurent Coeff::to_laurent() const
{
    RatLaurent f;
    for (const auto& [k, c] : terms_) {
        if (k.ud != 0 || k.d != 0 || k.t != 0)
            throw PreconditionError("coefficient is not a plain Laurent polynomial in u: " + to_string());
        f.add_term(k.u, c);
    }
    return f;
}

RatLaurent Coeff::laurent_part(int ud, int dpow, int tpow) const
{
    RatLaurent f;
    for (const auto& [k, c] : terms_)
        if (k.ud == ud && k.d == dpow && k.t == tpow)
            f.add_term(k.u, c);
    return f;
}

int Coeff::max_d_power() const
{
    int m = 0;
    for (const auto& [k, c] : terms_)
        m = std::max(m, k.d);
    return m;
}

std::string Coeff::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += verlinde::to_string(c);
        if (k.u != 0)
            out += "*u^" + std::to_string(k.u);
        if (k.ud != 0)
            out += "*u^(" + std::to_string(k.ud) + "d)";
        if (k.d != 0)
            out += "*d^" + std::to_string(k.d);
        if (k.t != 0)
            out += "*t^" + std::to_string(k.t);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

int sigma_degree(int g, int s)
{
    if (s == 0)
        return 0;
    return s == 2 * g + 1 ? 2 : 1;
}

// Product of Sigma parts: {sign, code}, sign 0 when the product vanishes.
std::pair<int, int> sigma_mul(int g, int s1, int s2)
{
    if (s1 == 0)
        return {1, s2};
    if (s2 == 0)
        return {1, s1};
    const int omega = 2 * g + 1;
    if (s1 == omega || s2 == omega)
        return {0, 0};
    if (s1 <= g && s2 == s1 + g)
        return {1, omega};
    if (s2 <= g && s1 == s2 + g)
        return {-1, omega};
    return {0, 0};
}

// Product of J parts in the canonical generator order.
int jac_sign(std::uint32_t j1, std::uint32_t j2)
{
    if (j1 & j2)
        return 0;
    int swaps = 0;
    for (std::uint32_t rest = j2; rest != 0; rest &= rest - 1) {
        const int q = std::countr_zero(rest);
        swaps += std::popcount(q + 1 < 32 ? j1 >> (q + 1) : 0u);
    }
    return swaps % 2 == 0 ? 1 : -1;
}

std::string monomial_name(int g, const CohoMonomial& m)
{
    std::vector<std::string> parts;
    if (m.sigma == 2 * g + 1)
        parts.push_back("omega");
    else if (m.sigma > g)
        parts.push_back("beta" + std::to_string(m.sigma - g));
    else if (m.sigma > 0)
        parts.push_back("alpha" + std::to_string(m.sigma));
    for (int bit = 0; bit < 2 * g; ++bit)
        if (m.jac & (1u << bit))
            parts.push_back((bit < g ? "a" : "b") + std::to_string(bit % g + 1));
    if (parts.empty())
        return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        out += "*" + parts[i];
    return out;
}

} // namespace

CohoElement::CohoElement(int genus) : genus_(genus)
{
    if (genus < 0 || genus > kMaxGenus)
        throw PreconditionError("genus out of range for the cohomology engine: " + std::to_string(genus));
}

CohoElement::CohoElement(int genus, const Coeff& c) : CohoElement(genus) { add({}, c); }

CohoElement CohoElement::omega(int genus)
{
    CohoElement x(genus);
    x.add({2 * genus + 1, 0}, 1);
    return x;
}

CohoElement CohoElement::alpha(int genus, int i)
{
    CohoElement x(genus);
    if (i < 1 || i > genus)
        throw PreconditionError("alpha index out of range");
    x.add({i, 0}, 1);
    return x;
}

CohoElement CohoElement::beta(int genus, int i)
{
    CohoElement x(genus);
    if (i < 1 || i > genus)
        throw PreconditionError("beta index out of range");
    x.add({genus + i, 0}, 1);
    return x;
}

CohoElement CohoElement::a(int genus, int i)
{
    CohoElement x(genus);
    if (i < 1 || i > genus)
        throw PreconditionError("a index out of range");
    x.add({0, 1u << (i - 1)}, 1);
    return x;
}

CohoElement CohoElement::b(int genus, int i)
{
    CohoElement x(genus);
    if (i < 1 || i > genus)
        throw PreconditionError("b index out of range");
    x.add({0, 1u << (genus + i - 1)}, 1);
    return x;
}

CohoElement CohoElement::eta(int genus)
{
    CohoElement x(genus);
    for (int i = 1; i <= genus; ++i)
        x += a(genus, i) * b(genus, i);
    return x;
}

CohoElement CohoElement::psi(int genus)
{
    CohoElement x(genus);
    for (int i = 1; i <= genus; ++i)
        x += alpha(genus, i) * a(genus, i) + beta(genus, i) * b(genus, i);
    return x;
}

bool CohoElement::has_sigma() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.sigma != 0; });
}

Coeff CohoElement::component(const CohoMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
}

int CohoElement::degree(const CohoMonomial& m) const
{
    return sigma_degree(genus_, m.sigma) + std::popcount(m.jac);
}

void CohoElement::add(const CohoMonomial& m, const Coeff& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void CohoElement::check_same_genus(const CohoElement& o) const
{
    if (o.genus_ != genus_)
        throw PreconditionError("cohomology elements of different genus");
}

CohoElement& CohoElement::operator+=(const CohoElement& o)
{
    check_same_genus(o);
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

CohoElement& CohoElement::operator-=(const CohoElement& o) { return *this += -o; }

CohoElement operator*(const CohoElement& x, const CohoElement& y)
{
    x.check_same_genus(y);
    const int g = x.genus_;
    CohoElement r(g);
    for (const auto& [m1, c1] : x.terms_)
        for (const auto& [m2, c2] : y.terms_) {
            const auto [s_sign, s] = sigma_mul(g, m1.sigma, m2.sigma);
            if (s_sign == 0)
                continue;
            const int j_sign = jac_sign(m1.jac, m2.jac);
            if (j_sign == 0)
                continue;
            int sign = s_sign * j_sign;
            if ((std::popcount(m1.jac) * sigma_degree(g, m2.sigma)) % 2 != 0)
                sign = -sign;
            const Coeff c = c1 * c2;
            r.add({s, m1.jac | m2.jac}, sign > 0 ? c : -c);
        }
    return r;
}

CohoElement operator*(const CohoElement& x, const Coeff& c)
{
    CohoElement r(x.genus_);
    for (const auto& [m, xc] : x.terms_)
        r.add(m, xc * c);
    return r;
}

CohoElement CohoElement::operator-() const
{
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_)
        r.add(m, -c);
    return r;
}

bool operator==(const CohoElement& x, const CohoElement& y)
{
    return x.genus_ == y.genus_ && x.terms_ == y.terms_;
}

CohoElement CohoElement::pow(unsigned k) const
{
    CohoElement r(genus_, Coeff(1));
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

CohoElement CohoElement::exp() const
{
    int t_order = 0;
    bool truncated = false;
    for (const auto& [m, c] : terms_)
        if (c.t_order() != Coeff::kExact) {
            t_order = std::max(t_order, c.t_order());
            truncated = true;
        }
    const Coeff scalar = component({});
    for (const auto& [k, c] : scalar.terms())
        if (k.t == 0 || !truncated)
            throw PreconditionError("exp of an element with a non-nilpotent scalar part");

    CohoElement result(genus_, Coeff(1));
    CohoElement term(genus_, Coeff(1));
    const int limit = 2 * genus_ + 3 + t_order;
    for (int k = 1; k <= limit; ++k) {
        term = term * *this * Coeff(make_rational(1, k));
        if (term.is_zero())
            return result;
        result += term;
    }
    throw ConsistencyError("exp series did not terminate");
}

CohoElement CohoElement::dual() const
{
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_) {
        const int deg = degree(m);
        if (deg % 2 != 0)
            throw PreconditionError("dual of an element with odd-degree components");
        r.add(m, (deg / 2) % 2 == 0 ? c.dual() : -c.dual());
    }
    return r;
}

CohoElement CohoElement::substitute_d(long value) const
{
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_)
        r.add(m, c.substitute_d(value));
    return r;
}

CohoElement CohoElement::rescale_u(int sign) const
{
    std::map<std::pair<int, int>, CohoElement> factors;
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_) {
        CohoElement base(genus_);
        base.add(m, Coeff(1));
        for (const auto& [k, q] : c.terms()) {
            auto it = factors.find({k.u, k.ud});
            if (it == factors.end()) {
                const Coeff rate = Coeff(sign * k.u) + Coeff::monomial({0, 0, 1, 0}, sign * k.ud);
                it = factors.emplace(std::pair{k.u, k.ud}, exp_eta(genus_, rate)).first;
            }
            r += base * Coeff::monomial(k, q, c.t_order()) * it->second;
        }
    }
    return r;
}

CohoElement CohoElement::restrict_to_point() const
{
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_)
        if (m.sigma == 0)
            r.add(m, c);
    return r;
}

CohoElement CohoElement::u_component(int a) const
{
    CohoElement r(genus_);
    for (const auto& [m, c] : terms_) {
        Coeff part;
        for (const auto& [k, q] : c.terms())
            if (k.u == a && k.ud == 0)
                part += Coeff::monomial({0, 0, k.d, k.t}, q, c.t_order());
        r.add(m, part);
    }
    return r;
}

std::string CohoElement::dump() const
{
    std::ostringstream out;
    for (const auto& [m, c] : terms_)
        for (const auto& [k, q] : c.terms())
            out << monomial_name(genus_, m) << " | u^" << k.u << " u^(" << k.ud << "d) d^" << k.d << " t^" << k.t
                << " | " << to_string(q) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

CohoElement exp_eta(int genus, const Coeff& c)
{
    const CohoElement eta = CohoElement::eta(genus);
    CohoElement result(genus, Coeff(1));
    CohoElement power(genus, Coeff(1));
    Coeff cpow(1);
    Rational fact = 1;
    for (int k = 1; k <= genus; ++k) {
        power = power * eta;
        cpow = cpow * c;
        fact *= k;
        result += power * (cpow * Coeff(1 / fact));
    }
    return result;
}

CohoElement at_u_exp_eta(int genus, const RatLaurent& f)
{
    CohoElement r(genus);
    for (const auto& [n, c] : f.terms())
        r += exp_eta(genus, Coeff(n)) * Coeff::monomial({n, 0, 0, 0}, c);
    return r;
}

std::vector<Coeff> eta_coefficients(const CohoElement& x)
{
    const int g = x.genus();
    const CohoElement eta = CohoElement::eta(g);
    std::vector<Coeff> coeffs;
    CohoElement power(g, Coeff(1));
    CohoElement rebuilt(g);
    for (int k = 0; k <= g; ++k) {
        std::uint32_t mask = 0;
        for (int i = 0; i < k; ++i)
            mask |= (1u << i) | (1u << (g + i));
        const Coeff norm = power.component({0, mask});
        const Rational n = norm.terms().begin()->second;
        const Coeff ck = x.component({0, mask}) * Coeff(1 / n);
        coeffs.push_back(ck);
        rebuilt += power * ck;
        power = power * eta;
    }
    if (!(rebuilt == x))
        throw ConsistencyError("element does not lie in the subalgebra generated by eta");
    return coeffs;
}

CohoElement integrate_sigma(const CohoElement& x)
{
    const int g = x.genus();
    CohoElement r(g);
    for (const auto& [m, c] : x.terms())
        if (m.sigma == 2 * g + 1)
            r.add({0, m.jac}, c);
    return r;
}

Coeff integrate_jacobian(const CohoElement& x)
{
    if (x.has_sigma())
        throw PreconditionError("Jacobian integral of an element with Sigma classes");
    const int g = x.genus();
    CohoElement orient(g, Coeff(1));
    for (int i = 1; i <= g; ++i)
        orient = orient * CohoElement::a(g, i) * CohoElement::b(g, i);
    const std::uint32_t top = g == 0 ? 0u : (g >= 16 ? ~0u : (1u << (2 * g)) - 1);
    const Coeff sign = orient.component({0, top});
    return x.component({0, top}) * sign;
}

CohoElement todd_sigma(int genus)
{
    return CohoElement(genus, Coeff(1)) + CohoElement::omega(genus) * Coeff(1 - genus);
}

CohoElement poincare_chern_character(int genus) { return ch_power(genus, 1); }

CohoElement ch_power(int genus, int k)
{
    const CohoElement c1 = CohoElement::eta(genus) + CohoElement::omega(genus) * Coeff::d_symbol()
        + CohoElement::psi(genus);
    return (c1 * Coeff(k)).exp() * Coeff::u_power(k);
}

CohoElement ch_normal(int genus)
{
    return -integrate_sigma((ch_power(genus, 2) + ch_power(genus, -2)) * todd_sigma(genus));
}

namespace {

std::pair<long, long> linear_in_d(const Coeff& c, const char* what)
{
    Rational c0, c1;
    for (const auto& [k, q] : c.terms()) {
        if (k.u != 0 || k.ud != 0 || k.t != 0 || k.d > 1)
            throw ConsistencyError(std::string(what) + " is not linear in d: " + c.to_string());
        (k.d == 0 ? c0 : c1) += q;
    }
    return {integer_value(c0, what), integer_value(c1, what)};
}

Rational rational_constant(const Coeff& c, const char* what)
{
    Rational v;
    for (const auto& [k, q] : c.terms()) {
        if (!(k == CoeffKey{}))
            throw ConsistencyError(std::string(what) + " is not a constant: " + c.to_string());
        v += q;
    }
    return v;
}

CohoElement weyl_class(int genus, int power)
{
    if (power < 0)
        throw PreconditionError("negative power of the Weyl class is not a polynomial");
    RatLaurent w;
    w.add_term(1, 1);
    w.add_term(-1, -1);
    return at_u_exp_eta(genus, w).pow(static_cast<unsigned>(power));
}

} // namespace

EulerClass virtual_normal_euler(int genus)
{
    const CohoElement nu_dual = ch_normal(genus).dual();
    const CohoElement plus = nu_dual.u_component(2), minus = nu_dual.u_component(-2);
    if (!(plus * Coeff::u_power(2) + minus * Coeff::u_power(-2) == nu_dual))
        throw ConsistencyError("conormal complex has weights other than u^2 and u^-2");

    // Each weight is (m + c eta) L with L = u^{+-2} e^{+-2 eta}.
    auto split = [&](const CohoElement& part, int a) {
        const std::vector<Coeff> cs = eta_coefficients(part * exp_eta(genus, Coeff(-a)));
        for (size_t k = 2; k < cs.size(); ++k)
            if (!cs[k].is_zero())
                throw ConsistencyError("conormal weight is not linear in eta");
        const auto m = linear_in_d(cs[0], "conormal multiplicity");
        const Rational c = cs.size() > 1 ? rational_constant(cs[1], "conormal eta rate") : Rational(0);
        return std::pair{m, c};
    };
    const auto [mp, cp] = split(plus, 2);
    const auto [mm, cm] = split(minus, -2);
    if (cp != cm)
        throw ConsistencyError("eta-linear conormal terms are not balanced between u^2 and u^-2");
    if (mp.second + mm.second != 0 || mp.second % 2 != 0)
        throw ConsistencyError("conormal multiplicities do not pair into a Weyl factor");

    // (1 - L)^a (1 - L^-1)^b = (-1)^a L^{(a+b)/2 - b} (L^{1/2} - L^{-1/2})^{a+b};
    // each c eta L term contributes exp(c d/dx log(1 - e^{x eta} L)), and the
    // two weights together give exp(c eta).
    EulerClass e;
    e.genus = genus;
    e.weyl_power = static_cast<int>(mp.first + mm.first);
    if (e.weyl_power % 2 != 0)
        throw ConsistencyError("odd Weyl power in the Euler class");
    e.sign = mp.first % 2 == 0 ? 1 : -1;
    e.l0 = e.weyl_power / 2 - mm.first;
    e.l1 = -mm.second;
    e.eta_rate = cp;
    if (genus >= 1 && !(e.full() == euler_closed_form(genus)))
        throw ConsistencyError("Euler class disagrees with its closed form");
    return e;
}

CohoElement EulerClass::rest() const
{
    const Coeff rate = Coeff(Rational(2 * l0) + eta_rate) + Coeff::monomial({0, 0, 1, 0}, 2 * l1);
    return exp_eta(genus, rate) * Coeff::monomial({static_cast<int>(2 * l0), static_cast<int>(2 * l1), 0, 0}, 1);
}

CohoElement EulerClass::rest_inverse() const
{
    const Coeff rate = Coeff(Rational(-2 * l0) - eta_rate) + Coeff::monomial({0, 0, 1, 0}, -2 * l1);
    return exp_eta(genus, rate)
        * Coeff::monomial({static_cast<int>(-2 * l0), static_cast<int>(-2 * l1), 0, 0}, 1);
}

CohoElement EulerClass::full() const
{
    return weyl_class(genus, weyl_power) * rest() * Coeff(sign);
}

CycScalar EulerClass::weyl_factor_at(const CycScalar& u) const
{
    if (u.is_zero())
        throw SingularPoint("Euler class evaluated at u = 0");
    const CycScalar w = u - u.inverse();
    if (w.is_zero() && weyl_power != 0)
        throw SingularPoint("Euler class is singular at u = +-1");
    return w.pow(weyl_power);
}

CohoElement euler_closed_form(int genus)
{
    if (genus < 1)
        throw PreconditionError("closed-form Euler class needs genus >= 1");
    const Coeff sign = signed_rational(genus % 2 == 1 ? 1 : -1);
    const CohoElement ue_4d = exp_eta(genus, Coeff::monomial({0, 0, 1, 0}, 4)) * Coeff::monomial({0, 4, 0, 0}, 1);
    return weyl_class(genus, 2 * genus - 2) * ue_4d * exp_eta(genus, Coeff(-4)) * sign;
}

CohoElement determinant_character(const CohoElement& ch)
{
    if (ch.has_sigma())
        throw PreconditionError("determinant of a class with Sigma components");
    const int g = ch.genus();
    Rational e0, e1;
    CohoElement c1(g);
    for (const auto& [m, c] : ch.terms()) {
        const int deg = ch.degree(m);
        if (deg == 0) {
            for (const auto& [k, q] : c.terms()) {
                if (k.ud != 0 || k.t != 0 || k.d > 1)
                    throw PreconditionError("rank of the class is not linear in d");
                (k.d == 0 ? e0 : e1) += q * k.u;
            }
        } else if (deg == 2) {
            for (const auto& [k, q] : c.terms()) {
                if (k.ud != 0)
                    throw PreconditionError("first Chern class with u^d weights");
                CohoElement piece(g);
                piece.add(m, Coeff::monomial({0, 0, k.d, k.t}, q, c.t_order()));
                c1 += piece;
            }
        }
    }
    const int u0 = static_cast<int>(integer_value(e0, "determinant weight"));
    const int u1 = static_cast<int>(integer_value(e1, "determinant weight"));
    return c1.exp() * Coeff::monomial({u0, u1, 0, 0}, 1);
}

CohoElement ch_determinant(int genus, int h)
{
    if (h < 0)
        throw PreconditionError("only non-negative powers of D are admissible");
    const CohoElement push = integrate_sigma((ch_power(genus, 1) + ch_power(genus, -1)) * todd_sigma(genus));
    return determinant_character(-push).pow(static_cast<unsigned>(h));
}

CohoElement ch_index_bundle(int genus, const RatLaurent& f)
{
    // td(Sigma) ch(K^{1/2}) = 1, so alpha(V) integrates ch(E^* V) alone.
    const CohoElement half_canonical = CohoElement(genus, Coeff(1)) + CohoElement::omega(genus) * Coeff(genus - 1);
    CohoElement ev(genus);
    for (const auto& [n, c] : f.terms())
        ev += ch_power(genus, n) * Coeff(c);
    const CohoElement result = integrate_sigma(ev * todd_sigma(genus) * half_canonical);
    const CohoElement closed = at_u_exp_eta(genus, dot(f)) * Coeff::d_symbol()
        - CohoElement::eta(genus) * at_u_exp_eta(genus, ddot(f));
    if (!(result == closed))
        throw ConsistencyError("index bundle character disagrees with d f'(u e^eta) - eta f''(u e^eta)");
    return result;
}

CohoElement ch_evaluation_bundle(int genus, const RatLaurent& f)
{
    CohoElement ev(genus);
    for (const auto& [n, c] : f.terms())
        ev += ch_power(genus, n).restrict_to_point() * Coeff(c);
    if (!(ev == at_u_exp_eta(genus, f)))
        throw ConsistencyError("evaluation bundle character disagrees with f(u e^eta)");
    return ev;
}

} // namespace verlinde
