#include "verlinde/localization.hpp"

namespace verlinde {

namespace {

Coeff coeff_from(const RatLaurent& f, int ud, int dpow)
{
    Coeff c;
    for (const auto& [n, q] : f.terms())
        c.add({n, ud, dpow, 0}, q);
    return c;
}

} // namespace

IntegrandPieces assemble_symbolic(const AdmissibleClass& e, int genus)
{
    if (e.h < 0)
        throw PreconditionError("admissible classes need a non-negative power of D");
    IntegrandPieces out;
    out.genus = genus;
    out.modulus = 2 * e.h + 4;

    const EulerClass euler = virtual_normal_euler(genus);
    out.euler_sign = euler.sign;
    out.weyl_power = euler.weyl_power;

    CohoElement core = ch_determinant(genus, e.h) * euler.rest_inverse();
    for (const auto& w : e.evaluations)
        core = core * ch_evaluation_bundle(genus, w);
    core = core.rescale_u(-1);
    for (const Coeff& c : eta_coefficients(core)) {
        const RatLaurent part = c.laurent_part(-out.modulus, 0, 0);
        if (!(coeff_from(part, -out.modulus, 0) == c))
            throw ConsistencyError("D-twist over the Euler class is not u^{-Nd} times a Laurent polynomial: "
                + c.to_string());
        out.core.push_back(part);
    }

    for (const auto& x : e.exponentials) {
        const CohoElement alpha = ch_index_bundle(genus, x.character).rescale_u(-1);
        const std::vector<Coeff> cs = eta_coefficients(alpha);
        IntegrandPieces::Flow flow;
        flow.parameter = x.parameter;
        flow.rate = cs[0].laurent_part(0, 1, 0);
        for (size_t k = 0; k < cs.size(); ++k) {
            flow.eta_part.push_back(cs[k].laurent_part(0, 0, 0));
            Coeff rebuilt = coeff_from(flow.eta_part.back(), 0, 0);
            if (k == 0)
                rebuilt += coeff_from(flow.rate, 0, 1);
            if (!(rebuilt == cs[k]))
                throw ConsistencyError("index bundle is not d * rate + (d-free eta terms): " + cs[k].to_string());
        }
        out.flows.push_back(std::move(flow));
    }
    return out;
}

std::vector<int> support_root_indices(int modulus, bool exclude_singular)
{
    std::vector<int> ks;
    for (int k = 0; k < modulus; ++k) {
        const bool singular = k == 0 || 2 * k == modulus;
        if (!singular || !exclude_singular)
            ks.push_back(k);
    }
    return ks;
}

} // namespace verlinde
