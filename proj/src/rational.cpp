#include "verlinde/rational.hpp"

namespace verlinde {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw PreconditionError("empty rational literal");
    Rational q;
    try {
        q.set_str(text, 10);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("malformed rational literal '" + text + "'");
    }
    if (q.get_den() == 0)
        throw DivisionByZero("rational literal with zero denominator");
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

} // namespace verlinde
