#include "verlinde/characters.hpp"

#include <cctype>

namespace verlinde {

RatLaurent su2_character(SU2Rep rep)
{
    if (rep.highest_weight < 0)
        throw PreconditionError("SU(2) highest weight must be non-negative");
    RatLaurent f;
    for (int j = 0; j <= rep.highest_weight; ++j)
        f.add_term(rep.highest_weight - 2 * j, Rational(1));
    return f;
}

std::string to_string(const RatLaurent& f)
{
    std::string out = "{";
    for (const auto& [n, c] : f.terms()) {
        if (out.size() > 1)
            out += ",";
        out += std::to_string(n) + ":" + c.get_str();
    }
    return out + "}";
}

RatLaurent parse_laurent(const std::string& text)
{
    std::string body;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            body += ch;
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw PreconditionError("Laurent polynomial must be written as {e:c,...}");
    body = body.substr(1, body.size() - 2);
    RatLaurent f;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t end = body.find(',', pos);
        if (end == std::string::npos)
            end = body.size();
        const std::string item = body.substr(pos, end - pos);
        const size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw PreconditionError("Laurent term '" + item + "' lacks ':'");
        int exponent = 0;
        try {
            exponent = std::stoi(item.substr(0, colon));
        } catch (const std::exception&) {
            throw PreconditionError("bad exponent in Laurent term '" + item + "'");
        }
        f.add_term(exponent, parse_rational(item.substr(colon + 1)));
        pos = end + 1;
    }
    return f;
}

RatLaurent parse_character(const std::string& text)
{
    if (text.rfind("su2:", 0) == 0) {
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(text.substr(4), &used);
            if (used != text.size() - 4)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw PreconditionError("bad representation '" + text + "'");
        }
        return su2_character(SU2Rep{n});
    }
    if (text.rfind("laurent:", 0) == 0)
        return parse_laurent(text.substr(8));
    throw PreconditionError("representation must be su2:n or laurent:{...}, got '" + text + "'");
}

} // namespace verlinde
