#include "coins/rational.hpp"

#include <cctype>
#include <sstream>

#include "coins/errors.hpp"

namespace coins {

namespace {

bool digits_only(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!digits_only(num) || !digits_only(den))
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    mpz_class num_z{std::string(num)};
    mpz_class den_z{std::string(den)};
    Rat q(num_z, den_z);
    if (q.get_den() == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return negative ? Rat(-q) : q;
}

std::string format_rational(const Rat& q) {
    std::ostringstream out;
    out << q;  // gmpxx prints canonical p/q, or p when q == 1
    return out.str();
}

}  // namespace coins
