#include <plaincharts/errors.hpp>
#include <plaincharts/rational.hpp>

#include <cctype>

namespace plaincharts {

Rational parse_rational(const std::string& text) {
    auto bad = [&](const std::string& what) {
        throw ParseError("invalid rational '" + text + "': " + what, 1, 1, "rational");
    };
    std::size_t i = 0;
    std::string num, den;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) num += text[i++];
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        bad("expected digits");
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            bad("expected denominator digits");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            den += text[i++];
    }
    if (i != text.size()) bad("trailing characters");
    if (den.empty()) den = "1";
    mpz_class n(num), d(den);
    if (d == 0) bad("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace plaincharts
