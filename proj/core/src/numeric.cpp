#include "surgery/numeric.hpp"

#include "surgery/errors.hpp"

#include <cctype>

namespace surgery {

Integer pow_int(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view token = trim(text);
    if (token.empty()) {
        throw ValidationError("empty slope token");
    }
    if (token == "inf" || token == "Inf" || token == "INF" || token == "-inf") {
        throw ValidationError("slope \"inf\" is not accepted; surgery slopes must be finite rationals");
    }
    const auto slash = token.find('/');
    std::string_view num_part = token.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
    num_part = trim(num_part);
    den_part = trim(den_part);
    if (!is_integer_token(num_part) || !is_integer_token(den_part)) {
        throw ValidationError("malformed slope token \"" + std::string(token) +
                              "\"; expected p or p/q with integer p, q");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (den == 0) {
        throw ValidationError("slope \"" + std::string(token) + "\" has zero denominator");
    }
    return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string_view rest = trim(text);
    if (rest.empty()) {
        throw ValidationError("empty slope list");
    }
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::string format_rational_list(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format_rational(values[i]);
    }
    return out;
}

} // namespace surgery
