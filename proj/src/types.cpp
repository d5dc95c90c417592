#include "turanlab/types.hpp"

#include "turanlab/error.hpp"

namespace turan {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

Count int_from_string(const std::string& s) {
    if (s.empty()) throw error(errc::parse, "empty integer literal");
    std::size_t digits = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (digits == s.size()) throw error(errc::parse, "sign without digits: '" + s + "'");
    for (std::size_t i = digits; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw error(errc::parse, "bad digit in integer literal '" + s + "'");
    return Count(s);
}

} // namespace

Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Count num = int_from_string(s.substr(0, slash));
    Count den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw error(errc::parse, "zero denominator in '" + s + "'");
    return Rat(num, den);
}

Count binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Count falling_factorial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Count r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

} // namespace turan
