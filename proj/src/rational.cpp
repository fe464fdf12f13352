#include "ortho/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace ortho {

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view{}
                               : text.substr(slash + 1);

    if (!is_int(num) || (slash != std::string_view::npos && !is_int(den))) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }

    Int p{std::string(num)};
    if (slash == std::string_view::npos) {
        return Rat(p);
    }
    Int q{std::string(den)};
    if (q == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rat(p, q);
}

double rat_to_double(const Rat& r) {
    return r.convert_to<double>();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace ortho
