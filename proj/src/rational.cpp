#include "gaussmap/rational.hpp"

#include <stdexcept>

namespace gaussmap {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto bad = [&]() {
        return std::invalid_argument("not an exact rational: '" + text + "'");
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den)) throw bad();
        const Int num_i(num);
        const Int den_i(den);
        if (den_i == 0) throw bad();
        Rat r(num_i, den_i);
        r.canonicalize();
        return r;
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_text(whole + frac.front()) ||
            !is_integer_text("0" + frac))
            throw bad();
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool neg = !whole.empty() && whole[0] == '-';
        Int whole_i(whole.empty() || whole == "-" || whole == "+" ? "0" : whole);
        Int frac_i(frac);
        Int num = whole_i * scale + (neg ? -frac_i : frac_i);
        Rat r(num, scale);
        r.canonicalize();
        return r;
    }
    if (!is_integer_text(text)) throw bad();
    return Rat(Int(text));
}

std::string rat_string(const Rat& r) { return r.get_str(); }

double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace gaussmap
