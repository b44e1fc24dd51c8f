#include "wbr/rational.hpp"

namespace wbr {

Rat rat_pow(const Rat& a, unsigned long e) {
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(num.get_den_mpz_t(), a.get_den_mpz_t(), e);
    num.canonicalize();
    return num;
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw Error("rat_parse: empty string");
    Rat out;
    if (out.set_str(text, 10) != 0) throw Error("rat_parse: malformed rational '" + text + "'");
    if (out.get_den() == 0) throw DivisionByZero("rat_parse: zero denominator in '" + text + "'");
    out.canonicalize();
    return out;
}

std::string rat_to_string(const Rat& a) {
    return a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
}

} // namespace wbr
