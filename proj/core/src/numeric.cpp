#include "toral/numeric.hpp"

#include <stdexcept>

#include "toral/error.hpp"

namespace toral {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw Error(Errc::invalid_argument, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int round_half_even(const Rat& r) {
    Int lo = rat_floor(r);
    Rat frac = r - Rat(lo);
    if (frac < Rat(1, 2)) return lo;
    if (frac > Rat(1, 2)) return lo + 1;
    // exactly halfway: pick the even neighbor
    return mpz_even_p(lo.get_mpz_t()) ? lo : lo + 1;
}

Rat mod_one(const Rat& r) {
    Rat out = r - Rat(rat_floor(r));
    out.canonicalize();
    return out;
}

Rat pow2_inverse(unsigned n) {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
    return make_rat(1, den);
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int abs(const Int& n) {
    Int out;
    mpz_abs(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return make_rat(Int(num), d);
}

Int common_denominator(const std::vector<Rat>& values) {
    Int l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

}  // namespace toral
