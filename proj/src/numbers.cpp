#include "gib/numbers.hpp"

namespace gib {

bool is_squarefree(long d) {
    if (d <= 1) return false;
    long n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int q(den);
        if (q == 0) return std::nullopt;
        return make_rat(Int(num), q);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::pair<Rat, Rat> sqrt_bounds(const Rat& x, unsigned prec_bits) {
    if (x < 0) throw std::invalid_argument("sqrt_bounds of negative value");
    if (x == 0) return {Rat(0), Rat(0)};
    // sqrt(p/q) = sqrt(p*q)/q; floor integer sqrt of the scaled numerator
    Int scale = Int(1) << prec_bits;
    Int num = x.get_num() * x.get_den() * scale * scale;
    Int lo = isqrt(num);  // lo^2 <= num < (lo+1)^2
    Rat denom = Rat(x.get_den() * scale);
    return {Rat(lo) / denom, Rat(lo + 1) / denom};
}

}  // namespace gib
