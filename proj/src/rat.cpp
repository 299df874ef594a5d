#include "coverdecomp/rat.hpp"

#include <cctype>
#include <ostream>

#include "coverdecomp/errors.hpp"

namespace covdec {

Rat::Rat(long long n) : q_(mpz_class(std::to_string(n))) {}

Rat::Rat(long long num, long long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
    if (o.sign() == 0) throw ParseError("rational division by zero");
    return Rat(mpq_class(q_ / o.q_));
}

Rat Rat::parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    const auto check_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string nums, dens = "1";
    if (slash == std::string_view::npos) {
        nums = std::string(s);
        if (!check_int(nums)) throw ParseError("bad rational literal: " + nums);
    } else {
        nums = std::string(s.substr(0, slash));
        dens = std::string(s.substr(slash + 1));
        if (!check_int(nums) || !check_int(dens))
            throw ParseError("bad rational literal: " + std::string(s));
    }
    if (nums[0] == '+') nums.erase(0, 1);  // GMP rejects a leading plus
    if (dens[0] == '+') dens.erase(0, 1);
    mpz_class n(nums), d(dens);
    if (sgn(d) == 0) throw ParseError("rational with zero denominator: " + std::string(s));
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rat::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

mpz_class Rat::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace covdec
