#include "covergrid/rational.hpp"

#include <cctype>
#include <ostream>

#include "covergrid/errors.hpp"

namespace covergrid {

Rat::Rat(long long n) {
    static_assert(sizeof(long long) == sizeof(long), "LP64 assumed");
    v_ = mpq_class(mpz_class(static_cast<long>(n)));
}

Rat::Rat(long long num, long long den) {
    *this = Rat(num) / Rat(den);
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw BadInput("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw BadInput("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw BadInput("Rat::parse: empty string");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw BadInput("Rat::parse: bad literal '" + s + "'");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw BadInput("Rat::parse: bad literal '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw BadInput("Rat::parse: bad literal '" + s + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw BadInput("Rat::parse: zero denominator in '" + s + "'");
    return Rat(mpz_class(num), d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace covergrid
