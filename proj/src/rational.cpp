#include "netdyn/rational.hpp"

#include <cctype>

#include "netdyn/errors.hpp"

namespace netdyn {

Rational::Rational(long num, long den) {
    if (den == 0) throw ConfigError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    auto bad = [&]() -> ConfigError {
        return ConfigError("malformed rational literal '" + s + "'");
    };
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
            c != '+' && c != '.')
            throw bad();
    }
    mpq_class v;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal: sign, integer part, fractional digits
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) throw bad();
        mpz_class num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) throw bad();
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        v = mpq_class(num, den);
    } else {
        std::string t = s;
        if (t.find('/') == std::string::npos) t += "/1";
        if (mpq_set_str(v.get_mpq_t(), t.c_str(), 10) != 0) throw bad();
        if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
            throw ConfigError("rational with zero denominator: '" + s + "'");
    }
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational Rational::pow2(int e) {
    mpq_class v;
    if (e >= 0) {
        mpz_class n;
        mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned>(e));
        v = mpq_class(n);
    } else {
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned>(-e));
        v = mpq_class(1, 1);
        v /= mpq_class(d);
    }
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw ContractError("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    Rational r;
    r.v_ = mpq_class(q);
    return r;
}

Rational Rational::mod1() const { return *this - floor(); }

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(n, d);  // already lowest terms when input was
    return r;
}

std::string Rational::to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::fits_int64(std::int64_t& n, std::int64_t& d) const {
    if (!v_.get_num().fits_slong_p() || !v_.get_den().fits_slong_p()) return false;
    n = v_.get_num().get_si();
    d = v_.get_den().get_si();
    return true;
}

}  // namespace netdyn
