#include "valdim/scalar.hpp"

namespace valdim {

namespace {

mpz_class mod_p(const mpz_class& v, unsigned long p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r;
}

mpz_class mod_inverse(const mpz_class& v, unsigned long p) {
    mpz_class r = mod_p(v, p);
    if (r == 0) throw std::domain_error("division by zero in prime field");
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), r.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw std::domain_error("non-invertible residue");
    return out;
}

}  // namespace

Rat Field::normalize(const Rat& x) const {
    if (p == 0) {
        Rat y = x;
        y.canonicalize();
        return y;
    }
    mpz_class num = mod_p(x.get_num(), p);
    mpz_class den = x.get_den();
    if (mod_p(den, p) == 0) throw std::domain_error("denominator divisible by the characteristic");
    if (den != 1) num = mod_p(num * mod_inverse(den, p), p);
    return Rat(num);
}

Rat Field::inv(const Rat& a) const {
    if (p == 0) {
        if (a == 0) throw std::domain_error("division by zero");
        return Rat(1) / a;
    }
    Rat r = normalize(a);
    return Rat(mod_inverse(r.get_num(), p));
}

std::string Field::to_string(const Rat& a) const {
    Rat r = normalize(a);
    return r.get_str();
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::invalid_argument("mixed coefficient fields");
}

}  // namespace valdim
