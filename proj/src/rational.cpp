#include <zk3/rational.hpp>

#include <stdexcept>

namespace zk3 {

Int to_int(const Rat& q) {
    if (!is_integral(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

unsigned long ord_p(const Int& n, const Int& p) {
    if (n == 0)
        throw std::domain_error("ord_p of zero");
    if (p < 2)
        throw std::domain_error("ord_p needs p >= 2");
    Int m = abs(n);
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace zk3
