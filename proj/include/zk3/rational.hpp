#ifndef ZK3_RATIONAL_HPP
#define ZK3_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace zk3 {

// All arithmetic in this library is exact: arbitrary-precision integers and
// reduced rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction num/den.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Numerator of an integral rational; throws if q has a denominator.
Int to_int(const Rat& q);

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned long exp);

// Exponent of p in n (n nonzero, p >= 2).
unsigned long ord_p(const Int& n, const Int& p);

bool is_prime(const Int& n);

// Parses "a" or "a/b" into a reduced rational; throws on garbage.
Rat rat_from_string(const std::string& s);

} // namespace zk3

#endif
