#include <zk3/quat.hpp>

#include <zk3/matrix.hpp>

#include <stdexcept>

namespace zk3 {

namespace {

// Table entry coefficient (c0 + cp*p) / den, so the same table serves every
// admissible prime.
struct LinP {
    long c0 = 0, cp = 0, den = 1;
};

using Entry = std::array<LinP, 4>;   // coordinates of a basis product
using Table = std::array<std::array<Entry, 4>, 4>;

// Order of the j = 0 curve, basis {1, F, tau, eta}, eta = (1+F)(2+tau)/3.
// Relations: F^2 = -p, tau^3 = 1, F tau = tau^2 F.
constexpr Table kTableJ0 = {{
    // 1 * {1, F, tau, eta}
    {{{{{1, 0, 1}, {}, {}, {}}},
      {{{}, {1, 0, 1}, {}, {}}},
      {{{}, {}, {1, 0, 1}, {}}},
      {{{}, {}, {}, {1, 0, 1}}}}},
    // F * {1, F, tau, eta}
    {{{{{}, {1, 0, 1}, {}, {}}},
      {{{0, -1, 1}, {}, {}, {}}},                          // F*F = -p
      {{{-2, 0, 1}, {-2, 0, 1}, {-1, 0, 1}, {3, 0, 1}}},   // F*tau = -2 - 2F - tau + 3eta
      {{{-2, -2, 3}, {}, {-1, -1, 3}, {1, 0, 1}}}}},       // F*eta = -2(1+p)/3 - (1+p)tau/3 + eta
    // tau * {1, F, tau, eta}
    {{{{{}, {}, {1, 0, 1}, {}}},
      {{{2, 0, 1}, {1, 0, 1}, {1, 0, 1}, {-3, 0, 1}}},     // tau*F = 2 + F + tau - 3eta
      {{{-1, 0, 1}, {}, {-1, 0, 1}, {}}},                  // tau*tau = -1 - tau
      {{{1, 0, 1}, {1, 0, 1}, {1, 0, 1}, {-2, 0, 1}}}}},   // tau*eta = 1 + F + tau - 2eta
    // eta * {1, F, tau, eta}
    {{{{{}, {}, {}, {1, 0, 1}}},
      {{{2, -1, 3}, {1, 0, 1}, {1, 1, 3}, {-1, 0, 1}}},    // eta*F = (2-p)/3 + F + (1+p)tau/3 - eta
      {{{-1, 0, 1}, {-1, 0, 1}, {}, {1, 0, 1}}},           // eta*tau = -1 - F + eta
      {{{-1, -1, 3}, {}, {}, {1, 0, 1}}}}},                // eta*eta = -(1+p)/3 + eta
}};

// Order of the j = 1728 curve, basis {1, tau, xi, eta} with xi = (1+F)/2 and
// eta = tau(1+F)/2.  Relations: F^2 = -p, tau^2 = -1, F tau = tau^3 F.
// The product tau*eta is forced to -(1+F)/2 by tau*eta = tau^2 xi = -xi;
// the associativity suite pins every entry.
constexpr Table kTableJ1728 = {{
    // 1 * {1, tau, xi, eta}
    {{{{{1, 0, 1}, {}, {}, {}}},
      {{{}, {1, 0, 1}, {}, {}}},
      {{{}, {}, {1, 0, 1}, {}}},
      {{{}, {}, {}, {1, 0, 1}}}}},
    // tau * {1, tau, xi, eta}
    {{{{{}, {1, 0, 1}, {}, {}}},
      {{{-1, 0, 1}, {}, {}, {}}},                          // tau*tau = -1
      {{{}, {}, {}, {1, 0, 1}}},                           // tau*xi = eta
      {{{}, {}, {-1, 0, 1}, {}}}}},                        // tau*eta = -xi
    // xi * {1, tau, xi, eta}
    {{{{{}, {}, {1, 0, 1}, {}}},
      {{{}, {1, 0, 1}, {}, {-1, 0, 1}}},                   // xi*tau = tau - eta
      {{{-1, -1, 4}, {}, {1, 0, 1}, {}}},                  // xi*xi = -(1+p)/4 + xi
      {{{}, {1, 1, 4}, {}, {}}}}},                         // xi*eta = (1+p)tau/4
    // eta * {1, tau, xi, eta}
    {{{{{}, {}, {}, {1, 0, 1}}},
      {{{-1, 0, 1}, {}, {1, 0, 1}, {}}},                   // eta*tau = -1 + xi
      {{{}, {-1, -1, 4}, {}, {1, 0, 1}}},                  // eta*xi = -(1+p)tau/4 + eta
      {{{-1, -1, 4}, {}, {}, {}}}}},                       // eta*eta = -(1+p)/4
}};

Rat eval_linp(const LinP& c, const Int& p) {
    Int num = Int(c.c0) + Int(c.cp) * p;
    return make_rat(num, Int(c.den));
}

const Table& table_for(const OrderCase& c) {
    return c.tag() == CurveTag::J0 ? kTableJ0 : kTableJ1728;
}

} // namespace

OrderCase::OrderCase(CurveTag tag, Int p) : tag_(tag), p_(std::move(p)) {
    if (!admissible(tag_, p_))
        throw std::domain_error("prime " + p_.get_str() + " is not admissible for case " +
                                (tag_ == CurveTag::J0 ? "j0 (needs p = 2 mod 3)"
                                                      : "j1728 (needs p = 3 mod 4)"));
}

bool OrderCase::admissible(CurveTag tag, const Int& p) {
    if (p < 2 || !is_prime(p))
        return false;
    if (tag == CurveTag::J0)
        return p % 3 == 2;
    return p % 4 == 3;
}

QuatElement::QuatElement(OrderCase c, std::array<Rat, 4> coords)
    : case_(std::move(c)), coords_(std::move(coords)) {}

QuatElement QuatElement::zero(const OrderCase& c) {
    return QuatElement(c, {Rat(0), Rat(0), Rat(0), Rat(0)});
}

QuatElement QuatElement::one(const OrderCase& c) {
    return QuatElement(c, {Rat(1), Rat(0), Rat(0), Rat(0)});
}

QuatElement QuatElement::scalar(const OrderCase& c, const Rat& s) {
    return QuatElement(c, {s, Rat(0), Rat(0), Rat(0)});
}

QuatElement QuatElement::basis_element(const OrderCase& c, int i) {
    if (i < 0 || i > 3)
        throw std::invalid_argument("basis index out of range");
    std::array<Rat, 4> coords{Rat(0), Rat(0), Rat(0), Rat(0)};
    coords[static_cast<std::size_t>(i)] = 1;
    return QuatElement(c, coords);
}

QuatElement QuatElement::frobenius(const OrderCase& c) {
    if (c.tag() == CurveTag::J0)
        return basis_element(c, 1);
    // F = 2*(1+F)/2 - 1
    return QuatElement(c, {Rat(-1), Rat(0), Rat(2), Rat(0)});
}

bool QuatElement::is_integral() const {
    for (const Rat& x : coords_)
        if (x.get_den() != 1)
            return false;
    return true;
}

bool QuatElement::is_zero() const {
    for (const Rat& x : coords_)
        if (x != 0)
            return false;
    return true;
}

bool QuatElement::is_scalar() const {
    return coords_[1] == 0 && coords_[2] == 0 && coords_[3] == 0;
}

QuatElement QuatElement::operator+(const QuatElement& other) const {
    if (case_ != other.case_)
        throw std::domain_error("mixed order cases in quaternion sum");
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i)
        c[i] = coords_[i] + other.coords_[i];
    return QuatElement(case_, c);
}

QuatElement QuatElement::operator-(const QuatElement& other) const {
    return *this + (-other);
}

QuatElement QuatElement::operator-() const {
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i)
        c[i] = -coords_[i];
    return QuatElement(case_, c);
}

QuatElement QuatElement::scaled(const Rat& s) const {
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i)
        c[i] = coords_[i] * s;
    return QuatElement(case_, c);
}

QuatElement QuatElement::operator*(const QuatElement& other) const {
    return quat_mul(*this, other);
}

std::string QuatElement::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i)
            s += ",";
        s += coords_[i].get_str();
    }
    return s;
}

QuatElement quat_mul(const QuatElement& x, const QuatElement& y) {
    if (x.order_case() != y.order_case())
        throw std::domain_error("mixed order cases in quaternion product");
    const OrderCase& c = x.order_case();
    const Table& table = table_for(c);
    std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i) {
        if (x.coords()[i] == 0)
            continue;
        for (int j = 0; j < 4; ++j) {
            if (y.coords()[j] == 0)
                continue;
            Rat f = x.coords()[i] * y.coords()[j];
            const Entry& e = table[i][j];
            for (int k = 0; k < 4; ++k) {
                if (e[k].c0 == 0 && e[k].cp == 0)
                    continue;
                out[k] += f * eval_linp(e[k], c.p());
            }
        }
    }
    return QuatElement(c, out);
}

QuatElement quat_conj(const QuatElement& x) {
    const auto& a = x.coords();
    if (x.order_case().tag() == CurveTag::J0) {
        // conj: 1->1, F->-F, tau->-1-tau, eta->1-eta
        return QuatElement(x.order_case(),
                           {a[0] - a[2] + a[3], -a[1], -a[2], -a[3]});
    }
    // conj: 1->1, tau->-tau, xi->1-xi, eta->-eta
    return QuatElement(x.order_case(), {a[0] + a[2], -a[1], -a[2], -a[3]});
}

Rat reduced_trace(const QuatElement& x) {
    QuatElement t = x + quat_conj(x);
    if (!t.is_scalar())
        throw std::logic_error("x + conj(x) is not scalar; multiplication table broken");
    return t.scalar_part();
}

Rat reduced_norm(const QuatElement& x) {
    QuatElement n = quat_mul(x, quat_conj(x));
    if (!n.is_scalar())
        throw std::logic_error("x * conj(x) is not scalar; multiplication table broken");
    return n.scalar_part();
}

Int order_reduced_discriminant(const OrderCase& c) {
    RatMatrix gram(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuatElement prod =
                quat_mul(QuatElement::basis_element(c, i),
                         quat_conj(QuatElement::basis_element(c, j)));
            gram.at(i, j) = reduced_trace(prod);
        }
    Rat d = det_exact(gram);
    Int num = abs(to_int(d));
    Int root;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0)
        throw std::logic_error("trace form determinant " + num.get_str() +
                               " is not a perfect square");
    mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
    return root;
}

} // namespace zk3
