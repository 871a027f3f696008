#ifndef ZK3_QUAT_HPP
#define ZK3_QUAT_HPP

#include <zk3/rational.hpp>

#include <array>
#include <string>

namespace zk3 {

// The two supersingular curves whose endomorphism order we work in:
//   J0    : y^2 + y = x^3,  p = 2 mod 3 (p = 2 included), order-3 automorphism
//   J1728 : y^2 = x^3 - x,  p = 3 mod 4, order-4 automorphism
enum class CurveTag { J0, J1728 };

class OrderCase {
public:
    OrderCase(CurveTag tag, Int p);

    CurveTag tag() const { return tag_; }
    const Int& p() const { return p_; }
    std::string name() const { return tag_ == CurveTag::J0 ? "j0" : "j1728"; }

    static bool admissible(CurveTag tag, const Int& p);

    bool operator==(const OrderCase& other) const = default;

private:
    CurveTag tag_;
    Int p_;
};

// Element of the maximal order O = End(E), written in the case Z-basis:
//   J0    : {1, F, tau, eta}  with eta = (1+F)(2+tau)/3
//   J1728 : {1, tau, (1+F)/2, eta}  with eta = tau(1+F)/2
// F is the Frobenius (F^2 = -p). Coordinates are exact rationals; the element
// lies in O exactly when all four are integers.
class QuatElement {
public:
    QuatElement(OrderCase c, std::array<Rat, 4> coords);

    static QuatElement zero(const OrderCase& c);
    static QuatElement one(const OrderCase& c);
    static QuatElement scalar(const OrderCase& c, const Rat& s);
    static QuatElement basis_element(const OrderCase& c, int i); // 0..3
    static QuatElement frobenius(const OrderCase& c);

    const OrderCase& order_case() const { return case_; }
    const std::array<Rat, 4>& coords() const { return coords_; }

    bool is_integral() const;
    bool is_zero() const;
    bool is_scalar() const;
    const Rat& scalar_part() const { return coords_[0]; }

    QuatElement operator+(const QuatElement& other) const;
    QuatElement operator-(const QuatElement& other) const;
    QuatElement operator-() const;
    QuatElement operator*(const QuatElement& other) const;
    QuatElement scaled(const Rat& c) const;
    bool operator==(const QuatElement& other) const = default;

    std::string str() const; // "a,b,c,d"

private:
    OrderCase case_;
    std::array<Rat, 4> coords_;
};

QuatElement quat_mul(const QuatElement& x, const QuatElement& y);
QuatElement quat_conj(const QuatElement& x);

// x + conj(x) and x*conj(x), both forced scalar; a non-scalar value would mean
// the multiplication table is inconsistent and throws.
Rat reduced_trace(const QuatElement& x);
Rat reduced_norm(const QuatElement& x);

// |det(Trd(b_i * conj(b_j)))| over the 4-element basis equals p^2; returns its
// square root p, certifying the table against the maximal-order discriminant.
Int order_reduced_discriminant(const OrderCase& c);

} // namespace zk3

#endif
