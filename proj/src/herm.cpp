#include <zk3/herm.hpp>

#include <zk3/snf.hpp>

#include <stdexcept>

namespace zk3 {

namespace {

// beta = F*x with x in the order, i.e. F^{-1} beta = -F*beta/p is integral.
std::optional<QuatElement> f_inverse_times(const QuatElement& beta) {
    const OrderCase& c = beta.order_case();
    QuatElement x = quat_mul(QuatElement::frobenius(c), beta).scaled(make_rat(-1, c.p()));
    if (!x.is_integral())
        return std::nullopt;
    return x;
}

} // namespace

HermElement::HermElement(Int alpha, Int delta, QuatElement beta)
    : alpha_(std::move(alpha)), delta_(std::move(delta)), beta_(std::move(beta)) {
    if (!beta_.is_integral())
        throw std::domain_error("off-diagonal entry is not in the order");
}

HermElement HermElement::operator+(const HermElement& other) const {
    return HermElement(alpha_ + other.alpha_, delta_ + other.delta_, beta_ + other.beta_);
}

HermElement HermElement::operator-(const HermElement& other) const {
    return HermElement(alpha_ - other.alpha_, delta_ - other.delta_, beta_ - other.beta_);
}

HermElement HermElement::scaled(const Int& n) const {
    return HermElement(alpha_ * n, delta_ * n, beta_.scaled(Rat(n)));
}

Int herm_pairing(const HermElement& a, const HermElement& b) {
    if (a.order_case() != b.order_case())
        throw std::domain_error("mixed order cases in pairing");
    QuatElement cross = quat_mul(quat_conj(a.beta()), b.beta()) +
                        quat_mul(quat_conj(b.beta()), a.beta());
    if (!cross.is_scalar())
        throw std::logic_error("gamma1*beta2 + gamma2*beta1 is not scalar");
    Rat value = Rat(b.alpha() * a.delta() + a.alpha() * b.delta()) - cross.scalar_part();
    return to_int(value);
}

RatMatrix gram_matrix(const std::vector<HermElement>& basis) {
    RatMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Int v = herm_pairing(basis[i], basis[j]);
            g.at(i, j) = Rat(v);
            g.at(j, i) = Rat(v);
        }
    return g;
}

std::vector<HermElement> h_basis(const OrderCase& c) {
    std::vector<HermElement> basis;
    basis.emplace_back(Int(0), Int(1), QuatElement::zero(c)); // E1
    basis.emplace_back(Int(1), Int(0), QuatElement::zero(c)); // E2
    for (int i = 0; i < 4; ++i)
        basis.emplace_back(Int(0), Int(0), QuatElement::basis_element(c, i));
    return basis;
}

std::vector<HermElement> hprime_basis(const OrderCase& c) {
    std::vector<HermElement> basis;
    basis.emplace_back(Int(0), c.p(), QuatElement::zero(c));
    basis.emplace_back(c.p(), Int(0), QuatElement::zero(c));
    QuatElement f = QuatElement::frobenius(c);
    for (int i = 0; i < 4; ++i)
        basis.emplace_back(Int(0), Int(0), quat_mul(f, QuatElement::basis_element(c, i)));
    return basis;
}

bool in_h_prime(const HermElement& x) {
    const Int& p = x.order_case().p();
    if (!mpz_divisible_p(x.alpha().get_mpz_t(), p.get_mpz_t()) ||
        !mpz_divisible_p(x.delta().get_mpz_t(), p.get_mpz_t()))
        return false;
    return f_inverse_times(x.beta()).has_value();
}

std::optional<std::vector<Int>> hprime_coordinates(const HermElement& x) {
    const Int& p = x.order_case().p();
    if (!mpz_divisible_p(x.alpha().get_mpz_t(), p.get_mpz_t()) ||
        !mpz_divisible_p(x.delta().get_mpz_t(), p.get_mpz_t()))
        return std::nullopt;
    auto rest = f_inverse_times(x.beta());
    if (!rest)
        return std::nullopt;
    std::vector<Int> coords(6);
    coords[0] = x.delta() / p;
    coords[1] = x.alpha() / p;
    for (int i = 0; i < 4; ++i)
        coords[2 + static_cast<std::size_t>(i)] = rest->coords()[i].get_num();
    return coords;
}

QuatMat2 QuatMat2::diagonal(const QuatElement& g1, const QuatElement& g2) {
    const OrderCase& c = g1.order_case();
    return QuatMat2{g1, QuatElement::zero(c), QuatElement::zero(c), g2};
}

HermElement pullback_action(const QuatMat2& g, const HermElement& L) {
    const OrderCase& c = L.order_case();
    QuatElement alpha = QuatElement::scalar(c, Rat(L.alpha()));
    QuatElement delta = QuatElement::scalar(c, Rat(L.delta()));
    QuatElement gamma = quat_conj(L.beta());

    // t(conj(g)) * [[alpha, beta], [gamma, delta]] * g
    QuatElement ca = quat_conj(g.a), cb = quat_conj(g.b);
    QuatElement cc = quat_conj(g.c), cd = quat_conj(g.d);

    QuatElement m00 = quat_mul(ca, alpha) + quat_mul(cc, gamma);
    QuatElement m01 = quat_mul(ca, L.beta()) + quat_mul(cc, delta);
    QuatElement m10 = quat_mul(cb, alpha) + quat_mul(cd, gamma);
    QuatElement m11 = quat_mul(cb, L.beta()) + quat_mul(cd, delta);

    QuatElement r00 = quat_mul(m00, g.a) + quat_mul(m01, g.c);
    QuatElement r01 = quat_mul(m00, g.b) + quat_mul(m01, g.d);
    QuatElement r10 = quat_mul(m10, g.a) + quat_mul(m11, g.c);
    QuatElement r11 = quat_mul(m10, g.b) + quat_mul(m11, g.d);

    if (!r00.is_scalar() || !r11.is_scalar())
        throw std::logic_error("pullback left the Hermitian shape: corners not scalar");
    if (!(quat_conj(r01) == r10))
        throw std::logic_error("pullback left the Hermitian shape: off-diagonal not conjugate");
    return HermElement(to_int(r00.scalar_part()), to_int(r11.scalar_part()), r01);
}

RatMatrix NsLattice::scaled_gram() const {
    RatMatrix g = gram.scaled(scale);
    if (!g.is_integral())
        throw std::logic_error("scaled Gram matrix is not integral");
    return g;
}

NsLattice h_lattice(const OrderCase& c) {
    std::vector<HermElement> basis = h_basis(c);
    RatMatrix gram = gram_matrix(basis);
    return NsLattice{std::move(basis), std::move(gram), Rat(1)};
}

NsLattice hprime_lattice(const OrderCase& c) {
    std::vector<HermElement> basis = hprime_basis(c);
    RatMatrix gram = gram_matrix(basis);
    return NsLattice{std::move(basis), std::move(gram), make_rat(Int(1), c.p())};
}

RatMatrix hprime_action_matrix(const OrderCase& c, const QuatMat2& g) {
    std::vector<HermElement> basis = hprime_basis(c);
    RatMatrix rho(6, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        HermElement image = pullback_action(g, basis[j]);
        auto coords = hprime_coordinates(image);
        if (!coords)
            throw std::logic_error("action does not preserve H'");
        for (std::size_t i = 0; i < 6; ++i)
            rho.at(i, j) = Rat((*coords)[i]);
    }
    return rho;
}

NsLattice invariant_sublattice(const OrderCase& c) {
    QuatElement tau = QuatElement::basis_element(c, c.tag() == CurveTag::J0 ? 2 : 1);
    RatMatrix rho = hprime_action_matrix(c, QuatMat2::diagonal(tau, tau));
    std::vector<std::vector<Int>> kernel = integer_kernel(rho - RatMatrix::identity(6));
    if (kernel.size() != 4)
        throw std::logic_error("invariant sublattice has rank " + std::to_string(kernel.size()) +
                               ", expected 4; table transcription suspect");

    std::vector<HermElement> hp = hprime_basis(c);
    std::vector<HermElement> basis;
    for (const auto& v : kernel) {
        HermElement e(Int(0), Int(0), QuatElement::zero(c));
        for (std::size_t i = 0; i < 6; ++i)
            e = e + hp[i].scaled(v[i]);
        basis.push_back(e);
    }
    RatMatrix gram = gram_matrix(basis);
    return NsLattice{std::move(basis), std::move(gram), make_rat(Int(1), c.p())};
}

std::optional<unsigned long> artin_invariant_from_disc(const Int& disc, const Int& p) {
    Int a = abs(disc);
    if (a == 0)
        return std::nullopt;
    unsigned long e = 0;
    while (a > 1) {
        if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
            return std::nullopt;
        a /= p;
        ++e;
    }
    if (e % 2 != 0)
        return std::nullopt;
    return e / 2;
}

} // namespace zk3
