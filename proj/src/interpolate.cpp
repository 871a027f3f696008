#include <zk3/interpolate.hpp>

#include <zk3/matrix.hpp>

#include <stdexcept>

namespace zk3 {

std::vector<Rat> interpolate_polynomial(const std::vector<std::pair<Rat, Rat>>& points) {
    const std::size_t n = points.size();
    if (n == 0)
        return {};
    RatMatrix vand(n, n);
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat power(1);
        for (std::size_t j = 0; j < n; ++j) {
            vand.at(i, j) = power;
            power *= points[i].first;
        }
        rhs[i] = points[i].second;
    }
    auto coeffs = solve_rational(vand, rhs);
    if (!coeffs)
        throw std::domain_error("interpolation nodes are not distinct");
    while (!coeffs->empty() && coeffs->back() == 0)
        coeffs->pop_back();
    return *coeffs;
}

std::string polynomial_to_string(const std::vector<Rat>& coeffs, const std::string& var) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rat& c = coeffs[k];
        if (c == 0)
            continue;
        Rat a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit = (a == 1) && k > 0;
        if (!unit)
            out += a.get_str();
        if (k > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace zk3
