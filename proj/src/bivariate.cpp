#include "partbij/bivariate.hpp"

#include <stdexcept>

namespace partbij {

BivariateSeries::BivariateSeries(int order)
    : order_(order),
      coeffs_(static_cast<std::size_t>(order) + 1,
              std::vector<long long>(static_cast<std::size_t>(order) + 1, 0)) {
    if (order < 0)
        throw std::invalid_argument("bivariate order must be >= 0");
}

BivariateSeries BivariateSeries::one(int order) {
    BivariateSeries x(order);
    x.coeffs_[0][0] = 1;
    return x;
}

long long BivariateSeries::coeff(int a_degree, int q_exponent) const {
    if (a_degree > order_ || q_exponent > order_)
        return 0;
    return coeffs_.at(static_cast<std::size_t>(q_exponent)).at(static_cast<std::size_t>(a_degree));
}

void BivariateSeries::add_term(int a_degree, int q_exponent, long long c) {
    if (q_exponent > order_)
        return;
    if (a_degree > order_)
        throw std::invalid_argument("bivariate a-degree above truncation");
    auto& slot = coeffs_[static_cast<std::size_t>(q_exponent)][static_cast<std::size_t>(a_degree)];
    slot = checked_add(slot, c);
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    BivariateSeries out(n);
    for (int e = 0; e <= n; ++e)
        for (int d = 0; d <= n; ++d)
            out.coeffs_[static_cast<std::size_t>(e)][static_cast<std::size_t>(d)] =
                checked_add(coeff(d, e), other.coeff(d, e));
    return out;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    BivariateSeries out(n);
    for (int e1 = 0; e1 <= n; ++e1)
        for (int d1 = 0; d1 <= n; ++d1) {
            long long c1 = coeff(d1, e1);
            if (c1 == 0)
                continue;
            for (int e2 = 0; e1 + e2 <= n; ++e2)
                for (int d2 = 0; d1 + d2 <= n; ++d2) {
                    long long c2 = other.coeff(d2, e2);
                    if (c2 == 0)
                        continue;
                    out.add_term(d1 + d2, e1 + e2, checked_mul(c1, c2));
                }
        }
    return out;
}

BivariateSeries BivariateSeries::shifted(int a_degree, int q_exponent) const {
    BivariateSeries out(order_);
    for (int e = 0; e + q_exponent <= order_; ++e)
        for (int d = 0; d + a_degree <= order_; ++d) {
            long long c = coeff(d, e);
            if (c != 0)
                out.add_term(d + a_degree, e + q_exponent, c);
        }
    return out;
}

BivariateSeries BivariateSeries::times(const Series& s) const {
    int n = std::min(order_, s.order());
    BivariateSeries out(n);
    for (int e = 0; e <= n; ++e)
        for (int d = 0; d <= n; ++d) {
            long long c = coeff(d, e);
            if (c == 0)
                continue;
            for (int e2 = 0; e + e2 <= n; ++e2) {
                long long c2 = s.coeff(e2);
                if (c2 != 0)
                    out.add_term(d, e + e2, checked_mul(c, c2));
            }
        }
    return out;
}

BivariateSeries BivariateSeries::times_one_plus_aq(int e) const {
    return *this + shifted(1, e);
}

bool BivariateSeries::operator==(const BivariateSeries& other) const {
    return first_mismatch(other) == std::pair<int, int>(-1, -1);
}

std::pair<int, int> BivariateSeries::first_mismatch(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    for (int e = 0; e <= n; ++e)
        for (int d = 0; d <= n; ++d)
            if (coeff(d, e) != other.coeff(d, e))
                return {d, e};
    return {-1, -1};
}

namespace {

// 1/(q^step; q^step)_n as a univariate series.
Series inverse_pochhammer(long long step, long long n, int order) {
    Series out = Series::one(order);
    for (long long h = 1; h <= n; ++h)
        out = out * geometric_inverse(h * step, order);
    return out;
}

BivariateSeries sum_family_F(int order, bool shifted_exponent) {
    // shifted_exponent: q^{2n(n+1)} with product from 2n+2 (family member 1),
    // otherwise q^{2n^2} with product from 2n+1 (family member 3).
    BivariateSeries out(order);
    for (long long n = 0;; ++n) {
        long long base = shifted_exponent ? 2 * n * (n + 1) : 2 * n * n;
        if (base > order)
            break;
        Series uni = Series::monomial(static_cast<int>(base), 1, order) *
                     pochhammer_finite(-1, 1, 2, n, order) *
                     inverse_pochhammer(2, n, order);
        BivariateSeries term = BivariateSeries::one(order).times(uni).shifted(
            static_cast<int>(2 * n), 0);
        long long start = shifted_exponent ? 2 * n + 2 : 2 * n + 1;
        for (long long e = start; e <= order; ++e)
            term = term.times_one_plus_aq(static_cast<int>(e));
        out = out + term;
    }
    return out;
}

BivariateSeries sum_family_E(int order, bool shifted_exponent) {
    BivariateSeries out(order);
    for (long long n = 0;; ++n) {
        long long base = shifted_exponent ? 2 * n * (n + 1) : 2 * n * n;
        if (base > order)
            break;
        Series outer = Series::monomial(static_cast<int>(base), 1, order) *
                       inverse_pochhammer(2, n, order);
        long long m_shift = shifted_exponent ? 2 * n + 1 : 2 * n;
        for (long long m = 0;; ++m) {
            long long e_inner = m * (m + m_shift);
            if (e_inner > order)
                break;
            Series uni = outer * Series::monomial(static_cast<int>(e_inner), 1, order) *
                         inverse_pochhammer(1, m, order);
            BivariateSeries term = BivariateSeries::one(order).times(uni).shifted(
                static_cast<int>(2 * n + m), 0);
            out = out + term;
        }
    }
    return out;
}

BivariateSeries distinct_parts_product(int order) {
    // (-aq; q)_infinity
    BivariateSeries out = BivariateSeries::one(order);
    for (int e = 1; e <= order; ++e)
        out = out.times_one_plus_aq(e);
    return out;
}

}  // namespace

BivariateSeries build_F(int i, int order) {
    switch (i) {
    case 1: return sum_family_F(order, true);
    case 2: return distinct_parts_product(order);
    case 3: return sum_family_F(order, false);
    default: throw std::invalid_argument("build_F: index must be 1, 2, or 3");
    }
}

BivariateSeries build_E(int i, int order) {
    switch (i) {
    case 1: return sum_family_E(order, true);
    case 2: return distinct_parts_product(order);
    case 3: return sum_family_E(order, false);
    default: throw std::invalid_argument("build_E: index must be 1, 2, or 3");
    }
}

BivariateSeries substitute_aq(const BivariateSeries& x) {
    BivariateSeries out(x.order());
    for (int e = 0; e <= x.order(); ++e)
        for (int d = 0; d <= x.order(); ++d) {
            long long c = x.coeff(d, e);
            if (c != 0 && e + d <= x.order())
                out.add_term(d, e + d, c);
        }
    return out;
}

Series specialize_a1(const BivariateSeries& x) {
    Series out(x.order());
    for (int e = 0; e <= x.order(); ++e) {
        long long s = 0;
        for (int d = 0; d <= x.order(); ++d)
            s = checked_add(s, x.coeff(d, e));
        out.set_coeff(e, s);
    }
    return out;
}

}  // namespace partbij
