#include "partbij/series.hpp"

#include <algorithm>
#include <sstream>

namespace partbij {

bool Series::operator==(const Series& other) const {
    return first_mismatch(other) < 0;
}

int Series::first_mismatch(const Series& other) const {
    int n = std::min(order_, other.order_);
    for (int e = 0; e <= n; ++e) {
        if (coeffs_[static_cast<std::size_t>(e)] != other.coeffs_[static_cast<std::size_t>(e)])
            return e;
    }
    return -1;
}

Series Series::operator+(const Series& other) const {
    int n = std::min(order_, other.order_);
    Series out(n);
    for (int e = 0; e <= n; ++e)
        out.coeffs_[static_cast<std::size_t>(e)] =
            checked_add(coeff(e), other.coeff(e));
    return out;
}

Series Series::operator-(const Series& other) const {
    return *this + (-other);
}

Series Series::operator-() const {
    Series out(order_);
    for (int e = 0; e <= order_; ++e)
        out.coeffs_[static_cast<std::size_t>(e)] = -coeff(e);
    return out;
}

Series Series::operator*(const Series& other) const {
    int n = std::min(order_, other.order_);
    Series out(n);
    for (int i = 0; i <= n; ++i) {
        long long ci = coeff(i);
        if (ci == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            long long cj = other.coeff(j);
            if (cj == 0)
                continue;
            auto& slot = out.coeffs_[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(ci, cj));
        }
    }
    return out;
}

Series Series::truncated(int new_order) const {
    Series out(new_order);
    for (int e = 0; e <= new_order; ++e)
        out.set_coeff(e, coeff(e));
    return out;
}

std::string Series::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= order_; ++e) {
        long long c = coeff(e);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0)
            os << a;
        if (e >= 1) {
            if (a != 1)
                os << ' ';
            os << 'q';
            if (e > 1)
                os << '^' << e;
        }
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

Series geometric_inverse(long long e, int order) {
    if (e < 1)
        throw std::invalid_argument("geometric_inverse: exponent must be >= 1");
    Series s(order);
    for (long long t = 0; t * e <= order; ++t)
        s.set_coeff(static_cast<int>(t * e), 1);
    return s;
}

Series residue_product(long long modulus, const std::set<long long>& allowed, int order,
                       const std::vector<long long>& numerator_exponents) {
    Series out = Series::one(order);
    for (long long j = 1; j <= order; ++j) {
        if (allowed.count(((j % modulus) + modulus) % modulus))
            out = out * geometric_inverse(j, order);
    }
    for (long long e : numerator_exponents) {
        if (e <= order)
            out = out * (Series::one(order) - Series::monomial(static_cast<int>(e), 1, order));
    }
    return out;
}

Series pochhammer_finite(int sign, long long start, long long step, long long count, int order) {
    Series out = Series::one(order);
    for (long long h = 0; h < count; ++h) {
        long long e = start + h * step;
        if (e > order)
            break;  // remaining factors are 1 + O(q^{order+1})
        out = out * (Series::one(order) + Series::monomial(static_cast<int>(e), sign, order));
    }
    return out;
}

Series pochhammer_infinite(int sign, long long start, long long step, int order) {
    Series out = Series::one(order);
    for (long long e = start; e <= order; e += step)
        out = out * (Series::one(order) + Series::monomial(static_cast<int>(e), sign, order));
    return out;
}

}  // namespace partbij
