#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace partbij {

/// Checked 64-bit arithmetic. Coefficients stay far inside the range for
/// every order used here, so any overflow is a programming error and throws.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow (add)");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow (mul)");
    return r;
}

/// Truncated formal power series in q with exact integer coefficients:
/// c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}).
class Series {
public:
    explicit Series(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, 0) {
        if (order < 0)
            throw std::invalid_argument("series order must be >= 0");
    }

    static Series one(int order) {
        Series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static Series monomial(int exponent, long long coeff, int order) {
        Series s(order);
        if (exponent <= order)
            s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
        return s;
    }

    int order() const { return order_; }
    long long coeff(int e) const { return coeffs_.at(static_cast<std::size_t>(e)); }
    void set_coeff(int e, long long c) { coeffs_.at(static_cast<std::size_t>(e)) = c; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    /// Coefficientwise over 0..min(order, other.order).
    bool operator==(const Series& other) const;

    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator*(const Series& other) const;
    Series operator-() const;

    /// First exponent where coefficients differ, or -1 if equal to the
    /// common order.
    int first_mismatch(const Series& other) const;

    /// Drops coefficients above new_order (new_order <= order).
    Series truncated(int new_order) const;

    std::string to_text() const;

private:
    int order_;
    std::vector<long long> coeffs_;
};

/// 1/(1-q^e) = sum_{t>=0} q^{te}, truncated.
Series geometric_inverse(long long e, int order);

/// prod_{j>=1, j mod M in allowed} 1/(1-q^j), truncated. Optional explicit
/// numerator factors (1-q^e) for each listed exponent e <= order.
Series residue_product(long long modulus, const std::set<long long>& allowed, int order,
                       const std::vector<long long>& numerator_exponents = {});

/// prod_{h=0}^{count-1} (1 + sign * q^{start + h*step}), truncated.
/// count == 0 gives 1.
Series pochhammer_finite(int sign, long long start, long long step, long long count, int order);

/// Same product extended over all h with start + h*step <= order; omitted
/// factors are 1 + O(q^{order+1}).
Series pochhammer_infinite(int sign, long long start, long long step, int order);

}  // namespace partbij
