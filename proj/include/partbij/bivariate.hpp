#pragma once

#include "partbij/series.hpp"

namespace partbij {

/// Truncated series in a and q with exact integer coefficients. Terms with
/// q-exponent above the order are dropped; for the families built here the
/// a-degree of a retained term never exceeds its q-exponent.
class BivariateSeries {
public:
    explicit BivariateSeries(int order);
    static BivariateSeries one(int order);

    int order() const { return order_; }
    long long coeff(int a_degree, int q_exponent) const;
    void add_term(int a_degree, int q_exponent, long long c);

    BivariateSeries operator+(const BivariateSeries& other) const;
    BivariateSeries operator*(const BivariateSeries& other) const;

    /// Multiplies by the monomial a^{da} q^{de}.
    BivariateSeries shifted(int a_degree, int q_exponent) const;

    /// Multiplies by a univariate series in q.
    BivariateSeries times(const Series& s) const;

    /// Multiplies by (1 + a q^e).
    BivariateSeries times_one_plus_aq(int e) const;

    bool operator==(const BivariateSeries& other) const;

    /// First differing (a_degree, q_exponent) within the common order, or
    /// (-1,-1) if equal.
    std::pair<int, int> first_mismatch(const BivariateSeries& other) const;

private:
    int order_;
    // coeffs_[e][d]
    std::vector<std::vector<long long>> coeffs_;
};

/// Two-variable sum sides of the mod-6 family (i = 1, 2, 3).
BivariateSeries build_F(int i, int order);

/// Double-sum counterparts satisfying the same q-difference system.
BivariateSeries build_E(int i, int order);

/// a -> aq: maps a^d q^e to a^d q^{e+d}. Exact to the truncation order.
BivariateSeries substitute_aq(const BivariateSeries& x);

/// Sets a = 1: sums coefficients over a-degree per q-exponent.
Series specialize_a1(const BivariateSeries& x);

}  // namespace partbij
