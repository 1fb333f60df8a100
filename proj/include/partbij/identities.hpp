#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partbij/bivariate.hpp"
#include "partbij/series.hpp"

namespace partbij {

enum class IdentityId { rr1, rr2, rs1, rs2, rs3, sl27, sl27b, sl27c, mod5, mod9 };

/// Throws std::invalid_argument on unknown names.
IdentityId parse_identity(const std::string& name);
std::string identity_name(IdentityId id);
std::vector<IdentityId> all_identities();

/// Sum side of the named identity, truncated. The outer summation stops at
/// the first term whose minimal q-exponent exceeds the order.
Series sum_side(IdentityId id, int order);

/// Registered product side of the named identity, truncated.
Series product_side(IdentityId id, int order);

struct VerificationReport {
    std::string id;
    int order = 0;
    bool verified = false;
    // Populated on mismatch.
    int mismatch_exponent = -1;
    int mismatch_a_degree = -1;  // -1 for univariate checks
    long long lhs = 0;
    long long rhs = 0;

    std::string describe() const;
};

/// Coefficientwise comparison of sum and product sides.
VerificationReport verify_identity(IdentityId id, int order);

/// Verifies X1(a) = X3(aq), X2(a) = (1+aq) X2(aq), and
/// X3(a) = X1(a) + aq(1+aq) X1(aq), for family 'F' or 'E'.
VerificationReport check_qdifference_system(char family, int order);

/// Verifies build_E(i) = build_F(i) for i = 1, 2, 3.
VerificationReport check_ef_equal(int order);

/// Verifies that F1 at a = 1 generates the T-class counts.
VerificationReport check_t_gf(int order);

}  // namespace partbij
