#include "partbij/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "partbij/classes.hpp"

namespace partbij {

IdentityId parse_identity(const std::string& name) {
    for (IdentityId id : all_identities()) {
        if (identity_name(id) == name)
            return id;
    }
    throw std::invalid_argument("unknown identity '" + name + "'");
}

std::string identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::rr1: return "rr1";
    case IdentityId::rr2: return "rr2";
    case IdentityId::rs1: return "rs1";
    case IdentityId::rs2: return "rs2";
    case IdentityId::rs3: return "rs3";
    case IdentityId::sl27: return "sl27";
    case IdentityId::sl27b: return "sl27b";
    case IdentityId::sl27c: return "sl27c";
    case IdentityId::mod5: return "mod5";
    case IdentityId::mod9: return "mod9";
    }
    throw std::invalid_argument("bad identity id");
}

std::vector<IdentityId> all_identities() {
    return {IdentityId::rr1,   IdentityId::rr2,   IdentityId::rs1,  IdentityId::rs2,
            IdentityId::rs3,   IdentityId::sl27,  IdentityId::sl27b, IdentityId::sl27c,
            IdentityId::mod5,  IdentityId::mod9};
}

namespace {

Series inverse_pochhammer(long long step, long long n, int order) {
    Series out = Series::one(order);
    for (long long h = 1; h <= n; ++h)
        out = out * geometric_inverse(h * step, order);
    return out;
}

// Generic single-sum shape: sum_j s^j q^{exp(j)} (q;q^2)_j^{odd?} *
// (+-q^{lin(j)};q)_inf / (q^2;q^2)_j, assembled per identity below.
Series rogers_ramanujan_sum(int order, bool shifted) {
    Series out(order);
    for (long long j = 0;; ++j) {
        long long base = shifted ? j * j + j : j * j;
        if (base > order)
            break;
        out = out + Series::monomial(static_cast<int>(base), 1, order) *
                        inverse_pochhammer(1, j, order);
    }
    return out;
}

Series rogers_selberg_sum(int order, long long base_of(long long), long long product_start_of(long long),
                          bool odd_pochhammer, bool alternating) {
    Series out(order);
    for (long long j = 0;; ++j) {
        long long base = base_of(j);
        if (base > order)
            break;
        Series term = Series::monomial(static_cast<int>(base), alternating && (j % 2) ? -1 : 1, order) *
                      pochhammer_infinite(+1, product_start_of(j), 1, order) *
                      inverse_pochhammer(2, j, order);
        if (odd_pochhammer)
            term = term * pochhammer_finite(-1, 1, 2, j, order);
        out = out + term;
    }
    return out;
}

Series mod9_sum(int order) {
    Series out(order);
    for (long long j = 0;; ++j) {
        long long base = 3 * j * j + 3 * j;
        if (base > order)
            break;
        Series term = Series::monomial(static_cast<int>(base), 1, order) *
                      pochhammer_infinite(+1, 3 * j + 3, 3, order) *
                      inverse_pochhammer(3, j, order) *
                      geometric_inverse(3 * j + 2, order);
        for (long long h = j + 1; 3 * h + 1 <= order; ++h) {
            // 1 + q^{3h+1}/(1-q^{3h+1}) + q^{3h+2}/(1-q^{3h+2})
            Series factor = geometric_inverse(3 * h + 1, order) +
                            geometric_inverse(3 * h + 2, order) - Series::one(order);
            term = term * factor;
        }
        out = out + term;
    }
    return out;
}

}  // namespace

Series sum_side(IdentityId id, int order) {
    switch (id) {
    case IdentityId::rr1:
        return rogers_ramanujan_sum(order, false);
    case IdentityId::rr2:
        return rogers_ramanujan_sum(order, true);
    case IdentityId::rs1:
        return rogers_selberg_sum(
            order, [](long long j) { return 2 * j * j + 2 * j; },
            [](long long j) { return 2 * j + 2; }, false, false);
    case IdentityId::rs2:
        return rogers_selberg_sum(
            order, [](long long j) { return 2 * j * j + 2 * j; },
            [](long long j) { return 2 * j + 1; }, false, false);
    case IdentityId::rs3:
        return rogers_selberg_sum(
            order, [](long long j) { return 2 * j * j; },
            [](long long j) { return 2 * j + 1; }, false, false);
    case IdentityId::sl27:
        return rogers_selberg_sum(
            order, [](long long j) { return 2 * j * j + 2 * j; },
            [](long long j) { return 2 * j + 2; }, true, false);
    case IdentityId::sl27b:
        return pochhammer_infinite(+1, 1, 1, order);
    case IdentityId::sl27c:
        return rogers_selberg_sum(
            order, [](long long j) { return 2 * j * j; },
            [](long long j) { return 2 * j + 1; }, true, false);
    case IdentityId::mod5:
        return rogers_selberg_sum(
            order, [](long long j) { return 3 * j * j - 2 * j; },
            [](long long j) { return 2 * j + 1; }, false, true);
    case IdentityId::mod9:
        return mod9_sum(order);
    }
    throw std::invalid_argument("bad identity id");
}

Series product_side(IdentityId id, int order) {
    switch (id) {
    case IdentityId::rr1:
        return residue_product(5, {1, 4}, order);
    case IdentityId::rr2:
        return residue_product(5, {2, 3}, order);
    case IdentityId::rs1:
        return residue_product(7, {2, 3, 4, 5}, order);
    case IdentityId::rs2:
        return residue_product(7, {1, 3, 4, 6}, order);
    case IdentityId::rs3:
        return residue_product(7, {1, 2, 5, 6}, order);
    case IdentityId::sl27:
        return residue_product(6, {2, 3, 4}, order);
    case IdentityId::sl27b:
        return residue_product(6, {1, 3, 5}, order);
    case IdentityId::sl27c: {
        // prod (1-q^{3j})(1-q^{6j-3}) / (1-q^j)
        std::vector<long long> numerators;
        for (long long j = 1; 3 * j <= order; ++j)
            numerators.push_back(3 * j);
        for (long long j = 1; 6 * j - 3 <= order; ++j)
            numerators.push_back(6 * j - 3);
        return residue_product(1, {0}, order, numerators);
    }
    case IdentityId::mod5:
        return residue_product(5, {2, 3}, order);
    case IdentityId::mod9:
        return residue_product(9, {2, 3, 4, 5, 6, 7}, order);
    }
    throw std::invalid_argument("bad identity id");
}

std::string VerificationReport::describe() const {
    std::ostringstream os;
    if (verified) {
        os << id << ": verified to q^" << order;
    } else {
        os << id << ": MISMATCH at ";
        if (mismatch_a_degree >= 0)
            os << "a^" << mismatch_a_degree << ' ';
        os << "q^" << mismatch_exponent << " (lhs " << lhs << ", rhs " << rhs << ")";
    }
    return os.str();
}

namespace {

VerificationReport compare(const std::string& name, const Series& lhs, const Series& rhs,
                           int order) {
    VerificationReport rep;
    rep.id = name;
    rep.order = order;
    int e = lhs.first_mismatch(rhs);
    if (e < 0) {
        rep.verified = true;
    } else {
        rep.mismatch_exponent = e;
        rep.lhs = lhs.coeff(e);
        rep.rhs = rhs.coeff(e);
    }
    return rep;
}

VerificationReport compare(const std::string& name, const BivariateSeries& lhs,
                           const BivariateSeries& rhs, int order) {
    VerificationReport rep;
    rep.id = name;
    rep.order = order;
    auto [d, e] = lhs.first_mismatch(rhs);
    if (d < 0) {
        rep.verified = true;
    } else {
        rep.mismatch_a_degree = d;
        rep.mismatch_exponent = e;
        rep.lhs = lhs.coeff(d, e);
        rep.rhs = rhs.coeff(d, e);
    }
    return rep;
}

}  // namespace

VerificationReport verify_identity(IdentityId id, int order) {
    return compare(identity_name(id), sum_side(id, order), product_side(id, order), order);
}

VerificationReport check_qdifference_system(char family, int order) {
    if (family != 'F' && family != 'E')
        throw std::invalid_argument("q-difference family must be 'F' or 'E'");
    auto build = family == 'F' ? build_F : build_E;
    BivariateSeries x1 = build(1, order);
    BivariateSeries x2 = build(2, order);
    BivariateSeries x3 = build(3, order);

    std::string base(1, family);
    auto rep = compare(base + "1(a) = " + base + "3(aq)", x1, substitute_aq(x3), order);
    if (!rep.verified)
        return rep;
    BivariateSeries x2q = substitute_aq(x2);
    rep = compare(base + "2(a) = (1+aq) " + base + "2(aq)", x2, x2q.times_one_plus_aq(1), order);
    if (!rep.verified)
        return rep;
    BivariateSeries x1q = substitute_aq(x1);
    BivariateSeries rhs = x1 + x1q.shifted(1, 1) + x1q.shifted(2, 2);
    rep = compare(base + "3(a) = " + base + "1(a) + aq(1+aq) " + base + "1(aq)", x3, rhs, order);
    if (!rep.verified)
        return rep;
    rep.id = std::string(1, family) + "-system";
    return rep;
}

VerificationReport check_ef_equal(int order) {
    for (int i = 1; i <= 3; ++i) {
        auto rep = compare("E" + std::to_string(i) + " = F" + std::to_string(i),
                           build_E(i, order), build_F(i, order), order);
        if (!rep.verified)
            return rep;
    }
    VerificationReport rep;
    rep.id = "ef-equal";
    rep.order = order;
    rep.verified = true;
    return rep;
}

VerificationReport check_t_gf(int order) {
    return compare("t-gf", specialize_a1(build_F(1, order)), class_gf(ClassSpec::t(), order),
                   order);
}

}  // namespace partbij
