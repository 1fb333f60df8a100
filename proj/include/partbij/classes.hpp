#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "partbij/partition.hpp"
#include "partbij/series.hpp"

namespace partbij {

/// Calls visit for every partition of n (nonincreasing part buffer),
/// in lexicographically decreasing order. n == 0 yields the empty partition.
void for_each_partition(long long n,
                        const std::function<void(const std::vector<long long>&)>& visit);

/// Descriptor of a restricted partition class.
struct ClassSpec {
    enum class Kind { Gordon, Bressoud, A1, A2, A3, T, Congruence };

    Kind kind = Kind::A2;
    int k = 0;
    int i = 0;
    long long modulus = 0;
    std::set<long long> forbidden;  // residues mod modulus

    static ClassSpec gordon(int k, int i);
    static ClassSpec bressoud(int k, int i);
    static ClassSpec a1() { return of_kind(Kind::A1); }
    static ClassSpec a2() { return of_kind(Kind::A2); }
    static ClassSpec a3() { return of_kind(Kind::A3); }
    static ClassSpec t() { return of_kind(Kind::T); }
    static ClassSpec congruence(long long modulus, std::set<long long> forbidden);
    /// Parts not congruent to 0, +-i mod modulus.
    static ClassSpec congruence_pm(long long modulus, long long i);

    /// Textual names: gordon:k:i, bressoud:k:i, a1, a2, a3, t, cong:M:r1,r2,...
    static ClassSpec parse(std::string_view text);
    std::string name() const;

  private:
    static ClassSpec of_kind(Kind which) {
        ClassSpec spec;
        spec.kind = which;
        return spec;
    }
};

bool is_member(const Partition& p, const ClassSpec& spec);

/// All partitions of n in the class, lexicographically decreasing.
std::vector<Partition> enumerate_class(long long n, const ClassSpec& spec);

long long count_class(long long n, const ClassSpec& spec);

/// Generating function of the class counts, truncated at q^order.
Series class_gf(const ClassSpec& spec, int order);

}  // namespace partbij
