#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partbij {

/// Canonical integer partition: parts stored nonincreasing, zeros suppressed.
/// Immutable after construction; all operations below are pure functions.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes an arbitrary value list: sorts nonincreasing, drops
    /// zeros. Throws std::domain_error on negative values.
    static Partition of(std::vector<long long> values);

    /// Adopts a list already known to be nonincreasing and positive.
    static Partition from_nonincreasing(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;

    /// i-th largest part, 1-based.
    long long part(std::size_t i) const { return parts_.at(i - 1); }
    /// i-th smallest part, 1-based.
    long long smallest(std::size_t i) const { return parts_.at(parts_.size() - i); }

    long long multiplicity(long long value) const;
    std::map<long long, long long> multiplicities() const;

    /// Largest repeated part, 0 if all parts are distinct.
    long long largest_repeated() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<long long> parts_;
};

/// Multiset union of parts.
Partition unite(const Partition& p, const Partition& q);

/// Pointwise sum, shorter operand padded with zeros.
Partition sum(const Partition& p, const Partition& q);

/// Pointwise difference; throws std::domain_error unless p >= q pointwise.
Partition difference(const Partition& p, const Partition& q);

struct RepeatedParts {
    long long count = 0;                // D
    std::vector<long long> values;      // R_1 > R_2 > ... > R_D
};

/// Distinct part-values appearing at least twice, largest first.
RepeatedParts repeated_parts(const Partition& p);

/// Unique decomposition of a partition with all multiplicities <= 2 into
/// a distinct-parts prefix and alternating (repeated pair, distinct tail)
/// blocks, strictly interleaved.
struct Decomposition {
    struct Block {
        long long repeated = 0;  // appears exactly twice at this level
        Partition tail;          // distinct parts strictly below it
    };
    Partition prefix;
    std::vector<Block> blocks;

    Partition reassemble() const;
};

/// Throws std::domain_error if some multiplicity is >= 3.
Decomposition decompose(const Partition& p);

/// (P, S): parts strictly greater / strictly less than the largest repeated
/// part. For a distinct-parts partition returns (p, empty).
std::pair<Partition, Partition> prefix_suffix(const Partition& p);

/// Brace form {8,3,3,2,1}; empty partition prints as {}.
std::string to_text(const Partition& p);

/// Exponent form <1^2 3^1>; empty partition prints as <>.
std::string to_exponent_text(const Partition& p);

/// Mixed form for an A-class image: prefix in braces, tail in exponent
/// notation, e.g. {40,37}u<2^3 4^5>. Falls back to brace form when the
/// suffix is empty.
std::string to_mixed_text(const Partition& prefix, const Partition& suffix);

/// Accepts brace, exponent, and mixed forms. Throws std::invalid_argument
/// on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace partbij
