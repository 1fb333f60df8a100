#include "partbij/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partbij {

Partition Partition::of(std::vector<long long> values) {
    for (long long v : values) {
        if (v < 0)
            throw std::domain_error("partition parts must be nonnegative");
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    while (!values.empty() && values.back() == 0)
        values.pop_back();
    Partition p;
    p.parts_ = std::move(values);
    return p;
}

Partition Partition::from_nonincreasing(std::vector<long long> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Partition::multiplicity(long long value) const {
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), value, std::greater<>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<long long>(hi - lo);
}

std::map<long long, long long> Partition::multiplicities() const {
    std::map<long long, long long> m;
    for (long long v : parts_)
        ++m[v];
    return m;
}

long long Partition::largest_repeated() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] == parts_[i + 1])
            return parts_[i];
    }
    return 0;
}

Partition unite(const Partition& p, const Partition& q) {
    std::vector<long long> merged(p.length() + q.length());
    std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(), q.parts().end(),
               merged.begin(), std::greater<>());
    return Partition::from_nonincreasing(std::move(merged));
}

Partition sum(const Partition& p, const Partition& q) {
    std::size_t n = std::max(p.length(), q.length());
    std::vector<long long> out(n, 0);
    for (std::size_t i = 0; i < p.length(); ++i)
        out[i] += p.parts()[i];
    for (std::size_t i = 0; i < q.length(); ++i)
        out[i] += q.parts()[i];
    return Partition::of(std::move(out));
}

Partition difference(const Partition& p, const Partition& q) {
    if (q.length() > p.length())
        throw std::domain_error("difference: subtrahend has more parts");
    std::vector<long long> out(p.parts());
    for (std::size_t i = 0; i < q.length(); ++i) {
        out[i] -= q.parts()[i];
        if (out[i] < 0)
            throw std::domain_error("difference: not pointwise >=");
    }
    // Pointwise difference of nonincreasing sequences need not be
    // nonincreasing in general, so re-canonicalize.
    return Partition::of(std::move(out));
}

RepeatedParts repeated_parts(const Partition& p) {
    RepeatedParts r;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (j - i >= 2)
            r.values.push_back(parts[i]);
        i = j;
    }
    r.count = static_cast<long long>(r.values.size());
    return r;
}

Partition Decomposition::reassemble() const {
    Partition out = prefix;
    for (const auto& b : blocks) {
        out = unite(out, Partition::of({b.repeated, b.repeated}));
        out = unite(out, b.tail);
    }
    return out;
}

Decomposition decompose(const Partition& p) {
    Decomposition d;
    const auto& parts = p.parts();
    std::vector<long long> run;
    bool in_prefix = true;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        std::size_t mult = j - i;
        if (mult >= 3)
            throw std::domain_error("decompose: multiplicity exceeds 2");
        if (mult == 2) {
            if (in_prefix) {
                d.prefix = Partition::from_nonincreasing(run);
                in_prefix = false;
            } else {
                d.blocks.back().tail = Partition::from_nonincreasing(run);
            }
            run.clear();
            d.blocks.push_back({parts[i], {}});
        } else {
            run.push_back(parts[i]);
        }
        i = j;
    }
    if (in_prefix)
        d.prefix = Partition::from_nonincreasing(run);
    else
        d.blocks.back().tail = Partition::from_nonincreasing(run);
    return d;
}

std::pair<Partition, Partition> prefix_suffix(const Partition& p) {
    long long r1 = p.largest_repeated();
    if (r1 == 0)
        return {p, {}};
    std::vector<long long> above, below;
    for (long long v : p.parts()) {
        if (v > r1)
            above.push_back(v);
        else if (v < r1)
            below.push_back(v);
    }
    return {Partition::from_nonincreasing(std::move(above)),
            Partition::from_nonincreasing(std::move(below))};
}

std::string to_text(const Partition& p) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            os << ',';
        os << p.parts()[i];
    }
    os << '}';
    return os.str();
}

std::string to_exponent_text(const Partition& p) {
    std::ostringstream os;
    os << '<';
    bool first = true;
    // Exponent notation conventionally lists values increasing.
    auto mults = p.multiplicities();
    for (const auto& [v, m] : mults) {
        if (!first)
            os << ' ';
        os << v << '^' << m;
        first = false;
    }
    os << '>';
    return os.str();
}

std::string to_mixed_text(const Partition& prefix, const Partition& suffix) {
    if (suffix.empty())
        return to_text(prefix);
    return to_text(prefix) + "u" + to_exponent_text(suffix);
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
}

long long parse_int(std::string_view& s) {
    skip_ws(s);
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == 0)
        throw std::invalid_argument("partition parse: expected integer");
    long long v = std::stoll(std::string(s.substr(0, i)));
    s.remove_prefix(i);
    return v;
}

void expect(std::string_view& s, char c) {
    skip_ws(s);
    if (s.empty() || s.front() != c)
        throw std::invalid_argument(std::string("partition parse: expected '") + c + "'");
    s.remove_prefix(1);
}

std::vector<long long> parse_brace(std::string_view& s) {
    expect(s, '{');
    std::vector<long long> vals;
    skip_ws(s);
    if (!s.empty() && s.front() == '}') {
        s.remove_prefix(1);
        return vals;
    }
    while (true) {
        vals.push_back(parse_int(s));
        skip_ws(s);
        if (!s.empty() && s.front() == ',') {
            s.remove_prefix(1);
            continue;
        }
        expect(s, '}');
        return vals;
    }
}

std::vector<long long> parse_exponent(std::string_view& s) {
    expect(s, '<');
    std::vector<long long> vals;
    while (true) {
        skip_ws(s);
        if (!s.empty() && s.front() == '>') {
            s.remove_prefix(1);
            return vals;
        }
        long long v = parse_int(s);
        long long m = 1;
        skip_ws(s);
        if (!s.empty() && s.front() == '^') {
            s.remove_prefix(1);
            m = parse_int(s);
        }
        if (v == 0 || m < 0)
            throw std::invalid_argument("partition parse: bad exponent term");
        for (long long t = 0; t < m; ++t)
            vals.push_back(v);
    }
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string_view s = text;
    skip_ws(s);
    std::vector<long long> vals;
    if (s.empty())
        throw std::invalid_argument("partition parse: empty input");
    if (s.front() == '{') {
        vals = parse_brace(s);
        skip_ws(s);
        if (!s.empty() && (s.front() == 'u' || s.front() == 'U')) {
            s.remove_prefix(1);
            auto tail = parse_exponent(s);
            vals.insert(vals.end(), tail.begin(), tail.end());
        }
    } else if (s.front() == '<') {
        vals = parse_exponent(s);
    } else {
        throw std::invalid_argument("partition parse: expected '{' or '<'");
    }
    skip_ws(s);
    if (!s.empty())
        throw std::invalid_argument("partition parse: trailing input");
    return Partition::of(std::move(vals));
}

}  // namespace partbij
