#include "partbij/classes.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace partbij {

namespace {

void enumerate_rec(long long remaining, long long max_part, std::vector<long long>& buf,
                   const std::function<void(const std::vector<long long>&)>& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (long long p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        enumerate_rec(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

void for_each_partition(long long n,
                        const std::function<void(const std::vector<long long>&)>& visit) {
    if (n < 0)
        throw std::domain_error("for_each_partition: n must be >= 0");
    std::vector<long long> buf;
    enumerate_rec(n, n, buf, visit);
}

ClassSpec ClassSpec::gordon(int k, int i) {
    if (k < 2 || i < 1 || i > k)
        throw std::invalid_argument("gordon: need k >= 2 and 1 <= i <= k");
    ClassSpec s;
    s.kind = Kind::Gordon;
    s.k = k;
    s.i = i;
    return s;
}

ClassSpec ClassSpec::bressoud(int k, int i) {
    if (k < 2 || i < 1 || i >= k)
        throw std::invalid_argument("bressoud: need k >= 2 and 1 <= i < k");
    ClassSpec s;
    s.kind = Kind::Bressoud;
    s.k = k;
    s.i = i;
    return s;
}

ClassSpec ClassSpec::congruence(long long modulus, std::set<long long> forbidden) {
    if (modulus < 1)
        throw std::invalid_argument("congruence: modulus must be >= 1");
    ClassSpec s;
    s.kind = Kind::Congruence;
    s.modulus = modulus;
    for (long long r : forbidden)
        s.forbidden.insert(((r % modulus) + modulus) % modulus);
    return s;
}

ClassSpec ClassSpec::congruence_pm(long long modulus, long long i) {
    return congruence(modulus, {0, i, modulus - i});
}

ClassSpec ClassSpec::parse(std::string_view text) {
    auto split = [](std::string_view s, char sep) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = s.find(sep, pos);
            out.emplace_back(s.substr(pos, next - pos));
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
        return out;
    };
    auto to_int = [](const std::string& s) {
        long long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("class spec: bad integer '" + s + "'");
        return v;
    };

    auto fields = split(text, ':');
    const std::string& head = fields[0];
    if (head == "a1" && fields.size() == 1)
        return a1();
    if (head == "a2" && fields.size() == 1)
        return a2();
    if (head == "a3" && fields.size() == 1)
        return a3();
    if (head == "t" && fields.size() == 1)
        return t();
    if (head == "gordon" && fields.size() == 3)
        return gordon(static_cast<int>(to_int(fields[1])), static_cast<int>(to_int(fields[2])));
    if (head == "bressoud" && fields.size() == 3)
        return bressoud(static_cast<int>(to_int(fields[1])), static_cast<int>(to_int(fields[2])));
    if (head == "cong" && fields.size() == 3) {
        std::set<long long> residues;
        for (const auto& r : split(fields[2], ','))
            residues.insert(to_int(r));
        return congruence(to_int(fields[1]), std::move(residues));
    }
    throw std::invalid_argument("unknown class spec '" + std::string(text) + "'");
}

std::string ClassSpec::name() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Gordon: os << "gordon:" << k << ':' << i; break;
    case Kind::Bressoud: os << "bressoud:" << k << ':' << i; break;
    case Kind::A1: os << "a1"; break;
    case Kind::A2: os << "a2"; break;
    case Kind::A3: os << "a3"; break;
    case Kind::T: os << "t"; break;
    case Kind::Congruence: {
        os << "cong:" << modulus << ':';
        bool first = true;
        for (long long r : forbidden) {
            if (!first)
                os << ',';
            os << r;
            first = false;
        }
        break;
    }
    }
    return os.str();
}

namespace {

bool gordon_conditions(const Partition& p, int k, int i) {
    if (p.multiplicity(1) > i - 1)
        return false;
    auto mults = p.multiplicities();
    for (const auto& [v, m] : mults) {
        auto next = mults.find(v + 1);
        long long pair = m + (next == mults.end() ? 0 : next->second);
        if (pair > k - 1)
            return false;
    }
    return true;
}

// Parity condition on every window of k-1 consecutive parts whose extremes
// differ by at most 1; windows reaching past the part list are skipped.
bool bressoud_parity(const Partition& p, int k, int i) {
    const auto& parts = p.parts();
    std::size_t w = static_cast<std::size_t>(k) - 1;
    if (parts.size() < w)
        return true;
    for (std::size_t j = 0; j + w <= parts.size(); ++j) {
        if (parts[j] - parts[j + w - 1] <= 1) {
            long long s = 0;
            for (std::size_t h = 0; h < w; ++h)
                s += parts[j + h];
            if (((s - (i - 1)) % 2) != 0)
                return false;
        }
    }
    return true;
}

bool a2_conditions(const Partition& p, bool strengthen_a1) {
    long long r1 = p.largest_repeated();
    if (r1 % 2 != 0)
        return false;
    long long odd_bound = strengthen_a1 ? r1 + 2 : r1;
    auto mults = p.multiplicities();
    for (const auto& [v, m] : mults) {
        if (v % 2 != 0) {
            if (m > 1)
                return false;
            if (v < odd_bound)
                return false;
        }
    }
    for (long long e = 2; e < r1; e += 2) {
        auto it = mults.find(e);
        if (it == mults.end() || it->second < 2)
            return false;
    }
    return true;
}

bool a3_conditions(const Partition& p) {
    auto mults = p.multiplicities();
    long long r = 0;  // largest repeated odd part
    for (const auto& [v, m] : mults) {
        if (v % 2 != 0 && m >= 2)
            r = std::max(r, v);
    }
    long long two_j = r == 0 ? 0 : r + 1;
    for (long long v = 1; v < two_j; v += 2) {
        auto it = mults.find(v);
        if (it == mults.end() || it->second != 2)
            return false;
    }
    for (const auto& [v, m] : mults) {
        if (v > two_j && m > 1)
            return false;
    }
    return true;
}

bool no_consecutive(const Partition& p) {
    auto mults = p.multiplicities();
    for (const auto& [v, m] : mults) {
        if (mults.count(v + 1))
            return false;
    }
    return true;
}

}  // namespace

bool is_member(const Partition& p, const ClassSpec& spec) {
    switch (spec.kind) {
    case ClassSpec::Kind::Gordon:
        return gordon_conditions(p, spec.k, spec.i);
    case ClassSpec::Kind::Bressoud:
        return gordon_conditions(p, spec.k, spec.i) && bressoud_parity(p, spec.k, spec.i);
    case ClassSpec::Kind::A1:
        return a2_conditions(p, true);
    case ClassSpec::Kind::A2:
        return a2_conditions(p, false);
    case ClassSpec::Kind::A3:
        return a3_conditions(p);
    case ClassSpec::Kind::T:
        return a2_conditions(p, true) && no_consecutive(p);
    case ClassSpec::Kind::Congruence:
        for (long long v : p.parts()) {
            if (spec.forbidden.count(v % spec.modulus))
                return false;
        }
        return true;
    }
    return false;
}

std::vector<Partition> enumerate_class(long long n, const ClassSpec& spec) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<long long>& parts) {
        Partition p = Partition::from_nonincreasing(parts);
        if (is_member(p, spec))
            out.push_back(std::move(p));
    });
    return out;
}

long long count_class(long long n, const ClassSpec& spec) {
    long long count = 0;
    for_each_partition(n, [&](const std::vector<long long>& parts) {
        if (is_member(Partition::from_nonincreasing(parts), spec))
            ++count;
    });
    return count;
}

Series class_gf(const ClassSpec& spec, int order) {
    Series s(order);
    for (int n = 0; n <= order; ++n)
        s.set_coeff(n, count_class(n, spec));
    return s;
}

}  // namespace partbij
