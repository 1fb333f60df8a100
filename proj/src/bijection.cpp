#include "partbij/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "partbij/classes.hpp"

namespace partbij {

namespace {

void require_member(const Partition& p, const ClassSpec& spec, const char* who) {
    if (!is_member(p, spec))
        throw std::domain_error(std::string(who) + ": partition " + to_text(p) +
                                " is not in class " + spec.name());
}

}  // namespace

Partition SDiagram::column_sums() const {
    std::vector<long long> sums(cols, 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            sums[c] += row[c];
    }
    return Partition::of(std::move(sums));
}

long long SDiagram::total() const {
    long long t = 0;
    for (const auto& row : rows)
        t = std::accumulate(row.begin(), row.end(), t);
    return t;
}

std::string SDiagram::render() const {
    std::size_t width = 1;
    for (const auto& row : rows) {
        for (long long v : row)
            width = std::max(width, std::to_string(v).size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c)
                os << ' ';
            std::string cell = std::to_string(c < rows[r].size() ? rows[r][c] : 0);
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

Partition f_forward(const Partition& p) {
    require_member(p, ClassSpec::gordon(3, 3), "f_forward");
    Decomposition dec = decompose(p);
    long long d = static_cast<long long>(dec.blocks.size());
    std::vector<long long> out(dec.prefix.parts());
    for (long long i = 1; i <= d; ++i) {
        long long r = dec.blocks[static_cast<std::size_t>(i - 1)].repeated;
        long long r_next = i < d ? dec.blocks[static_cast<std::size_t>(i)].repeated : 0;
        const Partition& tail = dec.blocks[static_cast<std::size_t>(i - 1)].tail;
        long long mult = r - r_next - static_cast<long long>(tail.length());
        for (long long t = 0; t < mult; ++t)
            out.push_back(2 * i);
        for (long long v : tail.parts())
            out.push_back(v + 2 * i);
    }
    return Partition::of(std::move(out));
}

Partition f_forward_recursive(const Partition& p) {
    if (p.empty())
        return {};
    require_member(p, ClassSpec::gordon(3, 3), "f_forward_recursive");
    long long r1 = p.largest_repeated();
    if (r1 == 0)
        return p;
    auto [prefix, suffix] = prefix_suffix(p);
    Partition twos = Partition::from_nonincreasing(
        std::vector<long long>(static_cast<std::size_t>(r1), 2));
    return unite(prefix, sum(twos, f_forward_recursive(suffix)));
}

Partition f_inverse(const Partition& lam) {
    require_member(lam, ClassSpec::a2(), "f_inverse");
    long long r1 = lam.largest_repeated();
    if (r1 == 0)
        return lam;
    long long d = r1 / 2;

    const auto& desc = lam.parts();  // nonincreasing
    std::size_t len = desc.size();
    std::size_t top = 0;             // prefix parts already assigned to rows
    std::size_t bottom = 0;          // sum of m_{2h} for completed stages

    std::vector<long long> repeated(static_cast<std::size_t>(d));
    std::vector<Partition> tails(static_cast<std::size_t>(d) + 1);

    for (long long stage = 1; stage <= d; ++stage) {
        long long shift = 2 * (stage - 1);
        std::size_t sub_len = len - bottom - top;
        // Label remaining parts 1..sub_len from the smallest; the stage's
        // repeated part is the largest label whose part value (reduced by
        // the accumulated shift) does not exceed the label.
        long long found = -1;
        for (std::size_t j = sub_len; j >= 1; --j) {
            long long value = desc[top + sub_len - j] - shift;
            if (value <= static_cast<long long>(j)) {
                found = static_cast<long long>(j);
                break;
            }
        }
        if (found < 0)
            throw std::domain_error("f_inverse: no admissible repeated part at stage " +
                                    std::to_string(stage));
        repeated[static_cast<std::size_t>(stage - 1)] = found;
        std::size_t block_len = sub_len - static_cast<std::size_t>(found);
        std::vector<long long> block(block_len);
        for (std::size_t t = 0; t < block_len; ++t)
            block[t] = desc[top + t] - shift;
        tails[static_cast<std::size_t>(stage - 1)] = Partition::from_nonincreasing(std::move(block));
        top += block_len;
        bottom += static_cast<std::size_t>(lam.multiplicity(2 * stage));
    }

    std::vector<long long> last(desc.begin() + static_cast<std::ptrdiff_t>(top),
                                desc.end() - static_cast<std::ptrdiff_t>(bottom));
    for (auto& v : last)
        v -= 2 * d;
    tails[static_cast<std::size_t>(d)] = Partition::from_nonincreasing(std::move(last));

    Partition out = tails[0];
    for (long long stage = 1; stage <= d; ++stage) {
        long long r = repeated[static_cast<std::size_t>(stage - 1)];
        out = unite(out, Partition::of({r, r}));
        out = unite(out, tails[static_cast<std::size_t>(stage)]);
    }
    return out;
}

SDiagram s_diagram(const Partition& p) {
    require_member(p, ClassSpec::gordon(3, 2), "s_diagram");
    Decomposition dec = decompose(p);
    std::size_t d = dec.blocks.size();
    long long r1 = d > 0 ? dec.blocks[0].repeated : 0;

    SDiagram diag;
    diag.cols = dec.prefix.length() + static_cast<std::size_t>(r1);
    diag.rows.resize(d + 1);

    std::size_t lead = 0;
    for (std::size_t row = 0; row <= d; ++row) {
        const Partition& block = row == 0 ? dec.prefix : dec.blocks[row - 1].tail;
        long long twos = row < d ? dec.blocks[row].repeated : 0;
        std::vector<long long> r(diag.cols, 0);
        std::size_t c = lead;
        for (long long v : block.parts())
            r[c++] = v;
        for (long long t = 0; t < twos; ++t)
            r[c++] = 2;
        diag.rows[row] = std::move(r);
        lead += block.length();
    }
    return diag;
}

Partition g_shift(const Partition& p) {
    require_member(p, ClassSpec::gordon(3, 3), "g_shift");
    std::vector<long long> out(p.parts());
    for (auto& v : out)
        ++v;
    return Partition::from_nonincreasing(std::move(out));
}

Partition g_unshift(const Partition& p) {
    std::vector<long long> out(p.parts());
    for (auto& v : out) {
        if (--v < 1)
            throw std::domain_error("g_unshift: part would vanish");
    }
    return Partition::from_nonincreasing(std::move(out));
}

Partition h_map(const Partition& lam) {
    require_member(lam, ClassSpec::a1(), "h_map");
    long long r1 = lam.largest_repeated();
    std::vector<long long> out;
    long long pending = 0;  // copies of the current even value still to decrement
    long long current = -1;
    for (long long v : lam.parts()) {
        if (v > r1) {
            out.push_back(v - 1);
            continue;
        }
        if (v % 2 == 0 && v >= 2) {
            if (v != current) {
                current = v;
                pending = 2;
            }
            if (pending > 0) {
                out.push_back(v - 1);
                --pending;
                continue;
            }
        }
        out.push_back(v);
    }
    return Partition::of(std::move(out));
}

Partition h_inverse(const Partition& mu) {
    require_member(mu, ClassSpec::a3(), "h_inverse");
    long long r = 0;  // largest repeated odd part
    for (const auto& [v, m] : mu.multiplicities()) {
        if (v % 2 != 0 && m >= 2)
            r = std::max(r, v);
    }
    long long two_j = r == 0 ? 0 : r + 1;
    std::vector<long long> out;
    long long pending = 0;
    long long current = -1;
    for (long long v : mu.parts()) {
        if (v > two_j) {
            out.push_back(v + 1);
            continue;
        }
        if (v % 2 != 0) {
            if (v != current) {
                current = v;
                pending = 2;
            }
            if (pending > 0) {
                out.push_back(v + 1);
                --pending;
                continue;
            }
        }
        out.push_back(v);
    }
    return Partition::of(std::move(out));
}

Partition fbar(const Partition& p) {
    require_member(p, ClassSpec::gordon(3, 3), "fbar");
    return h_map(f_forward(g_shift(p)));
}

Partition fbar_inverse(const Partition& mu) {
    require_member(mu, ClassSpec::a3(), "fbar_inverse");
    return g_unshift(f_inverse(h_inverse(mu)));
}

SDiagram sbar_diagram(const Partition& p) {
    require_member(p, ClassSpec::gordon(3, 3), "sbar_diagram");
    Decomposition dec = decompose(p);
    std::size_t d = dec.blocks.size();
    long long r1 = d > 0 ? dec.blocks[0].repeated : 0;

    SDiagram diag;
    diag.barred = true;
    diag.cols = dec.prefix.length() + static_cast<std::size_t>(r1) + (r1 > 0 ? 1 : 0);
    diag.rows.resize(d + 1);

    std::size_t lead = 0;
    for (std::size_t row = 0; row <= d; ++row) {
        const Partition& block = row == 0 ? dec.prefix : dec.blocks[row - 1].tail;
        long long rep = row < d ? dec.blocks[row].repeated : 0;
        std::vector<long long> r(diag.cols, 0);
        std::size_t c = lead;
        for (long long v : block.parts())
            r[c++] = v;
        if (rep >= 1) {
            for (long long t = 0; t < rep - 1; ++t)
                r[c++] = 2;
            r[c++] = 1;
            r[c++] = 1;
        }
        diag.rows[row] = std::move(r);
        lead += block.length();
    }
    return diag;
}

}  // namespace partbij
