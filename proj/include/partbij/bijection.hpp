#pragma once

#include <string>
#include <vector>

#include "partbij/partition.hpp"

namespace partbij {

/// Matrix encoding a source partition (rows) and its image under the map
/// (column sums). The barred variant ends each row's run of 2's with two 1's.
struct SDiagram {
    std::vector<std::vector<long long>> rows;
    std::size_t cols = 0;
    bool barred = false;

    Partition column_sums() const;
    long long total() const;
    std::string render() const;
};

/// The partition map: distinct blocks keep their parts (shifted by 2i),
/// each repeated pair R_i spreads into copies of 2i. Requires membership
/// in the Gordon k=3, i=2 class; weight preserving.
Partition f_forward(const Partition& p);

/// Recursive formulation of the same map; agrees with f_forward everywhere.
Partition f_forward_recursive(const Partition& p);

/// Inverse by iterative peeling of the image's part list. Requires
/// membership in the A2 class.
Partition f_inverse(const Partition& lam);

/// Diagram whose column sums equal f_forward(p).
SDiagram s_diagram(const Partition& p);

/// Adds 1 to every part. Gordon(3,3) -> Gordon(3,1).
Partition g_shift(const Partition& p);

/// Subtracts 1 from every part (inverse of g_shift).
Partition g_unshift(const Partition& p);

/// A1 -> A3: subtracts 1 from each part above the largest repeated even
/// part and from two copies of each even value up to it.
Partition h_map(const Partition& lam);

/// A3 -> A1: adds 1 to two copies of each repeated odd value and to every
/// part above the repeated range.
Partition h_inverse(const Partition& mu);

/// Composite bijection Gordon(3,3) -> A3 (h after f after g_shift).
Partition fbar(const Partition& p);

/// A3 -> Gordon(3,3).
Partition fbar_inverse(const Partition& mu);

/// Barred diagram whose column sums equal fbar(p).
SDiagram sbar_diagram(const Partition& p);

}  // namespace partbij
