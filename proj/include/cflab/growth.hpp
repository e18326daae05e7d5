#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cflab/types.hpp"

namespace cflab {

// F_0 = 0, F_1 = 1, F_k = B*F_{k-1} + F_{k-2}. For B = 2 these are the Pell
// numbers, and the all-B continuant satisfies K(B,...,B [m]) = F_{m+1}.
Natural pell_like(Bound b, std::size_t k);

// Prefix table F_0..F_k.
std::vector<Natural> pell_like_table(Bound b, std::size_t k);

// Continuant of the length-m all-B sequence, via the F recurrence.
Natural uniform_continuant(Bound b, std::size_t m);

// True iff K(B,...,B [k], x) == F_{k+1}*x + F_k. Exists to be
// property-tested against the cf-core continuant.
bool tail_identity_check(Bound b, std::size_t k, const Natural& x);

// floor(((B + sqrt(B^2+4))/2) * 10^decimal_digits), by integer square root
// on scaled integers.
Natural growth_root_scaled(Bound b, unsigned decimal_digits);

// Decimal rendering of (B + sqrt(B^2+4))/2 with the given number of digits
// after the point (default gives > 30 significant digits).
std::string growth_root_string(Bound b, unsigned decimal_digits = 36);

// Largest m >= 0 with uniform_continuant(B, m) <= n; exact integer
// comparison against the F table, never logarithms.
std::size_t max_admissible_length(Bound b, const Natural& n);

}  // namespace cflab
