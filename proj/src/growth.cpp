#include "cflab/growth.hpp"

namespace cflab {

Natural pell_like(Bound b, std::size_t k) {
  Natural prev = 0, cur = 1;
  if (k == 0) return prev;
  for (std::size_t i = 1; i < k; ++i) {
    Natural next = Natural(b.value) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Natural> pell_like_table(Bound b, std::size_t k) {
  std::vector<Natural> table;
  table.reserve(k + 1);
  table.emplace_back(0);
  if (k >= 1) table.emplace_back(1);
  for (std::size_t i = 2; i <= k; ++i) {
    table.push_back(Natural(b.value) * table[i - 1] + table[i - 2]);
  }
  return table;
}

Natural uniform_continuant(Bound b, std::size_t m) {
  if (m < 1) throw std::invalid_argument("length must be >= 1");
  return pell_like(b, m + 1);
}

bool tail_identity_check(Bound b, std::size_t k, const Natural& x) {
  if (k < 1 || x < 1) throw std::invalid_argument("need k >= 1 and x >= 1");
  // Left side by the raw continuant recurrence, right side by the F table.
  Natural prev = 0, cur = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Natural next = Natural(b.value) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  Natural lhs = x * cur + prev;
  Natural f_k = pell_like(b, k);
  Natural f_k1 = pell_like(b, k + 1);
  return lhs == f_k1 * x + f_k;
}

Natural growth_root_scaled(Bound b, unsigned decimal_digits) {
  // (B + sqrt(B^2+4))/2 scaled by 10^d: isqrt((B^2+4)*10^(2d)) truncates,
  // so the result is the floor of the true value.
  Natural scale = 1;
  for (unsigned i = 0; i < decimal_digits; ++i) scale *= 10;
  Natural radicand = (Natural(b.value) * b.value + 4) * scale * scale;
  Natural root = boost::multiprecision::sqrt(radicand);
  return (Natural(b.value) * scale + root) / 2;
}

std::string growth_root_string(Bound b, unsigned decimal_digits) {
  Natural scaled = growth_root_scaled(b, decimal_digits);
  std::string digits = scaled.str();
  // The integer part of the root has at most two digits for any sane B.
  std::size_t point = digits.size() - decimal_digits;
  return digits.substr(0, point) + "." + digits.substr(point);
}

std::size_t max_admissible_length(Bound b, const Natural& n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::size_t m = 0;
  Natural prev = 1;  // F_1 = K of the empty run
  Natural cur = b.value;  // F_2 = K(B)
  while (cur <= n) {
    ++m;
    Natural next = Natural(b.value) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return m;
}

}  // namespace cflab
