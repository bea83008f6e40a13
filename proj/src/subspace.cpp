#include "symprod/subspace.hpp"

namespace symprod::proj {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t binomial_index_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::size_t>(n - i) / (i + 1);
  return r;
}

std::size_t subset_rank_lex(int n, const std::vector<int>& subset) {
  // Count subsets preceding `subset` in lex order.
  std::size_t rank = 0;
  int k = static_cast<int>(subset.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < subset[i]; ++c)
      rank += binomial_index_count(n - c - 1, k - i - 1);
    prev = subset[i];
  }
  return rank;
}

int complement_sign(int n, const std::vector<int>& subset) {
  // Inversions of the permutation (subset ascending, complement ascending):
  // sum of elements minus the staircase C(k,2).
  long long s = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    s += subset[i] - static_cast<long long>(i);
  (void)n;
  return (s % 2 == 0) ? 1 : -1;
}

Int gaussian_binomial(int n, int k, const Int& q) {
  if (k < 0 || k > n) return 0;
  if (q < 2) fail(Errc::invalid_argument, "gaussian_binomial needs q >= 2");
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    Int qn, qd;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;  // exact: the product is an integer
}

}  // namespace symprod::proj
