// Independent reference implementations used only by the tests.
#ifndef THOMPSON_TESTS_ORACLES_HPP
#define THOMPSON_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "thompson/convert.hpp"
#include "thompson/plmap.hpp"
#include "thompson/subgroups.hpp"
#include "thompson/timing.hpp"
#include "thompson/words.hpp"

namespace oracle {

using thompson::Index;
using thompson::Letter;
using thompson::Word;

// One rewriting step at the leftmost redex. Rules:
//   x_j^e x_i      -> x_i x_{j+1}^e     (i < j)
//   x_i^-1 x_j^e   -> x_{j+1}^e x_i^-1  (i < j)
//   x_i x_i^-1, x_i^-1 x_i -> empty
inline bool rewrite_once(Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const Letter p = w[k];
    const Letter q = w[k + 1];
    if (p.index == q.index && p.inverse != q.inverse) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
      return true;
    }
    if (!q.inverse && q.index < p.index) {
      w[k] = q;
      w[k + 1] = Letter{p.index + 1, p.inverse};
      return true;
    }
    if (p.inverse && p.index < q.index) {
      w[k] = Letter{q.index + 1, q.inverse};
      w[k + 1] = p;
      return true;
    }
  }
  return false;
}

// Brute-force normal form: rewrite to positives-then-negatives, then drop
// the lowest pair x_i .. x_i^-1 with no x_{i+1}^{+-1} until none is left.
inline thompson::NormalForm normal_form(Word w) {
  std::size_t steps = 0;
  while (rewrite_once(w)) {
    if (++steps > 1000000) throw std::runtime_error("rewriting did not terminate");
  }
  std::vector<Index> pos;
  std::vector<Index> neg;
  for (const Letter& l : w) {
    if (l.inverse) {
      neg.push_back(l.index);
    } else {
      pos.push_back(l.index);
    }
  }
  std::reverse(neg.begin(), neg.end());
  if (!std::is_sorted(pos.begin(), pos.end()) || !std::is_sorted(neg.begin(), neg.end())) {
    throw std::runtime_error("terminal word is not positives then negatives");
  }
  auto has = [](const std::vector<Index>& v, Index i) { return std::binary_search(v.begin(), v.end(), i); };
  for (;;) {
    std::optional<Index> bad;
    for (const Index i : pos) {
      if (has(neg, i) && !has(pos, i + 1) && !has(neg, i + 1)) {
        bad = i;
        break;
      }
    }
    if (!bad) break;
    pos.erase(std::find(pos.begin(), pos.end(), *bad));
    neg.erase(std::find(neg.begin(), neg.end(), *bad));
    for (auto& v : pos) v -= v > *bad ? 1 : 0;
    for (auto& v : neg) v -= v > *bad ? 1 : 0;
  }
  return thompson::NormalForm(pos, neg);
}

// Validates every PLMap invariant from the breakpoints alone.
inline bool valid_plmap(const thompson::PLMap& f) {
  const auto bp = f.breakpoints();
  if (bp.size() < 2) return false;
  if (bp.front().x != thompson::Dyadic(0) || bp.front().y != thompson::Dyadic(0)) return false;
  if (bp.back().x != thompson::Dyadic(1) || bp.back().y != thompson::Dyadic(1)) return false;
  std::optional<std::int64_t> prev;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const auto dx = bp[i + 1].x - bp[i].x;
    const auto dy = bp[i + 1].y - bp[i].y;
    if (dx.sign() <= 0 || dy.sign() <= 0) return false;
    const auto e = dy.log2_ratio(dx);
    if (!e) return false;
    if (prev && *prev == *e) return false;  // collinear point left in
    prev = e;
  }
  return true;
}

inline thompson::Dyadic random_unit_dyadic(thompson::Rng& rng, unsigned max_scale = 12) {
  std::uniform_int_distribution<unsigned> sc(0, max_scale);
  const unsigned q = sc(rng);
  std::uniform_int_distribution<long> num(0, 1L << q);
  return thompson::Dyadic::make(num(rng), q);
}

inline thompson::NormalForm random_nf(thompson::Rng& rng, std::size_t max_len = 40, Index max_index = 6) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return thompson::nf_from_word(thompson::random_word(len(rng), max_index, rng));
}

inline thompson::PLMap random_pl(thompson::Rng& rng, std::size_t max_len = 40, Index max_index = 6) {
  return thompson::word_to_pl(random_nf(rng, max_len, max_index));
}

}  // namespace oracle

#endif  // THOMPSON_TESTS_ORACLES_HPP
