#include "thompson/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <omp.h>

namespace thompson {

Word parse_word(std::string_view text) {
  Word word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    auto fail = [&] { return std::invalid_argument("malformed generator token '" + tok + "'"); };
    if (tok.size() < 2 || tok[0] != 'x') throw fail();
    std::string_view body(tok);
    body.remove_prefix(1);
    bool inverse = false;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      inverse = true;
      body.remove_suffix(3);
    }
    if (body.empty() || (body.size() > 1 && body[0] == '0')) throw fail();
    std::uint64_t k = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc() || ptr != body.data() + body.size()) throw fail();
    if (k > kMaxInputIndex) {
      throw std::invalid_argument("generator index in '" + tok + "' exceeds " + std::to_string(kMaxInputIndex));
    }
    word.push_back({static_cast<Index>(k), inverse});
  }
  return word;
}

std::string format_word(std::span<const Letter> word) {
  if (word.empty()) return "e";
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.index);
    if (l.inverse) out += "^-1";
  }
  return out;
}

Word invert_word(std::span<const Letter> word) {
  Word out(word.rbegin(), word.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

bool nf_is_reduced_shape(std::span<const Index> pos, std::span<const Index> neg) {
  // Two-pointer sweep over the distinct indices of both sequences.
  auto present = [](std::span<const Index> seq, Index v) { return std::binary_search(seq.begin(), seq.end(), v); };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pos.size() && j < neg.size()) {
    if (pos[i] < neg[j]) {
      ++i;
    } else if (neg[j] < pos[i]) {
      ++j;
    } else {
      const Index v = pos[i];
      if (!present(pos, v + 1) && !present(neg, v + 1)) return false;
      while (i < pos.size() && pos[i] == v) ++i;
      while (j < neg.size() && neg[j] == v) ++j;
    }
  }
  return true;
}

NormalForm::NormalForm(std::vector<Index> pos, std::vector<Index> neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  if (!std::is_sorted(pos_.begin(), pos_.end()) || !std::is_sorted(neg_.begin(), neg_.end())) {
    throw std::invalid_argument("normal form index sequences must be nondecreasing");
  }
  if (!nf_is_reduced_shape(pos_, neg_)) {
    throw std::invalid_argument("normal form is not reduced");
  }
}

NormalForm NormalForm::generator(Index k, bool inverse) {
  if (inverse) return NormalForm({}, {k}, Trusted{});
  return NormalForm({k}, {}, Trusted{});
}

Word NormalForm::to_word() const {
  Word w;
  w.reserve(length());
  for (Index i : pos_) w.push_back({i, false});
  for (auto it = neg_.rbegin(); it != neg_.rend(); ++it) w.push_back({*it, true});
  return w;
}

NormalForm NormalForm::parse(std::string_view text) { return nf_from_word(parse_word(text)); }

SemiNormal::SemiNormal(Letter l) {
  if (l.inverse) {
    neg_.push_back(l.index);
  } else {
    pos_.push_back(l.index);
  }
}

namespace {

// Sorted positive word equal to A*B for sorted positive words A, B. Each
// letter of B that moves left past a letter of A raises that letter by one.
std::vector<Index> merge_positive(const std::vector<Index>& a, const std::vector<Index>& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Index offset = 0;
  while (i < a.size() && j < b.size()) {
    if (b[j] < a[i] + offset) {
      out.push_back(b[j++]);
      ++offset;
    } else {
      out.push_back(a[i++] + offset);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i] + offset);
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

// Rewrites N^-1 P as P' N'^-1. Each x_p travels left through N^-1, smallest
// negative letter first: it passes x_n^-1 with n below its current index
// (gaining one), cancels an equal one, or stops and raises all remaining
// negative letters. Stop positions never move backwards across consecutive
// p, so one scan suffices.
void push_through(const std::vector<Index>& n, const std::vector<Index>& p, std::vector<Index>& p_out,
                  std::vector<Index>& n_out) {
  p_out.clear();
  n_out.clear();
  p_out.reserve(p.size());
  n_out.reserve(n.size());
  std::size_t t = 0;
  Index raise = 0;
  for (const Index j : p) {
    while (t < n.size() && n[t] + raise < j + n_out.size()) {
      n_out.push_back(n[t++] + raise);
    }
    const Index here = j + static_cast<Index>(n_out.size());
    if (t < n.size() && n[t] + raise == here) {
      ++t;
      continue;
    }
    if (t < n.size()) ++raise;
    p_out.push_back(here);
  }
  for (; t < n.size(); ++t) n_out.push_back(n[t] + raise);
}

}  // namespace

SemiNormal SemiNormal::multiply(const SemiNormal& lhs, const SemiNormal& rhs) {
  if (lhs.neg_.empty()) {
    return SemiNormal(merge_positive(lhs.pos_, rhs.pos_), rhs.neg_);
  }
  if (rhs.pos_.empty()) {
    return SemiNormal(lhs.pos_, merge_positive(rhs.neg_, lhs.neg_));
  }
  std::vector<Index> p_mid;
  std::vector<Index> n_mid;
  push_through(lhs.neg_, rhs.pos_, p_mid, n_mid);
  // (P1 N1^-1)(P2 N2^-1) = P1 P2' N1'^-1 N2^-1 = (P1 P2') (N2 N1')^-1
  return SemiNormal(merge_positive(lhs.pos_, p_mid), merge_positive(rhs.neg_, n_mid));
}

NormalForm SemiNormal::reduce() && {
  struct Entry {
    Index index;
    std::size_t pos_count;
    std::size_t neg_count;
    std::size_t removed_before;  // removals performed when this entry was finalized
  };
  std::vector<Entry> levels;
  {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < pos_.size() || j < neg_.size()) {
      Index v = 0;
      if (j == neg_.size() || (i < pos_.size() && pos_[i] <= neg_[j])) {
        v = pos_[i];
      } else {
        v = neg_[j];
      }
      Entry e{v, 0, 0, 0};
      while (i < pos_.size() && pos_[i] == v) ++i, ++e.pos_count;
      while (j < neg_.size() && neg_[j] == v) ++j, ++e.neg_count;
      levels.push_back(e);
    }
  }
  if (levels.empty()) return {};

  // Top-down: a pair at level i is removable while the nearest occupied level
  // above is not i+1. Each removal lowers every level above by one, which is
  // applied lazily through the removal counter.
  std::vector<Entry> kept;
  kept.reserve(levels.size());
  std::size_t removed = 0;
  bool has_above = false;
  std::uint64_t above = 0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    Entry e = *it;
    while (e.pos_count > 0 && e.neg_count > 0 && (!has_above || above != std::uint64_t{e.index} + 1)) {
      --e.pos_count;
      --e.neg_count;
      ++removed;
      if (has_above) --above;
    }
    if (e.pos_count + e.neg_count > 0) {
      e.removed_before = removed;
      kept.push_back(e);
      has_above = true;
      above = e.index;
    }
  }

  std::vector<Index> pos;
  std::vector<Index> neg;
  pos.reserve(pos_.size());
  neg.reserve(neg_.size());
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    const auto idx = static_cast<Index>(it->index - (removed - it->removed_before));
    pos.insert(pos.end(), it->pos_count, idx);
    neg.insert(neg.end(), it->neg_count, idx);
  }
  return NormalForm(std::move(pos), std::move(neg), NormalForm::Trusted{});
}

namespace {

constexpr std::size_t kLeafBlock = 16;
constexpr std::size_t kParallelCutoff = std::size_t{1} << 14;

SemiNormal semi_serial(std::span<const Letter> word) {
  if (word.size() <= kLeafBlock) {
    SemiNormal acc;
    for (const auto& l : word) acc = SemiNormal::multiply(acc, SemiNormal(l));
    return acc;
  }
  const auto mid = word.size() / 2;
  return SemiNormal::multiply(semi_serial(word.first(mid)), semi_serial(word.subspan(mid)));
}

SemiNormal semi_tasks(std::span<const Letter> word) {
  if (word.size() < kParallelCutoff) return semi_serial(word);
  const auto mid = word.size() / 2;
  SemiNormal left;
  SemiNormal right;
#pragma omp task shared(left) firstprivate(word, mid)
  left = semi_tasks(word.first(mid));
  right = semi_tasks(word.subspan(mid));
#pragma omp taskwait
  return SemiNormal::multiply(left, right);
}

}  // namespace

NormalForm nf_from_word(std::span<const Letter> word) { return semi_serial(word).reduce(); }

NormalForm nf_from_word_parallel(std::span<const Letter> word) {
  if (word.size() < kParallelCutoff) return nf_from_word(word);
  SemiNormal out;
#pragma omp parallel
#pragma omp single
  out = semi_tasks(word);
  return std::move(out).reduce();
}

NormalForm nf_from_word_quadratic(std::span<const Letter> word) {
  std::vector<Index> pos;
  std::vector<Index> neg;
  for (const auto& l : word) {
    const Index j = l.index;
    if (l.inverse) {
      // x_j N, sorted: x_j steps right over every smaller letter, gaining one each time.
      std::size_t t = 0;
      while (t < neg.size() && neg[t] < j + t) ++t;
      neg.insert(neg.begin() + static_cast<std::ptrdiff_t>(t), static_cast<Index>(j + t));
      continue;
    }
    std::size_t t = 0;
    while (t < neg.size() && neg[t] < j + t) ++t;
    if (t < neg.size() && neg[t] == j + t) {
      neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(t));
      continue;
    }
    for (std::size_t u = t; u < neg.size(); ++u) ++neg[u];
    const auto m = static_cast<Index>(j + t);
    auto at = std::upper_bound(pos.begin(), pos.end(), m);
    for (auto it = at; it != pos.end(); ++it) ++*it;
    pos.insert(at, m);
  }
  // Remove bad pairs one at a time, always the highest one.
  for (;;) {
    bool found = false;
    Index bad = 0;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
      const Index v = *it;
      const bool both = std::binary_search(neg.begin(), neg.end(), v);
      const bool next = std::binary_search(pos.begin(), pos.end(), v + 1) ||
                        std::binary_search(neg.begin(), neg.end(), v + 1);
      if (both && !next) {
        bad = v;
        found = true;
        break;
      }
    }
    if (!found) break;
    pos.erase(std::lower_bound(pos.begin(), pos.end(), bad));
    neg.erase(std::lower_bound(neg.begin(), neg.end(), bad));
    for (auto& v : pos) v -= (v > bad) ? 1 : 0;
    for (auto& v : neg) v -= (v > bad) ? 1 : 0;
  }
  return NormalForm(std::move(pos), std::move(neg));
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b) {
  return SemiNormal::multiply(SemiNormal(a), SemiNormal(b)).reduce();
}

NormalForm nf_invert(const NormalForm& a) { return NormalForm(a.neg(), a.pos(), NormalForm::Trusted{}); }

bool satisfies_a_criterion(const NormalForm& a, unsigned s) {
  if (a.pos().size() != a.neg().size()) return false;
  for (std::size_t q = 0; q < a.pos().size(); ++q) {
    const std::uint64_t bound = std::uint64_t{s} + q + 1;  // i_k < s + k with k = q + 1
    if (a.pos()[q] >= bound || a.neg()[q] >= bound) return false;
  }
  return true;
}

NormalForm nf_product_special(const NormalForm& a, const NormalForm& b, unsigned s) {
  if (!satisfies_a_criterion(a, s)) {
    throw ProductDomainError("left factor does not satisfy the A_s index criterion");
  }
  auto low = [&](const std::vector<Index>& v) { return !v.empty() && v.front() < s + 1; };
  if (low(b.pos()) || low(b.neg())) {
    throw ProductDomainError("right factor has an index below s+1");
  }
  const auto m = static_cast<Index>(a.pos().size());
  std::vector<Index> pos = a.pos();
  std::vector<Index> neg = a.neg();
  for (Index c : b.pos()) pos.push_back(c + m);
  for (Index d : b.neg()) neg.push_back(d + m);
  return NormalForm(std::move(pos), std::move(neg));
}

}  // namespace thompson
