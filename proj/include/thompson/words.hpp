#ifndef THOMPSON_WORDS_HPP
#define THOMPSON_WORDS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thompson {

/// Generator index k of x_k.
using Index = std::uint32_t;

/// Largest index accepted from text input; leaves headroom for the index
/// growth that rewriting produces.
inline constexpr Index kMaxInputIndex = (1u << 30) - 1;

struct Letter {
  Index index = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Arbitrary (unreduced) word over x_0, x_1, ... and their inverses.
using Word = std::vector<Letter>;

/// Whitespace-separated `x<k>` / `x<k>^-1` tokens; "e" or empty for the
/// empty word. Throws std::invalid_argument on malformed tokens.
Word parse_word(std::string_view text);
std::string format_word(std::span<const Letter> word);

/// Word inverse: reversed, each letter inverted.
Word invert_word(std::span<const Letter> word);

/// Unique normal form x_{i1}...x_{iu} x_{jv}^-1...x_{j1}^-1: pos = i1 <= ... <= iu,
/// neg = j1 <= ... <= jv, and whenever x_i and x_i^-1 both occur, x_{i+1} or
/// x_{i+1}^-1 occurs too.
class NormalForm {
 public:
  NormalForm() = default;

  /// Validates monotonicity and reducedness; throws std::invalid_argument.
  NormalForm(std::vector<Index> pos, std::vector<Index> neg);

  static NormalForm generator(Index k, bool inverse = false);

  const std::vector<Index>& pos() const noexcept { return pos_; }
  const std::vector<Index>& neg() const noexcept { return neg_; }

  bool is_identity() const noexcept { return pos_.empty() && neg_.empty(); }
  std::size_t length() const noexcept { return pos_.size() + neg_.size(); }

  Word to_word() const;
  std::string to_string() const { return format_word(to_word()); }
  /// Parses any word and normalizes it.
  static NormalForm parse(std::string_view text);

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  struct Trusted {};
  NormalForm(std::vector<Index> pos, std::vector<Index> neg, Trusted)
      : pos_(std::move(pos)), neg_(std::move(neg)) {}
  friend class SemiNormal;
  friend NormalForm nf_invert(const NormalForm&);
  friend NormalForm nf_product_special(const NormalForm&, const NormalForm&, unsigned);

  std::vector<Index> pos_;
  std::vector<Index> neg_;
};

/// P N^-1 with P, N sorted ascending but not necessarily reduced. Products
/// of semi-normal forms are computed with linear merges.
class SemiNormal {
 public:
  SemiNormal() = default;
  SemiNormal(std::vector<Index> pos, std::vector<Index> neg) : pos_(std::move(pos)), neg_(std::move(neg)) {}
  explicit SemiNormal(const NormalForm& nf) : pos_(nf.pos()), neg_(nf.neg()) {}
  explicit SemiNormal(Letter l);

  const std::vector<Index>& pos() const noexcept { return pos_; }
  const std::vector<Index>& neg() const noexcept { return neg_; }

  /// this * rhs, still semi-normal.
  static SemiNormal multiply(const SemiNormal& lhs, const SemiNormal& rhs);

  /// Removes pairs x_i ... x_i^-1 with no x_{i+1}^{+-1}, shifting higher
  /// indices down.
  NormalForm reduce() &&;

 private:
  std::vector<Index> pos_;
  std::vector<Index> neg_;
};

/// Normal form by divide and conquer over the word: O(n log n).
NormalForm nf_from_word(std::span<const Letter> word);

/// Same result; the top levels of the recursion run as OpenMP tasks.
NormalForm nf_from_word_parallel(std::span<const Letter> word);

/// Serial reference: one letter at a time into sorted vectors, O(n^2).
NormalForm nf_from_word_quadratic(std::span<const Letter> word);

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b);

/// Product of several normal forms, reduced once at the end.
template <typename... Rest>
NormalForm nf_product(const NormalForm& first, const Rest&... rest) {
  SemiNormal acc(first);
  ((acc = SemiNormal::multiply(acc, SemiNormal(rest))), ...);
  return std::move(acc).reduce();
}
NormalForm nf_invert(const NormalForm& a);

/// Raised when nf_product_special is called outside its domain.
class ProductDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index criterion for membership in A_s: |pos| == |neg| == m and
/// i_k - k < s, j_k - k < s for k = 1..m.
bool satisfies_a_criterion(const NormalForm& a, unsigned s);

/// Closed formula for a*b when a satisfies the A_s criterion and every index
/// of b is at least s+1:
///   x_{i1}..x_{im} x_{c1+m}..x_{cu+m} x_{dv+m}^-1..x_{d1+m}^-1 x_{jm}^-1..x_{j1}^-1.
NormalForm nf_product_special(const NormalForm& a, const NormalForm& b, unsigned s);

/// Reducedness condition alone; both sequences are assumed sorted.
bool nf_is_reduced_shape(std::span<const Index> pos, std::span<const Index> neg);

}  // namespace thompson

#endif  // THOMPSON_WORDS_HPP
