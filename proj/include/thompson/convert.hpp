#ifndef THOMPSON_CONVERT_HPP
#define THOMPSON_CONVERT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/words.hpp"

namespace thompson {

/// Finite rooted binary tree, stored as its preorder shape (true = caret,
/// false = leaf). Leaves are the standard dyadic intervals of a subdivision
/// of [0,1].
class BinTree {
 public:
  /// Single leaf.
  BinTree() : shape_{false} {}

  static BinTree caret(const BinTree& left, const BinTree& right);

  /// Tree whose leaves, left to right, have the given depths. Throws
  /// std::invalid_argument if the depths do not describe a full tree.
  static BinTree from_leaf_depths(std::span<const std::uint32_t> depths);

  std::size_t leaf_count() const;
  std::vector<std::uint32_t> leaf_depths() const;

  /// Length of the maximal chain of left edges going up from each leaf that
  /// stays off the right spine.
  std::vector<std::uint32_t> leaf_exponents() const;

  /// Leaf start points and depths as standard dyadic intervals of [0,1].
  std::vector<Interval> leaf_intervals() const;

  /// "." for a leaf, "(L R)" for a caret.
  std::string to_string() const;

  friend bool operator==(const BinTree&, const BinTree&) = default;

 private:
  explicit BinTree(std::vector<bool> shape) : shape_(std::move(shape)) {}
  std::vector<bool> shape_;
};

/// Pair of trees with equal leaf counts; leaf k of the domain tree maps
/// affinely onto leaf k of the range tree.
struct TreePair {
  BinTree domain;
  BinTree range;

  friend bool operator==(const TreePair&, const TreePair&) = default;
};

/// PL map of x_k: identity on [0, 1 - 2^-k], a copy of x_0 scaled onto
/// [1 - 2^-k, 1]. x_0 has breakpoints (0,0) (1/2,1/4) (3/4,1/2) (1,1).
PLMap generator_map(Index k);

/// Composition of generator maps (product fg = f after g), folded as a
/// balanced tree.
PLMap word_to_pl(std::span<const Letter> word);
PLMap word_to_pl(const NormalForm& g);

/// Coarsest subdivision on which f is affine and carries standard dyadic
/// intervals onto standard dyadic intervals. The result is reduced.
TreePair pl_to_treepair(const PLMap& f);

/// Map induced by a tree pair.
PLMap treepair_to_pl(const TreePair& tp);

/// Normal form from leaf exponents: range tree gives the positive part,
/// domain tree the negative part.
NormalForm treepair_to_nf(const TreePair& tp);

NormalForm pl_to_word(const PLMap& f);

}  // namespace thompson

#endif  // THOMPSON_CONVERT_HPP
