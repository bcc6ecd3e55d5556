#include "thompson/convert.hpp"

#include <stdexcept>

namespace thompson {

BinTree BinTree::caret(const BinTree& left, const BinTree& right) {
  std::vector<bool> shape;
  shape.reserve(1 + left.shape_.size() + right.shape_.size());
  shape.push_back(true);
  shape.insert(shape.end(), left.shape_.begin(), left.shape_.end());
  shape.insert(shape.end(), right.shape_.begin(), right.shape_.end());
  return BinTree(std::move(shape));
}

BinTree BinTree::from_leaf_depths(std::span<const std::uint32_t> depths) {
  // Preorder emission: descend with carets until the next leaf's depth is
  // reached. `open` holds the depths of pending right subtrees.
  std::vector<bool> shape;
  std::vector<std::uint32_t> open{0};
  std::size_t next = 0;
  while (!open.empty()) {
    const auto d = open.back();
    open.pop_back();
    if (next == depths.size() || depths[next] < d) {
      throw std::invalid_argument("leaf depths do not form a binary tree");
    }
    if (depths[next] == d) {
      shape.push_back(false);
      ++next;
      continue;
    }
    shape.push_back(true);
    open.push_back(d + 1);  // right child, visited after the left subtree
    open.push_back(d + 1);
  }
  if (next != depths.size()) {
    throw std::invalid_argument("leaf depths do not form a binary tree");
  }
  return BinTree(std::move(shape));
}

std::size_t BinTree::leaf_count() const {
  std::size_t n = 0;
  for (bool b : shape_) n += b ? 0 : 1;
  return n;
}

std::vector<std::uint32_t> BinTree::leaf_depths() const {
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> open{0};
  for (bool caret_here : shape_) {
    const auto d = open.back();
    open.pop_back();
    if (caret_here) {
      open.push_back(d + 1);
      open.push_back(d + 1);
    } else {
      out.push_back(d);
    }
  }
  return out;
}

std::vector<std::uint32_t> BinTree::leaf_exponents() const {
  struct Node {
    bool right_spine;
    std::uint32_t chain;
  };
  std::vector<std::uint32_t> out;
  std::vector<Node> open{{true, 0}};
  for (bool caret_here : shape_) {
    const Node n = open.back();
    open.pop_back();
    if (!caret_here) {
      out.push_back(n.chain);
      continue;
    }
    const Node right{n.right_spine, 0};
    const Node left{false, n.right_spine ? 0u : n.chain + 1};
    open.push_back(right);
    open.push_back(left);
  }
  return out;
}

std::vector<Interval> BinTree::leaf_intervals() const {
  std::vector<Interval> out;
  Dyadic x(0);
  for (auto d : leaf_depths()) {
    Dyadic next = x + Dyadic::pow2(-static_cast<std::int64_t>(d));
    out.push_back({x, next});
    x = std::move(next);
  }
  return out;
}

std::string BinTree::to_string() const {
  std::string out;
  std::vector<int> pending;  // children still to print for each open caret
  for (bool caret_here : shape_) {
    if (caret_here) {
      out += '(';
      pending.push_back(2);
      continue;
    }
    out += '.';
    while (!pending.empty()) {
      if (--pending.back() == 1) {
        out += ' ';
        break;
      }
      out += ')';
      pending.pop_back();
    }
  }
  return out;
}

PLMap generator_map(Index k) {
  const Dyadic len = Dyadic::pow2(-static_cast<std::int64_t>(k));
  const Dyadic start = Dyadic(1) - len;
  std::vector<Breakpoint> pts;
  if (k > 0) pts.push_back({Dyadic(0), Dyadic(0)});
  pts.push_back({start, start});
  pts.push_back({start + len.shifted(-1), start + len.shifted(-2)});
  pts.push_back({start + len.shifted(-1) + len.shifted(-2), start + len.shifted(-1)});
  pts.push_back({Dyadic(1), Dyadic(1)});
  return PLMap(std::move(pts));
}

namespace {

template <typename LetterAt>
PLMap fold(std::size_t lo, std::size_t hi, const LetterAt& letter_at) {
  if (hi - lo == 1) {
    const Letter l = letter_at(lo);
    PLMap g = generator_map(l.index);
    return l.inverse ? pl_invert(g) : g;
  }
  const auto mid = lo + (hi - lo) / 2;
  return pl_compose(fold(lo, mid, letter_at), fold(mid, hi, letter_at));
}

}  // namespace

PLMap word_to_pl(std::span<const Letter> word) {
  if (word.empty()) return PLMap::identity();
  return fold(0, word.size(), [&](std::size_t i) { return word[i]; });
}

PLMap word_to_pl(const NormalForm& g) {
  if (g.is_identity()) return PLMap::identity();
  const auto& pos = g.pos();
  const auto& neg = g.neg();
  return fold(0, g.length(), [&](std::size_t i) {
    if (i < pos.size()) return Letter{pos[i], false};
    return Letter{neg[neg.size() - 1 - (i - pos.size())], true};
  });
}

TreePair pl_to_treepair(const PLMap& f) {
  const auto pts = f.breakpoints();
  const auto slopes = f.slope_exponents();
  std::vector<std::uint32_t> dom_depths;
  std::vector<std::uint32_t> ran_depths;

  // Depth-first, left to right, over candidate leaves [x, x + 2^-d].
  struct Cand {
    Dyadic x;
    std::uint32_t depth;
  };
  std::vector<Cand> open{{Dyadic(0), 0}};
  std::size_t seg = 0;
  while (!open.empty()) {
    Cand c = std::move(open.back());
    open.pop_back();
    while (seg + 1 < slopes.size() && pts[seg + 1].x <= c.x) ++seg;
    const Dyadic width = Dyadic::pow2(-static_cast<std::int64_t>(c.depth));
    const Dyadic end = c.x + width;
    const std::int64_t e = slopes[seg];
    const std::int64_t image_depth = static_cast<std::int64_t>(c.depth) - e;
    bool leaf = end <= pts[seg + 1].x && image_depth >= 0;
    if (leaf) {
      const Dyadic y = pts[seg].y + (c.x - pts[seg].x).shifted(e);
      leaf = y.is_zero() || y.granularity() <= image_depth;
    }
    if (leaf) {
      dom_depths.push_back(c.depth);
      ran_depths.push_back(static_cast<std::uint32_t>(image_depth));
      continue;
    }
    const Dyadic mid = c.x + width.shifted(-1);
    open.push_back({mid, c.depth + 1});
    open.push_back({std::move(c.x), c.depth + 1});
  }
  return {BinTree::from_leaf_depths(dom_depths), BinTree::from_leaf_depths(ran_depths)};
}

PLMap treepair_to_pl(const TreePair& tp) {
  const auto dom = tp.domain.leaf_intervals();
  const auto ran = tp.range.leaf_intervals();
  if (dom.size() != ran.size()) {
    throw std::invalid_argument("tree pair leaf counts differ");
  }
  std::vector<Breakpoint> pts;
  pts.reserve(dom.size() + 1);
  for (std::size_t i = 0; i < dom.size(); ++i) pts.push_back({dom[i].lo, ran[i].lo});
  pts.push_back({Dyadic(1), Dyadic(1)});
  return PLMap(std::move(pts));
}

NormalForm treepair_to_nf(const TreePair& tp) {
  if (tp.domain.leaf_count() != tp.range.leaf_count()) {
    throw std::invalid_argument("tree pair leaf counts differ");
  }
  std::vector<Index> pos;
  std::vector<Index> neg;
  const auto a = tp.range.leaf_exponents();
  const auto b = tp.domain.leaf_exponents();
  for (std::size_t k = 0; k < a.size(); ++k) pos.insert(pos.end(), a[k], static_cast<Index>(k));
  for (std::size_t k = 0; k < b.size(); ++k) neg.insert(neg.end(), b[k], static_cast<Index>(k));
  // Unreduced pairs give a semi-normal form; reduction makes the result exact
  // for those too.
  return SemiNormal(std::move(pos), std::move(neg)).reduce();
}

NormalForm pl_to_word(const PLMap& f) { return treepair_to_nf(pl_to_treepair(f)); }

}  // namespace thompson
