#ifndef THOMPSON_PLMAP_HPP
#define THOMPSON_PLMAP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/dyadic.hpp"

namespace thompson {

struct Breakpoint {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  Dyadic lo;
  Dyadic hi;

  bool contains(const Dyadic& t) const { return lo <= t && t <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Which side of a cut point to keep.
enum class Side { kLeft, kRight };

/// Raised when a patch point is not fixed by the map being patched. On
/// protocol data this means the transcript was not produced honestly.
class PatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Increasing piecewise-linear bijection between two dyadic intervals with
/// power-of-two slopes. A PLMap is the special case [0,1] -> [0,1]; maps on
/// subintervals are carried as PiecewiseMap until glued into a full map.
class PiecewiseMap {
 public:
  /// Validates and merges collinear interior points. Throws
  /// std::invalid_argument on non-increasing coordinates or a slope that is
  /// not an exact power of two.
  explicit PiecewiseMap(std::vector<Breakpoint> points);

  /// Identity on [lo, hi].
  static PiecewiseMap identity_on(const Interval& iv);

  std::span<const Breakpoint> breakpoints() const noexcept { return points_; }
  /// log2 of the slope of segment i.
  std::span<const std::int64_t> slope_exponents() const noexcept { return slopes_; }

  Interval domain() const { return {points_.front().x, points_.back().x}; }
  Interval range() const { return {points_.front().y, points_.back().y}; }

  /// Throws std::out_of_range outside the domain.
  Dyadic eval(const Dyadic& t) const;

  /// Index of the segment containing t; the right-hand segment at interior
  /// breakpoints.
  std::size_t segment_of(const Dyadic& t) const;

  PiecewiseMap inverse() const;

  /// Restriction to [lo, hi] inside the domain.
  PiecewiseMap restrict(const Interval& iv) const;

  std::string to_string() const;

  friend bool operator==(const PiecewiseMap&, const PiecewiseMap&) = default;

 protected:
  std::vector<Breakpoint> points_;
  std::vector<std::int64_t> slopes_;
};

/// Element of PL_2([0,1]).
class PLMap : public PiecewiseMap {
 public:
  PLMap() : PLMap(identity()) {}
  /// Also requires the points to start at (0,0) and end at (1,1).
  explicit PLMap(std::vector<Breakpoint> points);
  explicit PLMap(PiecewiseMap full);

  static PLMap identity();

  /// Parses the to_string() format: "(x,y) (x,y) ...".
  static PLMap parse(std::string_view text);

  friend bool operator==(const PLMap&, const PLMap&) = default;
};

Dyadic pl_eval(const PLMap& f, const Dyadic& t);

/// t -> f(g(t)).
PLMap pl_compose(const PLMap& f, const PLMap& g);
PLMap pl_invert(const PLMap& f);

/// f(t) == t for every t in [lo, hi].
bool pl_is_identity_on(const PLMap& f, const Dyadic& lo, const Dyadic& hi);

/// Smallest closed interval outside which f is the identity; nullopt for the
/// identity map.
std::optional<Interval> pl_support(const PLMap& f);

/// Support contained in iv (the identity qualifies for every iv).
bool pl_supported_in(const PLMap& f, const Interval& iv);

/// g on the kept side of d, identity on the other side. Throws PatchError
/// when g(d) != d.
PLMap pl_patch(const PLMap& g, const Dyadic& d, Side keep);

/// Increasing PL_2 bijection [p,q] -> [p2,q2] built by matching
/// decompositions into standard dyadic intervals.
PiecewiseMap pl_interval_homeo(const Dyadic& p, const Dyadic& q, const Dyadic& p2, const Dyadic& q2);

/// Concatenates pieces whose domains and ranges tile [0,1] in order.
PLMap pl_glue(std::span<const PiecewiseMap> pieces);

/// Maximal standard dyadic intervals [j/2^m,(j+1)/2^m] tiling [p,q],
/// greedily from the left.
std::vector<Interval> standard_decomposition(const Dyadic& p, const Dyadic& q);

}  // namespace thompson

#endif  // THOMPSON_PLMAP_HPP
