#include "thompson/plmap.hpp"

#include <algorithm>
#include <sstream>

namespace thompson {

PiecewiseMap::PiecewiseMap(std::vector<Breakpoint> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("piecewise map needs at least two breakpoints");
  }
  std::vector<std::int64_t> slopes;
  slopes.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Dyadic dx = points[i + 1].x - points[i].x;
    const Dyadic dy = points[i + 1].y - points[i].y;
    if (dx.sign() <= 0 || dy.sign() <= 0) {
      throw std::invalid_argument("breakpoints must be strictly increasing in both coordinates");
    }
    const auto e = dy.log2_ratio(dx);
    if (!e) {
      throw std::invalid_argument("slope between " + points[i].x.to_string() + " and " +
                                  points[i + 1].x.to_string() + " is not a power of two");
    }
    slopes.push_back(*e);
  }
  points_.reserve(points.size());
  points_.push_back(std::move(points.front()));
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    // Collinear interior points are dropped.
    if (i + 1 < slopes.size() && slopes[i] == slopes[i + 1]) continue;
    points_.push_back(std::move(points[i + 1]));
    slopes_.push_back(slopes[i]);
  }
}

PiecewiseMap PiecewiseMap::identity_on(const Interval& iv) {
  return PiecewiseMap({{iv.lo, iv.lo}, {iv.hi, iv.hi}});
}

std::size_t PiecewiseMap::segment_of(const Dyadic& t) const {
  if (t < points_.front().x || t > points_.back().x) {
    throw std::out_of_range("point " + t.to_string() + " outside map domain");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), t,
                             [](const Dyadic& v, const Breakpoint& b) { return v < b.x; });
  auto idx = static_cast<std::size_t>(it - points_.begin());
  // idx >= 1 since t >= front().x
  return std::min(idx - 1, slopes_.size() - 1);
}

Dyadic PiecewiseMap::eval(const Dyadic& t) const {
  const auto i = segment_of(t);
  return points_[i].y + (t - points_[i].x).shifted(slopes_[i]);
}

PiecewiseMap PiecewiseMap::inverse() const {
  std::vector<Breakpoint> pts;
  pts.reserve(points_.size());
  for (const auto& b : points_) pts.push_back({b.y, b.x});
  return PiecewiseMap(std::move(pts));
}

PiecewiseMap PiecewiseMap::restrict(const Interval& iv) const {
  if (!(iv.lo < iv.hi) || !domain().contains(iv)) {
    throw std::invalid_argument("restriction interval not inside the domain");
  }
  std::vector<Breakpoint> pts;
  pts.push_back({iv.lo, eval(iv.lo)});
  for (const auto& b : points_) {
    if (iv.lo < b.x && b.x < iv.hi) pts.push_back(b);
  }
  pts.push_back({iv.hi, eval(iv.hi)});
  return PiecewiseMap(std::move(pts));
}

std::string PiecewiseMap::to_string() const {
  std::string out;
  for (const auto& b : points_) {
    if (!out.empty()) out += ' ';
    out += '(';
    out += b.x.to_string();
    out += ',';
    out += b.y.to_string();
    out += ')';
  }
  return out;
}

PLMap::PLMap(std::vector<Breakpoint> points) : PLMap(PiecewiseMap(std::move(points))) {}

PLMap::PLMap(PiecewiseMap full) : PiecewiseMap(std::move(full)) {
  const auto& f = points_.front();
  const auto& l = points_.back();
  if (!f.x.is_zero() || !f.y.is_zero() || l.x != Dyadic(1) || l.y != Dyadic(1)) {
    throw std::invalid_argument("PL map must run from (0,0) to (1,1)");
  }
}

PLMap PLMap::identity() { return PLMap(PiecewiseMap::identity_on({Dyadic(0), Dyadic(1)})); }

PLMap PLMap::parse(std::string_view text) {
  std::vector<Breakpoint> pts;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto comma = tok.find(',');
    if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')' || comma == std::string::npos) {
      throw std::invalid_argument("malformed breakpoint '" + tok + "'");
    }
    pts.push_back({Dyadic::parse(std::string_view(tok).substr(1, comma - 1)),
                   Dyadic::parse(std::string_view(tok).substr(comma + 1, tok.size() - comma - 2))});
  }
  return PLMap(std::move(pts));
}

Dyadic pl_eval(const PLMap& f, const Dyadic& t) {
  if (t.sign() < 0 || t > Dyadic(1)) {
    throw std::out_of_range("evaluation point " + t.to_string() + " outside [0,1]");
  }
  return f.eval(t);
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  const auto gp = g.breakpoints();
  const auto gs = g.slope_exponents();
  const auto fp = f.breakpoints();
  const auto fs = f.slope_exponents();

  std::vector<Breakpoint> out;
  out.reserve(gp.size() + fp.size());
  std::size_t j = 1;  // first f breakpoint not yet passed
  auto f_at = [&](const Dyadic& y) {
    while (j < fp.size() - 1 && fp[j].x <= y) ++j;
    return fp[j - 1].y + (y - fp[j - 1].x).shifted(fs[j - 1]);
  };
  for (std::size_t i = 0; i + 1 < gp.size(); ++i) {
    out.push_back({gp[i].x, f_at(gp[i].y)});
    // f breakpoints strictly inside this segment's image pull back through g.
    while (j < fp.size() - 1 && fp[j].x < gp[i + 1].y) {
      if (fp[j].x > gp[i].y) {
        out.push_back({gp[i].x + (fp[j].x - gp[i].y).shifted(-gs[i]), fp[j].y});
      }
      ++j;
    }
  }
  out.push_back({Dyadic(1), Dyadic(1)});
  return PLMap(std::move(out));
}

PLMap pl_invert(const PLMap& f) { return PLMap(f.inverse()); }

bool pl_is_identity_on(const PLMap& f, const Dyadic& lo, const Dyadic& hi) {
  if (lo.sign() < 0 || hi > Dyadic(1) || !(lo < hi)) {
    throw std::invalid_argument("invalid interval [" + lo.to_string() + "," + hi.to_string() + "]");
  }
  if (f.eval(lo) != lo || f.eval(hi) != hi) return false;
  return std::all_of(f.breakpoints().begin(), f.breakpoints().end(), [&](const Breakpoint& b) {
    return b.x <= lo || b.x >= hi || b.x == b.y;
  });
}

std::optional<Interval> pl_support(const PLMap& f) {
  const auto pts = f.breakpoints();
  const auto slopes = f.slope_exponents();
  if (pts.size() == 2) return std::nullopt;
  std::size_t first = 0;
  while (slopes[first] == 0) ++first;
  std::size_t last = slopes.size() - 1;
  while (slopes[last] == 0) --last;
  return Interval{pts[first].x, pts[last + 1].x};
}

bool pl_supported_in(const PLMap& f, const Interval& iv) {
  const auto supp = pl_support(f);
  return !supp || iv.contains(*supp);
}

PLMap pl_patch(const PLMap& g, const Dyadic& d, Side keep) {
  if (d.sign() < 0 || d > Dyadic(1)) {
    throw std::out_of_range("patch point outside [0,1]");
  }
  if (g.eval(d) != d) {
    throw PatchError("patch point " + d.to_string() + " is not fixed (image " + g.eval(d).to_string() + ")");
  }
  if ((keep == Side::kLeft && d.is_zero()) || (keep == Side::kRight && d == Dyadic(1))) {
    return PLMap::identity();
  }
  if (keep == Side::kLeft && d == Dyadic(1)) return g;
  if (keep == Side::kRight && d.is_zero()) return g;
  std::vector<Breakpoint> pts;
  if (keep == Side::kLeft) {
    for (const auto& b : g.breakpoints()) {
      if (b.x < d) pts.push_back(b);
    }
    pts.push_back({d, d});
    pts.push_back({Dyadic(1), Dyadic(1)});
  } else {
    pts.push_back({Dyadic(0), Dyadic(0)});
    pts.push_back({d, d});
    for (const auto& b : g.breakpoints()) {
      if (b.x > d) pts.push_back(b);
    }
  }
  return PLMap(std::move(pts));
}

std::vector<Interval> standard_decomposition(const Dyadic& p, const Dyadic& q) {
  if (!(p < q)) throw std::invalid_argument("degenerate interval");
  std::vector<Interval> pieces;
  Dyadic x = p;
  while (x < q) {
    auto k = (q - x).floor_log2();
    if (!x.is_zero()) k = std::min(k, -x.granularity());
    Dyadic next = x + Dyadic::pow2(k);
    pieces.push_back({x, next});
    x = std::move(next);
  }
  return pieces;
}

namespace {

void split_until(std::vector<Interval>& pieces, std::size_t target) {
  while (pieces.size() < target) {
    std::size_t widest = 0;
    Dyadic best = pieces[0].hi - pieces[0].lo;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      Dyadic len = pieces[i].hi - pieces[i].lo;
      if (len > best) {
        best = std::move(len);
        widest = i;
      }
    }
    const Dyadic mid = pieces[widest].lo + best.shifted(-1);
    const Interval right{mid, pieces[widest].hi};
    pieces[widest].hi = mid;
    pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(widest) + 1, right);
  }
}

}  // namespace

PiecewiseMap pl_interval_homeo(const Dyadic& p, const Dyadic& q, const Dyadic& p2, const Dyadic& q2) {
  if (!(p < q) || !(p2 < q2)) throw std::invalid_argument("degenerate interval");
  if (p.sign() < 0 || p2.sign() < 0 || q > Dyadic(1) || q2 > Dyadic(1)) {
    throw std::invalid_argument("interval outside [0,1]");
  }
  auto src = standard_decomposition(p, q);
  auto dst = standard_decomposition(p2, q2);
  split_until(src, dst.size());
  split_until(dst, src.size());
  std::vector<Breakpoint> pts;
  pts.reserve(src.size() + 1);
  for (std::size_t i = 0; i < src.size(); ++i) pts.push_back({src[i].lo, dst[i].lo});
  pts.push_back({q, q2});
  return PiecewiseMap(std::move(pts));
}

PLMap pl_glue(std::span<const PiecewiseMap> pieces) {
  if (pieces.empty()) throw std::invalid_argument("nothing to glue");
  std::vector<Breakpoint> pts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto bp = pieces[i].breakpoints();
    if (i > 0 && bp.front() != pts.back()) {
      throw std::invalid_argument("glued pieces are not contiguous at " + bp.front().x.to_string());
    }
    pts.insert(pts.end(), bp.begin() + (i > 0 ? 1 : 0), bp.end());
  }
  return PLMap(std::move(pts));
}

}  // namespace thompson
