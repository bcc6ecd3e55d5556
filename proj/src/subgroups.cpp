#include "thompson/subgroups.hpp"

#include <string>

namespace thompson {

Dyadic phi(unsigned s) { return Dyadic(1) - Dyadic::pow2(-static_cast<std::int64_t>(s) - 1); }

Interval support_interval(Subgroup g, unsigned s) {
  if (g == Subgroup::kA) return {Dyadic(0), phi(s)};
  return {phi(s), Dyadic(1)};
}

std::vector<NormalForm> gens_A(unsigned s) {
  std::vector<NormalForm> out;
  for (Index k = 1; k <= s; ++k) out.emplace_back(std::vector<Index>{0}, std::vector<Index>{k});
  return out;
}

std::vector<NormalForm> gens_B(unsigned s) {
  std::vector<NormalForm> out;
  for (Index k = s + 1; k <= 2 * s; ++k) out.push_back(NormalForm::generator(k));
  return out;
}

bool in_A(const NormalForm& g, unsigned s) { return satisfies_a_criterion(g, s); }

bool in_B(const PLMap& g, unsigned s) { return pl_supported_in(g, support_interval(Subgroup::kB, s)); }

bool in_B(const NormalForm& g, unsigned s) { return in_B(word_to_pl(g), s); }

bool supported_in(const PLMap& g, Subgroup which, unsigned s) {
  return pl_supported_in(g, support_interval(which, s));
}

Word sample_word(Subgroup which, unsigned s, std::size_t length, Rng& rng) {
  if (s == 0) throw std::invalid_argument("subgroup parameter s must be positive");
  std::uniform_int_distribution<unsigned> pick(0, 2 * s - 1);
  Word w;
  w.reserve(which == Subgroup::kA ? 2 * length : length);
  for (std::size_t n = 0; n < length; ++n) {
    const unsigned r = pick(rng);
    const bool inverse = (r & 1u) != 0;
    if (which == Subgroup::kA) {
      const Index k = r / 2 + 1;
      if (inverse) {
        w.push_back({k, false});
        w.push_back({0, true});
      } else {
        w.push_back({0, false});
        w.push_back({k, true});
      }
    } else {
      w.push_back({static_cast<Index>(s + 1 + r / 2), inverse});
    }
  }
  return w;
}

NormalForm sample_A(unsigned s, std::size_t length, Rng& rng) {
  return nf_from_word(sample_word(Subgroup::kA, s, length, rng));
}

NormalForm sample_B(unsigned s, std::size_t length, Rng& rng) {
  return nf_from_word(sample_word(Subgroup::kB, s, length, rng));
}

namespace {

void require_transitive(unsigned s) {
  if (s < 2) {
    throw ConstructionError("transitivity constructions need s >= 2 (A_1 is cyclic)");
  }
}

void require_open(const Dyadic& t, const Interval& iv, const char* what) {
  if (!(iv.lo < t && t < iv.hi)) {
    throw ConstructionError(std::string(what) + " = " + t.to_string() + " outside (" + iv.lo.to_string() + ", " +
                            iv.hi.to_string() + ")");
  }
}

// Identity outside iv, `inner` on iv.
PLMap embed(std::vector<PiecewiseMap> inner, const Interval& iv) {
  std::vector<PiecewiseMap> pieces;
  if (iv.lo.sign() > 0) pieces.push_back(PiecewiseMap::identity_on({Dyadic(0), iv.lo}));
  for (auto& p : inner) pieces.push_back(std::move(p));
  if (iv.hi < Dyadic(1)) pieces.push_back(PiecewiseMap::identity_on({iv.hi, Dyadic(1)}));
  return pl_glue(pieces);
}

PLMap transitive_map(Subgroup which, unsigned s, const Dyadic& t1, const Dyadic& t2) {
  require_transitive(s);
  const Interval iv = support_interval(which, s);
  require_open(t1, iv, "t1");
  require_open(t2, iv, "t2");
  std::vector<PiecewiseMap> inner;
  inner.push_back(pl_interval_homeo(iv.lo, t1, iv.lo, t2));
  inner.push_back(pl_interval_homeo(t1, iv.hi, t2, iv.hi));
  return embed(std::move(inner), iv);
}

}  // namespace

NormalForm transitive_element_A(unsigned s, const Dyadic& t1, const Dyadic& t2) {
  return pl_to_word(transitive_map(Subgroup::kA, s, t1, t2));
}

NormalForm transitive_element_B(unsigned s, const Dyadic& t1, const Dyadic& t2) {
  return pl_to_word(transitive_map(Subgroup::kB, s, t1, t2));
}

PLMap extend_partial(Subgroup which, unsigned s, const PiecewiseMap& partial) {
  require_transitive(s);
  const Interval iv = support_interval(which, s);
  const Interval dom = partial.domain();
  const Interval ran = partial.range();
  if (!iv.contains(dom) || !iv.contains(ran)) {
    throw ConstructionError("partial map leaves the subgroup interval");
  }
  std::vector<PiecewiseMap> inner;
  if (dom.lo == iv.lo) {
    if (ran.lo != iv.lo) throw ConstructionError("partial map does not fix the interval's left end");
    inner.push_back(partial);
    if (dom.hi != iv.hi) {
      if (!(ran.hi < iv.hi)) {
        throw ConstructionError("partial map reaches the interval's right end too early");
      }
      inner.push_back(pl_interval_homeo(dom.hi, iv.hi, ran.hi, iv.hi));
    } else if (ran.hi != iv.hi) {
      throw ConstructionError("partial map does not fix the interval's right end");
    }
  } else if (dom.hi == iv.hi) {
    if (ran.hi != iv.hi) throw ConstructionError("partial map does not fix the interval's right end");
    if (!(iv.lo < ran.lo)) {
      throw ConstructionError("partial map reaches the interval's left end too early");
    }
    inner.push_back(pl_interval_homeo(iv.lo, dom.lo, iv.lo, ran.lo));
    inner.push_back(partial);
  } else {
    throw ConstructionError("partial map must be known on a piece touching an end of the subgroup interval");
  }
  return embed(std::move(inner), iv);
}

NormalForm extend_partial_A(unsigned s, const PiecewiseMap& partial, const Dyadic& t0) {
  const Interval dom = partial.domain();
  if (!dom.lo.is_zero() || dom.hi != t0) {
    throw ConstructionError("partial map must be defined on [0, t0]");
  }
  return pl_to_word(extend_partial(Subgroup::kA, s, partial));
}

NormalForm extend_partial_B(unsigned s, const PiecewiseMap& partial, const Dyadic& t0) {
  const Interval dom = partial.domain();
  if (dom.lo != phi(s) || dom.hi != t0) {
    throw ConstructionError("partial map must be defined on [phi_s, t0]");
  }
  return pl_to_word(extend_partial(Subgroup::kB, s, partial));
}

}  // namespace thompson
