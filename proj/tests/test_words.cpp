#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "thompson/convert.hpp"
#include "thompson/words.hpp"

using namespace thompson;

TEST_CASE("word text format") {
  const Word w = parse_word("x0 x1^-1  x3");
  REQUIRE(w.size() == 3);
  CHECK(w[1] == Letter{1, true});
  CHECK(format_word(w) == "x0 x1^-1 x3");
  CHECK(format_word(Word{}) == "e");
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK_THROWS(parse_word("x01"));
  CHECK_THROWS(parse_word("x1^2"));
  CHECK_THROWS(parse_word("y1"));
  CHECK_THROWS(parse_word("x99999999999"));
  CHECK(format_word(invert_word(w)) == "x3^-1 x1 x0^-1");
}

TEST_CASE("normal form basics") {
  CHECK(nf_from_word(parse_word("x1 x0")) == NormalForm({0, 2}, {}));
  CHECK(nf_from_word(parse_word("x0 x0^-1")).is_identity());
  CHECK(NormalForm::parse("x3^-1 x0").to_string() == "x0 x4^-1");
  CHECK(NormalForm({0, 1}, {0}).to_string() == "x0 x1 x0^-1");
  CHECK(NormalForm().to_string() == "e");
  CHECK_THROWS(NormalForm({1, 0}, {}));
  CHECK_THROWS(NormalForm({0}, {0}));
}

TEST_CASE("multiply and invert") {
  const NormalForm a = NormalForm::parse("x0 x1^-1");
  CHECK(nf_multiply(NormalForm(), a) == a);
  CHECK(nf_multiply(a, nf_invert(a)).is_identity());
  CHECK(nf_multiply(a, NormalForm::generator(3)) == NormalForm({0, 4}, {1}));
  CHECK(nf_invert(NormalForm()).is_identity());
  CHECK(nf_invert(NormalForm({0}, {})) == NormalForm({}, {0}));
  CHECK(nf_product(a, NormalForm::generator(3), nf_invert(a)) == NormalForm::generator(3));
}

TEST_CASE("reduced shape") {
  const std::vector<Index> zero{0};
  const std::vector<Index> zero_one{0, 1};
  const std::vector<Index> none;
  CHECK_FALSE(nf_is_reduced_shape(zero, zero));
  CHECK(nf_is_reduced_shape(zero_one, zero));
  CHECK(nf_is_reduced_shape(zero, none));
}

TEST_CASE("closed-form product for A_s times high-index elements") {
  const NormalForm a({0}, {1});
  const NormalForm b({3}, {});
  CHECK(nf_product_special(a, b, 2) == NormalForm({0, 4}, {1}));
  CHECK(nf_product_special(NormalForm(), b, 2) == b);
  CHECK_THROWS_AS(nf_product_special(NormalForm({0}, {}), b, 2), ProductDomainError);
  CHECK_THROWS_AS(nf_product_special(a, NormalForm({2}, {}), 2), ProductDomainError);

  Rng rng(5);
  for (unsigned s = 2; s <= 6; ++s) {
    for (int k = 0; k < 100; ++k) {
      const NormalForm x = sample_A(s, 1 + k % 40, rng);
      const NormalForm y = sample_B(s, 1 + k % 30, rng);
      CHECK(nf_product_special(x, y, s) == nf_multiply(x, y));
    }
  }
}

TEST_CASE("exhaustive short words agree with the rewriting oracle") {
  // every word of length <= 5 over x0, x1, x2 and inverses
  const Letter alphabet[] = {{0, false}, {0, true}, {1, false}, {1, true}, {2, false}, {2, true}};
  std::size_t count = 0;
  for (std::size_t len = 0; len <= 5; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      Word w;
      for (const auto dg : digits) w.push_back(alphabet[dg]);
      const NormalForm expected = oracle::normal_form(w);
      CHECK(nf_from_word(w) == expected);
      CHECK(nf_from_word_quadratic(w) == expected);
      ++count;
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == 6) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  CHECK(count == 1 + 6 + 36 + 216 + 1296 + 7776);
}

TEST_CASE("random 12-letter words agree with oracle and maps") {
  Rng rng(31337);
  for (int k = 0; k < 3000; ++k) {
    const Word w = random_word(12, 3, rng);
    const NormalForm nf = nf_from_word(w);
    CHECK(nf == oracle::normal_form(w));
    CHECK(word_to_pl(w) == word_to_pl(nf));
  }
}

TEST_CASE("three routes agree on long words") {
  Rng rng(77);
  for (const std::size_t n : {100u, 1000u, 5000u, 40000u}) {
    const Word w = random_word(n, 20, rng);
    const NormalForm dc = nf_from_word(w);
    CHECK(nf_from_word_parallel(w) == dc);
    if (n <= 5000) CHECK(nf_from_word_quadratic(w) == dc);
    CHECK(nf_is_reduced_shape(dc.pos(), dc.neg()));
  }
}

TEST_CASE("semantics and uniqueness") {
  Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    const Word w = random_word(1 + k % 60, 5, rng);
    const NormalForm nf = nf_from_word(w);
    CHECK(word_to_pl(w) == word_to_pl(nf));
    CHECK(std::is_sorted(nf.pos().begin(), nf.pos().end()));
    CHECK(std::is_sorted(nf.neg().begin(), nf.neg().end()));
    CHECK(nf_is_reduced_shape(nf.pos(), nf.neg()));
    CHECK(NormalForm::parse(nf.to_string()) == nf);
  }
  // uniqueness: equal maps iff equal normal forms, on a small alphabet where
  // collisions actually happen
  std::vector<std::pair<PLMap, NormalForm>> seen;
  for (int k = 0; k < 400; ++k) {
    const Word w = random_word(4, 1, rng);
    seen.emplace_back(word_to_pl(w), nf_from_word(w));
  }
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (std::size_t j = i + 1; j < seen.size(); ++j) {
      const bool maps_equal = seen[i].first == seen[j].first;
      CHECK(maps_equal == (seen[i].second == seen[j].second));
      collisions += maps_equal ? 1 : 0;
    }
  }
  CHECK(collisions > 0);
}

TEST_CASE("multiplication is associative and inverts") {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const NormalForm a = oracle::random_nf(rng);
    const NormalForm b = oracle::random_nf(rng);
    const NormalForm c = oracle::random_nf(rng);
    CHECK(nf_multiply(nf_multiply(a, b), c) == nf_multiply(a, nf_multiply(b, c)));
    CHECK(nf_multiply(a, nf_invert(a)).is_identity());
    CHECK(nf_product(a, b, c) == nf_multiply(a, nf_multiply(b, c)));
  }
}
