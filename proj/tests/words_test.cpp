#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "pdc/words.hpp"
#include "test_util.hpp"

using namespace pdc;
using test::random_reduced_word;
using test::seeded_rng;

TEST_CASE("free reduction") {
  CHECK(parse_word("xX").empty());
  CHECK(to_string(parse_word("zyYz")) == "zz");
  CHECK(to_string(parse_word("zyyzyyzy")) == "zyyzyyzy");
  CHECK(to_string(parse_word("zYyZzy")) == "zy");
  CHECK(parse_word("zyYZ").empty());
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(to_string(Word{}) == "1");
}

TEST_CASE("reduction properties on random words") {
  auto rng = seeded_rng();
  for (int i = 0; i < 300; ++i) {
    const Word w = random_reduced_word(rng, 24);
    CHECK(reduce(w.letters(), w.alphabet()) == w);  // idempotent
    CHECK(concat(w, invert(w)).empty());
    CHECK(concat(invert(w), w).empty());
    for (std::size_t k = 1; k < w.size(); ++k) {
      CHECK_FALSE(w.letters()[k] == inverse(w.letters()[k - 1]));
    }
  }
}

TEST_CASE("parsing validates input") {
  CHECK_THROWS_AS(parse_word("z!"), ValidationError);
  CHECK_THROWS_AS(parse_word("zyYx"), ValidationError);  // mixes {z,y} and {x,y}
  CHECK_THROWS_AS(parse_word("xz"), ValidationError);
  CHECK_THROWS_AS(parse_word("q"), ValidationError);
  CHECK_THROWS_AS(parse_word("z", kAlphabetXY), ValidationError);
  CHECK(parse_word(" z y  Y z ") == parse_word("zz"));
}

TEST_CASE("alphabet inference") {
  CHECK(parse_word("zy").alphabet() == kAlphabetZY);
  CHECK(parse_word("xy").alphabet() == kAlphabetXY);
  CHECK(parse_word("y").alphabet() == kAlphabetZY);
  CHECK(parse_word("y", kAlphabetXY).alphabet() == kAlphabetXY);
  CHECK(parse_word("Y").alphabet() == kAlphabetZY);
}

TEST_CASE("print and parse round-trip") {
  auto rng = seeded_rng(777);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced_word(rng, 20);
    CHECK(parse_word(to_string(w)) == w);
  }
  const Word xw = parse_word("xYxxy");
  CHECK(parse_word(to_string(xw)) == xw);
}

TEST_CASE("involutions") {
  CHECK(to_string(invert(parse_word("zy"))) == "YZ");
  CHECK(to_string(reverse(parse_word("zY"))) == "Yz");
  CHECK(to_string(swap_generators(parse_word("zzy"))) == "yyz");
  auto rng = seeded_rng(31);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced_word(rng, 20);
    CHECK(invert(invert(w)) == w);
    CHECK(reverse(reverse(w)) == w);
    CHECK(swap_generators(swap_generators(w)) == w);
    CHECK(swap_generators(invert(w)) == invert(swap_generators(w)));
    CHECK(reverse(invert(w)) == invert(reverse(w)));
    CHECK(reverse(swap_generators(w)) == swap_generators(reverse(w)));
  }
}

TEST_CASE("sequence symmetry witness value") {
  // reverse-then-swap of w_3 of the (8,3) family lands in the cyclic class
  // of w_5.
  const Word image = swap_generators(reverse(parse_word("zyyzyyzy")));
  CHECK(to_string(image) == "zyzzyzzy");
  CHECK(cyclic_reduce(image) == cyclic_reduce(parse_word("zzyzzyzy")));
}

TEST_CASE("concat validates alphabets") {
  CHECK_THROWS_AS(concat(parse_word("z"), parse_word("x")), ValidationError);
  CHECK(to_string(concat(parse_word("zy"), parse_word("Yz"))) == "zz");
}

TEST_CASE("cyclic reduction") {
  CHECK(to_string(cyclic_reduce(parse_word("Yzy"))) == "z");
  CHECK(cyclic_reduce(parse_word("zy")) == cyclic_reduce(parse_word("yz")));
  CHECK(cyclic_reduce(parse_word("zyyzyyzy")) == cyclic_reduce(parse_word("yzyyzyyz")));
  CHECK(cyclic_reduce(Word{}).empty());
  CHECK(to_string(cyclic_reduce(parse_word("yZ"))) == "Zy");

  const Word stripped = cyclic_strip(parse_word("zyZ"));
  CHECK(to_string(stripped) == "y");
}

TEST_CASE("cyclic class is conjugation invariant") {
  auto rng = seeded_rng(99);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced_word(rng, 16);
    const Word g = random_reduced_word(rng, 8);
    CHECK(cyclic_reduce(test::conjugate(w, g)) == cyclic_reduce(w));
  }
}

TEST_CASE("all rotations share one canonical form") {
  auto rng = seeded_rng(4242);
  for (int i = 0; i < 100; ++i) {
    const Word base = cyclic_reduce(random_reduced_word(rng, 14)).canonical();
    if (base.empty()) continue;
    const auto& letters = base.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      std::vector<Letter> rotated(letters.begin() + static_cast<std::ptrdiff_t>(k),
                                  letters.end());
      rotated.insert(rotated.end(), letters.begin(),
                     letters.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(cyclic_reduce(Word(rotated, base.alphabet())) == cyclic_reduce(base));
    }
  }
}

TEST_CASE("substitution z to xy") {
  CHECK(to_string(substitute_z_to_xy(parse_word("z"))) == "xy");
  CHECK(to_string(substitute_z_to_xy(parse_word("Z"))) == "YX");
  CHECK(substitute_z_to_xy(parse_word("zy")) == parse_word("xyy"));
  CHECK(substitute_z_to_xy(parse_word("zyyyyzyyyyyy")) == parse_word("xyyyyyxyyyyyyy"));
  CHECK(substitute_z_to_xy(parse_word("zzzzz")) == parse_word("xyxyxyxyxy"));
  CHECK(substitute_z_to_xy(parse_word("y")).alphabet() == kAlphabetXY);
  CHECK_THROWS_AS(substitute_z_to_xy(parse_word("xy")), ValidationError);
}

TEST_CASE("substitution is a homomorphism") {
  auto rng = seeded_rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Word a = random_reduced_word(rng, 12);
    const Word b = random_reduced_word(rng, 12);
    CHECK(substitute_z_to_xy(concat(a, b)) ==
          concat(substitute_z_to_xy(a), substitute_z_to_xy(b)));
    CHECK(substitute_z_to_xy(invert(a)) == invert(substitute_z_to_xy(a)));
  }
}

TEST_CASE("substitution of positive words stays reduced and positive") {
  auto rng = seeded_rng(555);
  for (int i = 0; i < 100; ++i) {
    std::vector<Letter> raw;
    const int len = 1 + static_cast<int>(rng() % 20);
    for (int k = 0; k < len; ++k) raw.push_back({rng() % 2 ? Gen::One : Gen::Two, 1});
    const Word w(raw, kAlphabetZY);
    const Word image = substitute_z_to_xy(w);
    for (Letter l : image.letters()) CHECK(l.sign == 1);
  }
}
