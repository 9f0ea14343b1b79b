#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdc/pqseq.hpp"
#include "pdc/primitivity.hpp"
#include "pdc/words.hpp"
#include "test_util.hpp"

using namespace pdc;

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(make_params(1, 1), "p must be at least 2 (got p=1)",
                       ValidationError);
  CHECK_THROWS_WITH_AS(make_params(8, 0),
                       "q must satisfy 0 < q < p (got p=8, q=0)", ValidationError);
  CHECK_THROWS_WITH_AS(make_params(8, 8),
                       "q must satisfy 0 < q < p (got p=8, q=8)", ValidationError);
  CHECK_THROWS_WITH_AS(make_params(8, 4), "gcd(p,q) must be 1 (got gcd(8,4)=4)",
                       ValidationError);
  CHECK_THROWS_AS(make_params(9, 12), ValidationError);
}

TEST_CASE("derived parameters") {
  CHECK(make_params(8, 3) == LensParams{8, 3, 3, 3});
  CHECK(make_params(8, 5) == LensParams{8, 5, 3, 3});
  CHECK(make_params(5, 2) == LensParams{5, 2, 2, 2});
  CHECK(make_params(12, 5) == LensParams{12, 5, 5, 5});
  CHECK(make_params(12, 7) == LensParams{12, 7, 5, 5});
  CHECK(make_params(2, 1) == LensParams{2, 1, 1, 1});
  CHECK(make_params(17, 7) == LensParams{17, 7, 7, 5});
  CHECK(make_params(7, 1) == LensParams{7, 1, 1, 1});
}

TEST_CASE("hand-built params are rejected everywhere") {
  const LensParams bad{8, 3, 0, 0};  // skipped make_params
  const char* msg =
      "params must come from make_params: p=8, q=3 derives q_norm=3, "
      "q_prime=3 (got q_norm=0, q_prime=0)";
  CHECK_THROWS_WITH_AS(validate_params(bad), msg, ValidationError);
  CHECK_THROWS_WITH_AS(word_j(bad, 1), msg, ValidationError);
  CHECK_THROWS_WITH_AS(four_primitive_indices(bad), msg, ValidationError);
  CHECK_THROWS_WITH_AS(make_sequence(bad), msg, ValidationError);
  CHECK_NOTHROW(validate_params(make_params(8, 3)));
}

TEST_CASE("q_prime is an involution on normalized parameters") {
  for (int p = 2; p <= 40; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LensParams a = make_params(p, q);
      const LensParams b = make_params(p, a.q_prime);
      CHECK(b.q_prime == a.q_norm);
      CHECK(b.q_norm == a.q_prime);
      CHECK(a.q_prime >= 1);
      CHECK(a.q_prime <= p / 2);
    }
  }
}

TEST_CASE("sequence words by index") {
  const LensParams params = make_params(8, 3);
  CHECK(to_string(word_j(params, 0)) == "yyyyyyyy");
  CHECK(to_string(word_j(params, 3)) == "zyyzyyzy");
  CHECK(to_string(word_j(params, 6)) == "zzyzzyzz");
  CHECK(to_string(word_j(params, 8)) == "zzzzzzzz");
  CHECK_THROWS_WITH_AS(word_j(params, 9),
                       "sequence index must lie in [0, p] (got j=9, p=8)",
                       ValidationError);
  CHECK_THROWS_AS(word_j(params, -1), ValidationError);
}

TEST_CASE("full table for (8,3)") {
  const std::vector<std::string> expected = {
      "yyyyyyyy", "zyyyyyyy", "zyyzyyyy", "zyyzyyzy", "zzyzyyzy",
      "zzyzzyzy", "zzyzzyzz", "zzzzzyzz", "zzzzzzzz"};
  const PqSequence seq = make_sequence(make_params(8, 3));
  REQUIRE(seq.words.size() == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) {
    CHECK(to_string(seq.words[j]) == expected[j]);
  }
  CHECK(seq.primitive_indices == std::set<int>{1, 3, 5, 7});
}

TEST_CASE("letter counts track the index") {
  for (int p : {2, 3, 8, 12, 17, 23}) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LensParams params = make_params(p, q);
      for (int j = 0; j <= p; ++j) {
        const auto [m, n] = abelianization(word_j(params, j));
        CHECK(m == j);
        CHECK(n == p - j);
      }
    }
  }
}

TEST_CASE("primitive index sets") {
  CHECK(four_primitive_indices(make_params(8, 3)) == std::set<int>{1, 3, 5, 7});
  CHECK(four_primitive_indices(make_params(2, 1)) == std::set<int>{1});
  CHECK(four_primitive_indices(make_params(3, 1)) == std::set<int>{1, 2});
  CHECK(four_primitive_indices(make_params(12, 5)) == std::set<int>{1, 5, 7, 11});
  CHECK(four_primitive_indices(make_params(5, 2)) == std::set<int>{1, 2, 3, 4});
  CHECK(four_primitive_indices(make_params(17, 7)) == std::set<int>{1, 5, 12, 16});
}

TEST_CASE("index sets agree with the descent across a sweep") {
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LensParams params = make_params(p, q);
      const std::set<int> expected = four_primitive_indices(params);
      for (int j = 0; j <= p; ++j) {
        CHECK(is_primitive(word_j(params, j)) == (expected.count(j) > 0));
      }
    }
  }
}

TEST_CASE("building the sequence") {
  const PqSequence seq = make_sequence(make_params(2, 1));
  REQUIRE(seq.words.size() == 3);
  CHECK(to_string(seq.words[0]) == "yy");
  CHECK(to_string(seq.words[1]) == "zy");
  CHECK(to_string(seq.words[2]) == "zz");
  CHECK(seq.primitive_indices == std::set<int>{1});

  const PqSequence big = make_sequence(make_params(101, 30), 0);
  CHECK(big.words.size() == 102);
  for (const Word& w : big.words) CHECK(w.size() == 101);
  CHECK(make_sequence(make_params(12, 5), 0) == make_sequence(make_params(12, 5)));
}

TEST_CASE("reverse-swap symmetry") {
  for (int p = 2; p <= 25; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(check_symmetry(make_sequence(make_params(p, q), 0)));
    }
  }

  PqSequence tampered = make_sequence(make_params(8, 3));
  tampered.words[3] = tampered.words[1];
  CHECK_FALSE(check_symmetry(tampered));
}

TEST_CASE("symmetry witness value") {
  const PqSequence seq = make_sequence(make_params(8, 3));
  const Word image = swap_generators(reverse(seq.words[3]));
  CHECK(to_string(image) == "zyzzyzzy");
  CHECK(cyclic_reduce(image) == cyclic_reduce(seq.words[5]));
}

TEST_CASE("text rendering") {
  CHECK(sequence_to_text(make_sequence(make_params(2, 1))) ==
        "(2,1)-sequence  q_norm=1  q_prime=1  primitive j: {1}\n"
        "  0  yy\n"
        "  1  zy  *\n"
        "  2  zz\n");
}

TEST_CASE("golden sequence files") {
  const PqSequence seq = make_sequence(make_params(8, 3));
  CHECK(sequence_to_text(seq) == test::read_golden("sequence_8_3.txt"));
  CHECK(sequence_to_record(seq) == test::read_golden("sequence_8_3.json"));
}

TEST_CASE("record round-trip") {
  for (auto [p, q] : {std::pair{8, 3}, {2, 1}, {12, 5}, {17, 7}, {5, 2}}) {
    const PqSequence seq = make_sequence(make_params(p, q));
    CHECK(sequence_from_record(sequence_to_record(seq)) == seq);
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(sequence_from_record("not json"), ValidationError);
  CHECK_THROWS_WITH_AS(sequence_from_record(R"({"schema":"pdc.other.v1"})"),
                       "unexpected schema in sequence record", ValidationError);
  CHECK_THROWS_AS(sequence_from_record(R"({"schema":"pdc.sequence.v1","p":8})"),
                  ValidationError);
  CHECK_THROWS_AS(
      sequence_from_record(
          R"({"schema":"pdc.sequence.v1","p":8,"q":4,"q_norm":3,"q_prime":3,"primitive_indices":[1],"words":[]})"),
      ValidationError);
}
