#include "doctest.h"
#include "helpers.hpp"
#include "tracta/trace.hpp"

using namespace tracta;

TEST_CASE("foata normal form of acbdab") {
  auto al = th::ex1();
  auto f = foata_normalize(al, "acbdab");
  CHECK(f.render() == "{a,c}{b,d}{a}{b}");
  CHECK(f.step_count() == 4);
  CHECK(f.letter_count() == 6);
}

TEST_CASE("normalization is constant on equivalence classes") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    auto al = th::random_alphabet(rng, 4);
    auto w = th::random_word(rng, al, 3 + rng() % 4);
    auto f = foata_normalize(al, w);
    for (const auto& v : th::equiv_class(al, w)) {
      CHECK(foata_normalize(al, v) == f);
    }
    // The linearization is a member of the class.
    CHECK(trace_equiv(al, f.linearization(), w));
  }
}

TEST_CASE("swap stability and projection round-trip") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 500; ++round) {
    auto al = th::random_alphabet(rng);
    auto w = th::random_word(rng, al, rng() % 12);
    auto f = foata_normalize(al, w);
    CHECK(foata_normalize(al, f.linearization()) == f);
    // One random adjacent independent swap leaves the form unchanged.
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (al->independent(w[i], w[i + 1])) {
        auto v = w;
        std::swap(v[i], v[i + 1]);
        CHECK(foata_normalize(al, v) == f);
        break;
      }
    }
  }
}

TEST_CASE("concat against step containment") {
  // ⟨s⟩ = A_1…A_p, ⟨st⟩ = B_1…B_m: then m ≥ p, A_i ⊆ B_i, and the leftover
  // letters spell t.
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    auto al = th::random_alphabet(rng);
    auto s = foata_normalize(al, th::random_word(rng, al, rng() % 8));
    auto t = foata_normalize(al, th::random_word(rng, al, rng() % 8));
    auto st = concat(s, t);
    REQUIRE(st.step_count() >= s.step_count());
    std::vector<Letter> leftover;
    for (std::size_t i = 0; i < st.step_count(); ++i) {
      StepMask a = i < s.step_count() ? s.steps()[i] : 0;
      StepMask b = st.steps()[i];
      REQUIRE((a & ~b) == 0);
      for_each_letter(static_cast<StepMask>(b & ~a),
                      [&](Letter x) { leftover.push_back(x); });
    }
    CHECK(foata_normalize(al, leftover) == t);
  }
}

TEST_CASE("left division") {
  auto al = th::ab_indep();
  auto ab = foata_normalize(al, "ab");
  auto abaa = foata_normalize(al, "abaa");
  auto q = left_divide(ab, abaa);
  REQUIRE(q.has_value());
  CHECK(*q == foata_normalize(al, "aa"));
  CHECK(prefix_le(ab, abaa));
  CHECK_FALSE(prefix_le(abaa, ab));
  CHECK_FALSE(prefix_le(foata_normalize(al, "bb"), abaa));

  std::mt19937_64 rng(99);
  for (int round = 0; round < 300; ++round) {
    auto a2 = th::random_alphabet(rng);
    auto s = foata_normalize(a2, th::random_word(rng, a2, rng() % 6));
    auto t = foata_normalize(a2, th::random_word(rng, a2, rng() % 6));
    auto st = concat(s, t);
    auto quot = left_divide(s, st);
    REQUIRE(quot.has_value());
    // Cancellativity: the quotient is exactly t.
    CHECK(*quot == t);
  }
}

TEST_CASE("primality and maximal letters") {
  auto al = th::ex1();
  auto t = foata_normalize(al, "acbdab");
  // Brute-force dependence order oracle on positions.
  auto w = al->parse_word("acbdab");
  int maxima = th::count_maximal_positions(al, w);
  CHECK(maxima == 1);
  CHECK(is_prime(t) == (maxima == 1));
  CHECK(maximal_letters(t) == bit(al->letter("b")));

  auto ind = th::ab_indep();
  CHECK(is_prime(foata_normalize(ind, "a")));
  CHECK_FALSE(is_prime(foata_normalize(ind, "ab")));
  CHECK(maximal_letters(foata_normalize(ind, "ab")) == 0x3);
  CHECK_FALSE(is_prime(FoataWord(ind)));

  std::mt19937_64 rng(3);
  for (int round = 0; round < 400; ++round) {
    auto a2 = th::random_alphabet(rng);
    auto word = th::random_word(rng, a2, rng() % 7);
    auto f = foata_normalize(a2, word);
    CHECK(is_prime(f) == (!word.empty() && th::count_maximal_positions(a2, word) == 1));
  }
}

TEST_CASE("foata word validation") {
  auto al = th::ab_dep();
  CHECK_THROWS_AS(FoataWord(al, {0x3}), InvariantError);        // a,b dependent
  CHECK_THROWS_AS(FoataWord(al, {0x1, 0x0}), InvariantError);   // empty step
  auto ind = th::ab_indep();
  CHECK_THROWS_AS(FoataWord(ind, {0x1, 0x2}), InvariantError);  // {a} ▷ {b} fails
  CHECK(FoataWord(ind, {0x3, 0x3}).render() == "{a,b}{a,b}");
}

TEST_CASE("multi-letter tokenization") {
  auto al = make_alphabet({"A", "B", "a", "b", "1", "10"}, {{"a", "b"}, {"A", "B"}});
  auto w = al->parse_word("AB a b 101");
  REQUIRE(w.size() == 6);
  CHECK(al->render_word(w) == "ABab101");
  CHECK(al->name(w[4]) == "10");  // greedy longest match
  CHECK(al->name(w[5]) == "1");
  CHECK_THROWS_AS(al->parse_word("xyz"), ParseError);
}

TEST_CASE("alphabet construction guards") {
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), InvariantError);
  CHECK_THROWS_AS(make_alphabet({"a"}, {{"a", "a"}}), InvariantError);
  CHECK_THROWS_AS(make_alphabet({}), InvariantError);
  CHECK_THROWS_AS(
      make_alphabet({"a", "b", "c", "d", "e", "f"}, {}, 5),
      ResourceError);
  auto al = th::ex1();
  CHECK(al->valid_step(0));
  CHECK(al->steps().size() == 7);  // 4 singletons + {a,c} + {b,d} + {c,d}
}
