#include <catch_amalgamated.hpp>

#include <map>
#include <string>

#include "orientmap/witnesses.hpp"

using namespace orientmap;

namespace {

Orientation image_orientation(const Mapping& alpha, std::span<const int> points) {
  std::vector<int> image;
  for (int p : points) image.push_back(alpha(p));
  return kernel::orientation(image);
}

}  // namespace

TEST_CASE("triple witness examples", "[witness]") {
  const Mapping swap_tail = make_mapping(4, {0, 1, 3, 2});
  const auto w = witness_triple(swap_tail, Mode::Preserve);
  CHECK(w.points == std::array<int, 3>{2, 3, 0});
  CHECK(w.proof_case == TripleCase::One);
  CHECK_FALSE(w.swapped);
  CHECK(w.case_label() == "1");
  CHECK(image_orientation(swap_tail, w.points) == Orientation::AntiCyclicOnly);

  const Mapping gamma = reversal(4);
  const auto g = witness_triple(gamma, Mode::Preserve);
  CHECK(g.points == std::array<int, 3>{0, 1, 2});
  CHECK(apply_seq(gamma, Seq(4, {0, 1, 2})) == Seq(4, {3, 2, 1}));
  CHECK(validate(g, gamma));

  const Mapping mixed = make_mapping(4, {2, 1, 0, 3});
  const auto m = witness_triple(mixed, Mode::Preserve);
  CHECK(validate(m, mixed));
  CHECK(kernel::orientation(m.points) == Orientation::CyclicOnly);
  CHECK(image_orientation(mixed, m.points) == Orientation::AntiCyclicOnly);
}

TEST_CASE("reverse-mode triple witness goes through gamma", "[witness]") {
  const Mapping swap_tail = make_mapping(4, {0, 1, 3, 2});
  const auto w = witness_triple(swap_tail, Mode::Reverse);
  CHECK(w.gamma_composed);
  CHECK(w.case_label().rfind("gamma-composed:", 0) == 0);
  CHECK(kernel::orientation(w.points) == Orientation::CyclicOnly);
  CHECK(image_orientation(swap_tail, w.points) == Orientation::CyclicOnly);
  // Same points as the preserve construction on alpha*gamma.
  const auto on_beta = witness_triple(compose(swap_tail, reversal(4)), Mode::Preserve);
  CHECK(on_beta.points == w.points);
}

TEST_CASE("triple witness preconditions", "[witness]") {
  CHECK_THROWS_AS(witness_triple(identity(5), Mode::Preserve), PreconditionError);
  CHECK_THROWS_AS(witness_triple(reversal(5), Mode::Reverse), PreconditionError);
  // Rank 2, outside OP and OR, yet no triple witness exists.
  CHECK_THROWS_AS(witness_triple(make_mapping(4, {0, 1, 0, 1}), Mode::Preserve), PreconditionError);
  CHECK_THROWS_AS(witness_triple(make_mapping(4, {0, 1, 0, 1}), Mode::Reverse), PreconditionError);
}

TEST_CASE("quad witness examples", "[witness]") {
  const Mapping alt = make_mapping(4, {0, 1, 0, 1});
  const auto w = witness_quad(alt);
  CHECK(w.points == std::array<int, 4>{0, 1, 2, 3});
  CHECK(w.proof_case == QuadCase::Case1Min);
  CHECK(image_orientation(alt, w.points) == Orientation::Neither);

  const Mapping swap_tail = make_mapping(4, {0, 1, 3, 2});
  const auto s = witness_quad(swap_tail);
  CHECK(validate(s, swap_tail));
  CHECK(image_orientation(swap_tail, s.points) == Orientation::Neither);

  CHECK_THROWS_AS(witness_quad(identity(4)), PreconditionError);
  CHECK_THROWS_AS(witness_quad(make_mapping(4, {0, 0, 3, 2})), PreconditionError);
}

TEST_CASE("validation rejects forged witnesses", "[witness]") {
  const Mapping swap_tail = make_mapping(4, {0, 1, 3, 2});
  TripleWitness forged;
  forged.points = {0, 1, 2};  // image (0,1,3) is cyclic
  CHECK_FALSE(validate(forged, swap_tail));
  forged.points = {2, 2, 0};
  CHECK_FALSE(validate(forged, swap_tail));
  forged.points = {0, 3, 2};  // not a cyclic source
  CHECK_FALSE(validate(forged, swap_tail));

  QuadWitness q;
  q.points = {0, 1, 2, 3};
  CHECK_FALSE(validate(q, identity(4)));
  q.points = {0, 1, 2, 9};
  CHECK_FALSE(validate(q, identity(4)));
}

TEST_CASE("witnesses are total on their domain", "[witness][exhaustive]") {
  std::map<std::string, std::size_t> triple_cases;
  std::map<std::string, std::size_t> quad_cases;
  for (int n = 1; n <= 6; ++n) {
    enumerate_all(n).for_each([&](MapIndex, std::span<const int> images) {
      const Mapping alpha(n, std::vector<int>(images.begin(), images.end()));
      const auto r = classify(alpha);
      INFO(alpha.to_string());
      if (!r.in_op && r.image_size >= 3) {
        const auto w = witness_triple(alpha, Mode::Preserve);
        REQUIRE(validate(w, alpha));
        ++triple_cases[std::string(to_string(w.proof_case))];
      }
      if (!r.in_or && r.image_size >= 3) {
        const auto w = witness_triple(alpha, Mode::Reverse);
        REQUIRE(validate(w, alpha));
      }
      if (!r.in_p) {
        const auto w = witness_quad(alpha);
        REQUIRE(validate(w, alpha));
        ++quad_cases[w.case_label()];
        if (w.proof_case == QuadCase::Case1Min) {
          // m = i alpha < (i+1) alpha > k alpha < (k+1) alpha > i alpha = m
          const auto [i, i1, k, k1] = w.points;
          const int m = *std::min_element(images.begin(), images.end());
          REQUIRE(alpha(i) == m);
          REQUIRE(alpha(i) < alpha(i1));
          REQUIRE(alpha(i1) > alpha(k));
          REQUIRE(alpha(k) < alpha(k1));
          REQUIRE(alpha(k1) > alpha(i));
        }
      }
    });
  }
  // Every branch of both constructions is exercised somewhere in n <= 6.
  for (const char* c : {"1", "2", "3.1", "3.2", "3.3"}) {
    INFO("triple case " << c);
    CHECK(triple_cases[c] > 0);
  }
  for (const char* c : {"case1-min", "case1-max", "case2"}) {
    INFO("quad case " << c);
    CHECK(quad_cases[c] > 0);
  }
}
