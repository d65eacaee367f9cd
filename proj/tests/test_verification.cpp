#include <catch_amalgamated.hpp>

#include <algorithm>

#include "orientmap/report.hpp"
#include "orientmap/verification.hpp"

using namespace orientmap;

namespace {

bool has_exception(const SuiteReport& r, const std::string& claim, const std::string& subject) {
  return std::any_of(r.sanctioned_exceptions.begin(), r.sanctioned_exceptions.end(),
                     [&](const Finding& f) { return f.claim == claim && f.subject == subject; });
}

}  // namespace

TEST_CASE("equivalence suite at small n", "[verification]") {
  const auto one = equivalence_suite(1);
  CHECK(one.passed());
  CHECK(one.claims.at("quad-p").checks == 1);

  const auto three = equivalence_suite(3);
  CHECK(three.passed());
  CHECK(three.claims.at("quad-p").checks == 27);
  CHECK(three.sanctioned_exceptions.empty());

  const auto four = equivalence_suite(4);
  CHECK(four.passed());
  CHECK_FALSE(four.sanctioned_exceptions.empty());
  CHECK(has_exception(four, "triple-op-literal", "0,1,0,1"));
  CHECK(has_exception(four, "triple-op-literal", "1,0,1,0"));
  CHECK(has_exception(four, "triple-or-literal", "0,1,0,1"));
}

TEST_CASE("sanctioned exceptions are exactly the low-rank triple passers", "[verification]") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = equivalence_suite(n);
    REQUIRE(r.passed());
    std::size_t expected = 0;
    enumerate_all(n).for_each([&](MapIndex, std::span<const int> images) {
      const auto m = kernel::classify(images);
      if (m.image_size > 2) return;
      expected += (kernel::triple_test(images, Mode::Preserve) && !m.in_op);
      expected += (kernel::triple_test(images, Mode::Reverse) && !m.in_or);
    });
    CHECK(r.sanctioned_exceptions.size() == expected);
    if (n >= 4) CHECK(expected > 0);
    for (const auto& f : r.sanctioned_exceptions) CHECK(image_size(Mapping::parse(f.subject)) <= 2);
  }
}

TEST_CASE("class counts", "[verification]") {
  CHECK(count_classes(1) == ClassCounts{1, 1, 1, 1, 1, 1, 1});
  CHECK(count_classes(2) == ClassCounts{2, 4, 4, 4, 4, 4, 4});
  const auto three = count_classes(3);
  CHECK(three.total == 27);
  CHECK(three.op == 24);
  CHECK(three.or_ == 24);
  CHECK(three.p == 27);
  CHECK(three.op_and_or == 21);
  for (int n = 1; n <= 6; ++n) {
    INFO("n=" << n);
    CHECK(count_classes(n).consistent());
    CHECK(count_classes(n, {3}) == count_classes(n));
  }
}

TEST_CASE("identity suite", "[verification]") {
  for (int n = 1; n <= 4; ++n) {
    const auto r = identity_suite(n);
    INFO(format_text(r));
    CHECK(r.passed());
  }
  // At n = 2 every map is in all three classes.
  const auto c = count_classes(2);
  CHECK(c.op == 4);
  CHECK(c.or_ == 4);
  CHECK(c.p == 4);
  CHECK(count_classes(3).op_and_or == 21);
}

TEST_CASE("lemma suite", "[verification]") {
  const auto r = lemma_suite(4, {4, 4096, 1});
  CHECK(r.passed());
  CHECK(r.claims.at("lemma-op").checks > 0);
  CHECK(r.claims.at("lemma-or").checks > 0);

  // gamma on (0,2,4): anti-cyclic image, same as the reversed source.
  const Seq s(5, {0, 2, 4});
  const Seq image = apply_seq(reversal(5), s);
  CHECK(image == Seq(5, {4, 2, 0}));
  CHECK(orientation(s) == Orientation::CyclicOnly);
  CHECK(orientation(image) == Orientation::AntiCyclicOnly);
  CHECK(same_orientation(image, reverse(s)));
  CHECK(apply_seq(identity(5), s) == s);
}

TEST_CASE("suites are deterministic across thread counts", "[verification]") {
  for (int n : {3, 4, 5}) {
    CHECK(format_machine(equivalence_suite(n, {1})) == format_machine(equivalence_suite(n, {4})));
    CHECK(format_machine(lemma_suite(n, {5, 500, 1})) == format_machine(lemma_suite(n, {5, 500, 3})));
  }
}

TEST_CASE("merging partial reports is order independent", "[verification]") {
  auto part = [](const std::string& claim, MapIndex idx) {
    SuiteReport r;
    r.check(claim, 2);
    r.violation({claim, idx, std::to_string(idx), "x"});
    return r;
  };
  SuiteReport ab = part("a", 5);
  ab.merge(part("b", 1));
  ab.merge(part("a", 2));
  ab.sort();
  SuiteReport ba = part("a", 2);
  ba.merge(part("a", 5));
  ba.merge(part("b", 1));
  ba.sort();
  CHECK(ab.violations == ba.violations);
  CHECK(ab.claims == ba.claims);
  CHECK(ab.checks_run == 6);
  CHECK(ab.violations.front().subject == "2");
}

TEST_CASE("machine format", "[verification][report]") {
  const auto r = equivalence_suite(4);
  const std::string text = format_machine(r);
  CHECK(text.find("claim suite=equivalence n=4 claim=quad-p status=pass checks=256 violations=0 exceptions=0 witness=-\n") !=
        std::string::npos);
  CHECK(text.find("exception suite=equivalence n=4 claim=triple-op-literal witness=0,1,0,1 ") != std::string::npos);
  CHECK(text.rfind("suite suite=equivalence n=4 status=pass", std::string::npos) != std::string::npos);
  CHECK(text.find("ms") == std::string::npos);
}
