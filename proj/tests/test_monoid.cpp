#include <doctest.h>

#include "regmeasure/automata.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/fixtures.hpp"
#include "regmeasure/groups.hpp"
#include "regmeasure/monoid.hpp"
#include "support.hpp"

using namespace regmeasure;

namespace {

const Alphabet ab("ab");

std::vector<std::set<ElementId>> as_sets(const std::vector<std::vector<ElementId>>& classes) {
  std::vector<std::set<ElementId>> out;
  for (const auto& c : classes) out.emplace_back(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Green's relations from explicit ideals.
void check_green_by_ideals(const FiniteMonoid& m) {
  const auto t = testing::brute_table(m);
  const std::size_t n = m.size();
  auto right_ideal = [&](ElementId x) {
    std::set<ElementId> s;
    for (ElementId y = 0; y < n; ++y) s.insert(t[x * n + y]);
    return s;
  };
  auto left_ideal = [&](ElementId x) {
    std::set<ElementId> s;
    for (ElementId y = 0; y < n; ++y) s.insert(t[y * n + x]);
    return s;
  };
  auto two_sided = [&](ElementId x) {
    std::set<ElementId> s;
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) s.insert(t[t[y * n + x] * n + z]);
    }
    return s;
  };
  GreenStructure g = green_structure(m);
  CHECK(as_sets(g.r_classes) == testing::classes_by(n, right_ideal));
  CHECK(as_sets(g.l_classes) == testing::classes_by(n, left_ideal));
  CHECK(as_sets(g.j_classes) == testing::classes_by(n, two_sided));
  auto h = testing::classes_by(n, [&](ElementId x) {
    auto r = right_ideal(x);
    auto l = left_ideal(x);
    std::set<ElementId> key;
    for (ElementId y : r) key.insert(y);
    for (ElementId y : l) key.insert(static_cast<ElementId>(y + n));
    return key;
  });
  CHECK(as_sets(g.h_classes) == h);
  // kernel: the J-class contained in every two-sided ideal
  std::set<ElementId> kernel(g.kernel.begin(), g.kernel.end());
  for (ElementId x = 0; x < n; ++x) {
    auto ideal = two_sided(x);
    for (ElementId k : kernel) CHECK(ideal.count(k) == 1);
  }
}

}  // namespace

TEST_CASE("syntactic monoid sizes and element words") {
  CHECK(syntactic_monoid(contains_ab()).monoid.size() == 5);
  CHECK(syntactic_monoid(mod_count_language(4)).monoid.size() == 4);
  CHECK(syntactic_monoid(universal_dfa(ab)).monoid.size() == 1);
  auto eta = syntactic_monoid(contains_ab());
  CHECK(eta.monoid.element_words() == std::vector<Word>{"", "a", "b", "ab", "ba"});
  CHECK(eta.accepts("bbab"));
  CHECK_FALSE(eta.accepts("bbaa"));
}

TEST_CASE("products agree with concatenation and are associative") {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    Dfa d = testing::random_dfa(rng, ab, 1, 5);
    auto eta = syntactic_monoid(d);
    const FiniteMonoid& m = eta.monoid;
    const auto t = testing::brute_table(m);
    for (ElementId x = 0; x < m.size(); ++x) {
      for (ElementId y = 0; y < m.size(); ++y) CHECK(m.multiply(x, y) == t[x * m.size() + y]);
    }
    // recognizes the language
    CHECK(testing::agree_upto(ab, 8, [&](const Word& w) { return eta.accepts(w); },
                              [&](const Word& w) { return d.accepts(w); }));
    // representative words are shortlex-least preimages
    std::vector<bool> seen(m.size(), false);
    std::size_t next = 0;
    for (const auto& w : testing::words_upto(ab, 8)) {
      ElementId x = m.evaluate(w);
      if (!seen[x]) {
        seen[x] = true;
        CHECK(m.word(x) == w);
        CHECK(x == next);
        ++next;
      }
    }
    // cayley automaton recognizes the same fiber union
    CHECK(language_equal(cayley_dfa(m, eta.accepting), d));
  }
}

TEST_CASE("Green's relations match explicit ideals") {
  std::mt19937 rng(22);
  for (int i = 0; i < 40; ++i) check_green_by_ideals(syntactic_monoid(testing::random_dfa(rng, ab, 1, 5)).monoid);
  check_green_by_ideals(counterexample_monoid());
  check_green_by_ideals(build_group(GroupPreset::parse("symmetric:3")));
}

TEST_CASE("aperiodicity and group tests") {
  CHECK(is_aperiodic(syntactic_monoid(contains_ab()).monoid));
  CHECK(is_aperiodic(syntactic_monoid(ba_star()).monoid));
  CHECK_FALSE(is_aperiodic(syntactic_monoid(mod_count_language(2)).monoid));
  CHECK(is_group(syntactic_monoid(mod_count_language(3)).monoid));
  CHECK_FALSE(is_group(syntactic_monoid(contains_ab()).monoid));
  CHECK_FALSE(is_aperiodic(counterexample_monoid()));
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto m = syntactic_monoid(testing::random_dfa(rng, ab, 1, 5)).monoid;
    // aperiodic iff every H-class is a singleton
    CHECK(is_aperiodic(m) == is_h_trivial(green_structure(m)));
    // a group iff x -> xy is a bijection for every y
    bool bijective = true;
    for (ElementId y = 0; y < m.size() && bijective; ++y) {
      std::set<ElementId> image;
      for (ElementId x = 0; x < m.size(); ++x) image.insert(m.multiply(x, y));
      bijective = image.size() == m.size();
    }
    CHECK(is_group(m) == bijective);
    CHECK(is_group(syntactic_monoid(testing::random_permutation_dfa(rng, ab, 5)).monoid));
  }
}

TEST_CASE("group presets") {
  CHECK(build_group(GroupPreset::parse("cyclic:2")).size() == 2);
  CHECK(build_group(GroupPreset::parse("cyclic:6")).size() == 6);
  CHECK(build_group(GroupPreset::parse("symmetric:3")).size() == 6);
  CHECK(build_group(GroupPreset::parse("dihedral:8")).size() == 8);
  CHECK(build_group(GroupPreset::parse("dihedral:16")).size() == 16);
  CHECK(GroupPreset::parse("dihedral:8").name() == "dihedral:8");
  CHECK_THROWS_AS(build_group(GroupPreset::parse("dihedral:7")), InputError);
  CHECK_THROWS_AS(GroupPreset::parse("alternating:4"), InputError);
  Config tight;
  tight.group_order = 10;
  CHECK_THROWS_AS(build_group(GroupPreset::parse("cyclic:12"), tight), CapExceeded);
  CHECK_THROWS_AS(require_group(syntactic_monoid(contains_ab()).monoid), NotGroupLanguage);
}

TEST_CASE("word problem syntactic monoid is the group") {
  for (const char* p : {"cyclic:6", "symmetric:3", "dihedral:8", "dihedral:16"}) {
    FiniteMonoid g = build_group(GroupPreset::parse(p));
    FiniteMonoid s = syntactic_monoid(word_problem_language(g)).monoid;
    INFO(p);
    CHECK(testing::isomorphic(s, g));
  }
  CHECK_FALSE(testing::isomorphic(build_group(GroupPreset::parse("cyclic:6")),
                                  build_group(GroupPreset::parse("symmetric:3"))));
}

TEST_CASE("nilpotency class and derived length") {
  auto group = [](const char* p) { return build_group(GroupPreset::parse(p)); };
  CHECK(nilpotency_class(group("dihedral:4")) == 1u);
  CHECK(nilpotency_class(group("dihedral:8")) == 2u);
  CHECK(nilpotency_class(group("dihedral:16")) == 3u);
  CHECK(nilpotency_class(group("cyclic:6")) == 1u);
  CHECK_FALSE(nilpotency_class(group("symmetric:3")).has_value());
  CHECK(derived_length(group("symmetric:3")) == 2u);
  CHECK(derived_length(group("cyclic:5")) == 1u);
  CHECK(derived_length(group("dihedral:16")) == 2u);
  CHECK(nilpotency_class(group("cyclic:1")) == 0u);
  CHECK(derived_length(group("cyclic:1")) == 0u);
  // commutator subgroup of S3 is A3
  FiniteMonoid s3 = group("symmetric:3");
  std::vector<bool> all(s3.size(), true);
  auto derived = commutator_subgroup(s3, all, all);
  CHECK(std::count(derived.begin(), derived.end(), true) == 3);
  for (ElementId x = 0; x < s3.size(); ++x) CHECK(s3.multiply(x, inverse(s3, x)) == s3.identity());
}
