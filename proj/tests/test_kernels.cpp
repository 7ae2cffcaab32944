#include <doctest.h>

#include "regmeasure/fixtures.hpp"
#include "regmeasure/groups.hpp"
#include "regmeasure/kernels.hpp"
#include "support.hpp"

using namespace regmeasure;

namespace {

struct Tree {
  std::vector<std::uint32_t> right, parent, letter;
  kernels::CayleyTree view;
};

Tree tree_of(const FiniteMonoid& m) {
  Tree t;
  const std::size_t k = m.alphabet().size();
  t.right.assign(m.right_cayley().begin(), m.right_cayley().end());
  t.parent.resize(m.size());
  t.letter.resize(m.size());
  for (ElementId x = 1; x < m.size(); ++x) {
    const Word& w = m.word(x);
    t.parent[x] = m.evaluate(w.substr(0, w.size() - 1));
    t.letter[x] = m.alphabet().index(w.back());
  }
  t.view = {m.size(), k, 0, t.right, t.parent, t.letter};
  return t;
}

}  // namespace

TEST_CASE("serial and parallel word-count steps agree") {
  std::mt19937 rng(41);
  for (std::size_t n : {3u, 50u, 700u}) {
    Dfa d = testing::random_dfa(rng, Alphabet("abc"), n, n);
    kernels::Predecessors pred(d);
    std::vector<BigInt> cur(n, 0), a(n), b(n);
    cur[d.initial()] = 1;
    for (int step = 0; step < 12; ++step) {
      kernels::serial::count_step(d, cur, a);
      kernels::parallel::count_step(d, pred, cur, b);
      CHECK(a == b);
      cur = a;
    }
  }
}

TEST_CASE("serial and parallel tables agree") {
  std::vector<FiniteMonoid> monoids;
  monoids.push_back(counterexample_monoid());
  monoids.push_back(build_group(GroupPreset::parse("dihedral:16")));
  monoids.push_back(build_group(GroupPreset::parse("cyclic:300")));
  std::mt19937 rng(42);
  for (int i = 0; i < 5; ++i) monoids.push_back(syntactic_monoid(testing::random_dfa(rng, Alphabet("ab"), 4, 6)).monoid);
  for (const auto& m : monoids) {
    Tree t = tree_of(m);
    auto s = kernels::serial::multiplication_table(t.view);
    auto p = kernels::parallel::multiplication_table(t.view);
    CHECK(s == p);
    CHECK(s == testing::brute_table(m));
    CHECK(kernels::serial::associativity_violations(s, m.size()) == 0);
    CHECK(kernels::parallel::associativity_violations(p, m.size()) == 0);
  }
  // a broken table: both count the same violations
  std::vector<std::uint32_t> bad{1, 0, 0, 0};  // NOR
  CHECK(kernels::serial::associativity_violations(bad, 2) == kernels::parallel::associativity_violations(bad, 2));
  CHECK(kernels::serial::associativity_violations(bad, 2) > 0);
}
