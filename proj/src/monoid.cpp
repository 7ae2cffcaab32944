#include "regmeasure/monoid.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "regmeasure/automata.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/graph.hpp"
#include "regmeasure/kernels.hpp"

namespace regmeasure {

namespace {

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (StateId v : t) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Transformation then(const Transformation& first, const Transformation& second) {
  Transformation out(first.size());
  for (std::size_t q = 0; q < first.size(); ++q) out[q] = second[first[q]];
  return out;
}

}  // namespace

FiniteMonoid FiniteMonoid::from_transformations(const Alphabet& alphabet, std::size_t degree,
                                                const std::vector<Transformation>& generators,
                                                const Config& config) {
  const std::size_t k = alphabet.size();
  if (generators.size() != k) throw InputError("need exactly one generator per letter");
  for (const auto& g : generators) {
    if (g.size() != degree) throw InputError("generator has the wrong degree");
    for (StateId v : g) {
      if (v >= degree) throw InputError("generator maps outside its carrier");
    }
  }

  FiniteMonoid m;
  m.alphabet_ = alphabet;
  std::vector<Transformation> elements;
  std::unordered_map<Transformation, ElementId, TransformationHash> ids;
  Transformation identity(degree);
  for (std::size_t q = 0; q < degree; ++q) identity[q] = static_cast<StateId>(q);
  ids.emplace(identity, 0);
  elements.push_back(std::move(identity));
  m.parent_.push_back(0);
  m.letter_.push_back(0);
  m.words_.emplace_back();

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      Transformation product = then(elements[i], generators[a]);
      auto [it, inserted] = ids.try_emplace(std::move(product), static_cast<ElementId>(elements.size()));
      if (inserted) {
        if (elements.size() >= config.monoid_size) {
          throw CapExceeded("monoid closure", elements.size() + 1, config.monoid_size);
        }
        elements.push_back(it->first);
        m.parent_.push_back(static_cast<ElementId>(i));
        m.letter_.push_back(a);
        m.words_.push_back(m.words_[i] + alphabet.symbol(a));
      }
      m.right_.push_back(it->second);
    }
  }
  m.size_ = elements.size();
  m.left_.resize(m.size_ * k);
  for (std::size_t x = 0; x < m.size_; ++x) {
    for (Letter a = 0; a < k; ++a) {
      m.left_[x * k + a] = ids.at(then(generators[a], elements[x]));
    }
  }
  m.finish(config);
  return m;
}

void FiniteMonoid::finish(const Config& config) {
  const std::size_t k = alphabet_.size();
  if (size_ <= kDenseTableLimit) {
    kernels::CayleyTree tree{size_, k, 0, right_, parent_, letter_};
    table_ = kernels::parallel::multiplication_table(tree);
  }
  // Identity laws and associativity of the product as served.
  for (std::size_t x = 0; x < size_; ++x) {
    auto e = static_cast<ElementId>(x);
    if (multiply(0, e) != e || multiply(e, 0) != e) {
      throw InternalError("identity law fails for element " + std::to_string(x));
    }
  }
  if (size_ <= config.exhaustive_associativity && has_table()) {
    if (kernels::parallel::associativity_violations(table_, size_) != 0) {
      throw InternalError("multiplication table is not associative");
    }
  } else {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(size_ - 1));
    for (std::size_t i = 0; i < config.associativity_samples; ++i) {
      ElementId x = pick(rng), y = pick(rng), z = pick(rng);
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
        throw InternalError("multiplication is not associative");
      }
    }
  }
}

ElementId FiniteMonoid::multiply(ElementId x, ElementId y) const {
  if (has_table()) return table_[static_cast<std::size_t>(x) * size_ + y];
  for (char c : words_.at(y)) x = right(x, alphabet_.index(c));
  return x;
}

ElementId FiniteMonoid::evaluate(std::string_view word) const {
  ElementId x = identity();
  for (char c : word) x = right(x, alphabet_.index(c));
  return x;
}

ElementId FiniteMonoid::power(ElementId x, std::size_t exponent) const {
  ElementId result = identity();
  ElementId base = x;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1;
  }
  return result;
}

RecognizingMorphism syntactic_monoid(const Dfa& d, const Config& config) {
  Dfa minimal = minimize(d);
  const std::size_t n = minimal.state_count();
  const std::size_t k = minimal.alphabet().size();
  std::vector<Transformation> generators(k, Transformation(n));
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter a = 0; a < k; ++a) generators[a][q] = minimal.next(static_cast<StateId>(q), a);
  }
  FiniteMonoid monoid = FiniteMonoid::from_transformations(minimal.alphabet(), n, generators, config);
  std::vector<bool> accepting(monoid.size());
  for (ElementId x = 0; x < monoid.size(); ++x) {
    accepting[x] = minimal.accepts(monoid.word(x));
  }
  return {std::move(monoid), std::move(accepting)};
}

Dfa cayley_dfa(const FiniteMonoid& monoid, const std::vector<bool>& accepting) {
  if (accepting.size() != monoid.size()) throw InputError("accepting set does not match monoid size");
  auto right = monoid.right_cayley();
  return Dfa(monoid.alphabet(), monoid.size(), monoid.identity(), accepting,
             std::vector<StateId>(right.begin(), right.end()));
}

namespace {

std::vector<std::vector<ElementId>> classes_of(const std::vector<std::uint32_t>& class_of,
                                               std::size_t count) {
  std::vector<std::vector<ElementId>> classes(count);
  for (ElementId x = 0; x < class_of.size(); ++x) classes[class_of[x]].push_back(x);
  return classes;
}

}  // namespace

GreenStructure green_structure(const FiniteMonoid& monoid) {
  const std::size_t n = monoid.size();
  const std::size_t k = monoid.alphabet().size();
  auto right = monoid.right_cayley();
  auto left = monoid.left_cayley();

  GreenStructure g;
  SccResult r = strongly_connected_components(n, k, right);
  SccResult l = strongly_connected_components(n, k, left);
  SccResult j = strongly_connected_components(n, k, right, left);
  auto bottoms = bottom_components(j, k, right, left);
  if (std::count(bottoms.begin(), bottoms.end(), true) != 1) {
    throw InternalError("monoid does not have a unique minimal ideal");
  }
  ElementId kernel_witness = 0;
  for (ElementId x = 0; x < n; ++x) {
    if (bottoms[j.component[x]]) {
      kernel_witness = x;
      break;
    }
  }

  order_components_by_min_vertex(r);
  order_components_by_min_vertex(l);
  order_components_by_min_vertex(j);
  g.r_of = std::move(r.component);
  g.l_of = std::move(l.component);
  g.j_of = std::move(j.component);
  g.r_classes = classes_of(g.r_of, r.count);
  g.l_classes = classes_of(g.l_of, l.count);
  g.j_classes = classes_of(g.j_of, j.count);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h_ids;
  g.h_of.resize(n);
  for (ElementId x = 0; x < n; ++x) {
    auto [it, _] = h_ids.try_emplace({g.r_of[x], g.l_of[x]}, static_cast<std::uint32_t>(h_ids.size()));
    g.h_of[x] = it->second;
  }
  g.h_classes = classes_of(g.h_of, h_ids.size());
  g.kernel_class = g.j_of[kernel_witness];
  g.kernel = g.j_classes[g.kernel_class];
  return g;
}

bool is_idempotent(const FiniteMonoid& monoid, ElementId x) { return monoid.multiply(x, x) == x; }

ElementId omega_power(const FiniteMonoid& monoid, ElementId x) {
  ElementId p = x;
  for (std::size_t i = 0; i <= monoid.size(); ++i) {
    if (is_idempotent(monoid, p)) return p;
    p = monoid.multiply(p, x);
  }
  throw InternalError("no idempotent power found");
}

bool is_aperiodic(const FiniteMonoid& monoid) {
  for (ElementId x = 0; x < monoid.size(); ++x) {
    ElementId w = omega_power(monoid, x);
    if (monoid.multiply(w, x) != w) return false;
  }
  return true;
}

bool is_h_trivial(const GreenStructure& green) {
  return std::all_of(green.h_classes.begin(), green.h_classes.end(),
                     [](const auto& c) { return c.size() == 1; });
}

bool is_group(const FiniteMonoid& monoid) {
  for (ElementId x = 1; x < monoid.size(); ++x) {
    if (is_idempotent(monoid, x)) return false;
  }
  return true;
}

bool is_commutative(const FiniteMonoid& monoid) {
  if (monoid.has_table()) {
    const std::size_t n = monoid.size();
    auto t = monoid.table();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (t[x * n + y] != t[y * n + x]) return false;
      }
    }
    return true;
  }
  // A generated monoid is commutative iff its generators commute.
  const std::size_t k = monoid.alphabet().size();
  for (Letter a = 0; a < k; ++a) {
    for (Letter b = a + 1; b < k; ++b) {
      if (monoid.multiply(monoid.generator(a), monoid.generator(b)) !=
          monoid.multiply(monoid.generator(b), monoid.generator(a))) {
        return false;
      }
    }
  }
  return true;
}

bool kernel_h_trivial(const GreenStructure& green) {
  for (ElementId x : green.kernel) {
    if (green.h_classes[green.h_of[x]].size() != 1) return false;
  }
  return true;
}

bool kernel_h_trivial(const FiniteMonoid& monoid) { return kernel_h_trivial(green_structure(monoid)); }

}  // namespace regmeasure
