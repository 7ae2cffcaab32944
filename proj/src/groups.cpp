#include "regmeasure/groups.hpp"

#include <algorithm>

#include "regmeasure/errors.hpp"

namespace regmeasure {

GroupPreset GroupPreset::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("group preset must look like 'family:n'");
  std::string family = text.substr(0, colon);
  std::size_t parameter = 0;
  try {
    std::size_t used = 0;
    parameter = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("bad group parameter in '" + text + "'");
  }
  if (family == "cyclic") return {Family::cyclic, parameter};
  if (family == "dihedral") return {Family::dihedral, parameter};
  if (family == "symmetric") return {Family::symmetric, parameter};
  throw InputError("unknown group family '" + family + "'");
}

std::string GroupPreset::name() const {
  switch (family) {
    case Family::cyclic: return "cyclic:" + std::to_string(parameter);
    case Family::dihedral: return "dihedral:" + std::to_string(parameter);
    case Family::symmetric: return "symmetric:" + std::to_string(parameter);
  }
  return {};
}

FiniteMonoid build_group(const GroupPreset& preset, const Config& config) {
  const Alphabet ab("ab");
  std::size_t order = 0;
  std::vector<Transformation> generators;
  switch (preset.family) {
    case GroupPreset::Family::cyclic: {
      const std::size_t k = preset.parameter;
      if (k == 0) throw InputError("cyclic group needs k >= 1");
      order = k;
      if (order > config.group_order) throw CapExceeded("group order", order, config.group_order);
      Transformation up(k), down(k);
      for (std::size_t i = 0; i < k; ++i) {
        up[i] = static_cast<StateId>((i + 1) % k);
        down[i] = static_cast<StateId>((i + k - 1) % k);
      }
      generators = {up, down};
      break;
    }
    case GroupPreset::Family::dihedral: {
      // Right regular action on r^j s^f, indexed j + m f.
      const std::size_t order2m = preset.parameter;
      if (order2m < 2 || order2m % 2 != 0) throw InputError("dihedral group order must be even and >= 2");
      order = order2m;
      if (order > config.group_order) throw CapExceeded("group order", order, config.group_order);
      const std::size_t m = order2m / 2;
      Transformation r(order2m), s(order2m);
      for (std::size_t f = 0; f < 2; ++f) {
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t rotated = f == 0 ? (j + 1) % m : (j + m - 1) % m;
          r[j + m * f] = static_cast<StateId>(rotated + m * f);
          s[j + m * f] = static_cast<StateId>(j + m * (1 - f));
        }
      }
      generators = {r, s};
      break;
    }
    case GroupPreset::Family::symmetric: {
      if (preset.parameter != 3) throw InputError("only symmetric:3 is available");
      order = 6;
      generators = {{1, 0, 2}, {1, 2, 0}};
      break;
    }
  }
  FiniteMonoid group = FiniteMonoid::from_transformations(ab, generators.front().size(), generators, config);
  if (group.size() != order) {
    throw InternalError(preset.name() + " generated " + std::to_string(group.size()) + " elements");
  }
  return group;
}

void require_group(const FiniteMonoid& monoid) {
  if (!is_group(monoid)) throw NotGroupLanguage("monoid is not a group");
}

ElementId inverse(const FiniteMonoid& group, ElementId x) {
  // x^{k-1} where x^k = 1.
  ElementId previous = group.identity();
  ElementId p = x;
  for (std::size_t i = 0; i <= group.size(); ++i) {
    if (p == group.identity()) return previous;
    previous = p;
    p = group.multiply(p, x);
  }
  throw NotGroupLanguage("element has no inverse");
}

ElementId commutator(const FiniteMonoid& group, ElementId x, ElementId y) {
  return group.multiply(group.multiply(x, y), group.multiply(inverse(group, x), inverse(group, y)));
}

std::vector<bool> subgroup_closure(const FiniteMonoid& group, const std::vector<ElementId>& generators) {
  // In a finite group the submonoid generated by a set is a subgroup.
  std::vector<bool> member(group.size(), false);
  std::vector<ElementId> queue{group.identity()};
  member[group.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementId g : generators) {
      ElementId next = group.multiply(queue[i], g);
      if (!member[next]) {
        member[next] = true;
        queue.push_back(next);
      }
    }
  }
  return member;
}

std::vector<bool> commutator_subgroup(const FiniteMonoid& group, const std::vector<bool>& lhs,
                                      const std::vector<bool>& rhs) {
  std::vector<bool> seen(group.size(), false);
  std::vector<ElementId> generators;
  std::vector<ElementId> inverses(group.size());
  for (ElementId x = 0; x < group.size(); ++x) inverses[x] = inverse(group, x);
  for (ElementId x = 0; x < group.size(); ++x) {
    if (!lhs[x]) continue;
    for (ElementId y = 0; y < group.size(); ++y) {
      if (!rhs[y]) continue;
      ElementId c = group.multiply(group.multiply(x, y), group.multiply(inverses[x], inverses[y]));
      if (!seen[c]) {
        seen[c] = true;
        generators.push_back(c);
      }
    }
  }
  return subgroup_closure(group, generators);
}

namespace {

std::size_t order_of(const std::vector<bool>& subgroup) {
  return static_cast<std::size_t>(std::count(subgroup.begin(), subgroup.end(), true));
}

template <typename Next>
std::vector<std::vector<bool>> series(const FiniteMonoid& group, Next next) {
  require_group(group);
  std::vector<std::vector<bool>> out{std::vector<bool>(group.size(), true)};
  // Each strict step at least halves the order, so this is bounded.
  for (std::size_t i = 0; i <= group.size(); ++i) {
    std::vector<bool> following = next(out.back());
    if (following == out.back()) return out;
    out.push_back(std::move(following));
  }
  throw InternalError("subgroup series did not stabilize");
}

std::optional<std::size_t> length_to_trivial(const std::vector<std::vector<bool>>& chain) {
  if (order_of(chain.back()) != 1) return std::nullopt;
  return chain.size() - 1;
}

}  // namespace

std::vector<std::vector<bool>> lower_central_series(const FiniteMonoid& group) {
  const std::vector<bool> whole(group.size(), true);
  return series(group, [&](const std::vector<bool>& current) {
    return commutator_subgroup(group, current, whole);
  });
}

std::vector<std::vector<bool>> derived_series(const FiniteMonoid& group) {
  return series(group, [&](const std::vector<bool>& current) {
    return commutator_subgroup(group, current, current);
  });
}

std::optional<std::size_t> nilpotency_class(const FiniteMonoid& group) {
  return length_to_trivial(lower_central_series(group));
}

std::optional<std::size_t> derived_length(const FiniteMonoid& group) {
  return length_to_trivial(derived_series(group));
}

Dfa word_problem_language(const FiniteMonoid& group) {
  require_group(group);
  std::vector<bool> accepting(group.size(), false);
  accepting[group.identity()] = true;
  return cayley_dfa(group, accepting);
}

}  // namespace regmeasure
