#include "regmeasure/measure.hpp"

#include <exception>
#include <memory>
#include <optional>
#include <set>

#include "regmeasure/automata.hpp"
#include "regmeasure/density.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/fixtures.hpp"
#include "regmeasure/groups.hpp"

namespace regmeasure {

namespace {

void require_binary_alphabet(const Dfa& d) {
  if (d.alphabet().size() < 2) throw InputError("alphabet must have at least two letters");
}

std::vector<Word> words_of(const FiniteMonoid& m, const std::vector<ElementId>& xs) {
  std::vector<Word> out;
  for (ElementId x : xs) out.push_back(m.word(x));
  return out;
}

std::vector<bool> mask_of(std::size_t size, const std::vector<ElementId>& xs) {
  std::vector<bool> mask(size, false);
  for (ElementId x : xs) mask[x] = true;
  return mask;
}

}  // namespace

SfDecision decide_sf_measurable(const Dfa& d, const Config& config) {
  require_binary_alphabet(d);
  RecognizingMorphism eta = syntactic_monoid(d, config);
  GreenStructure green = green_structure(eta.monoid);
  SfDecision out;
  out.monoid_size = eta.monoid.size();
  out.kernel_size = green.kernel.size();
  out.measurable = true;
  for (const auto& h : green.h_classes) {
    if (h.size() > 1 && green.in_kernel(h.front())) {
      out.measurable = false;
      out.h_class = words_of(eta.monoid, h);
      break;
    }
  }
  return out;
}

SandwichReport gd_sandwich(const Dfa& d, std::size_t level, const Config& config) {
  require_binary_alphabet(d);
  if (level > config.sandwich_level) throw CapExceeded("sandwich level", level, config.sandwich_level);
  const Dfa language = minimize(d);
  const Alphabet& alphabet = language.alphabet();
  RecognizingMorphism eta = syntactic_monoid(language, config);
  GreenStructure green = green_structure(eta.monoid);
  if (!kernel_h_trivial(green)) {
    throw ImmeasurableKernel("kernel of the syntactic monoid has a nontrivial H-class");
  }
  auto monoid = std::make_shared<const FiniteMonoid>(std::move(eta.monoid));
  const std::size_t n = monoid->size();

  // For a kernel element m, mM is its R-class and Mm its L-class. A word
  // whose first `level` letters land in mM and whose last `level` letters
  // land in Mm maps into mM ∩ Mm = {m}. When one of the two classes is a
  // singleton that side alone already pins the image to m.
  std::vector<std::optional<GdExpr>> by_r(green.r_classes.size()), by_l(green.l_classes.size());
  auto approximant = [&](ElementId m) {
    const auto r = green.r_of[m];
    const auto l = green.l_of[m];
    if (!by_r[r]) by_r[r] = GdExpr::prefix(WordSet::image_slice(monoid, mask_of(n, green.r_classes[r]), level));
    if (!by_l[l]) by_l[l] = GdExpr::suffix(WordSet::image_slice(monoid, mask_of(n, green.l_classes[l]), level));
    if (green.r_classes[r].size() == 1) return *by_r[r];
    if (green.l_classes[l].size() == 1) return *by_l[l];
    return GdExpr::intersect(*by_r[r], *by_l[l]);
  };

  const std::size_t short_bound = 2 * level;
  std::vector<GdExpr> inner_parts, outer_parts;
  for (ElementId m : green.kernel) {
    if (eta.accepting[m]) {
      inner_parts.push_back(approximant(m));
    } else {
      outer_parts.push_back(GdExpr::complement(approximant(m)));
    }
  }
  inner_parts.push_back(GdExpr::finite(FiniteSet::bounded(language, short_bound)));
  outer_parts.push_back(GdExpr::complement(GdExpr::finite(FiniteSet::bounded(complement(language), short_bound))));

  GdExpr inner = GdExpr::any_of(inner_parts);
  GdExpr outer = GdExpr::all_of(outer_parts);
  Dfa inner_dfa = inner.compile(alphabet, config);
  Dfa outer_dfa = outer.compile(alphabet, config);
  const bool verified = is_subset(inner_dfa, language, config) && is_subset(language, outer_dfa, config);
  BigRational inner_density = density(inner_dfa);
  BigRational outer_density = density(outer_dfa);
  BigRational gap = outer_density - inner_density;
  return SandwichReport{level,          std::move(inner),         std::move(outer), std::move(inner_dfa),
                        std::move(outer_dfa), std::move(inner_density), std::move(outer_density),
                        std::move(gap), verified};
}

std::vector<SandwichReport> gap_table(const Dfa& d, const std::vector<std::size_t>& levels, const Config& config) {
  require_binary_alphabet(d);
  for (std::size_t level : levels) {
    if (level > config.sandwich_level) throw CapExceeded("sandwich level", level, config.sandwich_level);
  }
  std::vector<std::optional<SandwichReport>> slots(levels.size());
  std::vector<std::exception_ptr> errors(levels.size());
  const long count = static_cast<long>(levels.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      slots[i] = gd_sandwich(d, levels[i], config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SandwichReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

IndependenceReport check_independence(const Dfa& l, const Dfa& k, const Config& config) {
  if (!is_aperiodic(syntactic_monoid(l, config).monoid)) {
    throw NotStarFree("first language is not star-free (syntactic monoid is not aperiodic)");
  }
  if (!is_group(syntactic_monoid(k, config).monoid)) {
    throw NotGroupLanguage("second language is not a group language");
  }
  IndependenceReport out;
  out.lhs = density(combine(l, k, BoolOp::conjunction, config));
  out.rhs = density(l) * density(k);
  out.equal = out.lhs == out.rhs;
  return out;
}

GroupClass GroupClass::parse(const std::string& text) {
  GroupClass c;
  if (text == "g") return c;
  if (text == "gcom") {
    c.kind = Kind::commutative;
    return c;
  }
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (colon != std::string::npos && (head == "gnil" || head == "gsol")) {
    const std::string tail = text.substr(colon + 1);
    if (!tail.empty() && tail.size() <= 9 && tail.find_first_not_of("0123456789") == std::string::npos) {
      c.kind = head == "gnil" ? Kind::nilpotent : Kind::solvable;
      c.bound = std::stoul(tail);
      return c;
    }
  }
  throw InputError("unknown group class '" + text + "' (expected gcom, gnil:n, gsol:n or g)");
}

std::string GroupClass::name() const {
  switch (kind) {
    case Kind::commutative: return "gcom";
    case Kind::nilpotent: return "gnil:" + std::to_string(bound);
    case Kind::solvable: return "gsol:" + std::to_string(bound);
    case Kind::all: return "g";
  }
  return {};
}

bool subvariety_measurable(const Dfa& d, const GroupClass& cls, const Config& config) {
  require_binary_alphabet(d);
  FiniteMonoid group = syntactic_monoid(d, config).monoid;
  require_group(group);
  switch (cls.kind) {
    case GroupClass::Kind::commutative: return is_commutative(group);
    case GroupClass::Kind::nilpotent: {
      auto c = nilpotency_class(group);
      return c && *c <= cls.bound;
    }
    case GroupClass::Kind::solvable: {
      auto c = derived_length(group);
      return c && *c <= cls.bound;
    }
    case GroupClass::Kind::all: return true;
  }
  return false;
}

CounterexampleReport build_counterexample_report(const Config& config) {
  CounterexampleReport r;
  auto check = [&r](bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  };
  FiniteMonoid m = counterexample_monoid(config);
  r.monoid_size = m.size();
  r.elements = m.element_words();
  check(r.monoid_size == 9, "monoid has 9 elements");
  {
    std::set<Word> got(r.elements.begin(), r.elements.end());
    std::set<Word> want{"", "e", "ef", "efe", "efef", "f", "fe", "fef", "fefe"};
    check(got == want, "elements are id,e,ef,efe,efef,f,fe,fef,fefe");
  }
  const ElementId e = m.evaluate("e");
  const ElementId f = m.evaluate("f");
  r.relations_hold = m.evaluate("ee") == e && m.evaluate("ff") == f && m.evaluate("efefe") == e &&
                     m.evaluate("fefef") == f;
  check(r.relations_hold, "ee = e, ff = f, efefe = e, fefef = f");

  GreenStructure green = green_structure(m);
  r.kernel_size = green.kernel.size();
  r.kernel_is_nonidentity = r.kernel_size + 1 == m.size() && !green.in_kernel(m.identity());
  check(r.kernel_is_nonidentity, "kernel is every non-identity element");
  r.h_e = words_of(m, green.h_classes[green.h_of[e]]);
  r.h_f = words_of(m, green.h_classes[green.h_of[f]]);
  check(r.h_e == std::vector<Word>{"e", "efe"}, "H_e = {e, efe}");
  check(r.h_f == std::vector<Word>{"f", "fef"}, "H_f = {f, fef}");
  std::set<std::uint32_t> kernel_r, kernel_h_sizes;
  for (ElementId x : green.kernel) {
    kernel_r.insert(green.r_of[x]);
    kernel_h_sizes.insert(static_cast<std::uint32_t>(green.h_classes[green.h_of[x]].size()));
  }
  r.kernel_r_class_count = kernel_r.size();
  r.h_class_size_in_kernel = kernel_h_sizes.size() == 1 ? *kernel_h_sizes.begin() : 0;
  check(r.kernel_r_class_count == 2, "kernel has 2 R-classes");
  check(r.h_class_size_in_kernel == 2, "kernel H-classes have size 2");

  Dfa fiber = counterexample_fiber();
  SfDecision decision = decide_sf_measurable(fiber, config);
  r.fiber_measurable = decision.measurable;
  r.fiber_syntactic_size = decision.monoid_size;
  check(!r.fiber_measurable, "fiber of e is not SF-measurable");
  check(r.fiber_syntactic_size == 9, "fiber of e has a 9-element syntactic monoid");

  std::vector<BigRational> fibers = fiber_densities(m);
  r.identity_fiber = fibers[m.identity()];
  r.kernel_fiber_sum = 0;
  for (ElementId x : green.kernel) r.kernel_fiber_sum += fibers[x];
  check(r.identity_fiber == 0, "identity fiber is null");
  check(r.kernel_fiber_sum == 1, "kernel fibers sum to 1");
  return r;
}

CounterexampleReport counterexample_report(const Config& config) {
  CounterexampleReport r = build_counterexample_report(config);
  if (!r.passed()) {
    std::string what = "counterexample check failed:";
    for (const auto& f : r.failures) what += " [" + f + "]";
    throw InternalError(what);
  }
  return r;
}

}  // namespace regmeasure
