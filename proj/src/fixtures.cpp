#include "regmeasure/fixtures.hpp"

#include <fstream>

#include "regmeasure/automata.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/groups.hpp"
#include "regmeasure/regex.hpp"

namespace regmeasure {

Dfa mod_count_language(std::size_t k) {
  if (k == 0) throw InputError("modulus must be positive");
  std::vector<StateId> delta;
  std::vector<bool> accepting(k, false);
  accepting[0] = true;
  for (std::size_t q = 0; q < k; ++q) {
    delta.push_back(static_cast<StateId>((q + 1) % k));
    delta.push_back(static_cast<StateId>((q + k - 1) % k));
  }
  return Dfa(Alphabet("ab"), k, 0, std::move(accepting), std::move(delta));
}

Dfa contains_ab() { return minimize(compile_regex("(a|b)*ab(a|b)*", Alphabet("ab"))); }
Dfa starts_with_ab() { return minimize(compile_regex("ab(a|b)*", Alphabet("ab"))); }
Dfa ba_star() { return minimize(compile_regex("(ba)*", Alphabet("ab"))); }

FiniteMonoid counterexample_monoid(const Config& config) {
  return FiniteMonoid::from_transformations(Alphabet("ef"), 4, {{0, 1, 0, 1}, {3, 2, 2, 3}}, config);
}

Dfa counterexample_fiber() {
  FiniteMonoid m = counterexample_monoid();
  std::vector<bool> accepting(m.size(), false);
  accepting[m.generator(0)] = true;
  return cayley_dfa(m, accepting);
}

std::vector<NamedFixture> fixture_corpus(const Config& config) {
  std::vector<NamedFixture> out;
  out.push_back({"parity", "#a - #b even", mod_count_language(2)});
  for (std::size_t k = 3; k <= 5; ++k) {
    out.push_back({"mod" + std::to_string(k), "#a - #b divisible by " + std::to_string(k), mod_count_language(k)});
  }
  out.push_back({"contains_ab", "(a|b)*ab(a|b)*", contains_ab()});
  out.push_back({"starts_ab", "ab(a|b)*", starts_with_ab()});
  out.push_back({"ba_star", "(ba)*", ba_star()});
  out.push_back({"counterexample_e", "fiber of e in the monoid generated by e=[0,1,0,1], f=[3,2,2,3]",
                 counterexample_fiber()});
  for (const char* preset : {"cyclic:6", "symmetric:3", "dihedral:8", "dihedral:16"}) {
    GroupPreset p = GroupPreset::parse(preset);
    std::string name;
    switch (p.family) {
      case GroupPreset::Family::cyclic: name = "wp_z" + std::to_string(p.parameter); break;
      case GroupPreset::Family::dihedral: name = "wp_d" + std::to_string(p.parameter); break;
      case GroupPreset::Family::symmetric: name = "wp_s" + std::to_string(p.parameter); break;
    }
    out.push_back({name, "word problem of " + p.name(), word_problem_language(build_group(p, config))});
  }
  return out;
}

std::vector<std::filesystem::path> emit_fixtures(const std::filesystem::path& directory, const Config& config) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw InputError("cannot create " + directory.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& f : fixture_corpus(config)) {
    auto path = directory / (f.name + ".dfa");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "# " << f.description << "\n" << format_dfa(f.dfa);
    out.close();
    if (!out) throw InputError("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace regmeasure
