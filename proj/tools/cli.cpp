#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

#include "regmeasure/automata.hpp"
#include "regmeasure/density.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/fixtures.hpp"
#include "regmeasure/groups.hpp"
#include "regmeasure/measure.hpp"
#include "regmeasure/regex.hpp"

namespace regmeasure::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Sources {
  std::vector<std::string> regexes;
  std::vector<std::string> dfas;
  CLI::Option* regex_opt = nullptr;
  CLI::Option* dfa_opt = nullptr;

  void attach(CLI::App* sub) {
    regex_opt = sub->add_option("--regex", regexes, "language as a regular expression (needs --alphabet)")
                    ->allow_extra_args(false);
    dfa_opt = sub->add_option("--dfa", dfas, "language as a DFA file")->allow_extra_args(false);
  }
};

struct Globals {
  std::string alphabet;
  std::uint64_t seed = default_config().seed;
  bool dump_monoid = false;
  bool csv = false;
};

Dfa load_regex(const std::string& text, const Globals& g, const Config& config) {
  if (g.alphabet.empty()) throw InputError("--regex needs an explicit --alphabet");
  return compile_regex(text, Alphabet(g.alphabet), config);
}

Dfa load_file(const std::string& path, const Globals& g) {
  Dfa d = load_dfa(path);
  if (!g.alphabet.empty() && !(Alphabet(g.alphabet) == d.alphabet())) {
    throw InputError(path + ": alphabet '" + d.alphabet().symbols() + "' differs from --alphabet '" + g.alphabet + "'");
  }
  return d;
}

/// Every language source of a subcommand in command-line order.
std::vector<Dfa> languages(const CLI::App* sub, const Sources& s, const Globals& g, const Config& config) {
  std::vector<Dfa> out;
  std::size_t next_regex = 0, next_dfa = 0;
  for (const CLI::Option* opt : sub->parse_order()) {
    if (opt == s.regex_opt) out.push_back(load_regex(s.regexes.at(next_regex++), g, config));
    if (opt == s.dfa_opt) out.push_back(load_file(s.dfas.at(next_dfa++), g));
  }
  return out;
}

Dfa single_language(const CLI::App* sub, const Sources& s, const Globals& g, const Config& config) {
  auto all = languages(sub, s, g, config);
  if (all.size() != 1) throw InputError("expected exactly one of --regex or --dfa");
  return std::move(all.front());
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w);
  return out;
}

Json monoid_json(const Dfa& d, const Config& config) {
  RecognizingMorphism eta = syntactic_monoid(d, config);
  const FiniteMonoid& m = eta.monoid;
  GreenStructure green = green_structure(m);
  std::vector<Word> accepting, kernel;
  for (ElementId x = 0; x < m.size(); ++x) {
    if (eta.accepting[x]) accepting.push_back(m.word(x));
  }
  for (ElementId x : green.kernel) kernel.push_back(m.word(x));
  Json right = Json::array();
  for (ElementId x = 0; x < m.size(); ++x) {
    Json row = Json::array();
    for (Letter a = 0; a < m.alphabet().size(); ++a) row.push_back(m.right(x, a));
    right.push_back(row);
  }
  Json out;
  out["size"] = m.size();
  out["elements"] = words_json(m.element_words());
  out["accepting"] = words_json(accepting);
  out["kernel"] = words_json(kernel);
  Json h = Json::array();
  for (const auto& cls : green.h_classes) {
    std::vector<Word> ws;
    for (ElementId x : cls) ws.push_back(m.word(x));
    h.push_back(words_json(ws));
  }
  out["h_classes"] = h;
  out["right_cayley"] = right;
  return out;
}

std::vector<std::size_t> parse_levels(const std::string& text) {
  if (text.empty()) return default_levels();
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed level '" + item + "' in --levels");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("--levels is empty");
  return out;
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density and measurability of regular languages", "regmeasure"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--alphabet", g.alphabet, "alphabet symbols, e.g. ab");
  app.add_option("--seed", g.seed, "seed for sampled self-checks");
  app.add_flag("--dump-monoid", g.dump_monoid, "include the syntactic monoid in the report");
  app.add_flag("--csv", g.csv, "CSV instead of JSON where a table is produced");
  app.fallthrough();

  Sources density_src, classify_src, measure_src, approx_src, indep_src, subv_src, oracle_src;
  std::size_t partial = 0;
  auto* density_cmd = app.add_subcommand("density", "exact density, optionally a partial average");
  density_src.attach(density_cmd);
  density_cmd->add_option("--partial", partial, "also report the average over lengths 0..n-1");

  auto* classify_cmd = app.add_subcommand("classify", "algebraic and measure-theoretic summary");
  classify_src.attach(classify_cmd);

  auto* measure_cmd = app.add_subcommand("measure", "star-free measurability with certificate");
  measure_src.attach(measure_cmd);

  std::string levels_text;
  auto* approx_cmd = app.add_subcommand("approximate", "generalized definite sandwich per level");
  approx_src.attach(approx_cmd);
  approx_cmd->add_option("--levels", levels_text, "comma-separated levels (default 0,2,4,6,8,10)");

  auto* indep_cmd = app.add_subcommand("independence", "density of L ∩ K against the product");
  indep_src.attach(indep_cmd);

  std::string class_text;
  auto* subv_cmd = app.add_subcommand("subvariety", "measurability by a group subvariety");
  subv_src.attach(subv_cmd);
  subv_cmd->add_option("--class", class_text, "gcom, gnil:n, gsol:n or g")->required();

  auto* demo_cmd = app.add_subcommand("demo-counterexample", "check the 9-element counterexample monoid");

  std::size_t max_len = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate accepted words by length");
  oracle_src.attach(oracle_cmd);
  oracle_cmd->add_option("--max-len", max_len, "longest word length")->required();

  std::string fixture_dir;
  auto* emit_cmd = app.add_subcommand("emit-fixtures", "write the fixture DFA corpus");
  emit_cmd->add_option("directory", fixture_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 1;
  }

  Config config = default_config();
  config.seed = g.seed;
  try {
    Json report;
    std::optional<Dfa> dumped;
    if (density_cmd->parsed()) {
      Dfa d = single_language(density_cmd, density_src, g, config);
      report["density"] = to_string(density(d));
      if (density_cmd->count("--partial") > 0) {
        report["partial"] = {{"horizon", partial}, {"value", to_string(density_partial(d, partial, config))}};
      }
      dumped = std::move(d);
    } else if (classify_cmd->parsed()) {
      Dfa d = minimize(single_language(classify_cmd, classify_src, g, config));
      RecognizingMorphism eta = syntactic_monoid(d, config);
      const bool group = is_group(eta.monoid);
      auto forbidden = forbidden_word(d, config);
      report["states"] = d.state_count();
      report["monoid_size"] = eta.monoid.size();
      report["star_free"] = is_aperiodic(eta.monoid);
      report["group"] = group;
      report["commutative"] = is_commutative(eta.monoid);
      report["nilpotency_class"] = group ? optional_json(nilpotency_class(eta.monoid)) : Json(nullptr);
      report["derived_length"] = group ? optional_json(derived_length(eta.monoid)) : Json(nullptr);
      report["density"] = to_string(density(d));
      report["forbidden_word"] = forbidden ? Json(*forbidden) : Json(nullptr);
      report["sf_measurable"] =
          d.alphabet().size() >= 2 ? Json(decide_sf_measurable(d, config).measurable) : Json(nullptr);
      dumped = std::move(d);
    } else if (measure_cmd->parsed()) {
      Dfa d = single_language(measure_cmd, measure_src, g, config);
      SfDecision decision = decide_sf_measurable(d, config);
      report["measurable"] = decision.measurable;
      if (decision.measurable) {
        report["certificate"] = {{"kernel_size", decision.kernel_size}};
      } else {
        report["certificate"] = {{"h_class", words_json(decision.h_class)}};
      }
      dumped = std::move(d);
    } else if (approx_cmd->parsed()) {
      Dfa d = single_language(approx_cmd, approx_src, g, config);
      auto table = gap_table(d, parse_levels(levels_text), config);
      if (g.csv) {
        if (g.dump_monoid) throw InputError("--dump-monoid needs JSON output");
        out << "ell,inner_density,outer_density,gap,inclusion_verified\n";
        for (const auto& row : table) {
          out << row.level << ',' << to_string(row.inner_density) << ',' << to_string(row.outer_density) << ','
              << to_string(row.gap) << ',' << (row.inclusion_verified ? "true" : "false") << '\n';
        }
        return 0;
      }
      Json rows = Json::array();
      for (const auto& row : table) {
        rows.push_back({{"ell", row.level},
                        {"inner_density", to_string(row.inner_density)},
                        {"outer_density", to_string(row.outer_density)},
                        {"gap", to_string(row.gap)},
                        {"inclusion_verified", row.inclusion_verified}});
      }
      report["levels"] = rows;
      dumped = std::move(d);
    } else if (indep_cmd->parsed()) {
      auto pair = languages(indep_cmd, indep_src, g, config);
      if (pair.size() != 2) throw InputError("independence needs two languages, L then K");
      IndependenceReport r = check_independence(pair[0], pair[1], config);
      report["lhs"] = to_string(r.lhs);
      report["rhs"] = to_string(r.rhs);
      report["equal"] = r.equal;
    } else if (subv_cmd->parsed()) {
      Dfa d = single_language(subv_cmd, subv_src, g, config);
      GroupClass cls = GroupClass::parse(class_text);
      report["class"] = cls.name();
      report["measurable"] = subvariety_measurable(d, cls, config);
      dumped = std::move(d);
    } else if (demo_cmd->parsed()) {
      CounterexampleReport r = build_counterexample_report(config);
      report["monoid_size"] = r.monoid_size;
      report["elements"] = words_json(r.elements);
      report["relations_hold"] = r.relations_hold;
      report["kernel_size"] = r.kernel_size;
      report["kernel_is_nonidentity"] = r.kernel_is_nonidentity;
      report["h_e"] = words_json(r.h_e);
      report["h_f"] = words_json(r.h_f);
      report["kernel_r_class_count"] = r.kernel_r_class_count;
      report["h_class_size_in_kernel"] = r.h_class_size_in_kernel;
      report["fiber_measurable"] = r.fiber_measurable;
      report["identity_fiber_density"] = to_string(r.identity_fiber);
      report["kernel_fiber_density_sum"] = to_string(r.kernel_fiber_sum);
      report["failures"] = words_json(r.failures);
      report["passed"] = r.passed();
      if (g.dump_monoid) report["monoid"] = monoid_json(counterexample_fiber(), config);
      out << report.dump() << '\n';
      return r.passed() ? 0 : 3;
    } else if (oracle_cmd->parsed()) {
      Dfa d = single_language(oracle_cmd, oracle_src, g, config);
      auto words = enumerate_words(d, max_len, config);
      if (g.csv) {
        if (g.dump_monoid) throw InputError("--dump-monoid needs JSON output");
        out << "length,word\n";
        for (const auto& w : words) out << w.size() << ',' << w << '\n';
        return 0;
      }
      Json counts = Json::array();
      for (const auto& c : count_words_upto(d, max_len + 1)) counts.push_back(to_string(c));
      report["max_len"] = max_len;
      report["counts"] = counts;
      report["words"] = words_json(words);
      dumped = std::move(d);
    } else if (emit_cmd->parsed()) {
      Json paths = Json::array();
      for (const auto& p : emit_fixtures(fixture_dir, config)) paths.push_back(p.filename().string());
      report["directory"] = fixture_dir;
      report["written"] = paths;
    }
    if (g.dump_monoid) {
      if (!dumped) throw InputError("--dump-monoid needs a single-language command");
      report["monoid"] = monoid_json(*dumped, config);
    }
    if (g.csv) throw InputError("--csv applies to approximate and oracle only");
    out << report.dump() << '\n';
    return 0;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace regmeasure::cli
