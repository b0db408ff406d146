#include "ncgb/commands.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ncgb/families.hpp"
#include "ncgb/grassmann.hpp"
#include "ncgb/groebner.hpp"
#include "ncgb/parallel.hpp"
#include "ncgb/parse.hpp"
#include "ncgb/pbw.hpp"
#include "ncgb/rewrite.hpp"

namespace ncgb {

namespace {

using nlohmann::json;

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string dimension_table(const VerificationReport& r) {
  std::ostringstream os;
  os << pad("multidegree", 18) << pad("normal", 10) << pad("reference", 11) << "status\n";
  for (const auto& row : r.rows) {
    os << pad(row.multidegree.to_string(), 18) << pad(std::to_string(row.normal), 10)
       << pad(std::to_string(row.reference), 11) << (row.matches() ? "ok" : "MISMATCH") << '\n';
  }
  return os.str();
}

std::string composition_summary(const CompositionReport& c) {
  std::ostringstream os;
  os << "compositions up to degree " << c.bound << ": " << c.checked << " checked, " << c.failed.size()
     << " failed\n";
  for (const auto& f : c.failed)
    os << "  " << to_string(f.obstruction.kind) << " " << f.first_label << " / " << f.second_label << " at "
       << f.obstruction.superposition.to_string() << " -> " << f.remainder.to_string() << '\n';
  return os.str();
}

json word_list(const std::set<Word>& words) {
  json a = json::array();
  for (const auto& w : words) a.push_back(w.to_string());
  return a;
}

std::set<Word> set_difference(const std::set<Word>& a, const std::set<Word>& b) {
  std::set<Word> out;
  for (const auto& w : a)
    if (!b.count(w)) out.insert(w);
  return out;
}

// Row check plus a report; a normal count below the reference count is
// reported as a failed verification rather than escaping as an exception.
struct DimensionOutcome {
  std::optional<VerificationReport> report;
  std::string error;
};

DimensionOutcome run_dimension(const GeneratorSet& G, const ReferenceCounter& ref, std::size_t n, int bound,
                               int jobs) {
  DimensionOutcome out;
  try {
    out.report = verify_by_dimension(G, ref, n, bound, jobs);
  } catch (const InconsistentReference& e) {
    out.error = e.what();
  }
  return out;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::vector<std::string> unmatched_selectors(const GeneratorSet& full, const std::vector<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& sel : drop) {
    bool any = false;
    for (const auto& g : full)
      if (matches_selector(g.label, sel)) any = true;
    if (!any) out.push_back(sel);
  }
  return out;
}

}  // namespace

int RunConfig::effective_jobs() const { return jobs > 0 ? jobs : default_jobs(); }

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("--vars must be at least 1");
  if (n > kMaxVariable) throw std::invalid_argument("--vars is too large");
  if (bound && *bound < 1) throw std::invalid_argument("--bound must be at least 1");
  if (jobs < 0) throw std::invalid_argument("--jobs must be non-negative");
}

GeneratorSet configured_basis(const RunConfig& cfg, const std::string& which) {
  GeneratorSet full;
  if (which == "gamma3") {
    full = gamma3_basis(cfg.n);
  } else if (which == "tideal") {
    full = tideal_basis(cfg.n, cfg.bound.value_or(kDefaultTIdealBound));
  } else {
    throw std::invalid_argument("unknown basis '" + which + "' (expected gamma3 or tideal)");
  }
  if (cfg.drop.empty()) return full;
  if (auto missing = unmatched_selectors(full, cfg.drop); !missing.empty())
    throw std::invalid_argument("--drop " + missing.front() + " matches no generator");
  return full.filter([&](const Generator& g) {
    for (const auto& sel : cfg.drop)
      if (matches_selector(g.label, sel)) return false;
    return true;
  });
}

CommandResult cmd_verify_gamma3(const RunConfig& cfg) {
  cfg.validate();
  const int bound = cfg.bound.value_or(kDefaultGamma3Bound);
  const int jobs = cfg.effective_jobs();
  RunConfig c = cfg;
  c.bound = bound;
  if (cfg.n < 2) throw std::invalid_argument("verify-gamma3 needs --vars >= 2");
  const GeneratorSet G = configured_basis(c, "gamma3");
  const std::size_t n = static_cast<std::size_t>(cfg.n);

  CompositionReport comps = check_compositions(G, bound, jobs);
  DimensionOutcome dim = run_dimension(G, pbw_count, n, bound, jobs);

  // The orbit of the five-element S-basis should have exactly the leading
  // words of the family basis.
  const SemigroupSpec spec = cfg.semigroup.value_or(OrderPreservingMaps{3, cfg.n});
  const GeneratorSet orbit = enumerate_semigroup_images(spec, sbasis_gamma3(), bound);
  const std::set<Word> orbit_lw = leading_word_set(orbit);
  const std::set<Word> basis_lw = leading_word_set(G);
  bool orbit_in_ideal = true;
  for (const auto& g : orbit)
    if (!reduce(g.poly, G).is_zero()) orbit_in_ideal = false;
  const bool lw_equal = orbit_lw == basis_lw;

  std::size_t h_count = 0;
  for (const auto& g : G)
    if (matches_selector(g.label, "h")) ++h_count;

  json report;
  bool ok = comps.passed() && lw_equal && orbit_in_ideal;
  if (dim.report) {
    dim.report->compositions = comps;
    report = dim.report->to_json();
    ok = ok && dim.report->passed();
  } else {
    report = {{"schema", kReportSchema}, {"bound", bound}, {"n", n}, {"rows", json::array()},
              {"compositions", comps.to_json()}, {"dimension_error", dim.error}};
    ok = false;
  }
  report["command"] = "verify-gamma3";
  report["generators"] = G.size();
  report["dropped"] = cfg.drop;
  report["sbasis"] = {{"semigroup", semigroup_to_json(spec)},
                      {"orbit_size", orbit.size()},
                      {"leading_words_equal", lw_equal},
                      {"orbit_in_ideal", orbit_in_ideal},
                      {"missing_from_orbit", word_list(set_difference(basis_lw, orbit_lw))},
                      {"extra_in_orbit", word_list(set_difference(orbit_lw, basis_lw))}};
  json notes = json::array();
  if (h_count == 0) notes.push_back("h family is empty for n < 3");
  if (!dim.error.empty()) notes.push_back(dim.error);
  report["notes"] = notes;
  report["verdict"] = verdict(ok);

  std::ostringstream os;
  os << "gamma3 basis, n=" << cfg.n << ", bound=" << bound << ", " << G.size() << " generators\n";
  if (dim.report) os << dimension_table(*dim.report);
  else os << "dimension check aborted: " << dim.error << '\n';
  os << composition_summary(comps);
  os << "S-basis orbit: " << orbit.size() << " images, leading words "
     << (lw_equal ? "equal" : "differ") << (orbit_in_ideal ? "" : ", some image is not in the ideal") << '\n';
  for (const auto& note : notes) os << "note: " << note.get<std::string>() << '\n';
  os << "verdict: " << verdict(ok) << '\n';
  return {ok ? 0 : 1, report, os.str()};
}

CommandResult cmd_verify_tideal(const RunConfig& cfg) {
  cfg.validate();
  const int bound = cfg.bound.value_or(kDefaultTIdealBound);
  const int jobs = cfg.effective_jobs();
  if (cfg.n < 2) throw std::invalid_argument("verify-tideal needs --vars >= 2");
  RunConfig c = cfg;
  c.bound = bound;
  const GeneratorSet G = configured_basis(c, "tideal");
  const std::size_t n = static_cast<std::size_t>(cfg.n);

  CompositionReport comps = check_compositions(G, bound, jobs);
  DimensionOutcome dim = run_dimension(G, grassmann_count, n, bound, jobs);

  std::vector<MinimalityEntry> minimality = check_minimality(G, n, bound);
  json redundant = json::array();
  for (const auto& m : minimality)
    if (m.redundant) redundant.push_back(m.label);

  const SemigroupSpec spec = cfg.semigroup.value_or(TIdealMaps{cfg.n, std::max(0, bound - 4)});
  const GeneratorSet orbit = enumerate_semigroup_images(spec, sbasis_tideal(), bound);
  const bool same_init = same_initial_ideal(orbit, G, bound);
  bool orbit_in_ideal = true;
  for (const auto& g : orbit)
    if (!reduce(g.poly, G).is_zero()) orbit_in_ideal = false;

  json report;
  bool ok = comps.passed() && redundant.empty() && same_init && orbit_in_ideal;
  if (dim.report) {
    dim.report->compositions = comps;
    report = dim.report->to_json();
    ok = ok && dim.report->passed();
  } else {
    report = {{"schema", kReportSchema}, {"bound", bound}, {"n", n}, {"rows", json::array()},
              {"compositions", comps.to_json()}, {"dimension_error", dim.error}};
    ok = false;
  }
  report["command"] = "verify-tideal";
  report["generators"] = G.size();
  report["generator_labels"] = [&] {
    json a = json::array();
    for (const auto& g : G) a.push_back(g.label);
    return a;
  }();
  report["dropped"] = cfg.drop;
  report["minimality"] = {{"checked", minimality.size()}, {"redundant", redundant}};
  report["sbasis"] = {{"semigroup", semigroup_to_json(spec)},
                      {"orbit_size", orbit.size()},
                      {"same_initial_ideal", same_init},
                      {"orbit_in_ideal", orbit_in_ideal}};
  report["verdict"] = verdict(ok);

  std::ostringstream os;
  os << "T-ideal basis, n=" << cfg.n << ", bound=" << bound << ", " << G.size() << " generators\n";
  if (dim.report) os << dimension_table(*dim.report);
  else os << "dimension check aborted: " << dim.error << '\n';
  os << composition_summary(comps);
  os << "minimality: " << minimality.size() << " checked, " << redundant.size() << " redundant\n";
  os << "S-basis orbit: " << orbit.size() << " images, initial ideals "
     << (same_init ? "agree" : "differ") << (orbit_in_ideal ? "" : ", some image is not in the ideal") << '\n';
  os << "verdict: " << verdict(ok) << '\n';
  return {ok ? 0 : 1, report, os.str()};
}

CommandResult cmd_reduce(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.inputs.size() != 1) throw std::invalid_argument("reduce expects exactly one polynomial");
  const Polynomial f = parse_polynomial(cfg.inputs.front());
  RunConfig c = cfg;
  c.n = std::max({cfg.n, f.max_variable(), 2});
  if (cfg.basis == "tideal" && !cfg.bound) c.bound = std::max(4, f.degree());
  const GeneratorSet G = configured_basis(c, cfg.basis);
  NormalFormResult nf = normal_form(f, G);

  json trace = json::array();
  for (const auto& line : nf.trace.lines(G)) trace.push_back(line);
  json report = {{"schema", "ncgb.reduce/1"},
                 {"command", "reduce"},
                 {"input", f.to_string()},
                 {"basis", cfg.basis},
                 {"n", c.n},
                 {"generators", G.size()},
                 {"normal_form", nf.normal_form.to_string()},
                 {"in_ideal", nf.normal_form.is_zero()},
                 {"trace", trace}};
  if (c.bound) report["bound"] = *c.bound;
  std::ostringstream os;
  os << nf.normal_form.to_string() << '\n';
  for (const auto& line : nf.trace.lines(G)) os << "  " << line << '\n';
  return {0, report, os.str()};
}

CommandResult cmd_normal_words(const RunConfig& cfg) {
  cfg.validate();
  RunConfig c = cfg;
  c.n = std::max(cfg.n, 2);
  const int bound = cfg.bound.value_or(cfg.basis == "tideal" ? kDefaultTIdealBound : kDefaultGamma3Bound);
  c.bound = bound;
  const GeneratorSet G = configured_basis(c, cfg.basis);
  NormalWordCensus census = enumerate_normal_words(G, static_cast<std::size_t>(cfg.n), bound, cfg.list_words);

  json counts = json::array();
  std::ostringstream os;
  for (const auto& [md, count] : census.counts) {
    counts.push_back({{"multidegree", md.exponents}, {"count", count}});
    os << pad(md.to_string(), 18) << count << '\n';
  }
  json by_degree = census.counts_by_degree;
  json report = {{"schema", "ncgb.normal-words/1"}, {"command", "normal-words"}, {"basis", cfg.basis},
                 {"n", cfg.n}, {"bound", bound}, {"counts", counts}, {"counts_by_degree", by_degree}};
  if (cfg.list_words) {
    json words = json::array();
    for (const auto& w : census.words) {
      words.push_back(w.to_string());
      os << w.to_string() << '\n';
    }
    report["words"] = words;
  }
  return {0, report, os.str()};
}

Word parse_sequence(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch) || ch == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(ch)) throw std::invalid_argument("bad character in index sequence: '" + text.substr(i, 1) + "'");
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    const int v = std::stoi(text.substr(start, i - start));
    if (v < 1 || v > kMaxVariable) throw std::invalid_argument("index out of range: " + std::to_string(v));
    w.push_back(v);
  }
  return w;
}

namespace {

// Exhaustive check of theta(psi(u)) = u over PBW indices and
// psi(theta(w)) = w over normal words, degree <= bound, letters <= n.
json bijection_roundtrip(int n, int bound, std::string& text, bool& ok) {
  std::size_t indices = 0, words = 0;
  std::vector<std::string> failures;
  for (const auto& md : multidegrees_up_to(static_cast<std::size_t>(n), bound))
    for (const auto& u : pbw_basis(md)) {
      ++indices;
      Word w = psi(u);
      if (!gamma3_normal_predicate(w) || !(theta(w) == u)) failures.push_back("psi/theta at " + u.to_string());
    }
  // The predicate only inspects windows of length <= 4, so a failing prefix
  // cannot be repaired by extending it.
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (!gamma3_normal_predicate(cur)) return;
    ++words;
    if (psi(theta(cur)) != cur) failures.push_back("theta/psi at " + cur.to_sequence());
    if (static_cast<int>(cur.size()) == bound) return;
    for (int v = 1; v <= n; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  ok = failures.empty() && indices == words;
  std::ostringstream os;
  os << "roundtrip n=" << n << " bound=" << bound << ": " << indices << " PBW indices, " << words
     << " normal words, " << failures.size() << " failures\n";
  for (const auto& f : failures) os << "  " << f << '\n';
  text = os.str();
  return {{"indices", indices}, {"normal_words", words}, {"failures", failures}};
}

}  // namespace

CommandResult cmd_bijection(const RunConfig& cfg) {
  cfg.validate();
  json report = {{"schema", "ncgb.bijection/1"}, {"command", "bijection"}, {"direction", cfg.direction}};
  std::ostringstream os;
  if (cfg.direction == "roundtrip") {
    const int bound = cfg.bound.value_or(8);
    std::string text;
    bool ok = false;
    report["n"] = cfg.n;
    report["bound"] = bound;
    report["roundtrip"] = bijection_roundtrip(cfg.n, bound, text, ok);
    report["verdict"] = verdict(ok);
    text += "verdict: " + verdict(ok) + "\n";
    return {ok ? 0 : 1, report, text};
  }
  const std::string input = cfg.inputs.empty() ? std::string() : cfg.inputs.front();
  if (cfg.inputs.size() > 1) throw std::invalid_argument("bijection expects one sequence");
  report["input"] = input;
  if (cfg.direction == "psi") {
    const PBWIndex u = parse_pbw_index(input);
    const Word w = psi(u);
    report["output"] = w.to_sequence();
    report["word"] = w.to_string();
    os << w.to_sequence() << '\n';
  } else if (cfg.direction == "theta") {
    const Word w = parse_sequence(input);
    const PBWIndex u = theta(w);
    const CanonicalFactorization cf = canonical_factorization(w);
    report["output"] = u.to_string();
    report["factorization"] = cf.to_string();
    os << u.to_string() << '\n' << cf.to_string() << '\n';
  } else {
    throw std::invalid_argument("unknown direction '" + cfg.direction + "' (psi, theta or roundtrip)");
  }
  report["verdict"] = "pass";
  return {0, report, os.str()};
}

CommandResult cmd_grassmann_check(const RunConfig& cfg) {
  cfg.validate();
  BmlReport r = bml_counterexample();
  json report = r.to_json();
  report["command"] = "grassmann-check";
  std::ostringstream os;
  os << "f = " << r.polynomial.to_string() << '\n';
  for (const auto& [v, e] : r.assignment) os << "x" << v << " -> " << e.to_string() << '\n';
  os << "f(assignment) = " << r.witness.to_string() << '\n';
  os << "normal form modulo tideal_basis(2,6): " << r.normal_form.to_string() << '\n';
  os << "basis members vanish on " << r.random_trials << " random assignments: "
     << (r.basis_vanishes ? "yes" : "no") << '\n';
  os << "verdict: " << verdict(r.passed()) << '\n';
  return {r.passed() ? 0 : 1, report, os.str()};
}

CommandResult cmd_complete(const RunConfig& cfg) {
  cfg.validate();
  const int bound = cfg.bound.value_or(4);
  std::vector<Polynomial> seed;
  bool default_seed = cfg.inputs.empty();
  if (default_seed) seed = gamma3_commutator_generators(cfg.n);
  for (const auto& text : cfg.inputs) seed.push_back(parse_polynomial(text));
  const GeneratorSet result = complete_up_to_degree(GeneratorSet::from_polynomials(seed, "s"), bound);

  json gens = json::array();
  std::ostringstream os;
  for (const auto& g : result) {
    gens.push_back({{"label", g.label}, {"leading_word", g.lead.to_string()}, {"polynomial", g.poly.to_string()}});
    os << pad(g.lead.to_string(), 20) << g.poly.to_string() << '\n';
  }
  json report = {{"schema", "ncgb.complete/1"}, {"command", "complete"}, {"n", cfg.n},
                 {"bound", bound},           {"seed_size", seed.size()}, {"generators", gens}};
  bool ok = true;
  if (default_seed && cfg.n >= 2) {
    const GeneratorSet expected = gamma3_basis(cfg.n).filter([&](const Generator& g) { return g.poly.degree() <= bound; });
    ok = leading_word_set(result) == leading_word_set(expected);
    report["matches_gamma3_basis"] = ok;
    os << "leading words " << (ok ? "match" : "differ from") << " the gamma3 family basis\n";
  }
  report["verdict"] = verdict(ok);
  return {ok ? 0 : 1, report, os.str()};
}

CommandResult run_command(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "verify-gamma3") return cmd_verify_gamma3(cfg);
  if (c == "verify-tideal") return cmd_verify_tideal(cfg);
  if (c == "reduce") return cmd_reduce(cfg);
  if (c == "normal-words") return cmd_normal_words(cfg);
  if (c == "bijection") return cmd_bijection(cfg);
  if (c == "grassmann-check") return cmd_grassmann_check(cfg);
  if (c == "complete") return cmd_complete(cfg);
  throw std::invalid_argument("unknown command '" + c + "'");
}

}  // namespace ncgb
