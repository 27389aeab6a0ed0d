#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "patchideal/patchideal.hpp"

namespace patchideal::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// A flag combination the command line cannot act on.
class flag_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string verb;
  std::string family = "peterson";
  int n = 0;
  std::string w, b, u, v, wq, wp;
  std::string jordan, hfunc, matrix;
  bool anyChart = false;
  bool prune = false;
  bool blocks = false;
  bool verdictsOnly = false;
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
};

// ---- JSON and text encoders ------------------------------------------------

inline Json integer_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline Json permutation_json(const Permutation& w) { return Json(w.one_line()); }

inline Json polynomial_terms_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json mono = Json::array();
    for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      mono.push_back({k, t.mono[k]});
    }
    terms.push_back({integer_json(t.coef.get_num()), integer_json(t.coef.get_den()), std::move(mono)});
  }
  return terms;
}

inline Json generators_json(const GeneratorSet& G) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = G.chart.n();
  j["w"] = permutation_json(G.chart.w());
  j["family"] = G.family;
  Json vars = Json::array();
  for (auto [r, c] : G.chart.free_positions()) vars.push_back({r, c});
  j["vars"] = std::move(vars);
  j["setTheoretic"] = G.setTheoretic;
  Json gens = Json::array();
  for (const auto& g : G.gens) {
    Json e;
    e["tag"] = g.tag.str();
    e["text"] = g.poly.str();
    e["terms"] = polynomial_terms_json(g.poly);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

inline std::string generators_text(const GeneratorSet& G) {
  std::ostringstream s;
  s << "family " << G.family << ", n = " << G.chart.n() << ", w = " << G.chart.w().str() << ", " << G.size()
    << " generator" << (G.size() == 1 ? "" : "s") << (G.setTheoretic ? " (set-theoretic)" : "") << "\n";
  std::size_t width = 0;
  for (const auto& g : G.gens) width = std::max(width, g.tag.str().size());
  for (const auto& g : G.gens) s << std::left << std::setw(static_cast<int>(width)) << g.tag.str() << " = " << g.poly.str() << "\n";
  return s.str();
}

inline Json intpoly_json(const IntPoly& p) {
  Json a = Json::array();
  for (auto c : p.coeffs()) a.push_back(c);
  return a;
}

inline Json laurent_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (auto [e, c] : p.coeffs()) a.push_back({e, c});
  return a;
}

// "(1 - chi^3)^2*(1 - chi^4)"; "1" for the empty product.
inline std::string factored_str(std::vector<int> exps) {
  if (exps.empty()) return "1";
  std::sort(exps.begin(), exps.end());
  std::string s;
  for (std::size_t a = 0; a < exps.size();) {
    std::size_t b = a;
    while (b < exps.size() && exps[b] == exps[a]) ++b;
    int e = exps[a];
    if (!s.empty()) s += "*";
    s += "(1 - chi";
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    s += ")";
    if (b - a > 1) s += "^" + std::to_string(b - a);
    a = b;
  }
  return s;
}

inline Json local_json(const LocalReport& R) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["point"] = R.point;
  j["smooth"] = R.smooth;
  j["h"] = intpoly_json(R.h());
  j["mult"] = R.multiplicity();
  j["k"] = R.k ? laurent_json(*R.k) : Json(nullptr);
  j["kFactored"] = R.kFactors ? Json(factored_str(*R.kFactors)) : Json(nullptr);
  Json cone = Json::array();
  for (const auto& c : R.cone) cone.push_back(c.str());
  j["cone"] = std::move(cone);
  j["jacobianRank"] = R.jacobianRank;
  j["codimension"] = R.codimension;
  j["dimension"] = R.hilbert.dimension ? Json(*R.hilbert.dimension) : Json(nullptr);
  j["setTheoretic"] = R.setTheoretic;
  j["diagnostics"] = R.diagnostics;
  return j;
}

inline std::string local_text(const LocalReport& R) {
  std::ostringstream s;
  s << "point:         " << R.point << "\n";
  s << "smooth:        " << (R.smooth ? "yes" : "no") << (R.setTheoretic ? " (w.r.t. the given equations)" : "")
    << "\n";
  s << "jacobian rank: " << R.jacobianRank << " (codimension " << R.codimension << ")\n";
  s << "h:             " << R.h().str() << "\n";
  s << "mult:          " << R.multiplicity() << "\n";
  if (R.k) s << "k:             " << R.k->str() << " = " << factored_str(*R.kFactors) << "\n";
  s << "tangent cone:  " << R.cone.size() << " generator" << (R.cone.size() == 1 ? "" : "s") << "\n";
  for (const auto& c : R.cone) s << "  " << c.str() << "\n";
  for (const auto& d : R.diagnostics) s << "note: " << d << "\n";
  return s.str();
}

// Left-aligned columns separated by two spaces.
inline std::string table_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// ---- input helpers ---------------------------------------------------------

inline Permutation permutation_flag(const std::string& name, const std::string& text, int n) {
  if (text.empty()) throw flag_error("--" + name + " is required");
  Permutation p = Permutation::parse(text);
  if (n && p.n() != n)
    throw flag_error("--" + name + " " + text + " has size " + std::to_string(p.n()) + " but --n is " + std::to_string(n));
  return p;
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<int> int_list(const std::string& name, const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_commas(text)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw flag_error("--" + name + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

inline RationalMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw flag_error("cannot read matrix file " + path);
  RationalMatrix m;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<Rational> r;
    for (std::string tok; row >> tok;) r.push_back(parse_rational(tok));
    if (!r.empty()) m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) throw flag_error("matrix file " + path + " is not square");
  if (m.empty()) throw flag_error("matrix file " + path + " is empty");
  return m;
}

inline HessenbergSpec hessenberg_spec(const Options& o) {
  HessenbergSpec spec;
  if (!o.matrix.empty() && !o.jordan.empty()) throw flag_error("give --jordan or --matrix, not both");
  if (!o.matrix.empty()) spec.H = read_matrix(o.matrix);
  else if (!o.jordan.empty()) spec.H = nilpotent_of_jordan_type(int_list("jordan", o.jordan));
  else if (o.n > 0) spec.H = regular_nilpotent(o.n);
  else throw flag_error("hessenberg needs --jordan, --matrix or --n");
  int n = spec.n();
  if (o.n && o.n != n) throw flag_error("--n " + std::to_string(o.n) + " does not match the matrix size " + std::to_string(n));
  if (o.hfunc.empty()) {
    for (int i = 1; i <= n; ++i) spec.h.push_back(std::min(i + 1, n));
  } else {
    spec.h = int_list("hfunc", o.hfunc);
  }
  return spec;
}

struct Patch {
  GeneratorSet gens;
  std::size_t expectedDim = 0;
};

inline Patch build_patch(const Options& o) {
  if (o.family == "peterson") {
    Permutation w = permutation_flag("w", o.w, o.n);
    GeneratorSet G = peterson_generators(w);
    if (!o.b.empty()) {
      auto c = composition_of(w);
      std::vector<Rational> q;
      for (const auto& item : split_commas(o.b)) q.push_back(parse_rational(item));
      G = recenter(G, GroupPoint::from_flat(*c, q));
    }
    return {G, static_cast<std::size_t>(w.n() - 1)};
  }
  if (!o.b.empty()) throw flag_error("--b is only available for --family peterson");
  if (o.family == "richardson") {
    Permutation w = permutation_flag("w", o.w, o.n);
    Permutation u = permutation_flag("u", o.u, w.n());
    Permutation v = permutation_flag("v", o.v, w.n());
    RichardsonOptions ro;
    ro.prune = o.prune;
    auto G = richardson_generators(w, u, v, ro);
    return {G, static_cast<std::size_t>(u.length() - v.length())};
  }
  if (o.family == "peterson-schubert") {
    Permutation wp = permutation_flag("wp", o.wp, o.n);
    Permutation wq = permutation_flag("wq", o.wq.empty() ? o.w : o.wq, wp.n());
    auto G = o.blocks ? peterson_schubert_block_generators(wq, wp) : peterson_schubert_generators(wq, wp);
    return {G, static_cast<std::size_t>(wp.n()) - composition_of(wp)->size()};
  }
  if (o.family == "hessenberg") {
    HessenbergSpec spec = hessenberg_spec(o);
    Permutation w = permutation_flag("w", o.w, spec.n());
    HessenbergOptions ho;
    ho.requireFixedPoint = !o.anyChart;
    auto G = hessenberg_generators(spec, w, ho);
    auto d = o.anyChart ? krull_dimension(G.ideal()) : std::optional<std::size_t>(patch_dimension(spec, w));
    if (!d) throw precondition_error("the Hessenberg patch at w = " + w.str() + " is empty (unit ideal)");
    return {G, *d};
  }
  throw flag_error("unknown family " + o.family);
}

// ---- verbs -----------------------------------------------------------------

inline std::string emit(const Options& o, const Json& j, const std::string& text) {
  return o.format == "json" ? j.dump(2) + "\n" : text;
}

inline std::string verb_patch(const Options& o) {
  auto p = build_patch(o);
  return emit(o, generators_json(p.gens), generators_text(p.gens));
}

inline std::string verb_local(const Options& o) {
  auto p = build_patch(o);
  auto R = local_report(p.gens, p.expectedDim);
  return emit(o, local_json(R), local_text(R));
}

inline std::string verb_survey(const Options& o) {
  if (o.n < 2) throw flag_error("survey needs --n >= 2");
  auto verdicts = peterson_singular_survey(o.n, o.jobs);
  std::vector<std::optional<LocalReport>> local(verdicts.size());
  std::vector<LaurentPoly> formula(verdicts.size());
  if (!o.verdictsOnly) {
    auto reports = parallel_map(verdicts, o.jobs, [&](const PetersonSurveyRow& r) {
      return local_report(peterson_generators(r.w), static_cast<std::size_t>(o.n - 1));
    });
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      formula[k] = k_polynomial_formula(verdicts[k].w);
      if (!(formula[k] == *reports[k].k))
        throw consistency_error("K-polynomial paths disagree at w_P = " + verdicts[k].w.str() + ": formula " +
                                formula[k].str() + ", degrees " + reports[k].k->str());
      local[k] = std::move(reports[k]);
    }
  }
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = o.n;
  Json rows = Json::array();
  Json singular = Json::array();
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> head{"w_P", "composition", "singular", "rank"};
  if (!o.verdictsOnly) head.insert(head.end(), {"h", "mult", "k"});
  table.push_back(head);
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    const auto& r = verdicts[k];
    Json e;
    e["label"] = r.w.str();
    e["w"] = permutation_json(r.w);
    e["composition"] = r.composition.parts();
    e["singular"] = r.singularJacobian;
    e["pattern"] = r.singularPattern;
    e["list"] = r.singularList;
    e["jacobian"] = r.singularJacobian;
    e["jacobianRank"] = r.jacobianRank;
    std::vector<std::string> line{r.w.str(), r.composition.str(), r.singularJacobian ? "yes" : "no",
                                  std::to_string(r.jacobianRank)};
    if (local[k]) {
      const auto& R = *local[k];
      e["h"] = intpoly_json(R.h());
      e["mult"] = R.multiplicity();
      e["k"] = laurent_json(*R.k);
      e["kFormula"] = laurent_json(formula[k]);
      e["kFactored"] = factored_str(*R.kFactors);
      e["diagnostics"] = R.diagnostics;
      line.insert(line.end(), {R.h().str(), std::to_string(R.multiplicity()), factored_str(*R.kFactors)});
    }
    if (r.singularJacobian) singular.push_back(r.w.str());
    rows.push_back(std::move(e));
    table.push_back(std::move(line));
  }
  j["rows"] = std::move(rows);
  j["singular"] = singular;
  std::string text = "Pet_" + std::to_string(o.n) + ": " + std::to_string(verdicts.size()) + " parabolic fixed points, " +
                     std::to_string(singular.size()) + " singular\n" + table_text(table);
  return emit(o, j, text);
}

inline std::string verb_pet_schubert(const Options& o) {
  if (!o.wq.empty()) {
    Options p = o;
    p.family = "peterson-schubert";
    return verb_patch(p);
  }
  Permutation wp = permutation_flag("wp", o.wp, o.n);
  auto S = peterson_schubert_survey(wp, o.jobs);
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["wp"] = permutation_json(S.wP);
  j["composition"] = S.composition.parts();
  j["singular"] = S.singular321;
  Json strata = Json::array();
  std::vector<std::vector<std::string>> table{{"w_Q", "blocks", "singular", "rank", "codim"}};
  for (const auto& st : S.strata) {
    Json e;
    e["label"] = st.wQ.str();
    e["wq"] = permutation_json(st.wQ);
    std::string blocks;
    Json bl = Json::array();
    for (const auto& b : st.blocks) {
      bl.push_back(b.str());
      blocks += (blocks.empty() ? "" : "|") + b.str();
    }
    e["blocks"] = std::move(bl);
    e["singular"] = st.singularJacobian;
    e["jacobianRank"] = st.jacobianRank;
    e["codimension"] = st.codimension;
    strata.push_back(std::move(e));
    table.push_back({st.wQ.str(), blocks, st.singularJacobian ? "yes" : "no", std::to_string(st.jacobianRank),
                     std::to_string(st.codimension)});
  }
  j["strata"] = std::move(strata);
  std::string text = "R_" + S.wP.str() + " " + S.composition.str() + ": " +
                     (S.singular321 ? "singular (contains 321)" : "smooth (avoids 321)") + "\n" + table_text(table);
  return emit(o, j, text);
}

inline std::string verb_probe(const Options& o) {
  Permutation w = permutation_flag("w", o.w, o.n);
  auto P = semicontinuity_probe(w, o.samples, o.seed, o.jobs);
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["wp"] = permutation_json(P.wP);
  j["seed"] = P.seed;
  j["baseH"] = intpoly_json(P.baseH);
  j["baseMult"] = P.baseMult;
  Json samples = Json::array();
  std::vector<std::vector<std::string>> table{{"b", "h", "mult", "mult<=base", "h>=0"}};
  for (const auto& s : P.samples) {
    Json e;
    e["b"] = s.b.str();
    e["h"] = intpoly_json(s.h);
    e["mult"] = s.mult;
    e["multWithinBound"] = s.multWithinBound;
    e["hNonnegative"] = s.hNonnegative;
    samples.push_back(std::move(e));
    table.push_back({s.b.str(), s.h.str(), std::to_string(s.mult), s.multWithinBound ? "yes" : "NO",
                     s.hNonnegative ? "yes" : "NO"});
  }
  j["samples"] = std::move(samples);
  j["allMultWithinBound"] = P.allMultWithinBound;
  j["allHNonnegative"] = P.allHNonnegative;
  j["hConstant"] = P.hConstant;
  j["findings"] = P.findings;
  std::string text = "probe at " + P.wP.str() + " (seed " + std::to_string(P.seed) + "): base h = " + P.baseH.str() +
                     ", mult " + std::to_string(P.baseMult) + "\n" + table_text(table) +
                     "h constant on samples: " + (P.hConstant ? "yes" : "no") + "\n";
  for (const auto& f : P.findings) text += f + "\n";
  return emit(o, j, text);
}

// ---- entry point -----------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Patch ideals of torus-invariant subvarieties of the flag variety"};
  app.require_subcommand(1);
  const std::vector<std::string> families{"peterson", "hessenberg", "richardson", "peterson-schubert"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--n", o.n, "size n")->check(CLI::Range(1, 9999));
  };
  auto chart_flags = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "permutation of the fixed point");
    sub->add_option("--u", o.u, "Schubert permutation (richardson)");
    sub->add_option("--v", o.v, "opposite Schubert permutation (richardson)");
    sub->add_option("--wq", o.wq, "fixed point w_Q (peterson-schubert)");
    sub->add_option("--wp", o.wp, "Schubert index w_P (peterson-schubert)");
    sub->add_option("--jordan", o.jordan, "Jordan type of H, e.g. 2,1");
    sub->add_option("--hfunc", o.hfunc, "Hessenberg function, e.g. 1,2,3");
    sub->add_option("--matrix", o.matrix, "file with the rows of H");
    sub->add_flag("--any-chart", o.anyChart, "allow charts at points off the Hessenberg variety");
    sub->add_flag("--prune", o.prune, "drop implied rank conditions");
    sub->add_flag("--blocks", o.blocks, "block presentation of the Peterson part");
  };

  auto* patch = app.add_subcommand("patch", "generators of a patch ideal");
  patch->add_option("--family", o.family)->check(CLI::IsMember(families));
  common(patch);
  chart_flags(patch);

  auto* local = app.add_subcommand("local", "local invariants at the chart origin");
  local->add_option("--family", o.family)->check(CLI::IsMember(families));
  local->add_option("--b", o.b, "group point parameters, block after block");
  common(local);
  chart_flags(local);

  auto* survey = app.add_subcommand("survey", "singular locus and Table of h, k over all parabolic points of Pet_n");
  survey->add_flag("--verdicts-only", o.verdictsOnly, "skip tangent cones");
  common(survey);

  auto* rich = app.add_subcommand("richardson", "Richardson patch generators");
  common(rich);
  chart_flags(rich);

  auto* hess = app.add_subcommand("hessenberg", "Hessenberg or Springer patch generators");
  common(hess);
  chart_flags(hess);

  auto* ps = app.add_subcommand("pet-schubert", "Peterson-Schubert patch, or the survey of R_{w_P} without --wq");
  common(ps);
  chart_flags(ps);

  auto* probe = app.add_subcommand("probe", "recentered local invariants on a stratum");
  probe->add_option("--w", o.w, "parabolic w_P");
  probe->add_option("--samples", o.samples)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  probe->add_option("--seed", o.seed);
  common(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    std::string report;
    if (patch->parsed()) report = verb_patch(o);
    else if (local->parsed()) report = verb_local(o);
    else if (survey->parsed()) report = verb_survey(o);
    else if (rich->parsed()) {
      o.family = "richardson";
      report = verb_patch(o);
    } else if (hess->parsed()) {
      o.family = "hessenberg";
      report = verb_patch(o);
    } else if (ps->parsed()) report = verb_pet_schubert(o);
    else if (probe->parsed()) report = verb_probe(o);
    if (o.out.empty()) {
      out << report;
    } else {
      std::ofstream f(o.out);
      if (!f) throw flag_error("cannot write " + o.out);
      f << report;
    }
    return 0;
  } catch (const precondition_error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    err << "internal cross-check failed: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace patchideal::cli
