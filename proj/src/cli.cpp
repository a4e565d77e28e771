#include "schubaut/cli.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubaut/errors.h"

namespace schubaut {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- parsing

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

// ------------------------------------------------------------------ cache

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string word_to_line(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

std::filesystem::path cache_path(const RootSystem& rs, const std::string& dir) {
  std::ostringstream os;
  os << rs.type << rs.rank << ".words";
  return std::filesystem::path(dir) / os.str();
}

std::optional<std::vector<std::vector<int>>> load_cache(const RootSystem& rs,
                                                        const std::string& dir) {
  std::ifstream in(cache_path(rs, dir));
  if (!in) return std::nullopt;
  std::ostringstream payload;
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.size() < 4) return std::nullopt;
  std::string check = lines.back();
  lines.pop_back();
  for (const auto& l : lines) payload << l << '\n';
  std::ostringstream want;
  want << "fnv " << std::hex << fnv1a(payload.str());
  if (check != want.str()) return std::nullopt;
  if (lines[0] != "schubaut-cache 1") return std::nullopt;
  std::ostringstream head;
  head << rs.type << ' ' << rs.rank;
  if (lines[1] != head.str()) return std::nullopt;
  long long count = 0;
  if (!parse_int(lines[2], count)) return std::nullopt;
  if (count != static_cast<long long>(lines.size()) - 3) return std::nullopt;
  if (count != weyl_order(rs.type, rs.rank)) return std::nullopt;
  std::vector<std::vector<int>> words;
  words.reserve(count);
  for (size_t i = 3; i < lines.size(); ++i) {
    if (lines[i] == "e") {
      words.push_back({});
      continue;
    }
    std::vector<int> w;
    std::stringstream ss(lines[i]);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long long v = 0;
      if (!parse_int(tok, v) || v < 1 || v > rs.rank) return std::nullopt;
      w.push_back(static_cast<int>(v));
    }
    if (w.empty()) return std::nullopt;
    words.push_back(std::move(w));
  }
  return words;
}

void store_cache(const RootSystem& rs, const std::string& dir,
                 const std::vector<WeylElement>& group) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  std::ostringstream payload;
  payload << "schubaut-cache 1\n" << rs.type << ' ' << rs.rank << '\n'
          << group.size() << '\n';
  for (const auto& w : group) payload << word_to_line(canonical_word(w)) << '\n';
  std::ofstream out(cache_path(rs, dir), std::ios::trunc);
  if (!out) return;
  out << payload.str() << "fnv " << std::hex << fnv1a(payload.str()) << '\n';
}

// ------------------------------------------------------------- rendering

std::string char_to_text(const SignedCharacter& c) {
  if (c.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, m] : c.terms) {
    long long a = m < 0 ? -m : m;
    if (first) {
      if (m < 0) os << "-";
      first = false;
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    if (a != 1) os << a << " ";
    os << "e^" << format_weight(mu);
  }
  return os.str();
}

json char_to_json(const SignedCharacter& c) {
  json arr = json::array();
  for (const auto& [mu, m] : c.terms) {
    json term = json::array();
    term.push_back(json(mu));
    term.push_back(m);
    arr.push_back(term);
  }
  return arr;
}

json word_to_json(const std::vector<int>& w) { return json(w); }

std::string word_to_text(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 's' << w[i];
  }
  return os.str();
}

json roots_to_json(const RootSystem& rs, const std::vector<int>& idxs) {
  json arr = json::array();
  for (int idx : idxs) arr.push_back(json(rs.roots[idx]));
  return arr;
}

std::string roots_to_text(const RootSystem& rs, const std::vector<int>& idxs) {
  if (idxs.empty()) return "none";
  std::ostringstream os;
  for (size_t i = 0; i < idxs.size(); ++i) {
    if (i) os << ' ';
    os << rs.describe_root(idxs[i]);
  }
  return os.str();
}

// ------------------------------------------------- line-bundle cohomology

struct LineReport {
  IW weight;
  SignedCharacter euler;
  bool split_exact = false;      // simply-laced: H0 = euler, H1 = 0
  SignedCharacter h0_part;       // exact, or the certified lower bound
  SignedCharacter h1_part;
  bool h1_nonzero_certified = false;
};

LineReport line_cohomology(const RootSystem& rs, const WeylElement& w, const IW& mu) {
  int idx = rs.is_root(mu) ? rs.root_index(mu) : -1;
  if (idx < 0 || !rs.is_positive(idx))
    throw invalid_input("line-bundle weight " + format_weight(mu) +
                        " is not a positive root");
  LineReport r;
  r.weight = mu;
  r.euler = demazure_char(rs, w, mu);
  // Sign-splitting the Euler characteristic always bounds H0 and H1 from
  // below (everything above H1 vanishes).  The split is exact in the
  // simply-laced types (where H1 vanishes too) and for length <= 1, where
  // X(w) is a point or a projective line and the degree decides everything.
  r.split_exact = rs.simply_laced || w.len <= 1;
  for (const auto& [nu, m] : r.euler.terms) {
    if (m > 0) r.h0_part.add(nu, m);
    else r.h1_part.add(nu, -m);
  }
  if (rs.simply_laced && !r.h1_part.terms.empty())
    throw internal_error("negative Euler coefficient for a simply-laced root line");
  r.h1_nonzero_certified = !r.h1_part.terms.empty();
  return r;
}

// ----------------------------------------------------------- single query

void render_text(const RootSystem& rs, const WeylElement& w, const AutVerdict& a,
                 const QueryConfig& cfg, const std::vector<LineReport>& lines,
                 bool show_b, bool show_gb, std::ostream& out) {
  out << "system " << rs.type << rs.rank
      << "  (Bourbaki numbering; B is the negative Borel)\n";
  out << "w = " << word_to_text(a.facts.word) << "   length " << a.facts.length
      << "   dim X(w) = " << a.facts.length << "\n";
  out << "smooth: " << (a.facts.smooth ? "yes" : "no") << "  (tangent dim at base "
      << a.facts.tangent_dim << ")\n";
  if (a.facts.have_poincare) {
    out << "poincare:";
    for (long long c : a.facts.poincare) out << ' ' << c;
    out << "   rationally smooth: " << (a.facts.rationally_smooth ? "yes" : "no") << "\n";
  }
  out << "descents (stabilizer letters):";
  if (a.facts.descents.empty()) out << " none";
  for (int l : a.facts.descents) out << ' ' << l;
  out << "   dim P_w = " << a.facts.dim_parabolic << "\n";
  out << "criterion w^-1(alpha_0) < 0: " << (a.criterion ? "true" : "false") << "\n";
  out << "semistable locus nonempty: " << (a.semistable ? "true" : "false") << "\n";
  if (a.group_applicable) {
    out << "phi: P_w -> Aut0(X(w))   injective: " << (a.phi_injective ? "yes" : "no")
        << "   surjective: " << (a.phi_surjective ? "yes" : "not established") << "\n";
    if (a.phi_surjective)
      out << "Aut0(X(w)) = "
          << (a.phi_injective ? "P_w  (phi is an isomorphism)"
                              : "P_w / K_w  (phi has nontrivial kernel)")
          << "\n";
    else
      out << "Aut0(X(w)) contains " << (a.phi_injective ? "P_w" : "P_w / K_w")
          << " as the image of phi; equality is not established in this type\n";
  } else {
    out << "X(w) is singular: automorphism-group conclusions are not drawn "
           "(the cohomology below holds for every w)\n";
  }
  if (a.have_kernel) {
    out << "kernel: torus dim " << a.torus_dim << ", component order "
        << a.torus_component_order << ", unipotent roots "
        << roots_to_text(rs, a.unipotent_roots) << "\n";
    out << "dim K_w " << (a.kernel_exact ? "= " : "<= ") << a.dim_kernel;
    if (a.group_applicable)
      out << "   dim Aut0 " << (a.dim_aut0_exact ? "= " : ">= ") << a.dim_aut0;
    out << "\n";
  } else {
    out << "kernel: interval exceeded the cap; dims unavailable\n";
  }
  if (show_b) {
    out << "H0(w, b): dim " << a.h0_b_dim << "   " << char_to_text(a.h0_b) << "\n";
    out << "H1(w, b): " << char_to_text(a.h1_b) << "\n";
  }
  if (show_gb) {
    out << "H0(w, g/b): dim " << a.h0_gb.total() << "   " << char_to_text(a.h0_gb)
        << "\n";
    out << "  contains ch g: " << (a.h0_gb_contains_adjoint ? "yes" : "no")
        << "   equals ch g: " << (a.h0_gb_equals_adjoint ? "yes" : "no") << "\n";
    out << "H1(w, g/b): " << char_to_text(a.h1_gb) << "\n";
  }
  for (const auto& lr : lines) {
    out << "line bundle L" << format_weight(lr.weight) << ":\n";
    out << "  euler: " << char_to_text(lr.euler) << "\n";
    if (lr.split_exact) {
      out << "  H0: " << char_to_text(lr.h0_part) << "\n  H1: "
          << char_to_text(lr.h1_part) << "\n";
    } else {
      out << "  H0 contains: " << char_to_text(lr.h0_part) << "\n";
      out << "  H1 contains: " << char_to_text(lr.h1_part)
          << (lr.h1_nonzero_certified ? "   (H1 nonzero certified)" : "") << "\n";
      out << "  exact split undetermined beyond these bounds (H2 and higher vanish)\n";
    }
  }
  if (cfg.kernel) {
    KernelStructure k = kernel_structure(rs, w, cfg.cap);
    out << "kernel structure: support";
    for (int l : k.support) out << ' ' << l;
    out << ", torus dim " << k.torus_dim << ", component order " << k.component_order
        << ", unipotent roots " << roots_to_text(rs, k.unipotent_roots) << ", dim "
        << k.dim << "\n";
  }
}

json verdict_to_json(const RootSystem& rs, const AutVerdict& a) {
  json j;
  j["element"] = {{"word", word_to_json(a.facts.word)},
                  {"length", a.facts.length},
                  {"support", json(a.support)}};
  json sch = {{"smooth", a.facts.smooth},
              {"tangent_dim", a.facts.tangent_dim},
              {"dim", a.facts.length},
              {"descents", json(a.facts.descents)},
              {"dim_parabolic", a.facts.dim_parabolic}};
  if (a.facts.have_poincare) {
    sch["poincare"] = json(a.facts.poincare);
    sch["rationally_smooth"] = a.facts.rationally_smooth;
  }
  j["schubert"] = sch;
  j["verdict"] = {{"criterion", a.criterion},
                  {"semistable", a.semistable},
                  {"h0_tangent_is_adjoint", a.h0_tangent_is_adjoint},
                  {"simply_laced", a.simply_laced}};
  if (a.group_applicable) {
    json aut = {{"phi_injective", a.phi_injective},
                {"phi_surjective", a.phi_surjective}};
    if (a.have_kernel) {
      aut["dim_aut0"] = a.dim_aut0;
      aut["dim_aut0_exact"] = a.dim_aut0_exact;
    }
    j["aut"] = aut;
  } else {
    j["aut"] = nullptr;
  }
  if (a.have_kernel) {
    j["kernel"] = {{"available", true},
                   {"torus_dim", a.torus_dim},
                   {"component_order", a.torus_component_order},
                   {"unipotent_roots", roots_to_json(rs, a.unipotent_roots)},
                   {"dim", a.dim_kernel},
                   {"exact", a.kernel_exact}};
  } else {
    j["kernel"] = {{"available", false}};
  }
  return j;
}

int run_single(const RootSystem& rs, const QueryConfig& cfg, std::ostream& out) {
  WeylElement w = from_word(rs, *cfg.word);
  AutVerdict a = aut_report(rs, w, cfg.cap);

  bool show_b = cfg.cohomology.empty();
  bool show_gb = cfg.cohomology.empty();
  std::vector<LineReport> lines;
  for (const auto& spec : cfg.cohomology) {
    if (spec == "b") {
      show_b = true;
      continue;
    }
    if (spec == "g/b") {
      show_gb = true;
      continue;
    }
    if (spec.rfind("line:", 0) != 0)
      throw invalid_input("unknown --cohomology selector '" + spec +
                          "' (expected b, g/b, or line:<coords>)");
    std::string coords = spec.substr(5);
    IW mu;
    std::stringstream ss(coords);
    std::string tok;
    size_t pos = 0;
    while (std::getline(ss, tok, ',')) {
      long long v = 0;
      if (!parse_int(tok, v)) {
        std::ostringstream os;
        os << "cannot parse line coordinates '" << coords << "': bad integer at position "
           << (pos + 1);
        throw invalid_input(os.str());
      }
      mu.push_back(v);
      pos += tok.size() + 1;
    }
    if (static_cast<int>(mu.size()) != rs.rank)
      throw invalid_input("line coordinates must have exactly rank entries");
    lines.push_back(line_cohomology(rs, w, mu));
  }

  if (!cfg.json) {
    render_text(rs, w, a, cfg, lines, show_b, show_gb, out);
    return 0;
  }

  json j;
  j["schema"] = "schubaut/1";
  j["type"] = std::string(1, rs.type);
  j["rank"] = rs.rank;
  j.update(verdict_to_json(rs, a));
  json coh;
  if (show_b)
    coh["b"] = {{"h0", char_to_json(a.h0_b)},
                {"h0_dim", a.h0_b_dim},
                {"h1", char_to_json(a.h1_b)}};
  if (show_gb)
    coh["g_mod_b"] = {{"h0", char_to_json(a.h0_gb)},
                      {"h0_dim", a.h0_gb.total()},
                      {"h1", char_to_json(a.h1_gb)},
                      {"contains_adjoint", a.h0_gb_contains_adjoint},
                      {"equals_adjoint", a.h0_gb_equals_adjoint}};
  if (!lines.empty()) {
    json arr = json::array();
    for (const auto& lr : lines) {
      json one = {{"weight", json(lr.weight)},
                  {"euler", char_to_json(lr.euler)},
                  {"exact", lr.split_exact}};
      if (lr.split_exact) {
        one["h0"] = char_to_json(lr.h0_part);
        one["h1"] = char_to_json(lr.h1_part);
      } else {
        one["h0_lower"] = char_to_json(lr.h0_part);
        one["h1_lower"] = char_to_json(lr.h1_part);
        one["h1_nonzero_certified"] = lr.h1_nonzero_certified;
      }
      arr.push_back(one);
    }
    coh["lines"] = arr;
  }
  j["cohomology"] = coh;
  if (cfg.kernel) {
    KernelStructure k = kernel_structure(rs, from_word(rs, *cfg.word), cfg.cap);
    j["kernel_structure"] = {{"support", json(k.support)},
                             {"torus_dim", k.torus_dim},
                             {"component_order", k.component_order},
                             {"unipotent_roots", roots_to_json(rs, k.unipotent_roots)},
                             {"dim", k.dim}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- survey

struct SurveyRow {
  std::vector<int> word;
  int length = 0;
  bool smooth = false;
  bool criterion = false;
  bool have_kernel = false;
  long long dim_kernel = 0;
  bool kernel_exact = false;
};

// One-cell summary of the group-theoretic conclusion for a survey row.
const char* survey_verdict(bool smooth, bool simply_laced, bool criterion) {
  if (!smooth) return "n/a (singular)";
  if (simply_laced) return criterion ? "Aut0 = P_w" : "Aut0 = P_w/K_w";
  return criterion ? "Aut0 >= P_w" : "Aut0 >= P_w/K_w";
}

const char* survey_verdict_key(bool smooth, bool simply_laced, bool criterion) {
  if (!smooth) return "singular";
  if (simply_laced) return criterion ? "aut0_equals_parabolic" : "aut0_equals_quotient";
  return criterion ? "aut0_contains_parabolic" : "aut0_contains_quotient";
}

int run_survey(const RootSystem& rs, const QueryConfig& cfg, std::ostream& out) {
  std::vector<WeylElement> group = enumerate_group_cached(rs, cfg.cap, cfg.cache_dir);
  std::vector<SurveyRow> rows(group.size());
  std::vector<std::exception_ptr> errors(group.size());

  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, group.size() ? group.size() : 1);
  auto work = [&](unsigned tid) {
    for (size_t i = tid; i < group.size(); i += nthreads) {
      try {
        const WeylElement& w = group[i];
        SurveyRow r;
        r.word = canonical_word(w);
        r.length = w.len;
        r.smooth = is_smooth(rs, w);
        r.criterion = criterion_holds(rs, w);
        try {
          std::vector<int> cand = kernel_candidate_roots(rs, w, cfg.cap);
          std::set<int> sup = support(w);
          r.dim_kernel = (rs.rank - static_cast<long long>(sup.size())) +
                         static_cast<long long>(cand.size());
          r.have_kernel = true;
          r.kernel_exact = rs.simply_laced;
        } catch (const resource_limit&) {
          r.have_kernel = false;
        }
        rows[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (cfg.json) {
    json arr = json::array();
    long long count = 0;
    for (const auto& r : rows) {
      if (cfg.smooth_only && !r.smooth) continue;
      ++count;
      json row = {{"word", word_to_json(r.word)},
                  {"length", r.length},
                  {"smooth", r.smooth},
                  {"criterion", r.criterion},
                  {"verdict", survey_verdict_key(r.smooth, rs.simply_laced, r.criterion)}};
      if (r.have_kernel) {
        row["dim_kernel"] = r.dim_kernel;
        row["kernel_exact"] = r.kernel_exact;
      }
      arr.push_back(row);
    }
    json j;
    j["schema"] = "schubaut-survey/1";
    j["type"] = std::string(1, rs.type);
    j["rank"] = rs.rank;
    j["count"] = count;
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "survey " << rs.type << rs.rank << "  (" << group.size() << " elements"
      << (cfg.smooth_only ? ", smooth only" : "") << ")\n";
  out << "word | length | smooth | criterion | dim_K_w | verdict\n";
  for (const auto& r : rows) {
    if (cfg.smooth_only && !r.smooth) continue;
    out << word_to_text(r.word) << " | " << r.length << " | "
        << (r.smooth ? "yes" : "no") << " | " << (r.criterion ? "true" : "false")
        << " | ";
    if (r.have_kernel) out << (r.kernel_exact ? "" : "<=") << r.dim_kernel;
    else out << "-";
    out << " | " << survey_verdict(r.smooth, rs.simply_laced, r.criterion) << "\n";
  }
  return 0;
}

}  // namespace

std::vector<int> parse_word(const std::string& text) {
  if (text.empty()) throw invalid_input("cannot parse word: empty");
  std::vector<int> out;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    long long v = 0;
    if (!parse_int(tok, v) || v < 1) {
      std::ostringstream os;
      os << "cannot parse word '" << text << "': expected a positive integer at position "
         << (i + 1);
      throw invalid_input(os.str());
    }
    out.push_back(static_cast<int>(v));
    if (j == text.size()) break;
    i = j + 1;
  }
  return out;
}

std::vector<WeylElement> enumerate_group_cached(const RootSystem& rs, long long cap,
                                                const std::string& dir) {
  if (weyl_order(rs.type, rs.rank) > cap)
    throw resource_limit("Weyl group order exceeds the cap");
  if (!dir.empty()) {
    if (auto words = load_cache(rs, dir)) {
      std::vector<WeylElement> group;
      group.reserve(words->size());
      for (const auto& w : *words) group.push_back(from_word(rs, w));
      return group;
    }
  }
  std::vector<WeylElement> group = enumerate_group(rs, cap);
  if (!dir.empty()) store_cache(rs, dir, group);
  return group;
}

int run_query(const QueryConfig& cfg, std::ostream& out) {
  if (cfg.word.has_value() == cfg.survey)
    throw invalid_input("exactly one of --word and --survey is required");
  if (cfg.cap <= 0) throw invalid_input("--cap must be positive");
  RootSystem rs = build(cfg.type, cfg.rank);
  if (cfg.survey) return run_survey(rs, cfg, out);
  return run_single(rs, cfg, out);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    QueryConfig cfg;
    std::string type_str, word_str;
    std::vector<std::string> coh;

    CLI::App app{"Schubert variety automorphism reports"};
    app.add_option("--type", type_str, "root system type, one of A B C D E F G")
        ->required();
    app.add_option("--rank", cfg.rank, "rank of the root system")->required();
    auto* wopt = app.add_option("--word", word_str,
                                "comma-separated simple reflection letters, 1-based");
    app.add_flag("--survey", cfg.survey, "report every Weyl group element");
    app.add_flag("--smooth-only", cfg.smooth_only, "survey: keep smooth rows only");
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.add_flag("--kernel", cfg.kernel, "include the structural kernel description");
    app.add_option("--cohomology", coh,
                   "cohomology sections: b, g/b, or line:<root coordinates>");
    app.add_option("--cap", cfg.cap, "enumeration cap");
    app.add_option("--cache", cfg.cache_dir, "Weyl group cache directory");

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    if (type_str.size() != 1)
      throw invalid_input("--type expects a single letter A..G");
    cfg.type = type_str[0];
    if (wopt->count() > 0) cfg.word = parse_word(word_str);
    cfg.cohomology = coh;
    if (cfg.cache_dir.empty()) {
      if (const char* env = std::getenv("SCHUBAUT_CACHE")) cfg.cache_dir = env;
    }
    return run_query(cfg, out);
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit& e) {
    err << "error (resource): " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace schubaut
