// Command-line front end: parse braid words, evaluate representations, run
// verification suites, emit aligned text or JSON.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidrep/action.hpp"
#include "braidrep/matrix_io.hpp"
#include "braidrep/rep.hpp"

using namespace braidrep;
using nlohmann::json;

namespace {

struct KeyValue {
  std::string key;
  std::string value;
};

std::vector<KeyValue> split_assignments(const std::string& text) {
  std::vector<KeyValue> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      if (!item.empty() && item.find_first_not_of(" \t") != std::string::npos)
        throw std::invalid_argument("bad assignment '" + item + "' (expected name=value)");
    } else {
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      out.push_back({trim(item.substr(0, eq)), trim(item.substr(eq + 1))});
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SpecAssignment parse_spec_assignment(int genus, const std::string& text) {
  SpecAssignment a = SpecAssignment::ones(genus);
  for (const auto& [key, value] : split_assignments(text)) {
    mpq_class v;
    if (v.set_str(value, 10) != 0)
      throw std::invalid_argument("bad rational '" + value + "'");
    v.canonicalize();
    if (key == "q") { a.q = v; continue; }
    if (key == "t") { a.t = v; continue; }
    if (key.size() < 2) throw std::invalid_argument("unknown generator '" + key + "'");
    const int r = std::stoi(key.substr(1));
    if (r < 1 || r > genus)
      throw std::invalid_argument("handle index out of range in '" + key + "'");
    int slot;
    switch (key[0]) {
      case 'm': slot = 0; break;
      case 'l': slot = 1; break;
      case 'M': slot = 2; break;
      case 'L': slot = 3; break;
      default: throw std::invalid_argument("unknown generator '" + key + "'");
    }
    a.handles[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(slot)] = v;
  }
  return a;
}

Character parse_character(int genus, const std::string& text) {
  Character chi;
  chi.a.assign(static_cast<std::size_t>(genus), {});
  chi.b.assign(static_cast<std::size_t>(genus), {});
  const RingMode central{KClass::KGE2, 0};
  for (const auto& [key, value] : split_assignments(text)) {
    HElem h = h_parse(central, value);
    CentralMono m{h.q_exp(), h.t_exp()};
    if (key == "s") { chi.sigma = m; continue; }
    if (key.size() < 2) throw std::invalid_argument("unknown generator '" + key + "'");
    const int r = std::stoi(key.substr(1));
    if (r < 1 || r > genus)
      throw std::invalid_argument("handle index out of range in '" + key + "'");
    if (key[0] == 'a')
      chi.a[static_cast<std::size_t>(r - 1)] = m;
    else if (key[0] == 'b')
      chi.b[static_cast<std::size_t>(r - 1)] = m;
    else
      throw std::invalid_argument("unknown generator '" + key + "'");
  }
  return chi;
}

int infer_genus(const std::string& expr) {
  int g = 0;
  std::size_t i = 0;
  while (i < expr.size()) {
    char c = expr[i];
    if ((c == 'm' || c == 'l' || c == 'M' || c == 'L') && i + 1 < expr.size() &&
        std::isdigit(static_cast<unsigned char>(expr[i + 1]))) {
      int r = 0;
      std::size_t j = i + 1;
      while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j])))
        r = 10 * r + (expr[j++] - '0');
      g = std::max(g, r);
      i = j;
    } else {
      ++i;
    }
  }
  return g;
}

// ---- verification suites ----------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

SuiteResult run_phi1_suite(int g, int n) {
  SuiteResult s{"phi1", {}};
  for (const auto& r : verify_relations(
           g, n, [g, n](const Word& w) { return phi1_word(g, n, w); })) {
    std::string detail;
    if (!r.pass)
      detail = "first difference at (" + std::to_string(r.row) + "," +
               std::to_string(r.col) + "): " + r.lhs_entry + " vs " + r.rhs_entry;
    s.checks.push_back({r.name, r.pass, detail});
  }
  return s;
}

SuiteResult run_action_suite(int g, int n) {
  SuiteResult s{"action", {}};
  Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  for (const Relation& rel : relations(g, n, 1, AlphabetKind::B0N_SURFACE))
    s.checks.push_back(
        {rel.name, braid_action(pi, rel.lhs) == braid_action(pi, rel.rhs), ""});
  FreeAuto ident(pi);
  for (GenSym gen : alphabet(g, n, 1, AlphabetKind::B0N_SURFACE).generators()) {
    bool ok =
        generator_action(pi, gen, 1).then(generator_action(pi, gen, -1)) == ident &&
        generator_action(pi, gen, -1).then(generator_action(pi, gen, 1)) == ident;
    s.checks.push_back({"inverse[" + gen_name(gen) + "]", ok, ""});
  }
  return s;
}

SuiteResult run_lifting_suite(int g, int n, int samples) {
  SuiteResult s{"lifting", {}};
  Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  auto gens = pi.generators();
  std::mt19937_64 rng(2024);
  int failures = 0;
  for (int trial = 0; trial < samples; ++trial) {
    Word w(pi);
    for (int i = 0, len = static_cast<int>(rng() % 21); i < len; ++i)
      w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
    for (GenSym gen : alphabet(g, n, 1, AlphabetKind::B0N_SURFACE).generators())
      for (KClass kc : {KClass::KGE2, KClass::K1})
        if (!lifting_identity_check(gen, w, RingMode{kc, g})) ++failures;
  }
  s.checks.push_back({"equivariance on " + std::to_string(samples) + " random words",
                      failures == 0, failures ? std::to_string(failures) + " failures" : ""});
  return s;
}

SuiteResult run_hgroup_suite(int g) {
  SuiteResult s{"hgroup", {}};
  const RingMode mode{KClass::KGE2, g};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  auto random_h = [&]() {
    HElem h(mode);
    h.set_exp(HGen::Q, 0, d(rng));
    h.set_exp(HGen::T, 0, d(rng));
    for (int r = 1; r <= g; ++r) {
      h.set_exp(HGen::M, r, d(rng));
      h.set_exp(HGen::L, r, d(rng));
      h.set_exp(HGen::MBar, r, d(rng));
      h.set_exp(HGen::LBar, r, d(rng));
    }
    return h;
  };
  bool assoc = true, invs = true, central = true;
  for (int i = 0; i < 2000; ++i) {
    HElem a = random_h(), b = random_h(), c = random_h();
    assoc &= h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c));
    invs &= h_mul(a, h_inv(a)).is_identity();
    central &= h_mul(HElem::generator(mode, HGen::Q), a) ==
               h_mul(a, HElem::generator(mode, HGen::Q));
  }
  s.checks.push_back({"associativity", assoc, ""});
  s.checks.push_back({"inverses", invs, ""});
  s.checks.push_back({"centrality", central, ""});
  auto comm = [&](const HElem& x, const HElem& y) {
    return h_mul(h_mul(h_mul(x, y), h_inv(x)), h_inv(y));
  };
  bool comms = true;
  for (int r = 1; r <= g; ++r) {
    comms &= comm(HElem::generator(mode, HGen::M, r), HElem::generator(mode, HGen::L, r)) ==
             HElem::generator(mode, HGen::T, 0, 2);
    comms &= comm(HElem::generator(mode, HGen::MBar, r),
                  HElem::generator(mode, HGen::L, r)) == HElem::generator(mode, HGen::Q);
    comms &= comm(HElem::generator(mode, HGen::M, r),
                  HElem::generator(mode, HGen::LBar, r)) == HElem::generator(mode, HGen::Q);
  }
  s.checks.push_back({"commutator values", comms, ""});
  return s;
}

SuiteResult run_fox_suite(int g, int n, int samples) {
  SuiteResult s{"fox", {}};
  const RingMode mode{KClass::KGE2, g};
  Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  auto gens = pi.generators();
  std::mt19937_64 rng(7);
  int failures = 0;
  for (int trial = 0; trial < samples; ++trial) {
    Word w(pi);
    for (int i = 0, len = static_cast<int>(rng() % 21); i < len; ++i)
      w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
    RingElem sum = RingElem::zero(mode);
    for (GenSym x : gens) {
      RingElem factor = RingElem::monomial(psi_image(mode, x));
      factor.add_term(HElem::identity(mode), -1);
      sum = sum + fox_phi(w, x, mode) * factor;
    }
    RingElem lhs = RingElem::monomial(phi_eval(w, mode));
    lhs.add_term(HElem::identity(mode), -1);
    if (!(lhs == sum)) ++failures;
  }
  s.checks.push_back({"fundamental identity on " + std::to_string(samples) + " words",
                      failures == 0, ""});
  return s;
}

SuiteResult run_psi_suite(int g, int n, int k) {
  SuiteResult s{"psi", {}};
  const RingMode mode{k == 1 ? KClass::K1 : KClass::KGE2, g};
  for (const Relation& rel : relations(g, n, k, AlphabetKind::INTERTWINING))
    s.checks.push_back({rel.name, psi_eval(rel.lhs, mode) == psi_eval(rel.rhs, mode), ""});
  return s;
}

SuiteResult run_burau_suite(int g, int n, int samples) {
  SuiteResult s{"burau", {}};
  Alphabet a = alphabet(g, n, 1, AlphabetKind::B0N_SURFACE);
  std::mt19937_64 rng(13);
  int failures = 0;
  for (int trial = 0; trial < samples; ++trial) {
    Word w(a);
    for (int i = 0, len = static_cast<int>(rng() % 13); i < len; ++i)
      w.append({GenFamily::Sigma, 1 + static_cast<int>(rng() % (n - 1))},
               rng() % 2 ? 1 : -1);
    if (!mat_eq(classical_block(phi1_word(g, n, w), n),
                fox_oracle_sigma_block(n, w, RingMode{KClass::K1, g})))
      ++failures;
  }
  s.checks.push_back({"gamma block vs Fox oracle on " + std::to_string(samples) + " words",
                      failures == 0, ""});
  return s;
}

SuiteResult run_lkb_suite() {
  SuiteResult s{"phi2-lkb", {}};
  auto cmp = lkb_compare_sigma1(true);
  std::string detail;
  for (const auto& mm : cmp.mismatches)
    detail += "(" + std::to_string(mm.row) + "," + std::to_string(mm.col) +
              ") expected " + mm.expected + " got " + mm.actual + "; ";
  s.checks.push_back({"v-basis action with t -> -t equals LKB", cmp.equal, detail});
  s.checks.push_back({"substitution omitted breaks the match",
                      !lkb_compare_sigma1(false).equal, ""});
  return s;
}

SuiteResult run_specialization_suite(int g) {
  SuiteResult s{"specialization", {}};
  const RingMode mode{KClass::KGE2, std::max(g, 1)};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-4, 4);
  bool sound = true;
  int accepted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    SpecAssignment a = SpecAssignment::ones(mode.genus);
    auto rand_q = [&]() {
      int n = num(rng), d = num(rng);
      if (n == 0) n = 1;
      if (d == 0) d = 1;
      mpq_class v(n, d);
      v.canonicalize();
      return v;
    };
    a.q = rand_q();
    a.t = rand_q();
    for (auto& h : a.handles)
      for (auto& v : h) v = rand_q();
    auto check = validate_specialization(mode, a);
    if (check.ok) {
      ++accepted;
      sound &= a.q == 1 && a.t * a.t == 1;
    } else if (a.q != 1) {
      bool named = false;
      for (const auto& v : check.violations)
        named |= v.find("=q") != std::string::npos;
      sound &= named;
    }
  }
  s.checks.push_back({"accepted assignments have q=1 and t^2=1 (" +
                          std::to_string(accepted) + " accepted)",
                      sound, ""});
  return s;
}

void print_suites(const std::vector<SuiteResult>& suites, bool as_json) {
  if (as_json) {
    json out;
    bool all = true;
    out["suites"] = json::array();
    for (const auto& s : suites) {
      json js;
      js["name"] = s.name;
      js["pass"] = s.pass();
      js["checks"] = json::array();
      for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        js["checks"].push_back(jc);
      }
      all &= s.pass();
      out["suites"].push_back(js);
    }
    out["pass"] = all;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : suites) {
      for (const auto& c : s.checks) {
        std::cout << (c.pass ? "ok   " : "FAIL ") << s.name << ": " << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
      }
      std::cout << (s.pass() ? "ok   " : "FAIL ") << "suite " << s.name << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with homology representations of surface braid groups"};
  app.require_subcommand(1);

  int g = 2, n = 3, k = 1;
  int hmul_g = -1, hmul_k = 2;
  std::string word_text, expr, suite = "all", gen_text = "s1", basis = "w";
  std::string subst, assign_text, char_text;
  bool as_json = false;

  auto* rank_cmd = app.add_subcommand("rank", "rank of the k-th homology module");
  rank_cmd->add_option("--g", g, "genus")->required();
  rank_cmd->add_option("--n", n, "number of strands")->required();
  rank_cmd->add_option("--k", k, "homology degree")->required();

  auto* hmul_cmd = app.add_subcommand("hmul", "collect a product in the coefficient group");
  hmul_cmd->add_option("expr", expr, "product of generator powers, e.g. \"m1 l1 m1^-1 l1^-1\"")
      ->required();
  hmul_cmd->add_option("--g", hmul_g, "genus (default: inferred from the expression)");
  hmul_cmd->add_option("--k", hmul_k, "1 kills t; >= 2 keeps it");

  auto* phi1_cmd = app.add_subcommand("phi1", "matrix of a braid word under the k=1 representation");
  phi1_cmd->add_option("--g", g, "genus")->required();
  phi1_cmd->add_option("--n", n, "number of strands")->required();
  phi1_cmd->add_option("--word", word_text, "braid word over s<i>, a<r>, b<r>")->required();
  phi1_cmd->add_flag("--json", as_json, "emit JSON");

  auto* phi2_cmd = app.add_subcommand("phi2", "curated k=2 data for genus 1, 3 strands");
  phi2_cmd->add_option("--gen", gen_text, "generator (only s1 is available)");
  phi2_cmd->add_option("--basis", basis, "w (full 10x10) or v (3x3 block)");
  phi2_cmd->add_option("--subst", subst, "t=-t to substitute");
  phi2_cmd->add_flag("--json", as_json, "emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--g", g, "genus");
  verify_cmd->add_option("--n", n, "number of strands");
  verify_cmd->add_option("--k", k, "fiber strands (psi suite)");
  verify_cmd->add_option("--suite", suite,
                         "phi1|action|lifting|hgroup|fox|psi|burau|phi2-lkb|specialization|all")
      ;
  verify_cmd->add_flag("--json", as_json, "emit JSON");

  auto* spec_cmd = app.add_subcommand("specialize", "evaluate a phi1 image at commutative units");
  spec_cmd->add_option("--g", g, "genus")->required();
  spec_cmd->add_option("--n", n, "number of strands")->required();
  spec_cmd->add_option("--word", word_text, "braid word")->required();
  spec_cmd->add_option("--assign", assign_text,
                       "comma-separated name=value rationals, e.g. \"q=1,t=-1,m1=2/3\"");
  spec_cmd->add_flag("--json", as_json, "emit JSON");

  auto* twist_cmd = app.add_subcommand("twist", "central character twist of a phi1 image");
  twist_cmd->add_option("--g", g, "genus")->required();
  twist_cmd->add_option("--n", n, "number of strands")->required();
  twist_cmd->add_option("--word", word_text, "braid word")->required();
  twist_cmd->add_option("--char", char_text,
                        "comma-separated images, e.g. \"s=1,a1=q,b1=q^-1 t\"");
  twist_cmd->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank_cmd->parsed()) {
      std::cout << rank(g, n, k).get_str() << "\n";
      return 0;
    }

    if (hmul_cmd->parsed()) {
      const int genus = hmul_g >= 0 ? hmul_g : infer_genus(expr);
      const RingMode mode{hmul_k == 1 ? KClass::K1 : KClass::KGE2, genus};
      std::cout << h_format(h_parse_product(mode, expr)) << "\n";
      return 0;
    }

    if (phi1_cmd->parsed()) {
      Word w = parse_word(alphabet(g, n, 1, AlphabetKind::B0N_SURFACE), word_text);
      RepMatrix m = phi1_word(g, n, w);
      if (as_json)
        std::cout << matrix_to_json(m, g, n, 1).dump(2) << "\n";
      else
        std::cout << matrix_pretty(m);
      return 0;
    }

    if (phi2_cmd->parsed()) {
      if (gen_text != "s1")
        throw std::invalid_argument("phi2: generator " + gen_text +
                                    " not provided by source data");
      if (!subst.empty() && subst != "t=-t")
        throw std::invalid_argument("phi2: unsupported substitution '" + subst + "'");
      RepMatrix full = phi2_curated({GenFamily::Sigma, 1});
      if (basis == "w") {
        RepMatrix out = subst.empty() ? full : full.substitute_t_negation();
        if (as_json)
          std::cout << matrix_to_json(out, 1, 3, 2).dump(2) << "\n";
        else
          std::cout << matrix_pretty(out);
        return 0;
      }
      if (basis != "v") throw std::invalid_argument("phi2: basis must be w or v");
      // The v-basis action V is pinned by W P = P V; it is checked against
      // that identity before printing.  --subst t=-t displays V with the
      // substitution applied, under which it equals the classical LKB matrix.
      RepMatrix v_action = lkb_sigma(3, 1, full.mode()).substitute_t_negation();
      std::vector<BasisLabel> wl = {{"w11"}, {"w12"}, {"w22"}};
      RepMatrix wblock(full.mode(), wl, wl);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) wblock.at(i, j) = full.at(i, j);
      RepMatrix p = v_basis_change();
      if (!mat_eq(mat_mul(wblock, p), mat_mul(p, v_action)))
        throw std::runtime_error("phi2: v-basis action does not satisfy W P = P V");
      RepMatrix out = subst.empty() ? v_action : v_action.substitute_t_negation();
      if (as_json)
        std::cout << matrix_to_json(out, 1, 3, 2).dump(2) << "\n";
      else
        std::cout << matrix_pretty(out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<SuiteResult> suites;
      auto want = [&](const char* name) { return suite == name || suite == "all"; };
      if (want("hgroup")) suites.push_back(run_hgroup_suite(g));
      if (want("psi")) suites.push_back(run_psi_suite(g, n, k));
      if (want("fox")) suites.push_back(run_fox_suite(g, n, 200));
      if (want("action")) suites.push_back(run_action_suite(g, n));
      if (want("lifting")) suites.push_back(run_lifting_suite(g, n, 100));
      if (want("phi1")) suites.push_back(run_phi1_suite(g, n));
      if (want("burau")) suites.push_back(run_burau_suite(g, n, 100));
      if (want("phi2-lkb")) suites.push_back(run_lkb_suite());
      if (want("specialization")) suites.push_back(run_specialization_suite(g));
      if (suites.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
      print_suites(suites, as_json);
      for (const auto& s : suites)
        if (!s.pass()) return 1;
      return 0;
    }

    if (spec_cmd->parsed()) {
      Word w = parse_word(alphabet(g, n, 1, AlphabetKind::B0N_SURFACE), word_text);
      SpecAssignment a = parse_spec_assignment(g, assign_text);
      auto check = validate_specialization(RingMode{KClass::K1, g}, a);
      if (!check.ok) {
        for (const auto& v : check.violations) std::cerr << "violation: " << v << "\n";
        return 1;
      }
      auto m = specialize(phi1_word(g, n, w), a);
      if (as_json)
        std::cout << rational_matrix_to_json(m).dump(2) << "\n";
      else
        std::cout << rational_matrix_pretty(m);
      return 0;
    }

    if (twist_cmd->parsed()) {
      Word w = parse_word(alphabet(g, n, 1, AlphabetKind::B0N_SURFACE), word_text);
      Character chi = parse_character(g, char_text);
      auto check = validate_character(g, n, chi);
      if (!check.ok) {
        for (const auto& v : check.violations) std::cerr << "violation: " << v << "\n";
        return 1;
      }
      RepMatrix m = twist(chi, phi1_word(g, n, w), w);
      if (as_json)
        std::cout << matrix_to_json(m, g, n, 1).dump(2) << "\n";
      else
        std::cout << matrix_pretty(m);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
