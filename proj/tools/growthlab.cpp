// growthlab: word generation, complexity/Rauzy analysis, monomial-algebra
// growth classification and normal-basis decomposition from the command
// line.  Exit codes: 0 success, 2 input/validation error, 3 internal
// consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "growthlab/json_io.hpp"
#include "growthlab/selftest.hpp"

using namespace growthlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Word load_word(const std::string& path, const Alphabet& a) {
  std::string text = slurp(path);
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  return a.parse(stripped);
}

Alphabet infer_alphabet_from_string(const std::string& s) {
  std::string chars;
  for (char ch : s)
    if (chars.find(ch) == std::string::npos) chars += ch;
  if (chars.empty()) throw ArgumentError("empty word");
  return Alphabet::from_chars(chars);
}

/// Infer a single-character alphabet from the distinct characters of a
/// word file, in first-appearance order.
Alphabet infer_alphabet(const std::string& path) {
  std::string text = slurp(path);
  std::string chars;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (chars.find(ch) == std::string::npos) chars += ch;
  }
  if (chars.empty()) throw DataError("empty word file " + path);
  return Alphabet::from_chars(chars);
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& s, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << s;
  } else {
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    out << s;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growthlab: low-complexity words and monomial-algebra growth"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("-o,--output", out_path, "output file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "generate a word");
  std::string gen_kind, gen_alpha = "610/987", gen_x0 = "1/11";
  std::string gen_spec_path, gen_u, gen_c, gen_v;
  std::size_t gen_len = 100;
  bool gen_waive = false;
  gen->add_option("kind", gen_kind, "sturmian|mechanical|periodic|two_ray")
      ->required();
  gen->add_option("--alpha", gen_alpha, "rotation angle (rational)");
  gen->add_option("--x0", gen_x0, "orbit start (rational)");
  gen->add_option("--spec", gen_spec_path, "coding spec JSON file");
  gen->add_option("--u", gen_u, "left period");
  gen->add_option("--c", gen_c, "connector");
  gen->add_option("--v", gen_v, "right period");
  gen->add_option("--len", gen_len, "word length");
  gen->add_flag("--waive-resonance", gen_waive, "allow resonant orbit points");

  // analyze
  auto* ana = app.add_subcommand("analyze", "complexity/balance/Rauzy report");
  std::string ana_word_path;
  std::size_t ana_n_max = 40, ana_k_max = 8;
  ana->add_option("word", ana_word_path, "word file")->required();
  ana->add_option("--n-max", ana_n_max, "complexity horizon");
  ana->add_option("--k-max", ana_k_max, "Rauzy evolution horizon");

  // rauzy
  auto* rz = app.add_subcommand("rauzy", "export one Rauzy graph as DOT");
  std::string rz_word_path;
  std::size_t rz_k = 2;
  rz->add_option("word", rz_word_path, "word file")->required();
  rz->add_option("--k", rz_k, "graph order");

  // algebra
  auto* alg = app.add_subcommand("algebra", "growth analysis of a presentation");
  std::string alg_path, alg_format = "json";
  std::size_t alg_window = 0, alg_horizon = 20;
  alg->add_option("presentation", alg_path, "presentation file")->required();
  alg->add_option("--window", alg_window, "certification window override");
  alg->add_option("--horizon", alg_horizon, "profile horizon");
  alg->add_option("--format", alg_format, "json|tsv");

  // duality
  auto* dual = app.add_subcommand("duality", "antidictionary + duality check");
  std::string dual_word_path;
  std::size_t dual_m = 8;
  dual->add_option("word", dual_word_path, "word file")->required();
  dual->add_option("--m", dual_m, "antidictionary bound");

  // selftest
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  std::uint64_t st_seed = 0;
  st->add_option("--seed", st_seed, "seed for randomized property runs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Word w;
      Alphabet a = Alphabet::from_chars("ab");
      Json spec_json;
      if (gen_kind == "sturmian") {
        auto spec = sturmian_spec(Angle::parse(gen_alpha), Angle::parse(gen_x0));
        w = mechanical_word(spec, gen_len, gen_waive);
        a = spec.alphabet;
        spec_json = to_json(spec);
      } else if (gen_kind == "mechanical") {
        if (gen_spec_path.empty())
          throw ArgumentError("mechanical generation needs --spec");
        auto spec = coding_spec_from_json(Json::parse(slurp(gen_spec_path)));
        w = mechanical_word(spec, gen_len, gen_waive);
        a = spec.alphabet;
        spec_json = to_json(spec);
      } else if (gen_kind == "periodic") {
        if (gen_u.empty()) throw ArgumentError("periodic generation needs --u");
        a = infer_alphabet_from_string(gen_u);
        w = window(BiInfiniteSpec(Periodic{a.parse(gen_u)}), 0, gen_len);
        spec_json = Json{{"u", gen_u}};
      } else if (gen_kind == "two_ray") {
        if (gen_u.empty() || gen_v.empty())
          throw ArgumentError("two_ray generation needs --u and --v");
        a = infer_alphabet_from_string(gen_u + gen_c + gen_v);
        BiInfiniteSpec spec =
            TwoRay{a.parse(gen_u), a.parse(gen_c), a.parse(gen_v)};
        long long origin = -static_cast<long long>(gen_len / 2);
        w = window(spec, origin, gen_len);
        spec_json = Json{{"u", gen_u}, {"c", gen_c}, {"v", gen_v}};
      } else {
        throw ArgumentError("unknown generation kind '" + gen_kind + "'");
      }
      Json j{{"schema", kSchema},
             {"spec", spec_json},
             {"word", a.format(w)}};
      emit(j, out_path);
    } else if (*ana) {
      Alphabet a = infer_alphabet(ana_word_path);
      Word w = load_word(ana_word_path, a);
      if (w.empty()) throw ArgumentError("word must be nonempty");
      auto prof = complexity_profile(w, ana_n_max);
      auto tail = detect_affine_tail(prof);
      auto bal = balance_check(w, ana_n_max);
      auto evo = evolution(w, std::min(ana_k_max, w.size() / 2));
      Json j{{"schema", kSchema},
             {"length", w.size()},
             {"complexity", to_json(prof)},
             {"affine_tail", tail ? to_json(*tail) : Json(nullptr)},
             {"balance", to_json(bal, a)},
             {"rauzy", to_json(evo, a)}};
      emit(j, out_path);
    } else if (*rz) {
      Alphabet a = infer_alphabet(rz_word_path);
      Word w = load_word(rz_word_path, a);
      auto g = rauzy_graph(factors(w, rz_k), factors(w, rz_k + 1));
      emit_text(to_dot(g, a), out_path);
    } else if (*alg) {
      Presentation p = Presentation::parse(slurp(alg_path));
      FactorAutomaton fa = build_automaton(p);
      auto [T, V] = growth_profiles(fa, alg_horizon);
      if (alg_format == "tsv") {
        emit_text(to_tsv(T) + to_tsv(V), out_path);
      } else {
        GrowthClass cls = classify_growth(fa, alg_window);
        GrowthProfile trl = fa.n_states <= 64
                                ? good_word_profile(fa, alg_horizon)
                                : GrowthProfile{};
        Json j{{"schema", kSchema},
               {"presentation", p.format()},
               {"T", to_json(T)},
               {"V", to_json(V)},
               {"T_RL", to_json(trl)},
               {"class", to_json(cls)}};
        auto witness = slow_growth_criterion(p);
        j["slow_criterion_witness"] =
            witness ? Json(*witness) : Json(nullptr);
        if (cls.tag == GrowthClass::Tag::FiniteDim ||
            cls.tag == GrowthClass::Tag::Slow ||
            cls.tag == GrowthClass::Tag::Boundary)
          j["decomposition"] = to_json(decompose(p), p.alphabet);
        emit(j, out_path);
      }
    } else if (*dual) {
      Alphabet a = infer_alphabet(dual_word_path);
      Word w = load_word(dual_word_path, a);
      if (w.size() < 2 * dual_m)
        throw ArgumentError(
            "word shorter than 2m: factor data would not be exact");
      auto rep = verify_duality(a, factor_data(w, dual_m));
      Json j{{"schema", kSchema}, {"duality", to_json(rep, a)}};
      emit(j, out_path);
      if (!rep.ok) return 3;
    } else if (*st) {
      auto results = run_acceptance(st_seed);
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id
                  << ": " << r.name << " — " << r.detail << "\n";
        all = all && r.pass;
      }
      if (!all) return 3;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
