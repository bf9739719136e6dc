// lamina: generate, transform, and certify truncated lamination languages
// over free groups from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "lamina/action.hpp"
#include "lamina/generate.hpp"
#include "lamina/io.hpp"
#include "lamina/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificationFailed = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lamina::invalid_input("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw lamina::invalid_input("cannot write " + out_path);
  out << text << "\n";
}

lamina::FactorLanguage load_language(const std::string& path) {
  return lamina::language_from_json(slurp(path));
}

lamina::Automorphism load_automorphism(const std::string& path) {
  return lamina::automorphism_from_json(slurp(path));
}

int rank_of(const std::string& word_text) {
  int rank = 2;
  for (char c : word_text) {
    const char lower = static_cast<char>(std::tolower(c));
    if (lower >= 'a' && lower <= 'z') rank = std::max(rank, lower - 'a' + 1);
  }
  return rank;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laminations on free groups as truncated factor languages"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // ---- make ---------------------------------------------------------------
  auto* make = app.add_subcommand("make", "generate a language");
  make->require_subcommand(1);

  std::string make_word;
  int make_horizon = 6;
  std::string make_out;
  auto* make_rational = make->add_subcommand("rational", "rational lamination of a word");
  make_rational->add_option("-w,--word", make_word, "cyclic word")->required();
  make_rational->add_option("-n,--horizon", make_horizon, "truncation horizon");
  make_rational->add_option("--out", make_out, "output file (default stdout)");
  make_rational->callback([&] {
    const lamina::Alphabet alphabet(rank_of(make_word));
    const lamina::Word w = lamina::parse_word(alphabet, make_word);
    emit(lamina::to_json(lamina::rational(alphabet, w, make_horizon)), make_out);
  });

  std::string ends_left, ends_right, ends_center;
  auto* make_ends = make->add_subcommand("ends", "lamination of one eventually periodic leaf");
  make_ends->add_option("--left", ends_left, "left period")->required();
  make_ends->add_option("--right", ends_right, "right period")->required();
  make_ends->add_option("--center", ends_center, "central word");
  make_ends->add_option("-n,--horizon", make_horizon, "truncation horizon");
  make_ends->add_option("--out", make_out, "output file (default stdout)");
  make_ends->callback([&] {
    const lamina::Alphabet alphabet(
        std::max(rank_of(ends_left + ends_right + ends_center), 2));
    const lamina::BiinfiniteWord leaf(
        lamina::parse_word(alphabet, ends_left),
        lamina::parse_word(alphabet, ends_center),
        lamina::parse_word(alphabet, ends_right));
    emit(lamina::to_json(lamina::from_ends(alphabet, leaf, make_horizon)),
         make_out);
  });

  std::string subst_rules, subst_seed = "a";
  auto* make_subst = make->add_subcommand("subst", "fixed word of a positive substitution");
  make_subst->add_option("-r,--rules", subst_rules, "rules, e.g. \"a:ab,b:a\"")->required();
  make_subst->add_option("--seed", subst_seed, "prolongable seed generator");
  make_subst->add_option("-n,--horizon", make_horizon, "truncation horizon");
  make_subst->add_option("--out", make_out, "output file (default stdout)");
  make_subst->callback([&] {
    const lamina::Alphabet alphabet(std::max(rank_of(subst_rules), 2));
    const lamina::Endomorphism phi = lamina::parse_rules(alphabet, subst_rules);
    if (subst_seed.size() != 1)
      throw lamina::invalid_input("seed must be a single generator");
    emit(lamina::to_json(lamina::from_substitution(
             phi, alphabet.letter_from_char(subst_seed[0]), make_horizon)),
         make_out);
  });

  // ---- apply --------------------------------------------------------------
  std::string apply_auto, apply_in, apply_out;
  int apply_horizon = 4;
  auto* apply_cmd = app.add_subcommand("apply", "act by an automorphism");
  apply_cmd->add_option("--auto", apply_auto, "automorphism JSON file")->required();
  apply_cmd->add_option("--in", apply_in, "language JSON file")->required();
  apply_cmd->add_option("-n,--horizon", apply_horizon, "target horizon");
  apply_cmd->add_option("--out", apply_out, "output file (default stdout)");
  apply_cmd->callback([&] {
    const lamina::Automorphism alpha = load_automorphism(apply_auto);
    const lamina::FactorLanguage language = load_language(apply_in);
    emit(lamina::to_json(lamina::act(alpha, language, apply_horizon)),
         apply_out);
  });

  // ---- dist ---------------------------------------------------------------
  std::string dist_a, dist_b;
  bool dist_json = false;
  auto* dist_cmd = app.add_subcommand("dist", "distance between two exact languages");
  dist_cmd->add_option("--a", dist_a, "first language file")->required();
  dist_cmd->add_option("--b", dist_b, "second language file")->required();
  dist_cmd->add_flag("--json", dist_json, "machine-readable output");
  dist_cmd->callback([&] {
    const lamina::LanguageDistance d =
        lamina::distance(load_language(dist_a), load_language(dist_b));
    if (dist_json) {
      std::cout << "{\"level\":" << d.level << ",\"capped\":"
                << (d.capped ? "true" : "false") << ",\"value\":" << d.value()
                << "}\n";
    } else {
      std::cout << (d.capped ? "d <= " : "d = ") << d.value()
                << "   (exp(-" << d.level << ")"
                << (d.capped ? ", capped by the horizon)" : ")") << "\n";
    }
  });

  // ---- chop ---------------------------------------------------------------
  std::string chop_in, chop_out;
  int chop_k = 1;
  auto* chop_cmd = app.add_subcommand("chop", "chop k letters off both ends of every word");
  chop_cmd->add_option("--in", chop_in, "language JSON file")->required();
  chop_cmd->add_option("-k", chop_k, "chop depth");
  chop_cmd->add_option("--out", chop_out, "output file (default stdout)");
  chop_cmd->callback([&] {
    emit(lamina::to_json(lamina::chop(load_language(chop_in), chop_k)),
         chop_out);
  });

  // ---- check --------------------------------------------------------------
  auto* check = app.add_subcommand("check", "certify properties of a language");
  check->require_subcommand(1);

  std::string check_in;
  auto* check_laminary = check->add_subcommand("laminary", "symmetric, factorial, bi-extendable");
  check_laminary->add_option("--in", check_in, "language JSON file")->required();
  check_laminary->callback([&] {
    const bool ok = lamina::is_laminary_at(load_language(check_in));
    std::cout << (ok ? "laminary at horizon" : "not laminary") << "\n";
    if (!ok) exit_code = kExitCertificationFailed;
  });

  int check_m = 1;
  auto* check_gap = check->add_subcommand("gap", "bounded-gap witness for minimality");
  check_gap->add_option("--in", check_in, "language JSON file")->required();
  check_gap->add_option("-m", check_m, "word length to cover");
  check_gap->callback([&] {
    const auto gap = lamina::gap_bound(load_language(check_in), check_m);
    if (gap)
      std::cout << "gap bound K = " << *gap << "\n";
    else
      std::cout << "no gap bound witnessed at this horizon\n";
    if (!gap) exit_code = kExitCertificationFailed;
  });

  auto* check_positive = check->add_subcommand("positive", "splits over the generators only");
  check_positive->add_option("--in", check_in, "language JSON file")->required();
  check_positive->callback([&] {
    const bool ok = lamina::is_positive(load_language(check_in));
    std::cout << (ok ? "positive" : "not positive") << "\n";
    if (!ok) exit_code = kExitCertificationFailed;
  });

  // ---- bbt ----------------------------------------------------------------
  std::string bbt_auto;
  int bbt_kmax = 8, bbt_window = 3;
  auto* bbt_cmd = app.add_subcommand("bbt", "certified cancellation lower bound");
  bbt_cmd->add_option("--auto", bbt_auto, "automorphism JSON file")->required();
  bbt_cmd->add_option("--kmax", bbt_kmax, "maximal search radius");
  bbt_cmd->add_option("--window", bbt_window, "stabilization window");
  bbt_cmd->callback([&] {
    const lamina::Automorphism alpha = load_automorphism(bbt_auto);
    std::cout << lamina::to_json(lamina::bbt_estimate(alpha.forward(),
                                                      bbt_kmax, bbt_window))
              << "\n";
  });

  // ---- approx -------------------------------------------------------------
  std::string approx_in;
  int approx_m = 2;
  auto* approx_cmd = app.add_subcommand("approx", "rational approximant of a minimal language");
  approx_cmd->add_option("--in", approx_in, "language JSON file")->required();
  approx_cmd->add_option("-m", approx_m, "certification level");
  approx_cmd->callback([&] {
    const lamina::CyclicWord v =
        lamina::rational_approximant(load_language(approx_in), approx_m);
    std::cout << lamina::to_string(v.representative()) << "\n";
  });

  // ---- rauzy --------------------------------------------------------------
  std::string rauzy_in, rauzy_dot_path;
  int rauzy_k = 1;
  auto* rauzy_cmd = app.add_subcommand("rauzy", "overlap graph of the level-k words");
  rauzy_cmd->add_option("--in", rauzy_in, "language JSON file")->required();
  rauzy_cmd->add_option("-k", rauzy_k, "word length at the nodes");
  rauzy_cmd->add_option("--dot", rauzy_dot_path, "output DOT file (default stdout)");
  rauzy_cmd->callback([&] {
    const std::string dot = lamina::rauzy_dot(load_language(rauzy_in), rauzy_k);
    if (rauzy_dot_path.empty())
      std::cout << dot;
    else {
      std::ofstream out(rauzy_dot_path);
      if (!out) throw lamina::invalid_input("cannot write " + rauzy_dot_path);
      out << dot;
    }
  });

  // ---- repro --------------------------------------------------------------
  auto* repro = app.add_subcommand("repro", "runnable certifications");
  repro->require_subcommand(1);
  bool repro_json = false;

  int nd_n = 2, nd_maxlen = 10;
  auto* repro_nd = repro->add_subcommand(
      "notdense", "no rational language matches the two-ended one");
  repro_nd->add_option("-n,--horizon", nd_n, "comparison level");
  repro_nd->add_option("--max-len", nd_maxlen, "max cyclic word length");
  repro_nd->add_flag("--json", repro_json, "machine-readable output");
  repro_nd->callback([&] {
    const lamina::NotDenseReport report = lamina::repro_not_dense(nd_n, nd_maxlen);
    if (repro_json) {
      std::cout << lamina::to_json(report) << "\n";
    } else {
      std::cout << "cyclic words up to length " << report.max_len << ": "
                << report.rows.size() << ", all differ at level "
                << report.horizon << ": " << (report.all_fail ? "yes" : "NO")
                << "\n";
      for (const auto& row : report.rows)
        std::cout << "  " << lamina::to_string(row.cyclic_word)
                  << "  separator " << lamina::to_string(row.separator)
                  << (row.separator_in_rational ? "  (rational only)"
                                                : "  (two-ended only)")
                  << "\n";
    }
    if (!report.all_fail) exit_code = kExitCertificationFailed;
  });

  std::string ls_rules = "a:ab,b:a", ls_seed = "a", ls_word;
  int ls_mmax = 5;
  auto* repro_ls = repro->add_subcommand(
      "limitset", "rational approximants certify at every level");
  repro_ls->add_option("-r,--rules", ls_rules, "substitution rules");
  repro_ls->add_option("--seed", ls_seed, "substitution seed");
  repro_ls->add_option("-w,--word", ls_word, "use a rational language instead");
  repro_ls->add_option("--mmax", ls_mmax, "largest certification level");
  repro_ls->add_flag("--json", repro_json, "machine-readable output");
  repro_ls->callback([&] {
    std::function<lamina::FactorLanguage(int)> generator;
    if (!ls_word.empty()) {
      const lamina::Alphabet alphabet(rank_of(ls_word));
      const lamina::Word w = lamina::parse_word(alphabet, ls_word);
      generator = [alphabet, w](int h) { return lamina::rational(alphabet, w, h); };
    } else {
      const lamina::Alphabet alphabet(std::max(rank_of(ls_rules), 2));
      const lamina::Endomorphism phi = lamina::parse_rules(alphabet, ls_rules);
      if (ls_seed.size() != 1)
        throw lamina::invalid_input("seed must be a single generator");
      const lamina::Letter seed = alphabet.letter_from_char(ls_seed[0]);
      generator = [phi, seed](int h) {
        return lamina::from_substitution(phi, seed, h);
      };
    }
    const lamina::LimitSetReport report = lamina::repro_limit_set(generator, ls_mmax);
    if (repro_json) {
      std::cout << lamina::to_json(report) << "\n";
    } else {
      std::cout << "m   K   |v'|  certified (d <= exp(-level))\n";
      for (const auto& row : report.rows)
        std::cout << row.m << "   " << row.gap << "   "
                  << row.approximant.size() << "     "
                  << (row.certified ? "yes" : "NO") << " (level "
                  << row.certified_level << ", v' = "
                  << lamina::to_string(row.approximant) << ")\n";
    }
    if (!report.all_certified) exit_code = kExitCertificationFailed;
  });

  int fp_trials = 100, fp_moves = 6;
  std::uint64_t fp_seed = 7;
  auto* repro_fp = repro->add_subcommand(
      "fixedpoint", "the commutator lamination is fixed and separated");
  repro_fp->add_option("--trials", fp_trials, "number of sampled automorphisms");
  repro_fp->add_option("--nielsen-len", fp_moves, "max Nielsen moves per sample");
  repro_fp->add_option("--seed", fp_seed, "sampling seed");
  repro_fp->add_flag("--json", repro_json, "machine-readable output");
  repro_fp->callback([&] {
    const lamina::FixedPointReport report =
        lamina::repro_fixed_point(fp_trials, fp_moves, fp_seed);
    if (repro_json) {
      std::cout << lamina::to_json(report) << "\n";
    } else {
      std::cout << report.trials << " sampled automorphisms, failures: "
                << report.failures << "\n";
    }
    if (report.failures != 0) exit_code = kExitCertificationFailed;
  });

  // ---- converge -----------------------------------------------------------
  std::string conv_target;
  int conv_n = 2;
  std::vector<std::string> conv_files;
  auto* conv_cmd = app.add_subcommand("converge", "first stable index of a language sequence");
  conv_cmd->add_option("--target", conv_target, "limit language file")->required();
  conv_cmd->add_option("-n,--horizon", conv_n, "comparison level");
  conv_cmd->add_option("files", conv_files, "language files, in sequence order")
      ->required();
  conv_cmd->callback([&] {
    std::vector<lamina::FactorLanguage> sequence;
    sequence.reserve(conv_files.size());
    for (const auto& path : conv_files) sequence.push_back(load_language(path));
    const auto k =
        lamina::converge_index(sequence, load_language(conv_target), conv_n);
    if (k)
      std::cout << "stable from position " << (*k + 1) << " of "
                << sequence.size() << "\n";
    else
      std::cout << "no stable tail at this level\n";
    if (!k) exit_code = kExitCertificationFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const lamina::horizon_error& e) {
    std::cerr << "horizon error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lamina::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lamina::consistency_error& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
