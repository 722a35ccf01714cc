#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "skein/errors.hpp"
#include "skein/json_io.hpp"
#include "skein/verify.hpp"

namespace skein {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Re-throws a literal parse failure with the argument it came from.
template <class F>
auto parse_literal(const std::string& what, const std::string& text, F f) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    throw UsageError(what + " '" + text + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + " '" + text + "': " + e.what());
  }
}

Partition partition_arg(const std::string& text) {
  return parse_literal("partition", text, [](const std::string& t) { return Partition::parse(t); });
}

std::string monomial_name(const Partition& k) { return AnnulusElement::basis(k).to_string(); }

std::string names(const std::vector<Partition>& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : ", ") + monomial_name(k);
  return out;
}

std::string assignment(const std::vector<Scalar>& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += (i ? ", " : "") + std::string("u") + std::to_string(i) + " = " + u[i].to_string();
  }
  return out;
}

std::string pattern_text(const PatternResult& r) {
  std::ostringstream os;
  if (const auto* sol = std::get_if<PatternSolution>(&r)) {
    os << "solution\n";
    for (std::size_t i = 0; i < sol->coefficients.size(); ++i) {
      os << "u" << i << " = " << sol->coefficients[i].to_string() << "\n";
    }
    for (int f : sol->free_unknowns) os << "u" << f << " free (set to 0)\n";
    return os.str();
  }
  const auto& bad = std::get<PatternInconsistency>(r);
  os << "inconsistent\n";
  if (bad.unknown < 0) {
    os << "equation " << names(bad.second_equations) << " reads 0 = nonzero\n";
    return os.str();
  }
  os << "equations " << names(bad.first_equations) << ": " << assignment(bad.first_solution) << "\n";
  os << "equations " << names(bad.second_equations) << ": " << assignment(bad.second_solution) << "\n";
  os << "disagree on u" << bad.unknown << "\n";
  return os.str();
}

struct Output {
  std::string text;
  Json json;
  int code = kExitOk;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Homfly skein computations in the annulus"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<Output()> action;

  int qint_i = 0;
  auto* qint = app.add_subcommand("qint", "Quantum integer [i]");
  qint->add_option("i", qint_i)->required()->check(CLI::NonNegativeNumber);
  qint->callback([&] {
    action = [&] {
      const LaurentPoly p = quantum_int(qint_i);
      return Output{p.to_string(), to_json(p)};
    };
  });

  std::string alpha_p;
  auto* alpha_cmd = app.add_subcommand("alpha", "Idempotent scalar alpha of a partition");
  alpha_cmd->add_option("partition", alpha_p)->required();
  alpha_cmd->callback([&] {
    action = [&] {
      const LaurentPoly a = alpha(partition_arg(alpha_p));
      return Output{a.to_string(), to_json(a)};
    };
  });

  std::string lr_a, lr_b;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product of two diagrams");
  lr->add_option("p1", lr_a)->required();
  lr->add_option("p2", lr_b)->required();
  lr->callback([&] {
    action = [&] {
      DiagramVector v;
      for (const auto& [nu, c] : lr_mult(partition_arg(lr_a), partition_arg(lr_b))) v.add_term(nu, Scalar(c));
      return Output{v.to_string(), to_json(v)};
    };
  });

  int adams_m = 0;
  bool as_diagrams = false, as_cpoly = false;
  auto* adams = app.add_subcommand("adams", "psi_m(c_1) as a c-polynomial and as diagrams");
  adams->add_option("m", adams_m)->required()->check(CLI::PositiveNumber);
  auto* diag_flag = adams->add_flag("--as-diagrams", as_diagrams);
  adams->add_flag("--as-cpoly", as_cpoly)->excludes(diag_flag);
  adams->callback([&] {
    action = [&] {
      const auto [cp, dv] = psi(adams_m);
      if (as_diagrams) return Output{dv.to_string(), to_json(dv)};
      if (as_cpoly) return Output{cp.to_string(), to_json(cp)};
      return Output{cp.to_string() + "\n" + dv.to_string(), Json{{"cpoly", to_json(cp)}, {"diagrams", to_json(dv)}}};
    };
  });

  std::string theta_p;
  auto* theta_cmd = app.add_subcommand("theta", "theta of a c-polynomial, in the A basis");
  theta_cmd->add_option("cpoly", theta_p)->required();
  theta_cmd->callback([&] {
    action = [&] {
      const CPoly p = parse_literal("c-polynomial", theta_p, [](const std::string& t) { return CPoly::parse(t); });
      const AnnulusElement e = theta(p);
      return Output{e.to_string(), to_json(e)};
    };
  });

  std::string q_p;
  auto* q_cmd = app.add_subcommand("q", "Idempotent closure Q of a partition");
  q_cmd->add_option("partition", q_p)->required();
  q_cmd->callback([&] {
    action = [&] {
      const AnnulusElement e = Q(partition_arg(q_p));
      return Output{e.to_string(), to_json(e)};
    };
  });

  std::string closure_w;
  int closure_n = 0;
  auto* closure_cmd = app.add_subcommand("closure", "Annulus closure of a braid word");
  closure_cmd->add_option("word", closure_w)->required();
  closure_cmd->add_option("--strands", closure_n, "Strand count (default: max index + 1)")->check(CLI::PositiveNumber);
  closure_cmd->callback([&] {
    action = [&] {
      const BraidWord w =
          parse_literal("braid word", closure_w, [&](const std::string& t) { return BraidWord::parse(t, closure_n); });
      const AnnulusElement e = closure(HeckeElement::from_word(w));
      return Output{e.to_string(), to_json(e)};
    };
  });

  int pm_m = 0;
  auto* pm = app.add_subcommand("pm", "The braid combination P_m");
  pm->add_option("m", pm_m)->required()->check(CLI::PositiveNumber);
  pm->callback([&] {
    action = [&] {
      const AnnulusElement e = P(pm_m);
      return Output{e.to_string(), to_json(e)};
    };
  });

  int torus_m = 0, torus_p = 0;
  std::optional<int> torus_sl, torus_h;
  bool torus_normalize = false;
  auto* torus = app.add_subcommand("torus", "Invariant of the (m, p) torus knot");
  torus->add_option("m", torus_m)->required()->check(CLI::PositiveNumber);
  torus->add_option("p", torus_p)->required();
  torus->add_option("--sl", torus_sl, "Specialize to sl(N)")->check(CLI::Range(2, 1000));
  torus->add_option("--h-order", torus_h, "Expand in h through this order (needs --sl)")->check(CLI::NonNegativeNumber);
  torus->add_flag("--normalize", torus_normalize, "Correct the writhe");
  torus->callback([&] {
    action = [&] {
      if (torus_h && !torus_sl) throw UsageError("--h-order needs --sl");
      if (!torus_sl) {
        const Scalar v = torus_invariant(torus_m, torus_p, torus_normalize);
        return Output{v.to_string(), to_json(v)};
      }
      const TFraction f = torus_invariant_slN(torus_m, torus_p, *torus_sl, torus_normalize);
      if (!torus_h) return Output{f.to_string(), to_json(f)};
      const std::vector<Rational> h = h_expand(f, *torus_sl, *torus_h);
      std::string text;
      Json list = Json::array();
      for (std::size_t i = 0; i < h.size(); ++i) {
        text += (i ? " " : "") + rational_to_string(h[i]);
        list.push_back(to_json(h[i]));
      }
      return Output{text, list};
    };
  });

  std::string pattern_file;
  auto* solve = app.add_subcommand("solve-pattern", "Solve target = sum u_i pattern_i in the A basis");
  solve->add_option("file", pattern_file)->required();
  solve->callback([&] {
    action = [&] {
      std::ifstream in(pattern_file);
      if (!in) throw UsageError("cannot open '" + pattern_file + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw UsageError(pattern_file + ": at position " + std::to_string(e.byte) + ": malformed JSON");
      }
      const PatternResult r = solve_pattern(pattern_system_from_json(j));
      std::string text = pattern_text(r);
      text.pop_back();
      return Output{text, to_json(r)};
    };
  });

  std::string chord_text;
  int chord_m = 0;
  auto* chords = app.add_subcommand("psi-chords", "Adams operator on a chord diagram");
  chords->add_option("matching", chord_text)->required();
  chords->add_option("m", chord_m)->required()->check(CLI::PositiveNumber);
  chords->callback([&] {
    action = [&] {
      const ChordDiagram d =
          parse_literal("matching", chord_text, [](const std::string& t) { return ChordDiagram::parse(t); });
      const ChordCounts counts = psi_chords(d, chord_m);
      std::string text;
      for (const auto& [k, c] : counts) text += (text.empty() ? "" : "\n") + std::to_string(c) + " " + k.to_string();
      return Output{text, to_json(counts)};
    };
  });

  std::string suite = "all";
  std::optional<int> verify_max;
  auto* verify = app.add_subcommand("verify", "Check the identities");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_option("--max", verify_max, "Size cap")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      if (verify_max) {
        const std::vector<std::string> picked = suite == "all" ? suite_names() : std::vector<std::string>{suite};
        for (const auto& s : picked) {
          if (*verify_max > default_size(s)) {
            err << "warning: --max " << *verify_max << " exceeds the default size " << default_size(s) << " of suite "
                << s << "; the Hecke work grows factorially\n";
          }
        }
      }
      const Report r = run_suite(suite, verify_max);
      std::string text = r.to_text();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      return Output{text, to_json(r), r.all_passed() ? kExitOk : kExitVerifyFailed};
    };
  });

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].rfind("-", 0) == 0) continue;
    if (app.get_subcommand_no_throw(args[i]) == nullptr) {
      err << "error: unknown subcommand '" << args[i] << "'\n";
      return kExitUsage;
    }
    break;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return kExitUsage;
  }

  try {
    const Output o = action();
    if (format == "json") {
      out << o.json.dump() << "\n";
    } else {
      out << o.text << "\n";
    }
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace skein
