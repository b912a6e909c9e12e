#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "wmk/cli.hpp"
#include "wmk/toroidal.hpp"

namespace wmk {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Latex };

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& w) : std::runtime_error(w) {}
};

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "-" || s == "0" || s == "empty") return {};
  Partition p;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      p.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("not a partition: '" + s + "'");
    }
  }
  if (!is_partition(p)) throw ValidationError("not a weakly decreasing list of positive parts: '" + s + "'");
  return p;
}

std::vector<Partition> parse_cores(const std::string& s) {
  std::vector<Partition> out;
  if (s == "none") return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(parse_partition(item));
  if (!s.empty() && s.back() == ';') out.push_back({});
  if (s.empty()) out.push_back({});
  return out;
}

void check_ell(int ell) {
  if (ell < 1) throw ValidationError("ell must be at least 1");
}

std::string latex_partition(const Partition& p) {
  if (p.empty()) return "\\varnothing";
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string latex_multipartition(const Multipartition& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + latex_partition(m[i]);
  return s + ")";
}

std::string show(const RatFunc& f, Format fmt) { return fmt == Format::Latex ? f.to_latex() : f.to_string(); }

json value_json(const RatFunc& f) {
  json j = f.to_json();
  j["text"] = f.to_string();
  return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

RatFunc invert_t(const RatFunc& f) { return f.substitute(make_subst({{T, Mono::var(T, -1)}})); }

// N-/M- in (qq, dd) at (q, 1/t) to the norm in (q, t).
RatFunc ratio_to_norm(const RatFunc& r) {
  auto g = to_qt(r, Matching::Minus);
  if (!g) throw NotExpressible("N-/M- is not a function of q and t: " + r.to_string());
  return invert_t(*g);
}

bool same_support(const std::map<Partition, RatFunc>& a, const std::map<Partition, RatFunc>& b) {
  auto nonzero = [](const std::map<Partition, RatFunc>& m) {
    std::map<Partition, RatFunc> out;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) out.emplace(k, v);
    return out;
  };
  return nonzero(a) == nonzero(b);
}

// cq

Outcome cmd_cq(const Partition& lam, int ell, Format fmt) {
  CoreQuotient cq = core_quotient(lam, ell);
  int len = static_cast<int>(lam.size());
  int top = lam.empty() ? 0 : lam[0];
  std::string maya = young_to_maya(lam).dump(-top - 2, len + 1);
  std::ostringstream out;
  if (fmt == Format::Json) {
    json j = to_json(cq);
    j["lambda"] = lam;
    j["maya"] = maya;
    j["maya_window"] = {-top - 2, len + 1};
    return {finish(j)};
  }
  if (fmt == Format::Latex) {
    out << "\\lambda=" << latex_partition(lam) << ",\\quad \\ell=" << ell
        << ",\\quad \\mathrm{core}(\\lambda)=" << latex_partition(cq.core)
        << ",\\quad \\mathrm{quot}(\\lambda)=" << latex_multipartition(cq.quotient) << "\n";
    return {out.str()};
  }
  out << "lambda    " << to_string(lam) << "\n";
  out << "ell       " << ell << "\n";
  out << "core      " << to_string(cq.core) << "\n";
  out << "charges  ";
  for (int c : cq.charges) out << ' ' << c;
  out << "\n";
  out << "quotient  " << to_string(cq.quotient) << "\n";
  out << "maya      " << maya << "   (index " << len + 1 << " .. " << -top - 2
      << " from left to right, @ black, | after index 0)\n";
  return {out.str()};
}

// macdonald

const SymFunc& variant_of(const MacdonaldEntry& e, const std::string& v) {
  if (v == "H") return e.H;
  if (v == "Hstar") return e.Hstar;
  if (v == "P") return e.P;
  if (v == "Q") return e.Q;
  if (v == "Pstar") return e.Pstar;
  if (v == "Qstar") return e.Qstar;
  if (v == "Ptilde") return e.Ptilde;
  if (v == "Qtilde") return e.Qtilde;
  throw ValidationError("unknown variant '" + v + "'");
}

Outcome cmd_macdonald(const Partition& core, int n, int ell, const std::string& variant, Format fmt) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (!is_core(core, ell)) throw ValidationError(to_string(core) + " is not an " + std::to_string(ell) + "-core");
  const MacdonaldFamily& fam = macdonald_family(core, n, ell);
  std::ostringstream out;
  json rows = json::array();
  for (const auto& lam : fam.members) {
    const MacdonaldEntry& e = fam.at(lam);
    Expansion s = variant_of(e, variant).to_basis(Basis::S);
    if (fmt == Format::Json) {
      json terms = json::array();
      for (const auto& [mp, c] : s) terms.push_back({{"mpart", mp}, {"coeff", value_json(c)}});
      rows.push_back({{"lambda", lam}, {"quotient", e.quot}, {"variant", variant}, {"schur", terms}});
    } else if (fmt == Format::Latex) {
      out << variant << "_{" << latex_partition(lam) << "} &= ";
      bool first = true;
      for (const auto& [mp, c] : s) {
        out << (first ? "" : " + ") << "\\left(" << c.to_latex() << "\\right) s_{" << latex_multipartition(mp) << "}";
        first = false;
      }
      out << " \\\\\n";
    } else {
      out << variant << "_" << to_string(lam) << "  quot " << to_string(e.quot) << "\n";
      for (const auto& [mp, c] : s) out << "  s" << to_string(mp) << ": " << c.to_string() << "\n";
    }
  }
  if (fmt == Format::Json)
    return {finish({{"ell", ell}, {"core", core}, {"n", n}, {"variant", variant}, {"family", rows}})};
  return {out.str()};
}

// norm

Outcome cmd_norm(const Partition& lam, int ell, const std::string& route, Format fmt, bool symbolic) {
  bool want_oracle = route != "toroidal", want_toroidal = route != "oracle";
  Outcome res;
  json j = {{"lambda", lam}, {"ell", ell}};
  std::ostringstream out;
  std::optional<RatFunc> oracle, toroidal;
  if (want_toroidal) {
    if (ell < 3) throw UnsupportedRank("the toroidal route needs ell >= 3");
    UpsilonMode mode = symbolic ? UpsilonMode::Symbolic : UpsilonMode::One;
    RatFunc n = normalization(lam, ell, Route::NMinus, mode);
    RatFunc m = normalization(lam, ell, Route::MMinus, mode);
    RatFunc r = n / m;
    if (r.uses(UPS)) {
      res.code = kExitConsistency;
      out << "N-/M- depends on upsilon\n";
    }
    toroidal = ratio_to_norm(r);
    j["scalars"] = {{{"lambda", lam}, {"route", "N-"}, {"value", value_json(n)}, {"params", "qd-minus"}},
                    {{"lambda", lam}, {"route", "M-"}, {"value", value_json(m)}, {"params", "qd-minus"}}};
    j["toroidal"] = value_json(*toroidal);
    if (fmt == Format::Text) {
      out << "N-(q,1/t) = " << n.to_string() << "\n";
      out << "M-(q,1/t) = " << m.to_string() << "\n";
      out << "toroidal  = " << toroidal->to_string() << "\n";
    } else if (fmt == Format::Latex) {
      out << "N^-_{" << latex_partition(lam) << "}(q,t^{-1}) = " << n.to_latex() << "\n";
      out << "M^-_{" << latex_partition(lam) << "}(q,t^{-1}) = " << m.to_latex() << "\n";
    }
  }
  if (want_oracle) {
    oracle = norm_oracle(lam, ell);
    j["oracle"] = value_json(*oracle);
    if (fmt == Format::Text) out << "oracle    = " << oracle->to_string() << "\n";
    if (ell == 1) {
      bool ok = classical_norm(lam) == *oracle;
      j["classical_formula_agrees"] = ok;
      if (fmt == Format::Text) out << "classical product formula " << (ok ? "agrees" : "DISAGREES") << "\n";
      if (!ok) res.code = kExitConsistency;
    }
  }
  RatFunc shown = oracle ? *oracle : *toroidal;
  if (fmt == Format::Latex)
    out << "\\langle P^*_{{}^t" << latex_partition(lam) << "}, P_{" << latex_partition(lam) << "}\\rangle_{q,t} = "
        << shown.to_latex() << "\n";
  if (oracle && toroidal) {
    bool agree = *oracle == *toroidal;
    j["routes_agree"] = agree;
    if (fmt == Format::Text) out << "routes " << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) res.code = kExitConsistency;
  }
  res.text = fmt == Format::Json ? finish(j) : out.str();
  return res;
}

// pieri

Outcome cmd_pieri(const Partition& mu, int p, int n, int ell, const std::string& kind, const std::string& basis,
                  const std::string& route, Format fmt) {
  if (p < 0 || p >= ell) throw ValidationError("p must lie in [0, ell)");
  if (n < 1) throw ValidationError("n must be positive");
  if (kind == "e" && basis != "P") throw ValidationError("the e-rule is stated in the P basis");
  DualBasis b = basis == "P" ? DualBasis::P : DualBasis::Q;
  std::optional<std::map<Partition, RatFunc>> oracle, toroidal;
  if (route != "oracle") {
    if (ell < 3) throw UnsupportedRank("the toroidal route needs ell >= 3");
    toroidal = wreath_pieri_toroidal(mu, p, n, ell, kind == "e" ? KernelKind::E : KernelKind::H, b);
  }
  if (route != "toroidal")
    oracle = kind == "e" ? wreath_pieri_oracle(mu, p, n, ell) : wreath_dual_pieri_oracle(mu, p, n, ell, b);
  Outcome res;
  const auto& shown = oracle ? *oracle : *toroidal;
  std::ostringstream out;
  json rows = json::array();
  std::string fname = kind == "e" ? "e" : "h";
  for (const auto& [lam, c] : shown) {
    if (c.is_zero()) continue;
    if (fmt == Format::Json) {
      rows.push_back({{"lambda", lam}, {"coeff", value_json(c)}});
    } else if (fmt == Format::Latex) {
      out << "[" << basis << "_{" << latex_partition(lam) << "}]\\," << fname << "_{" << n << "}[X^{(" << p << ")}]"
          << basis << "_{" << latex_partition(mu) << "} = " << c.to_latex() << " \\\\\n";
    } else {
      out << basis << "_" << to_string(lam) << ": " << c.to_string() << "\n";
    }
  }
  json j = {{"mu", mu}, {"p", p}, {"n", n}, {"ell", ell}, {"kind", kind}, {"basis", basis}, {"terms", rows}};
  if (oracle && toroidal) {
    bool agree = same_support(*oracle, *toroidal);
    j["routes_agree"] = agree;
    if (fmt == Format::Text) out << "routes " << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) res.code = kExitConsistency;
  }
  res.text = fmt == Format::Json ? finish(j) : out.str();
  return res;
}

// verify

Outcome cmd_verify(int ell, int max_quot, const std::vector<Partition>& cores, Format fmt) {
  Outcome res;
  std::ostringstream out;
  json rows = json::array();
  int pass = 0, total = 0;
  for (const auto& core : cores) {
    if (!is_core(core, ell)) throw ValidationError(to_string(core) + " is not an " + std::to_string(ell) + "-core");
    for (int n = 0; n <= max_quot; ++n)
      for (const auto& lam : family_members(core, n, ell)) {
        RatFunc norm = norm_oracle(lam, ell);
        RatFunc hook = conjectured_norm(lam, ell);
        bool ok = norm == hook;
        if (ell == 1) ok = ok && classical_norm(lam) == norm;
        ++total;
        pass += ok;
        if (!ok) res.code = kExitConsistency;
        Multipartition quot = core_quotient(lam, ell).quotient;
        if (fmt == Format::Json) {
          rows.push_back({{"lambda", lam},
                          {"quotient", quot},
                          {"norm", value_json(norm)},
                          {"hook_product", value_json(hook)},
                          {"verdict", ok ? "PASS" : "FAIL"}});
        } else if (fmt == Format::Latex) {
          out << latex_partition(lam) << " & " << latex_multipartition(quot) << " & " << norm.to_latex() << " & "
              << (ok ? "\\checkmark" : "\\times") << " \\\\\n";
        } else {
          out << (ok ? "PASS " : "FAIL ") << to_string(lam) << "  quot " << to_string(quot) << "  norm "
              << norm.to_string();
          if (!ok) out << "  hook product " << hook.to_string();
          out << "\n";
        }
      }
  }
  if (fmt == Format::Json) {
    res.text = finish({{"ell", ell}, {"max_quot", max_quot}, {"rows", rows}, {"passed", pass}, {"total", total}});
  } else {
    if (fmt == Format::Text) out << pass << "/" << total << " match the hook product\n";
    res.text = out.str();
  }
  return res;
}

// paper-example

struct Item {
  std::string name;
  RatFunc computed, expected;
  bool qt;  // both sides in (q, t); otherwise in (qq, dd)
};

RatFunc minus_qd(const std::string& s) { return parse_ratfunc(s).substitute(matching_map(Matching::Minus)); }

Outcome cmd_paper_example(Format fmt, bool symbolic) {
  UpsilonMode mode = symbolic ? UpsilonMode::Symbolic : UpsilonMode::One;
  const int ell = 3;
  Partition small = {2, 2, 1}, big = {4, 3, 1};
  auto at_one = [](const RatFunc& f) { return f.substitute(make_subst({{UPS, Mono{}}})); };
  RatFunc n1 = normalization(small, ell, Route::NMinus, mode), m1 = normalization(small, ell, Route::MMinus, mode);
  RatFunc n2 = normalization(big, ell, Route::NMinus, mode), m2 = normalization(big, ell, Route::MMinus, mode);
  std::vector<Item> items = {
      {"N- constant, n = 1", pieri_constant(Route::NMinus, 1, ell), minus_qd("(1-q*t)^3/(1-q^-1*t^-1)"), false},
      {"N-_(2,2,1)(q,1/t)", at_one(n1), minus_qd("-(q^-1-q*t^-1)*q*t^3"), false},
      {"M-_(2,2,1)(q,1/t)", at_one(m1), minus_qd("-(q^-1-t^-2)*q*t^3"), false},
      {"M- constant, n = 2", pieri_constant(Route::MMinus, 2, ell),
       minus_qd("(1-q*t)^6/(q^2*t^2*(1-q^-1*t^-1)*(1-q^-2*t^-2))"), false},
      {"N-_(4,3,1)(q,1/t)", at_one(n2), minus_qd("-dd^-5*t^4*(1-q^4*t^-2)*(1-q^2*t^-1)"), false},
      {"M-_(4,3,1)(q,1/t)", at_one(m2), minus_qd("-dd^-5*t^4*(1-q*t^-2)*(1-q^3*t^-3)"), false},
      {"norm (2,2,1)", ratio_to_norm(n1 / m1), parse_ratfunc("(1-q^2*t)/(1-q*t^2)"), true},
      {"norm (4,3,1)", ratio_to_norm(n2 / m2), parse_ratfunc("(1-q^4*t^2)*(1-q^2*t)/((1-q^3*t^3)*(1-q*t^2))"), true},
  };
  auto step = sym_matrix_element_detail(kernel_H(2, 2, ell), {2}, big, Rep::Minus, UpsilonMode::One,
                                        Deformation::ContentOrder, true);
  bool ups_free = !(n1 / m1).uses(UPS) && !(n2 / m2).uses(UPS);

  Outcome res;
  int matches = 0;
  json rows = json::array();
  std::ostringstream out;
  for (const auto& it : items) {
    bool ok = it.computed == it.expected;
    matches += ok;
    json row = {{"name", it.name}, {"match", ok}, {"computed", value_json(it.computed)},
                {"expected", value_json(it.expected)}, {"params", it.qt ? "qt" : "qd-minus"}};
    std::string diff;
    if (!ok) {
      RatFunc ratio = it.computed / it.expected;
      // both sides are written in the q, t of the expression, so report the ratio there
      auto in_qt = it.qt ? std::optional<RatFunc>(ratio) : to_qt(ratio, Matching::Minus);
      diff = in_qt ? in_qt->to_string() : ratio.to_string();
      row["computed_over_expected"] = diff;
    }
    rows.push_back(row);
    if (fmt == Format::Latex) {
      out << "% " << it.name << (ok ? "" : " (differs)") << "\n" << show(it.computed, fmt) << "\n";
    } else if (fmt == Format::Text) {
      out << (ok ? "[MATCH] " : "[DIFF]  ") << it.name << "\n  computed " << it.computed.to_string() << "\n";
      if (!ok) out << "  expected " << it.expected.to_string() << "\n  computed/expected = " << diff << "\n";
    }
  }
  bool count_ok = step.nonzero_summands == 2 && step.summands == 8;
  if (matches != static_cast<int>(items.size()) || !count_ok || !ups_free) res.code = kExitConsistency;
  if (fmt == Format::Json) {
    res.text = finish({{"items", rows},
                       {"matches", matches},
                       {"total", items.size()},
                       {"upsilon", symbolic ? "symbolic" : "one"},
                       {"ratios_upsilon_free", ups_free},
                       {"h22_nonzero_summands", step.nonzero_summands},
                       {"h22_summands", step.summands}});
    return res;
  }
  if (fmt == Format::Text) {
    out << (count_ok ? "[MATCH] " : "[DIFF]  ") << "H_{2,2} step (2) -> (4,3,1): " << step.nonzero_summands << " of "
        << step.summands << " summands nonzero\n";
    if (symbolic) out << (ups_free ? "[MATCH] " : "[DIFF]  ") << "N/M ratios are free of upsilon\n";
    out << matches << "/" << items.size() << " pinned quantities match\n";
  }
  res.text = out.str();
  return res;
}

// selftest

Outcome cmd_selftest(Format fmt) {
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("quotient of (5,4,1), ell 3",
                      core_quotient({5, 4, 1}, 3).quotient == Multipartition{{1}, {1}, {}});
  checks.emplace_back("core of (4,3,1), ell 3", core_quotient({4, 3, 1}, 3).core == Partition{2});
  checks.emplace_back("round trip (6,3,3,1), ell 4",
                      from_core_quotient(core_quotient({6, 3, 3, 1}, 4)) == Partition{6, 3, 3, 1});
  checks.emplace_back("norm (2,2,1) oracle", norm_oracle({2, 2, 1}, 3) == parse_ratfunc("(1-q^2*t)/(1-q*t^2)"));
  checks.emplace_back("norm (2,2,1) toroidal", norm_toroidal({2, 2, 1}, 3) == parse_ratfunc("(1-q^2*t)/(1-q*t^2)"));
  checks.emplace_back("hook product (2,1), ell 1", conjectured_norm({2, 1}, 1) == classical_norm({2, 1}));
  bool fock = true;
  for (const auto& lam : partitions(3))
    for (int i = 0; i < 3; ++i)
      for (const auto& [mu, v] : fock_single_current(lam, i, 1, 3, Current::FMinus))
        fock = fock && sym_matrix_element(kernel_monomial(i, 1, 3), lam, mu, Rep::Minus) == v;
  checks.emplace_back("f-current vs monomial kernel, |lambda| = 3", fock);
  checks.emplace_back("E_{0,1} membership", check_membership(kernel_E(0, 1, 3)).ok);

  Outcome res;
  std::ostringstream out;
  json rows = json::array();
  for (const auto& [name, ok] : checks) {
    if (!ok) res.code = kExitConsistency;
    rows.push_back({{"check", name}, {"pass", ok}});
    if (fmt != Format::Json) out << (ok ? "PASS " : "FAIL ") << name << "\n";
  }
  res.text = fmt == Format::Json ? finish({{"checks", rows}}) : out.str();
  return res;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wreath Macdonald workbench: exact norms and Pieri data by two routes", "wmk"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, as_latex = false;
  std::string cache_dir, upsilon = "one";
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--latex", as_latex, "LaTeX output");
  app.add_option("--cache-dir", cache_dir, "directory for cached results");
  app.add_option("--upsilon", upsilon, "upsilon on the toroidal route")->check(CLI::IsMember({"one", "symbolic"}));

  int ell = 3, n = 1, p = 0, max_quot = 2;
  std::string lambda, core, variant = "H", route = "both", kind = "e", basis = "P", cores;

  auto* cq = app.add_subcommand("cq", "core, charges, quotient and Maya diagram");
  cq->add_option("--l", ell, "ell")->required();
  cq->add_option("--lambda", lambda, "partition, e.g. 5,4,1")->required();

  auto* mac = app.add_subcommand("macdonald", "a family of wreath Macdonald polynomials in the Schur basis");
  mac->add_option("--l", ell)->required();
  mac->add_option("--core", core, "ell-core (empty for the empty core)");
  mac->add_option("--n", n, "quotient size")->required();
  mac->add_option("--variant", variant)->check(
      CLI::IsMember({"H", "Hstar", "P", "Q", "Pstar", "Qstar", "Ptilde", "Qtilde"}));

  auto* norm = app.add_subcommand("norm", "the norm <P*_{t lambda}, P_lambda>");
  norm->add_option("--l", ell)->required();
  norm->add_option("--lambda", lambda)->required();
  norm->add_option("--route", route)->check(CLI::IsMember({"oracle", "toroidal", "both"}));

  auto* pieri = app.add_subcommand("pieri", "wreath Pieri coefficients");
  pieri->add_option("--l", ell)->required();
  pieri->add_option("--mu", lambda, "partition acted on")->required();
  pieri->add_option("--p", p, "color of the alphabet X^(p)")->required();
  pieri->add_option("--n", n, "degree");
  pieri->add_option("--kind", kind, "e: e_n in the P basis; h: the dual h_n rule")->check(CLI::IsMember({"e", "h"}));
  pieri->add_option("--basis", basis)->check(CLI::IsMember({"P", "Q"}));
  pieri->add_option("--route", route)->check(CLI::IsMember({"oracle", "toroidal", "both"}));

  auto* verify = app.add_subcommand("verify", "norms against the hook product over same-core families");
  verify->add_option("--l", ell)->required();
  verify->add_option("--max-quot", max_quot, "largest quotient size");
  verify->add_option("--cores", cores, "cores separated by ';' (empty string for the empty core, 'none' for no cores)");

  auto* example = app.add_subcommand("paper-example", "the worked (2,2,1) and (4,3,1) computation");
  auto* selftest = app.add_subcommand("selftest", "quick consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  if (as_json && as_latex) {
    err << "error: --json and --latex are exclusive\n";
    return kExitValidation;
  }
  Format fmt = as_json ? Format::Json : as_latex ? Format::Latex : Format::Text;
  bool symbolic = upsilon == "symbolic";

  try {
    check_ell(ell);
    std::string key;
    std::function<Outcome()> job;
    std::string fmt_name = as_json ? "json" : as_latex ? "latex" : "text";
    auto base = [&](const std::string& cmd) { return cmd + "|fmt=" + fmt_name + "|ups=" + upsilon; };
    if (cq->parsed()) {
      Partition lam = parse_partition(lambda);
      key = base("cq") + "|l=" + std::to_string(ell) + "|lambda=" + to_string(lam);
      job = [=] { return cmd_cq(lam, ell, fmt); };
    } else if (mac->parsed()) {
      Partition c = parse_partition(core);
      key = base("macdonald") + "|l=" + std::to_string(ell) + "|core=" + to_string(c) + "|n=" + std::to_string(n) +
            "|variant=" + variant;
      job = [=] { return cmd_macdonald(c, n, ell, variant, fmt); };
    } else if (norm->parsed()) {
      Partition lam = parse_partition(lambda);
      key = base("norm") + "|l=" + std::to_string(ell) + "|lambda=" + to_string(lam) + "|route=" + route;
      job = [=] { return cmd_norm(lam, ell, route, fmt, symbolic); };
    } else if (pieri->parsed()) {
      Partition mu = parse_partition(lambda);
      key = base("pieri") + "|l=" + std::to_string(ell) + "|mu=" + to_string(mu) + "|p=" + std::to_string(p) +
            "|n=" + std::to_string(n) + "|kind=" + kind + "|basis=" + basis + "|route=" + route;
      job = [=] { return cmd_pieri(mu, p, n, ell, kind, basis, route, fmt); };
    } else if (verify->parsed()) {
      auto cs = parse_cores(cores);
      key = base("verify") + "|l=" + std::to_string(ell) + "|max_quot=" + std::to_string(max_quot) + "|cores=";
      for (const auto& c : cs) key += to_string(c) + ";";
      job = [=] { return cmd_verify(ell, max_quot, cs, fmt); };
    } else if (example->parsed()) {
      key = base("paper-example");
      job = [=] { return cmd_paper_example(fmt, symbolic); };
    } else if (selftest->parsed()) {
      job = [=] { return cmd_selftest(fmt); };
    }

    if (!cache_dir.empty() && !key.empty()) {
      ResultCache cache(cache_dir);
      if (auto hit = cache.get(key)) {
        out << hit->output;
        return hit->exit_code;
      }
      Outcome r = job();
      cache.put(key, {r.text, r.code});
      out << r.text;
      return r.code;
    }
    Outcome r = job();
    out << r.text;
    return r.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidPartition& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsupportedRank& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace wmk
