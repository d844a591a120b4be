#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "qhopf/graph.hpp"
#include "qhopf/syct.hpp"
#include "qhopf/verify.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhopf::cli {

namespace {

using LP = LaurentPoly;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Composition composition_arg(const std::string& s) {
  Composition a;
  try {
    a = parse_composition(s);
  } catch (const std::exception&) {
    throw UsageError("not a composition: " + s);
  }
  for (int x : a)
    if (x <= 0) throw UsageError("composition parts must be positive: " + s);
  return a;
}

Partition partition_arg(const std::string& s) {
  Partition la = composition_arg(s);
  if (!is_partition(la)) throw UsageError("not a partition: " + s);
  return la;
}

// "M:2,1" -> ("M", 2,1)
std::pair<std::string, Composition> tagged_arg(const std::string& s, const std::vector<std::string>& tags) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("expected BASIS:composition, got " + s);
  std::string tag = s.substr(0, colon);
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw UsageError("unknown basis " + tag);
  return {tag, composition_arg(s.substr(colon + 1))};
}

template <class K, class C, class KF>
json element_json(const ModuleElement<K, C>& x, const std::string& basis, KF kf) {
  json terms = json::array();
  for (const auto& [k, c] : x) terms.push_back({{"key", kf(k)}, {"coeff", LP(c).to_json()}});
  return {{"basis", basis}, {"terms", terms}};
}

json comp_json(const CompLin<long long>& x, const std::string& basis) {
  return element_json(x, basis, [](const Composition& a) { return format_composition(a); });
}

std::string poly_text(const CompLin<LP>& x, const std::string& basis) {
  if (x.empty()) return "0";
  std::string s;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*" + basis + "[" + format_composition(it->first) + "]";
  }
  return s;
}

void emit(std::ostream& out, const std::string& format, const CompLin<long long>& x, const std::string& basis) {
  if (format == "json")
    out << comp_json(x, basis).dump() << "\n";
  else
    out << format_complin(x, basis) << "\n";
}

void emit_part(std::ostream& out, const std::string& format, const PartLin& x, const std::string& basis) {
  CompLin<long long> y;
  for (const auto& [k, c] : x) y.add_term(k, c);
  emit(out, format, y, basis);
}

int max_degree_default() {
  if (const char* v = std::getenv("QHOPF_MAX_DEGREE")) {
    try {
      int d = std::stoi(v);
      if (d > 0) return d;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("bad QHOPF_MAX_DEGREE: ") + v);
  }
  return 5;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd Schur functions, q-Hopf algebras and q-dual graded graphs", "qhopf"};
  app.require_subcommand(1, 1);
  std::function<int()> action;

  // expand
  std::string odd_schur, oqs, basis = "F", format = "text";
  auto* expand = app.add_subcommand("expand", "Expand an odd Schur or odd quasisymmetric Schur function");
  auto* o1 = expand->add_option("--odd-schur", odd_schur, "partition, e.g. 2,1,1");
  auto* o2 = expand->add_option("--oqs", oqs, "composition, e.g. 1,2");
  o1->excludes(o2);
  expand->add_option("--basis", basis, "M, F, m or S")->check(CLI::IsMember({"M", "F", "m", "S"}));
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  expand->callback([&] {
    action = [&] {
      if (odd_schur.empty() == oqs.empty()) throw UsageError("give exactly one of --odd-schur, --oqs");
      if (!odd_schur.empty()) {
        Partition la = partition_arg(odd_schur);
        if (basis == "M") emit(out, format, odd_schur_m(la), "M");
        if (basis == "F") emit(out, format, odd_schur_f(la), "F");
        if (basis == "m") emit_part(out, format, odd_schur_monomial_sym(la), "m");
        if (basis == "S") emit(out, format, *oqs_decompose(odd_schur_f(la)), "S");
      } else {
        Composition a = composition_arg(oqs);
        if (basis == "m") throw UsageError("odd quasisymmetric Schur functions have no m expansion");
        if (basis == "M") emit(out, format, odd_qs_schur_m(a), "M");
        if (basis == "F") emit(out, format, odd_qs_schur(a), "F");
        if (basis == "S") emit(out, format, OqsLin(a), "S");
      }
      return 0;
    };
  });

  // lr
  std::string la_s, mu_s, lr_format = "tsv";
  auto* lr = app.add_subcommand("lr", "Odd Littlewood-Richardson coefficients oc^nu_{la,mu}");
  lr->add_option("--la", la_s)->required();
  lr->add_option("--mu", mu_s)->required();
  lr->add_option("--format", lr_format)->check(CLI::IsMember({"tsv", "text", "json"}));
  lr->callback([&] {
    action = [&] {
      Partition la = partition_arg(la_s), mu = partition_arg(mu_s);
      auto row = odd_lr_row(la, mu);
      if (lr_format == "tsv") {
        out << "la\tmu\tnu\toc\n";
        for (const auto& [nu, c] : row)
          out << format_composition(la) << "\t" << format_composition(mu) << "\t" << format_composition(nu) << "\t" << c
              << "\n";
      } else {
        emit_part(out, lr_format, row, "s");
      }
      return 0;
    };
  });

  // oclr
  std::string al_s, be_s, oc_format = "tsv";
  auto* oclr = app.add_subcommand("oclr", "Coefficients OC^gamma_{alpha,beta} of the noncommutative rule");
  oclr->add_option("--alpha", al_s)->required();
  oclr->add_option("--beta", be_s)->required();
  oclr->add_option("--format", oc_format)->check(CLI::IsMember({"tsv", "text", "json"}));
  oclr->callback([&] {
    action = [&] {
      Composition a = composition_arg(al_s), b = composition_arg(be_s);
      auto row = oc_row(a, b);
      if (oc_format == "tsv") {
        out << "alpha\tbeta\tgamma\tOC\n";
        for (const auto& [g, c] : row)
          out << format_composition(a) << "\t" << format_composition(b) << "\t" << format_composition(g) << "\t" << c
              << "\n";
      } else {
        emit(out, oc_format, row, "S*");
      }
      return 0;
    };
  });

  // pieri
  std::string p_part, p_comp, p_dual, p_kind = "h", p_format = "text";
  int p_n = 1;
  auto* pieri = app.add_subcommand("pieri", "Pieri rules: odd Schur, odd quasisymmetric Schur, or their duals");
  auto* q1 = pieri->add_option("--partition", p_part, "s_la * h_n or s_la * e_n");
  auto* q2 = pieri->add_option("--composition", p_comp, "S_alpha * S_(n) or S_alpha * S_(1^n)");
  auto* q3 = pieri->add_option("--dual", p_dual, "S*_alpha * S*_(n) or S*_alpha * S*_(1^n)");
  q1->excludes(q2)->excludes(q3);
  q2->excludes(q3);
  pieri->add_option("--n", p_n)->check(CLI::NonNegativeNumber);
  pieri->add_option("--kind", p_kind)->check(CLI::IsMember({"h", "e"}));
  pieri->add_option("--format", p_format)->check(CLI::IsMember({"text", "json"}));
  pieri->callback([&] {
    action = [&] {
      Strip kind = p_kind == "h" ? Strip::horizontal : Strip::vertical;
      if (!p_part.empty()) {
        emit_part(out, p_format, odd_pieri(partition_arg(p_part), p_n, kind), "s");
      } else if (!p_comp.empty()) {
        emit(out, p_format, oqs_pieri(composition_arg(p_comp), p_n, kind), "S");
      } else if (!p_dual.empty()) {
        OqsLin r;
        for (const auto& [b, t] : ync_pieri(composition_arg(p_dual), p_n, kind)) r.add_term(b, t.coeff);
        emit(out, p_format, r, "S*");
      } else {
        throw UsageError("give one of --partition, --composition, --dual");
      }
      return 0;
    };
  });

  // pair
  std::string left, right, pair_kind = "canonical", qv = "q";
  auto* pairc = app.add_subcommand("pair", "Canonical pairing <QSym, NSym> or the inner form on NSym");
  pairc->add_option("--left", left, "M:a or F:a (canonical), H:a or R:a (inner)")->required();
  pairc->add_option("--right", right, "H:b or R:b")->required();
  pairc->add_option("--kind", pair_kind)->check(CLI::IsMember({"canonical", "inner"}));
  pairc->add_option("--q", qv, "q (symbolic), 1 or -1")->check(CLI::IsMember({"q", "1", "-1"}));
  pairc->callback([&] {
    action = [&] {
      auto [rt, b] = tagged_arg(right, {"H", "R"});
      CompLin<LP> y(b);
      if (rt == "R") y = r_to_h<LP>(y);
      LP v;
      if (pair_kind == "canonical") {
        auto [lt, a] = tagged_arg(left, {"M", "F"});
        CompLin<LP> x(a);
        if (lt == "F") x = f_to_m<LP>(x);
        v = canonical_pair<LP>(x, y);
      } else {
        auto [lt, a] = tagged_arg(left, {"H", "R"});
        CompLin<LP> x(a);
        if (lt == "R") x = r_to_h<LP>(x);
        v = inner_form<LP>(x, y);
      }
      if (qv == "q")
        out << v.to_string() << "\n";
      else
        out << v.eval(std::stoi(qv)) << "\n";
      return 0;
    };
  });

  // rsk
  std::string word, rsk_format = "text";
  auto* rskc = app.add_subcommand("rsk", "Insertion and recording tableaux of a word");
  rskc->add_option("--word", word, "e.g. 324123 or 3,2,10")->required();
  rskc->add_option("--format", rsk_format)->check(CLI::IsMember({"text", "json"}));
  rskc->callback([&] {
    action = [&] {
      Word w;
      try {
        w = parse_word(word);
      } catch (const std::exception&) {
        throw UsageError("not a word: " + word);
      }
      auto r = rsk(w);
      if (rsk_format == "json")
        out << json{{"word", format_word(w)}, {"P", format_tableau(r.p)}, {"Q", format_tableau(r.q)}}.dump() << "\n";
      else
        out << "P: " << format_tableau(r.p) << "\nQ: " << format_tableau(r.q) << "\n";
      return 0;
    };
  });

  // qshuffle
  std::string qa, qb, rule = "normal", qs_q = "q";
  auto* qsh = app.add_subcommand("qshuffle", "q-quasishuffle product M_alpha M_beta");
  qsh->add_option("--alpha", qa)->required();
  qsh->add_option("--beta", qb)->required();
  qsh->add_option("--rule", rule, "normal (A_q normal order) or printed")->check(CLI::IsMember({"normal", "printed"}));
  qsh->add_option("--q", qs_q)->check(CLI::IsMember({"q", "-1"}));
  qsh->callback([&] {
    action = [&] {
      MergeRule mr = rule == "normal" ? MergeRule::normal_order : MergeRule::printed;
      Composition a = composition_arg(qa), b = composition_arg(qb);
      if (qs_q == "q")
        out << poly_text(q_quasishuffle<LP>(a, b, mr), "M") << "\n";
      else
        out << format_complin(q_quasishuffle<long long>(a, b, mr), "M") << "\n";
      return 0;
    };
  });

  // graph
  std::string gname, gformat = "dot";
  int grank = 3;
  auto* graph = app.add_subcommand("graph", "Export a pair of q-dual graded graphs");
  graph->add_option("--name", gname)->required()->check(CLI::IsMember({"young", "comp", "perm", "tab"}));
  graph->add_option("--rank", grank)->check(CLI::Range(0, 8));
  graph->add_option("--format", gformat)->check(CLI::IsMember({"dot", "json", "text"}));
  graph->callback([&] {
    action = [&] {
      auto pr = build_named_pair(gname, grank);
      if (gformat == "dot") {
        out << to_dot(pr.first) << to_dot(pr.second);
      } else if (gformat == "json") {
        out << json{{"up", to_json(pr.first)}, {"down", to_json(pr.second)}}.dump(2) << "\n";
      } else {
        for (const auto* g : {&pr.first, &pr.second}) {
          out << "# " << g->name << "\n";
          for (const auto& l : edge_lines(*g, grank)) out << l << "\n";
        }
      }
      return 0;
    };
  });

  // verify
  std::string suite = "all";
  int max_degree = 0;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_option("--max-degree", max_degree)->check(CLI::Range(1, 7));
  verify->callback([&] {
    action = [&] {
      int d = max_degree > 0 ? max_degree : max_degree_default();
      int code = 0;
      for (const auto& s : run_suite(suite, d))
        for (const auto& c : s.checks) {
          out << s.suite << "/" << c.check << ": " << (c.ok() ? "ok" : "FAIL") << " (" << c.cases << " cases)";
          if (!c.note.empty()) out << " note: " << c.note;
          out << "\n";
          if (!c.ok()) {
            out << c.failure->to_json().dump() << "\n";
            code = 1;
          }
        }
      return code;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0, everything else is a usage error
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qhopf::cli
