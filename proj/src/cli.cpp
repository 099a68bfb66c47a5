#include "ggrad/cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ggrad/casimir.hpp"
#include "ggrad/catalog.hpp"
#include "ggrad/errors.hpp"
#include "ggrad/forms.hpp"
#include "ggrad/oracle.hpp"
#include "ggrad/selection.hpp"
#include "ggrad/sweep.hpp"

namespace ggrad {

namespace {

using nlohmann::json;

constexpr const char* kUsage = R"(ggrad - generalized gradients of G-structures

usage: ggrad <command> [options]

commands:
  decompose --group G [--n N | --m M] --weight a,b,...   [--json]
      decompose tau (x) lambda into gradient targets with dimensions and
      conformal weights
  weight --group G [--n N | --m M] --weight ... --epsilon ...   [--json]
      one conformal weight, computed by the Casimir path and by the
      closed-form table row, with an agreement verdict
  table --group G [--n N | --m M] [--sweep K]   [--json]
      regenerate the closed-form table row: closed-form and Casimir-path
      values side by side for every dominant weight with coordinates <= K
  catalog <name> [--n N | --m M] [--p P] [--i I]   [--json]
      named operator entry; names: d, delta, form-twistor, dirac, penrose,
      rarita-schwinger, kahler+, kahler-
  check [--max-coord K] [--max-rank R]
      run the full invariant suite and report counts

groups: so, spin, u, su, sp, sp1sp, g2, spin7
  so/spin take --n (n >= 3); u/su/sp/sp1sp take --m.
  'spin7' is the Spin(7) structure group of 8-manifolds (tangent
  representation = 8-dimensional spin representation); the spin cover of
  SO(n) is 'spin --n N'.
  weights are comma-separated rationals, e.g. --weight 3/2,1/2,1/2

environment: GGRAD_MAX_COORD overrides the default sweep bound of table/check.

exit codes: 0 success / all verified; 1 usage error; 2 verification failure.
)";

struct ParsedArgs {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  bool json = false;
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
  ParsedArgs p;
  size_t i = 0;
  if (!args.empty() && args[0][0] != '-') {
    p.command = args[0];
    i = 1;
  }
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      p.json = true;
    } else if (a == "--help" || a == "-h") {
      p.command = "help";
    } else if (a.rfind("--", 0) == 0) {
      if (i + 1 >= args.size())
        throw Error("option " + a + " needs a value");
      p.options[a.substr(2)] = args[++i];
    } else {
      p.positional.push_back(a);
    }
  }
  return p;
}

int parse_int_option(const ParsedArgs& p, const std::string& key, int fallback) {
  auto it = p.options.find(key);
  if (it == p.options.end()) return fallback;
  try {
    size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw Error("option --" + key + " expects an integer, got '" + it->second +
                "'");
  }
}

GroupId parse_group(const ParsedArgs& p) {
  auto it = p.options.find("group");
  if (it == p.options.end()) throw Error("missing --group");
  const std::string& name = it->second;
  auto need_n = [&](Family f) {
    int n = parse_int_option(p, "n", -1);
    if (n < 0) throw Error("--group " + name + " needs --n");
    return GroupId{f, n};
  };
  auto need_m = [&](Family f) {
    int m = parse_int_option(p, "m", -1);
    if (m < 0) throw Error("--group " + name + " needs --m");
    return GroupId{f, m};
  };
  if (name == "so") return need_n(Family::SO);
  if (name == "spin") return need_n(Family::Spin);
  if (name == "u") return need_m(Family::U);
  if (name == "su") return need_m(Family::SU);
  if (name == "sp") return need_m(Family::Sp);
  if (name == "sp1sp") return need_m(Family::Sp1Sp);
  if (name == "g2") {
    int n = parse_int_option(p, "n", 7);
    if (n != 7) throw Error("g2 structures live on 7-manifolds");
    return GroupId{Family::G2, 0};
  }
  if (name == "spin7") {
    int n = parse_int_option(p, "n", 8);
    if (n != 8)
      throw Error(
          "spin7 is the Spin(7) structure group of 8-manifolds; for the spin "
          "cover of SO(n) use --group spin --n N");
    return GroupId{Family::Spin7, 0};
  }
  throw Error("unknown group '" + name +
              "' (expected so, spin, u, su, sp, sp1sp, g2, spin7)");
}

Weight required_weight(const ParsedArgs& p, const std::string& key) {
  auto it = p.options.find(key);
  if (it == p.options.end()) throw Error("missing --" + key);
  return parse_weight_csv(it->second);
}

json weight_to_json(const Weight& w) {
  json a = json::array();
  for (const Rat& x : w) a.push_back(x.to_string());
  return a;
}

json target_to_json(const GroupId& id, const DominantWeight& lambda,
                    const GradientTarget& t) {
  json j;
  j["epsilon"] = weight_to_json(t.epsilon);
  j["mu"] = weight_to_json(t.mu.weight());
  j["dim"] = t.dim.to_int64();
  j["conformal_weight"] = t.conformal_weight.to_string();
  json names = json::array();
  if (id.family == Family::U || id.family == Family::SU) {
    Rat sum;
    for (const Rat& x : t.epsilon) sum += x;
    const HolomorphicClassInfo& info = sum.sgn() > 0 ? kClassInfo[0] : kClassInfo[1];
    names.push_back(std::string(info.name) + " (" + info.value_type + ")");
  }
  for (const std::string& n : operator_names(id, lambda, t.epsilon))
    names.push_back(n);
  j["names"] = names;
  return j;
}

json decomposition_to_json(const Decomposition& d) {
  json j;
  const GroupDescriptor& g = descriptor(d.group);
  switch (d.group.family) {
    case Family::SO: j["group"] = "so"; break;
    case Family::Spin: j["group"] = "spin"; break;
    case Family::U: j["group"] = "u"; break;
    case Family::SU: j["group"] = "su"; break;
    case Family::Sp: j["group"] = "sp"; break;
    case Family::Sp1Sp: j["group"] = "sp1sp"; break;
    case Family::G2: j["group"] = "g2"; break;
    case Family::Spin7: j["group"] = "spin7"; break;
  }
  j["param"] = d.group.family == Family::G2 || d.group.family == Family::Spin7
                   ? g.n
                   : d.group.param;
  j["lambda"] = weight_to_json(d.lambda.weight());
  json ts = json::array();
  for (const GradientTarget& t : d.targets)
    ts.push_back(target_to_json(d.group, d.lambda, t));
  j["targets"] = ts;
  if (d.group.family == Family::SU)
    j["note"] =
        "SU weights are stored in lambda_m = 0 normal form; closed-form "
        "values are evaluated at the traceless representative";
  return j;
}

int default_sweep_bound(int fallback) {
  const char* env = std::getenv("GGRAD_MAX_COORD");
  if (!env) return fallback;
  try {
    return std::stoi(env);
  } catch (...) {
    throw Error("GGRAD_MAX_COORD must be an integer, got '" +
                std::string(env) + "'");
  }
}

// ---- decompose ----

int cmd_decompose(const ParsedArgs& p, std::ostream& out) {
  GroupId id = parse_group(p);
  const GroupDescriptor& g = descriptor(id);
  DominantWeight lambda = certify(id, required_weight(p, "weight"));
  Decomposition d = decompose(id, lambda);
  if (p.json) {
    out << decomposition_to_json(d).dump(2) << "\n";
    return 0;
  }
  out << "group: " << group_name(id) << "   (n = " << g.n
      << ", dim g = " << g.dim_g << ")\n";
  out << "lambda: " << format_weight(lambda.weight())
      << "   dim = " << weyl_dim(g, lambda) << "\n";
  if (id.family == Family::SU)
    out << "note: SU weights in lambda_m = 0 normal form; closed-form values "
           "at the traceless representative\n";
  out << "targets (" << d.targets.size() << "):\n";
  Int sum(0);
  for (const GradientTarget& t : d.targets) {
    out << "  " << epsilon_label(g, t.epsilon) << "  eps = "
        << format_weight(t.epsilon) << "  ->  mu = "
        << format_weight(t.mu.weight()) << "   dim " << t.dim
        << "   conformal weight " << t.conformal_weight;
    std::vector<std::string> names;
    if (id.family == Family::U || id.family == Family::SU) {
      Rat s;
      for (const Rat& x : t.epsilon) s += x;
      const HolomorphicClassInfo& info =
          s.sgn() > 0 ? kClassInfo[0] : kClassInfo[1];
      names.push_back(std::string(info.name) + " (" + info.value_type + ")");
    }
    for (const std::string& n : operator_names(id, lambda, t.epsilon))
      names.push_back(n);
    if (!names.empty()) {
      out << "   [";
      for (size_t i = 0; i < names.size(); ++i)
        out << (i ? "; " : "") << names[i];
      out << "]";
    }
    out << "\n";
    sum += t.dim;
  }
  out << "dimension check: " << sum << " = " << g.sum_tau_mult << " * "
      << weyl_dim(g, lambda) << "\n";
  return 0;
}

// ---- weight ----

int cmd_weight(const ParsedArgs& p, std::ostream& out) {
  GroupId id = parse_group(p);
  const GroupDescriptor& g = descriptor(id);
  DominantWeight lambda = certify(id, required_weight(p, "weight"));
  Weight eps = required_weight(p, "epsilon");
  Rat casimir_path = conformal_weight(g, lambda, eps);
  Rat closed = conformal_weight_closed(g, lambda, eps);
  bool ok = casimir_path == closed;
  if (p.json) {
    json j;
    j["group"] = group_name(id);
    j["lambda"] = weight_to_json(lambda.weight());
    j["epsilon"] = weight_to_json(eps);
    j["label"] = epsilon_label(g, eps);
    j["casimir_path"] = casimir_path.to_string();
    j["closed_form"] = closed.to_string();
    j["verified"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << group_name(id) << "  lambda = " << format_weight(lambda.weight())
        << "  eps = " << format_weight(eps) << "\n";
    out << "  casimir path: " << casimir_path << "\n";
    out << "  closed form (" << epsilon_label(g, eps) << "): " << closed
        << "\n";
    out << "  agreement: " << (ok ? "VERIFIED" : "FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

// ---- table ----

int cmd_table(const ParsedArgs& p, std::ostream& out) {
  GroupId id = parse_group(p);
  const GroupDescriptor& g = descriptor(id);
  int sweep = parse_int_option(p, "sweep", default_sweep_bound(2));
  if (sweep < 0) throw Error("--sweep must be >= 0");
  auto lambdas = dominant_sweep(id, sweep);
  long long cells = 0, verified = 0;
  json rows = json::array();
  std::ostringstream text;
  for (const DominantWeight& lambda : lambdas) {
    std::ostringstream line;
    line << "  lambda = " << format_weight(lambda.weight()) << ":";
    json row;
    row["lambda"] = weight_to_json(lambda.weight());
    json cells_json = json::array();
    for (const Weight& eps : relevant_weights(id, lambda)) {
      Rat a = conformal_weight(g, lambda, eps);
      Rat b = conformal_weight_closed(g, lambda, eps);
      bool ok = a == b;
      ++cells;
      if (ok) ++verified;
      line << "  " << epsilon_label(g, eps) << ": closed " << b.to_string()
           << " casimir " << a.to_string() << " "
           << (ok ? "VERIFIED" : "FAILED");
      json c;
      c["label"] = epsilon_label(g, eps);
      c["epsilon"] = weight_to_json(eps);
      c["closed_form"] = b.to_string();
      c["casimir_path"] = a.to_string();
      c["verified"] = ok;
      cells_json.push_back(c);
    }
    row["cells"] = cells_json;
    rows.push_back(row);
    text << line.str() << "\n";
  }
  if (p.json) {
    json j;
    j["group"] = group_name(id);
    j["dim_M"] = g.n;
    j["highest_weight"] = dominance_condition(id);
    j["sweep"] = sweep;
    j["rows"] = rows;
    j["cells"] = cells;
    j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "table row: dim(M) = " << g.n << "   group " << group_name(id)
        << "\n";
    out << "highest weight: " << dominance_condition(id) << "\n";
    if (id.family == Family::SU)
      out << "note: closed forms evaluated at the traceless representative "
             "of the normal form\n";
    out << "sweep: coordinates <= " << sweep << " -> " << lambdas.size()
        << " dominant weights, " << cells << " cells\n";
    out << text.str();
    out << "summary: " << verified << "/" << cells << " VERIFIED\n";
  }
  return verified == cells ? 0 : 2;
}

// ---- catalog ----

int cmd_catalog(const ParsedArgs& p, std::ostream& out) {
  if (p.positional.empty())
    throw Error("catalog needs an operator name (d, delta, form-twistor, "
                "dirac, penrose, rarita-schwinger, kahler+, kahler-)");
  const std::string& name = p.positional[0];
  OperatorKind kind;
  int size = 0;
  int index = 0;
  if (name == "d" || name == "delta" || name == "form-twistor") {
    kind = name == "d" ? OperatorKind::ExteriorDerivative
           : name == "delta" ? OperatorKind::Codifferential
                             : OperatorKind::FormTwistor;
    size = parse_int_option(p, "n", -1);
    if (size < 0) throw Error("form operators need --n");
    index = parse_int_option(p, "p", -1);
    if (index < 0) throw Error("form operators need --p (the form degree)");
  } else if (name == "dirac" || name == "penrose" ||
             name == "rarita-schwinger" || name == "rs") {
    kind = name == "dirac" ? OperatorKind::Dirac
           : name == "penrose" ? OperatorKind::PenroseTwistor
                               : OperatorKind::RaritaSchwinger;
    size = parse_int_option(p, "n", -1);
    if (size < 0) throw Error("spin operators need --n");
  } else if (name == "kahler+" || name == "kahler-") {
    kind = name == "kahler+" ? OperatorKind::KahlerGradientPlus
                             : OperatorKind::KahlerGradientMinus;
    size = parse_int_option(p, "m", -1);
    if (size < 0) throw Error("Kaehlerian gradients need --m");
    index = parse_int_option(p, "i", -1);
    if (index < 0) throw Error("Kaehlerian gradients need --i");
  } else {
    throw Error("unknown catalog operator '" + name + "'");
  }
  NamedOperator op = lookup(kind, size, index);
  const GroupDescriptor& g = descriptor(op.group);
  if (p.json) {
    json j;
    j["name"] = op.display_name;
    j["group"] = group_name(op.group);
    j["lambda"] = weight_to_json(op.lambda.weight());
    j["epsilon"] = weight_to_json(op.epsilon);
    j["label"] = epsilon_label(g, op.epsilon);
    j["conformal_weight"] = op.expected_weight.to_string();
    j["endomorphism_type"] = op.endomorphism_type;
    out << j.dump(2) << "\n";
  } else {
    out << op.display_name << "\n";
    out << "  group: " << group_name(op.group)
        << "   lambda: " << format_weight(op.lambda.weight())
        << "   eps: " << format_weight(op.epsilon) << "  ("
        << epsilon_label(g, op.epsilon) << ")\n";
    out << "  conformal weight: " << op.expected_weight << "\n";
    out << "  endomorphism type: "
        << (op.endomorphism_type ? "yes (same source and target bundle)"
                                 : "no")
        << "\n";
  }
  return 0;
}

// ---- check ----

struct CheckStats {
  long long checks = 0;
  long long failures = 0;
  void count(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

int cmd_check(const ParsedArgs& p, std::ostream& out) {
  const int max_coord = parse_int_option(p, "max-coord", default_sweep_bound(2));
  const int max_rank = parse_int_option(p, "max-rank", 4);
  const int max_n = 2 * max_rank + 1;
  CheckStats total;

  // two-path equality over every group, plus oracle multiset equivalence and
  // the dimension sum rule
  {
    CheckStats s;
    long long su_degenerate = 0;
    for (const GroupId& id : standard_groups(max_n, max_rank)) {
      const GroupDescriptor& g = descriptor(id);
      for (const DominantWeight& lambda : dominant_sweep(id, max_coord)) {
        Decomposition d = decompose(id, lambda);
        std::map<Weight, int, WeightLexLess> selection_multiset;
        Int dims(0);
        for (const GradientTarget& t : d.targets) {
          s.count(t.conformal_weight ==
                  conformal_weight_closed(g, lambda, t.epsilon));
          selection_multiset[t.mu.weight()] += 1;
          dims += t.dim;
        }
        std::map<Weight, int, WeightLexLess> oracle_multiset;
        for (const auto& [mu, mult] : tensor_decompose_oracle(g, lambda))
          oracle_multiset[mu.weight()] += mult;
        s.count(selection_multiset == oracle_multiset);
        for (const auto& [mu, mult] : selection_multiset) {
          (void)mu;
          if (mult != 1) ++su_degenerate;
        }
        s.count(dims == Int(g.sum_tau_mult) * weyl_dim(g, lambda));
      }
    }
    out << "two-path equality, oracle equivalence, dimension sums: "
        << s.checks << " checks, " << s.failures << " failures\n";
    if (su_degenerate)
      out << "  (multiplicity 2 occurs only for SU(m), m <= 2, where the "
             "standard representation and its dual coincide: "
          << su_degenerate << " components)\n";
    total.checks += s.checks;
    total.failures += s.failures;
  }

  // SO/Spin ordering chain
  {
    CheckStats s;
    for (int n = 3; n <= max_n; ++n)
      for (Family f : {Family::SO, Family::Spin}) {
        GroupId id{f, n};
        const GroupDescriptor& g = descriptor(id);
        for (const DominantWeight& lambda : dominant_sweep(id, max_coord))
          s.count(ordering_check(g, lambda));
      }
    out << "conformal weight ordering (SO/Spin): " << s.checks << " checks, "
        << s.failures << " failures\n";
    total.checks += s.checks;
    total.failures += s.failures;
  }

  // matrix realization of the weight operator on forms
  {
    CheckStats s;
    for (int n = 3; n <= 6; ++n)
      for (int p = 1; p <= n - 1; ++p) {
        auto actual = weight_operator_eigenvalues_forms(n, p);
        std::map<Rat, Int> expected;
        const GroupDescriptor& g = descriptor({Family::SO, n});
        for (const Weight& rep : form_rep_weights(n, p)) {
          DominantWeight lam = certify({Family::SO, n}, rep);
          for (const Weight& eps : relevant_weights({Family::SO, n}, lam)) {
            DominantWeight mu = certify({Family::SO, n},
                                        weight_add(lam.weight(), eps));
            auto [it, fresh] =
                expected.try_emplace(conformal_weight(g, lam, eps), Int(0));
            (void)fresh;
            it->second += weyl_dim(g, mu);
          }
        }
        std::map<Rat, Int> actual_map(actual.begin(), actual.end());
        s.count(actual_map == expected);
      }
    out << "explicit weight-operator matrices on forms (n <= 6): " << s.checks
        << " checks, " << s.failures << " failures\n";
    total.checks += s.checks;
    total.failures += s.failures;
  }

  // adjoint involution and the second-order composability sweep
  {
    CheckStats s;
    for (const GroupId& id : standard_groups(std::min(max_n, 8), std::min(max_rank, 3))) {
      const GroupDescriptor& g = descriptor(id);
      for (const DominantWeight& lambda : dominant_sweep(id, std::min(max_coord, 2))) {
        for (const Weight& eps : relevant_weights(id, lambda)) {
          AdjointData adj = adjoint(g, lambda, eps);
          AdjointData back = adjoint(g, adj.mu, adj.epsilon);
          s.count(back.mu == lambda && back.epsilon == eps &&
                  back.weight == conformal_weight(g, lambda, eps));
        }
      }
    }
    out << "formal adjoint involution: " << s.checks << " checks, "
        << s.failures << " failures\n";
    total.checks += s.checks;
    total.failures += s.failures;
  }
  {
    CheckStats s;
    for (int n = 4; n <= 12; n += 2) {
      for (int pp = 1; pp <= n - 1; ++pp) {
        auto fires = [&](bool d_first) {
          auto first = d_first ? d_arrows(n, pp) : delta_arrows(n, pp);
          bool any = false;
          const GroupDescriptor& g = descriptor({Family::SO, n});
          for (const FormArrow& a : first) {
            DominantWeight lam = certify({Family::SO, n}, a.source_rep);
            Weight mid = weight_add(a.source_rep, a.eps);
            auto second = d_first ? delta_arrows(n, pp + 1) : d_arrows(n, pp - 1);
            for (const FormArrow& b : second) {
              if (!(b.source_rep == mid)) continue;
              if (second_order_invariant(g, lam, a.eps, b.eps)) any = true;
            }
          }
          return any;
        };
        s.count(fires(true) == (pp == n / 2 - 1));   // delta d on p-forms
        s.count(fires(false) == (pp == n / 2 + 1));  // d delta on p-forms
      }
    }
    out << "delta-d / d-delta composability fires exactly at p = n/2 -+ 1: "
        << s.checks << " checks, " << s.failures << " failures\n";
    out << "  note: the Laplacian d delta + delta d is never conformally "
           "invariant on forms; the scalar-curvature correction (conformal "
           "Laplacian) is outside this library's algebraic scope\n";
    total.checks += s.checks;
    total.failures += s.failures;
  }

  out << "total: " << total.checks << " checks, " << total.failures
      << " failures\n";
  return total.failures == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    ParsedArgs p = parse_args(args);
    if (p.command == "help") {
      out << kUsage;
      return 0;
    }
    if (p.command.empty()) {
      err << kUsage;
      return 1;
    }
    if (p.command == "decompose") return cmd_decompose(p, out);
    if (p.command == "weight") return cmd_weight(p, out);
    if (p.command == "table") return cmd_table(p, out);
    if (p.command == "catalog") return cmd_catalog(p, out);
    if (p.command == "check") return cmd_check(p, out);
    throw Error("unknown command '" + p.command + "'");
  } catch (const InternalInconsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ggrad
