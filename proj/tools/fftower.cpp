#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fftower/errors.hpp"
#include "fftower/factor.hpp"
#include "fftower/oracle.hpp"
#include "fftower/orders.hpp"
#include "fftower/report.hpp"
#include "fftower/spec_io.hpp"
#include "fftower/tower.hpp"

namespace {

using namespace fftower;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<uint64_t, uint64_t> parse_seed(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--x1 expects a,b");
  try {
    return {std::stoull(s.substr(0, comma)), std::stoull(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--x1 expects two nonnegative integers a,b");
  }
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw UsageError("unknown family: " + name);
  return *f;
}

TowerSpec assemble_spec(uint64_t q, const std::string& family, const std::string& x1, bool x1_auto) {
  Family f = parse_family(family);
  if (q == 2) return TowerSpec::make(q, f);
  if (!x1.empty()) {
    auto [a, b] = parse_seed(x1);
    return TowerSpec::make(q, f, a, b);
  }
  if (x1_auto) return find_initial(q, f);
  throw UsageError("odd q needs --x1 a,b or --x1-auto");
}

Condition condition_for_family(Family f) {
  switch (f) {
    case Family::f1:
    case Family::f2:
      return Condition::C2;
    case Family::f3:
    case Family::f4:
    case Family::f5:
      return Condition::C2prime;
    case Family::f6:
    case Family::f7:
      return Condition::C3;
    default:
      return Condition::C1;
  }
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C2prime: return "C2'";
    default: return "C3";
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_certificates(const TowerState& ts, int levels) {
  const TowerSpec& spec = ts.spec();
  Condition cond = condition_for_family(spec.family);
  for (int n = 1; n <= levels; ++n) {
    const LevelRecord& r = ts.record(n);
    std::cout << "level " << n << ": absolute degree " << ts.field().absolute_degree(n);
    if (spec.char2()) {
      std::cout << ", x noncube: " << yesno(r.x_nonresidue)
                << ", resolvent reducible: " << yesno(r.resolvent_ok);
    } else {
      std::cout << ", x nonsquare: " << yesno(r.x_nonresidue)
                << ", delta nonsquare: " << yesno(r.delta_nonsquare);
    }
    if (n >= 2) {
      ConditionResult cr = ts.check_condition(n, cond);
      std::cout << ", condition " << condition_name(cond) << ": " << (cr.holds ? "holds" : "fails");
      if (cond == Condition::C3 && cr.holds) std::cout << " (e=" << cr.e_found << ")";
    }
    std::cout << '\n';
  }
}

std::string factored_line(const FactoredInteger& f) {
  std::string out = f.value.get_str() + " =";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    out += first ? " " : " * ";
    first = false;
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (f.cofactor != 1) {
    out += first ? " " : " * ";
    out += "[unfactored " + f.cofactor.get_str() + "]";
  }
  return out;
}

int run_build(uint64_t q, const std::string& family, const std::string& x1, bool x1_auto,
              int levels, const std::string& out) {
  TowerSpec spec = assemble_spec(q, family, x1, x1_auto);
  TowerState ts(spec);
  ts.extend_to(levels);
  print_certificates(ts, levels);
  if (!out.empty()) {
    spec_io::save_spec(out, spec);
    std::cout << "spec written to " << out << '\n';
  }
  return 0;
}

int run_orders(const std::string& spec_path, int levels, bool with_delta,
               const std::string& hints_path, const std::string& format, bool partial_ok,
               const FactorOptions& fopts) {
  TowerSpec spec = spec_io::load_spec(spec_path);
  report::TableOptions opts;
  opts.with_delta = with_delta;
  opts.factor = fopts;
  if (!hints_path.empty()) opts.hints = spec_io::load_hints(hints_path);
  report::OrdersTable table = report::build_orders_table(spec, levels, opts);
  if (!partial_ok) {
    for (const report::OrdersRow& row : table.rows) {
      if (row.status != "exact") {
        std::cerr << "order at level " << row.n
                  << " is only certified as a divisor; unfactored cofactor "
                  << row.group.cofactor.get_str() << " (rerun with --partial-ok to accept)\n";
        return 4;
      }
    }
  }
  if (format == "json")
    report::write_json(std::cout, table);
  else
    report::write_csv(std::cout, table);
  return 0;
}

int run_verify(const std::string& spec_path, int levels, const FactorOptions& fopts) {
  TowerSpec spec = spec_io::load_spec(spec_path);
  TowerState ts(spec);
  ts.extend_to(levels);
  int failures = 0;
  bool budget_short = false;
  auto flag = [&](int n, const std::string& what, bool ok) {
    std::cout << (ok ? "ok" : "FAIL") << ": level " << n << " " << what << '\n';
    if (!ok) ++failures;
  };

  Condition cond = condition_for_family(spec.family);
  for (int n = 1; n <= levels; ++n) {
    const LevelRecord& r = ts.record(n);
    if (spec.char2()) {
      flag(n, "x_n is a noncube", r.x_nonresidue);
      flag(n, "cubic resolvent splits", r.resolvent_ok);
    } else {
      flag(n, "x_n is a nonsquare", r.x_nonresidue);
      flag(n, "delta_n is a nonsquare", r.delta_nonsquare);
    }
    if (n >= 2) {
      flag(n, std::string("condition ") + condition_name(cond), ts.check_condition(n, cond).holds);
      if (!spec.char2() && spec.delta_rec)
        flag(n, "discriminant recurrence", ts.discriminant_recurrence_holds(n));
    }
  }
  for (int n = 2; n <= std::min(levels, 5); ++n) {
    for (int j = 1; j <= n - 1; ++j) {
      NormIdentityReport rep = ts.norm_identity(n, j);
      flag(n, "norm identity j=" + std::to_string(j), rep.identity_holds);
      if (rep.quotient_square)
        flag(n, "norm quotient square j=" + std::to_string(j), *rep.quotient_square);
    }
  }

  orders::GroupOrderFactory factory(fopts);
  for (int n = 1; n <= levels; ++n) {
    FactoredInteger grp = factory.factor_group_order(spec.q, n);
    orders::OrderResult ord = orders::multiplicative_order(ts.field(), ts.x(n), grp);
    Bigint bound = orders::order_lower_bound(spec.q, n);
    if (ord.order >= bound) {
      flag(n, "order lower bound", true);
    } else if (ord.kind == orders::OrderResult::Kind::divisor) {
      std::cout << "??: level " << n
                << " order lower bound not certified within the factorization budget\n";
      budget_short = true;
    } else {
      flag(n, "order lower bound", false);
    }
  }

  if (failures > 0) {
    std::cerr << failures << " verification check(s) failed\n";
    return 3;
  }
  if (budget_short) return 4;
  std::cout << "all checks passed\n";
  return 0;
}

int run_search(uint64_t q, const std::string& family, const std::string& out) {
  TowerSpec spec = find_initial(q, parse_family(family));
  if (spec.char2()) {
    std::cout << "base polynomial bits (ascending):";
    for (int b : spec.h_coeffs) std::cout << ' ' << b;
    std::cout << "\nfrobenius twist e=" << spec.e << '\n';
  } else {
    std::cout << "found x1: a=" << spec.init_a << " b=" << spec.init_b << '\n';
  }
  if (!out.empty()) {
    spec_io::save_spec(out, spec);
    std::cout << "spec written to " << out << '\n';
  }
  return 0;
}

int run_factor(const std::string& value, const std::string& hints_path, bool partial_ok,
               const FactorOptions& fopts) {
  Bigint n(value, 10);
  if (n < 2) throw UsageError("--value must be at least 2");
  FactorHints hints;
  if (!hints_path.empty()) hints = spec_io::load_hints(hints_path);
  FactoredInteger f = factor_integer(n, hints_path.empty() ? nullptr : &hints, fopts);
  std::cout << factored_line(f) << '\n';
  if (!f.complete() && !partial_ok) {
    std::cerr << "factorization incomplete within budget\n";
    return 4;
  }
  return 0;
}

int run_oracle(uint64_t q, const std::string& family, const std::string& x1, bool x1_auto) {
  TowerSpec spec = assemble_spec(q, family, x1, x1.empty() ? true : x1_auto);
  TowerState ts(spec);
  int nmax = 0;
  uint64_t size = 1;
  while (true) {
    int next = nmax + 1;
    ts.extend_to(next);
    int d = ts.field().absolute_degree(next);
    if (d > 6) break;
    bool fits = true;
    size = 1;
    for (int i = 0; i < d; ++i) {
      size *= q;
      if (size > 16384) {
        fits = false;
        break;
      }
    }
    if (!fits) break;
    nmax = next;
  }
  if (nmax == 0) throw UsageError("no tower level is small enough for exhaustive checking");
  int bad = 0;
  for (int n = 1; n <= nmax; ++n) {
    oracle::CheckReport rep = oracle::cross_check(ts, n);
    if (rep.ok) {
      std::cout << "oracle level " << n << ": ok\n";
    } else {
      ++bad;
      for (const std::string& m : rep.mismatches)
        std::cout << "oracle level " << n << ": MISMATCH " << m << '\n';
    }
  }
  if (bad > 0) {
    std::cerr << bad << " oracle level(s) disagreed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recursive tower fields over GF(q): construction, certification, order tables"};
  app.require_subcommand(1);

  FactorOptions fopts;
  fopts.budget_seconds = factor_budget_from_env();
  std::function<int()> action;

  CLI::App* tower = app.add_subcommand("tower", "build, certify and measure towers");
  tower->require_subcommand(1);

  {
    auto* c = tower->add_subcommand("build", "construct a tower and print per-level certificates");
    auto q = std::make_shared<uint64_t>(3);
    auto family = std::make_shared<std::string>("f1");
    auto x1 = std::make_shared<std::string>();
    auto x1_auto = std::make_shared<bool>(false);
    auto levels = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    c->add_option("--q", *q, "base field size (prime)")->required();
    c->add_option("--family", *family, "step family f1..f7 or custom")->required();
    c->add_option("--x1", *x1, "initial minimal polynomial as a,b (x1^2 = a x1 + b)");
    c->add_flag("--x1-auto", *x1_auto, "search for the smallest admissible seed");
    c->add_option("--levels", *levels, "number of levels to build")->required()->check(CLI::PositiveNumber);
    c->add_option("--out", *out, "write the tower description JSON here");
    c->callback([=, &action] {
      action = [=] { return run_build(*q, *family, *x1, *x1_auto, *levels, *out); };
    });
  }

  {
    auto* c = tower->add_subcommand("orders", "emit per-level multiplicative orders");
    auto spec = std::make_shared<std::string>();
    auto levels = std::make_shared<int>(1);
    auto with_delta = std::make_shared<bool>(false);
    auto hints = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    auto partial = std::make_shared<bool>(false);
    c->add_option("--spec", *spec, "tower description JSON")->required();
    c->add_option("--levels", *levels, "levels to measure")->required()->check(CLI::PositiveNumber);
    c->add_flag("--delta", *with_delta, "also measure the discriminant orders");
    c->add_option("--hints", *hints, "factorization hints JSON");
    c->add_option("--format", *format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c->add_flag("--partial-ok", *partial, "accept divisor-certified rows");
    c->add_option("--pm1-b1", fopts.pminus1_b1, "p-1 stage 1 bound");
    c->add_option("--rho-iters", fopts.rho_iterations, "rho iterations per parameter");
    c->callback([=, &action, &fopts] {
      action = [=, &fopts] {
        return run_orders(*spec, *levels, *with_delta, *hints, *format, *partial, fopts);
      };
    });
  }

  {
    auto* c = tower->add_subcommand("verify", "re-run every certified invariant");
    auto spec = std::make_shared<std::string>();
    auto levels = std::make_shared<int>(1);
    c->add_option("--spec", *spec, "tower description JSON")->required();
    c->add_option("--levels", *levels, "levels to verify")->required()->check(CLI::PositiveNumber);
    c->callback([=, &action, &fopts] {
      action = [=, &fopts] { return run_verify(*spec, *levels, fopts); };
    });
  }

  {
    auto* c = tower->add_subcommand("search-initial", "find the smallest admissible seed");
    auto q = std::make_shared<uint64_t>(3);
    auto family = std::make_shared<std::string>("f1");
    auto out = std::make_shared<std::string>();
    c->add_option("--q", *q, "base field size (prime)")->required();
    c->add_option("--family", *family, "step family f1..f7")->required();
    c->add_option("--out", *out, "write the tower description JSON here");
    c->callback([=, &action] {
      action = [=] { return run_search(*q, *family, *out); };
    });
  }

  {
    auto* c = app.add_subcommand("factor", "factor an integer with the library pipeline");
    auto value = std::make_shared<std::string>();
    auto hints = std::make_shared<std::string>();
    auto partial = std::make_shared<bool>(false);
    c->add_option("--value", *value, "decimal integer")->required();
    c->add_option("--hints", *hints, "factorization hints JSON");
    c->add_flag("--partial-ok", *partial, "exit 0 even if a composite cofactor remains");
    c->add_option("--budget", fopts.budget_seconds, "wall clock budget in seconds");
    c->add_option("--pm1-b1", fopts.pminus1_b1, "p-1 stage 1 bound");
    c->add_option("--rho-iters", fopts.rho_iterations, "rho iterations per parameter");
    c->callback([=, &action, &fopts] {
      action = [=, &fopts] { return run_factor(*value, *hints, *partial, fopts); };
    });
  }

  {
    auto* oracle_cmd = app.add_subcommand("oracle", "independent exhaustive cross-checks");
    oracle_cmd->require_subcommand(1);
    auto* c = oracle_cmd->add_subcommand("check", "compare the tower against a flat field");
    auto q = std::make_shared<uint64_t>(3);
    auto family = std::make_shared<std::string>("f1");
    auto x1 = std::make_shared<std::string>();
    auto x1_auto = std::make_shared<bool>(true);
    c->add_option("--q", *q, "base field size (prime)")->required();
    c->add_option("--family", *family, "step family f1..f7")->required();
    c->add_option("--x1", *x1, "initial minimal polynomial as a,b");
    c->add_flag("--x1-auto", *x1_auto, "search for the seed automatically (default)");
    c->callback([=, &action] {
      action = [=] { return run_oracle(*q, *family, *x1, *x1_auto); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const FactorBudgetError& e) {
    std::cerr << "factorization budget exceeded: " << e.what() << '\n';
    return 4;
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
