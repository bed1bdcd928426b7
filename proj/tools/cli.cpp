#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tatek/io.hpp"
#include "tatek/powerops.hpp"
#include "tatek/verify.hpp"

namespace tatek {

namespace {

struct RunConfig {
  std::string format = "json";
  std::size_t size_cap = kDefaultSizeCap;
  std::uint64_t seed = 1;
};

// Input precondition violated by otherwise well-formed data.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string &path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw FormatError("cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception &e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string devoto_text(const DevotoElement &x) {
  const auto &g = *x.group();
  std::string out = "level " + std::to_string(x.level()) + "\n";
  for (const auto &pc : g.pair_classes().classes)
    out += "g=" + element_to_json(g, pc.g).dump() + " h=" + element_to_json(g, pc.h).dump() + ": " +
           x.eval(pc.g, pc.h).to_string() + "\n";
  return out;
}

json report_json(const BivariateReport &r) {
  json j = {{"pass", r.pass}, {"detail", r.detail}};
  if (!r.pass) {
    j["t_degree"] = r.t_degree;
    j["q_exponent"] = r.q_exponent ? json(r.q_exponent->to_string()) : json(nullptr);
  }
  return j;
}

class Emitter {
public:
  Emitter(const RunConfig &cfg, std::ostream &out) : cfg_(cfg), out_(out) {}
  void emit(const json &j, const std::string &text) {
    if (cfg_.format == "json")
      out_ << j.dump(2) << "\n";
    else
      out_ << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }

private:
  const RunConfig &cfg_;
  std::ostream &out_;
};

// A level-1 Devoto-valid element from --input, over --group when given.
DevotoElement load_element(const std::string &input, const std::string &group_path, const RunConfig &cfg) {
  GroupPtr group = group_path.empty() ? nullptr : group_from_json(read_json(group_path), cfg.size_cap);
  DevotoElement x = devoto_from_json(read_json(input), group, cfg.size_cap);
  if (x.level() != 1)
    throw InputError("input element must have level 1");
  if (const auto c = check_devoto(x); !c.ok)
    throw InputError("input element violates the rotation condition at exponent " + c.exponent.to_string());
  return x;
}

Series load_mckay_thompson(const std::string &input) {
  Series f = series_from_json(read_json(input));
  if (!is_mckay_thompson(f))
    throw InputError("input is not of the form q^-1 + O(1) with integral exponents");
  return f;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Exact power operations on Devoto equivariant Tate K-theory characters"};
  app.name("tatek");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output mode")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--size-cap", cfg.size_cap, "Largest group that may be enumerated")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");

  int order = 0, n = 0, n_max = 0, t_order = 0, q_order = 0;
  std::string input, group_path, coeffs_path, method = "exp", suite;
  bool use_j = false;

  auto *jseries_cmd = app.add_subcommand("jseries", "j - 744 from E4^3 / Delta");
  jseries_cmd->add_option("--order", order)->required()->check(CLI::PositiveNumber);

  auto *faber_cmd = app.add_subcommand("faber", "Monic Faber polynomial");
  faber_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto *faber_in = faber_cmd->add_option("--input", input, "McKay-Thompson series record");
  faber_cmd->add_flag("--j", use_j, "Use j - 744")->excludes(faber_in);

  auto *repl_cmd = app.add_subcommand("replicable", "Check Phi_n(F) = n T_n(F)");
  repl_cmd->add_option("--nmax", n_max)->required()->check(CLI::PositiveNumber);
  repl_cmd->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  auto *repl_in = repl_cmd->add_option("--input", input);
  repl_cmd->add_flag("--j", use_j)->excludes(repl_in);

  auto *hecke_cmd = app.add_subcommand("hecke", "Hecke operator T_n");
  hecke_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  hecke_cmd->add_option("--input", input)->required();
  hecke_cmd->add_option("--group", group_path);

  auto *sym_cmd = app.add_subcommand("sym", "Stringy symmetric power");
  sym_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  sym_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "exp"}));
  sym_cmd->add_option("--input", input)->required();
  sym_cmd->add_option("--group", group_path);

  auto *powerop_cmd = app.add_subcommand("powerop", "Stringy power operation onto the wreath product");
  powerop_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  powerop_cmd->add_option("--input", input)->required();
  powerop_cmd->add_option("--group", group_path);

  auto *eps_cmd = app.add_subcommand("epsilon", "Orbifold sum");
  eps_cmd->add_option("--input", input)->required();
  eps_cmd->add_option("--group", group_path);

  auto *dmvv_cmd = app.add_subcommand("dmvv", "Exponential of Hecke operators against the product formula");
  dmvv_cmd->add_option("--coeffs", coeffs_path)->required();
  dmvv_cmd->add_option("--t-order", t_order)->required()->check(CLI::NonNegativeNumber);
  dmvv_cmd->add_option("--q-order", q_order)->required()->check(CLI::NonNegativeNumber);

  auto *denom_cmd = app.add_subcommand("denominator", "Denominator formula for j - 744");
  denom_cmd->add_option("--order", order)->required()->check(CLI::PositiveNumber);

  auto *verify_cmd = app.add_subcommand("verify", "Run a named property suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Emitter emit(cfg, out);
  try {
    if (*jseries_cmd) {
      const Series j = jseries(order);
      emit.emit(to_json(j), j.to_string());
    } else if (*faber_cmd) {
      if (!use_j && input.empty())
        throw InputError("faber needs --input or --j");
      const Series f = use_j ? jseries(std::max(1, n - 1)) : load_mckay_thompson(input);
      const Polynomial p = faber(f, n);
      emit.emit(to_json(p), polynomial_to_string(p));
    } else if (*repl_cmd) {
      if (!use_j && input.empty())
        throw InputError("replicable needs --input or --j");
      const Series f = use_j ? jseries(static_cast<int>(replicability_requirement(n_max, order).floor()))
                             : load_mckay_thompson(input);
      const auto r = replicability_check(f, n_max, order);
      json entries = json::array();
      std::string text;
      for (const auto &e : r.entries) {
        json je = {{"n", e.n}, {"pass", e.pass}};
        text += "n=" + std::to_string(e.n) + (e.pass ? " PASS" : " FAIL");
        if (!e.pass) {
          je["witness"] = e.witness ? json(e.witness->to_string()) : json(nullptr);
          je["lhs"] = e.lhs_coeff;
          je["rhs"] = e.rhs_coeff;
          text += " at q^" + (e.witness ? e.witness->to_string() : "?") + ": " + e.lhs_coeff + " vs " + e.rhs_coeff;
        }
        text += "\n";
        entries.push_back(je);
      }
      emit.emit({{"pass", r.pass}, {"entries", entries}}, text);
      return r.pass ? kOk : kVerificationFailed;
    } else if (*hecke_cmd) {
      const json raw = read_json(input);
      if (raw.contains("terms") && group_path.empty()) {
        const Series s = hecke_T(series_from_json(raw), n);
        emit.emit(to_json(s), s.to_string());
      } else {
        const DevotoElement x = hecke_T(load_element(input, group_path, cfg), n);
        emit.emit(to_json(x), devoto_text(x));
      }
    } else if (*sym_cmd) {
      const DevotoElement x =
          sym_str(load_element(input, group_path, cfg), n, method == "brute" ? SymMethod::Brute : SymMethod::Exp);
      emit.emit(to_json(x), devoto_text(x));
    } else if (*powerop_cmd) {
      const DevotoElement x = p_str(load_element(input, group_path, cfg), n, {}, cfg.size_cap);
      emit.emit(to_json(x), devoto_text(x));
    } else if (*eps_cmd) {
      const Series s = epsilon(load_element(input, group_path, cfg));
      emit.emit(to_json(s), s.to_string());
    } else if (*dmvv_cmd) {
      const auto r = dmvv_check(coeffmap_from_json(read_json(coeffs_path)), t_order, q_order);
      emit.emit(report_json(r), (r.pass ? "PASS" : "FAIL ") + r.detail);
      return r.pass ? kOk : kVerificationFailed;
    } else if (*denom_cmd) {
      const auto r = denominator_check(order);
      emit.emit(report_json(r), (r.pass ? "PASS" : "FAIL ") + r.detail);
      return r.pass ? kOk : kVerificationFailed;
    } else if (*verify_cmd) {
      const auto results = run_suite(suite, cfg.seed);
      bool pass = true;
      json js = json::array();
      std::string text;
      for (const auto &s : results) {
        json checks = json::array();
        for (const auto &c : s.checks) {
          checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
          text += (c.pass ? "PASS " : "FAIL ") + s.name + ": " + c.name + (c.pass ? "" : " (" + c.detail + ")") + "\n";
        }
        js.push_back({{"name", s.name}, {"pass", s.pass()}, {"checks", checks}});
        pass = pass && s.pass();
      }
      emit.emit({{"seed", cfg.seed}, {"pass", pass}, {"suites", js}}, text);
      return pass ? kOk : kVerificationFailed;
    }
  } catch (const FormatError &e) {
    err << "format error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InsufficientTruncation &e) {
    err << "insufficient truncation: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupError &e) {
    err << "group error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error &e) {
    err << "input error: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

} // namespace tatek
