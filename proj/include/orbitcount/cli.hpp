#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with captured streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input-format error (unreadable or malformed data, unrealizable input).

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asymptotics.hpp"
#include "bfile.hpp"
#include "builtins.hpp"
#include "factor_search.hpp"
#include "identities.hpp"
#include "operators.hpp"
#include "transforms.hpp"

namespace orbitcount::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kUsage = 2, kInputFormat = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline PrimeSet parse_prime_set(std::string text) {
  bool cofinite = false;
  if (text.rfind("co:", 0) == 0) {
    cofinite = true;
    text = text.substr(3);
  }
  std::set<Index> primes;
  if (!text.empty() && text != "none") {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad prime list '" + text + "'");
      const Index p = std::stoull(item);
      if (!is_prime(p)) throw UsageError(item + " is not prime");
      primes.insert(p);
    }
  }
  return cofinite ? PrimeSet::cofinite(std::move(primes)) : PrimeSet::finite(std::move(primes));
}

inline BuiltinSpec parse_builtin(const std::string& name, const std::vector<std::string>& params) {
  const BuiltinInfo* info = find_builtin(name);
  if (info == nullptr) throw UsageError("unknown builtin sequence '" + name + "'");
  BuiltinSpec spec{name, {}};
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    const auto it = std::find_if(info->params.begin(), info->params.end(), [&](const auto& p) { return p.first == key; });
    if (it == info->params.end()) throw UsageError(name + " takes no parameter '" + key + "'");
    if (it->second == ParamKind::Primes) {
      spec.params[key] = parse_prime_set(value);
    } else {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) throw UsageError("parameter '" + key + "' must be an integer");
      spec.params[key] = v;
    }
  }
  return spec;
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BFile load_bfile(const std::string& path) {
  try {
    return parse_bfile(read_input(path));
  } catch (const FormatError& e) {
    throw FormatError(0, path + ": " + e.what());
  }
}

inline Sequence load_sequence(const std::string& path, View view) {
  const BFile file = load_bfile(path);
  try {
    return from_bfile(file, view);
  } catch (const ArgumentError& e) {
    throw FormatError(0, path + ": " + e.what());
  }
}

inline Sequence require_terms(const Sequence& s, Index terms, const std::string& what) {
  if (terms > s.size())
    throw FormatError(0, what + " has " + std::to_string(s.size()) + " terms, " + std::to_string(terms) + " needed");
  return s.slice(terms);
}

inline View view_option(const std::string& text) {
  auto v = parse_view(text);
  if (!v) throw UsageError("unknown view '" + text + "'");
  return *v;
}

inline void print_pair_line(std::ostream& out, const char* label, const Sequence& s) {
  out << label;
  for (Index n = 1; n <= s.size(); ++n) out << ' ' << s[n].str();
  out << '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit-counting transforms on integer sequences", "orbitcount"};
  app.require_subcommand(1);

  // seq
  auto* seq_cmd = app.add_subcommand("seq", "print a builtin sequence as a b-file");
  std::string seq_name, seq_view;
  std::vector<std::string> seq_params;
  Index seq_terms = 0;
  seq_cmd->add_option("name", seq_name, "builtin name")->required();
  seq_cmd->add_option("--param", seq_params, "builtin parameter key=value (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  seq_cmd->add_option("--terms", seq_terms, "number of terms")->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("--view", seq_view, "orbit|fix|monoid|plain (default: the builtin's own view)");
  auto* list_cmd = app.add_subcommand("list", "list builtin sequences");

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "apply a view transform to a b-file");
  std::string transform_kind, transform_in;
  transform_cmd->add_option("kind", transform_kind, "fix-to-orbit|orbit-to-fix|euler|euler-inv")
      ->required()
      ->check(CLI::IsMember({"fix-to-orbit", "orbit-to-fix", "euler", "euler-inv"}));
  transform_cmd->add_option("--in", transform_in, "input b-file ('-' for stdin)")->required();

  // op
  auto* op_cmd = app.add_subcommand("op", "apply a product, union or iterate operator");
  std::string op_kind, op_view = "orbit";
  std::vector<std::string> op_inputs;
  Index op_k = 1, op_terms = 0;
  op_cmd->add_option("kind", op_kind, "product|union|iterate")
      ->required()
      ->check(CLI::IsMember({"product", "union", "iterate"}));
  op_cmd->add_option("--in", op_inputs, "input b-file(s)")->required()->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  op_cmd->add_option("--k", op_k, "iterate power")->check(CLI::PositiveNumber);
  op_cmd->add_option("--terms", op_terms, "number of output terms")->required()->check(CLI::PositiveNumber);
  op_cmd->add_option("--view", op_view, "orbit (default) or fix")->check(CLI::IsMember({"orbit", "fix"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a named identity (or 'all')");
  std::string verify_name;
  Index verify_terms = 0;
  bool verify_list = false;
  verify_cmd->add_option("identity", verify_name, "identity name, or 'all'");
  verify_cmd->add_option("--terms", verify_terms, "horizon N (default per identity)")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--list", verify_list, "list identity names");

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "orbit growth report for a builtin");
  growth_cmd->set_help_flag("--help", "print this help message and exit");  // frees --h for the rate
  std::string growth_name;
  std::vector<std::string> growth_params;
  double growth_h = 0, growth_c1 = 0;
  Index growth_terms = 0;
  growth_cmd->add_option("--name", growth_name, "builtin name")->required();
  growth_cmd->add_option("--param", growth_params, "builtin parameter key=value (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  growth_cmd->add_option("--h", growth_h, "growth rate h > 0")->required();
  growth_cmd->add_option("--c1", growth_c1, "leading coefficient C1 > 0")->required();
  growth_cmd->add_option("--terms", growth_terms, "horizon N")->required()->check(CLI::PositiveNumber);

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "find all product factorizations of an orbit sequence");
  std::string factor_in;
  Index factor_terms = 0;
  std::size_t factor_limit = kDefaultFactorLimit;
  factor_cmd->add_option("--in", factor_in, "target b-file")->required();
  factor_cmd->add_option("--terms", factor_terms, "truncation N")->required()->check(CLI::PositiveNumber);
  factor_cmd->add_option("--limit", factor_limit, "maximum number of pairs")->check(CLI::PositiveNumber);

  // export / import
  auto* export_cmd = app.add_subcommand("export", "renumber an internal b-file to start at --offset");
  std::string export_in;
  std::int64_t export_offset = 1;
  export_cmd->add_option("--in", export_in, "internal b-file")->required();
  export_cmd->add_option("--offset", export_offset, "index of the first term");
  auto* import_cmd = app.add_subcommand("import", "renumber an OEIS b-file to start at 1");
  std::string import_in;
  import_cmd->add_option("--in", import_in, "OEIS b-file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "orbitcount: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (seq_cmd->parsed()) {
      const auto spec = detail::parse_builtin(seq_name, seq_params);
      Sequence s = builtin(spec, seq_terms);
      if (!seq_view.empty()) s = convert_view(s, detail::view_option(seq_view));
      out << emit_bfile(to_bfile(s));
      return kSuccess;
    }

    if (list_cmd->parsed()) {
      for (const auto& info : builtin_catalogue()) {
        out << info.name << " [" << view_name(info.view) << "]";
        for (const auto& [key, kind] : info.params) out << ' ' << key << (kind == ParamKind::Primes ? "=<primes>" : "=<int>");
        out << "  " << info.summary << '\n';
      }
      return kSuccess;
    }

    if (transform_cmd->parsed()) {
      Sequence result = [&] {
        if (transform_kind == "fix-to-orbit") return fix_to_orbit(detail::load_sequence(transform_in, View::Fix));
        if (transform_kind == "orbit-to-fix") return orbit_to_fix(detail::load_sequence(transform_in, View::Orbit));
        if (transform_kind == "euler") return euler(detail::load_sequence(transform_in, View::Orbit));
        return euler_inverse(detail::load_sequence(transform_in, View::Monoid));
      }();
      out << emit_bfile(to_bfile(result));
      return kSuccess;
    }

    if (op_cmd->parsed()) {
      const View view = detail::view_option(op_view);
      const bool binary = op_kind != "iterate";
      if (op_inputs.size() != (binary ? 2u : 1u))
        throw UsageError(op_kind + " takes exactly " + std::string(binary ? "two" : "one") + " --in file(s)");
      if (op_kind == "union" && view != View::Orbit) throw UsageError("union is defined on orbit counts only");
      Sequence result = [&] {
        if (binary) {
          const auto a = detail::require_terms(detail::load_sequence(op_inputs[0], view), op_terms, op_inputs[0]);
          const auto b = detail::require_terms(detail::load_sequence(op_inputs[1], view), op_terms, op_inputs[1]);
          if (op_kind == "union") return union_orbits(a, b);
          return view == View::Orbit ? product_orbits(a, b) : product_fix(a, b);
        }
        const auto a = detail::require_terms(detail::load_sequence(op_inputs[0], view), op_k * op_terms, op_inputs[0]);
        return view == View::Orbit ? iterate_orbits(a, op_k, op_terms) : iterate_fix(a, op_k, op_terms);
      }();
      out << emit_bfile(to_bfile(result));
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      if (verify_list) {
        for (const auto& id : identities()) out << id.name << "  " << id.summary << '\n';
        return kSuccess;
      }
      if (verify_name.empty()) throw UsageError("verify needs an identity name, 'all', or --list");
      std::vector<const Identity*> selected;
      if (verify_name == "all") {
        for (const auto& id : identities()) selected.push_back(&id);
      } else if (const Identity* id = find_identity(verify_name)) {
        selected.push_back(id);
      } else {
        throw UsageError("unknown identity '" + verify_name + "' (see verify --list)");
      }
      bool all_pass = true;
      for (const Identity* id : selected) {
        const Index terms = verify_terms != 0 && selected.size() == 1 ? verify_terms : id->default_terms;
        const CheckResult result = id->check(terms);
        if (result.pass) {
          out << "PASS " << id->name << " (N=" << terms << ")\n";
          continue;
        }
        all_pass = false;
        out << "FAIL " << id->name << " (N=" << terms << ")";
        if (result.first_failure != 0) out << " at n=" << result.first_failure;
        if (!result.detail.empty()) out << ": " << result.detail;
        out << '\n';
        err << "orbitcount: identity " << id->name << " failed";
        if (result.first_failure != 0) err << " at n=" << result.first_failure;
        err << '\n';
      }
      return all_pass ? kSuccess : kVerifyFailed;
    }

    if (growth_cmd->parsed()) {
      if (!(growth_h > 0) || !std::isfinite(growth_h)) throw UsageError("--h must be a positive number");
      if (!(growth_c1 > 0) || !std::isfinite(growth_c1)) throw UsageError("--c1 must be a positive number");
      const auto spec = detail::parse_builtin(growth_name, growth_params);
      const Sequence native = builtin(spec, growth_terms);
      if (native.view() == View::Plain) throw UsageError(growth_name + " is not an orbit-counting sequence");
      const Sequence fix = convert_view(native, View::Fix);
      const double estimate = entropy_estimate(fix, growth_terms);
      // Exponential growth at rate h is a precondition of the report.
      if (estimate < growth_h / 2)
        throw UsageError(growth_name + " grows at rate about " + std::to_string(estimate) +
                         " by term " + std::to_string(growth_terms) + ", too slow for h = " + std::to_string(growth_h));
      const auto report = pnt_report(convert_view(native, View::Orbit), growth_h, growth_c1, growth_terms);
      out << std::setprecision(12);
      out << "N " << report.horizon << '\n'
          << "h " << report.entropy << '\n'
          << "C1 " << report.leading_coeff << '\n'
          << "h_estimate " << estimate << '\n'
          << "pi_actual " << report.pi_actual.str() << '\n'
          << "pi_predicted " << report.pi_predicted << '\n'
          << "pi_ratio " << report.pi_actual.convert_to<double>() / report.pi_predicted << '\n'
          << "mertens_actual " << report.mertens_actual << '\n'
          << "mertens_minus_C1harmonic " << report.mertens_minus_harmonic << '\n';
      return kSuccess;
    }

    if (factor_cmd->parsed()) {
      const auto target =
          detail::require_terms(detail::load_sequence(factor_in, View::Orbit), factor_terms, factor_in);
      if (target[1] < 1) throw FormatError(0, factor_in + ": first term must be at least 1");
      const auto found = factor_search(target, factor_terms, factor_limit);
      out << "# pairs " << found.pairs.size() << (found.overflow ? " (limit reached)" : "") << '\n';
      for (std::size_t i = 0; i < found.pairs.size(); ++i) {
        out << "pair " << i + 1 << '\n';
        detail::print_pair_line(out, "left", found.pairs[i].left);
        detail::print_pair_line(out, "right", found.pairs[i].right);
      }
      return kSuccess;
    }

    if (export_cmd->parsed()) {
      BFile file = detail::load_bfile(export_in);
      file.offset = export_offset;
      out << emit_bfile(file);
      return kSuccess;
    }

    if (import_cmd->parsed()) {
      BFile file = detail::load_bfile(import_in);
      file.offset = 1;
      out << emit_bfile(file);
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "orbitcount: " << e.what() << '\n';
    return kUsage;
  } catch (const RealizabilityError& e) {
    err << "orbitcount: input is not realizable: " << e.what() << " (index " << e.index() << ")\n";
    return kInputFormat;
  } catch (const FormatError& e) {
    err << "orbitcount: " << e.what() << '\n';
    return kInputFormat;
  } catch (const ZetaIntegralityError& e) {
    err << "orbitcount: " << e.what() << " (index " << e.index() << ")\n";
    return kInputFormat;
  } catch (const TruncationError& e) {
    err << "orbitcount: " << e.what() << '\n';
    return kInputFormat;
  } catch (const Error& e) {
    err << "orbitcount: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace orbitcount::cli
