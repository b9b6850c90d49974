#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "rimwalk/character.hpp"
#include "rimwalk/errors.hpp"
#include "rimwalk/identities.hpp"
#include "rimwalk/partition.hpp"
#include "rimwalk/serialize.hpp"
#include "rimwalk/strip.hpp"
#include "rimwalk/virtual_character.hpp"

namespace rimwalk::cli {

namespace {

using io::Json;

enum class Format { pretty, json, tsv };

/// Thrown for argument problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  Format format = Format::pretty;
  int jobs = 1;
};

void add_common(CLI::App* sub, Common& c) {
  const std::map<std::string, Format> formats{
      {"pretty", Format::pretty}, {"json", Format::json}, {"tsv", Format::tsv}};
  sub->add_option("--format", c.format, "Output format: pretty, json or tsv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--jobs", c.jobs, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
}

Partition parse_shape(const std::string& text, const char* what) {
  try {
    return parse_partition(text);
  } catch (const InvalidPartition& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

// Cycle types may be given in any order.
Partition parse_class(const std::string& text, const char* what) {
  try {
    return parse_partition(text, /*sort_parts=*/true);
  } catch (const InvalidPartition& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string signed_str(int sign) { return sign > 0 ? "+" : "-"; }

std::string strip_line(const BorderStrip& s) {
  std::ostringstream os;
  os << s.outer().to_string() << "  height " << s.height() << "  width "
     << s.width();
  return os.str();
}

// ---------------------------------------------------------------- commands

int cmd_partitions(const std::string& n_text, const Common& c,
                   std::ostream& out) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(n_text, &used);
    if (used != n_text.size()) throw std::invalid_argument(n_text);
  } catch (const std::exception&) {
    throw UsageError("partitions: N must be an integer, got '" + n_text + "'");
  }
  if (n < 0) throw UsageError("partitions: N must be >= 0");
  const auto parts = enumerate_partitions(n);
  if (c.format == Format::json) {
    Json arr = Json::array();
    for (const auto& p : parts) arr.push_back(io::to_json(p));
    emit(out, arr);
  } else if (c.format == Format::tsv) {
    for (const auto& p : parts) {
      for (int i = 0; i < p.length(); ++i) out << (i ? "\t" : "") << p.part(i);
      out << '\n';
    }
  } else {
    for (const auto& p : parts) out << io::to_json(p).dump() << '\n';
  }
  return kOk;
}

int cmd_char(const std::string& lambda_text, const std::string& mu_text,
             const Common& c, std::ostream& out) {
  const Partition lambda = parse_shape(lambda_text, "--lambda");
  const Partition mu = parse_class(mu_text, "--mu");
  if (lambda.size() != mu.size())
    throw UsageError("char: |lambda| = " + std::to_string(lambda.size()) +
                     " but |mu| = " + std::to_string(mu.size()));
  const BigInt v = mn_character(lambda, mu);
  if (c.format == Format::json) {
    Json j;
    j["lambda"] = io::to_json(lambda);
    j["mu"] = io::to_json(mu);
    j["value"] = io::to_json(v);
    emit(out, j);
  } else {
    out << v << '\n';
  }
  return kOk;
}

int cmd_table(int k, const Common& c, std::ostream& out) {
  if (k < 0) throw UsageError("table: K must be >= 0");
  const auto table = character_table(k, default_evaluator(), c.jobs);
  if (c.format == Format::json) {
    Json j = io::to_json(table);
    j["orthogonality"] = verify_column_orthogonality(table).pass() ? "pass" : "fail";
    emit(out, j);
  } else if (c.format == Format::tsv) {
    io::write_tsv(out, table);
  } else {
    std::size_t w = 1;
    for (const auto& p : table.order) w = std::max(w, p.to_string().size());
    for (const auto& row : table.entries)
      for (const auto& v : row) w = std::max(w, v.str().size());
    auto cell = [&](const std::string& s) {
      out << std::string(w + 1 - s.size(), ' ') << s;
    };
    cell("");
    for (const auto& p : table.order) cell(p.to_string());
    out << '\n';
    for (std::size_t r = 0; r < table.dim(); ++r) {
      cell(table.order[r].to_string());
      for (const auto& v : table.entries[r]) cell(v.str());
      out << '\n';
    }
  }
  return kOk;
}

int cmd_psi(const std::string& nu_text, int n,
            const std::optional<std::string>& mu_text, const Common& c,
            std::ostream& out, std::ostream& err) {
  const Partition nu = parse_shape(nu_text, "--nu");
  const int k = nu.size();
  if (n < k + 1) throw UsageError("psi: requires n >= |nu|+1");
  const auto psi = build_psi(nu, n, /*allow_irregular=*/true);
  if (!in_theorem_range(k, n)) {
    err << "warning: n = " << n << " is below 2k+2 = " << 2 * k + 2
        << "; the theorem does not apply";
    if (!psi.regular) err << "; ambiguity flagged: strip heights are not 1.." << n - k;
    err << '\n';
  }
  if (mu_text) {
    const Partition mu = parse_class(*mu_text, "--mu");
    if (mu.size() != n)
      throw UsageError("psi: |mu| must equal n = " + std::to_string(n));
    const BigInt v = eval_virtual(psi, mu);
    if (c.format == Format::json) {
      Json j;
      j["nu"] = io::to_json(nu);
      j["n"] = n;
      j["mu"] = io::to_json(mu);
      j["value"] = io::to_json(v);
      j["theorem"] = io::to_json(theorem_rhs(nu, n, mu));
      emit(out, j);
    } else {
      out << v << '\n';
    }
    return kOk;
  }
  if (c.format == Format::json) {
    emit(out, io::to_json(psi));
  } else {
    for (const auto& t : psi.terms) {
      out << signed_str(t.sign) << (c.format == Format::tsv ? "\t" : " ")
          << (c.format == Format::tsv ? format_partition(t.shape)
                                      : t.shape.to_string());
      out << (c.format == Format::tsv ? "\t" : "  height ") << t.height << '\n';
    }
  }
  return kOk;
}

int cmd_going_around(const std::string& nu_text, int n, const Common& c,
                     std::ostream& out, std::ostream& err) {
  const Partition nu = parse_shape(nu_text, "--nu");
  if (n < nu.size() + 1) throw UsageError("going-around: requires n >= |nu|+1");
  const auto g = going_around(nu, n);
  if (!g.regular)
    err << "warning: strip heights are not 1.." << n - nu.size()
        << (g.ambiguous ? " (two strips share a height)" : "") << '\n';
  if (c.format == Format::json) {
    Json j;
    j["nu"] = io::to_json(nu);
    j["n"] = n;
    j["regular"] = g.regular;
    j["ambiguous"] = g.ambiguous;
    Json strips = Json::array();
    for (const auto& s : g.strips) strips.push_back(io::to_json(s));
    j["strips"] = std::move(strips);
    emit(out, j);
  } else if (c.format == Format::tsv) {
    for (const auto& s : g.strips)
      out << format_partition(s.outer()) << '\t' << s.height() << '\t'
          << s.length() << '\n';
  } else {
    for (const auto& s : g.strips) out << strip_line(s) << '\n';
  }
  return kOk;
}

void print_report_pretty(std::ostream& out, const VerificationReport& r) {
  out << r.target << " k=" << r.k << " n=" << r.n << ": " << r.checked
      << " checked, " << r.mismatches.size() << " mismatches"
      << (r.pass() ? "  PASS" : "  FAIL") << '\n';
  for (const auto& m : r.mismatches)
    out << "  [" << m.check << "] nu=" << m.nu.to_string()
        << " mu=" << m.mu.to_string() << " lhs=" << m.lhs << " rhs=" << m.rhs
        << '\n';
}

int cmd_verify(const std::string& target, std::optional<int> k,
               std::optional<int> n, std::optional<int> n_max, const Common& c,
               std::ostream& out, std::ostream& err) {
  if (target == "identities") {
    const int hi = n_max.value_or(n.value_or(20));
    if (hi < 4) throw UsageError("verify identities: requires --n-max >= 4");
    const auto checks = verify_identities(hi);
    bool pass = true;
    for (const auto& ch : checks) pass = pass && ch.pass();
    if (c.format == Format::json) {
      Json j;
      j["n_max"] = hi;
      Json arr = Json::array();
      for (const auto& ch : checks) arr.push_back(io::to_json(ch));
      j["checks"] = std::move(arr);
      j["pass"] = pass;
      emit(out, j);
    } else {
      std::map<std::string, std::pair<int, int>> tally;
      for (const auto& ch : checks) {
        auto& t = tally[ch.name];
        ++t.first;
        if (!ch.pass()) {
          ++t.second;
          out << "FAIL " << ch.name << ' ' << ch.subject << ": " << ch.lhs
              << " != " << ch.rhs << '\n';
        }
      }
      for (const auto& [name, t] : tally)
        out << name << ": " << t.first << " checked, " << t.second
            << " failed\n";
    }
    return pass ? kOk : kMismatch;
  }

  if (!k) throw UsageError("verify " + target + ": --k is required");
  if (*k < 0) throw UsageError("verify: --k must be >= 0");

  if (target == "orthogonality") {
    const auto table = character_table(*k, default_evaluator(), c.jobs);
    const auto rep = verify_column_orthogonality(table);
    if (c.format == Format::json) {
      emit(out, io::to_json(rep));
    } else {
      out << "orthogonality k=" << *k << ": max deviation " << rep.max_deviation
          << (rep.pass() ? "  PASS" : "  FAIL") << '\n';
    }
    return rep.pass() ? kOk : kMismatch;
  }

  std::function<VerificationReport(int)> run_one;
  const VerifyOptions opts{c.jobs, nullptr};
  if (target == "theorem") {
    run_one = [&](int nn) { return verify_theorem(*k, nn, opts); };
  } else if (target == "decomposition") {
    run_one = [&](int nn) { return verify_decomposition_identity(*k, nn, opts); };
  } else if (target == "matrix") {
    run_one = [&](int nn) { return verify_matrix_identity(*k, nn, opts); };
  } else if (target == "centralizer") {
    run_one = [&](int nn) { return verify_centralizer_split_report(*k, nn); };
  } else {
    throw UsageError("verify: unknown target '" + target + "'");
  }

  int lo = 0;
  int hi = 0;
  if (n) {
    lo = hi = *n;
  } else if (n_max) {
    lo = 2 * *k + 2;
    hi = *n_max;
  } else {
    throw UsageError("verify " + target + ": --n or --n-max is required");
  }
  if (lo < 2 * *k + 2 || hi < lo)
    throw UsageError("verify " + target + ": requires n >= 2k+2 = " +
                     std::to_string(2 * *k + 2));

  std::vector<VerificationReport> reports;
  for (int nn = lo; nn <= hi; ++nn) {
    if (hi > lo) err << "verify " << target << ": k=" << *k << " n=" << nn << '\n';
    reports.push_back(run_one(nn));
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (c.format == Format::json) {
    if (reports.size() == 1) {
      emit(out, io::to_json(reports.front()));
    } else {
      Json j;
      j["target"] = target;
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(io::to_json(r));
      j["reports"] = std::move(arr);
      j["pass"] = pass;
      emit(out, j);
    }
  } else if (c.format == Format::tsv) {
    for (const auto& r : reports)
      out << r.target << '\t' << r.k << '\t' << r.n << '\t' << r.checked << '\t'
          << r.mismatches.size() << '\n';
  } else {
    for (const auto& r : reports) print_report_pretty(out, r);
  }
  return pass ? kOk : kMismatch;
}

int cmd_conjectures(int lo, int hi, const Common& c, std::ostream& out) {
  if (lo < 4) throw UsageError("conjectures: requires --n-min >= 4");
  if (hi < lo) throw UsageError("conjectures: empty range");
  const auto rows = check_conjectures(lo, hi, c.jobs);
  bool consistent = true;
  for (const auto& row : rows) {
    consistent = consistent && row.consistent();
    if (c.format == Format::pretty) {
      out << "n=" << row.n << "  (t+1)^" << row.multiplicity << " * ("
          << row.quotient.to_string() << ")  q(-1)=" << row.q_at_minus1
          << (row.positive ? "  positive" : "  NOT-positive")
          << (row.unimodal ? "  unimodal" : "  NOT-unimodal")
          << (row.palindromic ? "  palindromic" : "")
          << (row.consistent() ? "" : "  VIOLATION") << '\n';
    } else if (c.format == Format::tsv) {
      out << row.n << '\t' << row.multiplicity << '\t' << row.q_at_minus1
          << '\t' << row.positive << '\t' << row.unimodal << '\t'
          << row.palindromic << '\n';
    } else {
      emit(out, io::to_json(row));
    }
  }
  return consistent ? kOk : kMismatch;
}

int cmd_poly(const std::string& nu_text, int n, const Common& c,
             std::ostream& out) {
  const Partition nu = parse_shape(nu_text, "--nu");
  if (!in_theorem_range(nu.size(), n))
    throw UsageError("poly: requires n >= 2k+2 = " +
                     std::to_string(2 * nu.size() + 2));
  const IntPolynomial p = poly_p(nu, n);
  const IntPolynomial table = p.divide_by_t_power(1);
  const auto factored = unit_root_multiplicity(table);
  if (c.format == Format::json) {
    Json j;
    j["nu"] = io::to_json(nu);
    j["n"] = n;
    j["p"] = io::to_json(p);
    j["p_over_t"] = io::to_json(table);
    j["multiplicity"] = factored.multiplicity;
    j["quotient"] = io::to_json(factored.quotient);
    j["value_at_minus1"] = io::to_json(p(-1));
    emit(out, j);
  } else if (c.format == Format::tsv) {
    for (int i = 0; i <= p.degree(); ++i)
      out << i << '\t' << p.coefficient(i) << '\n';
  } else {
    out << "p(t)   = " << p.to_string() << '\n';
    out << "p(t)/t = " << table.to_string() << '\n';
    out << "       = (t+1)^" << factored.multiplicity << " * ("
        << factored.quotient.to_string() << ")\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rim hooks, going around a partition, and virtual characters of S_n"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;

  std::string n_text;
  auto* partitions = app.add_subcommand("partitions", "List the partitions of N");
  partitions->add_option("N", n_text, "Size")->required();
  add_common(partitions, common);

  std::string lambda_text;
  std::string mu_text;
  auto* chr = app.add_subcommand("char", "Character value chi^lambda_mu");
  chr->add_option("--lambda", lambda_text, "Shape, e.g. 2,1")->required();
  chr->add_option("--mu", mu_text, "Cycle type, e.g. 3")->required();
  add_common(chr, common);

  int k_positional = 0;
  auto* table = app.add_subcommand("table", "Character table of S_K");
  table->add_option("K", k_positional, "Size")->required();
  add_common(table, common);

  std::string nu_text;
  int n = 0;
  std::optional<std::string> mu_opt;
  auto* psi = app.add_subcommand("psi", "The virtual character psi_{nu,n}");
  psi->add_option("--nu", nu_text, "Inner shape; 'empty' for the empty partition")
      ->required();
  psi->add_option("--n", n, "Size of S_n")->required();
  psi->add_option("--mu", mu_opt, "Evaluate on this cycle type");
  add_common(psi, common);

  auto* around = app.add_subcommand("going-around", "Strips of going around nu");
  around->add_option("--nu", nu_text, "Inner shape")->required();
  around->add_option("--n", n, "Target size")->required();
  add_common(around, common);

  std::string target;
  std::optional<int> k_opt;
  std::optional<int> n_opt;
  std::optional<int> n_max_opt;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification");
  verify
      ->add_option("target", target,
                   "theorem, decomposition, matrix, orthogonality, "
                   "centralizer or identities")
      ->required()
      ->check(CLI::IsMember({"theorem", "decomposition", "matrix",
                             "orthogonality", "centralizer", "identities"}));
  verify->add_option("--k", k_opt, "Size of nu");
  verify->add_option("--n", n_opt, "Size of S_n");
  verify->add_option("--n-max", n_max_opt, "Sweep n from 2k+2 (or 4) to this");
  add_common(verify, common);

  int n_min = 4;
  int n_max = 24;
  auto* conj = app.add_subcommand("conjectures",
                                  "(t+1)-divisibility scan for nu = (1)");
  conj->add_option("--n-min", n_min, "First n (>= 4)");
  conj->add_option("--n-max", n_max, "Last n");
  add_common(conj, common);

  auto* poly = app.add_subcommand("poly", "Dimension polynomial p_{nu,n}(t)");
  poly->add_option("--nu", nu_text, "Inner shape")->required();
  poly->add_option("--n", n, "Size")->required();
  add_common(poly, common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "usage: rimwalk <partitions|char|table|psi|going-around|verify|"
           "conjectures|poly> [options]  (--help for details)\n";
    return kUsage;
  }

  // Only the conjecture scan writes JSON lines; it is also its default.
  if (conj->parsed() && conj->count("--format") == 0)
    common.format = Format::json;

  try {
    if (partitions->parsed()) return cmd_partitions(n_text, common, out);
    if (chr->parsed()) return cmd_char(lambda_text, mu_text, common, out);
    if (table->parsed()) return cmd_table(k_positional, common, out);
    if (psi->parsed()) return cmd_psi(nu_text, n, mu_opt, common, out, err);
    if (around->parsed()) return cmd_going_around(nu_text, n, common, out, err);
    if (verify->parsed())
      return cmd_verify(target, k_opt, n_opt, n_max_opt, common, out, err);
    if (conj->parsed()) return cmd_conjectures(n_min, n_max, common, out);
    if (poly->parsed()) return cmd_poly(nu_text, n, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rimwalk::cli
