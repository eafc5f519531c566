// liespec: spectral tables, square-counting backends, regularity exponents
// and time-side verification suites behind one deterministic CLI.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <liespec/errors.hpp>
#include <liespec/exponents.hpp>
#include <liespec/fourier.hpp>
#include <liespec/root_system.hpp>
#include <liespec/spectrum.hpp>
#include <liespec/sum_of_squares.hpp>
#include <liespec/version.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using liespec::Rat;

using ConfigMap = std::map<std::string, std::string>;  // sorted by key

std::string provenance_line(const std::string& command, const ConfigMap& config) {
  std::ostringstream out;
  out << "# liespec " << liespec::kVersion << " | " << command << " |";
  for (const auto& [key, value] : config) {
    out << " " << key << "=" << value;
  }
  out << "\n";
  return out.str();
}

nlohmann::ordered_json meta_json(const std::string& command, const ConfigMap& config) {
  nlohmann::ordered_json meta;
  meta["tool"] = "liespec";
  meta["version"] = liespec::kVersion;
  meta["command"] = command;
  nlohmann::ordered_json cfg;
  for (const auto& [key, value] : config) {
    cfg[key] = value;
  }
  meta["config"] = std::move(cfg);
  return meta;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw liespec::InvalidArgument("cannot open output path '" + path + "'");
  }
  file << payload;
}

std::string json_payload(const std::string& command, const ConfigMap& config,
                         nlohmann::ordered_json data) {
  nlohmann::ordered_json root;
  root["meta"] = meta_json(command, config);
  root["data"] = std::move(data);
  return root.dump(2) + "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) {
      out.push_back(token);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// table1
// ---------------------------------------------------------------------------

struct Table1Options {
  std::string format = "csv";
  std::string output = "-";
};

int run_table1(const Table1Options& opt) {
  // Re-derive every constant from the root data before printing; the table
  // is only emitted when the derivation agrees with the closed forms.
  std::vector<liespec::GroupFamily> grid;
  for (int l = 1; l <= 6; ++l) grid.emplace_back(liespec::FamilyLabel::A, l);
  for (int l = 2; l <= 6; ++l) grid.emplace_back(liespec::FamilyLabel::B, l);
  for (int l = 3; l <= 6; ++l) grid.emplace_back(liespec::FamilyLabel::C, l);
  for (int l = 4; l <= 6; ++l) grid.emplace_back(liespec::FamilyLabel::D, l);
  grid.emplace_back(liespec::FamilyLabel::E8, 8);
  grid.emplace_back(liespec::FamilyLabel::F4, 4);
  grid.emplace_back(liespec::FamilyLabel::G2, 2);
  for (const auto& fam : grid) {
    const liespec::RootSystem rs = liespec::build_root_system(fam);
    if (rs.b_table != liespec::closed_form_b(fam) || rs.r0 != liespec::closed_form_r0(fam)) {
      std::cerr << "[FAIL] derived (b, R0) for " << fam.name()
                << " disagree with the closed forms\n";
      return 1;
    }
  }

  struct Row {
    const char* family;
    const char* b;
    const char* r0;
  };
  const std::vector<Row> rows = {
      {"A_l", "2(l+1)^3", "(l+1)^2*sum_{k=1}^{l+1}(l-2(k-1))^2/4"},
      {"B_l", "16l-8", "sum_{k=1}^{l}(2(l-k)+1)^2"},
      {"C_l", "4(l+1)", "l(l+1)(2l+1)/6"},
      {"D_l", "16l-16", "sum_{k=1}^{l}(2(l-k))^2"},
      {"E8", "240", "2480"},
      {"F4", "72", "156"},
      {"G2", "24", "14"},
  };

  const ConfigMap config{{"format", opt.format}};
  if (opt.format == "csv") {
    std::ostringstream out;
    out << provenance_line("table1", config);
    out << "family,b,R0\n";
    for (const auto& row : rows) {
      out << row.family << "," << row.b << "," << row.r0 << "\n";
    }
    write_output(opt.output, out.str());
  } else {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json r;
      r["family"] = row.family;
      r["b"] = row.b;
      r["R0"] = row.r0;
      data.push_back(std::move(r));
    }
    write_output(opt.output, json_payload("table1", config, std::move(data)));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumOptions {
  std::string family;
  long long rmax = 0;
  int threads = 1;
  unsigned long long cell_budget = 500'000'000ULL;
  std::string format = "csv";
  std::string output = "-";
};

int run_spectrum(const SpectrumOptions& opt) {
  const auto family = liespec::GroupFamily::parse(opt.family);
  const liespec::RootSystem rs = liespec::build_root_system(family);
  liespec::EnumerationOptions enum_opts;
  enum_opts.threads = opt.threads;
  enum_opts.cell_budget = opt.cell_budget;
  const liespec::SpectrumTable table = liespec::enumerate_spectrum(rs, opt.rmax, enum_opts);

  const ConfigMap config{{"cell_budget", std::to_string(opt.cell_budget)},
                         {"family", family.name()},
                         {"format", opt.format},
                         {"rmax", std::to_string(opt.rmax)},
                         {"threads", std::to_string(opt.threads)}};
  if (opt.format == "csv") {
    write_output(opt.output, provenance_line("spectrum", config) + liespec::to_csv(table));
  } else {
    write_output(opt.output, json_payload("spectrum", config, liespec::to_json(table)));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// count: multiplicities against the square-count bound
// ---------------------------------------------------------------------------

struct CountOptions {
  std::string family;
  long long rmax = 0;
  int threads = 1;
  unsigned long long cell_budget = 500'000'000ULL;
  std::string format = "csv";
  std::string output = "-";
};

int run_count(const CountOptions& opt) {
  const auto family = liespec::GroupFamily::parse(opt.family);
  const liespec::RootSystem rs = liespec::build_root_system(family);
  liespec::EnumerationOptions enum_opts;
  enum_opts.threads = opt.threads;
  enum_opts.cell_budget = opt.cell_budget;
  enum_opts.with_dimensions = false;
  const liespec::SpectrumTable table = liespec::enumerate_spectrum(rs, opt.rmax, enum_opts);
  const liespec::RepCountTable bound =
      liespec::count_theta(rs.m_spec(), opt.rmax + rs.r0, liespec::CountVariant::AllIntegers);

  bool ok = true;
  for (const auto& rec : table.records) {
    if (bound.counts[rec.R + rs.r0] < static_cast<long>(rec.count())) {
      std::cerr << "[FAIL] N_R exceeds the square-count bound at R = " << rec.R << "\n";
      ok = false;
    }
  }

  const ConfigMap config{{"cell_budget", std::to_string(opt.cell_budget)},
                         {"family", family.name()},
                         {"format", opt.format},
                         {"rmax", std::to_string(opt.rmax)},
                         {"threads", std::to_string(opt.threads)}};
  if (opt.format == "csv") {
    std::ostringstream out;
    out << provenance_line("count", config);
    out << "family,rank,R,N_R,r_bound\n";
    for (const auto& rec : table.records) {
      out << family.label_name() << "," << family.rank() << "," << rec.R << "," << rec.count()
          << "," << bound.counts[rec.R + rs.r0].get_str() << "\n";
    }
    write_output(opt.output, out.str());
  } else {
    nlohmann::ordered_json data;
    data["family"] = family.label_name();
    data["rank"] = family.rank();
    data["R_max"] = opt.rmax;
    data["R0"] = rs.r0;
    data["m"] = rs.m_spec();
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& rec : table.records) {
      nlohmann::ordered_json r;
      r["R"] = rec.R;
      r["N_R"] = rec.count();
      r["r_bound"] = bound.counts[rec.R + rs.r0].get_str();
      records.push_back(std::move(r));
    }
    data["records"] = std::move(records);
    write_output(opt.output, json_payload("count", config, std::move(data)));
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// rsk
// ---------------------------------------------------------------------------

struct RskOptions {
  int s = 0;
  long long rmax = 0;
  std::string variant = "all";
  std::string backend = "theta";
  bool cross_check = false;
  int threads = 1;
  long long product_budget = 48'000;
  double point_budget = 4e9;
  std::string format = "csv";
  std::string output = "-";
};

int run_rsk(const RskOptions& opt) {
  const liespec::CountVariant variant = [&] {
    if (opt.variant == "all") return liespec::CountVariant::AllIntegers;
    if (opt.variant == "positive") return liespec::CountVariant::PositiveOnly;
    throw liespec::InvalidArgument("--variant must be 'all' or 'positive'");
  }();
  liespec::BruteOptions brute_opts;
  brute_opts.threads = opt.threads;
  brute_opts.product_budget = opt.product_budget;
  brute_opts.point_budget = opt.point_budget;

  auto compute = [&](const std::string& name) {
    if (name == "brute") return liespec::count_brute(opt.s, opt.rmax, variant, brute_opts);
    if (name == "theta") return liespec::count_theta(opt.s, opt.rmax, variant);
    if (name == "divisor") {
      if (variant != liespec::CountVariant::AllIntegers) {
        throw liespec::InvalidArgument("--backend divisor supports --variant all only");
      }
      return liespec::count_divisor_formula(opt.s, opt.rmax);
    }
    throw liespec::InvalidArgument("--backend must be 'brute', 'theta' or 'divisor'");
  };

  bool ok = true;
  std::string checked = opt.backend;
  liespec::RepCountTable table{};
  if (!opt.cross_check) {
    table = compute(opt.backend);
  } else {
    table = liespec::count_theta(opt.s, opt.rmax, variant);
    checked = "theta";
    bool brute_applicable = true;
    try {
      const auto brute = liespec::count_brute(opt.s, opt.rmax, variant, brute_opts);
      if (brute.counts != table.counts) {
        std::cerr << "[FAIL] brute and theta disagree\n";
        ok = false;
      }
      checked += ",brute";
    } catch (const liespec::ResourceLimit&) {
      brute_applicable = false;
    }
    if (!brute_applicable) {
      std::cerr << "note: brute backend skipped (budget)\n";
    }
    if ((opt.s == 2 || opt.s == 4) && variant == liespec::CountVariant::AllIntegers) {
      const auto divisor = liespec::count_divisor_formula(opt.s, opt.rmax);
      if (divisor.counts != table.counts) {
        std::cerr << "[FAIL] divisor formula and theta disagree\n";
        ok = false;
      }
      checked += ",divisor";
    }
  }

  const ConfigMap config{{"backend", opt.backend},
                         {"checked", checked},
                         {"cross_check", opt.cross_check ? "true" : "false"},
                         {"format", opt.format},
                         {"point_budget", std::to_string(opt.point_budget)},
                         {"product_budget", std::to_string(opt.product_budget)},
                         {"rmax", std::to_string(opt.rmax)},
                         {"s", std::to_string(opt.s)},
                         {"threads", std::to_string(opt.threads)},
                         {"variant", opt.variant}};
  if (opt.format == "csv") {
    write_output(opt.output, provenance_line("rsk", config) + liespec::to_csv(table));
  } else {
    nlohmann::ordered_json data;
    data["s"] = table.s;
    data["variant"] = liespec::variant_name(table.variant);
    data["backend"] = liespec::backend_name(table.backend);
    data["R_max"] = table.R_max;
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& c : table.counts) {
      counts.push_back(c.get_str());
    }
    data["counts"] = std::move(counts);
    write_output(opt.output, json_payload("rsk", config, std::move(data)));
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// exponents
// ---------------------------------------------------------------------------

struct ExponentsOptions {
  std::string family;
  std::string p_grid = "2,5/2,3,4,10";
  std::string q_grid = "2,3,qstar,10,inf";
  bool classical = false;
  std::string format = "csv";
  std::string output = "-";
};

int run_exponents(const ExponentsOptions& opt) {
  const auto family = liespec::GroupFamily::parse(opt.family);
  const liespec::RootSystem rs = liespec::build_root_system(family);

  std::vector<Rat> p_grid;
  for (const auto& token : split_list(opt.p_grid)) {
    p_grid.push_back(liespec::parse_rational(token));
  }
  std::vector<liespec::LebesgueExponent> q_grid;
  for (const auto& token : split_list(opt.q_grid)) {
    if (token == "qstar") {
      q_grid.push_back(liespec::sigma_breakpoint(rs.group_dim));
    } else {
      q_grid.push_back(liespec::LebesgueExponent::parse(token));
    }
  }
  if (p_grid.empty() || q_grid.empty()) {
    throw liespec::InvalidArgument("empty --p-grid or --q-grid");
  }
  auto profiles = liespec::profile_grid(rs, p_grid, q_grid);
  if (opt.classical) {
    // Classical mixed-norm tables swap the norm order via the Minkowski
    // integral inequality, which needs q <= p.
    std::erase_if(profiles, [](const liespec::ExponentProfile& pr) {
      return !(pr.q <= pr.p);
    });
  }

  const ConfigMap config{{"classical", opt.classical ? "true" : "false"},
                         {"family", family.name()},
                         {"format", opt.format},
                         {"p_grid", opt.p_grid},
                         {"q_grid", opt.q_grid}};
  if (opt.format == "csv") {
    write_output(opt.output, provenance_line("exponents", config) + liespec::to_csv(profiles));
  } else {
    write_output(opt.output, json_payload("exponents", config, liespec::to_json(profiles)));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 12345;
  int samples = 0;      // 0: per-suite default
  double tolerance = 0; // 0: per-suite default
  std::string b_gamma = "24";
  long long gram_rmax = 16;
  std::string output = "-";
};

int run_verify(const VerifyOptions& opt) {
  const Rat b_gamma = liespec::parse_rational(opt.b_gamma);
  std::vector<liespec::SuiteReport> reports;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "orthogonality") {
    reports.push_back(liespec::run_orthogonality_suite(
        b_gamma, opt.gram_rmax, opt.tolerance > 0 ? opt.tolerance : 1e-10));
  }
  if (all || opt.suite == "parseval") {
    reports.push_back(liespec::run_parseval_suite(b_gamma, opt.seed,
                                                  opt.samples > 0 ? opt.samples : 100,
                                                  opt.tolerance > 0 ? opt.tolerance : 1e-10));
  }
  if (all || opt.suite == "wainger") {
    reports.push_back(liespec::run_wainger_suite(opt.seed, opt.samples > 0 ? opt.samples : 200,
                                                 opt.tolerance > 0 ? opt.tolerance : 1e-6));
  }
  if (reports.empty()) {
    throw liespec::InvalidArgument(
        "--suite must be one of orthogonality, parseval, wainger, all");
  }

  const ConfigMap config{{"b_gamma", opt.b_gamma},
                         {"gram_rmax", std::to_string(opt.gram_rmax)},
                         {"samples", std::to_string(opt.samples)},
                         {"seed", std::to_string(opt.seed)},
                         {"suite", opt.suite},
                         {"tolerance", std::to_string(opt.tolerance)}};
  nlohmann::ordered_json data;
  bool pass = true;
  if (reports.size() == 1) {
    data = liespec::to_json(reports[0]);
    pass = reports[0].pass;
  } else {
    data = nlohmann::ordered_json::array();
    for (const auto& report : reports) {
      data.push_back(liespec::to_json(report));
      pass = pass && report.pass;
    }
  }
  write_output(opt.output, json_payload("verify", config, std::move(data)));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace spectra of compact simple groups, square-counting backends,\n"
               "regularity exponents and time-side verification suites."};
  app.set_version_flag("--version", std::string("liespec ") + liespec::kVersion);
  app.require_subcommand(1);

  Table1Options table1_opt;
  auto* table1 = app.add_subcommand("table1", "Constant table (b, R0) per family");
  table1->add_option("--format", table1_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table1->add_option("--output,-o", table1_opt.output, "output path, - for stdout");

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "Enumerate eigenvalue numerators R <= rmax");
  spectrum->add_option("--family", spectrum_opt.family, "family, e.g. A3, B2, G2")->required();
  spectrum->add_option("--rmax", spectrum_opt.rmax, "largest eigenvalue numerator")
      ->required()
      ->check(CLI::NonNegativeNumber);
  spectrum->add_option("--threads", spectrum_opt.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--cell-budget", spectrum_opt.cell_budget, "max search-box cells");
  spectrum->add_option("--format", spectrum_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--output,-o", spectrum_opt.output, "output path, - for stdout");

  CountOptions count_opt;
  auto* count = app.add_subcommand(
      "count", "Multiplicities N_R with the all-integer square-count bound");
  count->add_option("--family", count_opt.family, "family, e.g. A2, G2")->required();
  count->add_option("--rmax", count_opt.rmax, "largest eigenvalue numerator")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--threads", count_opt.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  count->add_option("--cell-budget", count_opt.cell_budget, "max search-box cells");
  count->add_option("--format", count_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--output,-o", count_opt.output, "output path, - for stdout");

  RskOptions rsk_opt;
  auto* rsk = app.add_subcommand("rsk", "Sum-of-squares representation counts r_{s,2}");
  rsk->add_option("--s", rsk_opt.s, "number of squares")->required()->check(CLI::PositiveNumber);
  rsk->add_option("--rmax", rsk_opt.rmax, "largest R")->required()->check(CLI::NonNegativeNumber);
  rsk->add_option("--variant", rsk_opt.variant, "all or positive")
      ->check(CLI::IsMember({"all", "positive"}));
  rsk->add_option("--backend", rsk_opt.backend, "brute, theta or divisor")
      ->check(CLI::IsMember({"brute", "theta", "divisor"}));
  rsk->add_flag("--cross-check", rsk_opt.cross_check, "run all applicable backends and diff");
  rsk->add_option("--threads", rsk_opt.threads, "worker threads")->check(CLI::PositiveNumber);
  rsk->add_option("--product-budget", rsk_opt.product_budget, "max s * rmax for brute");
  rsk->add_option("--point-budget", rsk_opt.point_budget, "max brute lattice points");
  rsk->add_option("--format", rsk_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  rsk->add_option("--output,-o", rsk_opt.output, "output path, - for stdout");

  ExponentsOptions exp_opt;
  auto* exponents = app.add_subcommand("exponents", "Regularity exponent profiles on a grid");
  exponents->add_option("--family", exp_opt.family, "family, e.g. A2, G2")->required();
  exponents->add_option("--p-grid", exp_opt.p_grid, "comma-separated rationals, e.g. 2,5/2,3");
  exponents->add_option("--q-grid", exp_opt.q_grid,
                        "comma-separated rationals; 'inf' and 'qstar' allowed");
  exponents->add_flag("--classical", exp_opt.classical,
                      "keep only admissible pairs q <= p (classical mixed-norm order)");
  exponents->add_option("--format", exp_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  exponents->add_option("--output,-o", exp_opt.output, "output path, - for stdout");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Time-side numeric suites (JSON report)");
  verify->add_option("--suite", verify_opt.suite, "orthogonality, parseval, wainger or all")
      ->check(CLI::IsMember({"orthogonality", "parseval", "wainger", "all"}));
  verify->add_option("--seed", verify_opt.seed, "base RNG seed");
  verify->add_option("--samples", verify_opt.samples, "random vectors per suite (0: default)");
  verify->add_option("--tolerance", verify_opt.tolerance, "override tolerance (0: default)");
  verify->add_option("--b-gamma", verify_opt.b_gamma, "period scale b*gamma as a rational");
  verify->add_option("--gram-rmax", verify_opt.gram_rmax, "largest frequency in the Gram suite");
  verify->add_option("--output,-o", verify_opt.output, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table1) return run_table1(table1_opt);
    if (*spectrum) return run_spectrum(spectrum_opt);
    if (*count) return run_count(count_opt);
    if (*rsk) return run_rsk(rsk_opt);
    if (*exponents) return run_exponents(exp_opt);
    if (*verify) return run_verify(verify_opt);
  } catch (const liespec::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const liespec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
