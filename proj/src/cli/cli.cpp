#include "zetalab/cli/cli.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/group/fuchsian.hpp"
#include "zetalab/orderfinder/orderfinder.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/schottky/schottky.hpp"
#include "zetalab/spectrum/spectrum.hpp"
#include "zetalab/topology/topology.hpp"
#include "zetalab/zeta/zeta.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace zetalab::cli {

namespace fs = std::filesystem;

std::string command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::zeta: return "zeta";
    case Command::verify_selberg: return "verify-selberg";
    case Command::order_zero: return "order-zero";
    case Command::predict: return "predict";
    case Command::genus_infer: return "genus-infer";
    case Command::bench: return "bench";
  }
  return "?";
}

namespace {

Real checked_real(const std::string& flag, const std::string& text) {
  try {
    return parse_real(text);
  } catch (const FormatError&) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
}

Complex checked_complex(const std::string& flag, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const FormatError&) {
    throw UsageError(flag + ": not a complex number: '" + text + "'");
  }
}

fs::path resolved(const std::string& p) { return fs::absolute(fs::path(p)).lexically_normal(); }

}  // namespace

RunPlan parse_args(int argc, const char* const* argv) {
  RunPlan plan;
  CLI::App app{"zetalab: length spectra and dynamical zeta functions of hyperbolic surfaces"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::optional<int> precision;
  app.add_option("--precision-bits", precision, "Binary working precision (default 200)")->check(CLI::Range(32, 4096));
  app.add_option("--threads", plan.threads, "Thread limit (default: ZETALAB_THREADS, else all cores)")
      ->check(CLI::Range(0, 4096));
  app.add_option("--digits", plan.digits, "Significant digits in printed numbers")->check(CLI::Range(1, 1000));
  app.add_flag("--plot", plan.plot, "Also write a gnuplot script next to the output file");

  std::string out, spectrum_path, schottky_path, points_path, cache_dir;
  std::optional<int> order;

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate the primitive length spectrum");
  spectrum->add_option("--group", plan.group, "Surface group")->check(CLI::IsMember({"bolza"}));
  spectrum->add_option("--cutoff", plan.cutoff, "Largest geodesic length")->required();
  spectrum->add_option("--method", plan.method, "enumerate or brute-force")
      ->check(CLI::IsMember({"enumerate", "brute-force"}));
  spectrum->add_option("--out", out, "Spectrum file to write (default: stdout)");
  spectrum->add_option("--cache-dir", cache_dir, "Directory of digest-keyed cached spectra");

  auto* zeta = app.add_subcommand("zeta", "Evaluate a zeta function at points");
  zeta->add_option("--spectrum", spectrum_path, "Spectrum file");
  zeta->add_option("--schottky", schottky_path, "Schottky config file");
  zeta->add_option("--kind", plan.kind, "ruelle, selberg or schottky-determinant")
      ->check(CLI::IsMember({"ruelle", "selberg", "schottky-determinant"}));
  zeta->add_option("--points", points_path, "CSV of s_re,s_im points");
  zeta->add_option("--s", plan.s_values, "Evaluation point(s), e.g. 2 or 2+1i");
  zeta->add_option("--mmax", plan.mmax, "Selberg product depth M")->check(CLI::NonNegativeNumber);
  zeta->add_option("--order", order, "Determinant truncation order N")->check(CLI::PositiveNumber);
  zeta->add_option("--out", out, "CSV output (default: stdout)");

  auto* verify = app.add_subcommand("verify-selberg", "Check the Ruelle/Selberg telescoping relation");
  verify->add_option("--spectrum", spectrum_path, "Spectrum file")->required();
  verify->add_option("--s", plan.s_values, "Evaluation point(s) with Re s > 1");
  verify->add_option("--mmax", plan.mmax, "Selberg product depth M")->check(CLI::NonNegativeNumber);

  auto* order_zero = app.add_subcommand("order-zero", "Measure the order of vanishing by the argument principle");
  order_zero->add_option("--schottky", schottky_path, "Schottky config file (Ruelle zeta of the group)");
  order_zero->add_option("--model", plan.model, "schottky or fried")->check(CLI::IsMember({"schottky", "fried"}));
  order_zero->add_option("--genus", plan.genus, "Genus of the synthetic Fried model");
  order_zero->add_option("--a", plan.fried_a, "Correction coefficient a in (2πs)^(2g-2)(1 + a s)");
  order_zero->add_option("--center", plan.center, "Contour center");
  order_zero->add_option("--radius", plan.radius, "Contour radius");
  order_zero->add_option("--samples", plan.samples, "Initial contour samples")->check(CLI::Range(64, 1 << 16));
  order_zero->add_option("--order", order, "Determinant truncation order N")->check(CLI::PositiveNumber);
  order_zero->add_option("--out", out, "Append the CSV report row to this file");

  auto* predict = app.add_subcommand("predict", "Print the topology ledger for a genus");
  predict->add_option("--genus", plan.genus, "Surface genus")->required();

  auto* infer = app.add_subcommand("genus-infer", "Genus from a measured vanishing order");
  infer->add_option("--order", plan.vanishing_order, "Vanishing order at s = 0")->required();

  auto* bench = app.add_subcommand("bench", "Time the main computations");
  bench->add_option("--cutoff", plan.cutoff, "Spectrum cutoff (default 6)");
  bench->add_option("--order", order, "Determinant order (default 12)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    plan.help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    return plan;
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  for (Command c : {Command::spectrum, Command::zeta, Command::verify_selberg, Command::order_zero, Command::predict,
                    Command::genus_infer, Command::bench})
    if (command_name(c) == name) plan.command = c;
  for (const CLI::Option* opt : chosen->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty()) {
      std::string joined;
      for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
      plan.parameters[opt->get_lnames().front()] = joined;
    }

  if (precision) {
    plan.precision_bits = *precision;
    plan.precision_given = true;
  }
  plan.order = order;
  set_working_precision(plan.precision_bits);
  if (!out.empty()) plan.output = resolved(out);
  if (!spectrum_path.empty()) plan.spectrum_path = resolved(spectrum_path);
  if (!schottky_path.empty()) plan.schottky_config = resolved(schottky_path);
  if (!points_path.empty()) plan.points_path = resolved(points_path);
  if (!cache_dir.empty()) plan.cache_dir = resolved(cache_dir);

  switch (plan.command) {
    case Command::spectrum:
      if (plan.precision_bits < 64) throw UsageError("--precision-bits must be >= 64 for surface groups");
      if (!(checked_real("--cutoff", plan.cutoff) > 0)) throw UsageError("--cutoff must be positive");
      break;
    case Command::zeta:
      if (plan.spectrum_path.has_value() == plan.schottky_config.has_value())
        throw UsageError("zeta needs exactly one of --spectrum and --schottky");
      if (plan.points_path.has_value() == !plan.s_values.empty())
        throw UsageError("zeta needs exactly one of --points and --s");
      if (plan.schottky_config && plan.kind == "selberg")
        throw UsageError("--kind selberg needs --spectrum; use schottky-determinant for Schottky groups");
      if (plan.spectrum_path && plan.kind == "schottky-determinant")
        throw UsageError("--kind schottky-determinant needs --schottky");
      for (const auto& s : plan.s_values) checked_complex("--s", s);
      break;
    case Command::verify_selberg:
      if (plan.s_values.empty()) plan.s_values = {"2"};
      for (const auto& s : plan.s_values)
        if (!(checked_complex("--s", s).real() > 1)) throw UsageError("--s must have real part > 1");
      break;
    case Command::order_zero:
      if (plan.schottky_config) plan.model = "schottky";
      if (plan.model == "schottky" && !plan.schottky_config) throw UsageError("order-zero needs --schottky or --model fried");
      if (plan.model == "fried") checked_real("--a", plan.fried_a);
      checked_complex("--center", plan.center);
      if (!(checked_real("--radius", plan.radius) > 0)) throw UsageError("--radius must be positive");
      break;
    case Command::bench:
      if (plan.cutoff.empty()) plan.cutoff = "6";
      if (!(checked_real("--cutoff", plan.cutoff) > 0)) throw UsageError("--cutoff must be positive");
      break;
    case Command::predict:
    case Command::genus_infer:
      break;
  }
  return plan;
}

namespace {

void apply_thread_limit(int requested) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("ZETALAB_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError("ZETALAB_THREADS must be an integer");
      }
      if (threads <= 0) throw UsageError("ZETALAB_THREADS must be positive");
    }
  }
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  set_thread_count(threads);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + path.string());
  f << content;
}

void emit(const RunPlan& plan, const std::string& content, std::ostream& out) {
  if (plan.output) {
    write_file(*plan.output, content);
  } else {
    out << content;
  }
}

std::string complex_text(const Complex& z, int digits) {
  return to_decimal(z.real(), digits) + (z.imag() < 0 ? "" : "+") + to_decimal(z.imag(), digits) + "i";
}

std::vector<Complex> read_points(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::vector<Complex> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "s_re,s_im") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("points line " + std::to_string(line_no) + ": expected s_re,s_im");
    points.emplace_back(parse_real(line.substr(0, comma)), parse_real(line.substr(comma + 1)));
  }
  return points;
}

LengthSpectrum spectrum_for(const RunPlan& plan, const FuchsianGroup& group, const Real& cutoff) {
  auto compute = [&] {
    return plan.method == "brute-force" ? brute_force_spectrum(group, cutoff) : enumerate_spectrum(group, cutoff);
  };
  if (!plan.cache_dir) return compute();
  fs::create_directories(*plan.cache_dir);
  const fs::path cached = *plan.cache_dir / ("spectrum-" + group.name + "-" + group.digest + "-L" + plan.cutoff +
                                             "-p" + std::to_string(group.precision_bits) + ".txt");
  if (fs::exists(cached)) {
    try {
      LengthSpectrum s = load_spectrum(cached, group.digest);
      if (s.cutoff == cutoff && s.precision_bits == group.precision_bits && s.complete) return s;
    } catch (const DigestMismatch&) {
      // stale entry; recomputed below
    } catch (const FormatError&) {
    }
  }
  LengthSpectrum s = compute();
  save_spectrum(s, cached);
  return s;
}

int run_spectrum(const RunPlan& plan, std::ostream& out) {
  const FuchsianGroup group = build_bolza_group(plan.precision_bits);
  const Real cutoff = parse_real(plan.cutoff);
  const LengthSpectrum spec = spectrum_for(plan, group, cutoff);
  emit(plan, format_spectrum(spec), out);
  if (plan.output) {
    out << "entries: " << spec.entries.size() << "\nclasses: " << spec.total_multiplicity() << "\n";
    if (!spec.entries.empty()) out << "systole: " << to_decimal(spec.systole(), plan.digits) << "\n";
    if (plan.plot) {
      write_file(plan.output->string() + ".gp",
                 "set xlabel 'length'\nset ylabel 'N(L)'\nset key left\n"
                 "plot '" + plan.output->filename().string() +
                     "' using 1:2 smooth cumulative with steps title 'primitive classes'\n");
    }
  }
  return 0;
}

int run_zeta(const RunPlan& plan, std::ostream& out) {
  std::vector<Complex> points;
  auto load_points = [&] {
    if (plan.points_path) {
      points = read_points(*plan.points_path);
    } else {
      for (const auto& s : plan.s_values) points.push_back(parse_complex(s));
    }
  };
  std::ostringstream csv;
  csv << zeta_csv_header() << '\n';
  if (plan.spectrum_path) {
    const LengthSpectrum spec = load_spectrum(*plan.spectrum_path);
    load_points();
    for (const auto& s : points) {
      const ZetaEvaluation z = plan.kind == "selberg" ? selberg_product(spec, s, plan.mmax) : ruelle_product(spec, s);
      csv << zeta_csv_row(z, plan.digits) << '\n';
    }
  } else {
    SchottkyConfig cfg = load_schottky_config(*plan.schottky_config);
    if (plan.precision_given) cfg.precision_bits = plan.precision_bits;
    const SchottkyGroup group = build_schottky(cfg.trace_parameter, cfg.precision_bits);
    const int N = plan.order.value_or(cfg.max_order);
    const TraceTables tables = trace_tables(group, N, cfg.word_budget);
    load_points();
    for (const auto& s : points) {
      const ZetaEvaluation z =
          plan.kind == "schottky-determinant" ? fredholm_determinant(tables, s, N) : schottky_ruelle(tables, s, N);
      csv << zeta_csv_row(z, plan.digits) << '\n';
    }
  }
  emit(plan, csv.str(), out);
  if (plan.output && plan.plot) {
    write_file(plan.output->string() + ".gp",
               "set datafile separator ','\nset xlabel 'Re s'\nset ylabel 'Re log zeta'\n"
               "plot '" + plan.output->filename().string() + "' every ::1 using 1:4 with linespoints title '" +
                   plan.kind + "'\n");
  }
  return 0;
}

int run_verify(const RunPlan& plan, std::ostream& out) {
  const LengthSpectrum spec = load_spectrum(*plan.spectrum_path);
  bool all = true;
  out << "spectrum: " << spec.group_name << " cutoff " << to_decimal(spec.cutoff, plan.digits) << ", "
      << spec.total_multiplicity() << " classes\n";
  for (const auto& text : plan.s_values) {
    const Complex s = parse_complex(text);
    const RelationCheck check = selberg_relation_residual(spec, s, plan.mmax);
    all = all && check.holds();
    out << "s = " << complex_text(s, plan.digits) << "  M = " << plan.mmax
        << "  residual = " << to_decimal(check.residual, plan.digits)
        << "  bound = " << to_decimal(check.bound, plan.digits) << "  " << (check.holds() ? "residual <= bound" : "FAILED")
        << "\n";
  }
  return all ? 0 : 1;
}

int run_order_zero(const RunPlan& plan, std::ostream& out) {
  std::optional<ContourOrderReport<Real>> report;
  if (plan.model == "fried") {
    const TopologyLedger ledger = ledger_for_genus(plan.genus);
    const Complex center = parse_complex(plan.center);
    const Real radius = parse_real(plan.radius);
    const Complex a(parse_real(plan.fried_a));
    const int m = ledger.predicted_order;
    auto f = [&](const Complex& s) {
      const Complex base = Complex(2 * pi()) * s;
      Complex p(Real(1));
      for (int j = 0; j < m; ++j) p *= base;
      return p * (Complex(Real(1)) + a * s);
    };
    report = contour_order_report<Real>(f, center, radius, plan.samples);
    out << "model: (2πs)^" << m << "(1 + a·s), a = " << plan.fried_a << "\n";
  } else {
    SchottkyConfig cfg = load_schottky_config(*plan.schottky_config);
    if (plan.precision_given) cfg.precision_bits = plan.precision_bits;
    const SchottkyGroup group = build_schottky(cfg.trace_parameter, cfg.precision_bits);
    const int N = plan.order.value_or(cfg.max_order);
    const TraceTables tables = trace_tables(group, N, cfg.word_budget);
    const Complex center = parse_complex(plan.center);
    const Real radius = parse_real(plan.radius);
    auto f = [&](const Complex& s) { return schottky_ruelle(tables, s, N).value; };
    report = contour_order_report<Real>(f, center, radius, plan.samples);
    out << "model: Ruelle zeta of " << group.name() << ", determinant order " << N << "\n";
  }
  out << contour_summary(*report, plan.digits);
  if (plan.output) {
    const bool fresh = !fs::exists(*plan.output);
    std::ofstream f(*plan.output, std::ios::app | std::ios::binary);
    if (!f) throw PreconditionError("cannot write " + plan.output->string());
    if (fresh) f << contour_csv_header() << '\n';
    f << contour_csv_row(*report, plan.digits) << '\n';
  }
  return 0;
}

int run_predict(const RunPlan& plan, std::ostream& out) {
  const TopologyLedger t = ledger_for_genus(plan.genus);
  const Real coefficient = pow(2 * pi(), std::abs(t.euler_characteristic));
  out << "genus: " << t.genus << "\n"
      << "euler_characteristic: " << t.euler_characteristic << "\n"
      << "betti_surface: " << t.betti_surface << "\n"
      << "betti_unit_tangent: " << t.betti_unit_tangent << "\n"
      << "predicted_order: " << t.predicted_order << "\n"
      << "fried_coefficient_magnitude: " << to_decimal(coefficient, plan.digits) << "\n"
      << "convention: " << kExponentConvention << "\n"
      << "assumption: " << t.assumption << "\n";
  return 0;
}

int run_genus_infer(const RunPlan& plan, std::ostream& out) {
  const int genus = genus_from_order(plan.vanishing_order);
  out << "genus: " << genus << "\n";
  return 0;
}

int run_bench(const RunPlan& plan, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
  const FuchsianGroup group = build_bolza_group(plan.precision_bits);
  const Real cutoff = parse_real(plan.cutoff);
  auto t0 = clock::now();
  EnumerationStats stats;
  const LengthSpectrum spec = enumerate_spectrum(group, cutoff, &stats);
  out << "enumerate_spectrum cutoff " << plan.cutoff << ": " << seconds(t0) << " s, " << stats.elements_visited
      << " elements, " << stats.candidates << " candidates, " << spec.total_multiplicity() << " classes\n";
  const SchottkyGroup schottky = build_schottky(Real(6), plan.precision_bits);
  const int N = plan.order.value_or(kDefaultDeterminantOrder);
  t0 = clock::now();
  const TraceTables tables = trace_tables(schottky, N);
  out << "trace_tables t=6 N=" << N << ": " << seconds(t0) << " s\n";
  t0 = clock::now();
  fredholm_determinant(tables, Complex(Real("1.5")), N);
  out << "fredholm_determinant s=1.5: " << seconds(t0) << " s\n";
  out << "threads: " << thread_count() << "\n";
  return 0;
}

}  // namespace

int execute(const RunPlan& plan, std::ostream& out) {
  if (plan.help) {
    out << *plan.help;
    return 0;
  }
  apply_thread_limit(plan.threads);
  set_working_precision(plan.precision_bits);
  switch (plan.command) {
    case Command::spectrum: return run_spectrum(plan, out);
    case Command::zeta: return run_zeta(plan, out);
    case Command::verify_selberg: return run_verify(plan, out);
    case Command::order_zero: return run_order_zero(plan, out);
    case Command::predict: return run_predict(plan, out);
    case Command::genus_infer: return run_genus_infer(plan, out);
    case Command::bench: return run_bench(plan, out);
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(argc, argv), out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zetalab::cli
