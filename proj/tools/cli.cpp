#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "courteous/exact.hpp"
#include "courteous/poly.hpp"
#include "courteous/theatre.hpp"

namespace courteous::cli {

namespace {

std::string format_double12(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Exact: return "exact";
    case Command::Simulate: return "simulate";
    case Command::Bounds: return "bounds";
    case Command::Theatre: return "theatre";
    case Command::Sweep: return "sweep";
    case Command::Poly: return "poly";
  }
  return "?";
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

Command command_from_string(std::string_view name) {
  for (auto c : {Command::Exact, Command::Simulate, Command::Bounds, Command::Theatre,
                 Command::Sweep, Command::Poly}) {
    if (name == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown command: " + std::string(name));
}

OutputFormat format_from_string(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("format must be csv or json, got " + std::string(name));
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) {
    return {parse_double(text)};
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("grid syntax is start:stop:step, got '" + text + "'");
  }
  const double start = parse_double(text.substr(0, first));
  const double stop = parse_double(text.substr(first + 1, second - first - 1));
  const double step = parse_double(text.substr(second + 1));
  if (step <= 0.0) {
    throw std::invalid_argument("grid step must be positive, got '" + text + "'");
  }
  if (stop < start - 1e-12) {
    throw std::invalid_argument("grid stop is below start in '" + text + "'");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = start + step * i;
    if (v > stop + 1e-12) break;  // inclusive of the endpoint within 1e-12
    grid.push_back(v);
  }
  return grid;
}

std::vector<int> parse_int_grid(const std::string& text) {
  const std::vector<double> grid = parse_grid(text);
  std::vector<int> out;
  out.reserve(grid.size());
  for (double v : grid) {
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-9) {
      throw std::invalid_argument("expected integers in '" + text + "'");
    }
    out.push_back(i);
  }
  return out;
}

std::string canonical_json(const RunConfig& config) {
  nlohmann::json j;
  j["check"] = config.check;
  j["command"] = to_string(config.command);
  j["dist"] = courteous::to_string(config.dist);
  j["dry_run"] = config.dry_run;
  j["entrances"] = courteous::to_string(config.entrances);
  j["format"] = to_string(config.format);
  j["layout"] = config.layout;
  j["n"] = config.n_values;
  j["out"] = config.out_path;
  j["p"] = config.p_values;
  j["seed"] = config.seed;
  j["semantics"] = courteous::to_string(config.semantics);
  j["trials"] = config.trials;
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config JSON is malformed: ") + e.what());
  }
  RunConfig config;
  config.check = j.value("check", std::string{});
  config.command = command_from_string(j.value("command", std::string{"exact"}));
  config.dist = distribution_from_string(j.value("dist", std::string{"uniform"}));
  config.dry_run = j.value("dry_run", false);
  config.entrances = entrances_from_string(j.value("entrances", std::string{"1"}));
  config.format = format_from_string(j.value("format", std::string{"csv"}));
  config.layout = j.value("layout", std::string{});
  config.n_values = j.value("n", std::vector<int>{});
  config.out_path = j.value("out", std::string{});
  config.p_values = j.value("p", std::vector<double>{});
  config.seed = j.value("seed", std::uint64_t{0});
  config.semantics = semantics_from_string(j.value("semantics", std::string{"model"}));
  config.trials = j.value("trials", std::uint64_t{0});
  return config;
}

void write_records(const std::vector<Record>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << "n,p,dist,entrances,method,value,std_error\n";
    for (const auto& r : records) {
      out << r.n << ',' << format_double12(r.p) << ',' << r.dist << ',' << r.entrances << ','
          << r.method << ',' << format_double12(r.value) << ',';
      if (r.std_error) out << format_double12(*r.std_error);
      out << '\n';
    }
    return;
  }
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json obj;
    obj["n"] = r.n;
    obj["p"] = r.p;
    obj["dist"] = r.dist;
    obj["entrances"] = r.entrances;
    obj["method"] = r.method;
    obj["value"] = r.value;
    if (r.std_error) obj["std_error"] = *r.std_error;
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

void emit_plot_data(const BoundReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << "grid,value,lower,upper\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
      out << format_double12(report.grid[i]) << ',' << format_double12(report.computed[i]) << ','
          << format_double12(report.lower[i]) << ',' << format_double12(report.upper[i]) << '\n';
    }
    return;
  }
  nlohmann::json array = nlohmann::json::array();
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    array.push_back({{"grid", report.grid[i]},
                     {"value", report.computed[i]},
                     {"lower", report.lower[i]},
                     {"upper", report.upper[i]}});
  }
  out << array.dump(2) << '\n';
}

void emit_gap_plot_data(const BoundReport& report, OutputFormat format, std::ostream& out) {
  // gap = band midpoint minus the computed value
  if (format == OutputFormat::Csv) {
    out << "grid,gap\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
      const double gap = 0.5 * (report.lower[i] + report.upper[i]) - report.computed[i];
      out << format_double12(report.grid[i]) << ',' << format_double12(gap) << '\n';
    }
    return;
  }
  nlohmann::json array = nlohmann::json::array();
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const double gap = 0.5 * (report.lower[i] + report.upper[i]) - report.computed[i];
    array.push_back({{"grid", report.grid[i]}, {"gap", gap}});
  }
  out << array.dump(2) << '\n';
}

namespace {

double single_p(const RunConfig& config) {
  if (config.p_values.empty()) return 0.0;
  if (config.p_values.size() != 1) {
    throw std::invalid_argument("this command takes a single --p; use sweep for grids");
  }
  return config.p_values.front();
}

int single_n(const RunConfig& config) {
  if (config.n_values.size() != 1) {
    throw std::invalid_argument("this command takes a single --n; use sweep for ranges");
  }
  return config.n_values.front();
}

void run_exact(const RunConfig& config, std::ostream& out) {
  const int n = single_n(config);
  const double p = single_p(config);
  const RowSpec spec{n, config.entrances, config.dist, p};
  const ExpectationTable table = exact_table(spec);
  const std::vector<Record> records = {{n, p, std::string(courteous::to_string(config.dist)),
                                        std::string(courteous::to_string(config.entrances)),
                                        "exact", table.value(n), std::nullopt}};
  write_records(records, config.format, out);
}

void run_simulate(const RunConfig& config, std::ostream& out) {
  const int n = single_n(config);
  const double p = single_p(config);
  const RowSpec spec{n, config.entrances, config.dist, p};
  const SimulationSummary summary = config.semantics == Semantics::Model
                                        ? simulate_model(spec, config.trials, config.seed)
                                        : simulate_physical(spec, config.trials, config.seed);
  const std::vector<Record> records = {
      {n, p, std::string(courteous::to_string(config.dist)),
       std::string(courteous::to_string(config.entrances)),
       std::string(courteous::to_string(config.semantics)), summary.stats.mean,
       summary.stats.std_error}};
  write_records(records, config.format, out);
}

void run_sweep(const RunConfig& config, std::ostream& out) {
  if (config.n_values.empty()) {
    throw std::invalid_argument("sweep needs --n");
  }
  const std::vector<double> p_grid =
      config.p_values.empty() ? std::vector<double>{0.0} : config.p_values;
  std::vector<Record> records;
  for (int n : config.n_values) {
    for (double p : p_grid) {
      const RowSpec spec{n, config.entrances, config.dist, p};
      records.push_back({n, p, std::string(courteous::to_string(config.dist)),
                         std::string(courteous::to_string(config.entrances)), "exact",
                         exact_table(spec).value(n), std::nullopt});
    }
  }
  write_records(records, config.format, out);
}

void run_poly(const RunConfig& config, std::ostream& out) {
  const int n = single_n(config);
  const PolynomialInP poly = zipf_right_polynomial(n);
  if (config.p_values.empty()) {
    if (config.format == OutputFormat::Json) {
      nlohmann::json j;
      j["n"] = n;
      j["degree"] = poly.degree();
      j["coefficients"] = poly.coefficients;  // index = power of p
      out << j.dump(2) << '\n';
    } else {
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < poly.coefficients.size(); ++i) {
        out << i << ',' << format_double12(poly.coefficients[i]) << '\n';
      }
    }
    return;
  }
  std::vector<Record> records;
  for (double p : config.p_values) {
    records.push_back({n, p, "zipf-right", "1", "poly", eval_polynomial(poly, p), std::nullopt});
  }
  write_records(records, config.format, out);
}

void run_bounds(const RunConfig& config, std::ostream& out) {
  if (config.check == "lemma1") {
    BoundReport report;
    report.quantity = "sum (H_n - H_k)/(n - k)";
    for (int n : config.n_values) {
      if (n < 40) {
        throw std::invalid_argument("lemma1 bounds hold from n = 40; got " + std::to_string(n));
      }
      report.grid.push_back(n);
      report.computed.push_back(lemma1_sum(n));
      report.lower.push_back(1.408);
      report.upper.push_back(1.86);
    }
    emit_plot_data(report, config.format, out);
  } else if (config.check == "interpolation") {
    emit_gap_plot_data(check_g_interpolation(config.p_values), config.format, out);
  } else if (config.check == "zipf-right") {
    emit_plot_data(zipf_right_sandwich(single_n(config)), config.format, out);
  } else if (config.check == "r40") {
    emit_plot_data(r40_polynomial_sandwich(config.p_values), config.format, out);
  } else {
    throw std::invalid_argument(
        "--check must be one of lemma1, interpolation, zipf-right, r40; got '" + config.check +
        "'");
  }
}

std::string entrances_label(const TheatreLayout& layout) {
  bool any_one = false;
  bool any_two = false;
  for (const auto& row : layout.rows) {
    for (const auto& section : row) {
      (section.entrances == Entrances::OneLeft ? any_one : any_two) = true;
    }
  }
  if (any_one && any_two) return "mixed";
  return any_two ? "2" : "1";
}

TheatreLayout resolve_layout(const std::string& arg) {
  if (arg.rfind("lipari:", 0) == 0) {
    const std::string count = arg.substr(7);
    try {
      std::size_t used = 0;
      const int n = std::stoi(count, &used);
      if (used != count.size()) throw std::invalid_argument("");
      return lipari_layout(n);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("--layout lipari:N needs an integer N, got '" + count + "'");
    }
  }
  std::ifstream file(arg);
  if (!file) {
    throw std::invalid_argument("cannot open layout file '" + arg + "'");
  }
  std::ostringstream text;
  text << file.rdbuf();
  return layout_from_json(text.str());
}

void run_theatre(const RunConfig& config, std::ostream& out) {
  if (config.layout.empty()) {
    throw std::invalid_argument("theatre needs --layout lipari:N or a JSON layout file");
  }
  const TheatreLayout layout = resolve_layout(config.layout);
  const double p = single_p(config);
  const std::string label = entrances_label(layout);
  std::vector<Record> records;
  records.push_back({layout.total_seats(), p, std::string(courteous::to_string(config.dist)),
                     label, "exact", expected_theatre(layout, p, config.dist), std::nullopt});
  if (config.trials > 0) {
    const SimulationSummary summary =
        simulate_theatre(layout, p, config.dist, config.trials, config.seed);
    records.push_back({layout.total_seats(), p, std::string(courteous::to_string(config.dist)),
                       label, "model", summary.stats.mean, summary.stats.std_error});
  }
  write_records(records, config.format, out);
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
  if (config.dry_run) {
    out << canonical_json(config) << '\n';
    return;
  }
  switch (config.command) {
    case Command::Exact: run_exact(config, out); return;
    case Command::Simulate: run_simulate(config, out); return;
    case Command::Sweep: run_sweep(config, out); return;
    case Command::Poly: run_poly(config, out); return;
    case Command::Bounds: run_bounds(config, out); return;
    case Command::Theatre: run_theatre(config, out); return;
  }
  throw std::logic_error("run: unhandled command");
}

int run_main(int argc, const char* const* argv) {
  CLI::App app{"Expected theatre-row occupancy: exact recurrence tables, verified bounds, "
               "polynomial coefficients and seeded Monte Carlo simulation"};
  app.require_subcommand(1);

  struct Raw {
    std::string n, p, dist = "uniform", entrances = "1", semantics = "model";
    std::string format = "csv", out, layout, check;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    bool dry_run = false;
  } raw;

  auto add_output = [&raw](CLI::App* cmd) {
    cmd->add_option("--format", raw.format, "Output format: csv or json");
    cmd->add_option("--out", raw.out, "Write output to this file instead of stdout");
    cmd->add_flag("--dry-run", raw.dry_run, "Echo the canonical JSON config and exit");
  };
  auto add_row = [&raw](CLI::App* cmd) {
    cmd->add_option("--dist", raw.dist,
                    "Seat law: uniform, geo-left, geo-right, zipf-left, zipf-right");
    cmd->add_option("--entrances", raw.entrances, "Row entrances: 1 or 2");
  };

  CLI::App* exact = app.add_subcommand("exact", "One exact expectation from the recurrences");
  add_row(exact);
  exact->add_option("--p", raw.p, "Courtesy probability");
  exact->add_option("--n", raw.n, "Seats in the row")->required();
  add_output(exact);

  CLI::App* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo row simulation");
  add_row(simulate);
  simulate->add_option("--p", raw.p, "Courtesy probability");
  simulate->add_option("--n", raw.n, "Seats in the row")->required();
  simulate->add_option("--trials", raw.trials, "Number of trials")->required();
  simulate->add_option("--seed", raw.seed, "RNG seed (default: THEATRE_SEED or 0)");
  simulate->add_option("--semantics", raw.semantics, "model or physical");
  add_output(simulate);

  CLI::App* sweep = app.add_subcommand("sweep", "Exact expectations over n and p grids");
  add_row(sweep);
  sweep->add_option("--p", raw.p, "Courtesy probability or grid start:stop:step");
  sweep->add_option("--n", raw.n, "Seats or grid start:stop:step")->required();
  add_output(sweep);

  CLI::App* bounds = app.add_subcommand("bounds", "Verified bound tables for plotting");
  bounds->add_option("--check", raw.check, "lemma1, interpolation, zipf-right or r40")
      ->required();
  bounds->add_option("--p", raw.p, "Probability grid (interpolation, r40)");
  bounds->add_option("--n", raw.n, "Size or size grid (lemma1, zipf-right)");
  add_output(bounds);

  CLI::App* theatre = app.add_subcommand("theatre", "Aggregate a whole seating layout");
  theatre->add_option("--layout", raw.layout, "lipari:N or a JSON layout file")->required();
  theatre->add_option("--dist", raw.dist,
                      "Seat law: uniform, geo-left, geo-right, zipf-left, zipf-right");
  theatre->add_option("--p", raw.p, "Courtesy probability");
  theatre->add_option("--trials", raw.trials, "Also simulate with this many trials");
  theatre->add_option("--seed", raw.seed, "RNG seed (default: THEATRE_SEED or 0)");
  add_output(theatre);

  CLI::App* poly = app.add_subcommand("poly", "Occupancy polynomial coefficients R_n(p)");
  poly->add_option("--n", raw.n, "Seats in the row")->required();
  poly->add_option("--p", raw.p, "Evaluate the polynomial on this grid instead");
  add_output(poly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    RunConfig config;
    CLI::App* active = app.get_subcommands().front();
    config.command = command_from_string(active->get_name());
    config.dist = distribution_from_string(raw.dist);
    config.entrances = entrances_from_string(raw.entrances);
    config.semantics = semantics_from_string(raw.semantics);
    config.format = format_from_string(raw.format);
    config.out_path = raw.out;
    config.layout = raw.layout;
    config.check = raw.check;
    config.dry_run = raw.dry_run;

    if (!raw.n.empty()) config.n_values = parse_int_grid(raw.n);
    if (!raw.p.empty()) config.p_values = parse_grid(raw.p);

    // seed: explicit flag, else THEATRE_SEED, else 0
    if (simulate->count("--seed") > 0 || theatre->count("--seed") > 0) {
      config.seed = raw.seed;
    } else if (const char* env = std::getenv("THEATRE_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        config.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("THEATRE_SEED must be an unsigned integer, got '" +
                                    std::string(env) + "'");
      }
    }

    if (config.command == Command::Simulate) {
      config.trials = raw.trials;
      if (config.trials == 0) throw std::invalid_argument("simulate needs --trials >= 1");
    } else if (config.command == Command::Theatre) {
      config.trials = theatre->count("--trials") > 0 ? raw.trials : 0;
    } else {
      config.trials = 0;
    }

    // per-check grid defaults for bounds
    if (config.command == Command::Bounds && !config.dry_run) {
      if (config.check == "lemma1" && config.n_values.empty()) {
        config.n_values = parse_int_grid("40:10000:40");
      } else if (config.check == "zipf-right" && config.n_values.empty()) {
        config.n_values = {2000};
      } else if (config.check == "interpolation" && config.p_values.empty()) {
        config.p_values = parse_grid("0:0.95:0.05");
      } else if (config.check == "r40" && config.p_values.empty()) {
        config.p_values = parse_grid("0:0.99:0.01");
      }
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      if (!file) {
        throw std::invalid_argument("cannot open output file '" + config.out_path + "'");
      }
      out = &file;
    }
    run(config, *out);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace courteous::cli
