#include "cli.hpp"

#include "hdc/ball_spectrum.hpp"
#include "hdc/bounds.hpp"
#include "hdc/cube_fourier.hpp"
#include "hdc/cyclic_code.hpp"
#include "hdc/distance.hpp"
#include "hdc/error.hpp"
#include "hdc/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace hdc::cli {

namespace {

enum class Format { Csv, Json };

struct RunConfig {
  std::string format;  // "", "csv" or "json"
  bool json = false;
  bool csv = false;
  std::string out_path;
  unsigned workers = 1;

  int m = 0, c = 0;
  std::int64_t n = 0, d = 0;
  int r = 0;
  int r_max = 8;
  int digits = kDefaultCertificateDigits;
  bool asymptotic = false;
  bool bch = false;
  std::size_t max_dimension = EnumerationOptions{}.max_dimension;
  std::vector<std::string> pairs;
  std::optional<double> a;
  std::vector<std::int64_t> n_list;
  int n_min = 2, n_max = 10, samples = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> code;
  std::optional<int> replay_d;
};

Format resolve_format(const RunConfig& cfg, Format fallback) {
  require(!(cfg.json && cfg.csv), ErrorKind::InvalidParameters, "--json and --csv are mutually exclusive");
  if (cfg.json) return Format::Json;
  if (cfg.csv) return Format::Csv;
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  return fallback;
}

void require_json(const RunConfig& cfg) {
  require(resolve_format(cfg, Format::Json) == Format::Json, ErrorKind::InvalidParameters,
          "CSV output is only available for bound tables");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotApplicable:
      return kNotApplicable;
    case ErrorKind::BudgetExceeded:
      return kBudgetExceeded;
    case ErrorKind::InvalidParameters:
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::NonIrreducibleModulus:
    case ErrorKind::NonPrimitiveModulus:
    case ErrorKind::InvalidRadius:
    case ErrorKind::OutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::LengthMismatch:
      return kInvalidParameters;
    default:
      return kFailure;
  }
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorKind::InvalidParameters, "pair '" + text + "' must look like n:d");
  try {
    std::size_t used_n = 0, used_d = 0;
    const std::string n_text = text.substr(0, colon), d_text = text.substr(colon + 1);
    const std::int64_t n = std::stoll(n_text, &used_n);
    const std::int64_t d = std::stoll(d_text, &used_d);
    if (used_n == n_text.size() && used_d == d_text.size()) return {n, d};
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidParameters, "pair '" + text + "' must look like n:d");
}

/// Runs bound_table for each pair on a small pool; rows keep input order.
std::vector<BoundRow> parallel_tables(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, int r_max,
                                      unsigned workers) {
  std::vector<std::vector<BoundRow>> parts(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        parts[i] = bound_table(pairs[i].first, pairs[i].second, r_max);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(pairs.size())));
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<BoundRow> rows;
  for (auto& part : parts) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

void emit_rows(std::ostream& out, const std::vector<BoundRow>& rows, Format format) {
  if (format == Format::Csv)
    write_csv(out, rows);
  else
    out << to_json(rows).dump(2) << '\n';
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<std::uint32_t> parse_words(const std::vector<std::string>& words, std::int64_t& n) {
  require(!words.empty(), ErrorKind::InvalidParameters, "--code needs at least one word");
  n = static_cast<std::int64_t>(words.front().size());
  std::vector<std::uint32_t> out;
  for (const auto& w : words) {
    require(static_cast<std::int64_t>(w.size()) == n, ErrorKind::LengthMismatch, "codewords differ in length");
    require(n >= 1 && n <= 15, ErrorKind::DimensionMismatch, "codeword length must lie in [1, 15]");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      require(w[i] == '0' || w[i] == '1', ErrorKind::InvalidParameters, "codewords are binary strings");
      if (w[i] == '1') mask |= 1u << i;
    }
    out.push_back(mask);
  }
  return out;
}

int dispatch(const CLI::App& app, const RunConfig& cfg, std::ostream& out) {
  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "construct") {
    require_json(cfg);
    const ConstructionSpec spec = build_code(cfg.m, cfg.c);
    Json j = to_json(spec);
    if (cfg.bch) j["bch"] = to_json(bch_certificate(spec));
    emit_json(out, j);
  } else if (name == "distance") {
    require_json(cfg);
    const auto start = std::chrono::steady_clock::now();
    const ConstructionSpec spec = build_code(cfg.m, cfg.c);
    DistanceReport report;
    report.n = spec.n;
    report.k = spec.k;
    report.d_min = static_cast<std::int64_t>(min_distance(spec, {cfg.max_dimension, cfg.workers}));
    report.designed_distance = spec.designed_distance;
    report.meets_guarantee = report.d_min >= static_cast<std::int64_t>(guaranteed_distance(cfg.m, cfg.c));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit_json(out, to_json(report));
  } else if (name == "eigen") {
    require_json(cfg);
    require(cfg.asymptotic != (cfg.n > 0), ErrorKind::InvalidParameters, "give exactly one of --n or --asymptotic");
    if (cfg.asymptotic) {
      const EigenCertificate cert = certify(asymptotic_operator(cfg.r), cfg.digits);
      Json j = to_json(cert, true);
      j["lambda_float"] = format_real(asymptotic_constant(cfg.r));
      emit_json(out, j);
    } else {
      emit_json(out, to_json(certify(cfg.n, cfg.r, cfg.digits), false));
    }
  } else if (name == "bounds") {
    emit_rows(out, parallel_tables({{cfg.n, cfg.d}}, cfg.r_max, 1), resolve_format(cfg, Format::Csv));
  } else if (name == "table") {
    const Format format = resolve_format(cfg, Format::Csv);
    if (cfg.a) {
      require(cfg.pairs.empty(), ErrorKind::InvalidParameters, "--a and --pairs are mutually exclusive");
      require(!cfg.n_list.empty(), ErrorKind::InvalidParameters, "--a needs --n-list");
      emit_rows(out, regime_table(*cfg.a, cfg.n_list), format);
    } else {
      std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
      const std::vector<std::string> defaults{"15:6", "63:16", "63:24"};
      for (const auto& p : cfg.pairs.empty() ? defaults : cfg.pairs) pairs.push_back(parse_pair(p));
      emit_rows(out, parallel_tables(pairs, cfg.r_max, cfg.workers), format);
    }
  } else if (name == "fourier-verify") {
    require_json(cfg);
    require(cfg.n_min >= 1 && cfg.n_min <= cfg.n_max && cfg.n_max <= 12, ErrorKind::InvalidParameters,
            "need 1 <= n-min <= n-max <= 12");
    require(cfg.samples >= 1, ErrorKind::InvalidParameters, "samples must be positive");
    std::mt19937_64 rng(cfg.seed);
    Json per_n = Json::array();
    bool all = true;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      int passed = 0;
      for (int s = 0; s < cfg.samples; ++s) {
        const auto f = random_rational_function(n, rng);
        const auto g = random_rational_function(n, rng);
        const auto h = random_rational_function(n, rng);
        passed += check_identities(f, g, h).all() ? 1 : 0;
      }
      all = all && passed == cfg.samples;
      per_n.push_back(Json{{"n", n}, {"samples", cfg.samples}, {"passed", passed}});
    }
    emit_json(out, Json{{"seed", cfg.seed}, {"results", per_n}, {"pass", all}});
    return all ? kOk : kFailure;
  } else if (name == "replay") {
    require_json(cfg);
    std::vector<std::uint32_t> words;
    std::int64_t n = 0;
    if (!cfg.code.empty()) {
      require(cfg.m == 0 && cfg.c == 0, ErrorKind::InvalidParameters, "--code excludes --m/--c");
      words = parse_words(cfg.code, n);
    } else {
      const ConstructionSpec spec = build_code(cfg.m, cfg.c);
      require(spec.n <= 15, ErrorKind::DimensionMismatch, "replay needs n <= 15");
      words = codeword_masks(spec);
      n = spec.n;
    }
    emit_json(out, to_json(covering_replay(static_cast<int>(n), words, cfg.r, cfg.replay_d)));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and constructions for binary codes with large minimum distance", "hdcodes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--json", cfg.json, "Shorthand for --format json");
    sub->add_flag("--csv", cfg.csv, "Shorthand for --format csv");
    sub->add_option("--out", cfg.out_path, "Write output here (relative paths honour HDC_OUTPUT_DIR)");
  };

  auto* construct = app.add_subcommand("construct", "Build the cyclic code for (m, c)");
  construct->add_option("--m", cfg.m, "Field degree (even, 4..16)")->required();
  construct->add_option("--c", cfg.c, "Number of cosets (1..m/2-1)")->required();
  construct->add_flag("--bch", cfg.bch, "Include the root-window certificate");
  common(construct);

  auto* distance = app.add_subcommand("distance", "Exact minimum distance by enumeration");
  distance->add_option("--m", cfg.m)->required();
  distance->add_option("--c", cfg.c)->required();
  distance->add_option("--max-dimension", cfg.max_dimension, "Largest k enumerated")->check(CLI::Range(1, 40));
  distance->add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));
  common(distance);

  auto* eigen = app.add_subcommand("eigen", "Top eigenvalue of a Hamming ball");
  eigen->add_option("--r", cfg.r, "Ball radius")->required()->check(CLI::Range(1, 64));
  eigen->add_option("--n", cfg.n, "Length");
  eigen->add_flag("--asymptotic", cfg.asymptotic, "Limit of lambda / sqrt(n)");
  eigen->add_option("--digits", cfg.digits, "Significant digits of the rational witness")->check(CLI::Range(1, 17));
  common(eigen);

  auto* bounds = app.add_subcommand("bounds", "All bounds at one (n, d)");
  bounds->add_option("--n", cfg.n)->required();
  bounds->add_option("--d", cfg.d)->required();
  bounds->add_option("--r-max", cfg.r_max, "Largest ball radius tried")->check(CLI::Range(1, 64));
  common(bounds);

  auto* table = app.add_subcommand("table", "Bound tables over several (n, d) or a sqrt(n) regime");
  table->add_option("--pairs", cfg.pairs, "n:d list (default 15:6,63:16,63:24)")->delimiter(',');
  table->add_option("--a", cfg.a, "Regime d = n/2 - a sqrt(n)");
  table->add_option("--n-list", cfg.n_list, "Lengths for --a")->delimiter(',');
  table->add_option("--r-max", cfg.r_max)->check(CLI::Range(1, 64));
  table->add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));
  common(table);

  auto* fourier = app.add_subcommand("fourier-verify", "Exact transform identities on random rational functions");
  fourier->add_option("--n-min", cfg.n_min);
  fourier->add_option("--n-max", cfg.n_max);
  fourier->add_option("--samples", cfg.samples);
  fourier->add_option("--seed", cfg.seed);
  common(fourier);

  auto* replay = app.add_subcommand("replay", "Numerical replay of the covering bound on a code");
  replay->add_option("--m", cfg.m);
  replay->add_option("--c", cfg.c);
  replay->add_option("--code", cfg.code, "Binary codewords, e.g. 000,111")->delimiter(',');
  replay->add_option("--r", cfg.r)->required();
  replay->add_option("--d", cfg.replay_d, "Distance to assume (default: measured)");
  common(replay);

  std::vector<const char*> argv{"hdcodes"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error[" << to_string(ErrorKind::InvalidParameters) << "]: " << e.what() << '\n';
    return kInvalidParameters;
  }

  try {
    if (cfg.out_path.empty()) return dispatch(app, cfg, out);
    std::filesystem::path path(cfg.out_path);
    if (const char* dir = std::getenv("HDC_OUTPUT_DIR"); dir && *dir && path.is_relative())
      path = std::filesystem::path(dir) / path;
    std::ostringstream buffer;
    const int code = dispatch(app, cfg, buffer);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    require(static_cast<bool>(file), ErrorKind::InvalidParameters, "cannot open " + path.string());
    file << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error[" << to_string(ErrorKind::InvalidParameters) << "]: " << e.what() << '\n';
    return kInvalidParameters;
  }
}

}  // namespace hdc::cli
