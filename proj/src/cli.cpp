#include "prudent/cli.hpp"

#include "prudent/asymptotics.hpp"
#include "prudent/errors.hpp"
#include "prudent/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace prudent::cli {

namespace {

struct Cell {
  enum Kind { integer, real, text } kind;
  std::string value;
};

Cell int_cell(const BigInt& z) { return {Cell::integer, z.get_str()}; }
Cell int_cell(long z) { return {Cell::integer, std::to_string(z)}; }
Cell real_cell(const Real& x, int digits) { return {Cell::real, format_real(x, digits)}; }
Cell text_cell(std::string s) { return {Cell::text, std::move(s)}; }

struct Table {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json, text };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.config) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i].value);
    os << "\n";
  }
}

// Integers beyond 64 bits and all non-numeric cells are strings; reals are
// doubles (the CSV form keeps every digit).
void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.config) j["config"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : r) {
      switch (c.kind) {
        case Cell::integer: {
          BigInt z(c.value);
          if (z.fits_slong_p())
            row.push_back(z.get_si());
          else
            row.push_back(c.value);
          break;
        }
        case Cell::real: row.push_back(std::strtod(c.value.c_str(), nullptr)); break;
        case Cell::text: row.push_back(c.value); break;
      }
    }
    j["rows"].push_back(std::move(row));
  }
  os << j.dump(2) << "\n";
}

// Two-column tables print as "name = value"; wider ones as aligned columns.
void write_text(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.config) os << "# " << k << ": " << v << "\n";
  if (t.columns.size() == 2) {
    for (const auto& r : t.rows) os << r[0].value << " = " << r[1].value << "\n";
    return;
  }
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].value.size());
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::string s = get(i);
      os << (i ? "  " : "") << s;
      if (i + 1 < w.size()) os << std::string(w[i] - s.size(), ' ');
    }
    os << "\n";
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& r : t.rows) line([&](std::size_t i) { return r[i].value; });
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int default_digits() {
  const char* env = std::getenv(kDigitsEnv);
  if (!env || !*env) return 40;
  char* end = nullptr;
  long d = std::strtol(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string(kDigitsEnv) + " must be an integer, got '" + env + "'");
  if (d < 5 || d > 5000) throw UsageError(std::string(kDigitsEnv) + " must lie in [5, 5000]");
  return static_cast<int>(d);
}

struct Options {
  std::string format = "csv";
  bool format_set = false;
  std::string output = "-";
  bool no_timestamp = false;
  int digits = 40;
  int k = 3;
  int max_area = 10;
  std::optional<std::string> method;
  bool serial = false;
  int harmonics = 3;
  std::string q;
  std::string methods;
  int max_n = 512;
  int terms = 5;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Table run_enumerate(const Options& o) {
  Table t;
  t.config = {{"k", std::to_string(o.k)}, {"max_area", std::to_string(o.max_area)}};
  if (o.max_area < 1) throw UsageError("--max-area must be >= 1");
  CountTable c;
  if (o.k == 3) {
    c = pa3_series(o.max_area, parse_pa3_method(o.method.value_or("theorem")));
  } else {
    if (o.method) throw UsageError("--method applies to k = 3 only");
    c = count_series(o.k, o.max_area);
  }
  t.config.push_back({"method", c.method});
  t.columns = {"n", "count"};
  for (int n = 1; n <= c.max_area(); ++n) t.rows.push_back({int_cell(n), int_cell(c.counts[n])});
  return t;
}

Table run_oracle(const Options& o) {
  Table t;
  t.config = {{"k", std::to_string(o.k)}, {"max_area", std::to_string(o.max_area)},
              {"parallel", o.serial ? "false" : "true"}};
  OracleOptions opts;
  opts.parallel = !o.serial;
  CountTable c = enumerate_prudent_polygons(o.k, o.max_area, opts);
  t.columns = {"n", "count"};
  for (int n = 1; n <= c.max_area(); ++n) t.rows.push_back({int_cell(n), int_cell(c.counts[n])});
  return t;
}

Table run_verify(const Options& o, bool& mismatch) {
  Table t;
  t.config = {{"k", std::to_string(o.k)}, {"max_area", std::to_string(o.max_area)}};
  OracleOptions opts;
  opts.parallel = !o.serial;
  CountTable brute = enumerate_prudent_polygons(o.k, o.max_area, opts);
  CountTable series = count_series(o.k, o.max_area);
  t.config.push_back({"series_method", series.method});
  t.columns = {"n", "oracle", "series", "verdict"};
  mismatch = false;
  for (int n = 1; n <= o.max_area; ++n) {
    bool ok = brute.counts[n] == series.counts[n];
    mismatch = mismatch || !ok;
    t.rows.push_back({int_cell(n), int_cell(brute.counts[n]), int_cell(series.counts[n]),
                      text_cell(ok ? "MATCH" : "MISMATCH")});
  }
  return t;
}

Table run_constants(const Options& o, const NumericContext& ctx) {
  if (o.harmonics < 1) throw UsageError("--harmonics must be >= 1");
  const int D = o.digits;
  Table t;
  t.config = {{"harmonics", std::to_string(o.harmonics)}};
  t.columns = {"name", "value"};
  auto add = [&](const std::string& name, const Real& x) { t.rows.push_back({text_cell(name), real_cell(x, D)}); };
  add("kappa0", real(kappa(0, ctx)));
  for (int k = 1; k <= o.harmonics; ++k) {
    Complex c = kappa(k, ctx);
    add("kappa" + std::to_string(k) + "_re", real(c));
    add("kappa" + std::to_string(k) + "_im", imag(c));
  }
  Amplitude a = amplitude(ctx, o.harmonics);
  add("two_abs_kappa1", a.two_abs_kappa1);
  add("max_abs_kappa_u", a.max_abs_kappa_u);
  add("g", critical_exponent());
  add("gamma0", gamma0());
  auto z = poles(8, ctx);
  for (std::size_t i = 0; i < z.size(); ++i) add("pole" + std::to_string(i + 1), z[i]);
  add("U_half", real(U_eval(Complex(Real(1) / 2), ctx)));
  return t;
}

Table run_gf_check(const Options& o, const NumericContext& ctx) {
  auto names = split(o.methods, ',');
  if (names.size() != 2) throw UsageError("--methods takes exactly two comma-separated routes");
  GfMethod m1 = parse_gf_method(names[0]), m2 = parse_gf_method(names[1]);
  Complex q = parse_complex(o.q);
  Table t;
  t.config = {{"q", o.q}, {"methods", o.methods}};
  Complex v1 = gf_eval(q, m1, ctx), v2 = gf_eval(q, m2, ctx);
  Complex d = v1 - v2;
  const int D = o.digits;
  t.columns = {"quantity", "re", "im"};
  t.rows.push_back({text_cell(to_string(m1)), real_cell(real(v1), D), real_cell(imag(v1), D)});
  t.rows.push_back({text_cell(to_string(m2)), real_cell(real(v2), D), real_cell(imag(v2), D)});
  t.rows.push_back({text_cell("difference"), real_cell(real(d), D), real_cell(imag(d), D)});
  t.rows.push_back({text_cell("abs_difference"), real_cell(abs(d), D), real_cell(Real(0), D)});
  return t;
}

Table run_residuals(const Options& o, const NumericContext& ctx) {
  Table t;
  t.config = {{"max_n", std::to_string(o.max_n)}, {"terms", std::to_string(o.terms)}, {"source", "float"}};
  ResidualTable r = residuals(o.max_n, o.terms, ctx);
  t.columns = {"n", "log2n", "scaled", "residual"};
  for (const auto& row : r.rows)
    t.rows.push_back({int_cell(row.n), real_cell(row.log2n, o.digits), real_cell(row.scaled, o.digits),
                      real_cell(row.residual, o.digits)});
  return t;
}

Table run_fit(const Options& o) {
  if (o.k != 3 && o.k != 4) throw UsageError("fit supports k = 3 or 4");
  if (o.max_n < 8) throw UsageError("--max-n must be >= 8");
  Table t;
  t.config = {{"k", std::to_string(o.k)}, {"max_n", std::to_string(o.max_n)}};
  CountTable c = count_series(o.k, o.max_n);
  Real fitted = exponent_fit(c);
  Real ref = critical_exponent() + (o.k == 4 ? 1 : 0);
  t.columns = {"name", "value"};
  t.rows.push_back({text_cell("fitted_exponent"), real_cell(fitted, o.digits)});
  t.rows.push_back({text_cell(o.k == 3 ? "log2_3" : "one_plus_log2_3"), real_cell(ref, o.digits)});
  t.rows.push_back({text_cell("difference"), real_cell(fitted - ref, o.digits)});
  return t;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.digits = default_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Counting and asymptotics of prudent polygons", "prudent"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("-o,--output", o.output, "Output file, - for standard output");
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp header field");
  app.add_option("--digits", o.digits, "Significant decimal digits (default from PRUDENT_DIGITS or 40)")
      ->check(CLI::Range(5, 5000));

  auto add_k = [&](CLI::App* s, const std::string& range) {
    s->add_option("--k", o.k, "Number of sides (" + range + ")")->required();
  };

  auto* en = app.add_subcommand("enumerate", "Exact counts from the generating functions");
  add_k(en, "2, 3 or 4");
  en->add_option("--max-area", o.max_area, "Largest area")->required();
  en->add_option("--method", o.method, "3-sided route: theorem, functional or meromorphic");

  auto* orc = app.add_subcommand("oracle", "Brute-force counts by walk enumeration");
  add_k(orc, "2, 3 or 4");
  orc->add_option("--max-area", o.max_area, "Largest area (at most 10)")->required();
  orc->add_flag("--serial", o.serial, "Run the serial reference search");

  auto* ver = app.add_subcommand("verify", "Oracle against series with a MATCH/MISMATCH column");
  add_k(ver, "2, 3 or 4");
  ver->add_option("--max-area", o.max_area, "Largest area (at most 10)")->required();
  ver->add_flag("--serial", o.serial, "Run the serial reference search");

  auto* con = app.add_subcommand("constants", "Amplitudes, exponents, poles and U(1/2)");
  con->add_option("--harmonics", o.harmonics, "Number of kappa_k harmonics");

  auto* gfc = app.add_subcommand("gf-check", "Evaluate PA(q) by two routes and compare");
  gfc->add_option("--q", o.q, "Point, e.g. 0.45 or 0.485+0.026i or 0.485,0.026")->required();
  gfc->add_option("--methods", o.methods, "Two of taylor, meromorphic, doublesum, singular")->required();

  auto* res = app.add_subcommand("residuals", "Scaled counts and residuals against the expansion");
  res->add_option("--max-n", o.max_n, "Largest n")->required();
  res->add_option("--terms", o.terms, "Number of expansion terms, 0 to 5");

  auto* fit = app.add_subcommand("fit", "Least-squares exponent of the counts");
  add_k(fit, "3 or 4");
  fit->add_option("--max-n", o.max_n, "Largest n")->required();

  for (auto* s : {en, orc, ver, con, gfc, res, fit}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.format_set = app.count("--format") > 0;

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Format fmt = Format::csv;
  if (o.format == "json") fmt = Format::json;
  if (o.format == "text" || (!o.format_set && name == "constants")) fmt = Format::text;

  NumericContext ctx;
  ctx.precision.digits = o.digits;
  PrecisionScope scope(ctx.precision);

  int status = kOk;
  Table t;
  try {
    if (name == "enumerate") t = run_enumerate(o);
    else if (name == "oracle") t = run_oracle(o);
    else if (name == "verify") {
      bool mismatch = false;
      t = run_verify(o, mismatch);
      if (mismatch) status = kMismatch;
    } else if (name == "constants") t = run_constants(o, ctx);
    else if (name == "gf-check") t = run_gf_check(o, ctx);
    else if (name == "residuals") t = run_residuals(o, ctx);
    else t = run_fit(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::vector<std::pair<std::string, std::string>> header{{"subcommand", name}};
  header.insert(header.end(), t.config.begin(), t.config.end());
  header.push_back({"digits", std::to_string(o.digits)});
  header.push_back({"format", fmt == Format::csv ? "csv" : fmt == Format::json ? "json" : "text"});
  header.push_back({"output", o.output});
  if (!o.no_timestamp) header.push_back({"timestamp", utc_timestamp()});
  t.config = std::move(header);

  std::ofstream file;
  std::ostream* os = &out;
  if (o.output != "-") {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open output file '" << o.output << "'\n";
      return kUsage;
    }
    os = &file;
  }
  switch (fmt) {
    case Format::csv: write_csv(t, *os); break;
    case Format::json: write_json(t, *os); break;
    case Format::text: write_text(t, *os); break;
  }
  os->flush();
  if (status == kMismatch) err << "verify: oracle and series disagree\n";
  return status;
}

}  // namespace prudent::cli
