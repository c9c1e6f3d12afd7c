// Copyright 2026 The irscollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "irscollab/analysis.hpp"
#include "irscollab/irs_collab.hpp"
#include "irscollab/matrix_io.hpp"
#include "irscollab/spec_json.hpp"

namespace irscollab::cli {

namespace {

using nlohmann::json;

/// Bad file contents or unreadable paths; maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semantically invalid arguments; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

// Either code family behind one descriptor file.
struct LoadedCode {
  std::optional<IRSCode> irs;
  std::optional<GabidulinSetup> gab;

  const FieldSpec& field() const { return irs ? irs->inner().field() : gab->code.tower().ext(); }
  std::size_t n() const { return irs ? irs->inner().n() : gab->code.n(); }
  std::size_t k() const { return irs ? irs->inner().k() : gab->code.k(); }
  std::size_t d() const { return irs ? irs->inner().d() : gab->code.d(); }
  std::size_t l() const { return irs ? irs->l() : gab->l; }
};

LoadedCode load_code(const std::string& path) {
  const json j = load_json(path);
  try {
    LoadedCode c;
    if (is_gabidulin_spec(j)) {
      c.gab = gabidulin_from_json(j);
    } else {
      c.irs = code_from_json(j);
    }
    return c;
  } catch (const SpecError& e) {
    throw IoError(path + ": " + e.what());
  }
}

Matrix load_matrix(const std::string& path, const FieldSpec& field, std::size_t rows,
                   std::size_t cols) {
  Matrix m;
  try {
    m = read_matrix_file(path, field, cols);
  } catch (const ParseError& e) {
    throw IoError(e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  if (m.rows() != rows) {
    throw IoError(path + ": expected " + std::to_string(rows) + " rows, got " +
                  std::to_string(m.rows()));
  }
  return m;
}

// Writes to the file at path, or to out when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot write " + path);
  write(file);
  if (!file) throw IoError("write failed for " + path);
}

Rational parse_probability(const std::string& text) {
  Rational p;
  try {
    p = parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (p > 1) throw UsageError("probability above one: " + text);
  return p;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

const char* kCurveHeader = "p,fer_bound,fer_exact,fer_sim,ci_low,ci_high,trials";
const char* kFailureHeader = "f,l,bound,exact,estimate,ci_low,ci_high,trials,miscorrections";

std::string curve_row(const std::string& p, std::size_t n, std::size_t l, std::uint64_t q,
                      std::size_t d, const FailureEstimate* sim) {
  const Rational pr = parse_decimal(p);
  std::string row = p + "," + to_decimal(fer_bound(pr, n, l, q, d)) + "," +
                    to_decimal(fer_exact(pr, n, l, q, d)) + ",";
  if (sim) {
    const Interval ci = sim->wilson_ci();
    row += to_decimal(sim->estimate()) + "," + fmt_double(ci.low) + "," + fmt_double(ci.high) +
           "," + std::to_string(sim->trials);
  } else {
    row += ",,,0";
  }
  return row;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// --- subcommands ------------------------------------------------------------

struct Options {
  std::string code;
  std::string in;
  std::string out;
  std::string report;
  std::string errors_out;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint64_t trials = 1000;
  std::optional<std::size_t> rows;
  std::optional<std::string> row_prob;
  std::optional<std::size_t> rank;
  bool independent = false;
  bool verify = false;
  bool prime_subfield = false;
  bool irs = false;
  bool gab = false;
  std::size_t f = 0;
  std::size_t l = 0;
  std::uint64_t q = 0;
  std::optional<std::size_t> d;
  std::size_t m = 0;
  std::size_t n = 204;
  std::string f_list = "2";
  std::string p_list;
  double p_min = 1e-3;
  double p_max = 0.2;
  std::size_t points = 40;
};

int cmd_encode(const Options& o, std::ostream& out) {
  const LoadedCode code = load_code(o.code);
  const Matrix msg = load_matrix(o.in, code.field(), code.k(), code.l());
  const Matrix cw = code.irs ? code.irs->encode(msg) : code.gab->code.encode(msg);
  emit(o.out, out, [&](std::ostream& s) { write_matrix(s, cw); });
  return kExitOk;
}

int cmd_corrupt(const Options& o, std::ostream& out) {
  const LoadedCode code = load_code(o.code);
  const FieldSpec& field = code.field();
  const Matrix cw = load_matrix(o.in, field, code.n(), code.l());
  const int modes = int(o.rows.has_value()) + int(o.row_prob.has_value()) + int(o.rank.has_value());
  if (modes != 1) throw UsageError("choose exactly one of --rows, --row-prob, --rank");

  SplitMix64 rng(trial_seed(o.seed, 0));
  Matrix e(code.n(), code.l());
  auto random_row = [&](std::size_t r) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t t = 0; t < code.l(); ++t) {
        e(r, t) = static_cast<Symbol>(rng.uniform_below(field.size()));
        nonzero = nonzero || e(r, t) != 0;
      }
    }
  };
  if (o.rows) {
    const std::size_t f = *o.rows;
    if (f > code.n()) throw UsageError("more error rows than code positions");
    if (o.independent && f > code.l()) {
      throw UsageError("at most l rows can be linearly independent");
    }
    std::vector<std::size_t> idx(code.n());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < f; ++i) {
      std::swap(idx[i], idx[i + rng.uniform_below(code.n() - i)]);
    }
    do {
      for (std::size_t i = 0; i < f; ++i) random_row(idx[i]);
    } while (o.independent && rank(field, e) != f);
  } else if (o.row_prob) {
    const Rational p = parse_probability(*o.row_prob);
    const auto a = boost::multiprecision::numerator(p);
    const auto b = boost::multiprecision::denominator(p);
    if (b > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw UsageError("probability needs a shorter decimal expansion");
    }
    for (std::size_t r = 0; r < code.n(); ++r) {
      if (rng.bernoulli(a.convert_to<std::uint64_t>(), b.convert_to<std::uint64_t>())) random_row(r);
    }
  } else {
    if (!code.gab) throw UsageError("--rank needs a Gabidulin code");
    const TowerSpec& tw = code.gab->code.tower();
    if (*o.rank > std::min(code.n() * code.l(), std::size_t{tw.m()})) {
      throw UsageError("rank too large for this code");
    }
    e = sample_span_error(code.n(), code.l(), *o.rank, tw, rng);
  }
  const Matrix y = add(field, cw, e);
  emit(o.out, out, [&](std::ostream& s) { write_matrix(s, y); });
  if (!o.errors_out.empty()) emit(o.errors_out, out, [&](std::ostream& s) { write_matrix(s, e); });
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const LoadedCode code = load_code(o.code);
  const Matrix y = load_matrix(o.in, code.field(), code.n(), code.l());
  const DecodeOptions opts{o.verify};
  json report;
  std::optional<Matrix> corrected;
  DecodeCounters counters;
  if (code.irs) {
    const auto r = decode(*code.irs, y, opts);
    report["status"] = std::string(to_string(r.status));
    report["reason"] = std::string(to_string(r.reason));
    report["f_star"] = r.f_star ? json(*r.f_star) : json(nullptr);
    report["positions"] = r.error_positions;
    counters = r.counters;
    if (r.ok()) corrected = r.codeword;
  } else {
    const auto r = gab_decode(code.gab->code, code.l(), y, opts);
    report["status"] = std::string(to_string(r.status));
    report["reason"] = std::string(to_string(r.reason));
    report["f_star"] = r.f_star ? json(*r.f_star) : json(nullptr);
    report["positions"] = json::array();
    report["span_basis"] = r.span_basis;
    counters = r.counters;
    if (r.ok()) corrected = r.codeword;
  }
  const OpCounters total = counters.total();
  report["counters"] = {{"mul", total.mul}, {"add", total.add}, {"syndrome_rows", counters.syndrome_rows}};

  if (corrected && !o.out.empty()) {
    emit(o.out, out, [&](std::ostream& s) { write_matrix(s, *corrected); });
  }
  emit(o.report, out, [&](std::ostream& s) { s << report.dump() << '\n'; });
  return kExitOk;
}

int cmd_fmax(const Options& o, std::ostream& out) {
  if (o.l < 1 || !o.d || *o.d < 2) throw UsageError("fmax needs --l >= 1 and --d >= 2");
  out << f_max(o.l, *o.d) << '\n';
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.irs == o.gab) throw UsageError("choose exactly one of --irs, --gab");
  if (o.l < 1 || o.q < 2) throw UsageError("bound needs --l >= 1 and --q >= 2");
  Rational value;
  std::string symbolic;
  if (o.irs) {
    const std::size_t d = o.d.value_or(o.l + 2);
    value = p_fail_bound_irs(o.f, o.l, o.q, d);
    if (o.f >= 2 && o.f <= f_max(o.l, d)) {
      symbolic = std::to_string(o.q) + "^-" + std::to_string(o.l + 1 - o.f);
    }
  } else {
    if (o.m < 1 || !o.d) throw UsageError("--gab needs --m and --d");
    value = p_fail_bound_gab(o.f, o.l, o.q, o.m, *o.d);
    if (value != 0 && value != 1) {
      symbolic = "4*(" + std::to_string(o.q) + "^" + std::to_string(o.m) + ")^-" +
                 std::to_string(o.l + 1 - o.f);
    }
  }
  if (symbolic.empty()) symbolic = value == 0 ? "0" : "1";
  out << to_decimal(value) << ' ' << symbolic << '\n';
  return kExitOk;
}

std::vector<std::string> p_values(const Options& o) {
  if (!o.p_list.empty()) return split_list(o.p_list);
  if (!(o.p_min > 0) || !(o.p_max <= 1) || o.p_min > o.p_max || o.points < 2) {
    throw UsageError("need 0 < --p-min <= --p-max <= 1 and --points >= 2");
  }
  return log_grid(o.p_min, o.p_max, o.points);
}

int cmd_ferbound(const Options& o, std::ostream& out) {
  if (o.l < 1 || o.q < 2 || !o.d || o.n < 2) throw UsageError("ferbound needs --n, --l, --q, --d");
  const auto ps = p_values(o);
  for (const auto& p : ps) parse_probability(p);
  emit(o.out, out, [&](std::ostream& s) {
    s << kCurveHeader << '\n';
    for (const auto& p : ps) s << curve_row(p, o.n, o.l, o.q, *o.d, nullptr) << '\n';
  });
  return kExitOk;
}

MonteCarloOptions mc_options(const Options& o) {
  MonteCarloOptions mc;
  mc.seed = o.seed;
  mc.threads = o.threads;
  mc.verify = o.verify;
  mc.prime_subfield_errors = o.prime_subfield;
  return mc;
}

int cmd_simfail(const Options& o, std::ostream& out) {
  const LoadedCode code = load_code(o.code);
  std::vector<std::size_t> fs;
  for (const auto& item : split_list(o.f_list)) {
    try {
      fs.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad --f entry '" + item + "'");
    }
  }
  const MonteCarloOptions mc = mc_options(o);
  std::ostringstream csv;
  csv << kFailureHeader << '\n';
  for (auto f : fs) {
    FailureEstimate est;
    std::string bound, exact;
    if (code.irs) {
      if (f > code.n()) throw UsageError("f exceeds code length");
      const std::uint64_t q = o.prime_subfield ? code.field().characteristic() : code.field().size();
      est = mc_irs_failure(*code.irs, f, o.trials, mc);
      bound = to_decimal(p_fail_bound_irs(f, code.l(), q, code.d()));
      exact = to_decimal(p_dep_clipped(f, code.l(), q, code.d()));
    } else {
      const TowerSpec& tw = code.gab->code.tower();
      if (f > std::min(code.n() * code.l(), std::size_t{tw.m()})) {
        throw UsageError("f exceeds the largest possible error rank");
      }
      est = mc_gab_failure(code.gab->code, code.l(), f, o.trials, mc);
      bound = to_decimal(p_fail_bound_gab(f, code.l(), tw.q(), tw.m(), code.d()));
    }
    const Interval ci = est.wilson_ci();
    csv << f << ',' << code.l() << ',' << bound << ',' << exact << ','
        << to_decimal(est.estimate()) << ',' << fmt_double(ci.low) << ',' << fmt_double(ci.high)
        << ',' << est.trials << ',' << est.miscorrections << '\n';
  }
  emit(o.out, out, [&](std::ostream& s) { s << csv.str(); });
  return kExitOk;
}

int cmd_concat(const Options& o, std::ostream& out) {
  const LoadedCode code = load_code(o.code);
  if (!code.irs) throw UsageError("concat-sim needs an interleaved RS code");
  const auto ps = p_values(o);
  const MonteCarloOptions mc = mc_options(o);
  const std::uint64_t q = code.field().size();
  std::ostringstream csv;
  csv << kCurveHeader << '\n';
  for (const auto& p : ps) {
    const FailureEstimate est = concat_channel_sim(*code.irs, parse_probability(p), o.trials, mc);
    csv << curve_row(p, code.n(), code.l(), q, code.d(), &est) << '\n';
  }
  emit(o.out, out, [&](std::ostream& s) { s << csv.str(); });
  return kExitOk;
}

int cmd_fig1(const Options& o, std::ostream& out) {
  const auto ps = p_values(o);
  std::ostringstream csv;
  csv << "l," << kCurveHeader << '\n';
  for (std::size_t l = 9; l <= 15; ++l) {
    for (const auto& p : ps) csv << l << ',' << curve_row(p, 204, l, 256, 17, nullptr) << '\n';
  }
  emit(o.out, out, [&](std::ostream& s) { s << csv.str(); });
  return kExitOk;
}

}  // namespace

std::vector<std::string> log_grid(double lo, double hi, std::size_t points) {
  std::vector<std::string> out;
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = points == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::pow(10.0, x));
    if (out.empty() || out.back() != buf) out.emplace_back(buf);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collaborative decoding of interleaved Reed-Solomon and Gabidulin codes", "irscollab"};
  app.require_subcommand(1);
  Options o;

  auto* encode_cmd = app.add_subcommand("encode", "Encode a k x l message matrix");
  encode_cmd->add_option("--code", o.code, "Code descriptor (JSON)")->required();
  encode_cmd->add_option("--in", o.in, "Message matrix file")->required();
  encode_cmd->add_option("--out", o.out, "Output file (default stdout)");

  auto* corrupt_cmd = app.add_subcommand("corrupt", "Add a seeded random error");
  corrupt_cmd->add_option("--code", o.code)->required();
  corrupt_cmd->add_option("--in", o.in, "Codeword matrix file")->required();
  corrupt_cmd->add_option("--out", o.out);
  corrupt_cmd->add_option("--rows", o.rows, "Corrupt exactly this many rows");
  corrupt_cmd->add_flag("--independent", o.independent, "Make the error rows linearly independent");
  corrupt_cmd->add_option("--row-prob", o.row_prob, "Corrupt each row with this probability");
  corrupt_cmd->add_option("--rank", o.rank, "Gabidulin error of this rank");
  corrupt_cmd->add_option("--errors-out", o.errors_out, "Also write the error matrix");
  corrupt_cmd->add_option("--seed", o.seed);

  auto* decode_cmd = app.add_subcommand("decode", "Decode a received matrix");
  decode_cmd->add_option("--code", o.code)->required();
  decode_cmd->add_option("--in", o.in, "Received matrix file")->required();
  decode_cmd->add_option("--out", o.out, "Corrected matrix file, written on success");
  decode_cmd->add_option("--report", o.report, "JSON report file (default stdout)");
  decode_cmd->add_flag("--verify", o.verify, "Check the full syndrome of the result");

  auto* fmax_cmd = app.add_subcommand("fmax", "Collaborative decoding radius");
  fmax_cmd->add_option("--l", o.l)->required();
  fmax_cmd->add_option("--d", o.d)->required();

  auto* bound_cmd = app.add_subcommand("bound", "Failure-probability bound for f errors");
  bound_cmd->add_flag("--irs", o.irs);
  bound_cmd->add_flag("--gab", o.gab);
  bound_cmd->add_option("--f", o.f)->required();
  bound_cmd->add_option("--l", o.l)->required();
  bound_cmd->add_option("--q", o.q)->required();
  bound_cmd->add_option("--d", o.d, "Minimum distance (IRS default: l + 2)");
  bound_cmd->add_option("--m", o.m, "Extension degree (Gabidulin)");

  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p_list, "Comma-separated probabilities");
    cmd->add_option("--p-min", o.p_min);
    cmd->add_option("--p-max", o.p_max);
    cmd->add_option("--points", o.points);
    cmd->add_option("--out", o.out);
  };

  auto* fer_cmd = app.add_subcommand("ferbound", "Frame error rate bound curve (CSV)");
  fer_cmd->add_option("--n", o.n, "Code length");
  fer_cmd->add_option("--l", o.l)->required();
  fer_cmd->add_option("--q", o.q)->required();
  fer_cmd->add_option("--d", o.d)->required();
  add_grid(fer_cmd);

  auto add_mc = [&](CLI::App* cmd) {
    cmd->add_option("--code", o.code)->required();
    cmd->add_option("--trials", o.trials);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    cmd->add_flag("--verify", o.verify);
  };

  auto* sim_cmd = app.add_subcommand("simfail", "Monte Carlo failure rates (CSV)");
  add_mc(sim_cmd);
  sim_cmd->add_option("--f", o.f_list, "Comma-separated error counts or ranks");
  sim_cmd->add_flag("--prime-subfield", o.prime_subfield, "Draw errors from the prime subfield");
  sim_cmd->add_option("--out", o.out);

  auto* concat_cmd = app.add_subcommand("concat-sim", "Idealized concatenated channel (CSV)");
  add_mc(concat_cmd);
  add_grid(concat_cmd);

  auto* fig1_cmd = app.add_subcommand("fig1", "Bound curves for l = 9..15 on the (204,188) code");
  add_grid(fig1_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(o, out);
    if (corrupt_cmd->parsed()) return cmd_corrupt(o, out);
    if (decode_cmd->parsed()) return cmd_decode(o, out);
    if (fmax_cmd->parsed()) return cmd_fmax(o, out);
    if (bound_cmd->parsed()) return cmd_bound(o, out);
    if (fer_cmd->parsed()) return cmd_ferbound(o, out);
    if (sim_cmd->parsed()) return cmd_simfail(o, out);
    if (concat_cmd->parsed()) return cmd_concat(o, out);
    if (fig1_cmd->parsed()) return cmd_fig1(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace irscollab::cli
