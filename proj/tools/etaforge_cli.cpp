// etaforge command-line front end.
#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "etaforge/errors.hpp"
#include "etaforge/json_io.hpp"

using namespace etaforge;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInconsistent = 3;

struct Flags {
  std::string config, out, format = "json", conventions;
  std::string preset, degree, r, eps, r0, r1, M;
  int genus = 0, m = 1, threads = 0;
  bool unreduced = false;
  long h00 = 0, kMin = 0, kMax = 0;
  std::string sweepStart, sweepStop, sweepStep, sweepParam = "r";
  // measure
  int n = 0;
  std::vector<double> lambdas, ts, supports;
  // identities
  std::vector<int> dims;
  std::vector<int> powers;
  std::vector<std::string> deltas;
};

// Parsed run description after merging config and flags (flags win).
struct Run {
  json geometryDesc;
  json hodgeDesc;
  json dolbeaultDesc;  // null when absent
  json params;         // r, eps, r0, r1, kMin, kMax as given
  json sweep;          // null or {param, start, stop, step}
  std::string format = "json";
  ConventionSet conv;
  std::string conventionsSource = "calibrated";
};

/// Carries an already-built output document and exit code out of a command.
struct Halt {
  int code;
  json doc;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

bool given(const CLI::App& app, const std::string& name) {
  const CLI::App* a = &app;
  while (a) {
    try {
      if (a->get_option(name)->count() > 0) return true;
    } catch (const CLI::OptionNotFound&) {
    }
    a = a->get_parent();
  }
  return false;
}

Run build_run(const CLI::App& app, const Flags& f) {
  json cfg = f.config.empty() ? json::object() : read_json_file(f.config);
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  Run run;
  run.geometryDesc = cfg.value("geometry", json{{"preset", "surface"}, {"genus", 0}, {"degree", 1}});
  auto& g = run.geometryDesc;
  if (given(app, "--preset")) {
    if (g.value("preset", std::string()) != f.preset) g = json::object();
    g["preset"] = f.preset;
  }
  if (given(app, "--genus")) g["genus"] = f.genus;
  if (given(app, "--degree")) g["degree"] = f.degree;
  if (given(app, "--m")) g["m"] = f.m;

  run.hodgeDesc = cfg.value("hodge", json::object());
  if (given(app, "--h00")) run.hodgeDesc["h00"] = f.h00;

  run.dolbeaultDesc = cfg.value("dolbeault", json());
  if (given(app, "--M")) {
    if (run.dolbeaultDesc.is_null()) run.dolbeaultDesc = json::object();
    run.dolbeaultDesc["M"] = f.M;
  }

  run.params = json::object();
  for (const char* key : {"r", "eps", "r0", "r1", "kMin", "kMax"})
    if (cfg.contains(key)) run.params[key] = cfg[key];
  if (given(app, "--r")) run.params["r"] = f.r;
  if (given(app, "--eps")) run.params["eps"] = f.eps;
  if (given(app, "--r0")) run.params["r0"] = f.r0;
  if (given(app, "--r1")) run.params["r1"] = f.r1;
  if (given(app, "--k-min")) run.params["kMin"] = f.kMin;
  if (given(app, "--k-max")) run.params["kMax"] = f.kMax;

  run.sweep = cfg.value("sweep", json());
  if (given(app, "--sweep-start") || given(app, "--sweep-stop") || given(app, "--sweep-step")) {
    if (!(given(app, "--sweep-start") && given(app, "--sweep-stop") && given(app, "--sweep-step")))
      throw UsageError("--sweep-start, --sweep-stop and --sweep-step go together");
    run.sweep = json{{"param", f.sweepParam}, {"start", f.sweepStart}, {"stop", f.sweepStop}, {"step", f.sweepStep}};
  }

  run.format = cfg.value("format", std::string("json"));
  if (given(app, "--format")) run.format = f.format;
  if (run.format != "json" && run.format != "csv") throw UsageError("--format must be json or csv");

  if (!f.conventions.empty()) {
    run.conv = io::conventions_from_json(read_json_file(f.conventions));
    run.conventionsSource = f.conventions;
  } else if (cfg.contains("conventions")) {
    run.conv = io::conventions_from_json(cfg["conventions"]);
    run.conventionsSource = "config";
  } else {
    run.conv = default_conventions();
  }
  return run;
}

Rational need_rational(const Run& run, const char* key) {
  if (!run.params.contains(key)) throw UsageError(std::string("missing parameter --") + key);
  return io::rational_from_json(run.params[key]);
}

long need_long(const Run& run, const char* key, long fallback) {
  if (!run.params.contains(key)) return fallback;
  const json& v = run.params[key];
  if (v.is_number_integer()) return v.get<long>();
  return io::rational_from_json(v).to_long();
}

struct Context {
  Geometry geometry;
  std::optional<HodgeProvider> hodge;
  std::optional<DolbeaultProvider> dolbeault;
};

Context build_context(const Run& run) {
  Context ctx;
  ctx.geometry = io::geometry_from_json(run.geometryDesc);
  ctx.hodge = io::hodge_from_json(run.hodgeDesc, run.geometryDesc, ctx.geometry);
  if (!run.dolbeaultDesc.is_null()) ctx.dolbeault = io::dolbeault_from_json(run.dolbeaultDesc);
  return ctx;
}

json envelope(const std::string& command, const Run& run, const Context* ctx) {
  json doc{{"schema", io::kSchema}, {"command", command}};
  json input{{"params", run.params}, {"conventionsSource", run.conventionsSource}};
  if (ctx) input["geometry"] = io::to_json(ctx->geometry);
  if (!run.sweep.is_null()) input["sweep"] = run.sweep;
  doc["input"] = input;
  return doc;
}

std::vector<Rational> sweep_values(const json& sweep) {
  const Rational start = io::rational_from_json(sweep.at("start"));
  const Rational stop = io::rational_from_json(sweep.at("stop"));
  const Rational step = io::rational_from_json(sweep.at("step"));
  if (step.sign() <= 0) throw UsageError("sweep step must be positive");
  if (stop < start) throw UsageError("sweep stop precedes start");
  const Rational count = (stop - start) / step;
  if (count > Rational(100000)) throw UsageError("sweep has more than 100000 entries");
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

/// Runs job(i) for i in [0, n) on up to `threads` workers; results stay in index order.
std::vector<json> run_indexed(size_t n, int threads, const std::function<json(size_t)>& job) {
  std::vector<json> results(n);
  std::vector<std::exception_ptr> errors(n);
  const size_t workers = std::max<size_t>(1, std::min<size_t>(n, threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        results[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);  // lowest index first
  return results;
}

// ---------------------------------------------------------------- CSV

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_null()) s = "";
  else s = v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

void flatten(const json& v, const std::string& prefix, std::map<std::string, json>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out[prefix] = v;
  }
}

std::string to_csv(const json& rows) {
  std::vector<std::map<std::string, json>> flat;
  std::set<std::string> cols;
  for (const auto& row : rows) {
    std::map<std::string, json> f;
    flatten(row, "", f);
    for (const auto& [k, _] : f) cols.insert(k);
    flat.push_back(std::move(f));
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& c : cols) {
    os << (first ? "" : ",") << csv_cell(c);
    first = false;
  }
  os << "\n";
  for (const auto& f : flat) {
    first = true;
    for (const auto& c : cols) {
      auto it = f.find(c);
      os << (first ? "" : ",") << (it == f.end() ? "" : csv_cell(it->second));
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- commands

json eta_record(const Rational& value, const ConventionSet& conv, bool validity, const std::string& caveat) {
  json out{{"value", io::to_json(value)},
           {"valueDecimal", value.to_double()},
           {"conventions", io::to_json(conv)},
           {"validityFlag", validity}};
  if (!caveat.empty()) out["caveat"] = caveat;
  return out;
}

std::pair<bool, std::string> provider_validity(const Context& ctx, const Rational& eps) {
  if (!ctx.dolbeault) return {false, "no Dolbeault lower bound M supplied; eps/8 < M not attested"};
  if (validate_epsilon(eps, *ctx.dolbeault)) return {true, ""};
  return {false, "eps/8 >= M = " + ctx.dolbeault->M().str() + ": type-2 eigenvalues may cross zero"};
}

json eta_point(const std::string& mode, const Context& ctx, const ConventionSet& conv, const Rational& r,
               const Rational& eps, bool unreduced) {
  const DolbeaultProvider* dp = ctx.dolbeault ? &*ctx.dolbeault : nullptr;
  json rec;
  if (mode == "exact") {
    rec = io::to_json(exact_eta(ctx.geometry, *ctx.hodge, r, eps, conv, dp));
    if (unreduced) {
      const long h = kernel_dimension(ctx.geometry, *ctx.hodge, r, eps);
      rec["kernelDimension"] = h;
      rec["unreduced"] = io::to_json(io::rational_from_json(rec["value"]) - Rational(h, 2));
    }
  } else if (mode == "asymptotic") {
    auto [ok, why] = provider_validity(ctx, eps);
    rec = eta_record(asymptotic_eta(ctx.geometry, *ctx.hodge, r, eps, conv), conv, ok, why);
    rec["remainder"] = "O(1) in r, not included";
  } else {  // adiabatic: independent of eps
    rec = eta_record(adiabatic_limit(ctx.geometry, *ctx.hodge, r, conv), conv, true, "");
  }
  rec["r"] = io::to_json(r);
  if (mode != "adiabatic") rec["eps"] = io::to_json(eps);
  return rec;
}

json cmd_eta(const std::string& mode, const Run& run, const Flags& f) {
  Context ctx = build_context(run);
  json doc = envelope("eta " + mode, run, &ctx);
  if (mode == "aps-check") {
    const Rational r0 = need_rational(run, "r0"), r1 = need_rational(run, "r1"), eps = need_rational(run, "eps");
    const DolbeaultProvider* dp = ctx.dolbeault ? &*ctx.dolbeault : nullptr;
    auto chk = aps_difference_check(ctx.geometry, *ctx.hodge, r0, r1, eps, run.conv, dp);
    auto [ok, why] = provider_validity(ctx, eps);
    json res = io::to_json(chk);
    res["r0"] = io::to_json(r0);
    res["r1"] = io::to_json(r1);
    res["eps"] = io::to_json(eps);
    res["conventions"] = io::to_json(run.conv);
    res["validityFlag"] = ok;
    if (!why.empty()) res["caveat"] = why;
    doc["result"] = res;
    doc["rows"] = json::array({res});
    if (!chk.pass) throw Halt{kExitInconsistent, doc};
    return doc;
  }
  if (run.sweep.is_null()) {
    const Rational r = need_rational(run, "r");
    const Rational eps = mode == "adiabatic" && !run.params.contains("eps") ? Rational(1) : need_rational(run, "eps");
    doc["result"] = eta_point(mode, ctx, run.conv, r, eps, f.unreduced);
    doc["rows"] = json::array({doc["result"]});
    return doc;
  }
  const std::string param = run.sweep.value("param", std::string("r"));
  if (param != "r" && param != "eps") throw UsageError("sweep param must be r or eps");
  auto values = sweep_values(run.sweep);
  const Rational fixedR = param == "r" ? Rational(0) : need_rational(run, "r");
  const Rational fixedEps =
      param == "eps" ? Rational(0) : (mode == "adiabatic" && !run.params.contains("eps") ? Rational(1) : need_rational(run, "eps"));
  auto results = run_indexed(values.size(), f.threads, [&](size_t i) {
    json rec = param == "r" ? eta_point(mode, ctx, run.conv, values[i], fixedEps, f.unreduced)
                            : eta_point(mode, ctx, run.conv, fixedR, values[i], f.unreduced);
    rec["index"] = i;
    return rec;
  });
  doc["results"] = results;
  doc["rows"] = results;
  return doc;
}

json cmd_spectrum(const Run& run, const Flags&) {
  Context ctx = build_context(run);
  json doc = envelope("spectrum", run, &ctx);
  const Rational r = need_rational(run, "r"), eps = need_rational(run, "eps");
  const KRange kr{need_long(run, "kMin", -5), need_long(run, "kMax", 5)};
  if (kr.kMin > kr.kMax) throw UsageError("--k-min exceeds --k-max");
  const DolbeaultProvider* dp = ctx.dolbeault ? &*ctx.dolbeault : nullptr;
  auto recs = dirac_spectrum(ctx.geometry, *ctx.hodge, r, eps, kr, dp);
  json arr = json::array();
  for (const auto& rec : recs) arr.push_back(io::to_json(rec));
  auto [ok, why] = provider_validity(ctx, eps);
  json res{{"records", arr},
           {"kernelDimension", kernel_dimension(ctx.geometry, *ctx.hodge, r, eps)},
           {"kMin", kr.kMin},
           {"kMax", kr.kMax},
           {"validityFlag", ok}};
  if (!why.empty()) res["caveat"] = why;
  doc["result"] = res;
  doc["rows"] = arr;
  return doc;
}

json cmd_flow(const Run& run, const Flags&) {
  Context ctx = build_context(run);
  json doc = envelope("flow", run, &ctx);
  const Rational eps = need_rational(run, "eps");
  json res = json::object();
  json rows = json::array();
  bool mismatch = false;
  if (run.params.contains("r")) {
    const Rational r = need_rational(run, "r");
    const long closed = flow_in_delta_closed(ctx.geometry, *ctx.hodge, r, eps);
    auto oracle = flow_in_delta_oracle(ctx.geometry, *ctx.hodge, r, eps);
    mismatch = closed != oracle.net;
    res["delta"] = json{{"r", io::to_json(r)}, {"closed", closed}, {"oracle", io::to_json(oracle)}, {"agree", !mismatch}};
    for (const auto& c : oracle.crossings)
      rows.push_back({{"family", "delta"}, {"parameterValue", io::to_json(c.parameterValue)}, {"k", c.k},
                      {"p", c.p}, {"multiplicity", c.multiplicity}, {"direction", c.direction}});
  }
  if (run.params.contains("r0") || run.params.contains("r1")) {
    const Rational r0 = need_rational(run, "r0"), r1 = need_rational(run, "r1");
    auto s = flow_in_s_oracle(ctx.geometry, *ctx.hodge, r0, r1, eps);
    res["s"] = json{{"r0", io::to_json(r0)}, {"r1", io::to_json(r1)}, {"oracle", io::to_json(s)}};
    for (const auto& c : s.crossings)
      rows.push_back({{"family", "s"}, {"parameterValue", io::to_json(c.parameterValue)}, {"k", c.k}, {"p", c.p},
                      {"multiplicity", c.multiplicity}, {"direction", c.direction}});
  }
  if (res.empty()) throw UsageError("flow needs --r (delta flow) and/or --r0/--r1 (s flow)");
  doc["result"] = res;
  doc["rows"] = rows;
  if (mismatch) {
    doc["error"] = json{{"kind", "FlowMismatch"}, {"message", "closed-form delta flow disagrees with the crossing count"}};
    throw Halt{kExitInconsistent, doc};
  }
  return doc;
}

json cmd_measure(const Run& run, const Flags& f) {
  json doc = envelope("measure check", run, nullptr);
  std::vector<ModelPoint> pts;
  if (f.n > 0) {
    pts.push_back(ModelPoint{f.n, f.lambdas});
  } else {
    pts = {ModelPoint{1, {}}, ModelPoint{3, {1.0}}, ModelPoint{5, {1.0, 2.0}}};
  }
  const std::vector<double> ts = f.ts.empty() ? std::vector<double>{0.5, 1.0, 2.0} : f.ts;
  const std::vector<double> sup = f.supports.empty() ? std::vector<double>{0.25, 1.0 / 16, 1.0 / 64} : f.supports;
  constexpr double tol = 1e-6;
  json laplace = json::array(), near = json::array(), rows = json::array();
  bool pass = true;
  for (const auto& pt : pts) {
    pt.validate();
    json lam = pt.lambdas;
    for (double t : ts) {
      json rec = io::to_json(laplace_check(pt, t));
      rec["n"] = pt.n;
      rec["lambdas"] = lam;
      rec["t"] = t;
      rec["tolerance"] = tol;
      rec["pass"] = rec["relError"].get<double>() < tol;
      pass = pass && rec["pass"].get<bool>();
      laplace.push_back(rec);
      json row = rec;
      row["check"] = "laplace";
      row["lambdas"] = lam.dump();
      rows.push_back(row);
    }
    for (double e : sup) {
      json rec = io::to_json(near_zero_bound(pt, e));
      rec["n"] = pt.n;
      rec["lambdas"] = lam;
      rec["epsSupport"] = e;
      near.push_back(rec);
      json row = rec;
      row["check"] = "nearZero";
      row["lambdas"] = lam.dump();
      rows.push_back(row);
    }
  }
  doc["result"] = json{{"laplace", laplace}, {"nearZero", near}, {"pass", pass}};
  doc["rows"] = rows;
  if (!pass) throw Halt{kExitInconsistent, doc};
  return doc;
}

json cmd_identities(const Run& run, const Flags& f) {
  json doc = envelope("identities run", run, nullptr);
  const std::vector<int> dims = f.dims.empty() ? std::vector<int>{1, 2, 3} : f.dims;
  const std::vector<int> powers = f.powers.empty() ? std::vector<int>{2, 4} : f.powers;
  std::vector<Rational> deltas;
  for (const auto& d : f.deltas) deltas.push_back(Rational::parse(d));
  if (deltas.empty()) deltas = {Rational(0), Rational(1, 3), Rational(1)};
  json suites = json::array(), rows = json::array();
  bool pass = true;
  auto add = [&](json entry, const IdentityReport& rep) {
    json r = io::to_json(rep);
    pass = pass && rep.all_pass();
    for (const auto& c : r["checks"]) {
      json row = entry;
      row["name"] = c["name"];
      row["pass"] = c["pass"];
      row["detail"] = c.value("detail", std::string());
      rows.push_back(row);
    }
    entry["report"] = r;
    suites.push_back(entry);
  };
  for (int m : dims) {
    if (m < 1 || m > 3) throw UsageError("identity suite supports m in 1..3");
    add(json{{"suite", "curvature"}, {"m", m}}, identity_suite(KahlerModel{m}, {Rational(1), Rational(-2, 3)}));
  }
  for (int m : dims) {
    if (m > 2) continue;
    for (int N : powers)
      for (const auto& d : deltas)
        add(json{{"suite", "traceExpansion"}, {"m", m}, {"N", N}, {"delta", io::to_json(d)}},
            trace_expansion_check(KahlerModel{m, false}, N, d));
  }
  json parity = json::array();
  for (int N : {2, 4, 6, 8})
    for (int k = 1; k <= N; ++k)
      for (auto v : {ParityVariant::one, ParityVariant::two, ParityVariant::three}) {
        const long a = parity_count(N, k, v), b = parity_closed_form(N, k, v);
        pass = pass && a == b;
        parity.push_back({{"N", N}, {"k", k}, {"variant", static_cast<int>(v)}, {"count", a}, {"closedForm", b},
                          {"pass", a == b}});
      }
  doc["result"] = json{{"suites", suites}, {"parity", parity}, {"pass", pass}};
  doc["rows"] = rows;
  if (!pass) throw Halt{kExitInconsistent, doc};
  return doc;
}

json cmd_calibrate(const Run& run, const Flags&) {
  json doc = envelope("calibrate", run, nullptr);
  auto rep = calibrate(default_calibration_suite());
  doc["conventions"] = io::to_json(rep.conventions);
  doc["report"] = io::to_json(rep);
  doc["rows"] = json::array({io::to_json(rep)});
  return doc;
}

json error_doc(const std::string& command, const Error& e) {
  json err{{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* u = dynamic_cast<const UnknownHodgeData*>(&e)) {
    err["p"] = u->p();
    err["k"] = u->k();
  }
  return json{{"schema", io::kSchema}, {"command", command}, {"error", err}};
}

void emit(const json& doc, const std::string& format, const std::string& out) {
  std::string text;
  if (format == "csv" && doc.contains("rows") && !doc.contains("error")) {
    text = to_csv(doc["rows"]);
  } else {
    json clean = doc;
    clean.erase("rows");
    text = io::dump(clean);
  }
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw UsageError("cannot write '" + out + "'");
  os << text;
}

int report_plain(const json& doc, int code, const std::string& out) {
  try {
    emit(doc, "json", out);
  } catch (const std::exception& e) {
    std::cerr << "etaforge: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eta invariants of circle bundles over Kahler bases", "etaforge"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;

  app.add_option("--config", f.config, "JSON run configuration");
  app.add_option("--out", f.out, "write output here instead of stdout");
  app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--conventions", f.conventions, "conventions record written by `calibrate`");
  app.add_option("--preset", f.preset, "surface | projective | explicit")
      ->check(CLI::IsMember({"surface", "projective", "explicit"}));
  app.add_option("--genus", f.genus, "surface genus");
  app.add_option("--degree", f.degree, "degree l of L");
  app.add_option("--m", f.m, "complex dimension of the base");
  app.add_option("--h00", f.h00, "h^{0,0} of the theta characteristic");
  app.add_option("--r", f.r, "connection parameter r (rational)");
  app.add_option("--eps", f.eps, "adiabatic parameter eps (rational)");
  app.add_option("--r0", f.r0, "window start");
  app.add_option("--r1", f.r1, "window end");
  app.add_option("--k-min", f.kMin, "smallest k in spectrum dumps");
  app.add_option("--k-max", f.kMax, "largest k in spectrum dumps");
  app.add_option("--M", f.M, "lower bound for the smallest Dolbeault eigenvalue mu^2/2");
  app.add_option("--sweep-param", f.sweepParam, "r or eps")->check(CLI::IsMember({"r", "eps"}));
  app.add_option("--sweep-start", f.sweepStart, "sweep start");
  app.add_option("--sweep-stop", f.sweepStop, "sweep stop (inclusive)");
  app.add_option("--sweep-step", f.sweepStep, "sweep step");
  app.add_option("--threads", f.threads, "worker threads for sweeps (0 = hardware)");
  app.add_flag("--unreduced", f.unreduced, "eta exact: also report value - dim ker/2");

  auto* eta = app.add_subcommand("eta", "eta invariant computations")->require_subcommand(1);
  eta->fallthrough();
  std::string etaMode;
  for (const char* mode : {"exact", "asymptotic", "adiabatic", "aps-check"}) {
    auto* sc = eta->add_subcommand(mode);
    sc->fallthrough();
    sc->callback([&etaMode, mode] { etaMode = mode; });
  }
  auto* spectrum = app.add_subcommand("spectrum", "dump Dirac eigenvalue records over a k window");
  spectrum->fallthrough();
  auto* flow = app.add_subcommand("flow", "spectral flow in delta and in s");
  flow->fallthrough();
  auto* measure = app.add_subcommand("measure", "limit spectral measure checks")->require_subcommand(1);
  measure->fallthrough();
  auto* mcheck = measure->add_subcommand("check");
  mcheck->fallthrough();
  mcheck->add_option("--n", f.n, "odd ambient dimension");
  mcheck->add_option("--lambdas", f.lambdas, "positive eigenvalues of A_y")->delimiter(',');
  mcheck->add_option("--t", f.ts, "Laplace parameters")->delimiter(',');
  mcheck->add_option("--eps-support", f.supports, "near-zero bump widths")->delimiter(',');
  auto* ident = app.add_subcommand("identities", "tensor identity suites")->require_subcommand(1);
  ident->fallthrough();
  auto* irun = ident->add_subcommand("run");
  irun->fallthrough();
  irun->add_option("--dims", f.dims, "base dimensions")->delimiter(',');
  irun->add_option("--powers", f.powers, "trace powers N")->delimiter(',');
  irun->add_option("--deltas", f.deltas, "delta values")->delimiter(',');
  auto* calib = app.add_subcommand("calibrate", "fix the convention set against the built-in checks");
  calib->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  std::function<json(const Run&)> job;
  if (eta->parsed()) {
    command = "eta " + etaMode;
    job = [&](const Run& run) { return cmd_eta(etaMode, run, f); };
  } else if (spectrum->parsed()) {
    command = "spectrum";
    job = [&](const Run& run) { return cmd_spectrum(run, f); };
  } else if (flow->parsed()) {
    command = "flow";
    job = [&](const Run& run) { return cmd_flow(run, f); };
  } else if (measure->parsed()) {
    command = "measure check";
    job = [&](const Run& run) { return cmd_measure(run, f); };
  } else if (ident->parsed()) {
    command = "identities run";
    job = [&](const Run& run) { return cmd_identities(run, f); };
  } else {
    command = "calibrate";
    job = [&](const Run& run) { return cmd_calibrate(run, f); };
  }

  Run run;
  try {
    run = build_run(app, f);
  } catch (const NoConsistentConvention& e) {
    return report_plain(error_doc(command, e), kExitInconsistent, f.out);
  } catch (const std::exception& e) {
    std::cerr << "etaforge: " << e.what() << "\n";
    return kExitUsage;
  }

  auto report = [&](const json& doc, int code) {
    try {
      emit(doc, run.format, f.out);
    } catch (const Error& e) {
      std::cerr << "etaforge: " << e.what() << "\n";
      return kExitUsage;
    }
    return code;
  };

  try {
    return report(job(run), kExitOk);
  } catch (const Halt& h) {
    return report(h.doc, h.code);
  } catch (const UnknownHodgeData& e) {
    return report(error_doc(command, e), kExitData);
  } catch (const InvalidDolbeaultData& e) {
    return report(error_doc(command, e), kExitData);
  } catch (const ProviderConsistencyError& e) {
    return report(error_doc(command, e), kExitData);
  } catch (const NoConsistentConvention& e) {
    return report(error_doc(command, e), kExitInconsistent);
  } catch (const NumericalError& e) {
    return report(error_doc(command, e), kExitInconsistent);
  } catch (const std::exception& e) {  // UsageError, DomainError, malformed input
    std::cerr << "etaforge: " << e.what() << "\n";
    return kExitUsage;
  }
}
