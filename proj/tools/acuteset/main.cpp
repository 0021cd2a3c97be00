// acuteset: construct, verify, search for, and generate acute point sets.
//
// Exit codes: 0 success (or verdict acute), 1 verified not acute or search
// found nothing, 2 invalid input or flags, 3 internal error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "acute/catalog.hpp"
#include "acute/doubling.hpp"
#include "acute/ef.hpp"
#include "acute/io.hpp"
#include "acute/search.hpp"
#include "acute/verify.hpp"
#include "acute/version.hpp"

namespace {

using acute::PointSet;
using acute::PointSetFile;
using acute::Rational;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// JSON files carry exact rationals; CSV carries doubles, read as their
// exact dyadic values. --rationalize snaps every coordinate to the best
// rational with denominator <= maxden (useful to recover 1/3 from CSV).
PointSetFile load_input(const std::string& path,
                        std::optional<std::uint64_t> maxden) {
  PointSetFile f;
  const std::string text = acute::read_text_file(path);
  if (ends_with(path, ".csv")) {
    f.points = acute::read_csv(text);
  } else {
    f = acute::read_pointset_json(text);
  }
  if (maxden) {
    for (auto& p : f.points.points)
      for (auto& c : p.coords) c = acute::rationalize_one(c.to_double(), *maxden);
  }
  return f;
}

void emit(const json& j) { std::cout << j.dump(1) << "\n"; }

// the bound carried by a construction: the base certificate when no
// doubling happened, otherwise min(s - 4r^2, 2(r^2 - M)) of the last step
Rational trace_bound(const acute::ConstructionTrace& trace) {
  if (trace.steps.empty())
    return *acute::base_set_by_id(trace.base_id).certificate.s_min;
  const auto& last = trace.steps.back();
  const Rational rr = last.r * last.r;
  const Rational a = last.s_lower_bound - Rational(4) * rr;
  const Rational b = Rational(2) * (rr - last.m_max);
  return a < b ? a : b;
}

int run_construct(std::size_t d, const std::string& out, bool recheck,
                  const std::string& base_id, int threads) {
  acute::ConstructOptions opts;
  opts.recheck_exact = recheck;
  opts.threads = threads;
  if (!base_id.empty()) opts.base_id = base_id;

  auto t0 = std::chrono::steady_clock::now();
  auto [ps, trace] = acute::construct(d, opts);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  PointSetFile f;
  f.points = std::move(ps);
  f.trace = trace;
  f.target_size = f.points.size();
  acute::write_text_file(out, acute::write_pointset_json(f));

  json summary;
  summary["dim"] = d;
  summary["n"] = f.points.size();
  summary["id"] = f.points.meta.id;
  summary["base_id"] = trace.base_id;
  summary["doubling_steps"] = trace.steps.size();
  summary["s_bound"] = trace_bound(trace).str();
  summary["recheck_exact"] = recheck;
  summary["elapsed_ms"] = ms;
  summary["output"] = out;
  emit(summary);
  return kOk;
}

int run_verify(const std::string& path, const std::string& mode_flag, double tol,
               std::optional<std::uint64_t> maxden, int threads,
               const std::string& report_out) {
  const PointSetFile f = load_input(path, maxden);
  acute::VerifyMode mode;
  if (!mode_flag.empty())
    mode = acute::mode_from_string(mode_flag);
  else
    mode = ends_with(path, ".csv") ? acute::VerifyMode::floating
                                   : acute::VerifyMode::exact;

  const auto rep = acute::verify_acute(f.points, mode, tol, threads);
  const std::string out = acute::write_report_json(rep);
  std::cout << out;
  if (!report_out.empty()) acute::write_text_file(report_out, out);
  return rep.verdict == acute::Verdict::acute ? kOk : kNegative;
}

int run_search(const acute::SearchConfig& cfg, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  const auto found = acute::search_acute(cfg);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  json summary;
  summary["found"] = found.has_value();
  summary["dim"] = cfg.dim;
  summary["n"] = cfg.target_size;
  summary["seed"] = cfg.seed;
  summary["max_iters"] = cfg.max_iters;
  summary["elapsed_ms"] = ms;
  if (found) {
    PointSetFile f;
    f.points = found->points;
    f.certificate = found->certificate;
    f.target_size = found->target_size;
    acute::write_text_file(out, acute::write_pointset_json(f));
    summary["s_min"] = found->certificate.s_min->str();
    summary["output"] = out;
  } else {
    summary["s_min"] = nullptr;
    summary["output"] = nullptr;
  }
  emit(summary);
  return found ? kOk : kNegative;
}

int run_ef(std::size_t d, std::uint64_t seed, std::optional<std::size_t> samples,
           const std::string& out) {
  const acute::EfRun run = acute::ef_generate(d, seed, samples);

  PointSetFile f;
  f.points = run.output;
  f.certificate = run.certificate;
  acute::write_text_file(out, acute::write_pointset_json(f));

  json summary;
  summary["dim"] = run.dim;
  summary["seed"] = run.seed;
  summary["sample_size"] = run.sample_size;
  json sampled = json::array();
  for (const auto& v : run.sampled) {
    std::string bits;
    for (int b : v) bits += static_cast<char>('0' + b);
    sampled.push_back(bits);
  }
  summary["sampled"] = std::move(sampled);
  summary["duplicates_removed"] = run.duplicates_removed;
  summary["right_triples_found"] = run.right_triples_found;
  summary["output_size"] = run.output.size();
  summary["output"] = out;
  emit(summary);
  return kOk;
}

int run_stats(const std::string& path, std::optional<std::uint64_t> maxden,
              int threads) {
  const PointSetFile f = load_input(path, maxden);
  f.points.validate();

  json out;
  out["n"] = f.points.size();
  out["dim"] = f.points.dim;
  if (f.points.size() >= 2) {
    const auto m = acute::min_apex_dot(f.points, threads);
    out["s_min"] = m.value.str();
    out["witness"] = {m.witness[0], m.witness[1], m.witness[2]};
  } else {
    out["s_min"] = nullptr;
    out["witness"] = nullptr;
  }
  if (f.points.size() >= 3)
    out["min_angle_deg"] = acute::min_angle_deg(f.points, threads);
  else
    out["min_angle_deg"] = nullptr;
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acute point sets: doubling construction and exact verification"};
  app.set_version_flag("--version", std::string("acuteset ") + acute::kVersion +
                                        " (format " +
                                        std::to_string(acute::kFormatVersion) + ")");
  app.require_subcommand(1);

  int rc = kOk;

  // construct
  std::size_t c_dim = 2;
  std::string c_out, c_base;
  bool c_recheck = false;
  int c_threads = 0;
  auto* c = app.add_subcommand("construct", "build an acute set in dimension d");
  c->add_option("-d,--dim", c_dim, "target dimension")->required();
  c->add_option("-o,--output", c_out, "output JSON path")->required();
  c->add_option("--base", c_base, "catalog id to start from (d1..d5)");
  c->add_flag("--recheck-exact", c_recheck,
              "re-verify every doubling step with the exact minimum");
  c->add_option("--threads", c_threads, "worker threads (0 = auto)");
  c->callback([&] { rc = run_construct(c_dim, c_out, c_recheck, c_base, c_threads); });

  // verify
  std::string v_path, v_mode, v_report;
  double v_tol = 1e-9;
  std::optional<std::uint64_t> v_maxden;
  int v_threads = 0;
  auto* v = app.add_subcommand("verify", "check a point set for acuteness");
  v->add_option("file", v_path, "PointSet JSON or CSV")->required();
  auto* vexact = v->add_flag_callback("--exact", [&] { v_mode = "exact"; },
                                      "exact rational arithmetic");
  v->add_flag_callback("--float", [&] { v_mode = "float"; },
                       "double precision with a tolerance band")
      ->excludes(vexact);
  v->add_option("--tol", v_tol, "float-mode tolerance (default 1e-9)");
  v->add_option("--rationalize", v_maxden,
                "snap coordinates to denominators <= this before checking");
  v->add_option("--threads", v_threads, "worker threads (0 = auto)");
  v->add_option("-o,--report", v_report, "also write the report to this path");
  v->callback(
      [&] { rc = run_verify(v_path, v_mode, v_tol, v_maxden, v_threads, v_report); });

  // search
  acute::SearchConfig s_cfg;
  std::string s_out;
  auto* s = app.add_subcommand("search", "anneal for an acute n-point set in R^d");
  s->add_option("-d,--dim", s_cfg.dim, "dimension")->required();
  s->add_option("-n,--size", s_cfg.target_size, "number of points")->required();
  s->add_option("--seed", s_cfg.seed, "RNG seed (default 0)");
  s->add_option("--iters", s_cfg.max_iters, "annealing iterations");
  s->add_option("--temp", s_cfg.initial_temperature, "initial temperature");
  s->add_option("--cooling", s_cfg.cooling_rate, "geometric cooling rate");
  s->add_option("--scale", s_cfg.perturbation_scale, "proposal step scale");
  s->add_option("--threshold", s_cfg.accept_threshold,
                "min cosine before rationalization is attempted");
  s->add_option("--max-denom", s_cfg.max_denominator,
                "denominator cap for rationalized coordinates");
  s->add_option("-o,--output", s_out, "output JSON path")->required();
  s->callback([&] { rc = run_search(s_cfg, s_out); });

  // ef
  std::size_t e_dim = 2;
  std::uint64_t e_seed = 0;
  std::optional<std::size_t> e_samples;
  std::string e_out;
  auto* e = app.add_subcommand("ef", "probabilistic hypercube-vertex generator");
  e->add_option("-d,--dim", e_dim, "dimension (>= 2)")->required();
  e->add_option("--seed", e_seed, "RNG seed (default 0)");
  e->add_option("--samples", e_samples, "vertices to sample (default ceil((2/sqrt 3)^d))");
  e->add_option("-o,--output", e_out, "output JSON path")->required();
  e->callback([&] { rc = run_ef(e_dim, e_seed, e_samples, e_out); });

  // stats
  std::string t_path;
  std::optional<std::uint64_t> t_maxden;
  int t_threads = 0;
  auto* t = app.add_subcommand("stats", "print n, dim, s_min and the minimum angle");
  t->add_option("file", t_path, "PointSet JSON or CSV")->required();
  t->add_option("--rationalize", t_maxden,
                "snap coordinates to denominators <= this first");
  t->add_option("--threads", t_threads, "worker threads (0 = auto)");
  t->callback([&] { rc = run_stats(t_path, t_maxden, t_threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kBadInput;
  } catch (const acute::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBadInput;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
  return rc;
}
