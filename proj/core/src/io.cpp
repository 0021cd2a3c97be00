#include "acute/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acute {

namespace {

// insertion-ordered so written files follow the documented key layout
using json = nlohmann::ordered_json;

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

std::vector<Rational> parse_rational_list(const json& a, const char* what) {
  if (!a.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& e : a) {
    if (!e.is_string()) throw ParseError(std::string(what) + ": expected \"p/q\" strings");
    try {
      out.push_back(Rational::from_string(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string(what) + ": " + ex.what());
    }
  }
  return out;
}

json report_to_json(const VerificationReport& rep) {
  json j;
  j["verdict"] = to_string(rep.verdict);
  j["s_min"] = rep.s_min ? json(rep.s_min->str()) : json(nullptr);
  if (rep.witness)
    j["witness"] = json::array({(*rep.witness)[0], (*rep.witness)[1], (*rep.witness)[2]});
  else
    j["witness"] = nullptr;
  j["min_angle_deg"] = rep.min_angle_deg ? json(*rep.min_angle_deg) : json(nullptr);
  j["mode"] = to_string(rep.mode);
  j["tolerance"] = rep.tolerance ? json(*rep.tolerance) : json(nullptr);
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport rep;
  rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("s_min") && !j["s_min"].is_null())
    rep.s_min = Rational::from_string(j["s_min"].get<std::string>());
  if (j.contains("witness") && !j["witness"].is_null()) {
    const auto& w = j["witness"];
    if (!w.is_array() || w.size() != 3)
      throw ParseError("certificate witness must be an array of 3 indices");
    rep.witness = {w[0].get<std::size_t>(), w[1].get<std::size_t>(), w[2].get<std::size_t>()};
  }
  if (j.contains("min_angle_deg") && !j["min_angle_deg"].is_null())
    rep.min_angle_deg = j["min_angle_deg"].get<double>();
  if (j.contains("mode")) rep.mode = mode_from_string(j["mode"].get<std::string>());
  if (j.contains("tolerance") && !j["tolerance"].is_null())
    rep.tolerance = j["tolerance"].get<double>();
  if (j.contains("n")) rep.n = j["n"].get<std::size_t>();
  if (j.contains("dim")) rep.dim = j["dim"].get<std::size_t>();
  if (j.contains("elapsed_ms")) rep.elapsed_ms = j["elapsed_ms"].get<double>();
  return rep;
}

json trace_to_json(const ConstructionTrace& t) {
  json j;
  j["base_id"] = t.base_id;
  json steps = json::array();
  for (const auto& s : t.steps) {
    json e;
    e["dim_before"] = s.dim_before;
    e["n_before"] = s.n_before;
    e["s_lower_bound"] = s.s_lower_bound.str();
    e["r"] = s.r.str();
    e["t"] = rational_list(s.t_params);
    e["M"] = s.m_max.str();
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

ConstructionTrace trace_from_json(const json& j) {
  ConstructionTrace t;
  t.base_id = j.at("base_id").get<std::string>();
  for (const auto& e : j.at("steps")) {
    StepRecord s;
    s.dim_before = e.at("dim_before").get<std::size_t>();
    s.n_before = e.at("n_before").get<std::size_t>();
    s.s_lower_bound = Rational::from_string(e.at("s_lower_bound").get<std::string>());
    s.r = Rational::from_string(e.at("r").get<std::string>());
    s.t_params = parse_rational_list(e.at("t"), "trace step t");
    s.m_max = Rational::from_string(e.at("M").get<std::string>());
    t.steps.push_back(std::move(s));
  }
  return t;
}

}  // namespace

std::string write_pointset_json(const PointSetFile& f) {
  json j;
  j["dim"] = f.points.dim;
  json pts = json::array();
  for (const auto& p : f.points.points) pts.push_back(rational_list(p.coords));
  j["points"] = std::move(pts);

  json meta;
  meta["source"] = f.points.meta.source;
  if (!f.points.meta.id.empty()) meta["id"] = f.points.meta.id;
  meta["format_version"] = f.points.meta.format_version;
  if (f.target_size) meta["target_size"] = *f.target_size;
  if (f.trace) meta["trace"] = trace_to_json(*f.trace);
  if (f.certificate) meta["certificate"] = report_to_json(*f.certificate);
  j["meta"] = std::move(meta);
  return j.dump(1) + "\n";
}

PointSetFile read_pointset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte));
  }
  try {
    PointSetFile f;
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
      throw ParseError("expected an object with \"dim\" and \"points\"");
    f.points.dim = j["dim"].get<std::size_t>();
    for (const auto& row : j["points"]) {
      Point p(parse_rational_list(row, "point"));
      if (p.dim() != f.points.dim)
        throw ParseError("point " + std::to_string(f.points.points.size()) + " has " +
                         std::to_string(p.dim()) + " coordinates, expected " +
                         std::to_string(f.points.dim));
      f.points.points.push_back(std::move(p));
    }
    if (j.contains("meta") && j["meta"].is_object()) {
      const auto& m = j["meta"];
      if (m.contains("source")) f.points.meta.source = m["source"].get<std::string>();
      if (m.contains("id")) f.points.meta.id = m["id"].get<std::string>();
      if (m.contains("format_version"))
        f.points.meta.format_version = m["format_version"].get<int>();
      if (m.contains("target_size")) f.target_size = m["target_size"].get<std::size_t>();
      if (m.contains("trace")) f.trace = trace_from_json(m["trace"]);
      if (m.contains("certificate")) f.certificate = report_from_json(m["certificate"]);
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string write_report_json(const VerificationReport& rep) {
  return report_to_json(rep).dump(1) + "\n";
}

std::string write_csv(const PointSet& ps) {
  std::ostringstream out;
  for (std::size_t k = 0; k < ps.dim; ++k) {
    if (k) out << ',';
    out << 'x' << k;
  }
  out << '\n';
  char buf[64];
  for (const auto& p : ps.points) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (k) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", p[k].to_double());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

PointSet read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  PointSet ps;
  ps.meta.source = "external";
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.rfind("x0", 0) != 0)
        throw ParseError("expected CSV header starting with \"x0\"", lineno);
      header_seen = true;
      ps.dim = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
      continue;
    }
    Point p;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      std::size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad number \"" + cell + "\"", lineno);
      }
      while (pos < cell.size() && (cell[pos] == ' ' || cell[pos] == '\t')) ++pos;
      if (pos != cell.size()) throw ParseError("bad number \"" + cell + "\"", lineno);
      if (!std::isfinite(v)) throw ParseError("non-finite value \"" + cell + "\"", lineno);
      p.coords.push_back(Rational::from_double(v));
    }
    if (p.dim() != ps.dim)
      throw ParseError("row has " + std::to_string(p.dim()) + " columns, expected " +
                       std::to_string(ps.dim), lineno);
    ps.points.push_back(std::move(p));
  }
  if (!header_seen) throw ParseError("empty CSV input", 1);
  return ps;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << content;
}

}  // namespace acute
