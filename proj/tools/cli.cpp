/* Copyright (C) 2026 The gbsym Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace gbsym::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what)
{
  const std::string t = trim(s);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
  if (pos != t.size())
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

std::string format_weights(const Weights& w)
{
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
}

std::string format_ys(const std::vector<Rational>& ys)
{
  std::string s = "(";
  for (std::size_t i = 0; i < ys.size(); ++i)
    s += (i ? "," : "") + to_string(ys[i]);
  return s + ")";
}

std::string describe(const TheoremInstance& inst)
{
  return theorem_name(inst.theorem) + " d=" + std::to_string(inst.character.modulus) +
         " chi=" + std::to_string(inst.character.label) + " n=" + std::to_string(inst.n) +
         " w=" + format_weights(inst.weights) + " ys=" + format_ys(inst.ys);
}

json ys_json(const std::vector<Rational>& ys)
{
  json a = json::array();
  for (const auto& y : ys)
    a.push_back(to_string(y));
  return a;
}

json values_json(const std::vector<CycloElement>& vs)
{
  json a = json::array();
  for (const auto& v : vs)
    a.push_back(render_value(v));
  return a;
}

// --- config file ----------------------------------------------------------

struct FieldError : UsageError {
  FieldError(const std::string& source, const std::string& field, const std::string& msg)
      : UsageError("config " + source + ": field '" + field + "': " + msg)
  {
  }
};

int json_int(const json& j, const std::string& source, const std::string& field)
{
  if (!j.is_number_integer())
    throw FieldError(source, field, "expected an integer");
  return j.get<int>();
}

Rational json_rational(const json& j, const std::string& source, const std::string& field)
{
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw FieldError(source, field, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FieldError(source, field, e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// --- text/csv rendering ---------------------------------------------------

void write_text(std::ostream& out, const json& doc)
{
  const std::string cmd = doc["command"];
  out << doc["tool"].get<std::string>() << ' ' << doc["version"].get<std::string>() << ' ' << cmd << '\n';
  if (cmd == "chars") {
    for (const auto& c : doc["characters"]) {
      out << "label=" << c["label"].get<int>() << " order=" << c["order"].get<int>()
          << " conductor=" << c["conductor"].get<int>() << " primitive=" << (c["primitive"].get<bool>() ? "yes" : "no")
          << " values=";
      bool first = true;
      for (const auto& v : c["values"]) {
        out << (first ? "" : " ") << v.get<std::string>();
        first = false;
      }
      out << '\n';
    }
    return;
  }
  if (cmd == "compute") {
    out << doc["kind"].get<std::string>() << " = " << doc["value"]["coords"].get<std::string>();
    if (!doc["value"]["rational"].is_null())
      out << " = " << doc["value"]["rational"].get<std::string>();
    out << '\n';
    return;
  }
  if (cmd == "lambda") {
    for (const auto& c : doc["coefficients"])
      out << "egf[" << c["n"].get<int>() << "] = " << c["value"].get<std::string>() << '\n';
    out << "routes_agree: " << (doc["routes_agree"].get<bool>() ? "yes" : "no") << '\n';
    return;
  }
  for (const auto& r : doc["records"]) {
    out << r["theorem"].get<std::string>() << " d=" << r["modulus"].get<int>() << " chi=" << r["label"].get<int>()
        << " n=" << r["n"].get<int>() << " w=(" << r["weights"][0] << ',' << r["weights"][1] << ','
        << r["weights"][2] << ") ys=(";
    bool first = true;
    for (const auto& y : r["ys"]) {
      out << (first ? "" : ",") << y.get<std::string>();
      first = false;
    }
    out << ") " << (r["passed"].get<bool>() ? "PASS" : "FAIL");
    if (r.contains("mismatch")) {
      const auto& m = r["mismatch"];
      out << " expr[" << m["lhs_index"].get<int>() << "]=" << m["lhs"].get<std::string>() << " != expr["
          << m["rhs_index"].get<int>() << "]=" << m["rhs"].get<std::string>();
    } else {
      out << " value=" << r["values"][0].get<std::string>();
    }
    if (r.contains("coset") && !r["coset"]["collapse"].get<bool>())
      out << " coset-collapse=FAIL";
    out << '\n';
  }
  const auto& s = doc["summary"];
  out << "summary: instances=" << s["instances"] << " passed=" << s["passed"] << " failed=" << s["failed"] << '\n';
  for (const auto& f : doc["findings"])
    out << "finding: " << f.get<std::string>() << '\n';
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& out, const json& doc)
{
  const std::string cmd = doc["command"];
  if (cmd == "chars") {
    out << "label,order,conductor,primitive,values\n";
    for (const auto& c : doc["characters"]) {
      std::string vals;
      for (const auto& v : c["values"])
        vals += (vals.empty() ? "" : ";") + v.get<std::string>();
      out << c["label"] << ',' << c["order"] << ',' << c["conductor"] << ','
          << (c["primitive"].get<bool>() ? "true" : "false") << ',' << csv_field(vals) << '\n';
    }
    return;
  }
  if (cmd == "compute") {
    out << "kind,modulus,label,coords,rational\n";
    out << doc["kind"].get<std::string>() << ',' << doc["modulus"] << ',' << doc["label"] << ','
        << csv_field(doc["value"]["coords"].get<std::string>()) << ','
        << (doc["value"]["rational"].is_null() ? "" : doc["value"]["rational"].get<std::string>()) << '\n';
    return;
  }
  if (cmd == "lambda") {
    out << "n,value\n";
    for (const auto& c : doc["coefficients"])
      out << c["n"] << ',' << csv_field(c["value"].get<std::string>()) << '\n';
    return;
  }
  out << "theorem,modulus,label,n,w1,w2,w3,ys,verdict,value,mismatch\n";
  for (const auto& r : doc["records"]) {
    std::string ys;
    for (const auto& y : r["ys"])
      ys += (ys.empty() ? "" : ";") + y.get<std::string>();
    std::string mismatch;
    if (r.contains("mismatch"))
      mismatch = std::to_string(r["mismatch"]["lhs_index"].get<int>()) + ":" +
                 std::to_string(r["mismatch"]["rhs_index"].get<int>());
    out << r["theorem"].get<std::string>() << ',' << r["modulus"] << ',' << r["label"] << ',' << r["n"] << ','
        << r["weights"][0] << ',' << r["weights"][1] << ',' << r["weights"][2] << ',' << csv_field(ys) << ','
        << (r["passed"].get<bool>() ? "pass" : "fail") << ',' << csv_field(r["values"][0].get<std::string>()) << ','
        << mismatch << '\n';
  }
}

} // namespace

Format parse_format(const std::string& s)
{
  if (s == "text")
    return Format::text;
  if (s == "json")
    return Format::json;
  if (s == "csv")
    return Format::csv;
  throw UsageError("unknown format '" + s + "' (expected json, text or csv)");
}

std::string render_value(const CycloElement& v)
{
  return v.is_rational() ? to_string(v.rational_value()) : to_string(v);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what)
{
  std::vector<int> out;
  for (const auto& part : split(s, ','))
    out.push_back(parse_int(part, what));
  return out;
}

Weights parse_weights(const std::string& s)
{
  const auto parts = parse_int_list(s, "--weights");
  if (parts.size() != 3)
    throw UsageError("--weights: expected three comma-separated positive integers, got '" + s + "'");
  for (int w : parts)
    if (w < 1)
      throw UsageError("--weights: weights must be positive, got '" + s + "'");
  return {parts[0], parts[1], parts[2]};
}

std::array<Rational, 3> parse_ys(const std::string& s)
{
  std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
  const auto parts = split(s, ',');
  if (parts.size() > 3)
    throw UsageError("--ys: at most three values, got '" + s + "'");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      out[i] = parse_rational(trim(parts[i]));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--ys: ") + e.what());
    }
  }
  return out;
}

Perturbation parse_perturbation(const std::string& s)
{
  const auto parts = split(s, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw UsageError("--perturb: expected THEOREM:EXPRESSION[:DELTA], got '" + s + "'");
  Perturbation p;
  try {
    p.theorem = parse_theorem(parts[0]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--perturb: ") + e.what());
  }
  p.expression = parse_int(parts[1], "--perturb expression");
  if (parts.size() == 3)
    p.delta = parse_int(parts[2], "--perturb delta");
  const int count = static_cast<int>(theorem_permutations(p.theorem).size());
  if (p.expression < 0 || p.expression >= count)
    throw UsageError("--perturb: " + theorem_name(p.theorem) + " has expressions 0.." + std::to_string(count - 1));
  return p;
}

GridDescription default_sweep_grid()
{
  GridDescription g;
  g.moduli = {1, 3, 4, 5, 7, 8};
  g.theorems.assign(all_theorems().begin(), all_theorems().end());
  g.n_min = 0;
  g.n_max = 10;
  g.weights = {{1, 1, 1}, {1, 2, 3}, {2, 3, 5}, {3, 4, 7}};
  const Rational half(1, 2), two_thirds(2, 3);
  g.ys = {{Rational(0), half, two_thirds}, {half, two_thirds, Rational(0)}, {two_thirds, Rational(0), half}};
  return g;
}

SweepConfig parse_sweep_config(const std::string& text, const std::string& source)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw UsageError("config " + source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON: " + e.what());
  }
  if (!j.is_object())
    throw UsageError("config " + source + ": top level must be a JSON object");

  static const std::vector<std::string> known{"moduli",  "allow_imprimitive", "labels", "theorems",
                                              "n_min",   "n_max",             "weights", "ys",
                                              "format",  "jobs",              "perturbation"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw FieldError(source, key, "unknown field");

  SweepConfig cfg;
  auto& g = cfg.grid;
  if (!j.contains("moduli") || !j["moduli"].is_array() || j["moduli"].empty())
    throw FieldError(source, "moduli", "required non-empty array of positive integers");
  for (std::size_t i = 0; i < j["moduli"].size(); ++i) {
    const std::string f = "moduli[" + std::to_string(i) + "]";
    const int d = json_int(j["moduli"][i], source, f);
    if (d < 1)
      throw FieldError(source, f, "modulus must be >= 1");
    g.moduli.push_back(d);
  }
  if (j.contains("allow_imprimitive")) {
    if (!j["allow_imprimitive"].is_boolean())
      throw FieldError(source, "allow_imprimitive", "expected true or false");
    g.include_imprimitive = j["allow_imprimitive"].get<bool>();
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw FieldError(source, "labels", "expected an array of integers");
    for (std::size_t i = 0; i < j["labels"].size(); ++i)
      g.labels.push_back(json_int(j["labels"][i], source, "labels[" + std::to_string(i) + "]"));
  }
  if (j.contains("theorems")) {
    if (!j["theorems"].is_array() || j["theorems"].empty())
      throw FieldError(source, "theorems", "expected a non-empty array such as [\"T1\", \"T4\"]");
    for (std::size_t i = 0; i < j["theorems"].size(); ++i) {
      const auto& t = j["theorems"][i];
      const std::string f = "theorems[" + std::to_string(i) + "]";
      if (!t.is_string())
        throw FieldError(source, f, "expected a string such as \"T3\"");
      try {
        g.theorems.push_back(parse_theorem(t.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw FieldError(source, f, e.what());
      }
    }
  } else {
    g.theorems.assign(all_theorems().begin(), all_theorems().end());
  }
  g.n_min = j.contains("n_min") ? json_int(j["n_min"], source, "n_min") : 0;
  g.n_max = j.contains("n_max") ? json_int(j["n_max"], source, "n_max") : 10;
  if (g.n_min < 0)
    throw FieldError(source, "n_min", "must be >= 0");
  if (g.n_max < g.n_min)
    throw FieldError(source, "n_max", "must be >= n_min");
  if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty())
    throw FieldError(source, "weights", "required non-empty array of [w1, w2, w3] triples");
  for (std::size_t i = 0; i < j["weights"].size(); ++i) {
    const auto& w = j["weights"][i];
    const std::string f = "weights[" + std::to_string(i) + "]";
    if (!w.is_array() || w.size() != 3)
      throw FieldError(source, f, "expected an array of three positive integers");
    Weights t{};
    for (std::size_t k = 0; k < 3; ++k) {
      t[k] = json_int(w[k], source, f + "[" + std::to_string(k) + "]");
      if (t[k] < 1)
        throw FieldError(source, f + "[" + std::to_string(k) + "]", "weights must be positive");
    }
    g.weights.push_back(t);
  }
  if (j.contains("ys")) {
    if (!j["ys"].is_array() || j["ys"].empty())
      throw FieldError(source, "ys", "expected a non-empty array of y tuples");
    for (std::size_t i = 0; i < j["ys"].size(); ++i) {
      const auto& y = j["ys"][i];
      const std::string f = "ys[" + std::to_string(i) + "]";
      if (!y.is_array() || y.size() > 3)
        throw FieldError(source, f, "expected an array of at most three rationals");
      std::array<Rational, 3> t{Rational(0), Rational(0), Rational(0)};
      for (std::size_t k = 0; k < y.size(); ++k)
        t[k] = json_rational(y[k], source, f + "[" + std::to_string(k) + "]");
      g.ys.push_back(t);
    }
  } else {
    g.ys = {{Rational(0), Rational(0), Rational(0)}};
  }
  if (j.contains("perturbation")) {
    const auto& p = j["perturbation"];
    if (!p.is_object() || !p.contains("theorem") || !p.contains("expression") || !p["theorem"].is_string())
      throw FieldError(source, "perturbation", "expected {\"theorem\": \"T1\", \"expression\": 0, \"delta\": 1}");
    std::string spec = p["theorem"].get<std::string>() + ":" +
                       std::to_string(json_int(p["expression"], source, "perturbation.expression"));
    if (p.contains("delta"))
      spec += ":" + std::to_string(json_int(p["delta"], source, "perturbation.delta"));
    try {
      g.perturbation = parse_perturbation(spec);
    } catch (const UsageError& e) {
      throw FieldError(source, "perturbation", e.what());
    }
  }
  if (j.contains("format")) {
    if (!j["format"].is_string())
      throw FieldError(source, "format", "expected \"json\", \"text\" or \"csv\"");
    try {
      cfg.format = parse_format(j["format"].get<std::string>());
    } catch (const UsageError& e) {
      throw FieldError(source, "format", e.what());
    }
  }
  if (j.contains("jobs"))
    cfg.jobs = json_int(j["jobs"], source, "jobs");
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("config " + path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str(), path);
}

json config_to_json(const GridDescription& g)
{
  json j;
  j["moduli"] = g.moduli;
  j["allow_imprimitive"] = g.include_imprimitive;
  j["labels"] = g.labels;
  json th = json::array();
  for (auto t : g.theorems)
    th.push_back(theorem_name(t));
  j["theorems"] = th;
  j["n_min"] = g.n_min;
  j["n_max"] = g.n_max;
  json ws = json::array();
  for (const auto& w : g.weights)
    ws.push_back(json::array({w[0], w[1], w[2]}));
  j["weights"] = ws;
  json ys = json::array();
  for (const auto& y : g.ys)
    ys.push_back(json::array({to_string(y[0]), to_string(y[1]), to_string(y[2])}));
  j["ys"] = ys;
  if (g.perturbation)
    j["perturbation"] = {{"theorem", theorem_name(g.perturbation->theorem)},
                         {"expression", g.perturbation->expression},
                         {"delta", g.perturbation->delta}};
  return j;
}

json report_document(const std::string& command, const GridDescription& grid, const SweepResult& result)
{
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["config"] = config_to_json(grid);
  json records = json::array();
  for (const auto& r : result.reports) {
    json rec;
    rec["theorem"] = theorem_name(r.instance.theorem);
    rec["modulus"] = r.instance.character.modulus;
    rec["label"] = r.instance.character.label;
    rec["n"] = r.instance.n;
    rec["weights"] = json::array({r.instance.weights[0], r.instance.weights[1], r.instance.weights[2]});
    rec["ys"] = ys_json(r.instance.ys);
    rec["values"] = values_json(r.values);
    rec["all_equal"] = r.all_equal;
    rec["passed"] = r.passed();
    if (r.mismatch) {
      const auto [i, k] = *r.mismatch;
      rec["mismatch"] = {{"lhs_index", i},
                         {"rhs_index", k},
                         {"lhs", render_value(r.values[static_cast<std::size_t>(i)])},
                         {"rhs", render_value(r.values[static_cast<std::size_t>(k)])}};
    }
    if (!r.coset_values.empty())
      rec["coset"] = {{"collapse", r.coset_collapse},
                      {"targets", r.coset_targets},
                      {"values", values_json(r.coset_values)}};
    if (r.w2_ratio_variant)
      rec["w2_ratio_variant"] = {{"value", render_value(*r.w2_ratio_variant)}, {"equal", *r.w2_ratio_variant_equal}};
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  const auto& s = result.summary;
  doc["summary"] = {{"instances", s.instances}, {"passed", s.passed}, {"failed", s.failed}};

  json findings = json::array();
  if (s.w2_ratio_variant_checked > 0) {
    std::string f = "T3 fifth expression with ratio w1/w2 inside the w3 block: ";
    if (s.w2_ratio_variant_failed == 0) {
      f += "equal on all " + std::to_string(s.w2_ratio_variant_checked) + " instances checked";
    } else {
      f += "FAILS on " + std::to_string(s.w2_ratio_variant_failed) + " of " +
           std::to_string(s.w2_ratio_variant_checked) + " instances; first failure " +
           describe(result.reports[*s.first_w2_ratio_variant_failure].instance) +
           "; the orbit form with ratio w1/w3 is the one that holds";
    }
    findings.push_back(f);
  }
  doc["findings"] = std::move(findings);
  return doc;
}

void write_report(std::ostream& out, const json& doc, Format format)
{
  switch (format) {
  case Format::json:
    out << doc.dump(2) << '\n';
    break;
  case Format::text:
    write_text(out, doc);
    break;
  case Format::csv:
    write_csv(out, doc);
    break;
  }
}

namespace {

json header(const std::string& command)
{
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  return doc;
}

DirichletChar lookup_character(int d, int label)
{
  if (d < 1)
    throw UsageError("--modulus must be >= 1");
  try {
    return find_character(d, label);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

json value_json(const CycloElement& v)
{
  json j;
  j["coords"] = to_string(v);
  j["rational"] = v.is_rational() ? json(to_string(v.rational_value())) : json(nullptr);
  return j;
}

LambdaFamily parse_family(const std::string& s)
{
  if (s == "L23" || s == "l23")
    return LambdaFamily::L23;
  if (s == "L13" || s == "l13")
    return LambdaFamily::L13;
  if (s == "L12" || s == "l12")
    return LambdaFamily::L12;
  throw UsageError("--family: expected L23, L13 or L12, got '" + s + "'");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact generalized Bernoulli polynomials and three-weight symmetry identities"};
  app.name(kToolName);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string format_text = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: json, text or csv")->capture_default_str();
  };

  // chars
  int chars_modulus = 0;
  auto* chars = app.add_subcommand("chars", "List the Dirichlet characters mod d");
  chars->add_option("--modulus", chars_modulus, "Modulus d >= 1")->required();
  add_format(chars);

  // compute
  std::string kind;
  int cmp_modulus = 1, cmp_label = 0, cmp_n = 0, cmp_k = 0;
  std::string cmp_x = "0";
  auto* compute = app.add_subcommand("compute", "Evaluate B_{n,chi}, B_{n,chi}(x) or S_k(n,chi)");
  compute->add_option("kind", kind, "bernoulli-number | bernoulli-poly | power-sum")
      ->required()
      ->check(CLI::IsMember({"bernoulli-number", "bernoulli-poly", "power-sum"}));
  compute->add_option("--modulus", cmp_modulus, "Character modulus d")->capture_default_str();
  compute->add_option("--char", cmp_label, "Character label mod d")->capture_default_str();
  compute->add_option("--n", cmp_n, "Degree n (or upper summation limit for power-sum)")->capture_default_str();
  compute->add_option("--k", cmp_k, "Power-sum exponent k")->capture_default_str();
  compute->add_option("--x", cmp_x, "Rational argument p/q for bernoulli-poly")->capture_default_str();
  add_format(compute);

  // lambda
  std::string family_text = "L23";
  int lam_index = 0, lam_modulus = 1, lam_label = 0, lam_order = 12;
  std::string lam_weights = "1,1,1", lam_ys;
  auto* lambda = app.add_subcommand("lambda", "Dump egf coefficients of a quotient generating function");
  lambda->add_option("--family", family_text, "L23, L13 or L12")->capture_default_str();
  lambda->add_option("--index", lam_index, "Family index")->capture_default_str();
  lambda->add_option("--modulus", lam_modulus, "Character modulus d")->capture_default_str();
  lambda->add_option("--char", lam_label, "Character label mod d")->capture_default_str();
  lambda->add_option("--weights", lam_weights, "w1,w2,w3")->capture_default_str();
  lambda->add_option("--ys", lam_ys, "y1,y2,y3 as rationals; missing entries are 0");
  lambda->add_option("--order", lam_order, "Truncation order N")->capture_default_str();
  add_format(lambda);

  // verify / sweep share the grid flags
  struct GridFlags {
    std::vector<int> moduli;
    std::vector<int> labels;
    std::vector<std::string> theorems;
    int n_max = -1;
    int n_min = -1;
    std::string weights;
    std::string ys;
    bool allow_imprimitive = false;
    int jobs = 1;
    std::string config;
    std::string perturb;
  };
  GridFlags vf, sf;
  auto add_grid_flags = [&](CLI::App* sub, GridFlags& f) {
    sub->add_option("--modulus", f.moduli, "Character modulus (repeatable)")->delimiter(',');
    sub->add_option("--char", f.labels, "Character label (repeatable)")->delimiter(',');
    sub->add_option("--theorem", f.theorems, "Theorem T1..T8 (repeatable)")->delimiter(',');
    sub->add_option("--n-max", f.n_max, "Largest degree n");
    sub->add_option("--n-min", f.n_min, "Smallest degree n");
    sub->add_option("--weights", f.weights, "w1,w2,w3");
    sub->add_option("--ys", f.ys, "y1,y2,y3 as rationals; missing entries are 0");
    sub->add_flag("--allow-imprimitive", f.allow_imprimitive, "Include imprimitive characters");
    sub->add_option("--jobs", f.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--config", f.config, "JSON sweep configuration file");
    sub->add_option("--perturb", f.perturb, "Test hook: THEOREM:EXPRESSION[:DELTA] shifts one weight exponent");
    add_format(sub);
  };
  auto* verify = app.add_subcommand("verify", "Verify theorems for one weight tuple and y tuple");
  add_grid_flags(verify, vf);
  auto* sweep = app.add_subcommand("sweep", "Verify theorems over a grid (built-in default grid unless --config is given)");
  add_grid_flags(sweep, sf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    const Format format = parse_format(format_text);

    if (chars->parsed()) {
      if (chars_modulus < 1)
        throw UsageError("--modulus must be >= 1");
      json doc = header("chars");
      doc["modulus"] = chars_modulus;
      const auto structure = unit_group_structure(chars_modulus);
      json gens = json::array();
      for (const auto& g : structure.generators)
        gens.push_back({{"residue", g.residue}, {"order", g.order}});
      doc["generators"] = gens;
      json list = json::array();
      for (const auto& chi : enumerate_characters(chars_modulus)) {
        json c;
        c["label"] = chi.label();
        c["order"] = chi.order();
        c["conductor"] = chi.conductor();
        c["primitive"] = chi.primitive();
        c["generator_exponents"] = chi.generator_exponents();
        json vals = json::array();
        for (const auto& v : chi.values())
          vals.push_back(render_value(v));
        c["values"] = vals;
        list.push_back(std::move(c));
      }
      doc["characters"] = std::move(list);
      write_report(out, doc, format);
      return 0;
    }

    if (compute->parsed()) {
      const DirichletChar chi = lookup_character(cmp_modulus, cmp_label);
      if (cmp_n < 0 || cmp_k < 0)
        throw UsageError("--n and --k must be nonnegative");
      json doc = header("compute");
      doc["kind"] = kind;
      doc["modulus"] = cmp_modulus;
      doc["label"] = cmp_label;
      CycloElement value;
      if (kind == "bernoulli-number") {
        doc["n"] = cmp_n;
        value = gen_bernoulli_number(chi, cmp_n);
      } else if (kind == "bernoulli-poly") {
        Rational x;
        try {
          x = parse_rational(cmp_x);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--x: ") + e.what());
        }
        doc["n"] = cmp_n;
        doc["x"] = to_string(x);
        value = gen_bernoulli_poly(chi, cmp_n, x);
      } else {
        doc["k"] = cmp_k;
        doc["n"] = cmp_n;
        value = power_sum(chi, cmp_k, cmp_n);
      }
      doc["value"] = value_json(value);
      write_report(out, doc, format);
      return 0;
    }

    if (lambda->parsed()) {
      const DirichletChar chi = lookup_character(lam_modulus, lam_label);
      if (lam_order < 0)
        throw UsageError("--order must be nonnegative");
      LambdaSpec spec;
      spec.family = parse_family(family_text);
      spec.index = lam_index;
      spec.weights = parse_weights(lam_weights);
      const auto ys = parse_ys(lam_ys);
      const int arity = LambdaSpec::arity(spec.family, spec.index);
      if (arity < 0 || arity > 3)
        throw UsageError("--index out of range for " + family_text);
      spec.ys.assign(ys.begin(), ys.begin() + arity);
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const BernoulliCache cache(chi);
      const TruncatedSeries closed = lambda_series(spec, chi, lam_order);
      const TruncatedSeries integrals = lambda_series_from_integrals(spec, cache, lam_order);
      json doc = header("lambda");
      doc["spec"] = {{"family", family_text}, {"index", spec.index},
                     {"weights", json::array({spec.weights[0], spec.weights[1], spec.weights[2]})},
                     {"ys", ys_json(spec.ys)}};
      doc["modulus"] = lam_modulus;
      doc["label"] = lam_label;
      doc["order"] = lam_order;
      json coeffs = json::array();
      for (int k = 0; k <= lam_order; ++k)
        coeffs.push_back({{"n", k}, {"value", render_value(egf_coeff(closed, k))}});
      doc["coefficients"] = coeffs;
      doc["routes_agree"] = closed == integrals;
      write_report(out, doc, format);
      return closed == integrals ? 0 : static_cast<int>(ExitCode::failures);
    }

    const bool is_verify = verify->parsed();
    GridFlags& f = is_verify ? vf : sf;
    CLI::App* sub = is_verify ? verify : sweep;
    SweepConfig cfg;
    if (!f.config.empty()) {
      cfg = load_sweep_config(f.config);
    } else if (is_verify) {
      if (f.moduli.empty())
        throw UsageError("verify: --modulus (or --config) is required");
      cfg.grid.theorems.assign(all_theorems().begin(), all_theorems().end());
      cfg.grid.n_max = 6;
      cfg.grid.weights = {{1, 2, 3}};
      cfg.grid.ys = {{Rational(0), Rational(0), Rational(0)}};
    } else {
      cfg.grid = default_sweep_grid();
    }
    auto& g = cfg.grid;
    if (!f.moduli.empty())
      g.moduli = f.moduli;
    for (int d : g.moduli)
      if (d < 1)
        throw UsageError("--modulus must be >= 1");
    if (!f.labels.empty())
      g.labels = f.labels;
    if (!f.theorems.empty()) {
      g.theorems.clear();
      for (const auto& t : f.theorems) {
        try {
          g.theorems.push_back(parse_theorem(t));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--theorem: ") + e.what());
        }
      }
    }
    if (f.n_max >= 0)
      g.n_max = f.n_max;
    if (f.n_min >= 0)
      g.n_min = f.n_min;
    if (g.n_min > g.n_max)
      throw UsageError("--n-min must not exceed --n-max");
    if (!f.weights.empty())
      g.weights = {parse_weights(f.weights)};
    if (!f.ys.empty())
      g.ys = {parse_ys(f.ys)};
    if (f.allow_imprimitive)
      g.include_imprimitive = true;
    if (!f.perturb.empty())
      g.perturbation = parse_perturbation(f.perturb);
    if (sub->count("--format") > 0)
      cfg.format = format;
    if (sub->count("--jobs") > 0 || f.config.empty())
      cfg.jobs = f.jobs;
    if (g.theorems.empty())
      throw UsageError("at least one theorem must be selected");

    SweepResult result;
    try {
      result = sweep_verify(g, cfg.jobs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const json doc = report_document(is_verify ? "verify" : "sweep", g, result);
    write_report(out, doc, cfg.format);
    return result.summary.failed == 0 ? 0 : static_cast<int>(ExitCode::failures);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const auto& a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace gbsym::cli
