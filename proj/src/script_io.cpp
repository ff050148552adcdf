#include "hypkit/script_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hypkit/error.hpp"

namespace hypkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ScriptFormatError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Param parse_param(const json& j, const std::string& where) {
  Param p;
  p.name = text(field(j, "name", where), where + ".name");
  const std::string kind = text(field(j, "kind", where), where + ".kind");
  try {
    p.kind = param_kind_from_string(kind);
  } catch (const DomainError& e) {
    fail(where + ".kind", e.what());
  }
  if (j.contains("value")) {
    const json& v = j["value"];
    const std::string vw = where + ".value";
    if (p.kind == ParamKind::point) {
      if (!v.is_array() || v.size() != 2) fail(vw, "a point value is [u, v]");
      p.value = {number(v[0], vw + "[0]"), number(v[1], vw + "[1]")};
    } else {
      p.value = {number(v, vw)};
    }
  }
  if (j.contains("certificate")) p.certificate = text(j["certificate"], where + ".certificate");
  return p;
}

Step parse_step(const json& j, const std::string& where) {
  Step s;
  s.op = text(field(j, "op", where), where + ".op");
  const json& args = array(field(j, "args", where), where + ".args");
  for (std::size_t i = 0; i < args.size(); ++i) s.args.push_back(text(args[i], at(where + ".args", i)));
  if (j.contains("selector")) {
    try {
      s.selector = selector_from_string(text(j["selector"], where + ".selector"));
    } catch (const DomainError& e) {
      fail(where + ".selector", e.what());
    }
  }
  return s;
}

Assertion parse_assert(const json& j, const std::string& where) {
  Assertion a;
  a.predicate = text(field(j, "predicate", where), where + ".predicate");
  const json& args = array(field(j, "args", where), where + ".args");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].is_string()) {
      a.args.emplace_back(args[i].get<std::string>());
    } else {
      a.args.emplace_back(number(args[i], at(where + ".args", i)));
    }
  }
  if (j.contains("tol")) {
    a.tol = number(j["tol"], where + ".tol");
    if (!(a.tol > 0.0)) fail(where + ".tol", "tolerance must be positive");
  }
  return a;
}

}  // namespace

Script parse_script(const std::string& source) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ScriptFormatError(std::string("invalid JSON: ") + e.what());
  }
  Script s;
  s.name = root.contains("name") ? text(root["name"], "name") : "";
  if (!root.is_object()) fail("script", "expected an object");
  if (root.contains("params")) {
    const json& ps = array(root["params"], "params");
    for (std::size_t i = 0; i < ps.size(); ++i) s.params.push_back(parse_param(ps[i], at("params", i)));
  }
  const json& steps = array(field(root, "steps", "script"), "steps");
  for (std::size_t i = 0; i < steps.size(); ++i) s.steps.push_back(parse_step(steps[i], at("steps", i)));
  if (root.contains("asserts")) {
    const json& as = array(root["asserts"], "asserts");
    for (std::size_t i = 0; i < as.size(); ++i) s.asserts.push_back(parse_assert(as[i], at("asserts", i)));
  }
  if (root.contains("outputs")) {
    const json& os = array(root["outputs"], "outputs");
    for (std::size_t i = 0; i < os.size(); ++i) s.outputs.push_back(text(os[i], at("outputs", i)));
  }
  return s;
}

Script load_script(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScriptFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

std::string dump_script(const Script& script) {
  json root;
  root["name"] = script.name;
  root["params"] = json::array();
  for (const Param& p : script.params) {
    json j{{"name", p.name}, {"kind", to_string(p.kind)}};
    if (p.kind == ParamKind::point) {
      j["value"] = p.value;
    } else if (!p.value.empty()) {
      j["value"] = p.value.front();
    }
    if (!p.certificate.empty()) j["certificate"] = p.certificate;
    root["params"].push_back(std::move(j));
  }
  root["steps"] = json::array();
  for (const Step& s : script.steps) {
    json j{{"op", s.op}, {"args", s.args}};
    if (s.selector != Selector::none) j["selector"] = to_string(s.selector);
    root["steps"].push_back(std::move(j));
  }
  root["asserts"] = json::array();
  for (const Assertion& a : script.asserts) {
    json args = json::array();
    for (const AssertArg& arg : a.args) std::visit([&](const auto& v) { args.push_back(v); }, arg);
    root["asserts"].push_back(json{{"predicate", a.predicate}, {"args", std::move(args)}, {"tol", a.tol}});
  }
  root["outputs"] = script.outputs;
  return root.dump(2) + "\n";
}

void save_script(const std::filesystem::path& path, const Script& script) {
  std::ofstream out(path);
  if (!out) throw ScriptFormatError("cannot write " + path.string());
  out << dump_script(script);
}

}  // namespace hypkit
