#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

namespace warpstab::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::config_parse: return exit_parse;
    case ErrorCode::hypothesis_violated:
    case ErrorCode::case_precondition_violated: return exit_violated;
    default: return exit_domain;
  }
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::config_parse, what); }

void reject_unknown(const toml::table& t, const std::string& name, std::initializer_list<std::string_view> keys) {
  for (const auto& [k, v] : t) {
    (void)v;
    if (std::find(keys.begin(), keys.end(), k.str()) == keys.end()) {
      bad("unknown key '" + std::string(k.str()) + "' in [" + name + "]");
    }
  }
}

std::optional<double> number(const toml::table& t, std::string_view key) {
  const toml::node* n = t.get(key);
  if (n == nullptr) return std::nullopt;
  if (auto v = n->value<double>()) {
    if (!std::isfinite(*v)) bad(std::string(key) + " is not finite");
    return v;
  }
  bad(std::string(key) + " must be a number");
}

std::optional<int> integer(const toml::table& t, std::string_view key) {
  const toml::node* n = t.get(key);
  if (n == nullptr) return std::nullopt;
  if (auto v = n->value_exact<int64_t>()) return static_cast<int>(*v);
  bad(std::string(key) + " must be an integer");
}

std::optional<std::string> text(const toml::table& t, std::string_view key) {
  const toml::node* n = t.get(key);
  if (n == nullptr) return std::nullopt;
  if (auto v = n->value<std::string>()) return v;
  bad(std::string(key) + " must be a string");
}

std::vector<double> numbers(const toml::table& t, std::string_view key) {
  const toml::node* n = t.get(key);
  if (n == nullptr) return {};
  const toml::array* a = n->as_array();
  if (a == nullptr) bad(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : *a) {
    auto v = e.value<double>();
    if (!v) bad(std::string(key) + " must be an array of numbers");
    out.push_back(*v);
  }
  return out;
}

const toml::table* section(const toml::table& root, std::string_view name) {
  const toml::node* n = root.get(name);
  if (n == nullptr) return nullptr;
  if (!n->is_table()) bad("[" + std::string(name) + "] must be a table");
  return n->as_table();
}

}  // namespace

RunConfig parse_config(const std::string& toml_text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(toml_text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source << ":" << e.source().begin.line << ": " << e.description();
    bad(msg.str());
  }
  reject_unknown(root, "top level", {"model", "run", "output"});
  RunConfig cfg;
  if (const auto* m = section(root, "model")) {
    reject_unknown(*m, "model", {"kind", "shape", "m", "c", "q", "b", "cap", "s", "u"});
    cfg.model.kind = text(*m, "kind").value_or("");
    cfg.model.shape = text(*m, "shape").value_or("");
    cfg.model.m = number(*m, "m");
    cfg.model.c = number(*m, "c");
    cfg.model.q = number(*m, "q");
    cfg.model.b = number(*m, "b");
    cfg.model.cap = number(*m, "cap");
    cfg.model.s = numbers(*m, "s");
    cfg.model.u = numbers(*m, "u");
  }
  if (const auto* r = section(root, "run")) {
    reject_unknown(*r, "run", {"interval", "grid", "order", "tol", "l_max"});
    const auto iv = numbers(*r, "interval");
    if (!iv.empty()) {
      if (iv.size() != 2) bad("interval needs exactly two numbers");
      cfg.interval = Interval{iv[0], iv[1]};
    }
    cfg.grid = integer(*r, "grid").value_or(cfg.grid);
    cfg.order = integer(*r, "order").value_or(cfg.order);
    cfg.tol = number(*r, "tol");
    cfg.l_max = integer(*r, "l_max").value_or(cfg.l_max);
  }
  if (const auto* o = section(root, "output")) {
    reject_unknown(*o, "output", {"csv", "svg"});
    cfg.out = text(*o, "csv").value_or("");
    cfg.svg = text(*o, "svg").value_or("");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void validate(const RunConfig& cfg) {
  if (cfg.tol && !(*cfg.tol > 0.0)) bad("tol must be positive");
  if (cfg.grid < 2) bad("grid must be at least 2");
  if (cfg.order < 1) bad("order must be at least 1");
  if (cfg.l_max < 1) bad("l_max must be at least 1");
  if (cfg.interval && !(cfg.interval->hi > cfg.interval->lo)) bad("interval must have lo < hi");
  if (cfg.model.cap && !(*cfg.model.cap > 0.0)) bad("cap must be positive");
}

WarpingModel make_model(const ModelSpec& spec) {
  auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v) bad(spec.kind + " model needs " + name);
    return *v;
  };
  const double cap = spec.cap.value_or(default_cap());
  if (spec.kind.empty()) bad("no model given (use --model or [model] kind)");
  if (spec.kind == "space_form") return WarpingModel::space_form(need(spec.c, "c"), cap);
  if (spec.kind == "dss") return WarpingModel::dss(need(spec.m, "m"), spec.c.value_or(0.0), cap);
  if (spec.kind == "rn") return WarpingModel::rn(need(spec.m, "m"), need(spec.q, "q"), cap);
  if (spec.kind == "profile") {
    ProfileCurve curve;
    if (spec.shape == "ellipsoid") {
      curve = ProfileCurve::ellipsoid(need(spec.b, "b"));
    } else if (spec.shape == "hyperboloid") {
      curve = ProfileCurve::hyperboloid(need(spec.b, "b"));
    } else if (spec.shape == "samples") {
      if (spec.s.size() != spec.u.size() || spec.s.size() < 5) bad("sampled profile needs matching s and u, 5+ points");
      curve = ProfileCurve::sampled(spec.s, spec.u);
    } else {
      bad("profile shape must be ellipsoid, hyperboloid or samples");
    }
    return WarpingModel::profile(curve, curve.default_interval(cap));
  }
  bad("unknown model kind '" + spec.kind + "'");
}

Interval resolve_interval(const RunConfig& cfg, const WarpingModel& model) {
  if (!cfg.interval) return working_interval(model);
  const Interval dom = model.native_domain();
  const Interval iv = *cfg.interval;
  const double slack = 1e-12 * std::max(1.0, dom.width());
  if (iv.lo < dom.lo - slack || iv.hi > dom.hi + slack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "interval [" << iv.lo << ", " << iv.hi << "] leaves the " << model.native_name() << "-domain ["
        << dom.lo << ", " << dom.hi << "] of " << model.describe();
    throw Error(ErrorCode::out_of_domain, msg.str());
  }
  // degenerate (h = 0) ends are pulled in as for the default interval
  const Interval work = working_interval(model);
  return {std::max(iv.lo, work.lo), std::min(iv.hi, work.hi)};
}

}  // namespace warpstab::cli
