#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "config.hpp"
#include "output.hpp"
#include "warpstab/curvature.hpp"
#include "warpstab/embedding.hpp"
#include "warpstab/oracle.hpp"
#include "warpstab/stability.hpp"

namespace warpstab::cli {

namespace {

struct Flags {
  std::string config;
  std::string model;
  double m = 0, c = 0, q = 0, b = 0, cap = 0, tol = 0;
  std::vector<double> interval;
  int order = 16;
  int grid = 201;
  std::string out, svg;
  // per command
  std::string what = "slice";
  bool table = false;
  std::optional<double> t_max;
  double step = 1e-3;
  double r = 0, t = 0, H = 0;
  int l_max = 8;
  double eps = 0, a = 0;
  bool scan = false;
  std::string suite;
  int n_t = 20, n_phi = 10;
};

struct Given {
  CLI::Option *config, *model, *m, *c, *q, *b, *cap, *tol, *interval, *order, *grid, *out, *svg;
  CLI::Option *r, *t, *H, *l_max, *eps, *a;
};

RunConfig assemble(const Flags& f, const Given& g) {
  RunConfig cfg = g.config->count() ? load_config(f.config) : RunConfig{};
  if (g.model->count()) {
    if (f.model == "ellipsoid" || f.model == "hyperboloid") {
      cfg.model.kind = "profile";
      cfg.model.shape = f.model;
    } else {
      cfg.model.kind = f.model;
    }
  }
  if (g.m->count()) cfg.model.m = f.m;
  if (g.c->count()) cfg.model.c = f.c;
  if (g.q->count()) cfg.model.q = f.q;
  if (g.b->count()) cfg.model.b = f.b;
  if (g.cap->count()) cfg.model.cap = f.cap;
  if (g.tol->count()) cfg.tol = f.tol;
  if (g.interval->count()) cfg.interval = Interval{f.interval[0], f.interval[1]};
  if (g.order->count()) cfg.order = f.order;
  if (g.grid->count()) cfg.grid = f.grid;
  if (g.out->count()) cfg.out = f.out;
  if (g.svg->count()) cfg.svg = f.svg;
  if (g.l_max->count()) cfg.l_max = f.l_max;
  validate(cfg);
  return cfg;
}

std::vector<double> linspace(Interval iv, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = i == n - 1 ? iv.hi : iv.lo + iv.width() * i / (n - 1);
  return x;
}

void header(std::ostream& out, const WarpingModel& model, Interval iv) {
  kv(out, "model", model.describe());
  kv(out, "native", model.native_name());
  kv(out, "interval_lo", iv.lo);
  kv(out, "interval_hi", iv.hi);
  kv(out, "capped", model.capped());
  if (model.capped()) kv(out, "domain_hi", model.native_domain().hi);
}

bool is_slice_model(const WarpingModel& m) { return m.kind() != ModelKind::profile; }

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  const WarpingModel model = make_model(cfg.model);
  if (f.what == "trajectory") {
    double t_max = 10.0;
    if (f.t_max) {
      t_max = *f.t_max;
    } else if (model.kind() == ModelKind::dss && model.c() > 0.0) {
      // default stops on the last whole step before h turns at the outer root
      const double t_turn = model.trajectory()->samples.back().t;
      t_max = std::min(t_max, std::floor(t_turn / f.step) * f.step);
    }
    const Trajectory tr = integrate_h(model, t_max, f.step);
    CsvTable tab({"t", "h", "hp", "hpp", "residual"});
    for (const auto& s : tr.samples) tab.add({s.t, s.h, s.hp, s.hpp, s.residual});
    emit(tab, cfg.out, out);
    if (!cfg.svg.empty()) {
      write_svg(cfg.svg, model.describe() + ": warping function", "t", tab.column(0),
                {{"h", tab.column(1)}, {"h'", tab.column(2)}});
    }
    if (!cfg.out.empty()) {
      kv(out, "model", model.describe());
      kv(out, "samples", static_cast<int>(tr.samples.size()));
      kv(out, "step", tr.step);
      kv(out, "residual_max", tr.residual_max);
    }
    if (f.table) tab.write_aligned(out);
    return exit_ok;
  }

  const Interval iv = resolve_interval(cfg, model);
  const std::vector<double> xs = linspace(iv, cfg.grid);
  if (f.what == "curvature") {
    CsvTable tab({"t", "h", "k_tan", "k_rad", "scal", "ric_nu_minus1", "brendle_lhs", "brendle_rhs"});
    for (double x : xs) {
      const CurvatureState s = curvature_state_native(model, x);
      const BrendleResult br = brendle_condition_native(model, x);
      tab.add({s.t, s.h, s.k_tan, s.k_rad, scalar_curvature(s), ricci_normal(s, -1.0), br.lhs, br.rhs});
    }
    emit(tab, cfg.out, out);
    if (!cfg.svg.empty()) {
      write_svg(cfg.svg, model.describe() + ": sectional curvatures", "t", tab.column(0),
                {{"K_tan", tab.column(2)}, {"K_rad", tab.column(3)}, {"scal", tab.column(4)}});
    }
    if (!cfg.out.empty()) header(out, model, iv);
    if (f.table) tab.write_aligned(out);
    return exit_ok;
  }
  if (f.what != "slice") throw Error(ErrorCode::config_parse, "--what must be slice, curvature or trajectory");

  if (!is_slice_model(model)) {
    throw Error(ErrorCode::model_kind_mismatch, "slice sweep needs a dss, rn or space-form model");
  }
  // H(r)^2 - required(r) in the native parameter
  auto margin_at = [&](double x) {
    const Jet j = model.jet_native(x);
    return j.hp * j.hp / (j.h * j.h) - slice_required_h2(model, j.h);
  };
  CsvTable tab({"r", "H2_slice", "H2_required", "margin", "stable_slice"});
  for (double x : xs) {
    const Jet j = model.jet_native(x);
    const double h2 = j.hp * j.hp / (j.h * j.h);
    const double req = slice_required_h2(model, j.h);
    const SliceReport rep = slice_report(model, j.t, cfg.l_max);
    tab.add({j.h, h2, req, h2 - req, rep.stable ? 1.0 : 0.0});
  }
  emit(tab, cfg.out, out);
  if (!cfg.svg.empty()) {
    write_svg(cfg.svg, model.describe() + ": slice mean curvature against the hypothesis", "r", tab.column(0),
              {{"H(r)^2", tab.column(1)}, {"required", tab.column(2)}});
  }
  if (!cfg.out.empty()) {
    header(out, model, iv);
    const auto& rows = tab.rows();
    int crossings = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double a = rows[i][3], b = rows[i + 1][3];
      if (a == 0.0 || (a < 0.0) != (b < 0.0)) {
        ++crossings;
        double x = xs[i];
        if (a != 0.0) x = bisect(margin_at, xs[i], xs[i + 1], 1e-14 * std::max(1.0, std::abs(xs[i])));
        kv(out, "crossing_" + std::to_string(crossings) + "_r", model.jet_native(x).h);
      }
    }
    kv(out, "crossings", crossings);
    if (model.kind() == ModelKind::dss) kv(out, "threshold_closed", 1.5 * model.m());
    if (model.kind() == ModelKind::rn) {
      const double m = model.m(), q = model.q();
      kv(out, "threshold_closed", (3 * m + std::sqrt(9 * m * m - 32 * q * q)) / 4);
    }
    double mn = INFINITY;
    for (const auto& r : rows) mn = std::min(mn, r[3]);
    kv(out, "margin_min", mn);
  }
  if (f.table) tab.write_aligned(out);
  return exit_ok;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const WarpingModel model = make_model(cfg.model);
  const Interval iv = resolve_interval(cfg, model);
  const Classification cl = classify(model, iv);
  header(out, model, iv);
  kv(out, "theorem", cl.theorem);
  kv(out, "case", cl.case_id.empty() ? "none" : cl.case_id);
  if (cl.theorem == "theo-warped-2") {
    kv(out, "c0", cl.c0);
    kv(out, "c0_attained", cl.c0_attained);
  }
  kv(out, "ratio_min", cl.ratio_min);
  kv(out, "ratio_max", cl.ratio_max);
  kv(out, "ordering_tan_ge_rad", cl.ordering_tan_ge_rad);
  std::string path = "none";
  if (cl.ordering_tan_ge_rad && model.kind() == ModelKind::dss) path = "stab-ss";
  if (cl.ordering_tan_ge_rad && model.kind() == ModelKind::rn) path = "stab-rn";
  kv(out, "slice_path", path);
  if (path != "none") {
    try {
      kv(out, "slice_threshold_r", slice_threshold_radius(model).r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_crossing) throw;
      kv(out, "slice_threshold_r", "none");
    }
  }
  kv(out, "brendle", cl.brendle_holds ? "holds" : "fails");
  kv(out, "brendle_worst", cl.brendle_worst);
  kv(out, "reason", cl.reason);
  return cl.theorem == "inapplicable" ? exit_violated : exit_ok;
}

// ---- slice ------------------------------------------------------------------

int cmd_slice(const Flags& f, const Given& g, const RunConfig& cfg, std::ostream& out) {
  const WarpingModel model = make_model(cfg.model);
  if (g.r->count() == g.t->count()) throw Error(ErrorCode::config_parse, "slice needs exactly one of --r, --t");
  double t = f.t;
  if (g.r->count()) {
    if (model.kind() != ModelKind::dss && model.kind() != ModelKind::rn) {
      throw Error(ErrorCode::config_parse, "--r needs a dss or rn model; use --t");
    }
    t = model.t_of_native(f.r);
  }
  const SliceReport rep = slice_report(model, t, cfg.l_max);
  kv(out, "model", model.describe());
  kv(out, "t", rep.t);
  kv(out, "r", rep.r);
  kv(out, "H", rep.H);
  for (std::size_t l = 0; l < rep.mu.size(); ++l) kv(out, "mu_" + std::to_string(l + 1), rep.mu[l]);
  kv(out, "lambda1", rep.lambda1);
  kv(out, "rayleigh_mu1", rep.rayleigh_mu1);
  kv(out, "stable", rep.stable);
  kv(out, "verdicts_agree", rep.stable_by_mu == rep.stable_by_ordering && rep.stable_by_mu == rep.stable_by_rayleigh);
  for (const auto& [name, cmp] : rep.threshold_cmp) {
    kv(out, name + "_required", cmp.required);
    kv(out, name + "_satisfied", cmp.satisfied);
  }
  const SliceIntegrals si = slice_integral_checks(model, t, cfg.order);
  kv(out, "souam_integral", si.souam);
  kv(out, "genus_integral", si.genus);
  kv(out, "gauss_bonnet", si.gauss_bonnet);
  if (!is_slice_model(model)) {
    kv(out, "hypothesis", "n/a");
    return exit_ok;
  }
  const double H = g.H->count() ? f.H : rep.H;
  const HypothesisVerdict v = thm_slice_hypothesis(model, rep.r, H);
  kv(out, "H_tested", H);
  kv(out, "required", v.required);
  kv(out, "actual", v.actual);
  kv(out, "margin", v.margin);
  kv(out, "satisfied", v.satisfied);
  kv(out, "boundary", v.boundary);
  if (v.has_gate) {
    kv(out, "gate", v.gate);
    kv(out, "gate_margin", v.gate_margin);
  }
  std::string verdict = v.boundary ? "boundary" : (v.satisfied && v.gate ? "satisfied" : "violated");
  kv(out, "hypothesis", verdict);
  if (v.has_gate && !v.gate) return exit_violated;
  if (v.boundary) return exit_boundary;
  return v.satisfied ? exit_ok : exit_violated;
}

// ---- threshold --------------------------------------------------------------

template <class F>
void guarded(std::ostream& out, const std::string& key, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    kv(out, key, "n/a");
    kv(out, key + "_reason", to_string(e.code()));
  }
}

int cmd_threshold(const Flags& f, const Given& g, const RunConfig& cfg, std::ostream& out) {
  if (g.eps->count() || g.a->count()) {
    if (!(g.eps->count() && g.a->count())) throw Error(ErrorCode::config_parse, "--eps and --a go together");
    const StabilityWindow w = stability_window(f.eps, f.a);
    kv(out, "eps", f.eps);
    kv(out, "a", f.a);
    kv(out, "delta", w.delta);
    kv(out, "window", w.window);
    kv(out, "window_check", eps_window_check(f.eps));
    if (!w.window) {
      kv(out, "case", w.case_id);
      kv(out, "h2_min", w.h2_min);
      if (f.scan) kv(out, "h2_scan", h2_threshold_scan(f.eps, f.a));
    }
    return exit_ok;
  }
  const WarpingModel model = make_model(cfg.model);
  const Interval iv = resolve_interval(cfg, model);
  header(out, model, iv);
  guarded(out, "c0", [&] {
    const C0Result r = c0(model, iv);
    kv(out, "c0", r.value);
    kv(out, "c0_case", r.case_id);
    kv(out, "c0_arg", r.arg);
    kv(out, "c0_attained", r.attained);
  });
  guarded(out, "stab_main_i", [&] {
    const Supremum s = stab_main_threshold(model, iv, MainCase::i);
    kv(out, "stab_main_i", s.value);
    kv(out, "stab_main_i_attained", s.attained);
  });
  guarded(out, "stab_main_ii", [&] {
    const Supremum s = stab_main_threshold(model, iv, MainCase::ii);
    kv(out, "stab_main_ii", s.value);
    kv(out, "stab_main_ii_attained", s.attained);
  });
  guarded(out, "general", [&] {
    const GeneralThreshold gt = general_threshold(model, iv);
    kv(out, "general", gt.value);
    kv(out, "general_raw", gt.raw);
    kv(out, "general_vacuous", gt.vacuous);
    kv(out, "frensel", gt.frensel);
    kv(out, "frensel_raw", gt.frensel_raw);
    kv(out, "frensel_vacuous", gt.frensel_vacuous);
  });
  return exit_ok;
}

// ---- verify -----------------------------------------------------------------

struct VerifyRow {
  std::string model, quantity;
  double error, at_t, at_phi1;
  bool pass;
};

bool ktan_positive(const WarpingModel& model, Interval iv) {
  for (double x : linspace(iv, 101)) {
    if (!(curvature_state_native(model, x).k_tan > 0.0)) return false;
  }
  return true;
}

// H^2 + K_tan on H^3 slices is 1/sinh^2 t, a difference of O(1) terms: only
// meaningful in double while sinh t stays moderate
Interval integrals_interval(const WarpingModel& model, Interval iv) {
  if (model.kind() == ModelKind::space_form && model.c() < 0.0) {
    iv.hi = std::min(iv.hi, 5.0 / std::sqrt(-model.c()));
  }
  return iv;
}

int cmd_verify(const Flags& f, const Given& g, const RunConfig& cfg, std::ostream& out) {
  if (f.suite != "curvature" && f.suite != "embedding" && f.suite != "integrals") {
    throw Error(ErrorCode::config_parse, "--suite must be curvature, embedding or integrals");
  }
  const bool single = !cfg.model.kind.empty();
  const std::vector<WarpingModel> models = single ? std::vector{make_model(cfg.model)} : builtin_models();
  std::vector<VerifyRow> rows;
  std::vector<std::pair<std::string, std::string>> skipped;
  bool all_pass = true;
  int failed = 0;
  kv(out, "suite", f.suite);
  for (const auto& model : models) {
    const Interval iv = resolve_interval(cfg, model);
    bool pass = true;
    if (f.suite == "curvature") {
      const OracleReport rep = verify_model(model, iv, f.n_t, f.n_phi, cfg.tol.value_or(1e-6));
      for (const auto& e : rep.entries) {
        rows.push_back({rep.model, e.quantity, e.max_error, e.at_t, e.at_phi1, e.max_error <= rep.tol});
      }
      rows.push_back({rep.model, "bianchi", rep.bianchi_max, 0.0, 0.0, rep.bianchi_max <= 1e-8});
      pass = rep.pass;
    } else if (f.suite == "embedding") {
      if (!ktan_positive(model, iv)) {
        if (single) throw Error(ErrorCode::embedding_unavailable, "K_tan <= 0 on the interval of " + model.describe());
        skipped.emplace_back(model.describe(), "K_tan <= 0");
        continue;
      }
      const EmbeddingReport rep = verify_embedding(model, iv, f.n_t, cfg.tol.value_or(1e-6));
      for (const auto& e : rep.entries) {
        rows.push_back({rep.model, e.quantity, e.max_error, e.at_t, e.at_phi1, e.max_error <= rep.tol});
      }
      rows.push_back({rep.model, "relation", rep.relation_residual, 0.0, 0.0, rep.relation_residual <= 1e-10});
      pass = rep.pass;
    } else {
      const Interval jv = g.interval->count() ? iv : integrals_interval(model, iv);
      const IntegralReport rep = verify_integrals(model, jv, f.n_t, cfg.order, cfg.tol.value_or(1e-8));
      const double eight_pi = 8.0 * std::numbers::pi;
      rows.push_back({rep.model, "souam - 4pi", rep.souam_err, model.t_of_native(rep.worst_native), 0.0,
                      rep.souam_err <= rep.tol});
      rows.push_back({rep.model, "gauss_bonnet - 4pi", rep.gauss_bonnet_err, model.t_of_native(rep.worst_native),
                      0.0, rep.gauss_bonnet_err <= rep.tol});
      rows.push_back({rep.model, "genus / 8pi", rep.genus_max / eight_pi, 0.0, 0.0,
                      rep.genus_max <= eight_pi * (1 + 1e-10)});
      pass = rep.pass;
    }
    all_pass = all_pass && pass;
    failed += pass ? 0 : 1;
  }

  std::size_t wm = 5, wq = 8;
  for (const auto& r : rows) wm = std::max(wm, r.model.size()), wq = std::max(wq, r.quantity.size());
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("model", wm) << "  " << pad("quantity", wq) << "  " << pad("max_error", 12) << "  "
      << pad("at_t", 12) << "  " << pad("at_phi1", 8) << "  status\n";
  for (const auto& r : rows) {
    char e[32], t[32], p[32];
    std::snprintf(e, sizeof e, "%.4e", r.error);
    std::snprintf(t, sizeof t, "%.6g", r.at_t);
    std::snprintf(p, sizeof p, "%.4g", r.at_phi1);
    out << pad(r.model, wm) << "  " << pad(r.quantity, wq) << "  " << pad(e, 12) << "  " << pad(t, 12) << "  "
        << pad(p, 8) << "  " << (r.pass ? "ok" : "FAIL") << '\n';
  }
  for (const auto& [m, why] : skipped) kv(out, "skipped", m + " (" + why + ")");
  kv(out, "models", static_cast<int>(models.size() - skipped.size()));
  kv(out, "failed", failed);
  kv(out, "pass", all_pass);

  if (!cfg.out.empty()) {
    std::ofstream csv(cfg.out);
    if (!csv) throw Error(ErrorCode::invalid_parameters, "cannot write " + cfg.out);
    csv << "model,quantity,max_error,at_t,at_phi1,pass\n";
    for (const auto& r : rows) {
      csv << '"' << r.model << "\"," << r.quantity << ',' << num(r.error) << ',' << num(r.at_t) << ','
          << num(r.at_phi1) << ',' << (r.pass ? 1 : 0) << '\n';
    }
  }
  return all_pass ? exit_ok : exit_verification;
}

// ---- embed ------------------------------------------------------------------

int cmd_embed(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  const WarpingModel model = make_model(cfg.model);
  const Interval iv = resolve_interval(cfg, model);
  const FlatEmbedding emb = build_embedding(model, iv, cfg.grid);
  CsvTable tab({"t", "f", "h"});
  const auto& ts = emb.t_grid();
  const auto& fs = emb.f_samples();
  for (std::size_t i = 0; i < ts.size(); ++i) tab.add({ts[i], fs[i], model.jet(ts[i]).h});
  emit(tab, cfg.out, out);
  if (!cfg.svg.empty()) {
    write_svg(cfg.svg, model.describe() + ": meridian (h against f)", "f", tab.column(1), {{"h", tab.column(2)}});
  }
  if (!cfg.out.empty()) {
    header(out, model, iv);
    kv(out, "kappa", emb.kappa());
    kv(out, "samples", static_cast<int>(ts.size()));
    kv(out, "relation_residual", emb.relation_residual());
  }
  if (f.table) tab.write_aligned(out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature, slice stability and CMC thresholds of 3-dimensional warped products", "warpstab"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags f;
  Given g{};
  g.config = app.add_option("--config", f.config, "TOML run configuration");
  g.model = app.add_option("--model", f.model, "dss, rn, space_form, ellipsoid, hyperboloid, profile")
                ->check(CLI::IsMember({"dss", "rn", "space_form", "ellipsoid", "hyperboloid", "profile"}));
  g.m = app.add_option("--m", f.m, "mass parameter");
  g.c = app.add_option("--c", f.c, "cosmological / curvature constant");
  g.q = app.add_option("--q", f.q, "charge");
  g.b = app.add_option("--b", f.b, "profile semi-axis");
  g.cap = app.add_option("--cap", f.cap, "finite stand-in for an infinite end (default $WARPSTAB_CAP or 50)");
  g.interval = app.add_option("--interval", f.interval, "native interval a b")->expected(2);
  g.order = app.add_option("--order", f.order, "sphere quadrature order");
  g.tol = app.add_option("--tol", f.tol, "verification tolerance");
  g.grid = app.add_option("--grid", f.grid, "number of sample points");
  g.out = app.add_option("--out", f.out, "CSV output path (stdout when absent)");
  g.svg = app.add_option("--svg", f.svg, "SVG line plot output path");

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over the interval");
  sweep->add_option("--what", f.what, "slice (default), curvature or trajectory")
      ->check(CLI::IsMember({"slice", "curvature", "trajectory"}));
  sweep->add_flag("--table", f.table, "also print aligned columns");
  sweep->add_option("--t-max", f.t_max, "trajectory end time (default 10, or the outer root)");
  sweep->add_option("--step", f.step, "trajectory step");
  auto* classify_cmd = app.add_subcommand("classify", "which stability theorem applies, and c0");
  auto* slice = app.add_subcommand("slice", "Jacobi spectrum and hypothesis check for one slice");
  g.r = slice->add_option("--r", f.r, "slice radius (dss, rn)");
  g.t = slice->add_option("--t", f.t, "slice position in t");
  g.H = slice->add_option("--H", f.H, "mean curvature to test (default: the slice's own)");
  g.l_max = slice->add_option("--lmax", f.l_max, "highest spherical harmonic degree");
  auto* threshold = app.add_subcommand("threshold", "mean-curvature thresholds");
  g.eps = threshold->add_option("--eps", f.eps, "anisotropy ratio (K_rad - K_tan)/K_tan");
  g.a = threshold->add_option("--a", f.a, "embedding coefficient sqrt(K_tan)");
  threshold->add_flag("--scan", f.scan, "add the grid-scan value");
  auto* verify = app.add_subcommand("verify", "finite-difference and quadrature verification");
  verify->add_option("--suite", f.suite, "curvature, embedding or integrals")->required();
  verify->add_option("--nt", f.n_t, "t grid points");
  verify->add_option("--nphi", f.n_phi, "phi1 grid points");
  auto* embed = app.add_subcommand("embed", "rotational hypersurface profile t,f,h");
  embed->add_flag("--table", f.table, "also print aligned columns");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    const RunConfig cfg = assemble(f, g);
    if (sweep->parsed()) return cmd_sweep(f, cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (slice->parsed()) return cmd_slice(f, g, cfg, out);
    if (threshold->parsed()) return cmd_threshold(f, g, cfg, out);
    if (verify->parsed()) return cmd_verify(f, g, cfg, out);
    if (embed->parsed()) return cmd_embed(f, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return exit_parse;
}

}  // namespace warpstab::cli
