#include "yaoconn/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "yaoconn/counterexamples.hpp"
#include "yaoconn/geometry.hpp"
#include "yaoconn/graphs.hpp"
#include "yaoconn/radius.hpp"
#include "yaoconn/rng.hpp"

namespace yaoconn {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::map<std::string, std::string> family_metadata(Family family, const ConstructionParams& p,
                                                   double eps, int r) {
  return {
      {"family", family_name(family)}, {"d", fmt(p.d)},
      {"eps", fmt(eps)},               {"alpha", fmt(p.alpha)},
      {"r", std::to_string(r)},
  };
}

std::string report_detail(const VerificationReport& rep) {
  std::string s = "g1_connected=" + std::string(rep.g1_connected ? "yes" : "no") +
                  " gd_is_path=" + std::string(rep.gd_is_path ? "yes" : "no") +
                  " g1_is_path=" + std::string(rep.g1_is_path ? "yes" : "no") +
                  " components=" + std::to_string(rep.component_count) +
                  " pq_in_yao=" + std::string(rep.pq_edge_in_yao ? "yes" : "no");
  for (const auto& v : rep.violated_inequalities) s += "; " + v;
  return s;
}

// Disconnection claim for one constructed instance, plus (when reconnect_d
// is positive) its reconnection counterpart at the proven upper-bound radius.
void family_claims(std::vector<ClaimResult>& out, Family family, int k,
                   const ConstructionParams& params, double reconnect_d,
                   bool require_pq_absent) {
  const std::string base = std::string(family_name(family)) + " d=" + fmt(params.d) +
                           " eps=" + (params.eps ? fmt(*params.eps) : "auto") +
                           " alpha=" + fmt(params.alpha);

  ClaimResult lower;
  lower.name = base + ": Y" + std::to_string(k) + " splits into 2 components";
  ClaimResult upper;
  upper.name = base + ": Y" + std::to_string(k) + " reconnects at d=" + fmt(reconnect_d);
  bool have_upper = reconnect_d > 0.0;
  try {
    const PointSet s = family == Family::y4_lower   ? gen_y4_lower(params)
                       : family == Family::y3_lower ? gen_y3_lower(params)
                                                    : gen_y2_lower(params);
    const int r = (static_cast<int>(s.size()) - (family == Family::y3_lower ? 4 : 2)) / 2;
    const auto meta =
        family_metadata(family, params, params.eps.value_or(0.0), r);

    const VerificationReport rep = verify_counterexample(s, family, k, params.d);
    lower.pass = rep.passes() && rep.component_count == 2;
    if (require_pq_absent) lower.pass = lower.pass && !rep.pq_edge_in_yao;
    lower.detail = report_detail(rep);
    if (!lower.pass) {
      lower.witness = s;
      lower.witness_metadata = meta;
    }

    if (have_upper) {
      const GeomGraph yk_wide =
          yao_undirected(disk_graph(std::make_shared<const PointSet>(s), reconnect_d),
                         YaoParams{k, TieBreak::smallest_index});
      const int comps = static_cast<int>(components(yk_wide).size());
      upper.pass = comps == 1;
      upper.detail = "components=" + std::to_string(comps);
      if (!upper.pass) {
        upper.witness = s;
        upper.witness_metadata = meta;
      }
    }
  } catch (const std::exception& e) {
    lower.pass = false;
    lower.detail = std::string("construction failed: ") + e.what();
    upper.pass = false;
    upper.detail = lower.detail;
  }
  out.push_back(std::move(lower));
  if (have_upper) out.push_back(std::move(upper));
}

// Random radius-bound claim: run half the trials under each instance model
// and require every observed connectivity radius to stay at or below
// `bound` (within 1e-9).
void radius_bound_claims(std::vector<ClaimResult>& out, int k, double bound,
                         const std::string& bound_label, const SuiteOptions& opt) {
  const InstanceModel models[2] = {InstanceModel::incremental_disk,
                                   InstanceModel::perturbed_grid};
  const char* model_names[2] = {"incremental-disk", "perturbed-grid"};
  const int per_model_trials[2] = {opt.trials - opt.trials / 2, opt.trials / 2};
  for (int m = 0; m < 2; ++m) {
    if (per_model_trials[m] <= 0) continue;
    ClaimResult c;
    c.name = "Y" + std::to_string(k) + " radius <= " + bound_label + " over " +
             std::to_string(per_model_trials[m]) + " " + model_names[m] + " instances (n=" +
             std::to_string(opt.n) + ")";
    const BoundStudy study =
        bound_study(k, per_model_trials[m], opt.n, opt.seed, models[m], opt.cap);
    c.pass = study.unbounded_count == 0 && study.max_radius <= bound + 1e-9;
    c.detail = "max=" + fmt(study.max_radius) + " mean=" + fmt(study.mean_radius) +
               " unbounded=" + std::to_string(study.unbounded_count);
    if (!c.pass) {
      for (std::size_t t = 0; t < study.by_trial.size(); ++t) {
        const auto& trial = study.by_trial[t];
        if (!trial.bounded || trial.radius > bound + 1e-9) {
          InstanceConfig cfg;
          cfg.n = opt.n;
          cfg.seed = Rng::derive(opt.seed, t);
          cfg.model = models[m];
          c.witness = random_connected_instance(cfg);
          c.witness_metadata = {{"model", model_names[m]},
                                {"n", std::to_string(opt.n)},
                                {"seed", std::to_string(cfg.seed)},
                                {"trial", std::to_string(t)},
                                {"radius", trial.bounded ? fmt(trial.radius) : "unbounded"}};
          break;
        }
      }
    }
    out.push_back(std::move(c));
  }
}

Point sample_point(Rng& rng) {
  return Point{rng.next_double(-10.0, 10.0), rng.next_double(-10.0, 10.0)};
}

}  // namespace

std::vector<ClaimResult> suite_y4_family(const SuiteOptions&) {
  std::vector<ClaimResult> out;
  const double ds[] = {1.0, 1.1, 1.2, 1.3, 1.4};
  const double alphas[] = {1e-3, 1e-4};
  const double quantiles[] = {0.25, 0.5, 0.75};
  for (double d : ds) {
    for (double alpha : alphas) {
      for (double t : quantiles) {
        ConstructionParams p;
        p.d = d;
        p.eps = t * y4_eps_upper(d);
        p.alpha = alpha;
        p.r = 3;
        family_claims(out, Family::y4_lower, 4, p, std::sqrt(2.0), false);
      }
    }
  }
  return out;
}

std::vector<ClaimResult> suite_y4_radius(const SuiteOptions& opt) {
  std::vector<ClaimResult> out;
  radius_bound_claims(out, 4, std::sqrt(2.0), "sqrt(2)", opt);
  return out;
}

std::vector<ClaimResult> suite_y3_family(const SuiteOptions&) {
  std::vector<ClaimResult> out;
  const double ds[] = {1.0, 1.02, 1.04, 1.05};
  for (double d : ds) {
    ConstructionParams p;
    p.d = d;
    p.eps = 0.5 * (y3_eps_lower(d) + y3_eps_upper(d));
    p.alpha = 1e-4;
    p.r = 3;
    family_claims(out, Family::y3_lower, 3, p, 2.0 / std::sqrt(3.0), true);
  }
  return out;
}

std::vector<ClaimResult> suite_y3_radius(const SuiteOptions& opt) {
  std::vector<ClaimResult> out;
  radius_bound_claims(out, 3, 2.0 / std::sqrt(3.0), "2/sqrt(3)", opt);
  return out;
}

std::vector<ClaimResult> suite_y2_family(const SuiteOptions&) {
  std::vector<ClaimResult> out;
  const double ds[] = {1.0, 2.0, 5.0, 10.0};
  for (double d : ds) {
    ConstructionParams p;
    p.d = d;
    p.eps = 0.5;
    p.alpha = 1e-4;
    // No reconnection claim: no finite reconnection radius is proven for k=2.
    family_claims(out, Family::y2_lower, 2, p, 0.0, false);

    // Chain length must track the derived closed-form minimum within +-1.
    ClaimResult c;
    c.name = std::string("y2-lb d=") + fmt(d) + ": chain length near derived minimum";
    const int r_auto = y2_min_chain_length(d, 0.5, 1e-4);
    const int r_closed = static_cast<int>(std::floor(0.5 + std::sqrt(d * d - 1.0))) + 1;
    c.pass = std::abs(r_auto - r_closed) <= 1;
    c.detail = "r=" + std::to_string(r_auto) + " derived=" + std::to_string(r_closed);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClaimResult> suite_lemmas(const SuiteOptions& opt) {
  std::vector<ClaimResult> out;
  const long long n = opt.samples;

  {
    // Rhombus distance: symmetry within 1e-9 and the Euclidean sandwich
    // (sqrt(3)/2) d_R <= |ab| <= d_R within 1e-12.
    ClaimResult sym;
    sym.name = "rhombus distance is symmetric (" + std::to_string(n) + " samples)";
    ClaimResult sandwich;
    sandwich.name = "rhombus distance sandwiches Euclidean (" + std::to_string(n) + " samples)";
    Rng rng(Rng::derive(opt.seed, 101));
    long long sym_bad = 0, sand_bad = 0;
    double worst_sym = 0.0;
    Point sym_wa{}, sym_wb{}, sand_wa{}, sand_wb{};
    for (long long i = 0; i < n; ++i) {
      const Point a = sample_point(rng);
      Point b = sample_point(rng);
      if (b == a) b.x += 0.5;
      const double dr = d_rhombus(a, b, 3);
      const double dr_rev = d_rhombus(b, a, 3);
      const double e = euclid(a, b);
      if (std::fabs(dr - dr_rev) > 1e-9) {
        if (sym_bad++ == 0) { sym_wa = a; sym_wb = b; }
      }
      worst_sym = std::max(worst_sym, std::fabs(dr - dr_rev));
      if (!(dr * (std::sqrt(3.0) / 2.0) - 1e-12 <= e && e <= dr + 1e-12)) {
        if (sand_bad++ == 0) { sand_wa = a; sand_wb = b; }
      }
    }
    sym.pass = sym_bad == 0;
    sym.detail = "violations=" + std::to_string(sym_bad) + " worst=" + fmt(worst_sym);
    if (!sym.pass) sym.witness = PointSet({sym_wa, sym_wb}, {"a", "b"});
    sandwich.pass = sand_bad == 0;
    sandwich.detail = "violations=" + std::to_string(sand_bad);
    if (!sandwich.pass) sandwich.witness = PointSet({sand_wa, sand_wb}, {"a", "b"});
    out.push_back(std::move(sym));
    out.push_back(std::move(sandwich));
  }

  {
    // Strict contraction: for b, c in the same half-cone of a with
    // |ac| <= |ab|, require d_R(b, c) < d_R(a, b) with zero violations.
    ClaimResult c;
    c.name = "rhombus contraction in shared half-cones (" + std::to_string(n) + " samples)";
    Rng rng(Rng::derive(opt.seed, 202));
    long long bad = 0;
    Point wa{}, wb{}, wc{};
    const double cone_w = kTwoPi / 3.0;
    const double half_w = cone_w / 2.0;
    const double margin = 1e-9;
    for (long long i = 0; i < n; ++i) {
      const Point a = sample_point(rng);
      const int cone = static_cast<int>(rng.next_below(3));
      const bool upper_half = rng.next_below(2) == 1;
      const double base = cone * cone_w + (upper_half ? half_w : 0.0);
      const double phi_b = rng.next_double(base + margin, base + half_w - margin);
      const double phi_c = rng.next_double(base + margin, base + half_w - margin);
      const double len_b = rng.next_double(1e-6, 10.0);
      const double len_c = rng.next_double(1e-6, len_b);
      const Point b{a.x + len_b * std::cos(phi_b), a.y + len_b * std::sin(phi_b)};
      const Point pc{a.x + len_c * std::cos(phi_c), a.y + len_c * std::sin(phi_c)};
      if (b == pc) continue;
      if (!(d_rhombus(b, pc, 3) < d_rhombus(a, b, 3))) {
        if (bad++ == 0) { wa = a; wb = b; wc = pc; }
      }
    }
    c.pass = bad == 0;
    c.detail = "violations=" + std::to_string(bad);
    if (!c.pass) c.witness = PointSet({wa, wb, wc}, {"a", "b", "c"});
    out.push_back(std::move(c));
  }

  {
    // Chebyshev sandwich: d_inf <= |ab| <= sqrt(2) d_inf within 1e-12.
    ClaimResult c;
    c.name = "chebyshev distance sandwiches Euclidean (" + std::to_string(n) + " samples)";
    Rng rng(Rng::derive(opt.seed, 303));
    long long bad = 0;
    Point wa{}, wb{};
    for (long long i = 0; i < n; ++i) {
      const Point a = sample_point(rng);
      const Point b = sample_point(rng);
      const double linf = l_inf(a, b);
      const double e = euclid(a, b);
      if (!(linf <= e && e <= std::sqrt(2.0) * linf + 1e-12)) {
        if (bad++ == 0) { wa = a; wb = b; }
      }
    }
    c.pass = bad == 0;
    c.detail = "violations=" + std::to_string(bad);
    if (!c.pass) c.witness = PointSet({wa, wb}, {"a", "b"});
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClaimResult> run_suites(const std::string& which, const SuiteOptions& opt) {
  std::vector<ClaimResult> out;
  auto append = [&out](std::vector<ClaimResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  if (which == "1") {
    append(suite_y4_family(opt));
  } else if (which == "2") {
    append(suite_y4_radius(opt));
  } else if (which == "3") {
    append(suite_y3_family(opt));
  } else if (which == "4") {
    append(suite_y3_radius(opt));
  } else if (which == "y2") {
    append(suite_y2_family(opt));
  } else if (which == "lemmas") {
    append(suite_lemmas(opt));
  } else if (which == "all") {
    append(suite_y4_family(opt));
    append(suite_y4_radius(opt));
    append(suite_y3_family(opt));
    append(suite_y3_radius(opt));
    append(suite_y2_family(opt));
    append(suite_lemmas(opt));
  } else {
    throw std::invalid_argument("unknown suite id '" + which +
                                "' (expected 1, 2, 3, 4, y2, lemmas, or all)");
  }
  return out;
}

}  // namespace yaoconn
