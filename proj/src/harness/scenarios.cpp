#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "tcdyn/adiabatic.hpp"
#include "tcdyn/entanglement.hpp"
#include "tcdyn/envelope.hpp"
#include "tcdyn/errors.hpp"
#include "tcdyn/exact.hpp"
#include "tcdyn/harness.hpp"
#include "tcdyn/multiqubit.hpp"
#include "tcdyn/parallel.hpp"
#include "tcdyn/revival.hpp"
#include "tcdyn/special.hpp"

namespace tcdyn::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double tau_scale(const ModelParams& p) { return p.omega0_ratio() * std::exp(-0.5 * p.beta_squared()); }

TimeGrid raw_grid(const ScenarioConfig& cfg) {
  if (cfg.grid.scale == TimeScale::Raw) return TimeGrid::linspace(cfg.grid.start, cfg.grid.stop, cfg.grid.samples);
  const double s = tau_scale(cfg.params);
  if (!(s > 0.0)) throw ConfigError("grid.scale 'tau' needs omega0 > 0");
  return TimeGrid::linspace(cfg.grid.start / s, cfg.grid.stop / s, cfg.grid.samples);
}

std::vector<double> tau_values(const std::vector<double>& t, const ModelParams& p) {
  std::vector<double> out(t.size());
  const double s = tau_scale(p);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = s * t[i];
  return out;
}

FockTruncation truncation(const ScenarioConfig& cfg, double alpha_abs) {
  return cfg.n_max ? FockTruncation(*cfg.n_max) : FockTruncation::for_coherent(alpha_abs);
}

HamiltonianVariant variant_of(Engine e) { return e == Engine::RWA ? HamiltonianVariant::RWA : HamiltonianVariant::Full; }

Table time_table(const ScenarioConfig& cfg, const std::string& name, const std::vector<double>& t) {
  Table tab;
  tab.scenario = to_string(cfg.scenario);
  tab.name = name;
  tab.add("t", t);
  tab.add("tau", tau_values(t, cfg.params));
  return tab;
}

// Combined table: t, tau, then <column>_<engine> for every per-engine table.
Table combine(const ScenarioConfig& cfg, const std::vector<Table>& per_engine) {
  Table out;
  out.scenario = to_string(cfg.scenario);
  out.name = "combined";
  for (std::size_t c = 0; c < per_engine.front().columns.size(); ++c) {
    const auto& col = per_engine.front().columns[c];
    if (col == "t" || col == "tau" || col == "N") out.add(col, per_engine.front().numeric[c]);
  }
  for (const auto& tab : per_engine)
    for (std::size_t c = 0; c < tab.columns.size(); ++c) {
      const auto& col = tab.columns[c];
      if (col == "t" || col == "tau" || col == "N" || !tab.text[c].empty()) continue;
      out.add(col + "_" + tab.name, tab.numeric[c]);
    }
  return out;
}

// |K/2, -K/2> (x) D(K beta/2)|alpha>.
struct CoherentSetup {
  std::shared_ptr<const SpinBasis> basis;
  FockTruncation trunc{1};
  int spin_index = 0;
};

CoherentSetup coherent_setup(const ScenarioConfig& cfg) {
  const int k = cfg.params.n_qubits();
  const double shift = 0.5 * k * cfg.params.beta();
  CoherentSetup s;
  s.basis = std::make_shared<const SpinBasis>(SpinBasis::collective(k));
  s.trunc = truncation(cfg, cfg.alpha + std::abs(shift));
  s.spin_index = s.basis->index_of(k, -k);
  return s;
}

std::vector<double> exact_coherent_population(const ScenarioConfig& cfg, const TimeGrid& grid, HamiltonianVariant v) {
  const CoherentSetup s = coherent_setup(cfg);
  const int k = cfg.params.n_qubits();
  const Propagator prop = Propagator::build(cfg.params, s.trunc, v, s.basis);
  const FockVector fock = coherent_state(cfg.alpha, 0.5 * k * cfg.params.beta(), s.trunc);
  const JointState psi0 = JointState::product(k, -k, fock.amplitudes, s.basis, cfg.params, s.trunc);
  const std::vector<double> times = grid.values();
  std::vector<double> out(times.size());
  prop.for_each_sample(psi0, times, [&](std::size_t i, const Eigen::VectorXcd& amps) {
    out[i] = spin_population(amps, s.spin_index, s.trunc.dim());
  });
  return out;
}

std::vector<double> adiabatic_coherent_population(const ScenarioConfig& cfg, const TimeGrid& grid) {
  const int k = cfg.params.n_qubits();
  if (k == 2) return prob_coherent_two_qubit(grid, cfg.alpha, cfg.params, ManifoldMode::ExactDiag);
  if (k == 1) return prob_coherent_single_qubit(grid, cfg.alpha, cfg.params);
  const PoissonWeights p(cfg.alpha * cfg.alpha);
  const SpinSectorModel sector = sector_blocks(k, k, 0, p.n_last(), cfg.params);
  const Eigen::MatrixXcd c0 = coherent_sector_coefficients(sector, -k, cfg.alpha);
  std::vector<double> out(grid.count);
  parallel_for(grid.count, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = sector_population(evolve_adiabatic(c0, sector, grid.at(i)), sector, -k);
  });
  return out;
}

std::vector<double> analytic_coherent_population(const ScenarioConfig& cfg, const TimeGrid& grid) {
  const int k = cfg.params.n_qubits();
  const double w0 = cfg.params.omega0_ratio();
  if (k == 2) {
    const auto s1 = s_analytic(grid, w0, cfg.alpha, cfg.params, cfg.k_max);
    const auto s2 = s_analytic(grid, 2.0 * w0, cfg.alpha, cfg.params, cfg.k_max < 0 ? -1 : 2 * cfg.k_max);
    std::vector<double> out(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) out[i] = 0.375 + 0.5 * s1[i] + 0.125 * s2[i];
    return out;
  }
  if (k == 1) {
    auto s = s_analytic(grid, w0, cfg.alpha, cfg.params, cfg.k_max);
    for (double& v : s) v = 0.5 * (1.0 + v);
    return s;
  }
  throw ConfigError("the Analytic engine covers K = 1 and K = 2 only");
}

std::vector<Table> evolve_coherent(const ScenarioConfig& cfg) {
  const TimeGrid grid = raw_grid(cfg);
  const std::vector<double> t = grid.values();
  std::vector<Table> out;
  for (Engine e : cfg.engines) {
    Table tab = time_table(cfg, to_string(e), t);
    switch (e) {
      case Engine::Exact:
      case Engine::RWA: tab.add("P", exact_coherent_population(cfg, grid, variant_of(e))); break;
      case Engine::Adiabatic: tab.add("P", adiabatic_coherent_population(cfg, grid)); break;
      case Engine::Analytic: tab.add("P", analytic_coherent_population(cfg, grid)); break;
    }
    out.push_back(std::move(tab));
  }
  out.push_back(combine(cfg, out));
  return out;
}

double carrier_window(const ModelParams& p, double alpha_abs) {
  const int n_bar = static_cast<int>(std::lround(alpha_abs * alpha_abs));
  const double l = std::max(std::abs(laguerre(n_bar, p.beta_squared())), 0.05);
  return 2.0 * std::numbers::pi / (tau_scale(p) * l);
}

std::vector<Table> compare(const ScenarioConfig& cfg) {
  std::vector<Table> tabs = evolve_coherent(cfg);
  const Table combined = tabs.back();
  tabs.pop_back();
  const auto devs = compare_engines(tabs, "P", cfg.params, cfg.alpha, carrier_window(cfg.params, cfg.alpha));
  Table d;
  d.scenario = to_string(cfg.scenario);
  d.name = "deviations";
  std::vector<std::string> pair;
  std::vector<double> mx, rms, w1, e1;
  for (const auto& dv : devs) {
    pair.push_back(dv.a + "-" + dv.b);
    mx.push_back(dv.max);
    rms.push_back(dv.rms);
    w1.push_back(dv.revival_window_max.empty() ? kNaN : dv.revival_window_max[0]);
    e1.push_back(dv.revival_envelope_max.empty() ? kNaN : dv.revival_envelope_max[0]);
  }
  d.add_text("pair", pair);
  d.add("max", mx);
  d.add("rms", rms);
  d.add("revival1_max", w1);
  d.add("revival1_envelope_max", e1);
  tabs.push_back(combined);
  tabs.push_back(std::move(d));
  return tabs;
}

Eigen::VectorXcd displaced_number_state(int n, double gamma, const FockTruncation& trunc) {
  if (n > trunc.n_max()) throw TruncationTooSmall("number state beyond n_max");
  Eigen::VectorXcd v = displacement_matrix(gamma, trunc.n_max()).col(n).cast<std::complex<double>>();
  const double norm = v.norm();
  if (1.0 - norm * norm > 1e-6) throw TruncationTooSmall("displaced number state leaks past n_max");
  return v / norm;
}

std::vector<Table> evolve_number(const ScenarioConfig& cfg) {
  const int k = cfg.params.n_qubits();
  if (std::abs(cfg.two_m) > k || (k - cfg.two_m) % 2 != 0) throw ConfigError("m is not a label of the j = K/2 sector");
  const TimeGrid grid = raw_grid(cfg);
  const std::vector<double> t = grid.values();
  const FockTruncation trunc = cfg.n_max ? FockTruncation(*cfg.n_max) : FockTruncation(cfg.n + 60);
  auto basis = std::make_shared<const SpinBasis>(SpinBasis::collective(k));
  const double gamma = -0.5 * cfg.two_m * cfg.params.beta();

  std::vector<Table> out;
  for (Engine e : cfg.engines) {
    Table tab = time_table(cfg, to_string(e), t);
    std::vector<double> p(t.size());
    if (e == Engine::Exact || e == Engine::RWA) {
      const Propagator prop = Propagator::build(cfg.params, trunc, variant_of(e), basis);
      const JointState psi0 = JointState::product(k, cfg.two_m, displaced_number_state(cfg.n, gamma, trunc), basis,
                                                  cfg.params, trunc);
      const Eigen::VectorXcd ref = psi0.amplitudes();
      prop.for_each_sample(psi0, t, [&](std::size_t i, const Eigen::VectorXcd& amps) { p[i] = std::norm(ref.dot(amps)); });
    } else if (k != 2) {
      const SpinSectorModel sector = sector_blocks(k, k, cfg.n, cfg.n, cfg.params);
      Eigen::MatrixXcd c0 = Eigen::MatrixXcd::Zero(1, sector.dim());
      c0(0, (k - cfg.two_m) / 2) = 1.0;
      for (std::size_t i = 0; i < t.size(); ++i)
        p[i] = sector_population(evolve_adiabatic(c0, sector, t[i]), sector, cfg.two_m);
    } else {
      const InitialSpin s = cfg.two_m == 2 ? InitialSpin::MPlus1 : cfg.two_m == 0 ? InitialSpin::MZero : InitialSpin::MMinus1;
      for (std::size_t i = 0; i < t.size(); ++i)
        p[i] = e == Engine::Adiabatic ? prob_number_state_manifold(s, cfg.n, cfg.params, t[i])
                                      : prob_number_state(s, cfg.n, cfg.params, t[i]);
    }
    tab.add("P", std::move(p));
    out.push_back(std::move(tab));
  }
  out.push_back(combine(cfg, out));
  return out;
}

std::vector<Table> spectrum(const ScenarioConfig& cfg) {
  if (cfg.params.n_qubits() != 2) throw ConfigError("Spectrum covers the K = 2, j = 1 sector");
  const int n_top = cfg.n;
  std::vector<double> ns(static_cast<std::size_t>(n_top + 1));
  for (int n = 0; n <= n_top; ++n) ns[static_cast<std::size_t>(n)] = n;

  std::vector<Table> out;
  for (Engine e : cfg.engines) {
    std::vector<double> lo(ns.size()), mid(ns.size()), hi(ns.size());
    if (e == Engine::Exact || e == Engine::RWA) {
      const FockTruncation trunc = cfg.n_max ? FockTruncation(*cfg.n_max) : FockTruncation(n_top + 40);
      auto basis = std::make_shared<const SpinBasis>(SpinBasis::sector(2, 2));
      const Propagator prop = Propagator::build(cfg.params, trunc, variant_of(e), basis);
      const Eigen::VectorXd& ev = prop.eigenvalues();  // ascending
      for (int n = 0; n <= n_top; ++n) {
        lo[n] = ev(3 * n);
        mid[n] = ev(3 * n + 1);
        hi[n] = ev(3 * n + 2);
      }
    } else {
      for (int n = 0; n <= n_top; ++n) {
        const Eigen::Vector3d ev = e == Engine::Adiabatic ? manifold(n, cfg.params).energies
                                                          : manifold_energies_closed_form(n, cfg.params);
        lo[n] = ev(0);
        mid[n] = ev(1);
        hi[n] = ev(2);
      }
    }
    Table tab;
    tab.scenario = to_string(cfg.scenario);
    tab.name = to_string(e);
    tab.add("N", ns);
    tab.add("E_minus", lo);
    tab.add("E_zero", mid);
    tab.add("E_plus", hi);
    out.push_back(std::move(tab));
  }
  out.push_back(combine(cfg, out));
  return out;
}

std::vector<Table> revivals(const ScenarioConfig& cfg) {
  std::vector<double> betas = cfg.betas.empty() ? std::vector<double>{cfg.params.beta()} : cfg.betas;
  const TimeGrid grid = raw_grid(cfg);
  const std::vector<double> t = grid.values();
  const std::size_t nb = betas.size();
  std::vector<std::vector<double>> s_exact(nb), s_an(nb);
  std::vector<double> plug(nb), height(nb), numeric(nb, kNaN), asym(nb, kNaN), asym_d(nb, kNaN), rate_gap(nb);
  const bool want_exact = std::find(cfg.engines.begin(), cfg.engines.end(), Engine::Adiabatic) != cfg.engines.end() ||
                          std::find(cfg.engines.begin(), cfg.engines.end(), Engine::Exact) != cfg.engines.end();
  const bool want_analytic = std::find(cfg.engines.begin(), cfg.engines.end(), Engine::Analytic) != cfg.engines.end();

  for (std::size_t b = 0; b < nb; ++b) {
    const ModelParams p = cfg.params.with_beta(betas[b]);
    const double w0 = p.omega0_ratio();
    const RevivalSchedule sched = revival_schedule(cfg.alpha, p, 1);
    plug[b] = sched.signals[1].t_center;
    height[b] = sched.signals[1].height;
    const int n_bar = static_cast<int>(std::lround(cfg.alpha * cfg.alpha));
    const double gap = rabi_difference(n_bar, p);
    rate_gap[b] = gap > 0.0 ? 2.0 * std::numbers::pi / gap : kNaN;
    if (cfg.alpha >= 5.0) {
      asym[b] = revival_time_asymptotic(cfg.alpha, p, AsymptoticForm::Printed).t_rev;
      asym_d[b] = revival_time_asymptotic(cfg.alpha, p, AsymptoticForm::Derivative).t_rev;
    }
    s_exact[b] = s_sum_exact(grid, w0, cfg.alpha, p);
    if (const auto pk = first_revival(t, s_exact[b], carrier_window(p, cfg.alpha))) numeric[b] = pk->t;
    if (want_analytic) s_an[b] = s_analytic(grid, w0, cfg.alpha, p, cfg.k_max);
  }

  std::vector<Table> out;
  auto label = [](double beta) { return "S_b" + format_number(beta); };
  if (want_exact) {
    Table tab = time_table(cfg, "Adiabatic", t);
    for (std::size_t b = 0; b < nb; ++b) tab.add(label(betas[b]), s_exact[b]);
    out.push_back(std::move(tab));
  }
  if (want_analytic) {
    Table tab = time_table(cfg, "Analytic", t);
    for (std::size_t b = 0; b < nb; ++b) tab.add(label(betas[b]), s_an[b]);
    out.push_back(std::move(tab));
  }
  Table sum;
  sum.scenario = to_string(cfg.scenario);
  sum.name = "summary";
  sum.add("beta", betas);
  sum.add("t1_plugin", plug);
  sum.add("h1", height);
  sum.add("t1_gap", rate_gap);
  sum.add("t1_numeric", numeric);
  sum.add("t1_asymptotic", asym);
  sum.add("t1_asymptotic_derivative", asym_d);
  out.push_back(std::move(sum));
  return out;
}

std::vector<Table> concurrence(const ScenarioConfig& cfg) {
  if (cfg.params.n_qubits() != 2) throw ConfigError("Concurrence needs K = 2");
  const TimeGrid grid = raw_grid(cfg);
  const std::vector<double> t = grid.values();
  const FockTruncation trunc = truncation(cfg, cfg.alpha);
  std::vector<Table> out;
  for (Engine e : cfg.engines) {
    Table tab = time_table(cfg, to_string(e), t);
    if (e == Engine::Exact || e == Engine::RWA) {
      const Propagator prop = Propagator::build(cfg.params, trunc, variant_of(e));
      const ConcurrenceSeries cs = concurrence_series(prop, cfg.alpha, grid);
      tab.add("C", cs.exact);
      tab.add("purity", cs.purity);
    } else if (e == Engine::Adiabatic) {
      tab.add("C", small_beta_concurrence(grid, cfg.alpha, cfg.params));
    } else {
      std::vector<double> c(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) c[i] = concurrence_analytic_envelope(t[i], cfg.alpha, cfg.params, cfg.k_max);
      tab.add("C", std::move(c));
    }
    out.push_back(std::move(tab));
  }
  out.push_back(combine(cfg, out));
  return out;
}

std::vector<Table> k_qubit(const ScenarioConfig& cfg) {
  if (cfg.grid.start != 0.0) throw ConfigError("KQubit grids start at 0");
  const TimeGrid grid = raw_grid(cfg);
  const AdiabaticReport r = exact_vs_adiabatic_report(cfg.params.n_qubits(), cfg.params, cfg.alpha, grid.stop(), grid.count);
  Table exact = time_table(cfg, "Exact", r.times);
  exact.add("P", r.exact);
  Table adiabatic = time_table(cfg, "Adiabatic", r.times);
  adiabatic.add("P", r.adiabatic);
  Table sum;
  sum.scenario = to_string(cfg.scenario);
  sum.name = "summary";
  sum.add("K", {static_cast<double>(r.n_qubits)});
  sum.add("joint_dim", {static_cast<double>(r.joint_dim)});
  sum.add("max_error", {r.max_error});
  sum.add("rms_error", {r.rms_error});
  sum.add("regime_valid", {r.regime_valid ? 1.0 : 0.0});
  std::vector<Table> out{exact, adiabatic};
  out.push_back(combine(cfg, out));
  out.push_back(std::move(sum));
  return out;
}

Table validity_point_table(const ScenarioConfig& cfg, const ValidityReport& r) {
  Table t;
  t.scenario = to_string(cfg.scenario);
  t.name = "validity";
  const Predicate* preds[] = {&r.omega0_ratio, &r.rabi_over_beta2, &r.alpha_large, &r.beta_bound, &r.alphabeta_small};
  const char* names[] = {"omega0_ratio", "rabi_over_beta2", "alpha_large", "beta_bound", "alphabeta_small"};
  std::vector<std::string> name_col, soft_col;
  std::vector<double> value, threshold, ok;
  for (int i = 0; i < 5; ++i) {
    name_col.push_back(names[i]);
    value.push_back(preds[i]->value);
    threshold.push_back(preds[i]->threshold);
    ok.push_back(preds[i]->ok ? 1.0 : 0.0);
    soft_col.push_back(preds[i]->soft ? "soft" : "hard");
  }
  t.add_text("predicate", name_col);
  t.add("value", value);
  t.add("threshold", threshold);
  t.add("ok", ok);
  t.add_text("kind", soft_col);
  return t;
}

Table region_table(const ScenarioConfig& cfg, const ValidityReport& r) {
  Table t;
  t.scenario = to_string(cfg.scenario);
  t.name = "region";
  t.add_text("region", {to_string(r.region)});
  t.add("region1", {r.region1 ? 1.0 : 0.0});
  t.add("region2", {r.region2 ? 1.0 : 0.0});
  t.add("region3", {r.region3 ? 1.0 : 0.0});
  return t;
}

std::vector<Table> validity(const ScenarioConfig& cfg, bool strict) {
  const ValidityReport point = classify_validity(cfg.params, cfg.alpha, strict);
  std::vector<Table> out{validity_point_table(cfg, point), region_table(cfg, point)};
  if (!cfg.validity_grid) return out;
  const auto bs = cfg.validity_grid->beta.values();
  const auto ws = cfg.validity_grid->omega0.values();
  const auto as = cfg.validity_grid->alpha.values();
  const std::size_t n = bs.size() * ws.size() * as.size();
  std::vector<double> cb(n), cw(n), ca(n), r1(n), r2(n), r3(n);
  std::vector<std::string> region(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t ia = i % as.size(), iw = (i / as.size()) % ws.size(), ib = i / (as.size() * ws.size());
      const ModelParams p = cfg.params.with_beta(bs[ib]).with_omega0(ws[iw] * cfg.params.omega());
      const ValidityReport r = classify_validity(p, as[ia], strict);
      cb[i] = bs[ib];
      cw[i] = ws[iw];
      ca[i] = as[ia];
      r1[i] = r.region1;
      r2[i] = r.region2;
      r3[i] = r.region3;
      region[i] = to_string(r.region);
    }
  });
  Table g;
  g.scenario = to_string(cfg.scenario);
  g.name = "grid";
  g.add("beta", cb);
  g.add("omega0_ratio", cw);
  g.add("alpha", ca);
  g.add_text("region", region);
  g.add("region1", r1);
  g.add("region2", r2);
  g.add("region3", r3);
  out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Deviation> compare_engines(const std::vector<Table>& tables, const std::string& value,
                                       const ModelParams& params, double alpha_abs, double window) {
  std::vector<Deviation> out;
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      const auto& ta = tables[i].column("t");
      const auto& a = tables[i].column(value);
      const auto& b = tables[j].column(value);
      if (ta != tables[j].column("t")) throw InvalidArgument("engine tables do not share a time grid");
      Deviation d;
      d.a = tables[i].name;
      d.b = tables[j].name;
      double sq = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double e = std::abs(a[k] - b[k]);
        d.max = std::max(d.max, e);
        sq += e * e;
      }
      d.rms = a.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(a.size()));
      if (params.beta() != 0.0 && params.omega0_ratio() > 0.0 && !ta.empty()) {
        const RevivalParams rp = RevivalParams::make(alpha_abs, params, params.omega0_ratio());
        const auto ea = running_max(ta, a, window);
        const auto eb = running_max(ta, b, window);
        for (int k = 1;; ++k) {
          const double c = rp.time_of(rp.tau_k(k));
          const double w = rp.time_of(rp.width(k));
          if (c - w > ta.back()) break;
          double wm = 0.0, em = 0.0;
          for (std::size_t s = 0; s < ta.size(); ++s) {
            if (std::abs(ta[s] - c) > w) continue;
            wm = std::max(wm, std::abs(a[s] - b[s]));
            em = std::max(em, std::abs(ea[s] - eb[s]));
          }
          d.revival_window_max.push_back(wm);
          d.revival_envelope_max.push_back(em);
        }
      }
      out.push_back(std::move(d));
    }
  return out;
}

RunResult evaluate_with(const ScenarioConfig& cfg, bool strict) {
  RunResult r;
  r.validity = classify_validity(cfg.params, cfg.alpha, strict);
  switch (cfg.scenario) {
    case Scenario::Spectrum: r.tables = spectrum(cfg); break;
    case Scenario::EvolveNumber: r.tables = evolve_number(cfg); break;
    case Scenario::EvolveCoherent: r.tables = evolve_coherent(cfg); break;
    case Scenario::Revivals: r.tables = revivals(cfg); break;
    case Scenario::Concurrence: r.tables = concurrence(cfg); break;
    case Scenario::KQubit: r.tables = k_qubit(cfg); break;
    case Scenario::Validity: r.tables = validity(cfg, strict); break;
    case Scenario::Compare: r.tables = compare(cfg); break;
  }
  return r;
}

RunResult evaluate(const ScenarioConfig& cfg) { return evaluate_with(cfg, false); }

int run(const std::filesystem::path& config_path, const RunOptions& opts, std::string& message) {
  try {
    ScenarioConfig cfg = ScenarioConfig::from_file(config_path);
    if (opts.engines) cfg.engines = *opts.engines;
    if (opts.format) cfg.format = *opts.format;
    if (cfg.scenario == Scenario::Compare && cfg.engines.size() < 2) throw ConfigError("Compare needs >= 2 engines");

    if (opts.strict) {
      const ValidityReport v = classify_validity(cfg.params, cfg.alpha, true);
      const bool analytic = std::find(cfg.engines.begin(), cfg.engines.end(), Engine::Analytic) != cfg.engines.end();
      const bool adiabatic = std::find(cfg.engines.begin(), cfg.engines.end(), Engine::Adiabatic) != cfg.engines.end();
      if ((analytic && !v.region1) || (adiabatic && !v.region2)) {
        message = std::string("parameters outside the validity region of the requested engines (region=") +
                  to_string(v.region) + ")";
        for (const auto& w : v.warnings) message += "; " + w;
        return 3;
      }
    }

    const RunResult r = evaluate_with(cfg, opts.strict);
    std::filesystem::create_directories(opts.out_dir);
    const char* ext = cfg.format == Format::Csv ? ".csv" : ".json";
    for (const Table& t : r.tables) {
      const auto path = opts.out_dir / (cfg.stem + "_" + t.name + ext);
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      if (!f) throw tcdyn::Error("cannot write " + path.string());
      f << (cfg.format == Format::Csv ? to_csv(t) : to_json(t));
      if (!f) throw tcdyn::Error("failed writing " + path.string());
    }
    message.clear();
    for (const auto& w : r.validity->warnings) message += "warning: " + w + "\n";
    return 0;
  } catch (const ConfigError& e) {
    message = std::string("config error: ") + e.what();
    return 2;
  } catch (const tcdyn::Error& e) {
    message = std::string("numerical failure: ") + e.what();
    return 4;
  } catch (const std::exception& e) {
    message = std::string("failure: ") + e.what();
    return 4;
  }
}

}  // namespace tcdyn::harness
