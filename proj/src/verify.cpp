#include "lambdaphase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "lambdaphase/algebra.hpp"
#include "lambdaphase/deformed.hpp"
#include "lambdaphase/dynamics.hpp"
#include "lambdaphase/oracle.hpp"
#include "lambdaphase/propagator.hpp"
#include "lambdaphase/relphase.hpp"
#include "lambdaphase/scenario.hpp"

namespace lambdaphase {
namespace {

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void below(std::string name, double value, double threshold) {
    const bool ok = threshold == 0.0 ? value == 0.0 : value < threshold;
    results_.push_back({suite_, std::move(name), value, threshold, false, ok});
  }
  void at_least(std::string name, double value, double threshold) {
    results_.push_back({suite_, std::move(name), value, threshold, true, value >= threshold});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

SystemParams sample_params() {
  SystemParams p;
  p.g_a = 1.0;
  p.g_b = 0.7;
  p.delta_a = 0.3;
  p.delta_b = -0.45;
  p.nbar_a = 4.0;
  p.nbar_b = 2.5;
  const double s = 1.0 / std::sqrt(3.0);
  p.c = {Complex(s, 0.0), Complex(0.0, s), Complex(s * std::cos(0.4), s * std::sin(0.4))};
  return p;
}

double state_difference(const SystemState& a, const SystemState& b) {
  if (a.blocks().size() != b.blocks().size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < a.blocks().size(); ++k) {
    if (a.blocks()[k].index() != b.blocks()[k].index()) return INFINITY;
    worst = std::max(worst, max_abs_diff(a.blocks()[k].amplitudes, b.blocks()[k].amplitudes));
  }
  return worst;
}

std::vector<CheckResult> algebra_suite() {
  Collector c("algebra");
  c.below("u(3) commutator table", commutator_table_residual(), 0.0);
  c.below("coupling relations", coupling_relation_residual(), 0.0);
  for (Transition t : {Transition::k13, Transition::k23})
    c.below("polar identity " + std::string(to_string(t)), verify_polar_identity(t), 1e-12);
  for (Transition t : kAllTransitions) {
    const AtomOperator e = phase_exponential_form(t);
    c.below("phase spectrum {0,+pi/2,-pi/2} " + std::string(to_string(t)), phase_spectrum_residual(e), 0.0);
    c.below("phase exponential unitary " + std::string(to_string(t)), unitarity_defect(e), 0.0);
    if (t == Transition::k12) continue;
    const PhaseEigensystem es = phase_eigensystem(t);
    double eq = 0.0, ortho = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
      const Complex lambda = std::polar(1.0, es.eigenvalues[r]);
      eq = std::max(eq, max_abs_diff(e * es.eigenvectors[r], lambda * es.eigenvectors[r]));
      for (std::size_t s = 0; s < 3; ++s)
        ortho = std::max(ortho, std::abs(inner(es.eigenvectors[r], es.eigenvectors[s]) - (r == s ? 1.0 : 0.0)));
    }
    c.below("eigen equation " + std::string(to_string(t)), eq, 1e-12);
    c.below("eigenvector orthonormality " + std::string(to_string(t)), ortho, 1e-12);
  }
  c.at_least("phases of 13 and 23 do not compose", noncomposition_witness(), 0.5);
  return c.take();
}

std::vector<CheckResult> dynamics_suite() {
  Collector c("dynamics");
  const SystemParams p = sample_params();
  double unitary = 0.0, group = 0.0;
  for (int na = 0; na <= 6; ++na)
    for (int nb = 0; nb <= 6; ++nb) {
      if (na == 0 && nb == 0) continue;
      const BlockOperator h = block_hamiltonian(p, subspace_basis({na, nb}));
      for (double t : {0.37, 5.0, 120.0}) {
        const SmallMatrix u = block_evolution(h, t).matrix;
        unitary = std::max(unitary, unitarity_defect(u));
        const SmallMatrix uu = block_evolution(h, 0.61).matrix * u;
        group = std::max(group, max_abs_diff(uu, block_evolution(h, t + 0.61).matrix));
      }
    }
  c.below("block propagator unitarity", unitary, 1e-12);
  c.below("group property U(s)U(t) = U(s+t)", group, 1e-12);

  SystemParams resonant;
  const BlockOperator hub = block_hamiltonian(resonant, subspace_basis({1, 1}));
  double hub_err = 0.0;
  for (double t : {0.1, 1.0, 7.3}) {
    const SmallMatrix u = block_evolution(hub, t).matrix;
    hub_err = std::max(hub_err, std::abs(u(2, 2) - std::cos(std::numbers::sqrt2 * t)));
  }
  c.below("(1,1) upper-level amplitude cos(sqrt2 g t)", hub_err, 1e-12);

  const SystemState s0 = initial_state(p);
  c.below("initial state norm", std::abs(s0.squared_norm() - 1.0), 1e-12);
  const SystemState s1 = evolve(s0, p, 9.5);
  c.below("norm after evolution", std::abs(s1.squared_norm() - 1.0), 1e-12);
  c.below("time reversal", state_difference(evolve_backward(s1, p, 9.5), s0), 1e-12);

  const Propagator prop(p);
  c.below("propagator matches evolve", state_difference(prop.state_at(9.5), s1), 1e-12);
  std::vector<double> times(64);
  for (std::size_t k = 0; k < times.size(); ++k) times[k] = 0.25 * static_cast<double>(k);
  const auto serial = observe_grid(prop, times, Execution::kSerial);
  const auto parallel = observe_grid(prop, times, Execution::kParallel);
  double mismatch = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t r = 0; r < 3; ++r)
        mismatch = std::max(mismatch, std::abs(serial[k].distributions[t].p[r] - parallel[k].distributions[t].p[r]));
    for (std::size_t l = 0; l < 3; ++l)
      mismatch = std::max(mismatch, std::abs(serial[k].populations[l] - parallel[k].populations[l]));
    mismatch = std::max(mismatch, std::abs(serial[k].norm - parallel[k].norm));
  }
  c.below("parallel grid equals serial reference", mismatch, 0.0);
  return c.take();
}

std::vector<CheckResult> relphase_suite() {
  Collector c("relphase");
  double ortho = 0.0, complete = 0.0, spectrum = 0.0;
  for (Transition t : kAllTransitions)
    for (int na = 0; na <= 5; ++na)
      for (int nb = 0; nb <= 5; ++nb) {
        if (na == 0 && nb == 0) continue;
        const RelPhaseEigenstates es = rel_phase_eigenstates(t, {na, nb});
        const std::size_t dim = es.basis.dim();
        SmallMatrix sum(dim);
        for (const auto& s : es.states) sum = sum + outer(s.vector, s.vector);
        complete = std::max(complete, max_abs_diff(sum, SmallMatrix::identity(dim)));
        if (dim != 3) continue;
        for (const auto& r : es.states)
          for (const auto& s : es.states)
            ortho = std::max(ortho, std::abs(inner(r.vector, s.vector) - (r.label == s.label ? 1.0 : 0.0)));
        spectrum = std::max(spectrum, phase_spectrum_residual(relative_phase_exponential(t, {na, nb})));
      }
  c.below("eigenstate orthonormality", ortho, 1e-12);
  c.below("eigenstate completeness", complete, 1e-12);
  c.below("relative-phase spectrum {0,+pi/2,-pi/2}", spectrum, 0.0);

  double route = 0.0, sum = 0.0, identity = 0.0;
  for (const SystemParams& p : {sample_params(), trapping_config(std::numbers::pi, 3.0), preset_config("fig2").params}) {
    const SystemState s0 = initial_state(p);
    for (double t : {0.0, 0.8, 4.1, 17.0}) {
      const SystemState st = evolve(s0, p, t);
      const auto pops = level_populations(st);
      for (Transition tr : kAllTransitions) {
        const PhaseDistribution proj = marginal_distribution(st, tr);
        const PhaseDistribution closed = closed_form_distribution(p, tr, t);
        for (std::size_t r = 0; r < 3; ++r) route = std::max(route, std::abs(proj.p[r] - closed.p[r]));
        sum = std::max(sum, std::abs(closed.total() - 1.0));
        identity = std::max(identity, std::abs(closed.p0() - pops[static_cast<std::size_t>(levels_of(tr).spectator - 1)]));
      }
    }
  }
  c.below("closed form equals projection", route, 1e-10);
  c.below("probabilities sum to 1", sum, 1e-10);
  c.below("P(Phi_0) equals spectator population", identity, 1e-10);

  c.below("deformed algebra (cutoff 4)", verify_deformed_algebra(4), 1e-12);
  double polar = 0.0;
  for (SubspaceIndex idx : {SubspaceIndex{1, 1}, SubspaceIndex{2, 3}, SubspaceIndex{5, 1}})
    polar = std::max(polar, verify_deformed_polar(idx));
  c.below("deformed polar identity", polar, 1e-12);
  return c.take();
}

std::vector<CheckResult> oracle_suite() {
  Collector c("oracle");
  constexpr int cutoff = 8;
  SystemParams p;
  p.nbar_a = 1.0;
  p.nbar_b = 1.0;

  const FullSpaceOperator h = build_full_hamiltonian(sample_params(), cutoff, cutoff);
  const Eigen::MatrixXcd& hm = h.matrix();
  const Eigen::MatrixXcd na = excitation_operator_a(cutoff, cutoff).matrix();
  const Eigen::MatrixXcd nb = excitation_operator_b(cutoff, cutoff).matrix();
  c.below("full Hamiltonian Hermitian", (hm - hm.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  c.below("[H, N_a] = [H, N_b] = 0",
          std::max((hm * na - na * hm).cwiseAbs().maxCoeff(), (hm * nb - nb * hm).cwiseAbs().maxCoeff()), 1e-12);

  for (const auto& [label, params] : {std::pair<std::string, SystemParams>{"resonant nbar 1", p},
                                      std::pair<std::string, SystemParams>{"detuned mixed", [] {
                                                                             SystemParams q = sample_params();
                                                                             q.nbar_a = 1.0;
                                                                             q.nbar_b = 0.8;
                                                                             return q;
                                                                           }()}}) {
    std::vector<double> times(50);
    for (std::size_t k = 0; k < times.size(); ++k)
      times[k] = time_from_tau(params, 2.0 * static_cast<double>(k) / 49.0);
    const OracleComparison cmp = compare_with_oracle(params, cutoff, cutoff, times);
    c.below("block vs full amplitudes, " + label, cmp.max_difference, 1e-8);
    c.below("full-space norm drift, " + label, cmp.max_norm_drift, 1e-10);
    c.below("excitation drift, " + label, cmp.max_excitation_drift, 1e-8);
  }
  return c.take();
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite) {
  if (suite == "algebra") return algebra_suite();
  if (suite == "dynamics") return dynamics_suite();
  if (suite == "relphase") return relphase_suite();
  if (suite == "oracle") return oracle_suite();
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (auto* run : {algebra_suite, dynamics_suite, relphase_suite, oracle_suite}) {
      auto part = run();
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) +
                              "' (expected algebra, dynamics, relphase, oracle or all)");
}

bool print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  bool ok = true;
  const auto flags = out.flags();
  for (const CheckResult& r : results) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << '[' << r.suite << "] " << r.name << ": " << std::setprecision(3)
        << std::scientific << r.value << (r.at_least ? " (need >= " : r.threshold == 0.0 ? " (need == " : " (need < ")
        << r.threshold << ")\n";
  }
  out.flags(flags);
  out << (ok ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " checks)\n";
  return ok;
}

}  // namespace lambdaphase
