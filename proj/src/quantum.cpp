#include "ctxdist/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "ctxdist/common.hpp"
#include "ctxdist/inequality.hpp"
#include "ctxdist/rng.hpp"

namespace ctxdist {

namespace {

using Matrix = Eigen::MatrixXcd;
using Eigen::Vector3d;

constexpr double kMatrixTol = 1e-12;
constexpr double kClampBudget = 1e-10;
constexpr double kOrthoTol = 1e-9;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double expectation(const StateVector& psi, const Matrix& a, const Matrix& b) {
  const std::complex<double> v = psi.adjoint() * (a * (b * psi));
  return v.real();
}

double clamp_unit(double p, double& worst) {
  if (p < 0) {
    worst = std::max(worst, -p);
    return 0;
  }
  if (p > 1) {
    worst = std::max(worst, p - 1);
    return 1;
  }
  return p;
}

JointTable joint_table(const StateVector& psi, const Observable& a,
                       const Observable& b, double& worst_clamp) {
  const Matrix id = Matrix::Identity(psi.size(), psi.size());
  const Matrix& pa = a.plus_projector;
  const Matrix& pb = b.plus_projector;
  const Matrix ma = id - pa;
  const Matrix mb = id - pb;
  JointTable t;
  t.p_pp = clamp_unit(expectation(psi, pa, pb), worst_clamp);
  t.p_pm = clamp_unit(expectation(psi, pa, mb), worst_clamp);
  t.p_mp = clamp_unit(expectation(psi, ma, pb), worst_clamp);
  t.p_mm = clamp_unit(expectation(psi, ma, mb), worst_clamp);
  return t;
}

struct RestartOutcome {
  double value = 0;
  std::vector<double> parameters;
  std::array<int, 5> orientations = {1, 1, 1, 1, 1};
};

// Downhill simplex minimization; returns the best vertex.
std::pair<double, std::vector<double>> nelder_mead(
    const std::function<double(const std::vector<double>&)>& g,
    std::vector<double> x0, double step, double tol, int max_iter) {
  const int dim = static_cast<int>(x0.size());
  std::vector<std::vector<double>> x(dim + 1, x0);
  std::vector<double> f(dim + 1);
  for (int i = 1; i <= dim; ++i) x[i][i - 1] += step;
  for (int i = 0; i <= dim; ++i) f[i] = g(x[i]);

  std::vector<int> order(dim + 1);
  for (int it = 0; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a] < f[b]; });
    const int best = order[0];
    const int worst = order[dim];
    const int second = order[dim - 1];
    if (f[worst] - f[best] <= tol) break;

    std::vector<double> centroid(dim, 0.0);
    for (int k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (int j = 0; j < dim; ++j) centroid[j] += x[k][j];
    }
    for (int j = 0; j < dim; ++j) centroid[j] /= dim;

    auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (int j = 0; j < dim; ++j)
        p[j] = centroid[j] + t * (x[worst][j] - centroid[j]);
      return p;
    };

    const std::vector<double> refl = blend(-1.0);
    const double fr = g(refl);
    if (fr < f[best]) {
      const std::vector<double> exp_ = blend(-2.0);
      const double fe = g(exp_);
      if (fe < fr) {
        x[worst] = exp_;
        f[worst] = fe;
      } else {
        x[worst] = refl;
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second]) {
      x[worst] = refl;
      f[worst] = fr;
      continue;
    }
    const bool outside = fr < f[worst];
    const std::vector<double> contr = blend(outside ? -0.5 : 0.5);
    const double fc = g(contr);
    if (fc < (outside ? fr : f[worst])) {
      x[worst] = contr;
      f[worst] = fc;
      continue;
    }
    for (int k = 0; k <= dim; ++k) {
      if (k == best) continue;
      for (int j = 0; j < dim; ++j)
        x[k][j] = x[best][j] + 0.5 * (x[k][j] - x[best][j]);
      f[k] = g(x[k]);
    }
  }
  int best = 0;
  for (int i = 1; i <= dim; ++i)
    if (f[i] < f[best]) best = i;
  return {f[best], x[best]};
}

std::array<int, 5> pattern_orientations(int index) {
  std::array<int, 5> s = {1, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i)
    if ((index >> i) & 1) s[i] = -1;
  return s;
}

KcbsParams kcbs_from(const std::vector<double>& p,
                     const std::array<int, 5>& orientations) {
  KcbsParams k = KcbsParams::pentagram(p[2]);
  k.state_polar = p[0];
  k.state_azimuth = p[1];
  k.orientations = orientations;
  return k;
}

}  // namespace

Observable Observable::from_matrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InputError("observable must be square");
  if (max_abs(Matrix(m - m.adjoint())) > kMatrixTol)
    throw InputError("observable must be Hermitian");
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  if (max_abs(Matrix(m * m - id)) > kMatrixTol)
    throw InputError("observable must square to the identity");
  Observable o;
  o.matrix = m;
  o.plus_projector = (id + m) / 2.0;
  return o;
}

Behavior chsh_quantum_behavior(double a1, double a2, double b1, double b2,
                               QuantumDiagnostics* diag) {
  Matrix sz(2, 2), sx(2, 2), id2 = Matrix::Identity(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  auto side = [&](double angle) -> Matrix {
    return std::cos(angle) * sz + std::sin(angle) * sx;
  };

  StateVector psi(4);
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;

  const Scenario s = make_bell_cycle(4);
  const double angles[4] = {a1, b1, a2, b2};
  std::vector<Observable> obs(4);
  for (int i = 0; i < 4; ++i) {
    const Matrix local = side(angles[i]);
    // even indices sit on the first qubit, odd on the second
    obs[i] = Observable::from_matrix(i % 2 == 0 ? kron(local, id2)
                                                : kron(id2, local));
  }

  QuantumDiagnostics local_diag;
  std::vector<JointTable> tables(s.context_count());
  for (int c = 0; c < s.context_count(); ++c) {
    const auto [u, w] = s.contexts()[c];
    local_diag.max_commutator = std::max(
        local_diag.max_commutator,
        max_abs(Matrix(obs[u].matrix * obs[w].matrix -
                       obs[w].matrix * obs[u].matrix)));
    tables[c] = joint_table(psi, obs[u], obs[w], local_diag.max_clamp);
    const double closed = -std::cos(angles[u] - angles[w]);
    local_diag.closed_form_gap = std::max(
        local_diag.closed_form_gap, std::abs(tables[c].correlator() - closed));
  }
  if (local_diag.closed_form_gap > 1e-10)
    throw SolverError("matrix correlators drifted from the closed form");
  if (local_diag.max_clamp > kClampBudget)
    throw SolverError("quantum joint probabilities needed excessive clamping");
  if (diag) *diag = local_diag;
  return Behavior(s, std::move(tables));
}

KcbsParams KcbsParams::pentagram(double phase0) {
  KcbsParams p;
  const double c = std::cos(M_PI / 5.0);
  p.polar_angle = std::acos(std::sqrt(c / (1.0 + c)));
  for (int i = 0; i < 5; ++i)
    p.phase[i] = phase0 + 4.0 * M_PI * i / 5.0;
  return p;
}

Behavior kcbs_quantum_behavior(const KcbsParams& params,
                               QuantumDiagnostics* diag) {
  std::array<Vector3d, 5> ray;
  const double ct = std::cos(params.polar_angle);
  const double st = std::sin(params.polar_angle);
  for (int i = 0; i < 5; ++i)
    ray[i] = Vector3d(ct, st * std::cos(params.phase[i]),
                      st * std::sin(params.phase[i]));
  for (int i = 0; i < 5; ++i) {
    const double dot = ray[i].dot(ray[(i + 1) % 5]);
    if (std::abs(dot) > kOrthoTol)
      throw IncompatibilityError(
          "consecutive rays are not orthogonal; the cycle contexts would "
          "not be jointly measurable");
  }

  const Matrix id3 = Matrix::Identity(3, 3);
  std::vector<Observable> obs(5);
  for (int i = 0; i < 5; ++i) {
    const Matrix proj = (ray[i] * ray[i].transpose()).cast<std::complex<double>>();
    obs[i] = Observable::from_matrix(
        static_cast<double>(params.orientations[i]) * (id3 - 2.0 * proj));
  }

  StateVector psi(3);
  const double cp = std::cos(params.state_polar);
  const double sp = std::sin(params.state_polar);
  psi << cp, sp * std::cos(params.state_azimuth),
      sp * std::sin(params.state_azimuth);

  const Scenario s = make_cycle(5);
  QuantumDiagnostics local_diag;
  std::vector<JointTable> tables(s.context_count());
  for (int c = 0; c < s.context_count(); ++c) {
    const auto [u, w] = s.contexts()[c];
    local_diag.max_commutator = std::max(
        local_diag.max_commutator,
        max_abs(Matrix(obs[u].matrix * obs[w].matrix -
                       obs[w].matrix * obs[u].matrix)));
    tables[c] = joint_table(psi, obs[u], obs[w], local_diag.max_clamp);
  }
  if (local_diag.max_clamp > kClampBudget)
    throw SolverError("quantum joint probabilities needed excessive clamping");
  if (diag) *diag = local_diag;
  return Behavior(s, std::move(tables));
}

QuantumSearchResult optimize_quantum_value(const std::string& target,
                                           int restarts, uint64_t seed,
                                           Exec mode) {
  if (restarts < 1) throw InputError("restart count must be at least 1");

  int dim = 0;
  std::vector<double> defaults;
  const bool kcbs_family = target == "excl:5" || target == "gnc:5";
  if (target == "gnc:4") {
    dim = 4;
    defaults = {0.0, M_PI / 2.0, 7.0 * M_PI / 4.0, 5.0 * M_PI / 4.0};
  } else if (kcbs_family) {
    dim = 3;
    defaults = {0.0, 0.0, 0.0};  // state polar, state azimuth, phase offset
  } else {
    throw InputError("unknown quantum target '" + target +
                     "' (supported: gnc:4, excl:5, gnc:5)");
  }

  auto family_value = [&](const std::vector<double>& p,
                          const std::array<int, 5>& orient) {
    if (target == "gnc:4") {
      // parameter order (a1, a2, b1, b2)
      const Behavior b = chsh_quantum_behavior(p[0], p[1], p[2], p[3]);
      return correlation_ncycle(b, 4).value;
    }
    const Behavior b = kcbs_quantum_behavior(kcbs_from(p, orient));
    return target == "excl:5" ? exclusive_events_inequality(b, 5).value
                              : correlation_ncycle(b, 5).value;
  };

  const Rng base(seed);
  std::vector<RestartOutcome> runs(restarts);
  for_range(mode, restarts, [&](std::ptrdiff_t r) {
    RestartOutcome& run = runs[r];
    if (target == "gnc:5")
      run.orientations = pattern_orientations(static_cast<int>(r) % 32);
    std::vector<double> start = defaults;
    if (r > 0) {
      Rng rng = base.fork(static_cast<uint64_t>(r));
      for (double& v : start) v = rng.uniform(0.0, 2.0 * M_PI);
    }
    auto negated = [&](const std::vector<double>& p) {
      return -family_value(p, run.orientations);
    };
    auto [fbest, xbest] =
        nelder_mead(negated, start, 0.25, 1e-8, 500 * dim);
    run.value = -fbest;
    run.parameters = std::move(xbest);
  });

  QuantumSearchResult result;
  result.target = target;
  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (runs[r].value > runs[best].value) best = r;
  result.value = runs[best].value;
  result.parameters = runs[best].parameters;
  result.orientations = runs[best].orientations;
  result.best_restart = best;
  return result;
}

}  // namespace ctxdist
