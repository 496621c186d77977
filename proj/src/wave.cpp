#include "nf/wave.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "nf/csv.hpp"

namespace nf {

namespace {

// Toeplitz cell weights for nodes k h with cells centered at the nodes.
// rho[d + n - 1] = int over [d h - h/2, d h + h/2] of w.
struct CenteredWeights {
  int n;
  double h;
  double edge;  // clamp boundary L + h/2
  std::vector<double> rho;
  const SynapticKernel* kernel;

  CenteredWeights(const SynapticKernel& k, int n_nodes, double h_, double L)
      : n(n_nodes), h(h_), edge(L + 0.5 * h_), kernel(&k) {
    rho.resize(2 * n - 1);
    for (int i = 0; i < 2 * n - 1; ++i) {
      double d = double(i - (n - 1)) * h;
      rho[i] = k.cell_integral(d - 0.5 * h, d + 0.5 * h);
    }
  }

  double at(int k, int l) const { return rho[k - l + n - 1]; }
  // mass falling beyond the right/left clamp boundary as seen from node k
  double clamp_hi(double xk) const { return kernel->cdf(xk - edge); }
  double clamp_lo(double xk) const { return kernel->tail(xk + edge); }
};

void convolve(const CenteredWeights& cw, const GainFunction& gain,
              const std::vector<double>& u, double x0, double fa1, double fa2,
              std::vector<double>& fu, std::vector<double>& out) {
  int n = cw.n;
  for (int l = 0; l < n; ++l) fu[l] = gain.value(u[l]);
  for (int k = 0; k < n; ++k) {
    const double* r = &cw.rho[n - 1 - k];
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += r[l] * fu[l];
    double xk = x0 + k * cw.h;
    out[k] = s + cw.clamp_hi(xk) * fa2 + cw.clamp_lo(xk) * fa1;
  }
}

double residual_inf_norm(const Eigen::VectorXd& r, int n_interior) {
  double m = 0.0;
  for (int i = 0; i < n_interior; ++i) m = std::max(m, std::abs(r[i]));
  return m;
}

}  // namespace

WaveProfile solve_profile(const GainFunction& gain, const SynapticKernel& kernel,
                          int L, double h, const WaveSolveOptions& opts) {
  if (L < 1) throw std::invalid_argument("solve_profile: L must be >= 1");
  double m_real = 1.0 / h;
  int m = int(std::lround(m_real));
  if (!(h > 0.0) || std::abs(m_real - m) > 1e-9 || m < 1)
    throw std::invalid_argument("solve_profile: 1/h must be a positive integer");
  if (kernel.tail(double(L)) >= 1e-10)
    throw std::invalid_argument(
        "solve_profile: kernel tail mass beyond L exceeds 1e-10; enlarge L");

  const FixedPoints& fp = gain.fixed_points();
  const int K = m * L;
  const int n = 2 * K + 1;        // nodes, including both ends
  const int ni = n - 2;           // interior nodes
  const int dim = ni + 1;         // unknowns: interior values + speed
  const int center = K;           // node at x = 0
  const double x0 = -double(L);
  const double fa1 = gain.value(fp.a1);
  const double fa2 = gain.value(fp.a2);

  CenteredWeights cw(kernel, n, h, double(L));

  std::vector<double> u(n), fu(n), conv(n);
  u[0] = fp.a1;
  u[n - 1] = fp.a2;
  // sigmoid-shaped start with the correct limits
  for (int k = 1; k < n - 1; ++k) {
    double z = gain.gamma() * (x0 + k * h);
    double s = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
    u[k] = fp.a1 + (fp.a2 - fp.a1) * s;
  }
  double c = 0.0;

  auto assemble_residual = [&](const std::vector<double>& uu, double cc,
                               Eigen::VectorXd& r) {
    convolve(cw, gain, uu, x0, fa1, fa2, fu, conv);
    for (int i = 0; i < ni; ++i) {
      int k = i + 1;
      double du = (uu[k + 1] - uu[k - 1]) / (2.0 * h);
      r[i] = -cc * du + uu[k] - conv[k];
    }
    r[ni] = uu[center] - fp.a;
  };

  Eigen::VectorXd r(dim), r_trial(dim);
  assemble_residual(u, c, r);
  double rnorm = residual_inf_norm(r, dim);

  Eigen::MatrixXd jac(dim, dim);
  std::vector<double> u_trial(n);
  int iter = 0;
  for (; iter < opts.max_iter && rnorm >= opts.tol; ++iter) {
    jac.setZero();
    for (int i = 0; i < ni; ++i) {
      int k = i + 1;
      for (int j = 0; j < ni; ++j) {
        int l = j + 1;
        double v = -cw.at(k, l) * gain.deriv1(u[l]);
        if (l == k) v += 1.0;
        if (l == k + 1) v += -c / (2.0 * h);
        if (l == k - 1) v += c / (2.0 * h);
        jac(i, j) = v;
      }
      jac(i, ni) = -(u[k + 1] - u[k - 1]) / (2.0 * h);
    }
    jac(ni, center - 1) = 1.0;  // phase equation row

    Eigen::VectorXd step = jac.partialPivLu().solve(-r);

    // damped update: backtrack until the residual norm drops
    double lambda = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < opts.max_line_search; ++ls) {
      u_trial = u;
      for (int j = 0; j < ni; ++j) u_trial[j + 1] += lambda * step[j];
      double c_trial = c + lambda * step[ni];
      assemble_residual(u_trial, c_trial, r_trial);
      double tnorm = residual_inf_norm(r_trial, dim);
      if (tnorm < rnorm) {
        u = u_trial;
        c = c_trial;
        r = r_trial;
        rnorm = tnorm;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw std::runtime_error(
          "solve_profile: line search stalled at residual " + format_double(rnorm));
  }
  if (rnorm >= opts.tol)
    throw std::runtime_error("solve_profile: Newton did not converge in " +
                             std::to_string(opts.max_iter) +
                             " iterations; last residual " + format_double(rnorm));

  for (int k = 0; k + 1 < n; ++k)
    if (u[k + 1] - u[k] < -1e-10)
      throw std::runtime_error("solve_profile: converged profile is not monotone");

  WaveProfile p;
  p.L = double(L);
  p.h = h;
  p.values = u;
  p.speed = c;
  p.a1 = fp.a1;
  p.a = fp.a;
  p.a2 = fp.a2;
  p.slopes.resize(n);
  p.slopes[0] = (u[1] - u[0]) / h;
  p.slopes[n - 1] = (u[n - 1] - u[n - 2]) / h;
  for (int k = 1; k < n - 1; ++k) p.slopes[k] = (u[k + 1] - u[k - 1]) / (2.0 * h);

  assemble_residual(u, c, r);
  p.residual_norm = residual_inf_norm(r, ni);
  return p;
}

double WaveProfile::profile_value(double xi) const {
  if (xi <= -L) return a1;
  if (xi >= L) return a2;
  double s = (xi + L) / h;
  int k = int(s);
  int n = node_count();
  if (k >= n - 1) return a2;
  double t = s - k;
  double t2 = t * t, t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * values[k] + h10 * h * slopes[k] + h01 * values[k + 1] +
         h11 * h * slopes[k + 1];
}

double WaveProfile::profile_slope(double xi) const {
  if (xi <= -L || xi >= L) return 0.0;
  double s = (xi + L) / h;
  int k = int(s);
  int n = node_count();
  if (k >= n - 1) return 0.0;
  double t = s - k;
  double t2 = t * t;
  double d00 = 6 * t2 - 6 * t, d10 = 3 * t2 - 4 * t + 1;
  double d01 = -6 * t2 + 6 * t, d11 = 3 * t2 - 2 * t;
  return (d00 * values[k] + d10 * h * slopes[k] + d01 * values[k + 1] +
          d11 * h * slopes[k + 1]) /
         h;
}

double WaveProfile::at(double t, double x) const { return profile_value(x - speed * t); }
double WaveProfile::dx(double t, double x) const { return profile_slope(x - speed * t); }

double WaveProfile::slope_l2_sq() const {
  int n = node_count();
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
    s += w * slopes[k] * slopes[k];
  }
  return s * h;
}

double WaveProfile::slope2_l2_sq() const {
  int n = node_count();
  double s = 0.0;
  for (int k = 1; k < n - 1; ++k) {
    double uxx = (values[k + 1] - 2.0 * values[k] + values[k - 1]) / (h * h);
    s += uxx * uxx;
  }
  return s * h;
}

void write_profile_csv(const WaveProfile& p, const std::string& path) {
  CsvTable t;
  t.comments.push_back("# c=" + format_double(p.speed) +
                       " residual=" + format_double(p.residual_norm) +
                       " h=" + format_double(p.h) + " L=" + format_double(p.L) +
                       " a=" + format_double(p.a));
  t.columns = {"x", "u_hat", "u_hat_x"};
  for (int k = 0; k < p.node_count(); ++k)
    t.rows.push_back({p.node(k), p.values[k], p.slopes[k]});
  write_csv(path, t);
}

WaveProfile read_profile_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  if (t.comments.empty()) throw std::runtime_error("profile csv: missing header line");
  WaveProfile p;
  auto grab = [&](const std::string& key) {
    const std::string& hdr = t.comments.front();
    auto pos = hdr.find(key + "=");
    if (pos == std::string::npos)
      throw std::runtime_error("profile csv: header lacks " + key);
    return std::stod(hdr.substr(pos + key.size() + 1));
  };
  p.speed = grab("c");
  p.residual_norm = grab("residual");
  p.h = grab("h");
  p.L = grab("L");
  p.a = grab("a");
  std::size_t cu = t.col_index("u_hat"), cs = t.col_index("u_hat_x");
  for (const auto& row : t.rows) {
    p.values.push_back(row[cu]);
    p.slopes.push_back(row[cs]);
  }
  if (p.values.size() < 3) throw std::runtime_error("profile csv: too few rows");
  p.a1 = p.values.front();
  p.a2 = p.values.back();
  return p;
}

}  // namespace nf
