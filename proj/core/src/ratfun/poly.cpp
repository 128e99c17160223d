#include "locsyn/ratfun/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

constexpr double kClusterRel = 2e-3;
constexpr double kMultipleRootTol = 1e-9;

bool is_real_root(const cplx& r) { return std::abs(r.imag()) <= 1e-12 * std::max(1.0, std::abs(r)); }

std::vector<cplx> quadratic_roots(double c0, double c1, double c2) {
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc >= 0.0) {
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    if (q == 0.0) return {0.0, 0.0};
    return {q / c2, c0 / q};
  }
  const double re = -c1 / (2.0 * c2);
  const double im = std::sqrt(-disc) / (2.0 * std::abs(c2));
  return {cplx(re, im), cplx(re, -im)};
}

void polish(const Poly& p, const Poly& dp, cplx& r) {
  for (int it = 0; it < 3; ++it) {
    const cplx f = p.eval(r);
    const cplx df = dp.eval(r);
    if (df == 0.0) return;
    const cplx cand = r - f / df;
    if (std::abs(p.eval(cand)) < std::abs(f)) {
      r = cand;
    } else {
      return;
    }
  }
}

// True if c is a root of multiplicity k up to a relative tolerance.
bool is_multiple_root(const Poly& p, cplx c, int k) {
  Poly d = p;
  for (int j = 0; j < k; ++j) {
    double scale = 0.0;
    for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) scale = scale * std::abs(c) + std::abs(*it);
    if (std::abs(d.eval(c)) > kMultipleRootTol * scale) return false;
    d = d.derivative();
  }
  return true;
}

std::vector<bool> snap_clusters(const Poly& p, std::vector<cplx>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
      if (std::abs(roots[i] - roots[j]) <= kClusterRel * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<cplx> sum(n, 0.0);
  std::vector<int> count(n, 0);
  std::vector<bool> snapped(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] += roots[i];
    ++count[find(i)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    cplx c = sum[r] / static_cast<double>(count[r]);
    if (is_real_root(c)) c = c.real();
    if (count[r] > 1 && is_multiple_root(p, c, count[r])) {
      roots[i] = c;
      snapped[i] = true;
    } else if (is_real_root(roots[i])) {
      roots[i] = roots[i].real();
    }
  }
  return snapped;
}

}  // namespace

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { strip(); }

Poly::Poly(std::initializer_list<double> coeffs) : c_(coeffs) { strip(); }

void Poly::strip() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Poly Poly::constant(double c) { return Poly(std::vector<double>{c}); }

Poly Poly::monomial(int degree, double c) {
  std::vector<double> v(degree + 1, 0.0);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const cplx> roots) {
  Poly p = constant(1.0);
  for (const cplx& r : roots) {
    if (is_real_root(r)) {
      p = p * Poly{-r.real(), 1.0};
    } else if (r.imag() > 0.0) {
      p = p * Poly{std::norm(r), -2.0 * r.real(), 1.0};
    }
  }
  return p;
}

double Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0.0;
  return c_[i];
}

double Poly::leading() const { return c_.empty() ? 0.0 : c_.back(); }

double Poly::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double Poly::eval(double s) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

cplx Poly::eval(cplx s) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (double& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(double k) {
  for (double& v : c_) v *= k;
  strip();
  return *this;
}

Poly Poly::reflected() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) fail(ErrorCode::DegenerateInput, "monic of zero polynomial");
  return *this * (1.0 / leading());
}

Poly Poly::trimmed(double rel_tol, double scale) const {
  Poly r = *this;
  const double cut = rel_tol * scale;
  for (double& v : r.c_)
    if (std::abs(v) <= cut) v = 0.0;
  r.strip();
  return r;
}

Poly cancelling_sum(const Poly& a, const Poly& b, double rel_tol) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<double> c(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const double x = a[i], y = b[i], v = x + y;
    c[i] = std::abs(v) <= rel_tol * std::max(std::abs(x), std::abs(y)) ? 0.0 : v;
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(ErrorCode::DegenerateInput, "division by zero polynomial");
  if (degree() < d.degree()) return {Poly{}, *this};
  std::vector<double> r = c_;
  const int nd = d.degree();
  std::vector<double> q(degree() - nd + 1, 0.0);
  for (int k = degree() - nd; k >= 0; --k) {
    const double f = r[k + nd] / d.leading();
    q[k] = f;
    for (int j = 0; j <= nd; ++j) r[k + j] -= f * d.c_[j];
    r[k + nd] = 0.0;
  }
  r.resize(nd);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

std::vector<cplx> Poly::roots() const {
  std::vector<cplx> out;
  if (degree() <= 0) return out;
  std::size_t z = 0;
  while (c_[z] == 0.0) ++z;
  out.assign(z, cplx(0.0));
  std::vector<double> c(c_.begin() + static_cast<std::ptrdiff_t>(z), c_.end());
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) {
    out.emplace_back(-c[0] / c[1]);
  } else if (n == 2) {
    for (const cplx& r : quadratic_roots(c[0], c[1], c[2])) out.push_back(r);
  } else if (n > 2) {
    const double sigma = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double pw = 1.0;
    std::vector<double> pows(n + 1);
    for (int i = 0; i <= n; ++i) {
      pows[i] = pw;
      pw *= sigma;
    }
    for (int i = 0; i < n; ++i) {
      comp(i, n - 1) = -c[i] * pows[i] / (c[n] * pows[n]);
      if (i > 0) comp(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) fail(ErrorCode::DegenerateInput, "root finding failed");
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i] * sigma);
  }
  const std::vector<bool> snapped = snap_clusters(*this, out);
  const Poly dp = derivative();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!snapped[i] && out[i] != 0.0) polish(*this, dp, out[i]);
  // Restore exact conjugate symmetry after polishing.
  std::vector<cplx> sym;
  std::vector<bool> used(out.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (out[i].imag() == 0.0) {
      sym.push_back(out[i]);
      continue;
    }
    std::size_t best = out.size();
    double bd = 0.0;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(out[j] - std::conj(out[i]));
      if (best == out.size() || d < bd) {
        best = j;
        bd = d;
      }
    }
    if (best == out.size()) {
      sym.push_back(out[i].real());
      continue;
    }
    used[best] = true;
    const cplx m(0.5 * (out[i].real() + out[best].real()),
                 0.5 * (std::abs(out[i].imag()) + std::abs(out[best].imag())));
    sym.push_back(m);
    sym.push_back(std::conj(m));
  }
  std::sort(sym.begin(), sym.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return sym;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> r(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(r));
}

Poly operator*(double k, Poly a) { return a *= k; }
Poly operator*(Poly a, double k) { return a *= k; }

bool coefficients_close(const Poly& a, const Poly& b, double rel_tol) {
  const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    if (std::abs(a[i] - b[i]) > rel_tol * scale) return false;
  return true;
}

}  // namespace locsyn::ratfun
