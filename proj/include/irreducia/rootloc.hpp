#pragma once

// Certificates that every complex zero avoids a closed disk |z| <= d, a
// simultaneous-iteration root finder backing the numeric mode, and the
// root-partition factor-count bound.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "irreducia/error.hpp"
#include "irreducia/polynomial.hpp"

namespace irreducia {

enum class RootMode {
  SymbolicSufficient,  // exact coefficient inequality; sound, incomplete
  NumericHeuristic,    // approximate roots; complete in practice, not a proof
};

struct NumericOptions {
  double tolerance = 1e-10;  // normalized residual per root
  double margin = 1e-3;      // relative clearance required beyond d
  int max_iterations = 2000;
  int restarts = 8;
};

struct RootLocationCertificate {
  Rational radius;
  RootMode mode = RootMode::SymbolicSufficient;
  bool certified = false;
  std::string detail;
  std::vector<double> moduli;  // numeric mode only
};

using Complex = std::complex<double>;

namespace detail {

inline double to_double(const Integer& x) { return mpz_get_d(x.get_mpz_t()); }

inline double normalized_residual(const std::vector<double>& a, Complex z) {
  Complex num = 0;
  double den = 0;
  const double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    num = num * z + a[i];
    den = den * r + std::abs(a[i]);
  }
  return den == 0 ? 0.0 : std::abs(num) / den;
}

// Aberth-Ehrlich iteration from points spread on a circle; `seed` rotates
// and rescales the start so restarts do not repeat a stagnated run.
inline std::vector<Complex> aberth(const std::vector<double>& a, int seed, int max_iter,
                                   double& worst_residual) {
  const int m = static_cast<int>(a.size()) - 1;
  std::vector<double> da(m);
  for (int i = 1; i <= m; ++i) da[i - 1] = a[i] * i;

  // Geometric mean of root moduli is |a0/am|^(1/m); start near it.
  double radius = std::pow(std::abs(a[0] / a[m]), 1.0 / m);
  if (!std::isfinite(radius) || radius == 0) radius = 1.0;
  radius *= 1.0 + 0.15 * seed;
  const double phase = 0.4 + 0.7 * seed;

  std::vector<Complex> z(m);
  for (int k = 0; k < m; ++k) {
    z[k] = std::polar(radius, 2 * std::numbers::pi * k / m + phase);
  }

  auto horner = [](const std::vector<double>& c, Complex x) {
    Complex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };

  for (int it = 0; it < max_iter; ++it) {
    double max_step = 0;
    for (int k = 0; k < m; ++k) {
      const Complex p = horner(a, z[k]);
      if (p == Complex(0)) continue;
      const Complex ratio = p / horner(da, z[k]);
      Complex sum = 0;
      for (int j = 0; j < m; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < 1e-15) break;
  }
  worst_residual = 0;
  for (const auto& r : z) worst_residual = std::max(worst_residual, normalized_residual(a, r));
  return z;
}

}  // namespace detail

/// All m complex roots of f, approximately, with normalized residual
/// |f(t)| / sum |a_i||t|^i below `tolerance`.
inline std::vector<Complex> numeric_roots(const Polynomial& f, const NumericOptions& opt = {}) {
  if (f.degree() < 1) throw Error("numeric roots need degree >= 1");
  std::vector<Complex> roots;
  std::size_t shift = 0;
  while (f[shift] == 0) {
    roots.emplace_back(0.0);
    ++shift;
  }
  std::vector<double> a;
  for (std::size_t i = shift; i < f.coeffs().size(); ++i) a.push_back(detail::to_double(f[i]));
  if (a.size() == 2) {
    roots.emplace_back(-a[0] / a[1]);
    return roots;
  }
  if (a.size() < 2) return roots;

  double best = INFINITY;
  std::vector<Complex> best_roots;
  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    double residual = 0;
    auto z = detail::aberth(a, attempt, opt.max_iterations, residual);
    if (residual < best) {
      best = residual;
      best_roots = std::move(z);
    }
    if (best <= opt.tolerance) break;
  }
  if (!(best <= opt.tolerance)) {
    std::ostringstream msg;
    msg << "root iteration did not converge (best residual " << best << ")";
    throw ConvergenceError(msg.str(), best);
  }
  roots.insert(roots.end(), best_roots.begin(), best_roots.end());
  return roots;
}

inline RootLocationCertificate certify_outside_disk(const Polynomial& f, const Rational& d,
                                                    RootMode mode, const NumericOptions& opt = {}) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (f.constant() == 0) throw Error("root at origin inside every disk");
  if (d <= 0) throw Error("disk radius must be positive");

  RootLocationCertificate cert;
  cert.radius = d;
  cert.mode = mode;
  if (mode == RootMode::SymbolicSufficient) {
    // |f(z)| >= |a0| - sum_{i>=1} |a_i| d^i on |z| <= d.
    Rational rhs = 0, dpow = 1;
    for (int i = 1; i <= f.degree(); ++i) {
      dpow *= d;
      rhs += abs(f[i]) * dpow;
    }
    cert.certified = abs(f.constant()) > rhs;
    std::ostringstream os;
    os << "|a0| = " << abs(f.constant()) << (cert.certified ? " > " : " <= ") << rhs
       << " = sum |a_i| d^i";
    cert.detail = os.str();
    return cert;
  }

  const auto roots = numeric_roots(f, opt);
  double min_mod = INFINITY;
  for (const auto& r : roots) {
    cert.moduli.push_back(std::abs(r));
    min_mod = std::min(min_mod, std::abs(r));
  }
  std::sort(cert.moduli.begin(), cert.moduli.end());
  const double threshold = d.get_d() * (1.0 + opt.margin);
  cert.certified = min_mod > threshold;
  std::ostringstream os;
  os << "min |root| = " << min_mod << (cert.certified ? " > " : " <= ") << threshold
     << " = d(1+" << opt.margin << ")";
  cert.detail = os.str();
  return cert;
}

/// inner: zeros in |z| < 1/|a_m|; outer: zeros in |z| > 1.
struct RootPartition {
  int inner = 0;
  int outer = 0;
  int degree = 0;
};

inline int lemma2_bound(const RootPartition& part) {
  if (part.inner < 0 || part.outer < 0 || part.degree < 1 ||
      part.inner + part.outer != part.degree || part.inner >= part.degree) {
    throw Error("incomplete root partition");
  }
  return part.outer;
}

}  // namespace irreducia
