#include "gie/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "gie/errors.hpp"

namespace gie {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double s;  // Simpson estimate on [a, b]
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p,
              double rel_tol, double abs_tol, int depth, double whole_scale,
              double* worst_residual) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);

  Panel left{p.a, m, p.fa, flm, p.fm, simpson(p.a, m, p.fa, flm, p.fm)};
  Panel right{m, p.b, p.fm, frm, p.fb, simpson(m, p.b, p.fm, frm, p.fb)};

  const double s2 = left.s + right.s;
  const double err = (s2 - p.s) / 15.0;
  const double tol = std::max(rel_tol * std::abs(whole_scale), abs_tol);

  if (std::abs(err) <= tol || std::abs(s2 - p.s) <=
                                  std::abs(s2) * 1e-15 * 4.0) {
    return s2 + err;
  }
  if (depth <= 0) {
    *worst_residual = std::max(*worst_residual, std::abs(err));
    return s2 + err;
  }
  // Children share the tolerance budget: halving the interval halves the
  // per-panel allowance, which keeps the summed error below the target.
  return refine(f, left, rel_tol * 0.5, abs_tol * 0.5, depth - 1,
                whole_scale * 0.5, worst_residual) +
         refine(f, right, rel_tol * 0.5, abs_tol * 0.5, depth - 1,
                whole_scale * 0.5, worst_residual);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, double abs_tol,
                        int max_depth) {
  if (a == b) return 0.0;
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw NumericalError("adaptive_simpson: non-finite integration bounds");
  }

  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  if (!(std::isfinite(fa) && std::isfinite(fb) && std::isfinite(fm))) {
    throw NumericalError("adaptive_simpson: integrand not finite on [a, b]");
  }

  Panel whole{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)};

  // First pass to obtain a magnitude scale for the relative tolerance.
  double scale = std::abs(whole.s);
  if (scale == 0.0) {
    // Probe a few interior points so an oscillatory integrand with a
    // vanishing coarse estimate still gets a sensible scale.
    for (int i = 1; i <= 7; ++i) {
      const double x = a + (b - a) * i / 8.0;
      scale = std::max(scale, std::abs(f(x)) * std::abs(b - a));
    }
    if (scale == 0.0) scale = 1.0;
  }

  double worst_residual = 0.0;
  const double value = refine(f, whole, rel_tol, abs_tol, max_depth, scale,
                              &worst_residual);

  if (worst_residual > std::max(rel_tol * std::abs(value), abs_tol) &&
      worst_residual > 1e-13 * std::abs(value)) {
    std::ostringstream msg;
    msg << "adaptive_simpson: tolerance not met after depth " << max_depth
        << "; residual estimate " << worst_residual;
    throw NumericalError(msg.str());
  }
  return value;
}

}  // namespace gie
