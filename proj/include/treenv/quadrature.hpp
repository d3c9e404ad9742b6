#ifndef TREENV_QUADRATURE_HPP
#define TREENV_QUADRATURE_HPP

#include <functional>

namespace treenv {

// Adaptive composite Gauss-Legendre quadrature: 32-point panels refined by
// interval halving until the whole-vs-halves estimate meets abs_tol (error
// budget split across subintervals). Integrands here are smooth on the open
// interval, so no endpoint special-casing.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

}  // namespace treenv

#endif
