#include "probqsar/nn/adam.hpp"

#include <cmath>

#include "probqsar/errors.hpp"

namespace probqsar::nn {

void Adam::step(const std::vector<Matrix *> &params,
                const std::vector<const Matrix *> &grads) {
  if (params.size() != grads.size()) {
    throw DimensionMismatch("adam: parameter/gradient count mismatch");
  }
  if (m_.empty()) {
    for (const Matrix *p : params) {
      m_.emplace_back(p->rows(), p->cols());
      v_.emplace_back(p->rows(), p->cols());
    }
  }
  if (m_.size() != params.size()) {
    throw DimensionMismatch("adam: parameter list changed size");
  }
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (size_t i = 0; i < params.size(); ++i) {
    Matrix &p = *params[i];
    const Matrix &g = *grads[i];
    if (!p.same_shape(g) || !p.same_shape(m_[i])) {
      throw DimensionMismatch("adam: tensor shape mismatch");
    }
    double *m = m_[i].data();
    double *v = v_[i].data();
    double *w = p.data();
    const double *dg = g.data();
    for (size_t k = 0; k < p.size(); ++k) {
      m[k] = cfg_.beta1 * m[k] + (1.0 - cfg_.beta1) * dg[k];
      v[k] = cfg_.beta2 * v[k] + (1.0 - cfg_.beta2) * dg[k] * dg[k];
      const double mhat = m[k] / bc1;
      const double vhat = v[k] / bc2;
      w[k] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
    }
  }
}

}  // namespace probqsar::nn
