#include "tcdyn/operator.hpp"

namespace tcdyn {

double OperatorMatrix::hermiticity_error() const {
  if (entries.size() == 0) return 0.0;
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_real() const {
  return entries.size() == 0 || entries.imag().cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace tcdyn
