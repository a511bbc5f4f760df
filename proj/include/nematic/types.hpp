#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <utility>

namespace nematic {

using Vec3 = Eigen::Vector3d;
using VecX = Eigen::VectorXd;
using ArrX = Eigen::ArrayXd;
// Vector field sampled on a 1-d grid, one column per node.
using Field3 = Eigen::Matrix3Xd;

/// Error with a stable machine-readable kind, mapped by the CLI to a JSON
/// error object on stderr. Kinds are the names used in the operation
/// contracts ("DegenerateSpeed", "TauOutOfRange", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace nematic
