#pragma once

#include "bott/bott_matrix.hpp"

#include <string_view>
#include <vector>

namespace bott::geometry {

/// How s_i acts on the complex coordinate z_k = u_{j_k} + √-1 u_{j_{k+n}}.
enum class KahlerCase {
  shift_real,       // z_k + 1/2        (i = j_k)
  shift_imaginary,  // z_k + √-1/2      (i = j_{k+n})
  identity,         // z_k              (A^i_{j_k} = A^i_{j_{k+n}} = 0)
  negation,         // -z_k             (A^i_{j_k} = A^i_{j_{k+n}} = 1)
};

std::string_view to_string(KahlerCase c);

struct KahlerData {
  Pairing pairing;
  /// cases[i][k]: action of generator s_i on z_k.
  std::vector<std::vector<KahlerCase>> cases;
};

/// Throws std::invalid_argument if the pairing is not valid for A. Every s_i
/// then acts by a holomorphic isometry of C^n.
KahlerData kahler_structure(const BottMatrix& a, const Pairing& pairing);

}  // namespace bott::geometry
