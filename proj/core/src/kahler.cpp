#include "bott/kahler.hpp"

#include <stdexcept>
#include <string>

namespace bott::geometry {

std::string_view to_string(KahlerCase c) {
  switch (c) {
    case KahlerCase::shift_real: return "shift-by-1/2";
    case KahlerCase::shift_imaginary: return "shift-by-sqrt(-1)/2";
    case KahlerCase::identity: return "identity";
    case KahlerCase::negation: return "negation";
  }
  return "unknown";
}

KahlerData kahler_structure(const BottMatrix& a, const Pairing& pairing) {
  if (!is_valid_pairing(a, pairing)) {
    throw std::invalid_argument("kahler_structure: pairing is not a partition into equal columns");
  }
  KahlerData data{pairing, {}};
  data.cases.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& row = data.cases[i];
    row.reserve(pairing.pairs.size());
    for (const auto& [re, im] : pairing.pairs) {
      const bool sign_re = a(i, re);
      const bool sign_im = a(i, im);
      // Paired columns are equal, so s_i treats both halves of z_k alike.
      if (sign_re != sign_im) {
        throw std::logic_error("kahler_structure: A^" + std::to_string(i + 1) + " differs on paired columns " +
                               std::to_string(re + 1) + "," + std::to_string(im + 1));
      }
      if (i == re) {
        row.push_back(KahlerCase::shift_real);
      } else if (i == im) {
        row.push_back(KahlerCase::shift_imaginary);
      } else {
        row.push_back(sign_re ? KahlerCase::negation : KahlerCase::identity);
      }
    }
  }
  return data;
}

}  // namespace bott::geometry
