#pragma once

#include "bott/bott_matrix.hpp"
#include "bott/enumerate.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

// Report documents for every subcommand. Keys are fixed per command; indices
// are 1-based and rationals are "p/q" strings.
namespace bott::cli {

using Json = nlohmann::ordered_json;

/// The input violates a command's precondition (non-symplectic matrix, size
/// above a limit).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json check_report(const BottMatrix& a);
Json betti_report(const BottMatrix& a, bool with_basis);

// These three throw PreconditionError for non-symplectic input.
Json omega_report(const BottMatrix& a);
Json kahler_report(const BottMatrix& a);
Json flux_report(const BottMatrix& a);

Json census_report(const enumerate::CensusReport& report);
Json verify_report(std::size_t n, const std::vector<enumerate::Mismatch>& mismatches);
Json list_report(std::size_t n, bool nonzero_only, const std::vector<BottMatrix>& matrices);

/// Why no pairing exists, naming the odd equal-column classes.
std::string non_symplectic_reason(const BottMatrix& a);

/// "key  value" lines with keys padded to a common width; nested values are
/// printed as compact JSON.
std::string render_text(const Json& report);

}  // namespace bott::cli
