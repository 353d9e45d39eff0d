#include "report.hpp"

#include "bott/cohomology.hpp"
#include "bott/flux.hpp"
#include "bott/kahler.hpp"
#include "bott/predicates.hpp"
#include "bott/symplectic_form.hpp"

#include <algorithm>

namespace bott::cli {

namespace {

Json pairing_json(const Pairing& p) {
  Json out = Json::array();
  for (const auto& [j, k] : p.pairs) out.push_back({j + 1, k + 1});
  return out;
}

Json indices_json(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t j : idx) out.push_back(j + 1);
  return out;
}

Pairing require_pairing(const BottMatrix& a) {
  auto p = find_pairing(a);
  if (!p) throw PreconditionError(non_symplectic_reason(a));
  return *p;
}

Json mismatches_json(const std::vector<enumerate::Mismatch>& mismatches) {
  Json out = Json::array();
  for (const auto& m : mismatches) {
    out.push_back({{"counter", m.counter}, {"matrix", m.matrix}, {"reason", m.reason}});
  }
  return out;
}

}  // namespace

std::string non_symplectic_reason(const BottMatrix& a) {
  if (a.size() % 2 != 0) {
    return "M(A) is not symplectic: size " + std::to_string(a.size()) + " is odd, no column pairing exists";
  }
  std::string out = "M(A) is not symplectic: no pairing of equal columns;";
  for (const auto& cls : odd_column_classes(a)) {
    out += " columns {";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i] + 1);
    out += "} equal to " + a.column(cls.front()).to_string() + " occur " + std::to_string(cls.size()) +
           " time(s);";
  }
  out.pop_back();
  return out;
}

Json check_report(const BottMatrix& a) {
  const bool symplectic = is_symplectic(a);
  const auto pairing = find_pairing(a);
  Json r;
  r["command"] = "check";
  r["n"] = a.size();
  r["orientable"] = is_orientable(a);
  r["symplectic"] = symplectic;
  r["cohomologically_symplectic"] = cohomology::is_cohomologically_symplectic(a);
  r["kahler"] = symplectic;
  r["flux_rank"] = flux_rank(a);
  r["pairing"] = pairing ? pairing_json(*pairing) : Json(nullptr);
  return r;
}

Json betti_report(const BottMatrix& a, bool with_basis) {
  const auto b = cohomology::betti(a);
  Json r;
  r["command"] = "betti";
  r["n"] = a.size();
  r["betti"] = b.values;
  r["poincare"] = cohomology::PoincarePolynomial{b.values}.to_string();
  r["euler_characteristic"] = b.euler_characteristic();
  if (with_basis) {
    Json basis = Json::object();
    for (std::size_t k = 0; k <= a.size(); ++k) {
      Json degree = Json::array();
      for (auto m : cohomology::invariant_basis(a, k)) degree.push_back(indices_json(m.indices()));
      basis[std::to_string(k)] = std::move(degree);
    }
    r["basis"] = std::move(basis);
  } else {
    r["basis"] = nullptr;
  }
  return r;
}

Json omega_report(const BottMatrix& a) {
  const Pairing p = require_pairing(a);
  const auto omega = geometry::build_symplectic_form(a, p);
  Json coefficients = Json::object();
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k)
      if (omega.coefficient(j, k) != 0)
        coefficients["c[" + std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]"] =
            to_string(omega.coefficient(j, k));
  Json r;
  r["command"] = "omega";
  r["n"] = a.size();
  r["pairing"] = pairing_json(p);
  r["omega"] = std::move(coefficients);
  r["invariant"] = geometry::verify_invariance(a, omega);
  r["nondegenerate"] = geometry::nondegenerate(omega);
  return r;
}

Json kahler_report(const BottMatrix& a) {
  const Pairing p = require_pairing(a);
  const auto data = geometry::kahler_structure(a, p);
  Json coords = Json::array();
  for (std::size_t k = 0; k < p.pairs.size(); ++k) {
    const auto [re, im] = p.pairs[k];
    coords.push_back({{"k", k + 1},
                      {"real", re + 1},
                      {"imaginary", im + 1},
                      {"formula", "z" + std::to_string(k + 1) + " = u" + std::to_string(re + 1) +
                                      " + sqrt(-1)*u" + std::to_string(im + 1)}});
  }
  Json generators = Json::array();
  for (std::size_t i = 0; i < data.cases.size(); ++i) {
    Json cases = Json::array();
    for (auto c : data.cases[i]) cases.push_back(std::string(geometry::to_string(c)));
    generators.push_back({{"i", i + 1}, {"cases", std::move(cases)}});
  }
  Json r;
  r["command"] = "kahler";
  r["n"] = a.size();
  r["coordinates"] = std::move(coords);
  r["generators"] = std::move(generators);
  return r;
}

Json flux_report(const BottMatrix& a) {
  const Pairing p = require_pairing(a);
  const auto omega = geometry::build_symplectic_form(a, p);
  const auto data = geometry::flux_group(a, omega);
  Json generators = Json::array();
  for (const auto& g : data.generators) {
    Json flux = Json::object();
    for (const auto& [mono, c] : g.flux.terms()) flux["du" + std::to_string(mono.indices().front() + 1)] = to_string(c);
    generators.push_back({{"isotopy", g.coordinate + 1}, {"flux", std::move(flux)}});
  }
  Json darboux = Json::array();
  for (std::size_t r = 0; r < data.darboux.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < data.darboux.cols(); ++c) row.push_back(to_string(data.darboux(r, c)));
    darboux.push_back(std::move(row));
  }
  Json r;
  r["command"] = "flux";
  r["n"] = a.size();
  r["rank"] = data.rank;
  r["zero_columns"] = indices_json(geometry::zero_columns(a));
  r["generators"] = std::move(generators);
  r["darboux"] = std::move(darboux);
  r["up_to_scale"] = data.up_to_scale;
  return r;
}

Json census_report(const enumerate::CensusReport& report) {
  Json r;
  r["command"] = "census";
  r["n"] = report.n;
  r["total"] = report.total;
  r["orientable"] = report.orientable;
  r["symplectic"] = report.symplectic;
  r["cohomologically_symplectic"] =
      report.cohomologically_symplectic ? Json(*report.cohomologically_symplectic) : Json(nullptr);
  r["oracle"] = report.cohomologically_symplectic.has_value();
  r["mismatches"] = mismatches_json(report.mismatches);
  return r;
}

Json verify_report(std::size_t n, const std::vector<enumerate::Mismatch>& mismatches) {
  Json r;
  r["command"] = "verify";
  r["n"] = n;
  r["total"] = enumerate::family_size(n);
  r["mismatches"] = mismatches_json(mismatches);
  r["status"] = mismatches.empty() ? "pass" : "fail";
  return r;
}

Json list_report(std::size_t n, bool nonzero_only, const std::vector<BottMatrix>& matrices) {
  Json list = Json::array();
  for (const auto& a : matrices) list.push_back(a.to_compact_string());
  Json r;
  r["command"] = "list";
  r["n"] = n;
  r["nonzero_only"] = nonzero_only;
  r["count"] = matrices.size();
  r["matrices"] = std::move(list);
  return r;
}

std::string render_text(const Json& report) {
  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : report.items()) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  return out;
}

}  // namespace bott::cli
