#pragma once

#include <functional>
#include <stdexcept>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "legsat/ncpoly.hpp"

// Free graded noncommutative differential algebras over Z[t,t^-1] and its
// mod-2 quotients: derivations, elementary automorphisms, algebraic
// (de)stabilization, augmentations, linearized Poincare polynomials, and
// characteristic-algebra presentations.

namespace legsat {

class DgaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GradedDga {
  Ring ring = Ring::ZT;
  int grading_modulus = 0;  // 0 = integer grading, else degrees mod this
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::map<std::string, int> ids;
  std::vector<NcPoly> diff;

  int intern(const std::string& name, int degree);
  int id_of(const std::string& name) const;  // throws on unknown
  bool has(const std::string& name) const { return ids.count(name) > 0; }
  int n_generators() const { return (int)names.size(); }

  const NcPoly& d(int id) const { return diff.at(id); }
  void set_d(int id, NcPoly p) { diff.at(id) = std::move(p); }

  // degree of a word/polynomial; throws if a polynomial is inhomogeneous
  int word_degree(const Word& w) const;
  std::optional<int> poly_degree(const NcPoly& p) const;
  bool degrees_equal(int a, int b) const;

  // signed Leibniz extension of the differential
  NcPoly derive(const NcPoly& p) const;

  bool d_squared_is_zero(std::string* witness = nullptr) const;
  bool d_lowers_degree_by_one(std::string* witness = nullptr) const;

  GradedDga to_ring(Ring r) const;
};

// g -> unit_sign * t^unit_tpow * g + addend; the differential is transported
// so the renamed generator set presents an isomorphic DGA.
GradedDga elementary_automorphism(const GradedDga& A, int target, int unit_sign,
                                  int unit_tpow, const NcPoly& addend);

// adds e1 of degree `degree`, e2 of degree-1 with d(e1) = e2, d(e2) = 0
GradedDga stabilize_dga(const GradedDga& A, int degree, const std::string& e1,
                        const std::string& e2);

// removes the pair (e1, e2); requires d(e1) == e2 exactly and that neither
// occurs in any other differential
GradedDga destabilize_dga(const GradedDga& A, int e1, int e2);

// degree-preserving bijection of generator names matching differentials
std::optional<std::map<std::string, std::string>> dga_equal_upto_renaming(
    const GradedDga& A, const GradedDga& B);

// --- augmentations (mod 2) ---

struct Augmentation {
  std::map<int, int> values;  // generator id -> 0/1 (degree-0 generators only)
};

std::vector<Augmentation> augmentations(const GradedDga& A, int max_degree_zero = 24);

// linearized Poincare polynomial: degree -> dim H_d over Z/2
std::map<int, int> poincare_polynomial(const GradedDga& A, const Augmentation& eps);
std::string poincare_string(const std::map<int, int>& p);

// --- characteristic algebra ---

struct CharPresentation {
  std::vector<std::string> generators;  // surviving generator names
  std::vector<NcPoly> relations;        // over the surviving ids (original ids)
  bool unit_relation = false;           // a relation reduced to a unit
  const GradedDga* dga = nullptr;
};

CharPresentation characteristic_algebra(const GradedDga& A);

// --- DSL / serialization ---

GradedDga parse_dga(const std::string& text);
std::string serialize_dga(const GradedDga& A);
std::string dga_to_json(const GradedDga& A);

// parses a polynomial over A's generators; identifiers may be mapped through
// `lets` first
NcPoly parse_poly(const GradedDga& A, const std::string& text,
                  const std::map<std::string, NcPoly>* lets = nullptr);

}  // namespace legsat
