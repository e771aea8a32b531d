#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffappell/sums.hpp"

namespace ffa {

/// The seven finite-field Appell evaluators: F1-F3 by their defining field
/// sums, F1*-F4* by their Gauss-sum double character sums.
enum class AppellKind { F1, F2, F3, F1Star, F2Star, F3Star, F4Star };

bool appell_is_star(AppellKind k);
size_t appell_char_count(AppellKind k);
/// Character roles in declaration order, e.g. F2: A, B, B', C, C'.
std::vector<std::string> appell_roles(AppellKind k);
std::string appell_kind_name(AppellKind k);  // "f1" .. "f4star"
std::optional<AppellKind> appell_kind_from_name(const std::string& name);

struct AppellSpec {
  AppellKind kind = AppellKind::F1;
  std::vector<MultChar> chars;  // in role order for the kind
  FieldElement x, y;
};

/// F1/F2/F3 field-sum definitions (single u-sum for F1, double (u,v)-sums for
/// F2 and F3), including the eps(xy) prefactor and sign characters.
CycloNumber appell_fieldsum(const FieldContext& ctx, const AppellSpec& spec);

/// F1*/F2*/F3*/F4* double character sums; every Gauss-sum denominator is
/// realized through the closed-form inverses.
CycloNumber appell_star(const SumTables& t, const AppellSpec& spec);

/// Kernel matrix of a starred evaluator for fixed characters. The verification
/// sweeps evaluate one character tuple at many (x, y); the (q-1)^2 Gauss-sum
/// products do not depend on the arguments, so they are built once here.
class AppellStarKernel {
 public:
  AppellStarKernel(const SumTables& t, AppellKind kind, std::span<const long> char_indices);
  CycloNumber eval(FieldElement x, FieldElement y) const;

 private:
  const SumTables* t_;
  long n_;
  std::vector<CycloNumber> kernel_;  // (q-1)^2 entries, psi index major
  CycloNumber inv_;                  // integer Gauss factor of the denominator inverses
  Rational scale_;                   // closing rational factor of those inverses
};

}  // namespace ffa
