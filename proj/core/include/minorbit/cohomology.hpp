#pragma once

#include <map>
#include <utility>
#include <vector>

#include "minorbit/poly.hpp"
#include "minorbit/rootsystem.hpp"

namespace minorbit {

/// Element of the free rank-(n+1) module spanned by {1, e_1..e_n} (or the
/// h-basis on the quantization side) with polynomial coefficients.
struct RingElement {
  Poly c0;              // coefficient of 1
  std::vector<Poly> c;  // coefficients of the n basis classes

  bool operator==(const RingElement& o) const { return c0 == o.c0 && c == o.c; }
  bool is_zero() const;
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement scaled(const Poly& p) const;
};

RingElement ring_element_zero(int n, const Vars& vars);

/// Symmetric (i,j) -> RingElement map defining a commutative product on the
/// rank-(n+1) module; products with 1 are implicit.
struct MultiplicationTable {
  LieType type{Family::A, 1};
  int n = 0;
  Vars vars;
  std::map<std::pair<int, int>, RingElement> entries;  // keys 0-based, i <= j

  const RingElement& entry(int i, int j) const;
  void set(int i, int j, RingElement e);
};

/// Full product of two module elements, quadratic terms reduced through the
/// table. Used for the associativity checks and triple products.
RingElement table_mul(const MultiplicationTable& t, const RingElement& a,
                      const RingElement& b);

bool table_commutative(const MultiplicationTable& t);
bool table_associative(const MultiplicationTable& t);

/// Torus fixed-point data of the A_n resolution, over {t1, t2}.
struct FixedPointData {
  int n = 0;
  Vars vars;
  std::vector<Poly> tangent_euler;               // index k = 0..n
  std::vector<std::vector<Poly>> restrictions;   // [k][j]: class e_{j+1} at p_k
};

FixedPointData an_fixed_point_data(int n);

Poly restrict_class(const FixedPointData& d, const RingElement& a, int k);

/// Equivariant Poincare pairing: sum over fixed points of the product of
/// restrictions divided by the tangent Euler class, fully reduced.
RatFunc an_pairing(const FixedPointData& d, const RingElement& a,
                   const RingElement& b);

/// Cup-product table by localization: for each pair the unique module element
/// whose fixed-point restrictions match the pointwise products. Non-polynomial
/// solutions are a hard error.
MultiplicationTable an_cup_table(int n, int threads = 1);

/// Closed forms of the A_n cup products (the localization table must
/// reproduce these exactly).
MultiplicationTable an_closed_form_table(int n);

/// Root-system cup-product formula for any ADE type, over {t}:
///   e_i . e_j = -t^2 |G| (a_i, a_j) + t sum_{a>0} (a_i, a)(a_j, a) e_a.
MultiplicationTable bg_cup_table(const RootSystem& rs, long gamma_order);

/// |Gamma| for the type: A_n -> n+1, D_n -> 4(n-2), E6/E7/E8 -> 24/48/120.
long group_order(LieType t);

}  // namespace minorbit
