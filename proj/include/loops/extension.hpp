#pragma once

#include <vector>

#include "loops/tables.hpp"

namespace loops {

enum class Variant { Standard, Star, StarStar };

const char* variant_name(Variant v);

// Extension data on S x A. Element (x, xi) is encoded as x*|A| + xi.
// f is an |S|x|S| array of A-indices with f(x,e) = f(e,y) = identity.
struct ExtensionSpec {
  LoopTable s;
  GroupTable a;
  std::vector<Elem> f;  // row-major |S|*|S|
  Variant variant = Variant::Standard;

  Elem fv(Elem x, Elem y) const { return f[static_cast<size_t>(x) * s.order() + y]; }
  int order() const { return s.order() * a.order(); }
  Elem encode(Elem x, Elem xi) const { return x * a.order() + xi; }
  Elem s_part(Elem u) const { return u / a.order(); }
  Elem a_part(Elem u) const { return u % a.order(); }

  void check_border() const;  // f(x,e) = f(e,y) = 1
};

// Multiplication of the product entry in the A coordinate, by variant:
//   Standard: f(x,y) xi eta      Star: xi f(x,y) eta      StarStar: xi eta f(x,y)
LoopTable build_extension(const ExtensionSpec& spec, bool validate = true);

struct InverseMaps {
  std::vector<Elem> left;   // lambda-inverse of each element of L
  std::vector<Elem> right;  // rho-inverse
  bool coincide = false;
};

// Inverses via the closed formulas, cross-checked against the built table.
InverseMaps inverse_maps(const ExtensionSpec& spec);

// True iff f is identically the identity of A.
bool is_direct_product(const ExtensionSpec& spec);

// Amalgamated construction on S x B x Delta with
//   (a1,r1,s1)(a2,r2,s2) = (a1 a2, r1 r2, s1 s2 f(a1,a2) k(r1,r2)).
struct AmalgamatedSpec {
  LoopTable s;
  GroupTable b;
  GroupTable delta;               // must be abelian
  std::vector<Elem> k;            // |B|*|B| array of Delta-indices, k(r,1)=k(1,r)=1
  std::vector<Elem> f_values;     // |S|*|S| array of Delta-indices, border = 1

  Elem kv(Elem r1, Elem r2) const { return k[static_cast<size_t>(r1) * b.order() + r2]; }
  Elem fv(Elem x, Elem y) const { return f_values[static_cast<size_t>(x) * s.order() + y]; }
};

// Element (a, r, s) encoded as (a*|B| + r)*|Delta| + s.
LoopTable build_amalgamated(const AmalgamatedSpec& am);

}  // namespace loops
