#pragma once

#include <string>
#include <vector>

#include "bicatmnd/adjmonadic.hpp"

namespace bicatmnd::fixtures {

// Arrow with objects u, v and arrow b.
FinCat arrow_copy();
// 0 → 1 with an idempotent s on 0 (s;a = a); 1 is terminal.
FinCat idem_arrow();

// On Arrow: both objects to 1, unit (a, id1), mult identity.
Monad ceil_monad();
// ceil_monad transported to arrow_copy.
Monad ceil_copy_monad();
// The relabeling Arrow → arrow_copy as a monad morphism ceil → ceil copy.
MonadMorphism ceil_relabel();
// On Iso2: the swap and constant-at-0 endofunctors.
Monad swap_monad();
Monad const_monad();
// On Arrow: constant at 0, counit (id0, a), comult identity.
Comonad const0_comonad();

struct NamedMonad {
  std::string name;
  Monad monad;
};
// The fixed monads used across the tests: CeilM, its copy, swap, const
// and the identity monad on every corpus category.
std::vector<NamedMonad> monads();

struct NamedLaw {
  std::string name;
  DistributiveLaw law;
};
// Valid distributive laws: trivial ones for every fixture monad, and CeilM
// over itself with identity τ.
std::vector<NamedLaw> distributive_laws();
// id_monad(Z2) over itself with τ the t component; breaks the unit laws.
DistributiveLaw faulty_distributive_law();

// l : Arrow → One, r picks 1; induces CeilM.
Adjunction free_ceil();
// l : One → Arrow picks 0, r : Arrow → One; not monadic.
Adjunction pick_zero();

struct NamedAdjunction {
  std::string name;
  Adjunction adjunction;
};
// FreeCeil, PickZero and the identity adjunction on every corpus category.
std::vector<NamedAdjunction> adjunctions();

struct NamedOneCell {
  std::string name;
  Cell cell;
};
// The 1-cells of the fixture adjunctions plus Iso2 ⇄ One.
std::vector<NamedOneCell> one_cells();

}  // namespace bicatmnd::fixtures
