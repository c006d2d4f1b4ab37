#pragma once

#include <cstdint>
#include <map>

#include "scx/complex.hpp"

namespace scx {

/// A characteristic function on the faces of a complex. Values are stored
/// sparsely with default 0 and v({}) = 0 always; evaluating a non-face is
/// an error rather than 0, so indexing bugs in payoff sums cannot hide.
class Game {
public:
    Game(ComplexPtr complex, std::map<std::uint32_t, double> values);

    const ComplexPtr& complex() const { return complex_; }
    const std::map<std::uint32_t, double>& values() const { return values_; }

    double evaluate(Face s) const;

private:
    ComplexPtr complex_;
    std::map<std::uint32_t, double> values_;
};

/// Carrier game of T: value 1 exactly on faces containing T (strict: properly
/// containing T). T = {} is only allowed in the strict variant.
Game carrier_game(Face t, ComplexPtr complex, bool strict);

/// v(S) = |S|.
Game cardinality_game(ComplexPtr complex);

/// Independent uniforms in [lo, hi] on every nonempty face, 0 on {}.
/// Deterministic per seed.
Game random_game(ComplexPtr complex, std::uint64_t seed, double lo, double hi);

Game scale(double c, const Game& v);
Game add(const Game& v, const Game& w);

/// Worth of a subcomplex: the sum of v over its facet antichain.
double complex_worth(const Game& v, const Subcomplex& k);

void require_same_complex(const Game& v, const ComplexPtr& other, const char* op);

} // namespace scx
