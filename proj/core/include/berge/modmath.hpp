#pragma once

#include <utility>
#include <vector>

#include "berge/residue.hpp"

namespace berge::modmath {

struct Bezout {
    i64 g; // gcd(x, y) > 0
    i64 u;
    i64 v; // u*x + v*y == g
};

/// Extended Euclid. Errors on (0, 0).
Bezout ext_gcd(i64 x, i64 y);

/// Inverse of a mod p. Throws NotInvertibleError when gcd(a, p) != 1.
Residue mod_inverse(i64 a, i64 p);

/// The class of p * sl-bar for homology class a: (-1 - a + a^{-1}) mod p.
Residue sl_class(const Residue& a);

/// A primitive representation p = r^2 + rs + s^2 with r, s > 0 coprime.
struct EisensteinRep {
    i64 r;
    i64 s;
    bool operator==(const EisensteinRep& o) const { return r == o.r && s == o.s; }
};

/// All coprime pairs (r, s), r, s > 0, with r^2 + rs + s^2 = p, in
/// lexicographic order. Both orderings of an asymmetric pair are listed:
/// (r, s) and (s, r) yield distinct classes r^2 s^{-2}.
std::vector<EisensteinRep> primitive_reps_eisenstein(i64 p);

/// All x in [0, p) with x^2 + x + 1 == 0 (mod p), ascending. Brute force
/// over [0, p); no factorization.
std::vector<Residue> roots_x2_x_1(i64 p);

/// x^2 + xy - y^2, checked.
i64 fib_form(i64 x, i64 y);

/// Pairs visited by iterating (x, y) -> (y - x, x), including the start.
/// Consecutive entries alternate the sign of fib_form.
struct FibPairTrace {
    std::vector<std::pair<i64, i64>> pairs;
    std::size_t steps() const { return pairs.empty() ? 0 : pairs.size() - 1; }
};

struct FibPairResult {
    i64 c;
    i64 d;
    FibPairTrace trace;
};

/// Given coprime a, b > 0 with n = b^2 - ab - a^2 and |n| >= 2, produces
/// coprime c > d > 0 with c^2 + cd - d^2 = |n| and c d^{-1} == a b^{-1}
/// (mod |n|). When n < 0 and a > b the input is already in that shape and
/// the trace is empty. Throws DegenerateModulusError for |n| <= 1.
FibPairResult fib_pair_normalize(i64 a, i64 b);

} // namespace berge::modmath
