#pragma once

#include <vector>

#include "berge/checked.hpp"

namespace berge::braid {

struct BraidLetter {
    i64 index; // generator index in [1, strands - 1]
    int sign;  // +1 or -1
};

struct BraidWord {
    i64 strands;
    std::vector<BraidLetter> letters;
};

/// The descending cycle word on n strands: sigma_{n-1} sigma_{n-2} ... sigma_1,
/// all positive. Its underlying permutation is an n-cycle.
BraidWord cycle_word(i64 n);

/// b copies of the cycle word on B strands (negative b gives |b| inverted
/// copies) followed by a delta-signed copy of the cycle word on A+1-a
/// strands, embedded on the first A+1-a strands.
BraidWord berge_word(i64 A, i64 B, i64 b, int delta, i64 a_param);

struct CycleBlockParams {
    i64 n1;
    i64 m;
    i64 n2;
};

/// Parameter-level rewrite: the closures of W(n1)^m W(n2)^{-1} and
/// W(n1)^{m-1} W(n1 - n2 + 1) are isotopic. Requires m > 0 and
/// 2 <= n2 <= n1.
CycleBlockParams yamada_rewrite(i64 n1, i64 m, i64 n2);

/// Number of cycles of the underlying permutation of the strands.
i64 closure_components(const BraidWord& w);

/// Euler characteristic of the closure of a positive braid word with
/// connected closure: chi = strands - letter count (the Seifert surface of
/// a positive braid closure realizes the maximal Euler characteristic).
i64 chi_positive_closure(const BraidWord& w);

/// -chi by the closed form |b|(B-1) + delta(A - a) - B. Valid for the
/// canonical parameter form with b > 0; for b < 0 the closure is the
/// mirror of the (|b|, -delta) word and this expression is not its genus.
i64 chi_berge(i64 A, i64 B, i64 b, int delta, i64 a_param);

/// Parameters of the positive word isotopic (up to mirroring when b < 0)
/// to the closure of berge_word(A, B, b, delta, a_param):
/// repeats copies of W(strands), then W(tail) when tail >= 2.
struct NormalizedWord {
    i64 strands;
    i64 repeats;
    i64 tail;
    bool mirrored;    // b < 0 was flipped to (|b|, -delta)
    int rewrites;     // yamada steps applied (0 or 1)
};

NormalizedWord normalize_berge_params(i64 A, i64 B, i64 b, int delta, i64 a_param);

BraidWord materialize(const NormalizedWord& nw);

/// -chi of the Berge word closure computed through the braid route:
/// normalize to a positive word, then apply chi_positive_closure.
i64 chi_berge_oracle(i64 A, i64 B, i64 b, int delta, i64 a_param);

} // namespace berge::braid
