#include "berge/braid.hpp"

#include <numeric>

#include "berge/errors.hpp"

namespace berge::braid {

BraidWord cycle_word(i64 n) {
    if (n < 2) throw InvalidParameterError("cycle_word: need n >= 2");
    BraidWord w{n, {}};
    w.letters.reserve(static_cast<std::size_t>(n - 1));
    for (i64 g = n - 1; g >= 1; --g) w.letters.push_back({g, +1});
    return w;
}

namespace {

void append_cycle_block(BraidWord& w, i64 n, int sign) {
    if (sign > 0) {
        for (i64 g = n - 1; g >= 1; --g) w.letters.push_back({g, +1});
    } else {
        // (sigma_{n-1} ... sigma_1)^{-1} = sigma_1^{-1} ... sigma_{n-1}^{-1}
        for (i64 g = 1; g <= n - 1; ++g) w.letters.push_back({g, -1});
    }
}

} // namespace

BraidWord berge_word(i64 A, i64 B, i64 b, int delta, i64 a_param) {
    if (delta != 1 && delta != -1) throw InvalidParameterError("berge_word: delta must be +-1");
    if (a_param != 0 && a_param != 1) throw InvalidParameterError("berge_word: a must be 0 or 1");
    if (B < 2) throw InvalidParameterError("berge_word: need B >= 2");
    i64 n2 = checked_sub(checked_add(A, 1), a_param);
    if (n2 < 2) throw InvalidParameterError("berge_word: need A + 1 - a >= 2");
    if (n2 > B) throw InvalidParameterError("berge_word: need A + 1 - a <= B");

    BraidWord w{B, {}};
    i64 reps = checked_abs(b);
    int rep_sign = b >= 0 ? +1 : -1;
    for (i64 c = 0; c < reps; ++c) append_cycle_block(w, B, rep_sign);
    append_cycle_block(w, n2, delta);
    return w;
}

CycleBlockParams yamada_rewrite(i64 n1, i64 m, i64 n2) {
    if (m <= 0) throw InvalidParameterError("yamada_rewrite: need m > 0");
    if (n2 < 2 || n2 > n1) throw InvalidParameterError("yamada_rewrite: need 2 <= n2 <= n1");
    return {n1, m - 1, checked_add(checked_sub(n1, n2), 1)};
}

i64 closure_components(const BraidWord& w) {
    if (w.strands < 1) throw InvalidParameterError("closure_components: need >= 1 strand");
    std::vector<i64> perm(static_cast<std::size_t>(w.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (const BraidLetter& l : w.letters) {
        if (l.index < 1 || l.index >= w.strands)
            throw InvalidParameterError("closure_components: generator index out of range");
        std::swap(perm[static_cast<std::size_t>(l.index - 1)],
                  perm[static_cast<std::size_t>(l.index)]);
    }
    std::vector<bool> seen(perm.size(), false);
    i64 cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        std::size_t c = s;
        while (!seen[c]) {
            seen[c] = true;
            c = static_cast<std::size_t>(perm[c]);
        }
    }
    return cycles;
}

i64 chi_positive_closure(const BraidWord& w) {
    for (const BraidLetter& l : w.letters)
        if (l.sign <= 0) throw NonPositiveWordError("chi_positive_closure: word has negative letters");
    if (closure_components(w) != 1)
        throw DisconnectedClosureError("chi_positive_closure: closure is not a knot");
    return checked_sub(w.strands, static_cast<i64>(w.letters.size()));
}

i64 chi_berge(i64 A, i64 B, i64 b, int delta, i64 a_param) {
    i64 term = checked_mul(checked_abs(b), checked_sub(B, 1));
    i64 mid = checked_mul(static_cast<i64>(delta), checked_sub(A, a_param));
    return checked_sub(checked_add(term, mid), B);
}

NormalizedWord normalize_berge_params(i64 A, i64 B, i64 b, int delta, i64 a_param) {
    if (delta != 1 && delta != -1) throw InvalidParameterError("normalize_berge_params: delta must be +-1");
    if (a_param != 0 && a_param != 1) throw InvalidParameterError("normalize_berge_params: a must be 0 or 1");
    i64 n2 = checked_sub(checked_add(A, 1), a_param);
    if (B < 2 || n2 < 2 || n2 > B)
        throw InvalidParameterError("normalize_berge_params: parameter ranges violated");

    NormalizedWord nw{B, 0, 0, false, 0};
    i64 m = b;
    int d = delta;
    if (m < 0) {
        // Mirror the closure: flip the signs of b and delta together.
        m = checked_neg(m);
        d = -d;
        nw.mirrored = true;
    }
    if (d == -1) {
        if (m == 0)
            throw InvalidParameterError("normalize_berge_params: lone inverted block");
        CycleBlockParams rewritten = yamada_rewrite(B, m, n2);
        nw.repeats = rewritten.m;
        nw.tail = rewritten.n2;
        nw.rewrites = 1;
    } else {
        nw.repeats = m;
        nw.tail = n2;
    }
    return nw;
}

BraidWord materialize(const NormalizedWord& nw) {
    BraidWord w{nw.strands, {}};
    for (i64 c = 0; c < nw.repeats; ++c) append_cycle_block(w, nw.strands, +1);
    if (nw.tail >= 2) append_cycle_block(w, nw.tail, +1);
    return w;
}

i64 chi_berge_oracle(i64 A, i64 B, i64 b, int delta, i64 a_param) {
    BraidWord w = materialize(normalize_berge_params(A, B, b, delta, a_param));
    return checked_neg(chi_positive_closure(w));
}

} // namespace berge::braid
