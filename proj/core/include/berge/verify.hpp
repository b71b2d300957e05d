#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berge/families.hpp"
#include "berge/rational.hpp"

namespace berge::verify {

using families::BergeDualRecord;
using families::Family;

/// ((-1 - a + a^{-1}) - chi_neg) mod p; zero exactly when the congruence
/// -1 - a + a^{-1} == -chi holds.
Residue congruence_residual(i64 p, const Residue& a, i64 chi_neg);

enum class Classification { ExpectedTorus, DocumentedException, FailsAsPredicted, Violation };

const char* classification_name(Classification c);

struct CandidateResult {
    Residue a;
    Residue residual;
    bool holds;
    std::optional<Classification> sanctioned; // registry verdict when holds
};

struct CongruenceReport {
    BergeDualRecord record;
    std::vector<CandidateResult> candidates;
    Classification classification;
};

/// Registry of (record, candidate) pairs where the congruence is allowed
/// to hold. Kept as a data table so that new exceptions surface as table
/// diffs rather than logic changes.
struct RegistryEntry {
    Family family;
    // Matchers; 0 means "any" for i/k and sign.
    int sign;                  // Types I/II third parameter
    i64 i;                     // Types I/II first parameter
    i64 k;                     // Types I/II second parameter
    enum class CandidateRule { PlusSecond, MinusSecond, MinusB, SingleCandidate } rule;
    // Extra per-family constraints interpreted by the matcher.
    i64 canonical_b;           // Types III-V: match when derived b equals this (0 = any)
    i64 r_equals;              // Type VII: match when r equals this (0 = any)
    Classification classification;
    const char* note;
};

const std::vector<RegistryEntry>& exception_registry();

std::optional<Classification> registry_lookup(const BergeDualRecord& rec, const Residue& candidate);

/// Residuals for every candidate plus the record classification:
/// Violation dominates, then DocumentedException, ExpectedTorus, and
/// FailsAsPredicted when nothing holds.
CongruenceReport classify(const BergeDualRecord& rec);

/// Left-hand side of the per-case congruence equivalent to the main one
/// for Types III-V, reduced mod p. Cases are indexed by the sign of the
/// candidate (+B or -B) and the sign of b; the congruence holds exactly
/// when the returned value is 1 mod p.
Residue iiiv_case_value(int a_sign, int b_sign, i64 A, i64 B, int delta, i64 a_param, i64 p);

/// Closed-form residual for Types IX and X by candidate sign and the sign
/// of j; vanishing mod p is equivalent to the congruence holding.
i64 ixx_closed_residual(Family f, i64 j, int candidate_sign);

/// Upper bound 2/p for the fractional Dehn twist coefficient of the
/// monodromy; strict sharpening over 2/(2g-1) exactly when p > 2g - 1.
struct FdtcBound {
    Rational bound;
    bool strict;
};

FdtcBound fdtc_bound(i64 p, i64 g);

// ---------------------------------------------------------------------
// Sweeps

struct ParamRange {
    i64 lo = 0;
    i64 hi = -1;
    bool valid() const { return lo <= hi; }
};

struct SweepSpec {
    Family family = Family::I;
    // I / II
    ParamRange i, k;
    bool sign_plus = true;
    bool sign_minus = true;
    // III / IV / V (delta, eps always sweep both signs)
    ParamRange A, k2, t;
    // VII / VIII
    ParamRange r, s;
    // IX / X
    ParamRange j;
};

struct SweepSummary {
    i64 total = 0;       // reports emitted
    i64 holds = 0;       // candidates with residual 0
    i64 violations = 0;  // reports classified Violation
};

using ReportSink = std::function<void(const CongruenceReport&)>;

/// Runs the sweep, emitting reports in lexicographic parameter order
/// regardless of the number of worker threads.
SweepSummary sweep(const SweepSpec& spec, int jobs, const ReportSink& sink);

/// Valid parameter tuples of the sweep in lexicographic order.
std::vector<std::vector<i64>> enumerate_tuples(const SweepSpec& spec);

/// Record for one enumerated tuple.
BergeDualRecord record_for_tuple(Family family, const std::vector<i64>& tuple);

} // namespace berge::verify
