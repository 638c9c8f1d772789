#pragma once

/**
 * @file kernel.hpp
 * @brief Exact verifiers for the two-sequence recurrence identity, its
 * corollary, the three-term-relation summation lemmas, and the summation
 * theorems obtained by feeding the identity into those lemmas.
 *
 * Everything is stated through the antisymmetric kernel
 *
 *     f_G(u,v;s,t) = G_{u-s} G_{v-t} - G_{u-t} G_{v-s}
 *
 * and, for sequences G, H sharing one recurrence,
 *
 *     f_G(d,c;b,a) H_{n+m} = f_G(d,m;b,a) H_{n+c} + f_G(c,m;a,b) H_{n+d}.
 *
 * Each check comes in two shapes: a single-case form taking Sequences and
 * returning a one-case VerificationReport, and a `*_case` form over
 * TermTables used by grid sweeps.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/grid.hpp"
#include "horadam/report.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

struct KernelArgs {
    std::int64_t u = 0, v = 0, s = 0, t = 0;
};

Rational f_g(const TermTable& g, std::int64_t u, std::int64_t v, std::int64_t s, std::int64_t t);
Rational f_g(const Sequence& g, const KernelArgs& args);

struct BasisCoefficients {
    Rational lambda1;
    Rational lambda2;
};

/// Solves H_{n+m} = lambda1 G_{m-a} + lambda2 G_{m-b} from the equations at
/// m = c and m = d. Throws DegeneracyError when f_G(d,c;b,a) = 0 and
/// UsageError when g and h have different recurrences.
BasisCoefficients basis_coefficients(const Sequence& g, const Sequence& h, std::int64_t n, std::int64_t a,
                                     std::int64_t b, std::int64_t c, std::int64_t d);

/// True iff the coefficients reproduce H_{n+m} for every m in [m_lo, m_hi].
bool basis_reproduces(const BasisCoefficients& coeffs, const Sequence& g, const Sequence& h, std::int64_t n,
                      std::int64_t a, std::int64_t b, std::int64_t m_lo, std::int64_t m_hi);

struct Theorem1Case {
    std::int64_t n = 0, m = 0, a = 0, b = 0, c = 0, d = 0;
};

struct CorollaryCase {
    std::int64_t n = 0, m = 0, a = 0, b = 0;
};

struct SumCase {
    std::int64_t n = 0, m = 0, a = 0, b = 0, c = 0, d = 0, k = 0;
};

/// X_n = f1 X_{n-a} + f2 Y_{n-b} (Y = X for the one-sequence lemmas).
struct ThreeTermRelation {
    Rational f1;
    Rational f2;
    std::int64_t a = 1;
    std::int64_t b = 2;

    /// Throws ParameterError unless f1 != 0, f2 != 0 and a != b.
    ThreeTermRelation(Rational f1_, Rational f2_, std::int64_t a_, std::int64_t b_);

    /// (p, q, 1, 2): the recurrence itself.
    static ThreeTermRelation of(const Sequence& s);
};

CaseResult theorem1_case(const TermTable& g, const TermTable& h, const Theorem1Case& c);
CaseResult corollary_case(const TermTable& g, const TermTable& h, const CorollaryCase& c);
CaseResult lemma1_case(const TermTable& x, const TermTable& y, const ThreeTermRelation& rel, std::int64_t n,
                       std::int64_t k);
CaseResult lemma2_case(const TermTable& x, const ThreeTermRelation& rel, int variant, std::int64_t n, std::int64_t k);
CaseResult lemma3_case(const TermTable& x, const ThreeTermRelation& rel, int variant, std::int64_t n, std::int64_t k);
CaseResult sum_ordinary_case(const TermTable& g, const TermTable& h, int variant, const SumCase& c);
CaseResult sum_binomial_case(const TermTable& g, const TermTable& h, int variant, const SumCase& c);

VerificationReport check_theorem1(const Sequence& g, const Sequence& h, const Theorem1Case& c);
VerificationReport check_corollary(const Sequence& g, const Sequence& h, const CorollaryCase& c);
VerificationReport check_lemma1(const Sequence& x, const Sequence& y, const ThreeTermRelation& rel, std::int64_t n,
                                std::int64_t k);
VerificationReport check_lemma2(const Sequence& x, const ThreeTermRelation& rel, int variant, std::int64_t n,
                                std::int64_t k);
VerificationReport check_lemma3(const Sequence& x, const ThreeTermRelation& rel, int variant, std::int64_t n,
                                std::int64_t k);
VerificationReport check_sum_ordinary(const Sequence& g, const Sequence& h, int variant, const SumCase& c);
VerificationReport check_sum_binomial(const Sequence& g, const Sequence& h, int variant, const SumCase& c);

// ---- grid-level selection (used by the CLI and acceptance sweeps) ----

enum class KernelIdentity { theorem1, corollary, lemma1, lemma2, lemma3, sum_ordinary, sum_binomial };

struct KernelSelection {
    KernelIdentity identity = KernelIdentity::theorem1;
    int variant = 0;  // 1..3 for the variant-bearing identities, else 0

    /// "theorem1", "corollary", "lemma1", "lemma2:V", "lemma3:V",
    /// "sum-ordinary:V", "sum-binomial:V". Throws UsageError otherwise.
    static KernelSelection parse(std::string_view text);
    std::string to_string() const;

    /// Variables the identity consumes, in canonical order.
    std::vector<std::string> vars() const;
    /// The sweep grid used when the caller gives none.
    GridSpec default_grid() const;
};

/// Builds a checker over term tables sized for `grid`. For the lemmas, g is
/// X, h is Y (lemma1 only) and `rel` defaults to ThreeTermRelation::of(g).
IdentityChecker make_kernel_checker(const KernelSelection& selection, const Sequence& g, const Sequence& h,
                                    const std::optional<ThreeTermRelation>& rel, const GridSpec& grid);

/// Symmetric index window [-w, w] that covers every index a sweep over a
/// grid with the given extent can touch (capped).
std::int64_t sweep_window(std::int64_t max_abs, std::int64_t max_k);

}  // namespace horadam
