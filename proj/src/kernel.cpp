#include "horadam/kernel.hpp"

#include <algorithm>
#include <memory>

#include "horadam/error.hpp"

namespace horadam {

namespace {

void require_same_recurrence(const Sequence& g, const Sequence& h) {
    if (!(g.params() == h.params()))
        throw UsageError("sequences " + g.label() + " and " + h.label() + " do not share a recurrence");
}

void require_variant(int variant) {
    if (variant < 1 || variant > 3) throw UsageError("identity variant must be 1, 2 or 3, got " + std::to_string(variant));
}

void require_nonnegative_k(std::int64_t k) {
    if (k < 0) throw DomainError("summation upper limit k must be non-negative, got " + std::to_string(k));
}

VerificationReport single_case(std::string name, Bindings bindings, const CaseResult& result) {
    VerificationReport report;
    report.identity = std::move(name);
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        if (i) report.grid += ",";
        report.grid += bindings[i].first + "=" + std::to_string(bindings[i].second);
    }
    report.add(bindings, result, false);
    return report;
}

/// Running power r^0, r^1, ... without re-exponentiating each step.
class Powers {
public:
    explicit Powers(Rational ratio) : ratio_(std::move(ratio)) {}
    const Rational& current() const { return current_; }
    void advance() { current_ *= ratio_; }

private:
    Rational ratio_;
    Rational current_{1};
};

/// Checks X_i = f1 X_{i-a} + f2 Y_{i-b} for every i in [lo, hi].
void require_relation(const TermTable& x, const TermTable& y, const ThreeTermRelation& rel, std::int64_t lo,
                      std::int64_t hi) {
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (x(i) != rel.f1 * x(i - rel.a) + rel.f2 * y(i - rel.b))
            throw PreconditionError("three-term relation X_n = (" + rel.f1.to_string() + ")X_{n-" +
                                    std::to_string(rel.a) + "} + (" + rel.f2.to_string() + ")Y_{n-" +
                                    std::to_string(rel.b) + "} fails at n = " + std::to_string(i));
    }
}

/// Hull of a set of indices.
struct Hull {
    std::int64_t lo = 0, hi = 0;
    bool empty = true;
    void add(std::int64_t i) {
        if (empty) {
            lo = hi = i;
            empty = false;
        } else {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
};

std::string kernel_zero(const char* which) { return std::string(which) + " = 0"; }

}  // namespace

Rational f_g(const TermTable& g, std::int64_t u, std::int64_t v, std::int64_t s, std::int64_t t) {
    return g(u - s) * g(v - t) - g(u - t) * g(v - s);
}

Rational f_g(const Sequence& g, const KernelArgs& args) { return f_g(TermTable(g), args.u, args.v, args.s, args.t); }

BasisCoefficients basis_coefficients(const Sequence& g, const Sequence& h, std::int64_t n, std::int64_t a,
                                     std::int64_t b, std::int64_t c, std::int64_t d) {
    require_same_recurrence(g, h);
    const TermTable G(g);
    const TermTable H(h);
    // [G_{c-a} G_{c-b}] [l1]   [H_{n+c}]
    // [G_{d-a} G_{d-b}] [l2] = [H_{n+d}]
    const Rational det = f_g(G, d, c, b, a);
    if (det.is_zero())
        throw DegeneracyError("basis system is singular: f_G(d,c;b,a) = 0 for a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + ", c=" + std::to_string(c) + ", d=" + std::to_string(d));
    const Rational hc = H(n + c);
    const Rational hd = H(n + d);
    return {(hc * G(d - b) - hd * G(c - b)) / det, (G(c - a) * hd - G(d - a) * hc) / det};
}

bool basis_reproduces(const BasisCoefficients& coeffs, const Sequence& g, const Sequence& h, std::int64_t n,
                      std::int64_t a, std::int64_t b, std::int64_t m_lo, std::int64_t m_hi) {
    const TermTable G(g);
    const TermTable H(h);
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
        if (H(n + m) != coeffs.lambda1 * G(m - a) + coeffs.lambda2 * G(m - b)) return false;
    return true;
}

ThreeTermRelation::ThreeTermRelation(Rational f1_, Rational f2_, std::int64_t a_, std::int64_t b_)
    : f1(std::move(f1_)), f2(std::move(f2_)), a(a_), b(b_) {
    if (f1.is_zero() || f2.is_zero()) throw ParameterError("three-term relation coefficients must be nonzero");
    if (a == b) throw ParameterError("three-term relation shifts must differ");
}

ThreeTermRelation ThreeTermRelation::of(const Sequence& s) { return ThreeTermRelation(s.p(), s.q(), 1, 2); }

CaseResult theorem1_case(const TermTable& g, const TermTable& h, const Theorem1Case& c) {
    Rational lhs = f_g(g, c.d, c.c, c.b, c.a) * h(c.n + c.m);
    Rational rhs = f_g(g, c.d, c.m, c.b, c.a) * h(c.n + c.c) + f_g(g, c.c, c.m, c.a, c.b) * h(c.n + c.d);
    return CaseResult::compare(std::move(lhs), std::move(rhs));
}

CaseResult corollary_case(const TermTable& g, const TermTable& h, const CorollaryCase& c) {
    const Rational g0 = g(0);
    const Rational gab = g(c.a - c.b);
    const Rational gba = g(c.b - c.a);
    Rational lhs = (gab * gba - g0 * g0) * h(c.n + c.m);
    Rational rhs = (gba * g(c.m - c.b) - g0 * g(c.m - c.a)) * h(c.n + c.a) +
                   (gab * g(c.m - c.a) - g0 * g(c.m - c.b)) * h(c.n + c.b);
    return CaseResult::compare(std::move(lhs), std::move(rhs));
}

CaseResult lemma1_case(const TermTable& x, const TermTable& y, const ThreeTermRelation& rel, std::int64_t n,
                       std::int64_t k) {
    require_nonnegative_k(k);
    const auto [f1, f2, a, b] = std::tie(rel.f1, rel.f2, rel.a, rel.b);
    Hull hull;
    hull.add(n);
    hull.add(n - (k + 1) * a);
    for (std::int64_t j = 0; j <= k; ++j) hull.add(n - k * a - b + a * j);
    require_relation(x, y, rel, hull.lo, hull.hi);

    Rational sum;
    Powers inv(f1.inverse());
    for (std::int64_t j = 0; j <= k; ++j, inv.advance()) sum += y(n - k * a - b + a * j) * inv.current();
    Rational lhs = f2 * sum;
    Rational rhs = x(n) / pow(f1, k) - f1 * x(n - (k + 1) * a);
    return CaseResult::compare(std::move(lhs), std::move(rhs));
}

CaseResult lemma2_case(const TermTable& x, const ThreeTermRelation& rel, int variant, std::int64_t n, std::int64_t k) {
    require_variant(variant);
    require_nonnegative_k(k);
    const auto [f1, f2, a, b] = std::tie(rel.f1, rel.f2, rel.a, rel.b);

    // index(j) of the summand, the divisor r with summand X/r^j, and both sides' outer parts
    auto index = [&](std::int64_t j) -> std::int64_t {
        switch (variant) {
            case 1: return n - k * a - b + a * j;
            case 2: return n - k * b - a + b * j;
            default: return n - (a - b) * k + b + (a - b) * j;
        }
    };
    Hull hull;
    hull.add(n);
    for (std::int64_t j = 0; j <= k; ++j) hull.add(index(j));
    const std::int64_t tail = variant == 1 ? n - (k + 1) * a : variant == 2 ? n - (k + 1) * b : n - (k + 1) * (a - b);
    hull.add(tail);
    require_relation(x, x, rel, hull.lo, hull.hi);

    const Rational divisor = variant == 1 ? f1 : variant == 2 ? f2 : -f1 / f2;
    Rational sum;
    Powers inv(divisor.inverse());
    for (std::int64_t j = 0; j <= k; ++j, inv.advance()) sum += x(index(j)) * inv.current();

    Rational lhs;
    Rational rhs;
    switch (variant) {
        case 1:
            lhs = f2 * sum;
            rhs = x(n) / pow(f1, k) - f1 * x(tail);
            break;
        case 2:
            lhs = f1 * sum;
            rhs = x(n) / pow(f2, k) - f2 * x(tail);
            break;
        default:
            lhs = sum;
            rhs = f2 * x(n) / pow(divisor, k) + f1 * x(tail);
            break;
    }
    return CaseResult::compare(std::move(lhs), std::move(rhs));
}

CaseResult lemma3_case(const TermTable& x, const ThreeTermRelation& rel, int variant, std::int64_t n, std::int64_t k) {
    require_variant(variant);
    require_nonnegative_k(k);
    const auto [f1, f2, a, b] = std::tie(rel.f1, rel.f2, rel.a, rel.b);

    auto index = [&](std::int64_t j) -> std::int64_t {
        switch (variant) {
            case 1: return n - b * k + (b - a) * j;
            case 2: return n + (a - b) * k + b * j;
            default: return n + (b - a) * k + a * j;
        }
    };
    Hull hull;
    hull.add(n);
    for (std::int64_t j = 0; j <= k; ++j) hull.add(index(j));
    require_relation(x, x, rel, hull.lo, hull.hi);

    // summand weight ratio^j and right-hand factor
    Rational ratio;
    Rational factor;
    switch (variant) {
        case 1:
            ratio = f1 / f2;
            factor = pow(f2, -k);
            break;
        case 2:
            ratio = (-f2).inverse();
            factor = pow(-f1 / f2, k);
            break;
        default:
            ratio = (-f1).inverse();
            factor = pow(-f2 / f1, k);
            break;
    }
    Rational lhs;
    Powers weight(ratio);
    for (std::int64_t j = 0; j <= k; ++j, weight.advance()) lhs += binom(k, j) * weight.current() * x(index(j));
    return CaseResult::compare(std::move(lhs), factor * x(n));
}

CaseResult sum_ordinary_case(const TermTable& g, const TermTable& h, int variant, const SumCase& s) {
    require_variant(variant);
    require_nonnegative_k(s.k);
    const auto [n, m, a, b, c, d, k] = s;
    const Rational det = f_g(g, d, c, b, a);   // f_G(d,c;b,a)
    const Rational fdm = f_g(g, d, m, b, a);   // f_G(d,m;b,a)
    const Rational fcm = f_g(g, c, m, a, b);   // f_G(c,m;a,b)

    Rational lhs;
    Rational rhs;
    switch (variant) {
        case 1: {
            if (fdm.is_zero()) return CaseResult::skip(kernel_zero("f_G(d,m;b,a)"));
            Rational sum;
            Powers w(det / fdm);
            for (std::int64_t j = 0; j <= k; ++j, w.advance()) sum += w.current() * h(n - (m - c) * k - (m - d) + (m - c) * j);
            lhs = fcm * sum;
            rhs = pow(det, k + 1) / pow(fdm, k) * h(n) - fdm * h(n - (m - c) * (k + 1));
            break;
        }
        case 2: {
            if (fcm.is_zero()) return CaseResult::skip(kernel_zero("f_G(c,m;a,b)"));
            Rational sum;
            Powers w(det / fcm);
            for (std::int64_t j = 0; j <= k; ++j, w.advance()) sum += w.current() * h(n - (m - d) * k - (m - c) + (m - d) * j);
            lhs = fdm * sum;
            rhs = pow(det, k + 1) / pow(fcm, k) * h(n) - fcm * h(n - (m - d) * (k + 1));
            break;
        }
        default: {
            if (fcm.is_zero()) return CaseResult::skip(kernel_zero("f_G(c,m;a,b)"));
            Rational sum;
            Powers w(-fdm / fcm);
            for (std::int64_t j = 0; j <= k; ++j, w.advance()) sum += w.current() * h(n - (c - d) * k + (m - c) + (c - d) * j);
            lhs = det * sum;
            rhs = sign_power(k) * pow(fdm, k + 1) / pow(fcm, k) * h(n) + fcm * h(n - (c - d) * (k + 1));
            break;
        }
    }
    return CaseResult::compare(std::move(lhs), std::move(rhs));
}

CaseResult sum_binomial_case(const TermTable& g, const TermTable& h, int variant, const SumCase& s) {
    require_variant(variant);
    require_nonnegative_k(s.k);
    const auto [n, m, a, b, c, d, k] = s;
    const Rational det = f_g(g, d, c, b, a);
    const Rational fdm = f_g(g, d, m, b, a);
    const Rational fcm = f_g(g, c, m, a, b);

    const bool needs_fdm = variant == 3;
    if (needs_fdm && fdm.is_zero()) return CaseResult::skip(kernel_zero("f_G(d,m;b,a)"));
    if (!needs_fdm && fcm.is_zero()) return CaseResult::skip(kernel_zero("f_G(c,m;a,b)"));

    Rational ratio;
    Rational factor;
    auto index = [&](std::int64_t j) -> std::int64_t {
        switch (variant) {
            case 1: return n - (m - d) * k + (c - d) * j;
            case 2: return n - (c - d) * k + (m - d) * j;
            default: return n + (c - d) * k + (m - c) * j;
        }
    };
    switch (variant) {
        case 1:
            ratio = fdm / fcm;
            factor = pow(det / fcm, k);
            break;
        case 2:
            ratio = -det / fcm;
            factor = pow(-fdm / fcm, k);
            break;
        default:
            ratio = -det / fdm;
            factor = pow(-fcm / fdm, k);
            break;
    }
    Rational lhs;
    Powers w(ratio);
    for (std::int64_t j = 0; j <= k; ++j, w.advance()) lhs += binom(k, j) * w.current() * h(index(j));
    return CaseResult::compare(std::move(lhs), factor * h(n));
}

VerificationReport check_theorem1(const Sequence& g, const Sequence& h, const Theorem1Case& c) {
    require_same_recurrence(g, h);
    return single_case("theorem1", {{"n", c.n}, {"m", c.m}, {"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}},
                       theorem1_case(TermTable(g), TermTable(h), c));
}

VerificationReport check_corollary(const Sequence& g, const Sequence& h, const CorollaryCase& c) {
    require_same_recurrence(g, h);
    return single_case("corollary", {{"n", c.n}, {"m", c.m}, {"a", c.a}, {"b", c.b}},
                       corollary_case(TermTable(g), TermTable(h), c));
}

VerificationReport check_lemma1(const Sequence& x, const Sequence& y, const ThreeTermRelation& rel, std::int64_t n,
                                std::int64_t k) {
    return single_case("lemma1", {{"n", n}, {"k", k}}, lemma1_case(TermTable(x), TermTable(y), rel, n, k));
}

VerificationReport check_lemma2(const Sequence& x, const ThreeTermRelation& rel, int variant, std::int64_t n,
                                std::int64_t k) {
    return single_case("lemma2:" + std::to_string(variant), {{"n", n}, {"k", k}},
                       lemma2_case(TermTable(x), rel, variant, n, k));
}

VerificationReport check_lemma3(const Sequence& x, const ThreeTermRelation& rel, int variant, std::int64_t n,
                                std::int64_t k) {
    return single_case("lemma3:" + std::to_string(variant), {{"n", n}, {"k", k}},
                       lemma3_case(TermTable(x), rel, variant, n, k));
}

namespace {

Bindings sum_bindings(const SumCase& c) {
    return {{"n", c.n}, {"m", c.m}, {"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}, {"k", c.k}};
}

}  // namespace

VerificationReport check_sum_ordinary(const Sequence& g, const Sequence& h, int variant, const SumCase& c) {
    require_same_recurrence(g, h);
    return single_case("sum-ordinary:" + std::to_string(variant), sum_bindings(c),
                       sum_ordinary_case(TermTable(g), TermTable(h), variant, c));
}

VerificationReport check_sum_binomial(const Sequence& g, const Sequence& h, int variant, const SumCase& c) {
    require_same_recurrence(g, h);
    return single_case("sum-binomial:" + std::to_string(variant), sum_bindings(c),
                       sum_binomial_case(TermTable(g), TermTable(h), variant, c));
}

// ---- selection ----

KernelSelection KernelSelection::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    KernelSelection sel;
    bool variant_bearing = true;
    if (head == "theorem1") {
        sel.identity = KernelIdentity::theorem1;
        variant_bearing = false;
    } else if (head == "corollary") {
        sel.identity = KernelIdentity::corollary;
        variant_bearing = false;
    } else if (head == "lemma1") {
        sel.identity = KernelIdentity::lemma1;
        variant_bearing = false;
    } else if (head == "lemma2") {
        sel.identity = KernelIdentity::lemma2;
    } else if (head == "lemma3") {
        sel.identity = KernelIdentity::lemma3;
    } else if (head == "sum-ordinary") {
        sel.identity = KernelIdentity::sum_ordinary;
    } else if (head == "sum-binomial") {
        sel.identity = KernelIdentity::sum_binomial;
    } else {
        throw UsageError("unknown identity '" + std::string(text) + "'");
    }
    if (!variant_bearing) {
        if (colon != std::string_view::npos) throw UsageError("identity '" + std::string(head) + "' takes no variant");
        return sel;
    }
    const std::string_view v = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (v != "1" && v != "2" && v != "3")
        throw UsageError("identity '" + std::string(head) + "' needs a variant :1, :2 or :3");
    sel.variant = v[0] - '0';
    return sel;
}

std::string KernelSelection::to_string() const {
    switch (identity) {
        case KernelIdentity::theorem1: return "theorem1";
        case KernelIdentity::corollary: return "corollary";
        case KernelIdentity::lemma1: return "lemma1";
        case KernelIdentity::lemma2: return "lemma2:" + std::to_string(variant);
        case KernelIdentity::lemma3: return "lemma3:" + std::to_string(variant);
        case KernelIdentity::sum_ordinary: return "sum-ordinary:" + std::to_string(variant);
        case KernelIdentity::sum_binomial: return "sum-binomial:" + std::to_string(variant);
    }
    return {};
}

std::vector<std::string> KernelSelection::vars() const {
    switch (identity) {
        case KernelIdentity::theorem1: return {"n", "m", "a", "b", "c", "d"};
        case KernelIdentity::corollary: return {"n", "m", "a", "b"};
        case KernelIdentity::lemma1:
        case KernelIdentity::lemma2:
        case KernelIdentity::lemma3: return {"n", "k"};
        case KernelIdentity::sum_ordinary:
        case KernelIdentity::sum_binomial: return {"n", "m", "a", "b", "c", "d", "k"};
    }
    return {};
}

GridSpec KernelSelection::default_grid() const {
    switch (identity) {
        case KernelIdentity::theorem1:
            return GridSpec({{"n", -3, 3}, {"m", -3, 3}, {"a", -2, 2}, {"b", -2, 2}, {"c", -2, 2}, {"d", -2, 2}});
        case KernelIdentity::corollary: return GridSpec({{"n", -4, 4}, {"m", -4, 4}, {"a", -3, 3}, {"b", -3, 3}});
        case KernelIdentity::lemma1:
        case KernelIdentity::lemma2:
        case KernelIdentity::lemma3: return GridSpec({{"n", -5, 5}, {"k", 0, 6}});
        case KernelIdentity::sum_ordinary:
        case KernelIdentity::sum_binomial:
            return GridSpec({{"n", -2, 2}, {"m", -2, 2}, {"a", -1, 2}, {"b", -1, 2}, {"c", -1, 2}, {"d", -1, 2}, {"k", 0, 5}});
    }
    return {};
}

std::int64_t sweep_window(std::int64_t max_abs, std::int64_t max_k) {
    constexpr std::int64_t kCap = 512;
    if (max_abs > kCap || max_k > kCap) return kCap;
    return std::min(kCap, max_abs * (4 * max_k + 8) + 8);
}

IdentityChecker make_kernel_checker(const KernelSelection& selection, const Sequence& g, const Sequence& h,
                                    const std::optional<ThreeTermRelation>& rel, const GridSpec& grid) {
    const bool single = selection.identity == KernelIdentity::lemma2 || selection.identity == KernelIdentity::lemma3;
    const bool lemma = single || selection.identity == KernelIdentity::lemma1;
    if (!lemma) require_same_recurrence(g, h);

    const VarRange* kr = grid.find("k");
    const std::int64_t max_k = kr ? std::max(std::abs(kr->lo), std::abs(kr->hi)) : 0;
    const std::int64_t w = sweep_window(grid.max_abs(), max_k);
    auto G = std::make_shared<const TermTable>(g, -w, w);
    auto H = std::make_shared<const TermTable>(h, -w, w);
    auto relation = std::make_shared<const ThreeTermRelation>(rel ? *rel : ThreeTermRelation::of(g));

    IdentityChecker checker;
    checker.vars = selection.vars();
    checker.name = selection.to_string() + "(" + g.label() + (single ? std::string() : "," + h.label()) + ")";
    const int v = selection.variant;
    using S = std::span<const std::int64_t>;
    switch (selection.identity) {
        case KernelIdentity::theorem1:
            checker.evaluate = [G, H](S x) { return theorem1_case(*G, *H, {x[0], x[1], x[2], x[3], x[4], x[5]}); };
            break;
        case KernelIdentity::corollary:
            checker.evaluate = [G, H](S x) { return corollary_case(*G, *H, {x[0], x[1], x[2], x[3]}); };
            break;
        case KernelIdentity::lemma1:
            checker.evaluate = [G, H, relation](S x) { return lemma1_case(*G, *H, *relation, x[0], x[1]); };
            break;
        case KernelIdentity::lemma2:
            checker.evaluate = [G, relation, v](S x) { return lemma2_case(*G, *relation, v, x[0], x[1]); };
            break;
        case KernelIdentity::lemma3:
            checker.evaluate = [G, relation, v](S x) { return lemma3_case(*G, *relation, v, x[0], x[1]); };
            break;
        case KernelIdentity::sum_ordinary:
            checker.evaluate = [G, H, v](S x) {
                return sum_ordinary_case(*G, *H, v, {x[0], x[1], x[2], x[3], x[4], x[5], x[6]});
            };
            break;
        case KernelIdentity::sum_binomial:
            checker.evaluate = [G, H, v](S x) {
                return sum_binomial_case(*G, *H, v, {x[0], x[1], x[2], x[3], x[4], x[5], x[6]});
            };
            break;
    }
    return checker;
}

}  // namespace horadam
