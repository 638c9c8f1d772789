#include "horadam/catalog.hpp"

#include <algorithm>
#include <memory>
#include <regex>

#include "horadam/error.hpp"
#include "horadam/kernel.hpp"

namespace horadam {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::fibonacci: return "fib";
        case Family::pell: return "pell";
        case Family::jacobsthal: return "jac";
    }
    return {};
}

Sequence family_base(Family family) {
    switch (family) {
        case Family::fibonacci: return fibonacci();
        case Family::pell: return pell();
        case Family::jacobsthal: return jacobsthal();
    }
    return fibonacci();
}

Sequence family_companion(Family family) {
    switch (family) {
        case Family::fibonacci: return lucas();
        case Family::pell: return pell_lucas();
        case Family::jacobsthal: return jacobsthal_lucas();
    }
    return lucas();
}

namespace {

using Values = std::span<const std::int64_t>;
using Eval = std::function<CaseResult(const FamilyTerms&, Values)>;

char family_symbol(Family f) {
    switch (f) {
        case Family::fibonacci: return 'F';
        case Family::pell: return 'P';
        case Family::jacobsthal: return 'J';
    }
    return 'F';
}

/// Expands "$G" to the family symbol and "$W(expr)" to "2^(expr)*" for the
/// Jacobsthal family (q = 2) or to nothing when q = 1.
std::string expand(std::string_view tmpl, Family f) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl.substr(i, 2) == "$G") {
            out += family_symbol(f);
            ++i;
        } else if (tmpl.substr(i, 3) == "$W(") {
            std::size_t depth = 1;
            std::size_t j = i + 3;
            for (; j < tmpl.size() && depth > 0; ++j) {
                if (tmpl[j] == '(') ++depth;
                if (tmpl[j] == ')') --depth;
            }
            if (f == Family::jacobsthal) out += "2^(" + std::string(tmpl.substr(i + 3, j - i - 4)) + ")*";
            i = j - 1;
        } else {
            out += tmpl[i];
        }
    }
    return out;
}

/// Writes a generic description for one family: G becomes F, P or J, and the
/// weight q^{e} becomes 2^{e} for Jacobsthal and disappears otherwise.
std::string describe(std::string_view generic, Family f) {
    static const std::regex weight(R"(q\^\{([^}]*)\} )");
    std::string out = std::regex_replace(std::string(generic), weight, f == Family::jacobsthal ? "2^{$1} " : "");
    for (std::size_t i = 0; (i = out.find("G_", i)) != std::string::npos; i += 2) out[i] = family_symbol(f);
    if (out.find(" w") != std::string::npos || out.find("w^") != std::string::npos)
        out += f == Family::jacobsthal ? ", w = 2^{a-b}" : ", w = 1";
    if (out.find("s ") == 0 || out.find(" s^") != std::string::npos || out.find(" s w") != std::string::npos ||
        out.find("+ s ") != std::string::npos)
        out += ", s = (-1)^{a+b+1}";
    return out;
}

struct Builder {
    std::vector<CatalogEntry> entries;

    void add(std::initializer_list<Family> families, std::string_view suffix, std::string description,
             std::string anchor, std::vector<std::string> vars, bool slot, std::string_view dsl, Eval eval) {
        for (Family f : families) {
            CatalogEntry e;
            e.id = std::string(family_name(f)) + "." + std::string(suffix);
            e.description = describe(description, f);
            e.family = f;
            e.free_vars = vars;
            e.generalized_slot = slot;
            e.anchor = anchor;
            e.dsl = expand(dsl, f);
            e.evaluate = eval;
            entries.push_back(std::move(e));
        }
    }
};

constexpr std::initializer_list<Family> kAll = {Family::fibonacci, Family::pell, Family::jacobsthal};

CaseResult cmp(Rational lhs, Rational rhs) { return CaseResult::compare(std::move(lhs), std::move(rhs)); }

std::vector<CatalogEntry> build_catalog() {
    Builder b;
    const std::vector<std::string> nmab = {"n", "m", "a", "b"};
    const std::vector<std::string> nm = {"n", "m"};
    const std::vector<std::string> nmk = {"n", "m", "k"};
    const std::vector<std::string> nmabk = {"n", "m", "a", "b", "k"};

    // Recurrence relations. t.base = G, t.slot = H, W(e) = q^e.
    b.add(kAll, "master", "G_{a-b} H_{n+m} = G_{m-b} H_{n+a} - (-1)^{a-b} q^{a-b} G_{m-a} H_{n+b}",
          "three-term relation from the corollary with G the base sequence", nmab, true,
          "$G[a-b]*H[n+m] = $G[m-b]*H[n+a] - (-1)^(a-b)*$W(a-b)$G[m-a]*H[n+b]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b] = std::array{v[0], v[1], v[2], v[3]};
              return cmp(t.base(a - b) * t.slot(n + m),
                         t.base(m - b) * t.slot(n + a) - sign_power(a - b) * pow(t.q, a - b) * t.base(m - a) * t.slot(n + b));
          });
    b.add(kAll, "master-dual", "G_{a-b} H_{n+m} = H_{m-b} G_{n+a} - (-1)^{a-b} q^{a-b} H_{m-a} G_{n+b}",
          "master relation with the roles of G and H exchanged on the right", nmab, true,
          "$G[a-b]*H[n+m] = H[m-b]*$G[n+a] - (-1)^(a-b)*$W(a-b)H[m-a]*$G[n+b]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b] = std::array{v[0], v[1], v[2], v[3]};
              return cmp(t.base(a - b) * t.slot(n + m),
                         t.slot(m - b) * t.base(n + a) - sign_power(a - b) * pow(t.q, a - b) * t.slot(m - a) * t.base(n + b));
          });
    b.add(kAll, "catalan-general", "G_{n-m} H_{n+m} = G_n H_n - (-1)^{n-m} q^{n-m} G_m H_m",
          "master with a = 0, b = m - n: generalized Catalan identity", nm, true,
          "$G[n-m]*H[n+m] = $G[n]*H[n] - (-1)^(n-m)*$W(n-m)$G[m]*H[m]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(t.base(n - m) * t.slot(n + m),
                         t.base(n) * t.slot(n) - sign_power(n - m) * pow(t.q, n - m) * t.base(m) * t.slot(m));
          });
    b.add(kAll, "catalan", "G_{n-m} G_{n+m} = G_n^2 + (-1)^{n+m+1} q^{n-m} G_m^2",
          "Catalan's identity", nm, false,
          "$G[n-m]*$G[n+m] = $G[n]^(2) + (-1)^(n+m+1)*$W(n-m)$G[m]^(2)",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(t.base(n - m) * t.base(n + m),
                         pow(t.base(n), 2) + sign_power(n + m + 1) * pow(t.q, n - m) * pow(t.base(m), 2));
          });
    b.add(kAll, "double-shift", "G_{2a} H_{n+m} = G_{m+a} H_{n+a} - q^{2a} G_{m-a} H_{n-a}",
          "master with b = -a", {"n", "m", "a"}, true,
          "$G[2*a]*H[n+m] = $G[m+a]*H[n+a] - $W(2*a)$G[m-a]*H[n-a]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a] = std::array{v[0], v[1], v[2]};
              return cmp(t.base(2 * a) * t.slot(n + m),
                         t.base(m + a) * t.slot(n + a) - pow(t.q, 2 * a) * t.base(m - a) * t.slot(n - a));
          });
    b.add({Family::fibonacci}, "halton", "H_{n+m} = F_{m+1} H_{n+1} - F_{m-1} H_{n-1}",
          "double-shift with a = 1", nm, true,
          "H[n+m] = F[m+1]*H[n+1] - F[m-1]*H[n-1]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(t.slot(n + m), t.base(m + 1) * t.slot(n + 1) - t.base(m - 1) * t.slot(n - 1));
          });
    b.add({Family::pell}, "halton", "2 H_{n+m} = P_{m+1} H_{n+1} - P_{m-1} H_{n-1}",
          "double-shift with a = 1: the 2P_{n+m} and 2Q_{n+m} evaluations", nm, true,
          "2*H[n+m] = P[m+1]*H[n+1] - P[m-1]*H[n-1]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(Rational(2) * t.slot(n + m), t.base(m + 1) * t.slot(n + 1) - t.base(m - 1) * t.slot(n - 1));
          });
    b.add(kAll, "odd-even-split.odd", "G_{2k-1} H_{n+m} = q^{2k-1} G_{m-2k} H_{n+1} + G_{m-1} H_{n+2k}",
          "master with a = 1, b = 2k", nmk, true,
          "$G[2*k-1]*H[n+m] = $W(2*k-1)$G[m-2*k]*H[n+1] + $G[m-1]*H[n+2*k]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, k] = std::array{v[0], v[1], v[2]};
              return cmp(t.base(2 * k - 1) * t.slot(n + m),
                         pow(t.q, 2 * k - 1) * t.base(m - 2 * k) * t.slot(n + 1) + t.base(m - 1) * t.slot(n + 2 * k));
          });
    b.add(kAll, "odd-even-split.even", "G_{2k} H_{n+m} = G_m H_{n+2k} - q^{2k} G_{m-2k} H_n",
          "master with a = 0, b = 2k", nmk, true,
          "$G[2*k]*H[n+m] = $G[m]*H[n+2*k] - $W(2*k)$G[m-2*k]*H[n]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, k] = std::array{v[0], v[1], v[2]};
              return cmp(t.base(2 * k) * t.slot(n + m),
                         t.base(m) * t.slot(n + 2 * k) - pow(t.q, 2 * k) * t.base(m - 2 * k) * t.slot(n));
          });
    b.add({Family::fibonacci}, "vajda8", "H_{n+m} = F_{m-1} H_n + F_m H_{n+1}",
          "master with a = 1, b = 0", nm, true,
          "H[n+m] = F[m-1]*H[n] + F[m]*H[n+1]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(t.slot(n + m), t.base(m - 1) * t.slot(n) + t.base(m) * t.slot(n + 1));
          });
    b.add(kAll, "double-index", "G_{2m} H_{2n} = G_{n+m} H_{n+m} - q^{2m} G_{n-m} H_{n-m}",
          "master with a = n, b = -m", nm, true,
          "$G[2*m]*H[2*n] = $G[n+m]*H[n+m] - $W(2*m)$G[n-m]*H[n-m]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m] = std::array{v[0], v[1]};
              return cmp(t.base(2 * m) * t.slot(2 * n),
                         t.base(n + m) * t.slot(n + m) - pow(t.q, 2 * m) * t.base(n - m) * t.slot(n - m));
          });

    // Ordinary summation theorems (master fed into the three-term lemma),
    // s = (-1)^{a+b+1}, w = q^{a-b}.
    b.add(kAll, "sum.ordinary.1",
          "s w G_{m-a} sum_j G_{m-b}^{k-j} G_{a-b}^j H_{n-(m-a)k-(m-b)+(m-a)j} = G_{a-b}^{k+1} H_n - G_{m-b}^{k+1} H_{n-(m-a)(k+1)}",
          "ordinary summation theorem, first identity", nmabk, true,
          "(-1)^(a+b+1)*$W(a-b)$G[m-a]*sum(j, 0, k, $G[m-b]^(k-j)*$G[a-b]^(j)*H[n-(m-a)*k-(m-b)+(m-a)*j])"
          " = $G[a-b]^(k+1)*H[n] - $G[m-b]^(k+1)*H[n-(m-a)*(k+1)]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += pow(gmb, k - j) * pow(gab, j) * t.slot(n - (m - a) * k - (m - b) + (m - a) * j);
              return cmp(sign_power(a + b + 1) * pow(t.q, a - b) * gma * sum,
                         pow(gab, k + 1) * t.slot(n) - pow(gmb, k + 1) * t.slot(n - (m - a) * (k + 1)));
          });
    b.add(kAll, "sum.ordinary.2",
          "G_{m-b} sum_j s^{k-j} w^{k-j} G_{m-a}^{k-j} G_{a-b}^j H_{n-(m-b)k-(m-a)+(m-b)j} = G_{a-b}^{k+1} H_n - s^{k+1} w^{k+1} G_{m-a}^{k+1} H_{n-(m-b)(k+1)}",
          "ordinary summation theorem, second identity", nmabk, true,
          "$G[m-b]*sum(j, 0, k, (-1)^((a+b+1)*(k-j))*$W((a-b)*(k-j))$G[m-a]^(k-j)*$G[a-b]^(j)*H[n-(m-b)*k-(m-a)+(m-b)*j])"
          " = $G[a-b]^(k+1)*H[n] - (-1)^((a+b+1)*(k+1))*$W((a-b)*(k+1))$G[m-a]^(k+1)*H[n-(m-b)*(k+1)]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += sign_power((a + b + 1) * (k - j)) * pow(t.q, (a - b) * (k - j)) * pow(gma, k - j) *
                         pow(gab, j) * t.slot(n - (m - b) * k - (m - a) + (m - b) * j);
              return cmp(gmb * sum, pow(gab, k + 1) * t.slot(n) - sign_power((a + b + 1) * (k + 1)) *
                                                                     pow(t.q, (a - b) * (k + 1)) * pow(gma, k + 1) *
                                                                     t.slot(n - (m - b) * (k + 1)));
          });
    b.add(kAll, "sum.ordinary.3",
          "G_{a-b} sum_j (-1)^{(a+b)j} w^{k-j} G_{m-a}^{k-j} G_{m-b}^j H_{n-(a-b)k+(m-a)+(a-b)j} = (-1)^{(a+b)k} G_{m-b}^{k+1} H_n + s w^{k+1} G_{m-a}^{k+1} H_{n-(a-b)(k+1)}",
          "ordinary summation theorem, third identity", nmabk, true,
          "$G[a-b]*sum(j, 0, k, (-1)^((a+b)*j)*$W((a-b)*(k-j))$G[m-a]^(k-j)*$G[m-b]^(j)*H[n-(a-b)*k+(m-a)+(a-b)*j])"
          " = (-1)^((a+b)*k)*$G[m-b]^(k+1)*H[n] + (-1)^(a+b+1)*$W((a-b)*(k+1))$G[m-a]^(k+1)*H[n-(a-b)*(k+1)]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += sign_power((a + b) * j) * pow(t.q, (a - b) * (k - j)) * pow(gma, k - j) * pow(gmb, j) *
                         t.slot(n - (a - b) * k + (m - a) + (a - b) * j);
              return cmp(gab * sum, sign_power((a + b) * k) * pow(gmb, k + 1) * t.slot(n) +
                                        sign_power(a + b + 1) * pow(t.q, (a - b) * (k + 1)) * pow(gma, k + 1) *
                                            t.slot(n - (a - b) * (k + 1)));
          });

    // Binomial summation theorems.
    b.add(kAll, "sum.binomial.1",
          "sum_j s^{k-j} C(k,j) G_{m-b}^j w^{k-j} G_{m-a}^{k-j} H_{n-(m-b)k+(a-b)j} = G_{a-b}^k H_n",
          "binomial summation theorem, first identity", nmabk, true,
          "sum(j, 0, k, (-1)^((a+b+1)*(k-j))*binom(k, j)*$G[m-b]^(j)*$W((a-b)*(k-j))$G[m-a]^(k-j)*H[n-(m-b)*k+(a-b)*j])"
          " = $G[a-b]^(k)*H[n]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += sign_power((a + b + 1) * (k - j)) * binom(k, j) * pow(gmb, j) * pow(t.q, (a - b) * (k - j)) *
                         pow(gma, k - j) * t.slot(n - (m - b) * k + (a - b) * j);
              return cmp(std::move(sum), pow(gab, k) * t.slot(n));
          });
    b.add(kAll, "sum.binomial.2",
          "sum_j (-1)^{(a+b)j} C(k,j) G_{a-b}^j w^{k-j} G_{m-a}^{k-j} H_{n-(a-b)k+(m-b)j} = (-1)^{(a+b)k} G_{m-b}^k H_n",
          "binomial summation theorem, second identity", nmabk, true,
          "sum(j, 0, k, (-1)^((a+b)*j)*binom(k, j)*$G[a-b]^(j)*$W((a-b)*(k-j))$G[m-a]^(k-j)*H[n-(a-b)*k+(m-b)*j])"
          " = (-1)^((a+b)*k)*$G[m-b]^(k)*H[n]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += sign_power((a + b) * j) * binom(k, j) * pow(gab, j) * pow(t.q, (a - b) * (k - j)) *
                         pow(gma, k - j) * t.slot(n - (a - b) * k + (m - b) * j);
              return cmp(std::move(sum), sign_power((a + b) * k) * pow(gmb, k) * t.slot(n));
          });
    b.add(kAll, "sum.binomial.3",
          "sum_j (-1)^j C(k,j) G_{a-b}^j G_{m-b}^{k-j} H_{n+(a-b)k+(m-a)j} = (-1)^{(a+b)k} w^k G_{m-a}^k H_n",
          "binomial summation theorem, third identity", nmabk, true,
          "sum(j, 0, k, (-1)^(j)*binom(k, j)*$G[a-b]^(j)*$G[m-b]^(k-j)*H[n+(a-b)*k+(m-a)*j])"
          " = (-1)^((a+b)*k)*$W((a-b)*k)$G[m-a]^(k)*H[n]",
          [](const FamilyTerms& t, Values v) {
              const auto [n, m, a, b, k] = std::array{v[0], v[1], v[2], v[3], v[4]};
              const Rational gma = t.base(m - a), gmb = t.base(m - b), gab = t.base(a - b);
              Rational sum;
              for (std::int64_t j = 0; j <= k; ++j)
                  sum += sign_power(j) * binom(k, j) * pow(gab, j) * pow(gmb, k - j) * t.slot(n + (a - b) * k + (m - a) * j);
              return cmp(std::move(sum), sign_power((a + b) * k) * pow(t.q, (a - b) * k) * pow(gma, k) * t.slot(n));
          });

    std::sort(b.entries.begin(), b.entries.end(), [](const CatalogEntry& x, const CatalogEntry& y) { return x.id < y.id; });
    return std::move(b.entries);
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = build_catalog();
    return all;
}

std::size_t edit_distance(std::string_view x, std::string_view y) {
    std::vector<std::size_t> row(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[y.size()];
}

Rational family_q(Family f) { return family_base(f).q(); }

}  // namespace

std::span<const CatalogEntry> catalog_list() { return entries(); }

const CatalogEntry* catalog_find(std::string_view id) {
    for (const auto& e : entries())
        if (e.id == id) return &e;
    return nullptr;
}

std::string catalog_suggest(std::string_view id) {
    const CatalogEntry* best = nullptr;
    std::size_t best_d = 0;
    for (const auto& e : entries()) {
        const std::size_t d = edit_distance(id, e.id);
        if (!best || d < best_d) {
            best = &e;
            best_d = d;
        }
    }
    return best ? best->id : std::string();
}

GridSpec catalog_default_grid(const CatalogEntry& entry) {
    std::vector<VarRange> vars;
    for (const auto& v : entry.free_vars) vars.push_back(v == "k" ? VarRange{v, 0, 6} : VarRange{v, -4, 4});
    return GridSpec(std::move(vars));
}

std::vector<Initials> catalog_default_initials(const CatalogEntry& entry) {
    std::vector<Initials> out{{0, 1}};
    if (!entry.generalized_slot) return out;
    const Sequence c = family_companion(entry.family);
    for (const Initials& i : {Initials{c.g0(), c.g1()}, Initials{2, 1}, Initials{3, -5}}) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Initials& o) { return o.h0 == i.h0 && o.h1 == i.h1; });
        if (!seen) out.push_back(i);
    }
    return out;
}

Sequence catalog_slot_sequence(const CatalogEntry& entry, const std::optional<Initials>& initials) {
    const Sequence base = family_base(entry.family);
    if (!initials) return base;
    return Sequence(base.params(), initials->h0, initials->h1,
                    "H(" + initials->h0.to_string() + "," + initials->h1.to_string() + ")");
}

VerificationReport catalog_run(std::string_view id, const GridSpec& grid, const std::optional<Initials>& initials,
                               SweepOptions options) {
    const CatalogEntry* entry = catalog_find(id);
    if (!entry) throw UsageError("unknown catalog id '" + std::string(id) + "' (did you mean '" + catalog_suggest(id) + "'?)");
    if (initials && !entry->generalized_slot)
        throw UsageError("catalog entry '" + entry->id + "' has no generalized sequence; initials not accepted");

    const VarRange* kr = grid.find("k");
    const std::int64_t max_k = kr ? std::max(std::abs(kr->lo), std::abs(kr->hi)) : 0;
    const std::int64_t w = sweep_window(grid.max_abs(), max_k);
    auto base = std::make_shared<const TermTable>(family_base(entry->family), -w, w);
    auto slot = std::make_shared<const TermTable>(catalog_slot_sequence(*entry, initials), -w, w);
    auto q = family_q(entry->family);

    IdentityChecker checker;
    checker.name = entry->id;
    if (initials) checker.name += " [h0=" + initials->h0.to_string() + ",h1=" + initials->h1.to_string() + "]";
    checker.vars = entry->free_vars;
    checker.evaluate = [entry, base, slot, q](std::span<const std::int64_t> values) {
        const FamilyTerms terms{*base, *slot, q};
        return entry->evaluate(terms, values);
    };
    return run_grid(checker, grid, options);
}

VerificationReport catalog_sweep(const CatalogEntry& entry, SweepOptions options) {
    const GridSpec grid = catalog_default_grid(entry);
    VerificationReport total;
    total.identity = entry.id;
    total.grid = grid.to_string();
    for (const Initials& init : catalog_default_initials(entry)) {
        const auto report = entry.generalized_slot ? catalog_run(entry.id, grid, init, options)
                                                   : catalog_run(entry.id, grid, std::nullopt, options);
        total.merge(report);
    }
    return total;
}

}  // namespace horadam
