#pragma once

/**
 * @file catalog.hpp
 * @brief Named registry of the Fibonacci, Pell and Jacobsthal
 * specializations of the two-sequence identity and its summation theorems.
 *
 * Every entry is stated for a family base sequence G (F, P or J) and, when it
 * has a generalized slot, a sequence H sharing G's recurrence with
 * caller-chosen initial terms. Initials (0,1) make H the base sequence, the
 * family's Lucas-type initials make it L, Q or j.
 *
 * Each entry carries its own identity text in the DSL (see dsl.hpp) with G
 * written as F, P or J and the slot written as H.
 */

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/grid.hpp"
#include "horadam/report.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

enum class Family { fibonacci, pell, jacobsthal };

std::string_view family_name(Family family);
/// F, P or J.
Sequence family_base(Family family);
/// L, Q or j.
Sequence family_companion(Family family);

struct Initials {
    Rational h0;
    Rational h1;
};

/// Terms an entry evaluates against.
struct FamilyTerms {
    const TermTable& base;        // G
    const TermTable& slot;        // H (the base itself for slot-free entries)
    Rational q;                   // recurrence q of the family, the weight base
};

struct CatalogEntry {
    std::string id;
    std::string description;
    Family family = Family::fibonacci;
    std::vector<std::string> free_vars;
    bool generalized_slot = false;
    std::string anchor;
    /// DSL text with the family symbol substituted and the slot named H.
    std::string dsl;
    /// Values arrive in free_vars order.
    std::function<CaseResult(const FamilyTerms&, std::span<const std::int64_t>)> evaluate;
};

/// All entries, sorted by id.
std::span<const CatalogEntry> catalog_list();

const CatalogEntry* catalog_find(std::string_view id);

/// Closest id by edit distance, for "did you mean" messages.
std::string catalog_suggest(std::string_view id);

/// Every free variable in [-4, 4], except k in [0, 6].
GridSpec catalog_default_grid(const CatalogEntry& entry);

/// (0,1), the family's Lucas-type initials, (2,1), (3,-5), deduplicated;
/// a single (0,1) for slot-free entries.
std::vector<Initials> catalog_default_initials(const CatalogEntry& entry);

/// Verifies one entry over a grid of its free variables. `initials` may be
/// given only for entries with a generalized slot; absent means (0,1).
/// Throws UsageError on an unknown id, a grid that does not match the
/// entry's variables, or initials passed to a slot-free entry.
VerificationReport catalog_run(std::string_view id, const GridSpec& grid, const std::optional<Initials>& initials,
                               SweepOptions options = {});

/// Default grid for every default initial pair, merged into one report.
VerificationReport catalog_sweep(const CatalogEntry& entry, SweepOptions options = {});

/// The H sequence an entry is run against.
Sequence catalog_slot_sequence(const CatalogEntry& entry, const std::optional<Initials>& initials);

}  // namespace horadam
