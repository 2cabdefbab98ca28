#pragma once

#include "cylkit/lattice.hpp"
#include "cylkit/products.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cylkit {

// ---- weight fitting ----

struct FitProblem {
    Kind kind = Kind::CP;  // CP or DSPP
    Profile profile;
    // CP: the single multiset W; DSPP: W_1 then W_2.
    std::vector<WMultiset> target;
    bool integral = false;
    // Free parameters left by the matching are tried over 0..max_free (default: the largest modulus).
    std::optional<long> max_free;
};

struct FitSolution {
    WeightVector weights;
    bool forward_check = false;
};

struct FitResult {
    std::vector<FitSolution> solutions;  // sorted, without duplicates
    std::optional<std::string> infeasible;  // set when the target shape cannot match the profile
    long assignments = 0;                   // complete matchings examined
};

// Symbolic W-entries for the profile: coefficient rows over the weights (last column constant).
std::vector<std::vector<std::vector<Rational>>> symbolic_entries(Kind kind, const Profile& p);

FitResult fit_weights(const FitProblem& problem);

// ---- profile representations ----

// Cyclic gap form: gaps[i] counts the +1 entries after the i-th -1 up to the next -1 (the last
// gap wraps around); offset is the position of the first -1, or the width when there is none.
struct CwComposition {
    std::vector<int> gaps;
    int offset = 0;

    int rank() const { return static_cast<int>(gaps.size()); }
    int width() const;
    friend bool operator==(const CwComposition&, const CwComposition&) = default;
};

CwComposition to_composition(const Profile& p);
Profile from_composition(const CwComposition& c);
std::string to_string(const CwComposition& c);
// "[g1,g2,...]@offset"
CwComposition parse_composition(std::string_view text);

// ---- equivalence search ----

struct EquivalenceSearch {
    std::vector<Kind> kinds{Kind::CP, Kind::DSPP};
    int max_width = 3;
    int max_weight = 3;
    std::int64_t N = 12;
    // Enumeration re-check order for group members (0 disables).
    std::int64_t verify_order = 8;
};

struct EquivalenceMember {
    Kind kind;
    Profile profile;
    WeightVector weights;
    std::string product;
    std::optional<bool> enumeration_agrees;  // empty when enumeration could not run
};

struct EquivalenceGroup {
    std::vector<EquivalenceMember> members;
    std::vector<BigInt> coefficients;  // the common series within the window
};

// Groups of at least two parameter tuples whose products agree within the window.
std::vector<EquivalenceGroup> discover_equivalences(const EquivalenceSearch& s);

} // namespace cylkit
