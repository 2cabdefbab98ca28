#pragma once

#include "cylkit/series.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cylkit {

class Partition {
public:
    Partition() = default;
    // Zero parts are dropped; throws unless the remaining parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 1-based, zero beyond the length.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    long size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    // Largest part plus length minus one; 0 for the empty partition.
    int largest_hook() const { return parts_.empty() ? 0 : largest() + length() - 1; }
    bool is_distinct() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

struct Profile {
    std::vector<int> delta;

    Profile() = default;
    explicit Profile(std::vector<int> d);

    int width() const { return static_cast<int>(delta.size()); }
    // 1-based entry delta_j.
    int at(int j) const { return delta.at(static_cast<std::size_t>(j - 1)); }
    int rank() const;
    // -rev(delta)
    Profile negated_reverse() const;
    bool is_constant() const;

    friend auto operator<=>(const Profile&, const Profile&) = default;
    friend bool operator==(const Profile&, const Profile&) = default;
};

std::string to_string(const Profile& p);
Profile parse_profile(std::string_view text);
// Every profile of the given width in lexicographic order (-1 before +1).
std::vector<Profile> all_profiles(int width);

struct WeightVector {
    std::vector<Rational> a;

    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> w);
    static WeightVector standard(int length);
    // (1, 2, ..., 2, 1) of the given length (>= 2).
    static WeightVector symmetric(int length);
    static WeightVector of(std::initializer_list<long> w);

    int size() const { return static_cast<int>(a.size()); }
    // A_k = a_0 + ... + a_{k-1}
    Rational partial(int k) const;
    Rational total() const { return partial(size()); }
    bool all_positive_integers() const;
    bool is_reversal_symmetric() const;
    int grid_scale() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

std::string to_string(const WeightVector& w);
WeightVector parse_weights(std::string_view text);

enum class Kind { CP, SCP, DSPP, DCP };

std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);
// Number of weights a given kind expects for a profile of width h.
int weight_count(Kind k, int width);
bool wraps(Kind k);

// lam >= mu in the interlacing order: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
// The strict variant requires strictness only between positive entries.
bool interlaces(const Partition& lam, const Partition& mu, bool strict = false);

struct GridPartition {
    Kind kind = Kind::CP;
    Profile profile;
    WeightVector weights;
    std::vector<Partition> diagonals;  // lambda^0 .. lambda^h

    long size() const;
    Rational weighted_size() const;
    int max_part() const;
    // Empty when valid; otherwise a description of the first violated constraint.
    std::optional<std::string> violation() const;
    bool valid() const { return !violation().has_value(); }

    friend bool operator==(const GridPartition&, const GridPartition&) = default;
};

// Canonical encoding used for ordering and duplicate detection.
std::string canonical_key(const GridPartition& g);

struct EnumCaps {
    std::optional<Rational> max_weighted_size;
    std::optional<int> max_part;
    std::optional<int> max_rows;
};

struct ObjectStats {
    std::int64_t weighted_grid;  // weighted size on the grid of the weights
    int max_part;
};

using ObjectVisitor = std::function<void(const std::vector<std::vector<int>>& diagonals, const ObjectStats& stats)>;

// Streams every object (diagonals lambda^0..lambda^h as raw part lists) in depth-first order.
void for_each_object(Kind kind, const Profile& profile, const WeightVector& weights, const EnumCaps& caps,
                     int grid_scale, const ObjectVisitor& visit);

// All objects sorted by (weighted size, canonical key).
std::vector<GridPartition> enumerate(Kind kind, const Profile& profile, const WeightVector& weights, const EnumCaps& caps);

// Sum of z^max q^weighted over all objects inside the window; max part is capped by the z-window.
TruncatedSeries genfun_by_enumeration(Kind kind, const Profile& profile, const WeightVector& weights, const Window& w,
                                      std::optional<int> max_rows = std::nullopt);

class Diamond {
public:
    Diamond() = default;
    explicit Diamond(std::vector<int> entries);
    const std::vector<int>& entries() const { return entries_; }
    // 1-based, zero beyond the stored entries.
    int entry(std::size_t i) const { return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0; }
    // lambda_1 + lambda_4 + lambda_7 + ...
    long weight() const;
    bool valid() const;

private:
    std::vector<int> entries_;
};

enum class SchmidtClass { distinct, unrestricted, diamond };
enum class Parity { odd_indexed, even_indexed };

// Sum over the class of z^{lambda_1} q^{selected parts}; diamonds always use lambda_1 + lambda_4 + ...
TruncatedSeries schmidt_genfun(SchmidtClass cls, Parity parity, const Window& w);

long count_by_hook(int n, int m);
long count_distinct_by_altsum(int n, int m);
// Partitions of n into parts > 1 with largest hook m.
long count_by_hook_parts_above_one(int n, int m);
// Distinct partitions with largest part m and lambda_1 + lambda_2 + lambda_4 + lambda_6 + ... = n.
long count_distinct_by_first_plus_even(int n, int m);

// Sum over distinct partitions of (-1)^{#odd parts} q^{|lambda|}.
TruncatedSeries weighted_distinct_signed_genfun(const Window& w);

} // namespace cylkit
