#pragma once

#include "cylkit/lattice.hpp"
#include "cylkit/laurent.hpp"
#include "cylkit/products.hpp"
#include "cylkit/recur.hpp"
#include "cylkit/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cylkit {

// ---- sum sides ----

// sum q^{n^2 + eps n} / (q;q)_n
TruncatedSeries sum_rr(int eps, const Window& w);
// sum q^{n1^2 + n2^2 - n1 n2 + n1 + n2} / (q;q)_{n1} [2 n1, n2]_q
TruncatedSeries sum_cw_width7(const Window& w);
// sum (-1)^n q^{4n^2} (q^2,-q^4;q^4)_n / (q^4;q^4)_{2n} (1 - z q^{4n+1}/(1 + q^{4n+2})) z^{2n}
TruncatedSeries sum_thm12(const Window& w);

// The four width-six symmetric profiles alpha=(1,1,1), beta=(1,1,-1), gamma=(1,-1,1), sigma=(-1,1,1).
enum class WidthSixCase { A, B, C, G };
Profile width_six_profile(WidthSixCase c);
std::string_view width_six_name(WidthSixCase c);

// The displayed closed forms for h_beta and h_alpha carry sign/binomial slips; `as_printed`
// reproduces them verbatim, `corrected` is the form that satisfies the recurrences.
enum class FormVariant { corrected, as_printed };

// Double sum over n, m of the width-six kernel for the given case.
TruncatedSeries sum_thm13(WidthSixCase c, const Window& w, FormVariant v = FormVariant::corrected);
ProductSpec product_thm13(WidthSixCase c);

// Four sums with kernel (-q;q^2)_n / (q^2;q^2)_n (case 4: (-q^-1;q^2)_n), cases 1..4.
TruncatedSeries sum_gollnitz(int c, const Window& w);
ProductSpec product_gollnitz(int c);

// Bivariate closed forms for the five refined Schmidt classes, cases 1..5.
TruncatedSeries sum_schmidt(int c, const Window& w);

// ---- closed-form coefficient sequences ----

// h_delta(n) for the width-four symmetric system (delta of width two), exact below abs_limit.
ShiftedSeries h_width4(const Profile& delta, long n, std::int64_t abs_limit);
// Lowest exponent that can occur in h(n) for the width-six case.
std::int64_t h_width6_floor(WidthSixCase c, long n, FormVariant v = FormVariant::corrected);
// h(n) for the width-six symmetric system, exact below abs_limit.
ShiftedSeries h_width6(WidthSixCase c, long n, std::int64_t abs_limit, FormVariant v = FormVariant::corrected);
// The polynomial multiplying the sigma kernel, in its two displayed forms.
LaurentPoly width6_sigma_factor(long n, long m, bool expanded);

// Uncoupled recurrences as displayed, in offsets 0..order. The width-four reverse profile
// has a sign slip; `corrected` flips it.
CoefficientRelation width4_recurrence(const Profile& delta, FormVariant v = FormVariant::corrected);
CoefficientRelation width6_recurrence(WidthSixCase c);

// sum (-1)^n q^{2n^2+n} (q;q^2)_{n+1} (-q^2;q^2)_n / (q^2;q^2)_{2n+1}
TruncatedSeries sum_signed_distinct(const Window& w);

// Bivariate products H_delta(z) / (zq;q)_inf for the width-four symmetric profiles.
ProductSpec scp_width4_product(const Profile& delta);

// ---- verification ----

struct Comparison {
    std::string label;
    std::string lhs_source;  // closed form / product / enumeration / solver / count
    std::string rhs_source;
    Window window;
    bool equal = false;
    bool report_only = false;
    std::optional<Mismatch> first_mismatch;
    std::vector<Mismatch> differences;  // per-coefficient detail (capped) for report-only cases
    long difference_count = 0;
    std::string note;
};

struct CaseReport {
    std::string label;
    std::string title;
    std::vector<Comparison> comparisons;
    // Report-only comparisons never fail a case.
    bool ok() const;
    int asserted() const;
    int asserted_equal() const;
    std::int64_t max_q() const;
};

Comparison compare(std::string label, std::string lhs_source, const TruncatedSeries& lhs, std::string rhs_source,
                   const TruncatedSeries& rhs, bool report_only = false);

struct CaseInfo {
    std::string label;
    std::vector<std::string> aliases;
    std::string title;
};

const std::vector<CaseInfo>& registered_cases();
// Resolves a label or alias (with optional sub-selector after '/').
std::optional<std::string> resolve_case(const std::string& label);

struct VerifyOptions {
    std::optional<std::int64_t> N;
    std::optional<int> D;
};

// Runs a registered case; throws Error for an unknown label.
CaseReport verify_case(const std::string& label, const VerifyOptions& opt = {});

std::string summary_line(const CaseReport& r);
std::string to_text(const CaseReport& r);

} // namespace cylkit
