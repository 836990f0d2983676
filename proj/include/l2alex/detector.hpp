#pragma once

// Knot detection as a decision ladder over invariant summaries.
//
// The ladder encodes, as documented premises, the uniqueness facts behind
// the decisions: the only genus-zero knot is trivial; the iterated torus
// knots are exactly the volume-zero knots and the trefoil is the only one
// of genus one; a one-cusped hyperbolic manifold of volume below 3 forces a
// single hyperbolic JSJ piece (three-cusp volume bound 3 V_tet and the
// two-cusp bound 3.66 of the Whitehead link); at volume 2.0298... the piece
// is the figure-eight exterior or its sibling, which is excluded by its
// homology Z + Z/5; at volume 2.8281... the census triple m015/m016/m017
// reduces to 5_2 or K12n242 after the Z + Z/7 exclusion of m017, and the
// genus separates those two.  Verdicts never distinguish a knot from its
// mirror image or reverse.

#include <string>
#include <vector>

#include "json.hpp"

#include "l2alex/invariant_expr.hpp"

namespace l2alex {

struct DetectionResult {
    enum class Kind { detected, iterated_torus_class, unknown };

    Kind kind = Kind::unknown;
    /// Detected knot names; the set is closed under mirror and reversion.
    std::vector<std::string> names;
    int genus = -1;               // set for iterated_torus_class
    std::string reason;           // first failing clause when unknown
    std::vector<std::string> clause_trace;
    bool up_to_mirror_reversion = true;

    nlohmann::json to_json() const;
    std::string display() const;
};

DetectionResult detect(const InvariantSummary& s);

struct IteratedTorusCheck {
    bool is_iterated_torus = false;
    std::string certificate;  // which equivalent clause was tested
};
/// volume = 0 and value_at_1 = 1 must agree (to 1e-9); disagreement is an
/// inconsistency error.
IteratedTorusCheck is_iterated_torus(const InvariantSummary& s);

struct FamilyAuditRow {
    int n = 0;
    long long p = 0;
    int genus_J = 0, genus_K = 0;
    double vol_J = 0.0, vol_K = 0.0;
    std::string lambda_J, lambda_K;
    bool genus_equal = false;
    bool volume_equal = false;
    bool invariants_distinct = false;
    std::string detect_K;
    bool detect_ok = false;
    bool pass = false;
};

struct FamilyAuditReport {
    std::vector<FamilyAuditRow> rows;
    bool all_pass = true;

    std::string text_table() const;
    nlohmann::json to_json() const;
};

/// Audits J_n vs K_n for n = 0..n_max: equal genus, equal volume,
/// non-equivalent invariants, and exact detection of the K_n class.
FamilyAuditReport family_audit(int n_max);

} // namespace l2alex
