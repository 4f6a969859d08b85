#pragma once

#include "bifib/grammar.hpp"
#include "bifib/multipoly.hpp"
#include "bifib/sequences.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bifib {

/**
 * The identity catalog. Symbolic entries are exact polynomial equalities
 * checked per index n (and power m for LUCAS_POWER); numeric entries sweep
 * a rational grid with float tolerances.
 */
enum class IdentityId {
    // symbolic
    SIMPSON_F,
    DOUBLE_STEP,
    TRACE_LUCAS,
    FL_PRODUCT,
    H_CONVERT,
    H_NEG,
    SIMPSON_H,
    GOULD_SUM,
    INVERSION_GAMMA,
    SIGN_FLIP,
    NORMALIZE_SQRT_F,
    INVERSION_GAMMA_L,
    NORMALIZE_SQRT_L,
    PARITY_F,
    PARITY_L,
    SCALE_F,
    SCALE_L,
    NORMALIZE_X,
    COMPLEX_REP_Y1,
    COMPLEX_REP,
    SUM_H,
    SUM_F,
    SUM_L,
    SUM_F_EVEN,
    SUM_L_EVEN,
    LUCAS_POWER,
    BINOM_F,
    BINOM_L,
    LUCAS_SQ,
    L2N_SPLIT,
    DET_B2AN,
    LUCAS_4GAP,
    // numeric
    QFORM_BOUNDS,
    SCHUR_F,
    SCHUR_L,
    EIGVEC_A,
    EIGVAL_BAN,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    bool symbolic;
    long long n_min;       // smallest valid index (symbolic entries)
    bool uses_params;      // swept over sequence presets by run_suite
    bool uses_m;           // LUCAS_POWER only
};

/// Catalog in fixed order; exhaustive over the identity enumeration.
const std::vector<IdentityInfo>& catalog();
const IdentityInfo& identity_info(IdentityId id);
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// A single violation: the index / grid point and both rendered sides.
struct CheckFailure {
    long long n = 0;
    std::string lhs;
    std::string rhs;
    std::string point;  // empty for symbolic checks
};

/**
 * Outcome of one identity check. Symbolic checks cover a single n (and m);
 * numeric checks cover the whole sweep. `failures` are hard; `findings`
 * are survey observations that do not fail the check (QFORM_BOUNDS off the
 * y = 1 slice).
 */
struct IdentityReport {
    IdentityId id{};
    long long n = 0;
    std::optional<long long> m;
    std::optional<std::string> params_label;
    bool pass = true;
    std::string lhs;
    std::string rhs;
    std::string note;
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> findings;
    std::chrono::duration<double> elapsed{0.0};
};

/// Preset initial conditions the parameterized identities are swept over.
struct ParamPreset {
    std::string label;
    SeqParams params;
};
const std::vector<ParamPreset>& param_presets();

/**
 * Rational evaluation grid for the numeric checks. Points with y == 0 or
 * x^2 + 4y == 0 are never evaluated; checks that need real roots also skip
 * x^2 + 4y < 0. Tolerance is tol_abs + tol_rel * scale.
 */
struct SweepConfig {
    std::vector<Rat> xs;
    std::vector<Rat> ys;
    std::vector<Rat> zs;
    long long n_max = 12;
    double tol_rel = 1e-9;
    double tol_abs = 1e-12;

    static SweepConfig defaults();
};

/// Exact equality check of one symbolic identity instance.
/// Throws DomainError outside the identity's n/m domain or for numeric ids.
IdentityReport check_symbolic(IdentityId id, long long n,
                              const SeqParams* params = nullptr,
                              std::optional<long long> m = std::nullopt,
                              const std::string& params_label = {});

/// Grid sweep of one numeric identity. Throws EmptyGrid when no grid point
/// survives the exclusions.
IdentityReport check_numeric(IdentityId id, const SweepConfig& cfg);

/// Runs the selected identities: every symbolic entry for all valid
/// n <= n_max (m <= 6 for LUCAS_POWER, parameterized entries over the
/// presets), every numeric entry over cfg. Reports come back in catalog
/// order, then preset, then n, then m. Failures are data, not errors.
std::vector<IdentityReport> run_suite(const std::vector<IdentityId>& ids, long long n_max,
                                      const SweepConfig& cfg);

/// JSON array of {id, n, status, lhs, rhs, point?, ...} objects.
std::string reports_to_json(const std::vector<IdentityReport>& reports);

}  // namespace bifib
