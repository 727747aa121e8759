/* C interface to the subkmp library. All handles are opaque; every
 * fallible call returns a subkmp_status and stores a message retrievable
 * with subkmp_last_error() on the calling thread. */
#ifndef SUBKMP_H
#define SUBKMP_H

#include <stddef.h>
#include <stdint.h>

#ifndef SUBKMP_API
#define SUBKMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subkmp_status {
  SUBKMP_OK = 0,
  SUBKMP_INFEASIBLE = 1,
  SUBKMP_INPUT_ERROR = 2,
  SUBKMP_BUDGET_EXCEEDED = 3,
  SUBKMP_INVARIANT_VIOLATION = 4
} subkmp_status;

typedef struct subkmp_instance subkmp_instance;
typedef struct subkmp_report subkmp_report;
typedef struct subkmp_gap_report subkmp_gap_report;
typedef struct subkmp_distinguish_report subkmp_distinguish_report;
typedef struct subkmp_property_report subkmp_property_report;

typedef enum subkmp_gap_kind { SUBKMP_GAP_SYMMETRIC = 0, SUBKMP_GAP_MONOTONE = 1 } subkmp_gap_kind;

SUBKMP_API const char* subkmp_version(void);
SUBKMP_API const char* subkmp_last_error(void);

/* Solver registry. */
SUBKMP_API size_t subkmp_solver_count(void);
SUBKMP_API const char* subkmp_solver_name(size_t index);

/* Instances. base_dir resolves relative file references; NULL means ".". */
SUBKMP_API subkmp_status subkmp_instance_parse(const char* text, const char* base_dir, subkmp_instance** out);
SUBKMP_API subkmp_status subkmp_instance_load(const char* path, subkmp_instance** out);
SUBKMP_API void subkmp_instance_free(subkmp_instance* inst);
SUBKMP_API size_t subkmp_instance_n(const subkmp_instance* inst);
SUBKMP_API size_t subkmp_instance_k(const subkmp_instance* inst);
SUBKMP_API uint64_t subkmp_instance_seed(const subkmp_instance* inst);
SUBKMP_API const char* subkmp_instance_solver(const subkmp_instance* inst);
SUBKMP_API const char* subkmp_instance_fingerprint(const subkmp_instance* inst);
/* Overrides the enumeration budget (states) of the instance's solver config. */
SUBKMP_API void subkmp_instance_set_max_states(subkmp_instance* inst, uint64_t max_states);

/* Solving. solver == NULL uses the instance's solver. */
SUBKMP_API subkmp_status subkmp_solve(const subkmp_instance* inst, const char* solver, subkmp_report** out);
SUBKMP_API void subkmp_report_free(subkmp_report* report);
SUBKMP_API const char* subkmp_report_solver(const subkmp_report* report);
SUBKMP_API double subkmp_report_objective(const subkmp_report* report);
/* Exact decimal for half-integer objectives, 12 significant digits otherwise. */
SUBKMP_API const char* subkmp_report_objective_text(const subkmp_report* report);
SUBKMP_API uint64_t subkmp_report_queries(const subkmp_report* report);
SUBKMP_API double subkmp_report_wall_ms(const subkmp_report* report);
SUBKMP_API size_t subkmp_report_block_count(const subkmp_report* report);
/* Copies up to capacity element indices of block i into out; returns the block size. */
SUBKMP_API size_t subkmp_report_block(const subkmp_report* report, size_t i, uint32_t* out, size_t capacity);
SUBKMP_API const char* subkmp_report_blocks_text(const subkmp_report* report);

/* Hardness gap experiment. beta <= 0 selects the asymptotic policy. */
typedef struct subkmp_gap_options {
  subkmp_gap_kind kind;
  uint32_t n;
  int64_t beta;
  uint64_t seed;
  int exhaustive;
  uint64_t max_states;
} subkmp_gap_options;

SUBKMP_API subkmp_status subkmp_gap_run(const subkmp_gap_options* options, subkmp_gap_report** out);
SUBKMP_API void subkmp_gap_report_free(subkmp_gap_report* report);
SUBKMP_API uint32_t subkmp_gap_n(const subkmp_gap_report* report);
SUBKMP_API uint32_t subkmp_gap_k(const subkmp_gap_report* report);
SUBKMP_API int64_t subkmp_gap_beta(const subkmp_gap_report* report);
SUBKMP_API double subkmp_gap_epsilon(const subkmp_gap_report* report);
SUBKMP_API const char* subkmp_gap_r_hex(const subkmp_gap_report* report);
SUBKMP_API int subkmp_gap_exhaustive(const subkmp_gap_report* report);
SUBKMP_API const char* subkmp_gap_value_easy(const subkmp_gap_report* report);
SUBKMP_API const char* subkmp_gap_value_hard(const subkmp_gap_report* report);
SUBKMP_API const char* subkmp_gap_hard_bound(const subkmp_gap_report* report);
SUBKMP_API double subkmp_gap_ratio(const subkmp_gap_report* report);
SUBKMP_API double subkmp_gap_ratio_bound(const subkmp_gap_report* report);
SUBKMP_API uint64_t subkmp_gap_partitions_checked(const subkmp_gap_report* report);
SUBKMP_API const char* subkmp_gap_witness_text(const subkmp_gap_report* report);

/* Indistinguishability experiment. size_m == 0 samples each element with
 * probability 1/2; otherwise uniform sets of size size_m. */
typedef struct subkmp_distinguish_options {
  subkmp_gap_kind kind;
  uint32_t n;
  int64_t beta;
  uint64_t seed;
  uint64_t queries;
  uint32_t size_m;
} subkmp_distinguish_options;

SUBKMP_API subkmp_status subkmp_distinguish_run(const subkmp_distinguish_options* options,
                                               subkmp_distinguish_report** out);
SUBKMP_API void subkmp_distinguish_report_free(subkmp_distinguish_report* report);
SUBKMP_API int64_t subkmp_distinguish_beta(const subkmp_distinguish_report* report);
SUBKMP_API double subkmp_distinguish_epsilon(const subkmp_distinguish_report* report);
SUBKMP_API const char* subkmp_distinguish_r_hex(const subkmp_distinguish_report* report);
SUBKMP_API const char* subkmp_distinguish_distribution(const subkmp_distinguish_report* report);
SUBKMP_API uint64_t subkmp_distinguish_distinguished(const subkmp_distinguish_report* report);
SUBKMP_API double subkmp_distinguish_fraction(const subkmp_distinguish_report* report);
SUBKMP_API uint64_t subkmp_distinguish_equivalence_failures(const subkmp_distinguish_report* report);
SUBKMP_API uint64_t subkmp_distinguish_ledger_count(const subkmp_distinguish_report* report);

/* Property check of a single zoo function given as JSON (must carry "n").
 * trials == 0 selects exhaustive mode. */
typedef enum subkmp_property {
  SUBKMP_PROP_SUBMODULAR = 0,
  SUBKMP_PROP_MONOTONE = 1,
  SUBKMP_PROP_SYMMETRIC = 2,
  SUBKMP_PROP_NONNEGATIVE = 3
} subkmp_property;

SUBKMP_API subkmp_status subkmp_check_function(const char* spec_json, uint64_t trials, uint64_t seed,
                                              subkmp_property_report** out);
SUBKMP_API void subkmp_property_report_free(subkmp_property_report* report);
SUBKMP_API const char* subkmp_property_oracle_name(const subkmp_property_report* report);
SUBKMP_API int subkmp_property_claimed(const subkmp_property_report* report, subkmp_property property);
SUBKMP_API int subkmp_property_holds(const subkmp_property_report* report, subkmp_property property);
/* Empty string when the property holds. */
SUBKMP_API const char* subkmp_property_witness(const subkmp_property_report* report, subkmp_property property);

#ifdef __cplusplus
}
#endif

#endif /* SUBKMP_H */
