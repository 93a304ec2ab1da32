#ifndef ARTINFORGE_H
#define ARTINFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AF_API __declspec(dllexport)
#else
#define AF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum af_status {
  AF_OK = 0,
  AF_ERR_DIMENSION,
  AF_ERR_PARSE,
  AF_ERR_UNDEFINED_LEADING_TERM,
  AF_ERR_ZERO_INPUT,
  AF_ERR_RESOURCE_LIMIT,
  AF_ERR_NOT_ARTINIAN,
  AF_ERR_CONTRACT,
  AF_ERR_EQUIVARIANCE,
  AF_ERR_RANGE,
  AF_ERR_PARITY,
  AF_ERR_IMPROPER_IDEAL,
  AF_ERR_ORDER_MISMATCH,
  AF_ERR_INVALID_ARGUMENT,
  AF_ERR_NULL_POINTER,
  AF_ERR_INTERNAL
} af_status;

typedef enum af_format { AF_FORMAT_TEXT = 0, AF_FORMAT_JSON = 1 } af_format;

typedef enum af_report_status { AF_REPORT_PASS = 0, AF_REPORT_FAIL = 1, AF_REPORT_SKIPPED = 2 } af_report_status;

typedef struct af_ideal af_ideal;
typedef struct af_groebner af_groebner;
typedef struct af_quotient af_quotient;

/* Message of the last failed call on this thread; empty after success. */
AF_API const char* af_last_error(void);
AF_API const char* af_status_name(af_status status);

/* Every char** result is heap-allocated and released with af_string_free. */
AF_API void af_string_free(char* s);

/* Pair cap used when 0 is passed to a pair_cap argument. */
AF_API uint64_t af_default_pair_cap(void);

/* which: "I", "J" (initial ideal of I), "J_expected" (predicted monomial
   generators), "K", "L", "Q". Unknown names give AF_ERR_PARSE. */
AF_API af_status af_ideal_build(const char* which, int n, af_ideal** out);
/* Comma-separated generators in x1..x{nx}; extra_names is a comma-separated
   list of further variable names (may be NULL or empty). */
AF_API af_status af_ideal_parse(const char* generators, int nx, const char* extra_names,
                                af_ideal** out);
AF_API size_t af_ideal_nvars(const af_ideal* ideal);
AF_API af_status af_ideal_to_string(const af_ideal* ideal, char** out);
AF_API void af_ideal_free(af_ideal* ideal);

/* order: "grevlex", "lex" or "deglex"; anything else gives AF_ERR_PARSE. */
AF_API af_status af_groebner_compute(const af_ideal* ideal, const char* order, uint64_t pair_cap,
                                     af_groebner** out);
AF_API size_t af_groebner_size(const af_groebner* basis);
/* One element per line, ascending by leading monomial. */
AF_API af_status af_groebner_to_string(const af_groebner* basis, char** out);
AF_API af_status af_groebner_leading_monomials(const af_groebner* basis, char** out);
AF_API af_status af_groebner_contains(const af_groebner* basis, const char* polynomial, int* out);
AF_API void af_groebner_free(af_groebner* basis);

AF_API af_status af_quotient_new(const af_groebner* basis, af_quotient** out);
AF_API uint64_t af_quotient_dimension(const af_quotient* q);
/* Space-separated coefficients, index = degree. */
AF_API af_status af_quotient_hilbert(const af_quotient* q, char** out);
/* Standard monomials, one degree per line. */
AF_API af_status af_quotient_standard_monomials(const af_quotient* q, char** out);
/* Socle dimension plus one basis element per line in basis_text (may be NULL). */
AF_API af_status af_quotient_socle(const af_quotient* q, size_t* dimension, int* gorenstein,
                                   char** basis_text);
AF_API void af_quotient_free(af_quotient* q);

/* kind: "trivial", "subset" (uses k), "powerset", "half-powerset", "points". */
AF_API af_status af_character(const char* kind, int n, int k, af_format format, char** out);

AF_API af_status af_challenge(int n, uint64_t pair_cap, af_format format, char** out);

/* Points of the zero set and the result of the exact evaluation check. */
AF_API af_status af_points(int n, af_format format, char** out, int* all_vanish);

/* Row n of the symmetrised triangle plus the row-sum, identity and shape checks. */
AF_API af_status af_triangle(int n, af_format format, char** out, int* all_pass);

typedef struct af_verify_options {
  uint64_t pair_cap; /* 0 = default */
  int allow_large_n;
  int timing;
} af_verify_options;

AF_API size_t af_claim_count(void);
AF_API const char* af_claim_id(size_t index);
AF_API int af_claim_min_n(size_t index);
AF_API const char* af_claim_summary(size_t index);

/* Runs one claim; report_out receives the report in the requested format. */
AF_API af_status af_verify(const char* claim, int n, const af_verify_options* options,
                           af_format format, char** report_out, af_report_status* status_out);

#ifdef __cplusplus
}
#endif

#endif
