/*
 * C interface to libazseries.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through `char**` out-parameters
 * are heap allocated and must be released with az_string_free.
 *
 * Every fallible call returns an az_status. On anything other than AZ_OK the
 * out-parameters are left untouched and az_last_error() describes the
 * failure. The error text is thread-local and valid until the next call made
 * from the same thread.
 */
#ifndef AZ_AZ_H
#define AZ_AZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(AZ_BUILDING_LIBRARY)
#define AZ_API __attribute__((visibility("default")))
#else
#define AZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum az_status {
  AZ_OK = 0,
  AZ_ERR_ARGUMENT = 1,      /* precondition violated or malformed input */
  AZ_ERR_FRONTIER_CAP = 2,  /* residue-root search exceeded its prefix cap */
  AZ_ERR_INTERNAL = 3,      /* two independent computations disagreed */
  AZ_ERR_NO_MEMORY = 4
} az_status;

typedef enum az_check {
  AZ_CHECK_THEOREM1 = 0,
  AZ_CHECK_COROLLARY = 1,
  AZ_CHECK_EQ1 = 2,
  AZ_CHECK_OBSERVATION2 = 3
} az_check;

typedef enum az_series_format {
  AZ_FORMAT_TEXT = 0,  /* one decimal coefficient per line */
  AZ_FORMAT_LIST = 1   /* "[c0, c1, ..., cN]" */
} az_series_format;

typedef struct az_series az_series;
typedef struct az_report az_report;

AZ_API const char* az_last_error(void);
AZ_API const char* az_version(void);
AZ_API void az_string_free(char* s);

/* Decimal string of A_n. */
AZ_API az_status az_coefficient(uint32_t n, char** out);

/* ---- series ---- */

/* w_0 truncated to `order`; `workers` = 0 uses every core. */
AZ_API az_status az_series_w0(uint32_t order, unsigned workers, az_series** out);
/* Parses the text form, the list form, or a bare comma-separated list. */
AZ_API az_status az_series_parse(const char* text, az_series** out);
/* Copy truncated or zero-padded to `order`. */
AZ_API az_status az_series_with_order(const az_series* s, size_t order, az_series** out);
AZ_API void az_series_free(az_series* s);
AZ_API size_t az_series_order(const az_series* s);
AZ_API az_status az_series_coefficient(const az_series* s, size_t index, char** out);
AZ_API az_status az_series_format_as(const az_series* s, az_series_format format, char** out);

/*
 * n-th root with first-failure reporting. On AZ_OK, *integral is 1 and
 * *root receives the root, or *integral is 0 and *failure_index /
 * *failure_remainder describe the first index where n does not divide
 * f_k - T_k. Requires constant coefficient 1 and n >= 2.
 */
AZ_API az_status az_series_nth_root(const az_series* f, uint64_t n, int* integral, az_series** root,
                                    size_t* failure_index, char** failure_remainder);

/* ---- modular P_n test ---- */

AZ_API az_status az_mu(uint64_t n, uint64_t* out);

/*
 * Reduces f modulo `modulus` (0 selects mu(n)) and searches for an n-th root
 * modulo that modulus. *member receives 1 or 0. `frontier_cap` = 0 selects
 * the default cap of 4096 prefixes.
 */
AZ_API az_status az_pn_check(const az_series* f, uint64_t n, uint64_t modulus, size_t frontier_cap,
                             int* member, uint64_t* modulus_used);

/* ---- verification ---- */

/* `limit` is n_max, m_max or the truncation order depending on the check. */
AZ_API az_status az_verify(az_check check, uint32_t limit, unsigned workers, az_report** out);
AZ_API void az_report_free(az_report* r);
AZ_API int az_report_passed(const az_report* r);
/* JSON object; with include_timing = 0 elapsed_ms is written as 0. */
AZ_API az_status az_report_json(const az_report* r, int include_timing, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AZ_AZ_H */
