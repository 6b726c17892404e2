#ifndef PALSUM_H
#define PALSUM_H

/* C surface of the palindrome-sum engine.  Handles are opaque; every
 * function that can fail returns a ps_status and leaves a message readable
 * through ps_last_error() until the next call on the same thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
    PS_OK = 0,
    PS_CONTRACT = 1,  /* caller broke a precondition (bad name, bad value) */
    PS_RESOURCE = 2,  /* a construction exceeded its state budget */
    PS_PARSE = 3,     /* malformed machine text */
    PS_INTERNAL = 4,
} ps_status;

const char* ps_last_error(void);

/* Strings and arrays handed out through out-parameters are heap copies. */
void ps_string_free(char* s);
void ps_u64_free(uint64_t* p);

/* ---- machine catalog ---- */

size_t ps_catalog_count(void);
/* NULL when the index is out of range. */
const char* ps_catalog_name(size_t i);
const char* ps_catalog_summary(size_t i);

/* ---- machines ---- */

typedef struct ps_machine ps_machine;

/* budget 0 means the default (1e6 states) for the composed machines. */
ps_status ps_machine_build(const char* name, uint64_t budget, ps_machine** out);
ps_status ps_machine_parse(const char* text, ps_machine** out);
void ps_machine_free(ps_machine* m);

/* 1 for tagged-word machines (calls/returns), 0 for folded-digit machines. */
int ps_machine_is_tagged(const ps_machine* m);
unsigned ps_machine_base(const ps_machine* m);
uint64_t ps_machine_states(const ps_machine* m);

/* verdict: 1 accept, 0 reject, -1 when the value has no encoding of the
 * machine's kind. */
ps_status ps_machine_accepts(const ps_machine* m, uint64_t value, int* verdict);

/* script_form 0: native sections; 1: automata-script declaration. */
ps_status ps_machine_text(const ps_machine* m, const char* name, int script_form,
                          char** out);

/* ---- theorem proofs ---- */

/* drop_case may be NULL; remove_word may be NULL; budget 0 keeps the
 * theorem's default.  holds reports the verdict, report carries the
 * key=value record. */
ps_status ps_prove(const char* theorem_id, const char* drop_case,
                   const uint64_t* remove_word, uint64_t budget, int* holds,
                   char** report);

size_t ps_theorem_count(void);
const char* ps_theorem_id(size_t i);

/* ---- brute-force oracle ---- */

/* flavor: palindrome | genpalindrome | antipalindrome | genantipalindrome. */
ps_status ps_oracle_decide(const char* flavor, unsigned base, unsigned max_summands,
                           uint64_t target, int* representable, char** witness);
/* found: 1 when some count <= cap works, else 0. */
ps_status ps_oracle_min_summands(const char* flavor, unsigned base, unsigned cap,
                                 uint64_t target, int* found, unsigned* count);
ps_status ps_oracle_exceptions(const char* flavor, unsigned base, unsigned max_summands,
                               uint64_t limit, uint64_t** values, size_t* count);
/* Minimum of count(n)/n over 1..limit, as the exact pair (argmin_count, argmin_n). */
ps_status ps_density(const char* flavor, unsigned base, unsigned max_summands,
                     uint64_t limit, uint64_t* argmin_n, uint64_t* argmin_count);

#ifdef __cplusplus
}
#endif

#endif /* PALSUM_H */
