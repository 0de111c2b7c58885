#ifndef WINSET_H
#define WINSET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum WinsetStatus {
  WINSET_STATUS_OK = 0,
  WINSET_STATUS_NULL_POINTER = 1,
  WINSET_STATUS_INVALID_UTF8 = 2,
  WINSET_STATUS_PARSE = 3,
  WINSET_STATUS_INVALID_ARGUMENT = 4,
  /**
   * A state, game-state or arithmetic limit was exceeded.
   */
  WINSET_STATUS_RESOURCE_LIMIT = 5,
  WINSET_STATUS_INTERNAL = 6,
} WinsetStatus;

/**
 * Opaque binary DFA.
 */
typedef struct WinsetDfa WinsetDfa;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or the empty string.
 * Valid until the next library call on the same thread.
 */
const char *winset_last_error_message(void);

/**
 * Parses a DFA in the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum WinsetStatus winset_dfa_parse(const char *text, struct WinsetDfa **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `dfa` must come from this library and not be used afterwards.
 */
void winset_dfa_free(struct WinsetDfa *dfa);

/**
 * Writes the text form of `dfa`; free it with [`winset_string_free`].
 *
 * # Safety
 * `dfa` must be a live handle and `out` writable.
 */
enum WinsetStatus winset_dfa_to_text(const struct WinsetDfa *dfa, char **out);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void winset_string_free(char *s);

/**
 * # Safety
 * `dfa` must be a live handle and `out` writable.
 */
enum WinsetStatus winset_dfa_state_count(const struct WinsetDfa *dfa, size_t *out);

/**
 * Membership of `word`, written with `0`/`1` or `A`/`B` (symbol 0 and 1).
 *
 * # Safety
 * `dfa` must be a live handle, `word` NUL-terminated and `out` writable.
 */
enum WinsetStatus winset_dfa_accepts(const struct WinsetDfa *dfa, const char *word, bool *out);

/**
 * Minimal winning-set DFA of `dfa` (turn alphabet, `A` as symbol 0).
 * `max_game_states` caps the exploration; 0 selects the library default.
 *
 * # Safety
 * `dfa` must be a live handle and `out` writable.
 */
enum WinsetStatus winset_winning_dfa(const struct WinsetDfa *dfa,
                                     size_t max_game_states,
                                     struct WinsetDfa **out);

/**
 * # Safety
 * `dfa` must be a live handle and `out` writable.
 */
enum WinsetStatus winset_dfa_minimize(const struct WinsetDfa *dfa, struct WinsetDfa **out);

/**
 * Language equivalence.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum WinsetStatus winset_dfa_equivalent(const struct WinsetDfa *a,
                                        const struct WinsetDfa *b,
                                        bool *out);

/**
 * DFA of the words with exactly `n` ones.
 *
 * # Safety
 * `out` must be writable.
 */
enum WinsetStatus winset_exact_k_dfa(size_t n, struct WinsetDfa **out);

/**
 * Chain automaton with an `m`-state tail and a `p`-state cycle.
 *
 * # Safety
 * `finals` must point to `finals_len` readable values (or be null when
 * `finals_len` is 0) and `out` must be writable.
 */
enum WinsetStatus winset_chain_dfa(size_t m,
                                   size_t p,
                                   const uint32_t *finals,
                                   size_t finals_len,
                                   struct WinsetDfa **out);

/**
 * Dyck DFA truncated at balance `max_balance`.
 *
 * # Safety
 * `out` must be writable.
 */
enum WinsetStatus winset_dyck_dfa(size_t max_balance, struct WinsetDfa **out);

/**
 * Whether Alice wins turn order `turns` (over `A`/`B`) for the target set
 * given as space-separated binary words of equal length.
 *
 * # Safety
 * `targets` and `turns` must be NUL-terminated and `out` writable.
 */
enum WinsetStatus winset_alice_wins(const char *targets, const char *turns, bool *out);

/**
 * Number of antichains of subsets of an `n`-set, `n ≤ 6`.
 *
 * # Safety
 * `out` must be writable.
 */
enum WinsetStatus winset_dedekind(size_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WINSET_H */
