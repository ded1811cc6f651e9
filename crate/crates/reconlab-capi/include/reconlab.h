#ifndef RECONLAB_H
#define RECONLAB_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible C-ABI call.
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  // A required pointer argument was NULL.
  RL_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  RL_STATUS_INVALID_UTF8 = 2,
  // Text could not be parsed as graph6 or structure JSON.
  RL_STATUS_PARSE_ERROR = 3,
  // The two structures have different kinds or shape parameters.
  RL_STATUS_KIND_MISMATCH = 4,
  // The two structures have different base sizes.
  RL_STATUS_SIZE_MISMATCH = 5,
  // A size cap was exceeded (canonical form, enumeration, sweep).
  RL_STATUS_CAP_EXCEEDED = 6,
  // Some other argument was invalid (bad probability, bad colors, …).
  RL_STATUS_INVALID_INPUT = 7,
  // An internal invariant failed; this is a bug, not a usage error.
  RL_STATUS_INTERNAL = 8,
} RlStatus;

// Structure family selector for [`rl_verify_ulam`].
typedef enum RlSweepKind {
  RL_SWEEP_KIND_SIMPLE = 0,
  // `param` is the edge color count.
  RL_SWEEP_KIND_COLORED = 1,
  // `param` is the layer count.
  RL_SWEEP_KIND_MULTIGRAPH = 2,
  // `param` is the hyperedge arity.
  RL_SWEEP_KIND_HYPERGRAPH = 3,
} RlSweepKind;

// Opaque handle to a structure of any kind.
typedef struct RlStructure RlStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one structure from text: graph6 for simple graphs, the JSON
// object format otherwise. On success stores a fresh handle in `out`.
//
// # Safety
// `text` must point to a NUL-terminated string; `out` must be a valid
// pointer.
enum RlStatus rl_structure_parse(const char *text, struct RlStructure **out);

// Builds a simple graph from a flat edge list `[u0, v0, u1, v1, …]`.
//
// # Safety
// `edges` must be valid for reads of `2 * edge_count` u32 values (or NULL
// when `edge_count` is 0); `out` must be a valid pointer.
enum RlStatus rl_structure_from_edges(uint32_t n,
                                      const uint32_t *edges,
                                      size_t edge_count,
                                      struct RlStructure **out);

// Releases a structure handle. NULL is accepted and ignored.
//
// # Safety
// `s` must have been returned by an `rl_structure_*` constructor and not
// yet freed.
void rl_structure_free(struct RlStructure *s);

// Number of vertices; 0 for NULL.
//
// # Safety
// `s` must be a live handle or NULL.
uint32_t rl_structure_vertex_count(const struct RlStructure *s);

// Writes the structure's text form (graph6 or JSON).
//
// # Safety
// `s` must be a live handle; `out` must be a valid pointer.
enum RlStatus rl_structure_to_text(const struct RlStructure *s, char **out);

// Writes the 128-bit canonical-certificate digest as 32 hex characters.
// Equal digests for equal-kind structures mean isomorphic (the library
// confirms full certificate bytes internally).
//
// # Safety
// `s` must be a live handle; `out` must be a valid pointer.
enum RlStatus rl_structure_certificate_hex(const struct RlStructure *s, char **out);

// Writes the order-independent deck digest as 32 hex characters.
//
// # Safety
// `s` must be a live handle; `out` must be a valid pointer.
enum RlStatus rl_structure_deck_hash_hex(const struct RlStructure *s, char **out);

// Sets `*out` to 1 when the decks agree as multisets, else 0.
//
// # Safety
// `a` and `b` must be live handles; `out` must be a valid pointer.
enum RlStatus rl_structures_hypomorphic(const struct RlStructure *a,
                                        const struct RlStructure *b,
                                        int32_t *out);

// Sets `*out` to 1 when the structures are isomorphic, else 0.
//
// # Safety
// `a` and `b` must be live handles; `out` must be a valid pointer.
enum RlStatus rl_structures_isomorphic(const struct RlStructure *a,
                                       const struct RlStructure *b,
                                       int32_t *out);

// Runs the subset-permutation lifting sweep; writes the report JSON.
//
// # Safety
// `report_json` must be a valid pointer.
enum RlStatus rl_verify_theorem1(uint32_t n, char **report_json);

// Runs a hypomorphy sweep over one family; `param` is the color count,
// layer count, or arity (ignored for `Simple`). Writes the report JSON.
//
// # Safety
// `report_json` must be a valid pointer.
enum RlStatus rl_verify_ulam(uint32_t n, enum RlSweepKind kind, uint32_t param, char **report_json);

// Runs the measure-vector sweep; writes the report JSON.
//
// # Safety
// `report_json` must be a valid pointer.
enum RlStatus rl_verify_measure(uint32_t n, char **report_json);

// Runs the symmetric-matrix sweep; `free_diagonal` nonzero lets diagonal
// entries range over the alphabet. Writes the report JSON.
//
// # Safety
// `report_json` must be a valid pointer.
enum RlStatus rl_verify_matrix(uint32_t n,
                               uint32_t alphabet,
                               int32_t free_diagonal,
                               char **report_json);

// Runs the measure-preserving subset-permutation sweep; writes the report
// JSON.
//
// # Safety
// `report_json` must be a valid pointer.
enum RlStatus rl_verify_lemma_l2(uint32_t n, char **report_json);

// Releases a string returned by this library. NULL is accepted.
//
// # Safety
// `s` must have been returned by a function of this library and not yet
// freed.
void rl_string_free(char *s);

// Static description of a status code.
const char *rl_status_message(enum RlStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECONLAB_H */
