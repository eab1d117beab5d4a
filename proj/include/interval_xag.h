/* C interface to the interval_xag synthesis library.
 *
 * Functions return an ixag_status; on failure ixag_last_error() describes
 * the problem for the calling thread.  Handles and strings returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function.
 */
#ifndef INTERVAL_XAG_H
#define INTERVAL_XAG_H

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#define IXAG_API __declspec( dllexport )
#else
#define IXAG_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ixag_status
{
  IXAG_OK = 0,
  IXAG_ERR_USAGE = 1,      /* invalid bounds, widths or arguments */
  IXAG_ERR_RESOURCE = 2,   /* width guard exceeded */
  IXAG_ERR_PARSE = 3,      /* malformed circuit text */
  IXAG_ERR_VALIDATION = 4, /* dangling or redefined wires */
  IXAG_ERR_INTERNAL = 5
} ixag_status;

typedef enum ixag_format
{
  IXAG_FORMAT_EXPR = 0,
  IXAG_FORMAT_BRISTOL = 1,
  IXAG_FORMAT_JSON = 2
} ixag_format;

/* opaque handles */
typedef struct ixag_circuit ixag_circuit;
typedef struct ixag_sweep ixag_sweep;

/* one verification result; also the row type of a sweep */
typedef struct ixag_report
{
  uint32_t n;
  uint64_t a;
  uint64_t b;
  uint32_t ja;
  uint32_t jb;
  int equivalent;
  int has_counterexample;
  uint64_t counterexample;
  uint32_t actual;
  uint32_t predicted;
  uint32_t naive;
  uint32_t degree;
  int in_theorem_domain;
} ixag_report;

IXAG_API char const* ixag_last_error( void );
IXAG_API char const* ixag_version( void );
IXAG_API void ixag_string_free( char* s );

/* [a <= x] for an n-bit x */
IXAG_API ixag_status ixag_compare_synth( uint32_t n, uint64_t a, ixag_circuit** out );
/* [a <= x < b], the fused construction */
IXAG_API ixag_status ixag_interval_synth( uint32_t n, uint64_t a, uint64_t b, ixag_circuit** out );
/* [a <= x] ^ [b <= x] with two independent comparators */
IXAG_API ixag_status ixag_naive_interval( uint32_t n, uint64_t a, uint64_t b, ixag_circuit** out );
/* load a Bristol Fashion or JSON netlist */
IXAG_API ixag_status ixag_circuit_parse( char const* text, ixag_format format, ixag_circuit** out );
IXAG_API void ixag_circuit_free( ixag_circuit* c );

IXAG_API ixag_status ixag_circuit_width( ixag_circuit const* c, uint32_t* out );
/* number of AND gates (OR gates count as AND) */
IXAG_API ixag_status ixag_circuit_and_count( ixag_circuit const* c, uint32_t* out );
IXAG_API ixag_status ixag_circuit_eval( ixag_circuit const* c, uint64_t x, int* out );
/* algebraic degree of the computed function */
IXAG_API ixag_status ixag_circuit_degree( ixag_circuit const* c, uint32_t* out );
/* IXAG_FORMAT_EXPR is only available for synthesized circuits */
IXAG_API ixag_status ixag_circuit_render( ixag_circuit const* c, ixag_format format, char** out );

IXAG_API ixag_status ixag_predicted_mc( uint32_t n, uint64_t a, uint64_t b, uint32_t* out );
IXAG_API ixag_status ixag_check( uint32_t n, uint64_t a, uint64_t b, uint32_t max_width, ixag_report* out );

/* sample == 0 selects the default; widths <= 8 are always exhaustive */
IXAG_API ixag_status ixag_sweep_run( uint32_t n, size_t sample, uint64_t seed, int theorem_domain_only, uint32_t max_width, ixag_sweep** out );
IXAG_API size_t ixag_sweep_size( ixag_sweep const* s );
IXAG_API ixag_status ixag_sweep_row( ixag_sweep const* s, size_t index, ixag_report* out );
IXAG_API void ixag_sweep_free( ixag_sweep* s );

#ifdef __cplusplus
}
#endif

#endif /* INTERVAL_XAG_H */
