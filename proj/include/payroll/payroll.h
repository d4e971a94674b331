/*
 * C interface to the payroll core.
 *
 * Objects are opaque handles. Every call returns a payroll_status; on
 * anything other than PAYROLL_OK, payroll_last_error() describes the failure
 * for the calling thread until its next call into the library. Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with payroll_free().
 *
 * Rows travel as UTF-8 JSON objects whose field names are the persistence
 * field names (gol_id, nama_gol, gapok, nii, ...). Money is whole rupiah.
 */
#ifndef PAYROLL_PAYROLL_H
#define PAYROLL_PAYROLL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef PAYROLL_BUILDING
#    define PAYROLL_API __declspec(dllexport)
#  else
#    define PAYROLL_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define PAYROLL_API __attribute__((visibility("default")))
#else
#  define PAYROLL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum payroll_status {
    PAYROLL_OK = 0,
    PAYROLL_E_VALIDATION = 1,
    PAYROLL_E_NOT_FOUND = 2,
    PAYROLL_E_CONFLICT = 3,
    PAYROLL_E_REFERENTIAL = 4,
    PAYROLL_E_IO = 5,
    PAYROLL_E_USAGE = 6,
    PAYROLL_E_INTERNAL = 7
} payroll_status;

/* payroll_open flags */
#define PAYROLL_OPEN_CREATE 0x1u       /* start empty when the document is missing */
#define PAYROLL_OPEN_LOCK 0x2u         /* hold an exclusive lock on the document */
#define PAYROLL_OPEN_PAPER_COMPAT 0x4u /* net salary displayed as gross (legacy form behaviour) */

typedef enum payroll_format { PAYROLL_FORMAT_TEXT = 0, PAYROLL_FORMAT_CSV = 1 } payroll_format;

typedef struct payroll_db payroll_db;
typedef struct payroll_server payroll_server;

PAYROLL_API const char* payroll_version(void);
PAYROLL_API const char* payroll_last_error(void);
/* Structured error details (blocking keys, import diagnostics) as a JSON array. */
PAYROLL_API const char* payroll_last_error_details(void);
PAYROLL_API const char* payroll_status_name(payroll_status status);
PAYROLL_API void payroll_free(char* p);

/* Money text helpers: "Rp1.100.000" <-> 1100000. */
PAYROLL_API payroll_status payroll_parse_money(const char* text, int64_t* out_rupiah);
PAYROLL_API payroll_status payroll_format_money(int64_t rupiah, char** out_text);
PAYROLL_API payroll_status payroll_canonical_periode(const char* text, char** out_periode);

/* Writes an empty store document. */
PAYROLL_API payroll_status payroll_init(const char* path, int force);

/* path may be NULL for a purely in-memory store. */
PAYROLL_API payroll_status payroll_open(const char* path, unsigned flags, payroll_db** out_db);
PAYROLL_API void payroll_close(payroll_db* db);

PAYROLL_API payroll_status payroll_seed_reference(payroll_db* db, int force);

/* table: golongan | jfa | jstr | jkhs | pendidikan | dosen | gaji.
   key: decimal id, or NII for dosen. periode (list of gaji) may be NULL. */
PAYROLL_API payroll_status payroll_list(payroll_db* db, const char* table, const char* periode, char** out_json);
PAYROLL_API payroll_status payroll_get(payroll_db* db, const char* table, const char* key, char** out_json);
PAYROLL_API payroll_status payroll_create(payroll_db* db, const char* table, const char* row_json, char** out_json);
PAYROLL_API payroll_status payroll_update(payroll_db* db, const char* table, const char* key, const char* row_json,
                                          char** out_json);
PAYROLL_API payroll_status payroll_delete(payroll_db* db, const char* table, const char* key);

PAYROLL_API payroll_status payroll_profil(payroll_db* db, const char* nii, char** out_json);
/* input_json: periode, nii, sks_mgjr, pajak, pot_kop, arisan, pot_lain. */
PAYROLL_API payroll_status payroll_slip_create(payroll_db* db, const char* input_json, char** out_json);
PAYROLL_API payroll_status payroll_slip_preview(payroll_db* db, const char* input_json, char** out_json);

/* name: slip_gaji | rekap_periode | rekap_honor | daftar_dosen | daftar_master.
   periode and no_slip may be NULL when the report does not need them. */
PAYROLL_API payroll_status payroll_report(payroll_db* db, const char* name, const char* periode, const char* no_slip,
                                          payroll_format format, char** out_text);

PAYROLL_API payroll_status payroll_export_csv(payroll_db* db, const char* table, char** out_csv);
/* All-or-nothing across every file; tables are applied in dependency order. */
PAYROLL_API payroll_status payroll_import_csv(payroll_db* db, size_t count, const char* const* tables,
                                              const char* const* csv_texts);

/* Canonical store document (the persisted JSON). */
PAYROLL_API payroll_status payroll_document(payroll_db* db, char** out_json);
/* Machine-readable schema manifest of the seven tables. */
PAYROLL_API payroll_status payroll_schema(char** out_json);

/* HTTP service. port 0 picks a free port; the bound port is written to out_port. */
PAYROLL_API payroll_status payroll_server_start(payroll_db* db, const char* host, int port, payroll_server** out_server,
                                                int* out_port);
/* Blocks until payroll_server_stop is called from another thread. */
PAYROLL_API payroll_status payroll_server_wait(payroll_server* server);
PAYROLL_API void payroll_server_stop(payroll_server* server);
PAYROLL_API void payroll_server_free(payroll_server* server);

#ifdef __cplusplus
}
#endif

#endif /* PAYROLL_PAYROLL_H */
