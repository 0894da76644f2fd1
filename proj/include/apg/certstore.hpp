#pragma once

#include "apg/conjectures.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apg {

inline constexpr int kStoreSchemaVersion = 1;

// One line of the append-only JSONL store.
struct CertificateRecord {
    int schema_version = kStoreSchemaVersion;
    std::string kind;   // even | odd | unified | witness-even | witness-odd
    uint64_t value = 0; // the target a, or n for witness records
    uint64_t n = 0;
    int64_t p = 0;
    int64_t q = 0;
    uint64_t k = 0;       // witness records only
    uint64_t k_bound = 0; // witness records only
    std::string policy;   // policy fingerprint
    std::string timestamp; // ISO-8601, informational only

    AnyCertificate to_certificate() const;
};

CertificateRecord make_record(const AnyCertificate& cert,
                              const std::string& policy_fingerprint);

std::string to_json_line(const CertificateRecord& rec,
                         bool with_timestamp = true);
CertificateRecord parse_record(const std::string& line);

// Appends one record as a single line.
void append(const CertificateRecord& rec, const std::string& path);

// Drops a partial trailing line left by a crash mid-append. Returns the
// number of bytes removed.
uint64_t repair_store(const std::string& path);

std::vector<CertificateRecord> load_store(const std::string& path);

// Largest contiguously-certified value for the mode, starting from the
// mode's domain minimum. Returns min-step when nothing is certified yet.
uint64_t resume_point(const std::string& path, RangeMode mode);

// Deterministic CSV, one row per mode present, modes sorted.
std::string summarize(const std::string& path);

} // namespace apg
