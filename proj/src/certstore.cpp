#include "apg/certstore.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace apg {

namespace {

using nlohmann::json;

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%FT%TZ", &tm);
    return buf;
}

const std::set<std::string>& known_kinds() {
    static const std::set<std::string> kinds{"even", "odd", "unified",
                                             "witness-even", "witness-odd"};
    return kinds;
}

bool is_witness_kind(const std::string& kind) {
    return kind == "witness-even" || kind == "witness-odd";
}

struct ModeSpec {
    uint64_t min;
    uint64_t step;
};

ModeSpec mode_spec(RangeMode mode) {
    switch (mode) {
        case RangeMode::Even: return {4, 2};
        case RangeMode::Odd: return {5, 2};
        case RangeMode::Unified: return {3, 1};
        case RangeMode::WitnessEven:
        case RangeMode::WitnessOdd: return {2, 1};
    }
    throw std::logic_error("unknown mode");
}

} // namespace

AnyCertificate CertificateRecord::to_certificate() const {
    if (kind == "witness-even" || kind == "witness-odd") {
        WitnessVariant v = (kind == "witness-even") ? WitnessVariant::EvenPrimed
                                                    : WitnessVariant::OddPrimed;
        return WitnessCertificate{value, k, p, q, v, k_bound};
    }
    RepVariant v = (kind == "even")  ? RepVariant::Even
                   : (kind == "odd") ? RepVariant::Odd
                                     : RepVariant::Unified;
    return RepresentationCertificate{value, v, n, p, q};
}

CertificateRecord make_record(const AnyCertificate& cert,
                              const std::string& policy_fingerprint) {
    CertificateRecord rec;
    rec.policy = policy_fingerprint;
    rec.timestamp = now_iso8601();
    if (auto* r = std::get_if<RepresentationCertificate>(&cert)) {
        rec.kind = (r->variant == RepVariant::Even)  ? "even"
                   : (r->variant == RepVariant::Odd) ? "odd"
                                                     : "unified";
        rec.value = r->a;
        rec.n = r->n;
        rec.p = r->p;
        rec.q = r->q;
    } else {
        auto& w = std::get<WitnessCertificate>(cert);
        rec.kind = (w.variant == WitnessVariant::EvenPrimed) ? "witness-even"
                                                             : "witness-odd";
        rec.value = w.n;
        rec.n = w.n;
        rec.p = w.p;
        rec.q = w.q;
        rec.k = w.k;
        rec.k_bound = w.k_bound;
    }
    return rec;
}

std::string to_json_line(const CertificateRecord& rec, bool with_timestamp) {
    json j;
    j["schema_version"] = rec.schema_version;
    j["kind"] = rec.kind;
    if (is_witness_kind(rec.kind)) {
        j["n"] = rec.n;
        j["k"] = rec.k;
        j["k_bound"] = rec.k_bound;
    } else {
        j["a"] = rec.value;
        j["n"] = rec.n;
    }
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["policy"] = rec.policy;
    if (with_timestamp) j["ts"] = rec.timestamp;
    return j.dump();
}

CertificateRecord parse_record(const std::string& line) {
    json j = json::parse(line); // throws json::parse_error on corruption
    CertificateRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    if (rec.schema_version != kStoreSchemaVersion)
        throw std::runtime_error("unsupported schema_version " +
                                 std::to_string(rec.schema_version));
    rec.kind = j.at("kind").get<std::string>();
    if (!known_kinds().count(rec.kind))
        throw std::runtime_error("unknown record kind: " + rec.kind);

    std::set<std::string> allowed{"schema_version", "kind", "n", "p", "q",
                                  "policy", "ts"};
    if (is_witness_kind(rec.kind)) {
        allowed.insert("k");
        allowed.insert("k_bound");
        rec.k = j.at("k").get<uint64_t>();
        rec.k_bound = j.value("k_bound", uint64_t{0});
        rec.n = j.at("n").get<uint64_t>();
        rec.value = rec.n;
    } else {
        allowed.insert("a");
        rec.value = j.at("a").get<uint64_t>();
        rec.n = j.at("n").get<uint64_t>();
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error("unknown field at schema_version 1: " +
                                     it.key());
    rec.p = j.at("p").get<int64_t>();
    rec.q = j.at("q").get<int64_t>();
    rec.policy = j.value("policy", std::string{});
    rec.timestamp = j.value("ts", std::string{});
    return rec;
}

void append(const CertificateRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot open store for append: " + path);
    out << to_json_line(rec) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

uint64_t repair_store(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    if (data.empty() || data.back() == '\n') return 0;
    size_t cut = data.find_last_of('\n');
    size_t keep = (cut == std::string::npos) ? 0 : cut + 1;
    uint64_t removed = data.size() - keep;
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot truncate store: " + path);
    out.write(data.data(), static_cast<std::streamsize>(keep));
    return removed;
}

std::vector<CertificateRecord> load_store(const std::string& path) {
    repair_store(path);
    std::vector<CertificateRecord> records;
    std::ifstream in(path, std::ios::binary);
    if (!in) return records;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            records.push_back(parse_record(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": corrupt record: " + e.what());
        }
    }
    return records;
}

uint64_t resume_point(const std::string& path, RangeMode mode) {
    ModeSpec spec = mode_spec(mode);
    std::set<uint64_t> seen;
    std::string want = range_mode_name(mode);
    for (const auto& rec : load_store(path))
        if (rec.kind == want) seen.insert(rec.value);
    uint64_t last = spec.min - spec.step;
    for (uint64_t v = spec.min; seen.count(v); v += spec.step) last = v;
    return last;
}

std::string summarize(const std::string& path) {
    std::map<std::string, std::vector<CertificateRecord>> by_mode;
    for (const auto& rec : load_store(path)) by_mode[rec.kind].push_back(rec);

    std::ostringstream out;
    out << "mode,from,to,count,max_k,unresolved\n";
    for (auto& [mode, recs] : by_mode) {
        uint64_t lo = UINT64_MAX, hi = 0, max_k = 0;
        for (const auto& r : recs) {
            lo = std::min(lo, r.value);
            hi = std::max(hi, r.value);
            max_k = std::max(max_k, r.k);
        }
        // The store holds verified certificates only, so the unresolved
        // column is always empty here; verify_range reports unresolved
        // values on its own summary output.
        out << mode << ',' << lo << ',' << hi << ',' << recs.size() << ','
            << max_k << ",\n";
    }
    return out.str();
}

} // namespace apg
