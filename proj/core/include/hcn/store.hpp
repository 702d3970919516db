#pragma once

// Persistence: append-only verification journals and champion cache files.
//
// Both formats are line-oriented text. Intervals are written as exact decimal
// expansions of their binary endpoints together with their precision, so a
// reloaded enclosure is identical to the saved one and re-serializes to the
// same bytes.
//
// Journal (one entry per line, CRC32 of the line body after the last tab):
//
//   # hcn-journal v1
//   criterion=robin<TAB>lo=5041<TAB>hi=30000<TAB>...<TAB>crc=1a2b3c4d
//
// Champion cache (header, one record per line, CRC32 trailer over the body):
//
//   # hcn-champions v1 kind=CA s=1
//   n=2^4*3^2*5*7<TAB>pplus=7<TAB>eps_lo=...<TAB>eps_hi=...<TAB>g=...<TAB>...
//   # crc32=1a2b3c4d records=8

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcn/champions.hpp"
#include "hcn/criteria.hpp"

namespace hcn {

inline constexpr int kJournalFormatVersion = 1;
inline constexpr int kCacheFormatVersion = 1;

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class StoreIoError : public StoreError {
 public:
  using StoreError::StoreError;
};
class CorruptFileError : public StoreError {
 public:
  using StoreError::StoreError;
};
class VersionMismatchError : public StoreError {
 public:
  using StoreError::StoreError;
};
class OrderingError : public StoreError {
 public:
  using StoreError::StoreError;
};
class JournalConflictError : public StoreError {
 public:
  using StoreError::StoreError;
};

// --- interval and record text forms -------------------------------------------

/// "lo:hi:precision" with exact decimal endpoints.
std::string encode_interval(const Interval& x);
Interval decode_interval(const std::string& text);

std::string encode_record(const ChampionRecord& record);
ChampionRecord decode_record(const std::string& line, ChampionKind kind, const Rational& s);

// --- journal -------------------------------------------------------------------

struct JournalEntry {
  std::string criterion;
  BigInt lo;
  BigInt hi;
  VerdictState verdict = VerdictState::Holds;
  mpfr_prec_t precision_used = 0;
  std::optional<Interval> margin;
  std::uint64_t checked_count = 0;
  std::vector<Observation> counterexamples;
  std::vector<Observation> undecided;
  std::vector<Observation> degenerate;
  std::string timestamp;
  std::string engine_version;
};

JournalEntry entry_from_report(const RangeCheckReport& report);
RangeCheckReport report_from_entry(const JournalEntry& entry);

class Journal {
 public:
  /// Opens or creates a journal. A torn final line (crash mid-append) is
  /// discarded and truncated away; damage anywhere else raises
  /// CorruptFileError.
  static Journal open(const std::filesystem::path& path);

  const std::filesystem::path& path() const { return path_; }
  const std::vector<JournalEntry>& entries() const { return entries_; }

  /// Durable append (single write + fsync). Rejects an entry whose span
  /// overlaps an existing span of the same criterion.
  void append(const JournalEntry& entry);

  /// Entries of one criterion sorted by span.
  std::vector<JournalEntry> entries_for(const std::string& criterion) const;

  /// Union of the spans of one criterion, merged where adjacent.
  std::vector<std::pair<BigInt, BigInt>> coverage(const std::string& criterion) const;

 private:
  explicit Journal(std::filesystem::path path) : path_(std::move(path)) {}

  std::filesystem::path path_;
  std::vector<JournalEntry> entries_;
};

std::string encode_journal_entry(const JournalEntry& entry);
JournalEntry decode_journal_entry(const std::string& line);

// --- champion cache ------------------------------------------------------------

struct ChampionCache {
  ChampionKind kind = ChampionKind::CA;
  Rational s{1};
  std::vector<ChampionRecord> records;
};

std::string serialize_cache(const ChampionCache& cache);
/// Validates version, checksum and strict ordering; never returns a partial
/// list.
ChampionCache parse_cache(const std::string& text);

/// Writes via a temporary file and rename, so readers never see a torn file.
void cache_save(const ChampionCache& cache, const std::filesystem::path& path);
ChampionCache cache_load(const std::filesystem::path& path);

}  // namespace hcn
