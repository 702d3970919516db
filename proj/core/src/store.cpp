#include "hcn/store.hpp"

#include <fcntl.h>
#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "hcn/version.hpp"

namespace hcn {

namespace {

constexpr const char* kJournalHeader = "# hcn-journal v";
constexpr const char* kCacheHeader = "# hcn-champions v";
constexpr const char* kCacheTrailer = "# crc32=";

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string crc_hex(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

// key=value fields separated by tabs, in a fixed order.
std::map<std::string, std::string> parse_fields(const std::string& line) {
  std::map<std::string, std::string> out;
  for (const std::string& field : split(line, '\t')) {
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw CorruptFileError("malformed field: " + field);
    out[field.substr(0, eq)] = field.substr(eq + 1);
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& fields, const std::string& key) {
  auto it = fields.find(key);
  if (it == fields.end()) throw CorruptFileError("missing field: " + key);
  return it->second;
}

std::uint64_t parse_u64(const std::string& text) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw CorruptFileError("bad integer: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw CorruptFileError("bad integer: " + text);
  }
}

BigInt parse_big(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw CorruptFileError("bad integer: " + text);
  return v;
}

VerdictState parse_state(const std::string& text) {
  if (text == "holds") return VerdictState::Holds;
  if (text == "fails") return VerdictState::Fails;
  if (text == "undecided") return VerdictState::Undecided;
  throw CorruptFileError("bad verdict: " + text);
}

std::string encode_breakpoint(const std::optional<Breakpoint>& bp) {
  if (!bp) return "none";
  return std::to_string(bp->prime) + ":" + std::to_string(bp->exponent) + ":" + encode_interval(bp->epsilon) + ":" +
         (bp->tied_with_next ? "1" : "0");
}

std::optional<Breakpoint> decode_breakpoint(const std::string& text) {
  if (text == "none") return std::nullopt;
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 6) throw CorruptFileError("bad breakpoint: " + text);
  Breakpoint bp{parse_u64(parts[0]), static_cast<std::uint32_t>(parse_u64(parts[1])),
                decode_interval(parts[2] + ":" + parts[3] + ":" + parts[4]), parts[5] == "1"};
  return bp;
}

std::string encode_observations(const std::vector<Observation>& obs) {
  if (obs.empty()) return "none";
  std::vector<std::string> parts;
  for (const auto& o : obs) parts.push_back(o.n.to_string() + "@" + encode_interval(o.value) + "@" + to_string(o.state));
  return join(parts, ';');
}

std::vector<Observation> decode_observations(const std::string& text) {
  std::vector<Observation> out;
  if (text == "none") return out;
  for (const std::string& item : split(text, ';')) {
    std::vector<std::string> parts = split(item, '@');
    if (parts.size() != 3) throw CorruptFileError("bad observation: " + item);
    try {
      out.push_back({FactoredNumber::parse(parts[0]), decode_interval(parts[1]), parse_state(parts[2])});
    } catch (const std::invalid_argument& e) {
      throw CorruptFileError(std::string("bad observation: ") + e.what());
    }
  }
  return out;
}

std::string now_iso8601() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreIoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw StoreIoError("read failed: " + path.string());
  return ss.str();
}

void write_all(int fd, std::string_view bytes, const std::filesystem::path& path) {
  while (!bytes.empty()) {
    ssize_t n = ::write(fd, bytes.data(), bytes.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw StoreIoError("write failed on " + path.string() + ": " + std::strerror(errno));
    }
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string encode_interval(const Interval& x) {
  return x.lo().to_exact_decimal() + ":" + x.hi().to_exact_decimal() + ":" + std::to_string(x.precision());
}

Interval decode_interval(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) throw CorruptFileError("bad interval: " + text);
  try {
    auto prec = static_cast<mpfr_prec_t>(parse_u64(parts[2]));
    if (prec < MPFR_PREC_MIN || prec > kPrecisionCap * 4) throw CorruptFileError("bad precision: " + parts[2]);
    // Endpoints are rounded outward, so a loader never narrows the enclosure.
    return Interval::from_decimal(parts[0], parts[1], prec);
  } catch (const std::invalid_argument& e) {
    throw CorruptFileError(std::string("bad interval: ") + e.what());
  }
}

std::string encode_record(const ChampionRecord& record) {
  std::vector<std::string> cutoffs;
  for (std::uint64_t c : record.x_cutoffs) cutoffs.push_back(std::to_string(c));
  std::vector<std::string> fields = {
      "n=" + record.n.to_string(),
      "pplus=" + std::to_string(record.largest_prime),
      "eps_lo=" + encode_breakpoint(record.eps_lo),
      "eps_hi=" + encode_breakpoint(record.eps_hi),
      "g=" + (record.g ? encode_interval(*record.g) : std::string("none")),
      "cutoffs=" + (cutoffs.empty() ? std::string("none") : join(cutoffs, ',')),
      std::string("tie=") + (record.tie ? "1" : "0"),
  };
  return join(fields, '\t');
}

ChampionRecord decode_record(const std::string& line, ChampionKind kind, const Rational& s) {
  auto fields = parse_fields(line);
  ChampionRecord rec;
  try {
    rec.n = FactoredNumber::parse(need(fields, "n"));
  } catch (const std::invalid_argument& e) {
    throw CorruptFileError(std::string("bad factorization: ") + e.what());
  }
  rec.kind = kind;
  rec.s = s;
  rec.largest_prime = parse_u64(need(fields, "pplus"));
  if (rec.largest_prime != rec.n.largest_prime()) throw CorruptFileError("pplus does not match factorization");
  rec.eps_lo = decode_breakpoint(need(fields, "eps_lo"));
  rec.eps_hi = decode_breakpoint(need(fields, "eps_hi"));
  const std::string& g = need(fields, "g");
  if (g != "none") rec.g = decode_interval(g);
  const std::string& cutoffs = need(fields, "cutoffs");
  if (cutoffs != "none") {
    for (const std::string& c : split(cutoffs, ',')) rec.x_cutoffs.push_back(parse_u64(c));
  }
  const std::string& tie = need(fields, "tie");
  if (tie != "0" && tie != "1") throw CorruptFileError("bad tie flag");
  rec.tie = tie == "1";
  return rec;
}

// ---------------------------------------------------------------------------
// journal

JournalEntry entry_from_report(const RangeCheckReport& report) {
  JournalEntry e;
  e.criterion = report.criterion;
  e.lo = report.lo;
  e.hi = report.hi;
  e.verdict = report.verdict.state;
  e.precision_used = report.verdict.precision_used;
  e.margin = report.verdict.margin;
  e.checked_count = report.checked_count;
  e.counterexamples = report.counterexamples;
  e.undecided = report.undecided;
  e.degenerate = report.degenerate;
  e.timestamp = now_iso8601();
  e.engine_version = kEngineVersion;
  return e;
}

RangeCheckReport report_from_entry(const JournalEntry& entry) {
  RangeCheckReport r;
  r.criterion = entry.criterion;
  r.lo = entry.lo;
  r.hi = entry.hi;
  r.verdict.state = entry.verdict;
  r.verdict.precision_used = entry.precision_used;
  r.verdict.margin = entry.margin;
  r.checked_count = entry.checked_count;
  r.counterexamples = entry.counterexamples;
  r.undecided = entry.undecided;
  r.degenerate = entry.degenerate;
  r.statement = criterion_statement(r.criterion, r.verdict.state);
  return r;
}

std::string encode_journal_entry(const JournalEntry& entry) {
  if (entry.criterion.empty() || entry.criterion.find_first_of("\t\n=") != std::string::npos) {
    throw std::invalid_argument("bad criterion name");
  }
  std::vector<std::string> fields = {
      "criterion=" + entry.criterion,
      "lo=" + entry.lo.get_str(),
      "hi=" + entry.hi.get_str(),
      "verdict=" + to_string(entry.verdict),
      "precision=" + std::to_string(entry.precision_used),
      "margin=" + (entry.margin ? encode_interval(*entry.margin) : std::string("none")),
      "checked=" + std::to_string(entry.checked_count),
      "counterexamples=" + encode_observations(entry.counterexamples),
      "undecided=" + encode_observations(entry.undecided),
      "degenerate=" + encode_observations(entry.degenerate),
      "timestamp=" + entry.timestamp,
      "version=" + entry.engine_version,
  };
  std::string body = join(fields, '\t');
  return body + "\tcrc=" + crc_hex(body);
}

JournalEntry decode_journal_entry(const std::string& line) {
  std::size_t cut = line.rfind("\tcrc=");
  if (cut == std::string::npos) throw CorruptFileError("journal line without checksum");
  std::string body = line.substr(0, cut);
  if (line.substr(cut + 5) != crc_hex(body)) throw CorruptFileError("journal checksum mismatch");
  auto fields = parse_fields(body);
  JournalEntry e;
  e.criterion = need(fields, "criterion");
  e.lo = parse_big(need(fields, "lo"));
  e.hi = parse_big(need(fields, "hi"));
  e.verdict = parse_state(need(fields, "verdict"));
  e.precision_used = static_cast<mpfr_prec_t>(parse_u64(need(fields, "precision")));
  const std::string& margin = need(fields, "margin");
  if (margin != "none") e.margin = decode_interval(margin);
  e.checked_count = parse_u64(need(fields, "checked"));
  e.counterexamples = decode_observations(need(fields, "counterexamples"));
  e.undecided = decode_observations(need(fields, "undecided"));
  e.degenerate = decode_observations(need(fields, "degenerate"));
  e.timestamp = need(fields, "timestamp");
  e.engine_version = need(fields, "version");
  return e;
}

Journal Journal::open(const std::filesystem::path& path) {
  Journal journal(path);
  const std::string header = std::string(kJournalHeader) + std::to_string(kJournalFormatVersion) + "\n";
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0) {
    int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd < 0) throw StoreIoError("cannot create journal " + path.string() + ": " + std::strerror(errno));
    write_all(fd, header, path);
    ::fsync(fd);
    ::close(fd);
    return journal;
  }
  std::string text = read_file(path);
  std::size_t first_nl = text.find('\n');
  if (first_nl == std::string::npos) {
    // Torn header from an interrupted creation.
    if (header.compare(0, text.size(), text) != 0) throw CorruptFileError("not a journal: " + path.string());
    std::filesystem::resize_file(path, 0);
    return open(path);
  }
  std::string head = text.substr(0, first_nl + 1);
  if (head.rfind(kJournalHeader, 0) != 0) throw CorruptFileError("not a journal: " + path.string());
  if (head != header) throw VersionMismatchError("unsupported journal version in " + path.string());
  std::size_t pos = first_nl + 1;
  std::size_t good_end = pos;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) break;  // torn tail
    journal.entries_.push_back(decode_journal_entry(text.substr(pos, nl - pos)));
    pos = nl + 1;
    good_end = pos;
  }
  if (good_end < text.size()) std::filesystem::resize_file(path, good_end);
  return journal;
}

void Journal::append(const JournalEntry& entry) {
  if (entry.hi < entry.lo) throw std::invalid_argument("journal entry with empty span");
  for (const auto& existing : entries_) {
    if (existing.criterion == entry.criterion && !(entry.hi < existing.lo || existing.hi < entry.lo)) {
      throw JournalConflictError("span [" + entry.lo.get_str() + ", " + entry.hi.get_str() + "] overlaps [" +
                                 existing.lo.get_str() + ", " + existing.hi.get_str() + "] for " + entry.criterion);
    }
  }
  std::string line = encode_journal_entry(entry) + "\n";
  int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND);
  if (fd < 0) throw StoreIoError("cannot open journal " + path_.string() + ": " + std::strerror(errno));
  try {
    write_all(fd, line, path_);
  } catch (...) {
    ::close(fd);
    throw;
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    throw StoreIoError("fsync failed on " + path_.string());
  }
  ::close(fd);
  entries_.push_back(entry);
}

std::vector<JournalEntry> Journal::entries_for(const std::string& criterion) const {
  std::vector<JournalEntry> out;
  for (const auto& e : entries_) {
    if (e.criterion == criterion) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const JournalEntry& a, const JournalEntry& b) { return a.lo < b.lo; });
  return out;
}

std::vector<std::pair<BigInt, BigInt>> Journal::coverage(const std::string& criterion) const {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& e : entries_for(criterion)) {
    if (!out.empty() && out.back().second + 1 >= e.lo) {
      if (e.hi > out.back().second) out.back().second = e.hi;
    } else {
      out.emplace_back(e.lo, e.hi);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// champion cache

std::string serialize_cache(const ChampionCache& cache) {
  std::string body;
  for (const auto& rec : cache.records) body += encode_record(rec) + "\n";
  std::string out = std::string(kCacheHeader) + std::to_string(kCacheFormatVersion) + " kind=" + to_string(cache.kind) +
                    " s=" + cache.s.get_str() + "\n";
  out += body;
  out += std::string(kCacheTrailer) + crc_hex(body) + " records=" + std::to_string(cache.records.size()) + "\n";
  return out;
}

ChampionCache parse_cache(const std::string& text) {
  if (text.empty() || text.back() != '\n') throw CorruptFileError("truncated cache file");
  std::vector<std::string> lines = split(text.substr(0, text.size() - 1), '\n');
  if (lines.size() < 2) throw CorruptFileError("truncated cache file");
  const std::string& header = lines.front();
  if (header.rfind(kCacheHeader, 0) != 0) throw CorruptFileError("not a champion cache");
  std::istringstream hs(header.substr(std::strlen(kCacheHeader)));
  int version = 0;
  std::string kind_field, s_field;
  hs >> version >> kind_field >> s_field;
  if (version != kCacheFormatVersion) throw VersionMismatchError("unsupported cache version " + std::to_string(version));
  if (kind_field.rfind("kind=", 0) != 0 || s_field.rfind("s=", 0) != 0) throw CorruptFileError("bad cache header");
  ChampionCache cache;
  try {
    cache.kind = champion_kind_from_string(kind_field.substr(5));
    cache.s = Rational(s_field.substr(2));
    cache.s.canonicalize();
  } catch (const std::invalid_argument& e) {
    throw CorruptFileError(std::string("bad cache header: ") + e.what());
  }
  const std::string& trailer = lines.back();
  if (trailer.rfind(kCacheTrailer, 0) != 0) throw CorruptFileError("missing cache trailer (truncated file)");
  std::istringstream ts(trailer.substr(std::strlen(kCacheTrailer)));
  std::string crc, records_field;
  ts >> crc >> records_field;
  std::size_t body_start = header.size() + 1;
  std::size_t body_end = text.size() - trailer.size() - 1;
  if (crc != crc_hex(std::string_view(text).substr(body_start, body_end - body_start))) {
    throw CorruptFileError("cache checksum mismatch");
  }
  if (records_field != "records=" + std::to_string(lines.size() - 2)) throw CorruptFileError("cache record count mismatch");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    cache.records.push_back(decode_record(lines[i], cache.kind, cache.s));
  }
  for (std::size_t i = 1; i < cache.records.size(); ++i) {
    if (cache.records[i - 1].n.value() >= cache.records[i].n.value()) {
      throw OrderingError("cache records are not strictly ascending at line " + std::to_string(i + 2));
    }
  }
  return cache;
}

void cache_save(const ChampionCache& cache, const std::filesystem::path& path) {
  for (std::size_t i = 1; i < cache.records.size(); ++i) {
    if (cache.records[i - 1].n.value() >= cache.records[i].n.value()) {
      throw OrderingError("refusing to save records that are not strictly ascending");
    }
  }
  std::string text = serialize_cache(cache);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) throw StoreIoError("cannot write " + tmp.string() + ": " + std::strerror(errno));
  try {
    write_all(fd, text, tmp);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::fsync(fd);
  ::close(fd);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StoreIoError("cannot rename into " + path.string() + ": " + ec.message());
}

ChampionCache cache_load(const std::filesystem::path& path) { return parse_cache(read_file(path)); }

}  // namespace hcn
