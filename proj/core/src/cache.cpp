#include "klsym/lfunction/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "klsym/error.hpp"

namespace klsym {

namespace {

using nlohmann::json;

json decimal_array(const std::vector<mpz_class>& v) {
  json arr = json::array();
  for (const mpz_class& z : v) arr.push_back(z.get_str());
  return arr;
}

std::vector<mpz_class> parse_decimal_array(const json& arr) {
  std::vector<mpz_class> out;
  out.reserve(arr.size());
  for (const auto& el : arr) out.emplace_back(el.get<std::string>(), 10);
  return out;
}

// The three certificates that need no moment table; everything re-runnable
// from the entry alone must agree with what was recorded.
void verify_entry(const EulerFactorRecord& rec) {
  check(rec.Z == rec.R * rec.M, errc::cross_check_failed,
        "cached Z does not equal R * M");
  struct {
    const char* name;
    bool now;
  } redo[] = {
      {"degree", rec.Z.degree() == degree_Z(rec.k, rec.p)},
      {"trivial_divides", rec.Z.divisible_by(rec.R)},
      {"weil", weil_certify(rec.M, rec.k, rec.p).passed},
  };
  for (const auto& r : redo) {
    auto it = rec.checks.find(r.name);
    if (it != rec.checks.end() && it->second != r.now) {
      std::ostringstream os;
      os << "cached check '" << r.name << "' recorded " << (it->second ? "pass" : "fail")
         << " but re-runs as " << (r.now ? "pass" : "fail") << " for k=" << rec.k
         << " p=" << rec.p;
      fail(errc::cross_check_failed, os.str());
    }
  }
}

}  // namespace

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("KLSYM_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "klsym";
  return "klsym-cache";
}

std::filesystem::path cache_entry_path(const std::filesystem::path& dir, int k,
                                       std::uint64_t p) {
  std::ostringstream os;
  os << "k" << k << "_p" << p << ".json";
  return dir / os.str();
}

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cache_entry_json(const EulerFactorRecord& rec, const std::string& created_at) {
  json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["k"] = rec.k;
  j["p"] = rec.p;
  j["Z"] = decimal_array(rec.Z.coeffs());
  j["R"] = decimal_array(rec.R.coeffs());
  j["M"] = decimal_array(rec.M.coeffs());
  j["moments"] = decimal_array(rec.moments);
  j["checks"] = rec.checks;
  j["created_at"] = created_at;
  j["code_version"] = kCodeVersion;
  return j.dump(2);
}

void store_cached_record(const std::filesystem::path& dir, const EulerFactorRecord& rec) {
  static std::atomic<unsigned> seq{0};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(errc::io_error, "cannot create cache directory " + dir.string());

  std::filesystem::path target = cache_entry_path(dir, rec.k, rec.p);
  std::ostringstream tmpname;
  tmpname << target.filename().string() << ".tmp." << ::getpid() << "."
          << seq.fetch_add(1);
  std::filesystem::path tmp = dir / tmpname.str();
  {
    std::ofstream out(tmp);
    if (!out) fail(errc::io_error, "cannot open " + tmp.string() + " for writing");
    out << cache_entry_json(rec, iso8601_utc_now()) << "\n";
    if (!out.flush()) fail(errc::io_error, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(errc::io_error, "cannot move entry into place at " + target.string());
  }
}

std::optional<EulerFactorRecord> load_cached_record(const std::filesystem::path& dir,
                                                    int k, std::uint64_t p) {
  std::filesystem::path path = cache_entry_path(dir, k, p);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  EulerFactorRecord rec;
  try {
    json j = json::parse(in);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion)
      fail(errc::io_error, "unsupported cache schema in " + path.string());
    rec.k = j.at("k").get<int>();
    rec.p = j.at("p").get<std::uint64_t>();
    if (rec.k != k || rec.p != p)
      fail(errc::io_error, "entry " + path.string() + " holds a different (k, p)");
    rec.Z = IntPolynomial(parse_decimal_array(j.at("Z")));
    rec.R = IntPolynomial(parse_decimal_array(j.at("R")));
    rec.M = IntPolynomial(parse_decimal_array(j.at("M")));
    rec.moments = parse_decimal_array(j.at("moments"));
    for (const auto& [name, val] : j.at("checks").items())
      rec.checks[name] = val.get<bool>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::io_error, "cannot parse " + path.string() + ": " + e.what());
  }
  verify_entry(rec);
  return rec;
}

EulerFactorRecord cached_or_build(const std::filesystem::path& dir, int k,
                                  std::uint64_t p, MomentTable& table,
                                  const EulerFarmOptions& opts) {
  if (auto rec = load_cached_record(dir, k, p)) return *rec;
  EulerFactorRecord rec = build_euler_record(k, p, table, opts);
  store_cached_record(dir, rec);
  return rec;
}

}  // namespace klsym
