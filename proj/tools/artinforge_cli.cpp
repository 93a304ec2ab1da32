// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "artinforge/artinforge.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Range {
  int lo = 0;
  int hi = 0;
};

// "6" or "2..6".
std::optional<Range> parse_range(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) return std::nullopt;
      return Range{v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) return std::nullopt;
    const int hi = std::stoi(b, &used);
    if (used != b.size() || hi < lo) return std::nullopt;
    return Range{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct Config {
  std::string n_text;  // empty: per-command default
  Range n{};
  std::string claims = "all";
  std::string order = "grevlex";
  std::string format = "text";
  std::string ideal = "I";
  std::string gens;
  int nvars = 0;
  std::string kind = "points";
  int k = 0;
  std::uint64_t pair_cap = 0;
  int jobs = 1;
  bool allow_large_n = false;
  bool timing = false;
};

af_format format_of(const Config& c) { return c.format == "json" ? AF_FORMAT_JSON : AF_FORMAT_TEXT; }

struct CString {
  char* p = nullptr;
  ~CString() { af_string_free(p); }
};

struct IdealHandle {
  af_ideal* p = nullptr;
  ~IdealHandle() { af_ideal_free(p); }
};

struct BasisHandle {
  af_groebner* p = nullptr;
  ~BasisHandle() { af_groebner_free(p); }
};

struct QuotientHandle {
  af_quotient* p = nullptr;
  ~QuotientHandle() { af_quotient_free(p); }
};

int report_error(af_status s) {
  std::cerr << "error (" << af_status_name(s) << "): " << af_last_error() << "\n";
  return s == AF_ERR_RESOURCE_LIMIT ? kExitResource : kExitFail;
}

bool check_n(const Config& c, int max_n) {
  const int cap = c.allow_large_n ? std::max(max_n, 8) : std::min(max_n, 7);
  if (c.n.lo < 2 || c.n.hi > cap) {
    std::cerr << "--n must lie in 2.." << cap << (cap < 8 ? " (8 needs --allow-large-n)" : "") << "\n";
    return false;
  }
  return true;
}

std::vector<std::string> selected_claims(const std::string& spec, bool& ok) {
  std::vector<std::string> all;
  for (std::size_t i = 0; i < af_claim_count(); ++i) all.emplace_back(af_claim_id(i));
  ok = true;
  if (spec == "all") return all;
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const std::string id = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (std::find(all.begin(), all.end(), id) == all.end()) {
      std::cerr << "unknown claim '" << id << "'\n";
      ok = false;
      return {};
    }
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  // Registry order, independent of the order on the command line.
  std::vector<std::string> ordered;
  for (const std::string& id : all)
    if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
  return ordered;
}

int run_verify(const Config& c, const std::vector<std::string>& claim_ids) {
  struct Job {
    std::string claim;
    int n;
    af_status status = AF_OK;
    af_report_status result = AF_REPORT_SKIPPED;
    std::string output;
    std::string error;
  };
  std::vector<Job> jobs;
  for (const std::string& id : claim_ids)
    for (int n = c.n.lo; n <= c.n.hi; ++n) jobs.push_back(Job{id, n, AF_OK, AF_REPORT_SKIPPED, {}, {}});

  af_verify_options options{c.pair_cap, c.allow_large_n ? 1 : 0, c.timing ? 1 : 0};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      Job& job = jobs[i];
      CString out;
      job.status = af_verify(job.claim.c_str(), job.n, &options, format_of(c), &out.p, &job.result);
      if (job.status == AF_OK) job.output = out.p;
      else job.error = af_last_error();
    }
  };
  const int threads = std::max(1, std::min<int>(c.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Jobs were created in key order, so printing in index order is sorted.
  int code = kExitPass;
  for (const Job& job : jobs) {
    if (job.status != AF_OK) {
      std::cerr << job.claim << " n=" << job.n << ": error (" << af_status_name(job.status) << "): " << job.error
                << "\n";
      code = job.status == AF_ERR_RESOURCE_LIMIT ? kExitResource : std::max(code, kExitFail);
      continue;
    }
    std::cout << job.output << "\n";
    if (job.result == AF_REPORT_FAIL && code == kExitPass) code = kExitFail;
  }
  return code;
}

int with_ideal(const Config& c, int n, IdealHandle& ideal) {
  af_status s = c.gens.empty() ? af_ideal_build(c.ideal.c_str(), n, &ideal.p)
                               : af_ideal_parse(c.gens.c_str(), c.nvars, nullptr, &ideal.p);
  return s == AF_OK ? kExitPass : report_error(s);
}

int run_groebner(const Config& c, int n) {
  IdealHandle ideal;
  if (int e = with_ideal(c, n, ideal)) return e;
  BasisHandle gb;
  if (af_status s = af_groebner_compute(ideal.p, c.order.c_str(), c.pair_cap, &gb.p)) return report_error(s);
  CString text;
  if (af_status s = af_groebner_to_string(gb.p, &text.p)) return report_error(s);
  if (c.format == "json") {
    std::string body = text.p;
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t pos; (pos = body.find('\n', start)) != std::string::npos; start = pos + 1)
      lines.push_back(body.substr(start, pos - start));
    std::cout << "{\"ideal\":\"" << (c.gens.empty() ? c.ideal : "custom") << "\",\"n\":" << n << ",\"order\":\""
              << c.order << "\",\"basis\":[";
    for (std::size_t i = 0; i < lines.size(); ++i) std::cout << (i ? "," : "") << "\"" << lines[i] << "\"";
    std::cout << "]}\n";
  } else {
    std::cout << text.p;
  }
  return kExitPass;
}

int make_quotient(const Config& c, int n, QuotientHandle& q) {
  IdealHandle ideal;
  if (int e = with_ideal(c, n, ideal)) return e;
  BasisHandle gb;
  if (af_status s = af_groebner_compute(ideal.p, c.order.c_str(), c.pair_cap, &gb.p)) return report_error(s);
  if (af_status s = af_quotient_new(gb.p, &q.p)) return report_error(s);
  return kExitPass;
}

int run_hilbert(const Config& c, int n) {
  QuotientHandle q;
  if (int e = make_quotient(c, n, q)) return e;
  CString text;
  if (af_status s = af_quotient_hilbert(q.p, &text.p)) return report_error(s);
  if (c.format == "json") {
    std::string body = text.p;
    for (char& ch : body)
      if (ch == ' ') ch = ',';
    std::cout << "{\"ideal\":\"" << (c.gens.empty() ? c.ideal : "custom") << "\",\"n\":" << n
              << ",\"hilbert\":[" << body << "]}\n";
  } else {
    std::cout << text.p << "\n";
  }
  return kExitPass;
}

int run_socle(const Config& c, int n) {
  QuotientHandle q;
  if (int e = make_quotient(c, n, q)) return e;
  std::size_t dim = 0;
  int gorenstein = 0;
  CString basis;
  if (af_status s = af_quotient_socle(q.p, &dim, &gorenstein, &basis.p)) return report_error(s);
  if (c.format == "json") {
    std::string body = basis.p;
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t pos; (pos = body.find('\n', start)) != std::string::npos; start = pos + 1)
      lines.push_back(body.substr(start, pos - start));
    std::cout << "{\"n\":" << n << ",\"socle_dimension\":" << dim << ",\"gorenstein\":"
              << (gorenstein ? "true" : "false") << ",\"basis\":[";
    for (std::size_t i = 0; i < lines.size(); ++i) std::cout << (i ? "," : "") << "\"" << lines[i] << "\"";
    std::cout << "]}\n";
  } else {
    std::cout << "socle dimension " << dim << (gorenstein ? " (Gorenstein)" : " (not Gorenstein)") << "\n"
              << basis.p;
  }
  return kExitPass;
}

int run_simple(const Config& c, int n, const std::string& command) {
  CString text;
  af_status s = AF_OK;
  int flag = 1;
  if (command == "character") s = af_character(c.kind.c_str(), n, c.k, format_of(c), &text.p);
  else if (command == "challenge") s = af_challenge(n, c.pair_cap, format_of(c), &text.p);
  else if (command == "points") s = af_points(n, format_of(c), &text.p, &flag);
  else if (command == "triangle") s = af_triangle(n, format_of(c), &text.p, &flag);
  if (s != AF_OK) return report_error(s);
  std::cout << text.p;
  if (!std::string(text.p).ends_with('\n')) std::cout << "\n";
  return flag ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gröbner, Hilbert series and character computations for a binomial ideal family"};
  app.require_subcommand(1);
  Config c;

  if (const char* env = std::getenv("ARTINFORGE_PAIR_CAP")) {
    try {
      c.pair_cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ARTINFORGE_PAIR_CAP is not a number\n";
      return kExitUsage;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n_text, "n or range A..B");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--pair-cap", c.pair_cap, "Buchberger pair cap (env ARTINFORGE_PAIR_CAP)");
    sub->add_flag("--allow-large-n", c.allow_large_n, "permit n = 8");
  };
  auto ideal_options = [&](CLI::App* sub) {
    sub->add_option("--ideal", c.ideal, "I, J, J_expected, K, L or Q")
        ->check(CLI::IsMember({"I", "J", "J_expected", "K", "L", "Q"}));
    sub->add_option("--gens", c.gens, "comma-separated generators instead of --ideal");
    sub->add_option("--nvars", c.nvars, "variable count for --gens");
    sub->add_option("--order", c.order, "term order")->check(CLI::IsMember({"grevlex", "lex", "deglex"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "run claim checks");
  common(verify);
  verify->add_option("--claims", c.claims, "comma-separated claim ids or all");
  verify->add_option("--jobs", c.jobs, "parallel jobs")->check(CLI::Range(1, 256));
  verify->add_flag("--timing", c.timing, "record wall-clock milliseconds");

  CLI::App* groebner = app.add_subcommand("groebner", "print a reduced Gröbner basis");
  common(groebner);
  ideal_options(groebner);
  CLI::App* hilbert = app.add_subcommand("hilbert", "print the Hilbert series coefficients");
  common(hilbert);
  ideal_options(hilbert);
  CLI::App* socle = app.add_subcommand("socle", "socle dimension and basis");
  common(socle);
  ideal_options(socle);

  CLI::App* character = app.add_subcommand("character", "print a class function");
  common(character);
  character->add_option("--kind", c.kind, "trivial, subset, powerset, half-powerset or points")
      ->check(CLI::IsMember({"trivial", "subset", "powerset", "half-powerset", "points"}));
  character->add_option("--k", c.k, "subset size for --kind subset");

  CLI::App* challenge = app.add_subcommand("challenge", "graded character of the homogeneous quotient");
  common(challenge);
  CLI::App* points = app.add_subcommand("points", "list and check the points of the zero set");
  common(points);
  CLI::App* triangle = app.add_subcommand("triangle", "rows of the symmetrised triangle with checks");
  common(triangle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (c.n_text.empty()) c.n_text = verify->parsed() || triangle->parsed() ? "2..6" : "3";
  const auto range = parse_range(c.n_text);
  if (!range) {
    std::cerr << "--n expects N or A..B, got '" << c.n_text << "'\n";
    return kExitUsage;
  }
  c.n = *range;

  if (verify->parsed()) {
    if (!check_n(c, 8)) return kExitUsage;
    bool ok = false;
    const auto ids = selected_claims(c.claims, ok);
    if (!ok) return kExitUsage;
    return run_verify(c, ids);
  }
  if (triangle->parsed()) {
    if (c.n.lo < 2 || c.n.hi > 64) {
      std::cerr << "--n must lie in 2..64 for triangle\n";
      return kExitUsage;
    }
  } else if (!c.gens.empty()) {
    if (c.nvars < 1 || c.nvars > 16) {
      std::cerr << "--gens needs --nvars in 1..16\n";
      return kExitUsage;
    }
    c.n = {c.nvars, c.nvars};
  } else if (!check_n(c, 8)) {
    return kExitUsage;
  }

  std::string command;
  for (CLI::App* sub : {groebner, hilbert, socle, character, challenge, points, triangle})
    if (sub->parsed()) command = sub->get_name();

  int code = kExitPass;
  for (int n = c.n.lo; n <= c.n.hi; ++n) {
    int r = kExitPass;
    if (command == "groebner") r = run_groebner(c, n);
    else if (command == "hilbert") r = run_hilbert(c, n);
    else if (command == "socle") r = run_socle(c, n);
    else r = run_simple(c, n, command);
    if (r == kExitResource) return r;
    code = std::max(code, r);
  }
  return code;
}
