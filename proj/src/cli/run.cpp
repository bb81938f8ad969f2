#include "cliffalg/cli/run.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>

#include "cliffalg/cli/family_file.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/maximal/reports.hpp"
#include "cliffalg/minimal/algebra.hpp"
#include "cliffalg/minimal/reports.hpp"

namespace cliffalg::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::maximal: return "maximal";
    case Command::minimal: return "minimal";
    case Command::toric: return "toric";
    case Command::verify_all: return "verify-all";
  }
  return "verify-all";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

void validate(const RunConfig& config) {
  if (config.n < 1) throw InvalidInput("n must be at least 1");
  if (config.degree_cap < 1) throw InvalidInput("degree_cap must be at least 1");
  if (config.command == Command::minimal && !config.family_path) {
    throw InvalidInput("the minimal command needs a family file");
  }
}

bool Report::failed() const {
  return std::any_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::fail; });
}

namespace {

struct Job {
  std::string label;
  std::function<Suite()> body;
};

Record error_record(const std::string& what) {
  return Record{"run", Status::fail, what, "a completed suite", "plumbing"};
}

Suite run_job(const Job& job) {
  Suite out;
  try {
    out = job.body();
  } catch (const std::exception& e) {
    out = {error_record(e.what())};
  }
  for (auto& r : out) r.name = job.label + ": " + r.name;
  return out;
}

std::string q_label(const exactla::Rational& q) { return "q=" + exactla::to_string(q); }

std::vector<Job> jobs_for(const RunConfig& c) {
  std::vector<Job> jobs;
  const int D = c.degree_cap;
  switch (c.command) {
    case Command::maximal:
      jobs.push_back({"maximal n=" + std::to_string(c.n), [n = c.n, D] { return maximal::run_suite(n, D); }});
      break;
    case Command::minimal: {
      const std::string path = *c.family_path;
      jobs.push_back({"minimal " + path, [path, D, seed = c.seed] {
                        auto family = std::make_shared<const clifford::QuadricFamily>(parse_family_file(path));
                        return minimal::run_suite(family, D, seed);
                      }});
      break;
    }
    case Command::toric: {
      const minimal::ToricParameters p{c.n, c.q.value_or(exactla::Rational(-1))};
      jobs.push_back({"toric n=" + std::to_string(p.n) + " " + q_label(p.q), [p, D] { return minimal::toric_suite(p, D); }});
      break;
    }
    case Command::verify_all: {
      // fixed caps so that the full run stays at desk scale
      for (int n = 1; n <= 3; ++n) {
        jobs.push_back({"maximal n=" + std::to_string(n), [n] { return maximal::run_suite(n, 8); }});
      }
      jobs.push_back({"maximal n=4", [] { return maximal::run_suite(4, 4); }});
      for (int n = 2; n <= 4; ++n) {
        jobs.push_back({"minimal toric n=" + std::to_string(n),
                        [n] { return minimal::run_suite(clifford::toric_family(n), 8, 0); }});
      }
      for (std::uint64_t i = 0; i < 3; ++i) {
        const std::uint64_t seed = c.seed + i;
        jobs.push_back({"minimal random n=3 seed=" + std::to_string(seed),
                        [seed] { return minimal::run_suite(minimal::random_certified_family(3, seed), 8, seed); }});
      }
      for (int n = 2; n <= 3; ++n) {
        for (const char* q : {"1", "-1", "5", "-1/2"}) {
          const minimal::ToricParameters p{n, exactla::parse_rational(q)};
          jobs.push_back({"toric n=" + std::to_string(n) + " " + q_label(p.q), [p] { return minimal::toric_suite(p, 6); }});
        }
      }
      break;
    }
  }
  return jobs;
}

}  // namespace

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = config;
  if (config.threads > 0) omp_set_num_threads(config.threads);
  try {
    validate(config);
  } catch (const Error& e) {
    report.records.push_back(Record{"configuration", Status::fail, e.what(), "a valid configuration", "plumbing"});
    return report;
  }

  // suites run side by side; each writes its own slot, merged in declaration order
  const auto jobs = jobs_for(config);
  std::vector<Suite> results(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run_job(jobs[i]);
  for (auto& s : results) report.records.insert(report.records.end(), s.begin(), s.end());

  if (config.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace cliffalg::cli
