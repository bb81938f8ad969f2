#include "cliffalg/cli/report_io.hpp"

#include "json.hpp"

#include <sstream>

namespace cliffalg::cli {

std::string to_json(const Report& report) {
  using nlohmann::ordered_json;
  const auto& c = report.config;
  // threads is left out: it must not change the output
  ordered_json config{{"command", to_string(c.command)},
                      {"n", c.n},
                      {"degree_cap", c.degree_cap},
                      {"family_path", c.family_path ? ordered_json(*c.family_path) : ordered_json(nullptr)},
                      {"q", c.q ? ordered_json(exactla::to_string(*c.q)) : ordered_json(nullptr)},
                      {"output_format", to_string(c.output_format)},
                      {"seed", c.seed}};
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    records.push_back(ordered_json{{"name", r.name},
                                   {"status", to_string(r.status)},
                                   {"observed", r.observed},
                                   {"expected", r.expected},
                                   {"anchor", r.anchor}});
  }
  ordered_json doc{{"schema_version", kSchemaVersion},
                   {"command", to_string(c.command)},
                   {"config", config},
                   {"records", records},
                   {"elapsed_ms", report.elapsed_ms}};
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "name,status,expected,observed,anchor\n";
  for (const auto& r : report.records) {
    out << csv_field(r.name) << ',' << to_string(r.status) << ',' << csv_field(r.expected) << ','
        << csv_field(r.observed) << ',' << csv_field(r.anchor) << '\n';
  }
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  int counts[3] = {0, 0, 0};
  for (const auto& r : report.records) {
    ++counts[static_cast<int>(r.status)];
    out << '[' << to_string(r.status) << "] " << r.name << "\n    observed: " << r.observed
        << "\n    expected: " << r.expected << "\n    anchor:   " << r.anchor << '\n';
  }
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " inconclusive\n";
  return out.str();
}

std::string render(const Report& report) {
  switch (report.config.output_format) {
    case OutputFormat::json: return to_json(report);
    case OutputFormat::csv: return to_csv(report);
    case OutputFormat::text: return to_text(report);
  }
  return to_json(report);
}

}  // namespace cliffalg::cli
