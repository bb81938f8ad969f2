#include "cliffalg/cli/family_file.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "cliffalg/error.hpp"

namespace cliffalg::cli {
namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& what) {
  const auto mark = node.Mark();
  throw ParseError(what, mark.line + 1, mark.column + 1);
}

int read_count(const YAML::Node& root, const char* key) {
  const auto node = root[key];
  if (!node) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return node.as<int>();
  } catch (const YAML::Exception&) {
    fail_at(node, std::string("field '") + key + "' must be an integer");
  }
}

exactla::Rational read_entry(const YAML::Node& node) {
  if (!node.IsScalar()) fail_at(node, "matrix entry must be a number");
  try {
    return exactla::parse_rational(node.Scalar());
  } catch (const ParseError& e) {
    fail_at(node, "malformed rational '" + node.Scalar() + "'");
  }
}

clifford::QuadricFamily build(const YAML::Node& root, std::string label) {
  if (!root.IsMap()) throw ParseError("family file must be a mapping");
  const int n = read_count(root, "n");
  const int k = read_count(root, "k");
  if (root["label"]) label = root["label"].as<std::string>();
  const auto matrices = root["matrices"];
  if (!matrices) throw ParseError("missing field 'matrices'");
  if (!matrices.IsSequence()) fail_at(matrices, "'matrices' must be a list");
  if (static_cast<int>(matrices.size()) != k) {
    throw ValidationError("k = " + std::to_string(k) + " but " + std::to_string(matrices.size()) + " matrices given");
  }
  std::vector<clifford::Matrix> basis;
  for (std::size_t c = 0; c < matrices.size(); ++c) {
    const auto m = matrices[c];
    if (!m.IsSequence() || static_cast<int>(m.size()) != n) {
      throw ValidationError("matrix " + std::to_string(c) + " does not have n rows");
    }
    clifford::Matrix rows;
    for (const auto& row : m) {
      if (!row.IsSequence() || static_cast<int>(row.size()) != n) {
        throw ValidationError("matrix " + std::to_string(c) + " does not have n columns");
      }
      std::vector<exactla::Rational> entries;
      for (const auto& x : row) entries.push_back(read_entry(x));
      rows.push_back(std::move(entries));
    }
    basis.push_back(std::move(rows));
  }
  return clifford::QuadricFamily::create(n, std::move(basis), std::move(label));
}

}  // namespace

clifford::QuadricFamily parse_family_text(const std::string& text, const std::string& label) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  return build(root, label);
}

clifford::QuadricFamily parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_family_text(text.str(), path);
}

}  // namespace cliffalg::cli
